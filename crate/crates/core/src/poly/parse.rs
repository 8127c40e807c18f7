use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Monomial, Polynomial, Var, VariableSpace};
use crate::error::{Error, Result};

/// Parses a polynomial in the text grammar
///
/// ```text
/// poly    := ['+'|'-'] term (('+'|'-') term)*
/// term    := coeff | coeff '*' factors | factors
/// factors := factor ('*' factor)*
/// factor  := var ('^' uint)?
/// var     := ('x'|'y'|'z') '[' uint ',' uint ']'
/// coeff   := uint | uint '/' uint
/// ```
///
/// Whitespace is ignored everywhere. Positions in errors are byte offsets
/// into `text`.
pub fn parse_polynomial(text: &str, space: VariableSpace) -> Result<Polynomial> {
    let mut p = Parser {
        text,
        bytes: text.as_bytes(),
        pos: 0,
        space,
    };
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    space: VariableSpace,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (m, mut c) = self.term()?;
            if negate {
                c = -c;
            }
            terms.push((m, c));
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                _ => break,
            }
            self.pos += 1;
        }
        Polynomial::from_terms(self.space, terms)
    }

    fn term(&mut self) -> Result<(Monomial, BigRational)> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.coeff()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    Ok((self.factors()?, coeff))
                } else {
                    Ok((Monomial::one(self.space), coeff))
                }
            }
            Some(b'x' | b'y' | b'z') => Ok((self.factors()?, BigRational::one())),
            Some(_) => Err(self.error("expected a coefficient or a variable")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn coeff(&mut self) -> Result<BigRational> {
        let num = self.uint()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let den = self.uint()?;
            if den.is_zero() {
                return Err(Error::Syntax {
                    pos: at,
                    msg: "zero denominator".into(),
                });
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an unsigned integer"));
        }
        Ok(self.text[start..self.pos]
            .parse()
            .expect("ascii digits parse as an integer"))
    }

    fn small_uint(&mut self) -> Result<usize> {
        let at = self.pos;
        let v = self.uint()?;
        usize::try_from(v).map_err(|_| Error::Syntax {
            pos: at,
            msg: "integer too large".into(),
        })
    }

    fn factors(&mut self) -> Result<Monomial> {
        let mut m = Monomial::one(self.space);
        loop {
            let (idx, e) = self.factor()?;
            m.exps[idx] += e;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok(m);
            }
        }
    }

    fn factor(&mut self) -> Result<(usize, u32)> {
        let name = match self.peek() {
            Some(c @ (b'x' | b'y' | b'z')) => c,
            _ => return Err(self.error("expected a variable")),
        };
        self.pos += 1;
        self.expect(b'[')?;
        let i = self.small_uint()?;
        self.expect(b',')?;
        let j = self.small_uint()?;
        self.expect(b']')?;
        let var = match name {
            b'x' => Var::X(i, j),
            b'y' => Var::Y(i, j),
            _ => Var::Z(i, j),
        };
        let idx = self.space.index_of(var)?;
        let e = if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let v = self.uint()?;
            u32::try_from(v).map_err(|_| Error::Syntax {
                pos: at,
                msg: "exponent too large".into(),
            })?
        } else {
            1
        };
        Ok((idx, e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x22() -> VariableSpace {
        VariableSpace::x(2, 2).unwrap()
    }

    #[test]
    fn two_minor() {
        let f = parse_polynomial("x[1,1]*x[2,2] - x[1,2]*x[2,1]", x22()).unwrap();
        assert_eq!(f.len(), 2);
        // printed in descending term order: x[1,2]*x[2,1] leads
        assert_eq!(f.to_string(), "-x[1,2]*x[2,1] + x[1,1]*x[2,2]");
    }

    #[test]
    fn whitespace_and_signs() {
        let f = parse_polynomial("  - 2 / 4 * x [ 1 , 2 ] ^ 2 +3", x22()).unwrap();
        assert_eq!(f.to_string(), "-1/2*x[1,2]^2 + 3");
        let g = parse_polynomial("+x[1,1]", x22()).unwrap();
        assert_eq!(g.to_string(), "x[1,1]");
    }

    #[test]
    fn constants_and_zero() {
        assert!(parse_polynomial("0", x22()).unwrap().is_zero());
        assert!(parse_polynomial("x[1,1] - x[1,1]", x22()).unwrap().is_zero());
        assert_eq!(parse_polynomial("5/10", x22()).unwrap().to_string(), "1/2");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_polynomial("x[1,1] + ", x22()) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 9),
            other => panic!("unexpected {other:?}"),
        }
        match parse_polynomial("x[1 1]", x22()) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_polynomial("1/0*x[1,1]", x22()),
            Err(Error::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_polynomial("x[1,1] x[1,2]", x22()),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(parse_polynomial("", x22()), Err(Error::Syntax { .. })));
    }

    #[test]
    fn out_of_range_and_foreign_variables() {
        assert!(matches!(
            parse_polynomial("x[3,1]", x22()),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            parse_polynomial("x[0,1]", x22()),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            parse_polynomial("y[1,1]", x22()),
            Err(Error::IndexOutOfRange { .. })
        ));
        let yz = VariableSpace::yz(2, 1, 3).unwrap();
        assert!(parse_polynomial("y[2,1]*z[1,3]", yz).is_ok());
        assert!(matches!(
            parse_polynomial("z[2,1]", yz),
            Err(Error::IndexOutOfRange { .. })
        ));
    }
}
