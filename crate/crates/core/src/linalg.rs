//! Fraction-free exact linear algebra: Bareiss determinants and a sparse
//! semi-echelon basis keyed by leading monomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};

/// Exact determinant of a square integer matrix by Bareiss elimination.
pub fn det_exact(matrix: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = matrix.len();
    if let Some(row) = matrix.iter().find(|row| row.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: row.len(),
        });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // exact by Sylvester's identity
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}

type SparseRow = BTreeMap<Monomial, BigInt>;

/// A basis of a space of polynomials in semi-echelon form: every stored row
/// is primitive with a positive leading coefficient and a leading monomial
/// distinct from all others. The leading monomials of the rows are then
/// exactly the monomials of the initial space of the span.
#[derive(Debug, Clone, Default)]
pub struct EchelonSpan {
    rows: BTreeMap<Monomial, SparseRow>,
}

impl EchelonSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The leading monomials, ascending in the term order.
    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.rows.keys()
    }

    pub fn contains_leading(&self, m: &Monomial) -> bool {
        self.rows.contains_key(m)
    }

    /// Adds `f` to the span. Returns `true` when `f` was independent of
    /// the rows already present.
    pub fn insert(&mut self, f: &Polynomial) -> bool {
        let den = f.denominator_lcm();
        let mut v: SparseRow = f
            .terms()
            .map(|(m, c)| (m.clone(), c.numer() * (&den / c.denom())))
            .collect();
        loop {
            let (lm, lc) = match v.last_key_value() {
                None => return false,
                Some((m, c)) => (m.clone(), c.clone()),
            };
            let Some(row) = self.rows.get(&lm) else {
                make_primitive(&mut v);
                self.rows.insert(lm, v);
                return true;
            };
            let rc = &row[&lm];
            let g = lc.gcd(rc);
            let a = rc / &g;
            let b = &lc / &g;
            // v <- a*v - b*row cancels the leading term
            for c in v.values_mut() {
                *c *= &a;
            }
            for (m, c) in row {
                let delta = c * &b;
                match v.get_mut(m) {
                    Some(existing) => {
                        *existing -= delta;
                        if existing.is_zero() {
                            v.remove(m);
                        }
                    }
                    None => {
                        v.insert(m.clone(), -delta);
                    }
                }
            }
            make_primitive(&mut v);
        }
    }
}

fn make_primitive(v: &mut SparseRow) {
    let Some(content) = v.values().fold(None::<BigInt>, |acc, c| {
        Some(match acc {
            None => c.abs(),
            Some(g) => g.gcd(c),
        })
    }) else {
        return;
    };
    let negative = v.last_key_value().is_some_and(|(_, c)| c.is_negative());
    let divisor = if negative { -content } else { content };
    if !divisor.is_one() {
        for c in v.values_mut() {
            *c = &*c / &divisor;
        }
    }
}

/// Exact rank of a family of polynomials.
pub fn rank_of<'a, I>(polys: I) -> usize
where
    I: IntoIterator<Item = &'a Polynomial>,
{
    let mut span = EchelonSpan::new();
    for f in polys {
        span.insert(f);
    }
    span.rank()
}
