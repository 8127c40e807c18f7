//! Generator counts of the powers of `p` and `q`, the multiplicity of
//! `R_{r+1}`, Hodge dimensions, and the Hilbert function computed three ways.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::cone::count_e_points_y_degree;
use crate::error::{Error, Result};
use crate::generic_point::SubstitutionMap;
use crate::linalg::{det_exact, EchelonSpan};
use crate::poly::{Monomial, VariableSpace};
use crate::tableaux::{count_standard, row_strict_tableaux, Params};

/// The divisorial prime: `p` is generated by the `r`-minors of the first
/// `r` rows, `q` by the `r`-minors of the first `r` columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Ideal {
    P,
    Q,
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ideal::P => write!(f, "p"),
            Ideal::Q => write!(f, "q"),
        }
    }
}

impl std::str::FromStr for Ideal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p" => Ok(Ideal::P),
            "q" => Ok(Ideal::Q),
            _ => Err(Error::InvalidParameters(format!(
                "ideal must be 'p' or 'q', got '{s}'"
            ))),
        }
    }
}

/// `C(a, b)`, zero for `b < 0` or `b > a` (in particular for `a < 0`).
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for k in 0..b {
        acc = acc * BigInt::from(a - k) / BigInt::from(k + 1);
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BinomialRule {
    /// `C(t + n - j, n - i)`
    MuP { n: usize, t: usize },
    /// `C(t + m - j, m - i)`
    MuQ { m: usize, t: usize },
    /// `C(m + n - i - j, n - j)`
    Multiplicity { m: usize, n: usize },
}

/// An `r x r` matrix of binomial coefficients (1-based `i, j`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialMatrix {
    pub rule: BinomialRule,
    pub entries: Vec<Vec<BigInt>>,
}

impl BinomialMatrix {
    pub fn new(rule: BinomialRule, r: usize) -> Self {
        let entry = |i: i64, j: i64| match rule {
            BinomialRule::MuP { n, t } => binomial(t as i64 + n as i64 - j, n as i64 - i),
            BinomialRule::MuQ { m, t } => binomial(t as i64 + m as i64 - j, m as i64 - i),
            BinomialRule::Multiplicity { m, n } => {
                binomial(m as i64 + n as i64 - i - j, n as i64 - j)
            }
        };
        let entries = (1..=r as i64)
            .map(|i| (1..=r as i64).map(|j| entry(i, j)).collect())
            .collect();
        BinomialMatrix { rule, entries }
    }

    pub fn det(&self) -> BigInt {
        det_exact(&self.entries).expect("binomial matrices are square")
    }
}

fn check_power(params: &Params) -> Result<()> {
    params.require_proper()
}

/// `mu(p^t)` (resp. `mu(q^t)`) as a binomial determinant; `1` for `t = 0`.
pub fn mu_power(params: &Params, ideal: Ideal, t: usize) -> Result<BigInt> {
    check_power(params)?;
    if t == 0 {
        return Ok(BigInt::one());
    }
    let rule = match ideal {
        Ideal::P => BinomialRule::MuP { n: params.n, t },
        Ideal::Q => BinomialRule::MuQ { m: params.m, t },
    };
    Ok(BinomialMatrix::new(rule, params.r).det())
}

/// `mu(p^t)` by counting the standard products of exactly `t` generators:
/// tableaux with `t` rows of length `r`, rows strictly increasing, columns
/// weakly increasing, entries at most `n` (resp. `m`).
pub fn mu_power_direct(params: &Params, ideal: Ideal, t: usize) -> Result<BigInt> {
    check_power(params)?;
    if t == 0 {
        return Ok(BigInt::one());
    }
    let max_entry = match ideal {
        Ideal::P => params.n,
        Ideal::Q => params.m,
    };
    Ok(row_strict_tableaux(&vec![params.r; t], max_entry).len().into())
}

/// The multiplicity `e(R_{r+1}) = det[C(m + n - i - j, n - j)]`.
pub fn multiplicity(params: &Params) -> Result<BigInt> {
    params.require_proper()?;
    Ok(BinomialMatrix::new(
        BinomialRule::Multiplicity {
            m: params.m,
            n: params.n,
        },
        params.r,
    )
    .det())
}

/// `dim G(r, n)_t` by Hodge's formula.
pub fn hodge_dim(r: usize, n: usize, t: usize) -> Result<BigInt> {
    if r == 0 || r > n {
        return Err(Error::InvalidParameters(format!(
            "Hodge formula needs 1 <= r <= n, got r={r}, n={n}"
        )));
    }
    Ok(BinomialMatrix::new(BinomialRule::MuP { n, t }, r).det())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HilbertMethod {
    /// count standard bitableaux
    Bitableaux,
    /// count cone lattice points by `Y`-degree
    Lattice,
    /// exact rank of the images of all degree-`d` monomials
    Rank,
}

impl std::str::FromStr for HilbertMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bitableaux" => Ok(HilbertMethod::Bitableaux),
            "lattice" => Ok(HilbertMethod::Lattice),
            "rank" => Ok(HilbertMethod::Rank),
            _ => Err(Error::InvalidParameters(format!(
                "method must be bitableaux, lattice or rank, got '{s}'"
            ))),
        }
    }
}

/// All monomials of degree `d` in `space`, in descending term order.
pub fn monomials_of_degree(space: VariableSpace, d: u32) -> Vec<Monomial> {
    fn go(pos: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == exps.len() {
            exps[pos] = left;
            out.push(exps.clone());
            return;
        }
        for e in (0..=left).rev() {
            exps[pos] = e;
            go(pos + 1, left - e, exps, out);
        }
        exps[pos] = 0;
    }
    let nv = space.num_vars();
    let mut raw = Vec::new();
    if nv == 0 {
        if d == 0 {
            raw.push(Vec::new());
        }
    } else {
        go(0, d, &mut vec![0; nv], &mut raw);
    }
    let mut out: Vec<Monomial> = raw
        .into_iter()
        .map(|e| Monomial::from_exponents(space, e).expect("length matches"))
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// `dim_K (R_{r+1})_d`.
pub fn hilbert_function(params: &Params, d: usize, method: HilbertMethod) -> Result<u64> {
    match method {
        HilbertMethod::Bitableaux => Ok(count_standard(params, d)),
        HilbertMethod::Lattice => Ok(count_e_points_y_degree(params, d)? as u64),
        HilbertMethod::Rank => {
            let map = SubstitutionMap::new(*params);
            let mut span = EchelonSpan::new();
            for m in monomials_of_degree(params.x_space(), d as u32) {
                span.insert(&map.phi_monomial(&m));
            }
            Ok(span.rank() as u64)
        }
    }
}
