//! The generic point `X -> YZ` of the determinantal ring.
//!
//! `phi` substitutes `(YZ)_{ij} = sum_k y[i,k] z[k,j]` for `x[i,j]`. Its
//! kernel is `I_{r+1}`, and the initial monomial of the image of a standard
//! bitableau `(a_ij | b_ij)` is `prod_i prod_j y[a_ij, j] z[j, b_ij]`.

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Var, VariableSpace};
use crate::tableaux::{Bitableau, Minor, Params};

/// Which ring a bitableau is evaluated in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalSide {
    X,
    YZ,
}

/// The substitution `x[i,j] -> (YZ)_{ij}`, with the product entries
/// precomputed.
#[derive(Debug, Clone)]
pub struct SubstitutionMap {
    params: Params,
    x_space: VariableSpace,
    yz_space: VariableSpace,
    entries: Vec<Polynomial>,
}

impl SubstitutionMap {
    pub fn new(params: Params) -> Self {
        let x_space = params.x_space();
        let yz_space = params.yz_space();
        let mut entries = Vec::with_capacity(params.m * params.n);
        for i in 1..=params.m {
            for j in 1..=params.n {
                let terms = (1..=params.r).map(|k| {
                    let m = Monomial::from_vars(yz_space, [(Var::Y(i, k), 1), (Var::Z(k, j), 1)])
                        .expect("indices are in range");
                    (m, BigRational::one())
                });
                entries.push(Polynomial::from_terms(yz_space, terms).expect("same space"));
            }
        }
        SubstitutionMap {
            params,
            x_space,
            yz_space,
            entries,
        }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// `(YZ)_{ij}`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[(i - 1) * self.params.n + (j - 1)]
    }

    pub fn phi_monomial(&self, m: &Monomial) -> Polynomial {
        let mut out = Polynomial::one(self.yz_space);
        for (idx, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                out = &out * &self.entries[idx];
            }
        }
        out
    }

    pub fn phi(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.space() != self.x_space {
            return Err(Error::SpaceMismatch {
                left: self.x_space,
                right: f.space(),
            });
        }
        let mut out = Polynomial::zero(self.yz_space);
        for (m, c) in f.terms() {
            out.add_scaled(&self.phi_monomial(m), c);
        }
        Ok(out)
    }

    /// The minor `d` of `X` as an element of `K[X]`.
    pub fn minor_x(&self, d: &Minor) -> Result<Polynomial> {
        d.check_bounds(self.params.m, self.params.n)?;
        let t = d.size();
        let mut terms = Vec::new();
        for perm in (0..t).permutations(t) {
            let vars = (0..t).map(|i| (Var::X(d.rows()[i], d.cols()[perm[i]]), 1));
            let m = Monomial::from_vars(self.x_space, vars)?;
            terms.push((m, permutation_sign(&perm)));
        }
        Polynomial::from_terms(self.x_space, terms)
    }

    /// The minor `d` of the product matrix `YZ`, computed as a determinant
    /// of the precomputed entries.
    pub fn minor_yz(&self, d: &Minor) -> Result<Polynomial> {
        d.check_bounds(self.params.m, self.params.n)?;
        let t = d.size();
        let mut out = Polynomial::zero(self.yz_space);
        for perm in (0..t).permutations(t) {
            let mut prod = Polynomial::one(self.yz_space);
            for (&row, &k) in d.rows().iter().zip(&perm) {
                prod = &prod * self.entry(row, d.cols()[k]);
            }
            out.add_scaled(&prod, &permutation_sign(&perm));
        }
        Ok(out)
    }

    pub fn eval_bitableau(&self, s: &Bitableau, side: EvalSide) -> Result<Polynomial> {
        let space = match side {
            EvalSide::X => self.x_space,
            EvalSide::YZ => self.yz_space,
        };
        let mut out = Polynomial::one(space);
        for d in s.factors() {
            let value = match side {
                EvalSide::X => self.minor_x(d)?,
                EvalSide::YZ => self.minor_yz(d)?,
            };
            out = &out * &value;
        }
        Ok(out)
    }
}

fn permutation_sign(perm: &[usize]) -> BigRational {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

pub fn phi(f: &Polynomial, map: &SubstitutionMap) -> Result<Polynomial> {
    map.phi(f)
}

pub fn eval_bitableau(s: &Bitableau, side: EvalSide, map: &SubstitutionMap) -> Result<Polynomial> {
    map.eval_bitableau(s, side)
}

/// `prod_i prod_j y[a_ij, j] z[j, b_ij]` for a standard bitableau of `S_r`.
pub fn initial_monomial_closed_form(s: &Bitableau, params: &Params) -> Result<Monomial> {
    s.check_in_s_r(params)?;
    let space = params.yz_space();
    let vars = s.factors().iter().flat_map(|d| {
        d.rows()
            .iter()
            .zip(d.cols())
            .enumerate()
            .flat_map(|(j, (&a, &b))| [(Var::Y(a, j + 1), 1), (Var::Z(j + 1, b), 1)])
    });
    Monomial::from_vars(space, vars)
}

/// Recovers the standard bitableau whose closed-form initial monomial is
/// `m`. Column `j` of the left tableau lists the row indices `i` of the
/// factors `y[i,j]` with multiplicity, in non-decreasing order; the right
/// tableau is read off the `z[j,v]` likewise.
pub fn decode_standard(m: &Monomial, params: &Params) -> Result<Bitableau> {
    let space = params.yz_space();
    if m.space() != space {
        return Err(Error::SpaceMismatch {
            left: space,
            right: m.space(),
        });
    }
    let fail = || Error::NotDecodable(m.to_string());
    let mut left_cols: Vec<Vec<usize>> = Vec::with_capacity(params.r);
    let mut right_cols: Vec<Vec<usize>> = Vec::with_capacity(params.r);
    for j in 1..=params.r {
        let mut left = Vec::new();
        for i in 1..=params.m {
            let e = m.exponent(Var::Y(i, j))? as usize;
            left.extend(std::iter::repeat_n(i, e));
        }
        let mut right = Vec::new();
        for v in 1..=params.n {
            let e = m.exponent(Var::Z(j, v))? as usize;
            right.extend(std::iter::repeat_n(v, e));
        }
        if left.len() != right.len() {
            return Err(fail());
        }
        left_cols.push(left);
        right_cols.push(right);
    }
    if left_cols.windows(2).any(|w| w[0].len() < w[1].len()) {
        return Err(fail());
    }
    let rows = left_cols.first().map_or(0, Vec::len);
    let mut factors = Vec::with_capacity(rows);
    for k in 0..rows {
        let a: Vec<usize> = left_cols
            .iter()
            .take_while(|c| c.len() > k)
            .map(|c| c[k])
            .collect();
        let b: Vec<usize> = right_cols
            .iter()
            .take_while(|c| c.len() > k)
            .map(|c| c[k])
            .collect();
        factors.push(Minor::new(a, b).map_err(|_| fail())?);
    }
    let s = Bitableau::new(factors).map_err(|_| fail())?;
    if !s.is_standard() {
        return Err(Error::Internal(format!("decoded {s} is not standard")));
    }
    Ok(s)
}
