//! Straightening through the generic point.
//!
//! To write `f` as a combination of standard bitableaux modulo `I_{r+1}`,
//! map it to `K[Y,Z]`, read off the leading term `λ·M`, decode `M` into the
//! unique standard bitableau `Σ` with initial monomial `M`, subtract
//! `λ·Σ` and repeat. Every `φ(Σ)` is monic in its initial monomial, so the
//! leading monomial strictly drops in each step.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generic_point::{decode_standard, initial_monomial_closed_form, SubstitutionMap};
use crate::poly::{fmt_rational, Monomial, Polynomial};
use crate::tableaux::{Bitableau, Minor, Params};

/// `Σ λ_i Σ_i` with distinct standard bitableaux, ordered by descending
/// initial monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardCombination {
    terms: Vec<(BigRational, Bitableau)>,
}

impl StandardCombination {
    pub fn terms(&self) -> &[(BigRational, Bitableau)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// The combination evaluated in `K[X]`.
    pub fn to_polynomial(&self, map: &SubstitutionMap) -> Result<Polynomial> {
        let mut out = Polynomial::zero(map.params().x_space());
        for (c, s) in &self.terms {
            out.add_scaled(&map.eval_bitableau(s, crate::EvalSide::X)?, c);
        }
        Ok(out)
    }

    /// Formal sum of two combinations (same parameters).
    pub fn merge(&self, other: &StandardCombination, params: &Params) -> Result<Self> {
        let mut acc: HashMap<Bitableau, BigRational> = HashMap::new();
        for (c, s) in self.terms.iter().chain(&other.terms) {
            *acc.entry(s.clone()).or_insert_with(BigRational::zero) += c;
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(s, c)| (c, s))
            .collect();
        sort_terms(terms, params)
    }
}

fn sort_terms(
    terms: Vec<(BigRational, Bitableau)>,
    params: &Params,
) -> Result<StandardCombination> {
    let mut keyed: Vec<(Monomial, BigRational, Bitableau)> = terms
        .into_iter()
        .map(|(c, s)| Ok((initial_monomial_closed_form(&s, params)?, c, s)))
        .collect::<Result<_>>()?;
    keyed.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(StandardCombination {
        terms: keyed.into_iter().map(|(_, c, s)| (c, s)).collect(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CombinationTerm {
    pub coefficient: String,
    pub bitableau: Bitableau,
}

impl Serialize for StandardCombination {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|(c, b)| CombinationTerm {
            coefficient: fmt_rational(c),
            bitableau: b.clone(),
        }))
    }
}

/// A straightening run: the combination and the number of reduction steps.
#[derive(Debug, Clone)]
pub struct Straightened {
    pub combination: StandardCombination,
    pub iterations: usize,
}

/// Straightens `f` modulo `I_{r+1}` with a caller-supplied substitution map
/// (reused across calls to share the cached minors).
pub fn straighten_with(f: &Polynomial, map: &SubstitutionMap) -> Result<Straightened> {
    let params = *map.params();
    if f.space() != params.x_space() {
        return Err(Error::SpaceMismatch {
            left: params.x_space(),
            right: f.space(),
        });
    }
    let mut minors: HashMap<Minor, Polynomial> = HashMap::new();
    let mut terms = Vec::new();
    let mut iterations = 0;
    for component in f.homogeneous_components().values() {
        let mut image = map.phi(component)?;
        while let Some(lm) = image.leading_monomial().cloned() {
            iterations += 1;
            let lc = image.coefficient(&lm);
            let sigma = decode_standard(&lm, &params).map_err(|e| {
                Error::Internal(format!("leading monomial {lm} of an image did not decode: {e}"))
            })?;
            let mut value = Polynomial::one(params.yz_space());
            for d in sigma.factors() {
                if !minors.contains_key(d) {
                    minors.insert(d.clone(), map.minor_yz(d)?);
                }
                value = &value * &minors[d];
            }
            if value.leading_term()? != (lm.clone(), BigRational::one()) {
                return Err(Error::Internal(format!(
                    "{sigma} is not monic with initial monomial {lm}"
                )));
            }
            image.add_scaled(&value, &-lc.clone());
            terms.push((lc, sigma));
        }
    }
    Ok(Straightened {
        combination: sort_terms(terms, &params)?,
        iterations,
    })
}

/// Writes `f` as a combination of standard bitableaux of `S_r`, congruent
/// to `f` modulo `I_{r+1}`.
pub fn straighten(f: &Polynomial, params: &Params) -> Result<StandardCombination> {
    Ok(straighten_with(f, &SubstitutionMap::new(*params))?.combination)
}

/// `f ∈ I_{r+1}`, decided by `φ(f) = 0`.
pub fn is_in_ideal(f: &Polynomial, params: &Params) -> Result<bool> {
    Ok(SubstitutionMap::new(*params).phi(f)?.is_zero())
}
