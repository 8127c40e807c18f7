//! Cohen-Macaulay and Ulrich powers of the divisorial primes `p` and `q`.
//!
//! `p^t` is Cohen-Macaulay exactly for `t <= m - r` and Ulrich exactly for
//! `t = m - r`; symmetrically for `q` with `n - r`. A [`Certificate`]
//! corroborates a verdict at desk scale: a conic-equality run on the
//! Cohen-Macaulay side, the strict inequality `mu > e` on the other.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::cone::{conic_equality_check, default_epsilon, ConicReport, Witness};
use crate::counting::{mu_power, multiplicity, Ideal};
use crate::error::Result;
use crate::json::bigint_number;
use crate::tableaux::Params;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub ideal: Ideal,
    pub t: usize,
    #[serde(rename = "cm")]
    pub is_cohen_macaulay: bool,
    #[serde(rename = "ulrich")]
    pub is_ulrich: bool,
    #[serde(serialize_with = "bigint_number")]
    pub mu: BigInt,
    #[serde(serialize_with = "bigint_number")]
    pub e: BigInt,
}

/// `m - r` for `p`, `n - r` for `q`.
pub fn cm_bound(params: &Params, ideal: Ideal) -> usize {
    match ideal {
        Ideal::P => params.m - params.r,
        Ideal::Q => params.n - params.r,
    }
}

pub fn classify(params: &Params, ideal: Ideal, t: usize) -> Result<Verdict> {
    params.require_proper()?;
    let bound = cm_bound(params, ideal);
    let mu = mu_power(params, ideal, t)?;
    let e = multiplicity(params)?;
    let is_cohen_macaulay = t <= bound;
    Ok(Verdict {
        ideal,
        t,
        is_cohen_macaulay,
        is_ulrich: t == bound,
        mu,
        e,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `t = 0`: the ring itself.
    UnitIdeal,
    /// The initial ideal of the power is conic; checked on the transposed
    /// parameters for `q`.
    Conic { transposed: bool, report: ConicReport },
    /// `mu(p^t) > mu(p^{m-r}) = e`, which rules out the Cohen-Macaulay
    /// property for a rank-one module.
    NotCohenMacaulay {
        #[serde(serialize_with = "bigint_number")]
        mu: BigInt,
        #[serde(serialize_with = "bigint_number")]
        e: BigInt,
    },
}

impl Certificate {
    /// The certificate supports the Cohen-Macaulay property.
    pub fn shows_cm(&self) -> bool {
        match self {
            Certificate::UnitIdeal => true,
            Certificate::Conic { report, .. } => report.witness_in_span && report.equal,
            Certificate::NotCohenMacaulay { .. } => false,
        }
    }

    /// The certificate is internally valid: the conic check matched, or
    /// the inequality is strict.
    pub fn holds(&self) -> bool {
        match self {
            Certificate::UnitIdeal => true,
            Certificate::Conic { .. } => self.shows_cm(),
            Certificate::NotCohenMacaulay { mu, e } => mu > e,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertifiedVerdict {
    pub verdict: Verdict,
    pub certificate: Certificate,
    pub certificate_holds: bool,
    /// the certificate points the same way as the verdict
    pub agrees: bool,
}

pub fn certify(
    params: &Params,
    ideal: Ideal,
    t: usize,
    degree_bound: i64,
) -> Result<CertifiedVerdict> {
    certify_with_epsilon(params, ideal, t, degree_bound, default_epsilon())
}

/// [`certify`] with an explicit `ε` for the conic witness.
pub fn certify_with_epsilon(
    params: &Params,
    ideal: Ideal,
    t: usize,
    degree_bound: i64,
    epsilon: BigRational,
) -> Result<CertifiedVerdict> {
    let verdict = classify(params, ideal, t)?;
    let certificate = if t == 0 {
        Certificate::UnitIdeal
    } else if verdict.is_cohen_macaulay {
        let (p, transposed) = match ideal {
            Ideal::P => (*params, false),
            Ideal::Q => (params.transpose(), true),
        };
        let witness = Witness::new(&p, t, epsilon)?;
        Certificate::Conic {
            transposed,
            report: conic_equality_check(&p, t, &witness, degree_bound)?,
        }
    } else {
        Certificate::NotCohenMacaulay {
            mu: verdict.mu.clone(),
            e: verdict.e.clone(),
        }
    };
    let certificate_holds = certificate.holds();
    let agrees = certificate_holds && certificate.shows_cm() == verdict.is_cohen_macaulay;
    Ok(CertifiedVerdict {
        verdict,
        certificate,
        certificate_holds,
        agrees,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdealPower {
    pub ideal: Ideal,
    pub t: usize,
}

/// Representatives `p^0, ..., p^{m-r}, q^1, ..., q^{n-r}` of the rank-one
/// maximal Cohen-Macaulay classes.
pub fn rank1_mcm_classes(params: &Params) -> Result<Vec<IdealPower>> {
    params.require_proper()?;
    let mut out: Vec<IdealPower> = (0..=params.m - params.r)
        .map(|t| IdealPower { ideal: Ideal::P, t })
        .collect();
    out.extend((1..=params.n - params.r).map(|t| IdealPower { ideal: Ideal::Q, t }));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(m: usize, n: usize, r: usize) -> Params {
        Params::new(m, n, r).unwrap()
    }

    #[test]
    fn classify_examples() {
        let p = params(3, 3, 2);
        let v = classify(&p, Ideal::P, 1).unwrap();
        assert!(v.is_cohen_macaulay && v.is_ulrich);
        assert_eq!((v.mu, v.e), (BigInt::from(3), BigInt::from(3)));
        let v = classify(&p, Ideal::P, 2).unwrap();
        assert!(!v.is_cohen_macaulay && !v.is_ulrich);
        assert_eq!((v.mu, v.e), (BigInt::from(6), BigInt::from(3)));
        let v = classify(&p, Ideal::P, 0).unwrap();
        assert!(v.is_cohen_macaulay && !v.is_ulrich);
        assert!(classify(&params(3, 3, 3), Ideal::P, 1).is_err());
    }

    #[test]
    fn verdict_json_shape() {
        let v = classify(&params(3, 3, 2), Ideal::P, 1).unwrap();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"ideal":"p","t":1,"cm":true,"ulrich":true,"mu":3,"e":3}"#
        );
    }

    #[test]
    fn certify_examples() {
        let c = certify(&params(3, 3, 2), Ideal::P, 1, 6).unwrap();
        assert!(c.agrees && matches!(c.certificate, Certificate::Conic { .. }));
        let c = certify(&params(3, 3, 2), Ideal::P, 2, 6).unwrap();
        assert!(c.agrees);
        assert_eq!(
            c.certificate,
            Certificate::NotCohenMacaulay {
                mu: 6.into(),
                e: 3.into()
            }
        );
        let c = certify(&params(2, 4, 1), Ideal::Q, 3, 6).unwrap();
        assert!(c.agrees);
        assert!(matches!(
            c.certificate,
            Certificate::Conic {
                transposed: true,
                ..
            }
        ));
    }

    #[test]
    fn mcm_classes() {
        let show = |p: Params| {
            rank1_mcm_classes(&p)
                .unwrap()
                .iter()
                .map(|c| format!("{}^{}", c.ideal, c.t))
                .collect::<Vec<_>>()
        };
        assert_eq!(show(params(3, 3, 2)), ["p^0", "p^1", "q^1"]);
        assert_eq!(show(params(4, 3, 2)), ["p^0", "p^1", "p^2", "q^1"]);
        assert_eq!(show(params(2, 2, 1)), ["p^0", "p^1", "q^1"]);
    }
}
