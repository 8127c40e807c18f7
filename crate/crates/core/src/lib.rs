//! Computations in determinantal rings `R_{r+1} = K[X]/I_{r+1}` through the
//! generic point `X -> YZ`.
//!
//! The crate covers exact polynomial arithmetic ([`poly`]), standard
//! bitableaux ([`tableaux`]), the generic point and closed-form initial
//! monomials ([`generic_point`]), straightening ([`straightening`]), the
//! initial semigroup and its cone ([`cone`]), generator and multiplicity
//! counts ([`counting`]), the Cohen-Macaulay/Ulrich classification of the
//! powers of the divisorial primes ([`classifier`]), and the SL-invariant and
//! ladder variants ([`extensions`]).

pub mod classifier;
pub mod cone;
pub mod counting;
pub mod error;
pub mod extensions;
pub mod generic_point;
mod json;
pub mod linalg;
pub mod poly;
pub mod straightening;
pub mod tableaux;

pub use cone::{
    cone_membership, conic_equality_check, generators_d, semigroup_vs_cone, ConeSystem,
    ConicReport, ExponentVector, SemigroupConeReport, Variant, Witness,
};
pub use counting::{
    binomial, hilbert_function, hodge_dim, mu_power, mu_power_direct, multiplicity,
    BinomialMatrix, BinomialRule, HilbertMethod, Ideal,
};
pub use classifier::{
    certify, certify_with_epsilon, classify, rank1_mcm_classes, Certificate, CertifiedVerdict, IdealPower, Verdict,
};
pub use error::{Error, Result};
pub use extensions::{
    generators_r_tilde, ladder_variable_set, verify_d_tilde, verify_ladder, LadderReport,
    TildeReport,
};
pub use linalg::det_exact;
pub use generic_point::{
    decode_standard, eval_bitableau, initial_monomial_closed_form, phi, EvalSide,
    SubstitutionMap,
};
pub use poly::{
    compare_monomials, leading_term, parse_polynomial, poly_arith, ArithOp, Monomial,
    Polynomial, TermOrder, Var, VariableSpace,
};
pub use tableaux::{
    count_standard, enumerate_standard, generators_gamma, is_standard, minor_leq, Bitableau,
    Minor, Params, Side,
};
