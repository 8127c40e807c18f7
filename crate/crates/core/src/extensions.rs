//! The SL-invariant ring `R~_{r+1} = K[YZ, r-minors of Y, r-minors of Z]`
//! with its initial algebra, and the initial ideals of the ladder-type
//! ideals `I(X; δ)`.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::cone::{
    generators_d_tilde, semigroup_vs_cone, ConeSystem, SemigroupConeReport, Variant,
};
use crate::counting::monomials_of_degree;
use crate::error::{Error, Result};
use crate::generic_point::{initial_monomial_closed_form, SubstitutionMap};
use crate::linalg::EchelonSpan;
use crate::poly::{Monomial, Polynomial, Var};
use crate::tableaux::{enumerate_standard, minor_leq, Minor, Params};

fn sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Determinant of the square matrix of variables `var(i, j)`.
fn det_of_vars(params: &Params, size: usize, var: impl Fn(usize, usize) -> Var) -> Polynomial {
    let space = params.yz_space();
    let terms = (0..size).permutations(size).map(|perm| {
        let m = Monomial::from_vars(space, (0..size).map(|i| (var(i, perm[i]), 1)))
            .expect("variables in range");
        (m, BigRational::from_integer(sign(&perm).into()))
    });
    Polynomial::from_terms(space, terms).expect("same space")
}

/// The maximal minor of `Y` on rows `rows` (all `r` columns).
pub fn y_minor(params: &Params, rows: &[usize]) -> Polynomial {
    det_of_vars(params, params.r, |i, j| Var::Y(rows[i], j + 1))
}

/// The maximal minor of `Z` on columns `cols` (all `r` rows).
pub fn z_minor(params: &Params, cols: &[usize]) -> Polynomial {
    det_of_vars(params, params.r, |i, j| Var::Z(i + 1, cols[j]))
}

/// The entries of `YZ`, the `r`-minors of `Y` and the `r`-minors of `Z`.
pub fn generators_r_tilde(params: &Params) -> Vec<Polynomial> {
    let map = SubstitutionMap::new(*params);
    let mut out: Vec<Polynomial> = (1..=params.m)
        .flat_map(|i| (1..=params.n).map(move |j| (i, j)))
        .map(|(i, j)| map.entry(i, j).clone())
        .collect();
    out.extend((1..=params.m).combinations(params.r).map(|a| y_minor(params, &a)));
    out.extend((1..=params.n).combinations(params.r).map(|b| z_minor(params, &b)));
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BidegreeCount {
    pub y_degree: usize,
    pub z_degree: usize,
    pub lattice: usize,
    pub basis: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TildeReport {
    pub params: Params,
    pub degree_bound: i64,
    /// leading terms of the `t`-minors of `YZ` (`t < r`) and of the maximal
    /// minors of `Y` and `Z` are monic and form the three generator families
    pub leading_terms_match: bool,
    pub semigroup: SemigroupConeReport,
    pub bidegree_counts: Vec<BidegreeCount>,
    pub bidegree_counts_match: bool,
    /// equations of the `E` system missing from the `Ẽ` system
    pub dropped_equations: Vec<String>,
    pub structure_ok: bool,
}

impl TildeReport {
    pub fn passed(&self) -> bool {
        self.leading_terms_match
            && self.semigroup.passed()
            && self.bidegree_counts_match
            && self.structure_ok
    }
}

/// Number of basis elements `[a^1]_Y..[a^k]_Y Σ` (or the `Z` analogue) of
/// bidegree `(d1, d2)`. Multiplying by `k` copies of the leading `r`-minor
/// of the other matrix turns them into the standard bitableaux of degree
/// `max(d1, d2)` whose first `k` factors are `[a|1..r]` (resp. `[1..r|b]`).
fn basis_count(params: &Params, d1: usize, d2: usize) -> usize {
    let r = params.r;
    let (hi, lo) = (d1.max(d2), d1.min(d2));
    if (hi - lo) % r != 0 {
        return 0;
    }
    let k = (hi - lo) / r;
    let head: Vec<usize> = (1..=r).collect();
    enumerate_standard(params, hi)
        .iter()
        .filter(|s| {
            s.factors().len() >= k
                && s.factors()[..k].iter().all(|f| {
                    f.size() == r && if d1 >= d2 { f.cols() == head } else { f.rows() == head }
                })
        })
        .count()
}

pub fn verify_d_tilde(params: &Params, degree_bound: i64) -> Result<TildeReport> {
    if degree_bound < 1 {
        return Err(Error::InvalidParameters(
            "degree bound must be at least 1".into(),
        ));
    }
    let p = params;
    let map = SubstitutionMap::new(*p);
    let mut leads = BTreeSet::new();
    let mut monic = true;
    let mut record = |f: &Polynomial| -> Result<()> {
        let (m, c) = f.leading_term()?;
        monic &= c.is_one();
        leads.insert(m);
        Ok(())
    };
    for t in 1..p.r {
        for d in Minor::all_of_size(p.m, p.n, t) {
            record(&map.minor_yz(&d)?)?;
        }
    }
    for a in (1..=p.m).combinations(p.r) {
        record(&y_minor(p, &a))?;
    }
    for b in (1..=p.n).combinations(p.r) {
        record(&z_minor(p, &b))?;
    }
    let families: BTreeSet<Monomial> = generators_d_tilde(p).into_iter().collect();
    let leading_terms_match = monic && leads == families;

    let semigroup = semigroup_vs_cone(p, Variant::ETilde, degree_bound)?;

    let system = ConeSystem::new(*p, Variant::ETilde);
    let mut lattice: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for v in system.lattice_points(degree_bound)? {
        *lattice
            .entry((v.y_degree() as usize, v.z_degree() as usize))
            .or_default() += 1;
    }
    let mut bidegree_counts = Vec::new();
    for total in 0..=degree_bound as usize {
        for d1 in (0..=total).rev() {
            let d2 = total - d1;
            bidegree_counts.push(BidegreeCount {
                y_degree: d1,
                z_degree: d2,
                lattice: lattice.get(&(d1, d2)).copied().unwrap_or(0),
                basis: basis_count(p, d1, d2),
            });
        }
    }
    let bidegree_counts_match = bidegree_counts.iter().all(|c| c.lattice == c.basis);

    let e = ConeSystem::new(*p, Variant::E);
    let dropped_equations: Vec<String> = e
        .constraints()
        .iter()
        .filter(|c| !system.constraints().contains(c))
        .map(|c| c.label.clone())
        .collect();
    let structure_ok = dropped_equations == [format!("c{} = 0", p.r)]
        && system.constraints().iter().all(|c| e.constraints().contains(c));

    Ok(TildeReport {
        params: *p,
        degree_bound,
        leading_terms_match,
        semigroup,
        bidegree_counts,
        bidegree_counts_match,
        dropped_equations,
        structure_ok,
    })
}

fn require_full_rank(params: &Params) -> Result<()> {
    if params.is_full_rank() {
        Ok(())
    } else {
        Err(Error::InvalidParameters(format!(
            "ladder checks need r = min(m, n), got {params}"
        )))
    }
}

/// The candidate generating variables `V(δ)` of `in(I(X; δ))` inside the
/// initial algebra of `K[X]`, for `δ = [a_1..a_t | b_1..b_t]`:
/// `y[c,i]` with `c < a_i`, `z[i,d]` with `d < b_i` (`i <= t`), and every
/// `y[c,t+1]` when `t < r`.
pub fn ladder_variable_set(params: &Params, delta: &Minor) -> Result<BTreeSet<Var>> {
    require_full_rank(params)?;
    delta.check_bounds(params.m, params.n)?;
    let t = delta.size();
    let mut out = BTreeSet::new();
    for i in 1..=t {
        out.extend((1..delta.rows()[i - 1]).map(|c| Var::Y(c, i)));
        out.extend((1..delta.cols()[i - 1]).map(|d| Var::Z(i, d)));
    }
    if t < params.r {
        out.extend((1..=params.m).map(|c| Var::Y(c, t + 1)));
    }
    Ok(out)
}

/// The minors `γ` with `δ ⪯ γ` false: generators of `I(X; δ)`.
pub fn ladder_generators(params: &Params, delta: &Minor) -> Vec<Minor> {
    Minor::all(params.m, params.n)
        .into_iter()
        .filter(|g| !minor_leq(delta, g))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LadderDegree {
    pub degree: usize,
    /// monomials of the initial algebra in this degree
    pub initial_algebra: usize,
    /// dimension of the initial space of the ideal
    pub initial_space: usize,
    /// initial-algebra monomials divisible by a variable of `V(δ)`
    pub divisible: usize,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LadderMismatch {
    pub degree: usize,
    pub monomial: String,
    pub in_initial_space: bool,
    pub divisible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeViolation {
    pub left: String,
    pub right: String,
    pub product_in_ideal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LadderReport {
    pub params: Params,
    pub delta: Minor,
    pub variables: Vec<String>,
    pub ideal_generators: Vec<Minor>,
    pub degree_bound: usize,
    pub per_degree: Vec<LadderDegree>,
    /// (i) the initial space lies in the initial algebra
    pub initial_in_algebra: bool,
    /// (ii) the initial space is spanned by the `V(δ)`-divisible monomials
    pub matches_variable_set: bool,
    pub first_mismatch: Option<LadderMismatch>,
    /// (iii) `MN ∈ J ⇔ M ∈ J or N ∈ J`
    pub prime: bool,
    pub prime_violation: Option<PrimeViolation>,
}

impl LadderReport {
    pub fn passed(&self) -> bool {
        self.initial_in_algebra && self.matches_variable_set && self.prime
    }
}

/// Compares the initial ideal of `I(X; δ)`, computed degree by degree by
/// exact elimination, with the monomials divisible by `V(δ)`, and tests
/// primality of the computed initial ideal on products of low degree.
pub fn verify_ladder(params: &Params, delta: &Minor, degree_bound: usize) -> Result<LadderReport> {
    let vars = ladder_variable_set(params, delta)?;
    let map = SubstitutionMap::new(*params);
    let gens = ladder_generators(params, delta);
    let gen_images: Vec<(usize, Polynomial)> = gens
        .iter()
        .map(|g| Ok((g.size(), map.minor_yz(g)?)))
        .collect::<Result<_>>()?;

    let divisible = |m: &Monomial| vars.iter().any(|&v| m.exponent(v).unwrap_or(0) > 0);
    let mut algebra: Vec<BTreeSet<Monomial>> = Vec::new();
    let mut ideal: Vec<BTreeSet<Monomial>> = Vec::new();
    let mut per_degree = Vec::new();
    let mut initial_in_algebra = true;
    let mut first_mismatch = None;
    for d in 0..=degree_bound {
        let alg: BTreeSet<Monomial> = enumerate_standard(params, d)
            .iter()
            .map(|s| initial_monomial_closed_form(s, params))
            .collect::<Result<_>>()?;
        let mut span = EchelonSpan::new();
        for (size, g) in &gen_images {
            if *size > d {
                continue;
            }
            for m in monomials_of_degree(params.x_space(), (d - size) as u32) {
                span.insert(&(g * &map.phi_monomial(&m)));
            }
        }
        let computed: BTreeSet<Monomial> = span.leading_monomials().cloned().collect();
        let expected: BTreeSet<Monomial> = alg.iter().filter(|m| divisible(m)).cloned().collect();
        initial_in_algebra &= computed.is_subset(&alg);
        if first_mismatch.is_none() {
            first_mismatch = computed
                .symmetric_difference(&expected)
                .max()
                .map(|m| LadderMismatch {
                    degree: d,
                    monomial: m.to_string(),
                    in_initial_space: computed.contains(m),
                    divisible: divisible(m),
                });
        }
        per_degree.push(LadderDegree {
            degree: d,
            initial_algebra: alg.len(),
            initial_space: computed.len(),
            divisible: expected.len(),
            matches: computed == expected,
        });
        algebra.push(alg);
        ideal.push(computed);
    }

    let mut prime_violation = None;
    'outer: for d1 in 0..=degree_bound {
        for d2 in d1..=degree_bound - d1 {
            for a in &algebra[d1] {
                for b in &algebra[d2] {
                    let product = a * b;
                    let in_product = ideal[d1 + d2].contains(&product);
                    let in_factor = ideal[d1].contains(a) || ideal[d2].contains(b);
                    if in_product != in_factor {
                        prime_violation = Some(PrimeViolation {
                            left: a.to_string(),
                            right: b.to_string(),
                            product_in_ideal: in_product,
                        });
                        break 'outer;
                    }
                }
            }
        }
    }

    Ok(LadderReport {
        params: *params,
        delta: delta.clone(),
        variables: vars.iter().map(Var::to_string).collect(),
        ideal_generators: gens,
        degree_bound,
        matches_variable_set: per_degree.iter().all(|d| d.matches),
        per_degree,
        initial_in_algebra,
        first_mismatch,
        prime: prime_violation.is_none(),
        prime_violation,
    })
}
