//! The initial semigroup `D_{r+1}` and its cone.
//!
//! Exponent vectors live in `Z^{mr} ⊕ Z^{rn}`: `alpha[i][j]` is the
//! exponent of `y[i,j]` and `beta[u][v]` the exponent of `z[u,v]`. The set
//! `E` of exponents of `D_{r+1}` is the set of lattice points of the cone
//!
//! ```text
//! alpha[i][j] = beta[u][v] = 0                                  j > i, u > v
//! sum_{i=j-1}^{k-1} alpha[i][j-1] - sum_{i=j}^{k} alpha[i][j] >= 0   2 <= j <= r, j <= k <= m
//! sum_{v=u-1}^{w-1} beta[u-1][v] - sum_{v=u}^{w} beta[u][v]   >= 0   2 <= u <= r, u <= w <= n
//! alpha[i][j], beta[u][v] >= 0             i > j, v > u, and alpha[r][r], beta[r][r]
//! c_j = sum_i alpha[i][j] - sum_v beta[j][v] = 0                 1 <= j <= r
//! ```
//!
//! The coupling equations are stored as `c_j - c_{j+1} = 0` for `j < r`
//! together with `c_r = 0`. Dropping `c_r = 0` gives the cone of the
//! SL-invariant variant `Ẽ`, whose generators include the pure `Y` and
//! pure `Z` diagonal monomials (all `c_j` equal to `+1` resp. `-1`).
//!
//! Points are enumerated by a bounded depth-first search over the box cut
//! out by a total-degree bound; every constraint is checked as soon as its
//! support is fully assigned. No LP solver is involved.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{fmt_rational, Monomial, Var};
use crate::tableaux::Params;

/// Index of `alpha[i][j]` (1-based) in the flat layout.
pub fn alpha_index(params: &Params, i: usize, j: usize) -> usize {
    (i - 1) * params.r + (j - 1)
}

/// Index of `beta[u][v]` (1-based) in the flat layout.
pub fn beta_index(params: &Params, u: usize, v: usize) -> usize {
    params.m * params.r + (u - 1) * params.n + (v - 1)
}

pub fn exponent_dim(params: &Params) -> usize {
    params.m * params.r + params.r * params.n
}

/// An integer exponent vector `(alpha, beta)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector {
    params: Params,
    data: Vec<i64>,
}

impl ExponentVector {
    pub fn zero(params: Params) -> Self {
        ExponentVector {
            params,
            data: vec![0; exponent_dim(&params)],
        }
    }

    pub fn from_data(params: Params, data: Vec<i64>) -> Result<Self> {
        let dim = exponent_dim(&params);
        if data.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: data.len(),
            });
        }
        Ok(ExponentVector { params, data })
    }

    pub fn from_monomial(m: &Monomial, params: &Params) -> Result<Self> {
        if m.space() != params.yz_space() {
            return Err(Error::SpaceMismatch {
                left: params.yz_space(),
                right: m.space(),
            });
        }
        let mut v = ExponentVector::zero(*params);
        for i in 1..=params.m {
            for j in 1..=params.r {
                v.data[alpha_index(params, i, j)] = m.exponent(Var::Y(i, j))? as i64;
            }
        }
        for u in 1..=params.r {
            for w in 1..=params.n {
                v.data[beta_index(params, u, w)] = m.exponent(Var::Z(u, w))? as i64;
            }
        }
        Ok(v)
    }

    /// The monomial with these exponents; fails on negative entries.
    pub fn to_monomial(&self) -> Result<Monomial> {
        let p = &self.params;
        let mut vars = Vec::new();
        for i in 1..=p.m {
            for j in 1..=p.r {
                vars.push((Var::Y(i, j), self.alpha(i, j)));
            }
        }
        for u in 1..=p.r {
            for v in 1..=p.n {
                vars.push((Var::Z(u, v), self.beta(u, v)));
            }
        }
        if vars.iter().any(|(_, e)| *e < 0) {
            return Err(Error::InvalidParameters(format!(
                "exponent vector {self} has negative entries"
            )));
        }
        Monomial::from_vars(p.yz_space(), vars.into_iter().map(|(v, e)| (v, e as u32)))
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn data(&self) -> &[i64] {
        &self.data
    }

    pub fn alpha(&self, i: usize, j: usize) -> i64 {
        self.data[alpha_index(&self.params, i, j)]
    }

    pub fn beta(&self, u: usize, v: usize) -> i64 {
        self.data[beta_index(&self.params, u, v)]
    }

    pub fn y_degree(&self) -> i64 {
        self.data[..self.params.m * self.params.r].iter().sum()
    }

    pub fn z_degree(&self) -> i64 {
        self.data[self.params.m * self.params.r..].iter().sum()
    }

    pub fn total_degree(&self) -> i64 {
        self.data.iter().sum()
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector {
            params: self.params,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> ExponentVector {
        ExponentVector {
            params: self.params,
            data: self.data.iter().map(|a| a * k).collect(),
        }
    }

    pub fn to_rational(&self) -> Vec<BigRational> {
        self.data
            .iter()
            .map(|&a| BigRational::from_integer(a.into()))
            .collect()
    }

    /// `alpha` as an `m x r` array.
    pub fn alpha_rows(&self) -> Vec<Vec<i64>> {
        self.data[..self.params.m * self.params.r]
            .chunks(self.params.r)
            .map(<[i64]>::to_vec)
            .collect()
    }

    /// `beta` as an `r x n` array.
    pub fn beta_rows(&self) -> Vec<Vec<i64>> {
        self.data[self.params.m * self.params.r..]
            .chunks(self.params.n)
            .map(<[i64]>::to_vec)
            .collect()
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={:?} beta={:?}", self.alpha_rows(), self.beta_rows())
    }
}

/// Serialized form of an exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExponentArrays {
    pub alpha: Vec<Vec<i64>>,
    pub beta: Vec<Vec<i64>>,
}

impl From<&ExponentVector> for ExponentArrays {
    fn from(v: &ExponentVector) -> Self {
        ExponentArrays {
            alpha: v.alpha_rows(),
            beta: v.beta_rows(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ConstraintKind {
    /// `functional(v) = 0`
    Eq0,
    /// `functional(v) >= 0`
    Geq0,
}

/// A linear functional with integer coefficients, tagged as an equation or
/// an inequality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub kind: ConstraintKind,
    pub coeffs: Vec<(usize, i64)>,
    pub label: String,
}

impl Constraint {
    fn new(kind: ConstraintKind, coeffs: Vec<(usize, i64)>, label: String) -> Self {
        // merge repeated coordinates
        let mut merged: BTreeMap<usize, i64> = BTreeMap::new();
        for (k, c) in coeffs {
            *merged.entry(k).or_default() += c;
        }
        Constraint {
            kind,
            coeffs: merged.into_iter().filter(|(_, c)| *c != 0).collect(),
            label,
        }
    }

    pub fn eval_int(&self, v: &[i64]) -> i64 {
        self.coeffs.iter().map(|&(k, c)| c * v[k]).sum()
    }

    pub fn eval(&self, v: &[BigRational]) -> BigRational {
        self.coeffs
            .iter()
            .fold(BigRational::zero(), |acc, &(k, c)| {
                acc + &v[k] * BigRational::from_integer(c.into())
            })
    }

    pub fn holds_int(&self, v: &[i64]) -> bool {
        let x = self.eval_int(v);
        match self.kind {
            ConstraintKind::Eq0 => x == 0,
            ConstraintKind::Geq0 => x >= 0,
        }
    }

    pub fn holds(&self, v: &[BigRational]) -> bool {
        let x = self.eval(v);
        match self.kind {
            ConstraintKind::Eq0 => x.is_zero(),
            ConstraintKind::Geq0 => !x.is_negative(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    /// Exponents of the initial algebra of `R_{r+1}`.
    E,
    /// Exponents of the initial algebra of the SL-invariant ring.
    #[serde(rename = "Etilde")]
    ETilde,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::E => write!(f, "E"),
            Variant::ETilde => write!(f, "Etilde"),
        }
    }
}

/// A system of linear equations and inequalities on exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeSystem {
    params: Params,
    constraints: Vec<Constraint>,
}

/// The coupling functional `c_j = sum_i alpha[i][j] - sum_v beta[j][v]`.
fn coupling_terms(p: &Params, j: usize, sign: i64) -> Vec<(usize, i64)> {
    let mut out: Vec<(usize, i64)> = (1..=p.m).map(|i| (alpha_index(p, i, j), sign)).collect();
    out.extend((1..=p.n).map(|v| (beta_index(p, j, v), -sign)));
    out
}

impl ConeSystem {
    pub fn new(params: Params, variant: Variant) -> Self {
        use ConstraintKind::{Eq0, Geq0};
        let p = &params;
        let r = p.r;
        let mut cs = Vec::new();
        for i in 1..=p.m {
            for j in (i + 1)..=r {
                cs.push(Constraint::new(
                    Eq0,
                    vec![(alpha_index(p, i, j), 1)],
                    format!("alpha[{i},{j}] = 0"),
                ));
            }
        }
        for u in 1..=r {
            for v in 1..u.min(p.n + 1) {
                cs.push(Constraint::new(
                    Eq0,
                    vec![(beta_index(p, u, v), 1)],
                    format!("beta[{u},{v}] = 0"),
                ));
            }
        }
        for j in 2..=r {
            for k in j..=p.m {
                let mut coeffs: Vec<(usize, i64)> =
                    ((j - 1)..=(k - 1)).map(|i| (alpha_index(p, i, j - 1), 1)).collect();
                coeffs.extend((j..=k).map(|i| (alpha_index(p, i, j), -1)));
                cs.push(Constraint::new(
                    Geq0,
                    coeffs,
                    format!("alpha column partial sums j={j}, k={k}"),
                ));
            }
        }
        for u in 2..=r {
            for w in u..=p.n {
                let mut coeffs: Vec<(usize, i64)> =
                    ((u - 1)..=(w - 1)).map(|v| (beta_index(p, u - 1, v), 1)).collect();
                coeffs.extend((u..=w).map(|v| (beta_index(p, u, v), -1)));
                cs.push(Constraint::new(
                    Geq0,
                    coeffs,
                    format!("beta row partial sums u={u}, w={w}"),
                ));
            }
        }
        for i in 1..=p.m {
            for j in 1..=r.min(i.saturating_sub(1)) {
                cs.push(Constraint::new(
                    Geq0,
                    vec![(alpha_index(p, i, j), 1)],
                    format!("alpha[{i},{j}] >= 0"),
                ));
            }
        }
        for u in 1..=r {
            for v in (u + 1)..=p.n {
                cs.push(Constraint::new(
                    Geq0,
                    vec![(beta_index(p, u, v), 1)],
                    format!("beta[{u},{v}] >= 0"),
                ));
            }
        }
        cs.push(Constraint::new(
            Geq0,
            vec![(alpha_index(p, r, r), 1)],
            format!("alpha[{r},{r}] >= 0"),
        ));
        cs.push(Constraint::new(
            Geq0,
            vec![(beta_index(p, r, r), 1)],
            format!("beta[{r},{r}] >= 0"),
        ));
        for j in 1..r {
            let mut coeffs = coupling_terms(p, j, 1);
            coeffs.extend(coupling_terms(p, j + 1, -1));
            cs.push(Constraint::new(Eq0, coeffs, format!("c{j} - c{} = 0", j + 1)));
        }
        if variant == Variant::E {
            cs.push(Constraint::new(
                Eq0,
                coupling_terms(p, r, 1),
                format!("c{r} = 0"),
            ));
        }
        ConeSystem {
            params,
            constraints: cs,
        }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn dim(&self) -> usize {
        exponent_dim(&self.params)
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn equations(&self) -> impl Iterator<Item = &Constraint> + '_ {
        self.constraints
            .iter()
            .filter(|c| c.kind == ConstraintKind::Eq0)
    }

    pub fn inequalities(&self) -> impl Iterator<Item = &Constraint> + '_ {
        self.constraints
            .iter()
            .filter(|c| c.kind == ConstraintKind::Geq0)
    }

    /// The linear span of the cone: the equations alone.
    pub fn linear_span(&self) -> ConeSystem {
        ConeSystem {
            params: self.params,
            constraints: self.equations().cloned().collect(),
        }
    }

    pub fn contains(&self, v: &[BigRational]) -> Result<bool> {
        self.check_dim(v.len())?;
        Ok(self.constraints.iter().all(|c| c.holds(v)))
    }

    pub fn contains_int(&self, v: &[i64]) -> Result<bool> {
        self.check_dim(v.len())?;
        Ok(self.constraints.iter().all(|c| c.holds_int(v)))
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                got,
            })
        }
    }

    /// Calls `visit` on every integer point `v` of the system with
    /// `v >= lower` coordinatewise and `sum(v) <= max_total`, in a
    /// deterministic order.
    pub fn for_each_point<F>(&self, lower: &[i64], max_total: i64, mut visit: F) -> Result<()>
    where
        F: FnMut(&[i64]),
    {
        self.check_dim(lower.len())?;
        let search = Search::new(self, lower);
        let budget = max_total - lower.iter().sum::<i64>();
        if budget < 0 {
            return Ok(());
        }
        let mut v = vec![0i64; self.dim()];
        for &k in &search.order {
            v[k] = lower[k];
        }
        search.run(0, budget, &mut v, &mut visit);
        Ok(())
    }

    /// All nonnegative integer points with total degree at most `max_total`.
    pub fn lattice_points(&self, max_total: i64) -> Result<Vec<ExponentVector>> {
        let mut out = Vec::new();
        self.for_each_point(&vec![0; self.dim()], max_total, |v| {
            out.push(ExponentVector {
                params: self.params,
                data: v.to_vec(),
            })
        })?;
        Ok(out)
    }
}

pub fn cone_membership(v: &[BigRational], system: &ConeSystem) -> Result<bool> {
    system.contains(v)
}

/// Depth-first search state. Coordinates pinned to zero by a single
/// equation are skipped; the remaining coordinates are visited in the
/// order alpha columns `1..r`, then beta rows `r..1`.
struct Search<'a> {
    order: Vec<usize>,
    lower: &'a [i64],
    /// constraints to test right after assigning `order[pos]`
    checks: Vec<Vec<&'a Constraint>>,
    final_checks: Vec<&'a Constraint>,
}

impl<'a> Search<'a> {
    fn new(system: &'a ConeSystem, lower: &'a [i64]) -> Self {
        let p = &system.params;
        let pinned: BTreeSet<usize> = system
            .equations()
            .filter(|c| c.coeffs.len() == 1)
            .map(|c| c.coeffs[0].0)
            .filter(|&k| lower[k] <= 0)
            .collect();
        let mut order = Vec::new();
        for j in 1..=p.r {
            for i in 1..=p.m {
                order.push(alpha_index(p, i, j));
            }
        }
        for u in (1..=p.r).rev() {
            for v in 1..=p.n {
                order.push(beta_index(p, u, v));
            }
        }
        order.retain(|k| !pinned.contains(k));
        let position: HashMap<usize, usize> =
            order.iter().enumerate().map(|(pos, &k)| (k, pos)).collect();
        let mut checks: Vec<Vec<&Constraint>> = vec![Vec::new(); order.len()];
        let mut final_checks = Vec::new();
        for c in &system.constraints {
            let last = c.coeffs.iter().filter_map(|(k, _)| position.get(k)).max();
            let touches_pinned = c.coeffs.iter().any(|(k, _)| pinned.contains(k));
            match last {
                Some(&pos) => checks[pos].push(c),
                None if touches_pinned && c.coeffs.len() == 1 => {}
                None => final_checks.push(c),
            }
        }
        Search {
            order,
            lower,
            checks,
            final_checks,
        }
    }

    fn run<F: FnMut(&[i64])>(&self, pos: usize, budget: i64, v: &mut Vec<i64>, visit: &mut F) {
        if pos == self.order.len() {
            if self.final_checks.iter().all(|c| c.holds_int(v)) {
                visit(v);
            }
            return;
        }
        let k = self.order[pos];
        let lo = self.lower[k];
        for extra in 0..=budget {
            v[k] = lo + extra;
            if self.checks[pos].iter().all(|c| c.holds_int(v)) {
                self.run(pos + 1, budget - extra, v, visit);
            }
        }
        v[k] = lo;
    }
}

/// Generators of the initial semigroup of `R_{r+1}`:
/// `y[a_1,1]..y[a_t,t] z[1,b_1]..z[t,b_t]` for `1 <= t <= r`.
pub fn generators_d(params: &Params) -> Vec<Monomial> {
    let space = params.yz_space();
    let mut out = Vec::new();
    for t in 1..=params.r {
        for a in (1..=params.m).combinations(t) {
            for b in (1..=params.n).combinations(t) {
                let vars = (0..t).flat_map(|j| [(Var::Y(a[j], j + 1), 1), (Var::Z(j + 1, b[j]), 1)]);
                out.push(Monomial::from_vars(space, vars).expect("indices in range"));
            }
        }
    }
    out
}

/// Generators of the initial algebra of the SL-invariant ring: the mixed
/// diagonal monomials with `t < r`, the pure `y[a_1,1]..y[a_r,r]`, and the
/// pure `z[1,b_1]..z[r,b_r]`.
pub fn generators_d_tilde(params: &Params) -> Vec<Monomial> {
    let space = params.yz_space();
    let r = params.r;
    let mut out: Vec<Monomial> = generators_d(params)
        .into_iter()
        .filter(|g| g.degree() < 2 * r as u32)
        .collect();
    for a in (1..=params.m).combinations(r) {
        let vars = (0..r).map(|j| (Var::Y(a[j], j + 1), 1));
        out.push(Monomial::from_vars(space, vars).expect("indices in range"));
    }
    for b in (1..=params.n).combinations(r) {
        let vars = (0..r).map(|j| (Var::Z(j + 1, b[j]), 1));
        out.push(Monomial::from_vars(space, vars).expect("indices in range"));
    }
    out
}

pub fn generators(params: &Params, variant: Variant) -> Vec<Monomial> {
    match variant {
        Variant::E => generators_d(params),
        Variant::ETilde => generators_d_tilde(params),
    }
}

/// All sums of generators with total degree at most `max_total`.
pub fn semigroup_points(gens: &[ExponentVector], max_total: i64) -> BTreeSet<ExponentVector> {
    let Some(first) = gens.first() else {
        return BTreeSet::new();
    };
    let params = first.params;
    let max = max_total.max(0) as usize;
    let mut by_degree: Vec<BTreeSet<ExponentVector>> = vec![BTreeSet::new(); max + 1];
    by_degree[0].insert(ExponentVector::zero(params));
    for d in 1..=max {
        let mut layer = BTreeSet::new();
        for g in gens {
            let k = g.total_degree() as usize;
            if k == 0 || k > d {
                continue;
            }
            for p in &by_degree[d - k] {
                layer.insert(p.add(g));
            }
        }
        by_degree[d] = layer;
    }
    by_degree.into_iter().flatten().collect()
}

/// Membership in the semigroup generated by `gens`, for points of any
/// degree, by memoized generator subtraction.
pub struct SemigroupOracle {
    gens: Vec<ExponentVector>,
    memo: HashMap<Vec<i64>, bool>,
}

impl SemigroupOracle {
    pub fn new(gens: Vec<ExponentVector>) -> Self {
        SemigroupOracle {
            gens,
            memo: HashMap::new(),
        }
    }

    pub fn contains(&mut self, v: &ExponentVector) -> bool {
        self.contains_data(&v.data)
    }

    fn contains_data(&mut self, v: &[i64]) -> bool {
        if v.iter().any(|&a| a < 0) {
            return false;
        }
        if v.iter().all(|&a| a == 0) {
            return true;
        }
        if let Some(&known) = self.memo.get(v) {
            return known;
        }
        let mut found = false;
        for g in 0..self.gens.len() {
            let rest: Vec<i64> = v
                .iter()
                .zip(&self.gens[g].data)
                .map(|(a, b)| a - b)
                .collect();
            if rest.iter().all(|&a| a >= 0) && self.contains_data(&rest) {
                found = true;
                break;
            }
        }
        self.memo.insert(v.to_vec(), found);
        found
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemigroupDegreeCount {
    pub degree: i64,
    pub semigroup: usize,
    pub cone: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub point: ExponentArrays,
    pub in_semigroup: bool,
    pub in_cone: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerTest {
    /// nonnegative integer points of the linear span with degree <= D/2
    pub candidates: usize,
    /// pairs `(v, k)` with `k*v` in the semigroup
    pub hits: usize,
    pub passed: bool,
    pub counterexample: Option<ExponentArrays>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemigroupConeReport {
    pub params: Params,
    pub variant: Variant,
    pub degree_bound: i64,
    pub per_degree: Vec<SemigroupDegreeCount>,
    pub equal: bool,
    pub first_mismatch: Option<Mismatch>,
    pub power_test: PowerTest,
}

impl SemigroupConeReport {
    pub fn passed(&self) -> bool {
        self.equal && self.power_test.passed
    }
}

/// Compares the semigroup generated by the initial monomials with the
/// lattice points of the cone, up to total degree `degree_bound`, and runs
/// the power test `k*v ∈ S => v ∈ S` for `k ∈ {2, 3}`.
pub fn semigroup_vs_cone(
    params: &Params,
    variant: Variant,
    degree_bound: i64,
) -> Result<SemigroupConeReport> {
    if degree_bound < 1 {
        return Err(Error::InvalidParameters(
            "degree bound must be at least 1".into(),
        ));
    }
    let gens: Vec<ExponentVector> = generators(params, variant)
        .iter()
        .map(|g| ExponentVector::from_monomial(g, params))
        .collect::<Result<_>>()?;
    let semigroup = semigroup_points(&gens, degree_bound);
    let system = ConeSystem::new(*params, variant);
    let cone: BTreeSet<ExponentVector> = system.lattice_points(degree_bound)?.into_iter().collect();

    let mut per_degree = Vec::new();
    for d in 0..=degree_bound {
        per_degree.push(SemigroupDegreeCount {
            degree: d,
            semigroup: semigroup.iter().filter(|v| v.total_degree() == d).count(),
            cone: cone.iter().filter(|v| v.total_degree() == d).count(),
        });
    }
    let first_mismatch = semigroup
        .symmetric_difference(&cone)
        .min_by_key(|v| (v.total_degree(), (*v).clone()))
        .map(|v| Mismatch {
            point: v.into(),
            in_semigroup: semigroup.contains(v),
            in_cone: cone.contains(v),
        });

    let mut oracle = SemigroupOracle::new(gens);
    let span = system.linear_span();
    let mut candidates = Vec::new();
    span.for_each_point(&vec![0; system.dim()], degree_bound / 2, |v| {
        candidates.push(ExponentVector {
            params: *params,
            data: v.to_vec(),
        })
    })?;
    let mut hits = 0;
    let mut counterexample = None;
    for v in &candidates {
        for k in [2, 3] {
            if oracle.contains(&v.scale(k)) {
                hits += 1;
                if !oracle.contains(v) && counterexample.is_none() {
                    counterexample = Some(v.into());
                }
            }
        }
    }
    Ok(SemigroupConeReport {
        params: *params,
        variant,
        degree_bound,
        per_degree,
        equal: first_mismatch.is_none(),
        first_mismatch,
        power_test: PowerTest {
            candidates: candidates.len(),
            hits,
            passed: counterexample.is_none(),
            counterexample,
        },
    })
}

/// Number of points of `E` with `Y`-degree `d`.
pub fn count_e_points_y_degree(params: &Params, d: usize) -> Result<usize> {
    let system = ConeSystem::new(*params, Variant::E);
    let mut count = 0;
    system.for_each_point(&vec![0; system.dim()], 2 * d as i64, |v| {
        let y: i64 = v[..params.m * params.r].iter().sum();
        if y == d as i64 {
            count += 1;
        }
    })?;
    Ok(count)
}

/// The displacement `w_t` for the conic description of the exponents of
/// the initial ideal of `p^t`:
/// `alpha[j][j] = t - ε`, `alpha[i][j] = -(t - ε)/(m - r)` for
/// `j < i <= m - r + j`, everything else 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub params: Params,
    pub t: usize,
    pub epsilon: BigRational,
    pub w: Vec<BigRational>,
}

impl Witness {
    pub fn new(params: &Params, t: usize, epsilon: BigRational) -> Result<Self> {
        params.require_proper()?;
        if t == 0 {
            return Err(Error::InvalidParameters("t must be at least 1".into()));
        }
        if !epsilon.is_positive() || epsilon >= BigRational::one() {
            return Err(Error::InvalidParameters(format!(
                "epsilon must lie in (0, 1), got {}",
                fmt_rational(&epsilon)
            )));
        }
        let p = params;
        let diag = BigRational::from_integer(t.into()) - &epsilon;
        let off = -&diag / BigRational::from_integer((p.m - p.r).into());
        let mut w = vec![BigRational::zero(); exponent_dim(p)];
        for j in 1..=p.r {
            w[alpha_index(p, j, j)] = diag.clone();
            for i in (j + 1)..=(p.m - p.r + j) {
                w[alpha_index(p, i, j)] = off.clone();
            }
        }
        Ok(Witness {
            params: *params,
            t,
            epsilon,
            w,
        })
    }

    /// Coordinatewise `min(0, ceil(w))`: a lower bound for every integer
    /// point of `E` and of `w + cone`.
    pub fn lower_bound(&self) -> Vec<i64> {
        self.w
            .iter()
            .map(|x| {
                let c = x.ceil().to_integer();
                let c: i64 = c.try_into().expect("witness entries are small");
                c.min(0)
            })
            .collect()
    }

    pub fn alpha_strings(&self) -> Vec<Vec<String>> {
        let p = &self.params;
        (1..=p.m)
            .map(|i| {
                (1..=p.r)
                    .map(|j| fmt_rational(&self.w[alpha_index(p, i, j)]))
                    .collect()
            })
            .collect()
    }

    pub fn beta_strings(&self) -> Vec<Vec<String>> {
        let p = &self.params;
        (1..=p.r)
            .map(|u| {
                (1..=p.n)
                    .map(|v| fmt_rational(&self.w[beta_index(p, u, v)]))
                    .collect()
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConicDegreeCount {
    pub degree: i64,
    pub e_t: usize,
    pub shifted_cone: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConicMismatch {
    pub point: ExponentArrays,
    pub in_e_t: bool,
    pub in_shifted_cone: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessArrays {
    pub alpha: Vec<Vec<String>>,
    pub beta: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConicReport {
    pub params: Params,
    pub t: usize,
    pub epsilon: String,
    pub witness: WitnessArrays,
    pub witness_in_span: bool,
    pub degree_bound: i64,
    /// `t <= m - r`: the equality is expected to hold
    pub expected_equal: bool,
    pub equal: bool,
    pub per_degree: Vec<ConicDegreeCount>,
    pub first_mismatch: Option<ConicMismatch>,
}

impl ConicReport {
    pub fn agrees_with_prediction(&self) -> bool {
        self.witness_in_span && self.equal == self.expected_equal
    }
}

/// Checks `E_t = ZE ∩ (w_t + R_+ E)` on all points of total degree at most
/// `degree_bound`, with `E_t = {v ∈ E : alpha[r][r] >= t}`.
pub fn conic_equality_check(
    params: &Params,
    t: usize,
    witness: &Witness,
    degree_bound: i64,
) -> Result<ConicReport> {
    params.require_proper()?;
    if witness.params != *params || witness.t != t {
        return Err(Error::InvalidParameters(
            "witness was built for different parameters".into(),
        ));
    }
    let system = ConeSystem::new(*params, Variant::E);
    let span = system.linear_span();
    let witness_in_span = span.contains(&witness.w)?;
    let rr = alpha_index(params, params.r, params.r);
    let lower = witness.lower_bound();

    let mut counts: BTreeMap<i64, (usize, usize)> = BTreeMap::new();
    let mut mismatches: Vec<(i64, Vec<i64>, bool, bool)> = Vec::new();
    let mut shifted = vec![BigRational::zero(); system.dim()];
    span.for_each_point(&lower, degree_bound, |v| {
        let in_e_t = system.constraints().iter().all(|c| c.holds_int(v)) && v[rr] >= t as i64;
        for (k, s) in shifted.iter_mut().enumerate() {
            *s = BigRational::from_integer(v[k].into()) - &witness.w[k];
        }
        let in_shifted = system.constraints().iter().all(|c| c.holds(&shifted));
        let deg: i64 = v.iter().sum();
        let entry = counts.entry(deg).or_default();
        entry.0 += usize::from(in_e_t);
        entry.1 += usize::from(in_shifted);
        if in_e_t != in_shifted {
            mismatches.push((deg, v.to_vec(), in_e_t, in_shifted));
        }
    })?;
    mismatches.sort();
    let first_mismatch = mismatches.into_iter().next().map(|(_, v, a, b)| ConicMismatch {
        point: (&ExponentVector {
            params: *params,
            data: v,
        })
            .into(),
        in_e_t: a,
        in_shifted_cone: b,
    });
    let per_degree = (0..=degree_bound)
        .map(|d| {
            let (a, b) = counts.get(&d).copied().unwrap_or((0, 0));
            ConicDegreeCount {
                degree: d,
                e_t: a,
                shifted_cone: b,
            }
        })
        .collect();
    Ok(ConicReport {
        params: *params,
        t,
        epsilon: fmt_rational(&witness.epsilon),
        witness: WitnessArrays {
            alpha: witness.alpha_strings(),
            beta: witness.beta_strings(),
        },
        witness_in_span,
        degree_bound,
        expected_equal: t <= params.m - params.r,
        equal: first_mismatch.is_none(),
        per_degree,
        first_mismatch,
    })
}

/// `1/2`, the default `ε`.
pub fn default_epsilon() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Syntax {
        pos: 0,
        msg: format!("expected a rational number p/q, got '{s}'"),
    };
    let (num, den) = match s.trim().split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let num: num_bigint::BigInt = num.parse().map_err(|_| bad())?;
    let den: num_bigint::BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generic_point::initial_monomial_closed_form;
    use crate::tableaux::{count_standard, enumerate_standard};

    fn params(m: usize, n: usize, r: usize) -> Params {
        Params::new(m, n, r).unwrap()
    }

    fn half() -> BigRational {
        default_epsilon()
    }

    #[test]
    fn layout_round_trip() {
        let p = params(3, 4, 2);
        for g in generators_d(&p) {
            let v = ExponentVector::from_monomial(&g, &p).unwrap();
            assert_eq!(v.to_monomial().unwrap(), g);
            assert_eq!(v.y_degree(), v.z_degree());
        }
    }

    #[test]
    fn generator_counts() {
        assert_eq!(generators_d(&params(2, 2, 1)).len(), 4);
        assert_eq!(generators_d(&params(2, 2, 2)).len(), 5);
        let binom = |a: usize, b: usize| (0..b).fold(1usize, |acc, k| acc * (a - k) / (k + 1));
        for (m, n) in [(2, 3), (3, 3), (3, 4), (4, 4)] {
            for r in 1..=m.min(n) {
                let expected: usize = (1..=r).map(|t| binom(m, t) * binom(n, t)).sum();
                assert_eq!(generators_d(&params(m, n, r)).len(), expected);
            }
        }
    }

    #[test]
    fn membership_examples() {
        let p = params(2, 2, 2);
        let sys = ConeSystem::new(p, Variant::E);
        let m = crate::poly::Monomial::from_vars(
            p.yz_space(),
            [
                (Var::Y(1, 1), 1),
                (Var::Y(2, 2), 1),
                (Var::Z(1, 1), 1),
                (Var::Z(2, 2), 1),
            ],
        )
        .unwrap();
        let v = ExponentVector::from_monomial(&m, &p).unwrap();
        assert!(cone_membership(&v.to_rational(), &sys).unwrap());
        let mut bad = ExponentVector::zero(p);
        bad.data[alpha_index(&p, 1, 2)] = 1;
        assert!(!cone_membership(&bad.to_rational(), &sys).unwrap());
        assert!(cone_membership(&ExponentVector::zero(p).to_rational(), &sys).unwrap());
        assert!(matches!(
            cone_membership(&[BigRational::zero()], &sys),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn generators_satisfy_both_systems() {
        for (m, n) in [(2, 2), (2, 3), (3, 3), (4, 3)] {
            for r in 1..=m.min(n) {
                let p = params(m, n, r);
                let e = ConeSystem::new(p, Variant::E);
                let et = ConeSystem::new(p, Variant::ETilde);
                for g in generators_d(&p) {
                    let v = ExponentVector::from_monomial(&g, &p).unwrap();
                    assert!(e.contains_int(v.data()).unwrap(), "{g}");
                    assert!(et.contains_int(v.data()).unwrap(), "{g}");
                }
                for g in generators_d_tilde(&p) {
                    let v = ExponentVector::from_monomial(&g, &p).unwrap();
                    assert!(et.contains_int(v.data()).unwrap(), "{g}");
                }
            }
        }
    }

    #[test]
    fn tilde_system_drops_exactly_the_last_coupling() {
        let p = params(3, 4, 2);
        let e = ConeSystem::new(p, Variant::E);
        let et = ConeSystem::new(p, Variant::ETilde);
        let missing: Vec<&Constraint> = e
            .constraints()
            .iter()
            .filter(|c| !et.constraints().contains(c))
            .collect();
        assert_eq!(missing.len(), 1);
        assert_eq!(missing[0].label, "c2 = 0");
        assert!(et.constraints().iter().all(|c| e.constraints().contains(c)));
    }

    #[test]
    fn literal_tilde_couplings_exclude_pure_y_minors() {
        // c_j = 0 for j < r, read literally, rejects y[1,1] y[2,2]
        let p = params(2, 2, 2);
        let g = crate::poly::Monomial::from_vars(p.yz_space(), [(Var::Y(1, 1), 1), (Var::Y(2, 2), 1)])
            .unwrap();
        let v = ExponentVector::from_monomial(&g, &p).unwrap();
        let c1 = Constraint::new(ConstraintKind::Eq0, coupling_terms(&p, 1, 1), "c1 = 0".into());
        assert!(!c1.holds_int(v.data()));
        assert!(ConeSystem::new(p, Variant::ETilde)
            .contains_int(v.data())
            .unwrap());
    }

    #[test]
    fn semigroup_equals_cone_small() {
        for (m, n, r) in [(2, 2, 1), (2, 2, 2), (2, 3, 1), (3, 3, 2)] {
            let report = semigroup_vs_cone(&params(m, n, r), Variant::E, 4).unwrap();
            assert!(report.passed(), "{report:?}");
        }
        let report = semigroup_vs_cone(&params(2, 2, 1), Variant::E, 4).unwrap();
        // degree-2 bitableaux of S_1 have total exponent degree 4
        assert_eq!(report.per_degree[4].cone, 9);
        assert_eq!(report.per_degree[4].semigroup, 9);
        assert!(report.power_test.hits > 0);
    }

    #[test]
    fn closed_forms_are_cone_points() {
        let p = params(3, 3, 2);
        let sys = ConeSystem::new(p, Variant::E);
        for d in 0..=3 {
            for s in enumerate_standard(&p, d) {
                let v = ExponentVector::from_monomial(&initial_monomial_closed_form(&s, &p).unwrap(), &p)
                    .unwrap();
                assert!(sys.contains_int(v.data()).unwrap());
            }
        }
    }

    #[test]
    fn y_degree_counts_match_standard_bitableaux() {
        for (m, n, r) in [(2, 2, 1), (3, 2, 2), (3, 3, 2)] {
            let p = params(m, n, r);
            for d in 0..=3 {
                assert_eq!(
                    count_e_points_y_degree(&p, d).unwrap() as u64,
                    count_standard(&p, d)
                );
            }
        }
    }

    #[test]
    fn witness_for_three_by_three_rank_two() {
        let p = params(3, 3, 2);
        let w = Witness::new(&p, 1, half()).unwrap();
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(w.w[alpha_index(&p, 1, 1)], q(1, 2));
        assert_eq!(w.w[alpha_index(&p, 2, 2)], q(1, 2));
        assert_eq!(w.w[alpha_index(&p, 2, 1)], q(-1, 2));
        assert_eq!(w.w[alpha_index(&p, 3, 2)], q(-1, 2));
        assert_eq!(w.w[alpha_index(&p, 3, 1)], q(0, 1));
        assert!((1..=2).all(|u| (1..=3).all(|v| w.w[beta_index(&p, u, v)].is_zero())));
        let report = conic_equality_check(&p, 1, &w, 6).unwrap();
        assert!(report.witness_in_span);
        assert!(report.equal, "{report:?}");
        assert!(report.agrees_with_prediction());
    }

    #[test]
    fn witness_beyond_the_bound_fails() {
        let p = params(2, 3, 1);
        let w = Witness::new(&p, 2, half()).unwrap();
        let report = conic_equality_check(&p, 2, &w, 6).unwrap();
        assert!(!report.expected_equal);
        assert!(!report.equal);
        let bad = report.first_mismatch.unwrap();
        assert!(bad.in_shifted_cone && !bad.in_e_t);
        assert!(bad.point.alpha.iter().flatten().any(|&a| a < 0));
    }

    #[test]
    fn witness_preconditions() {
        let p = params(3, 3, 2);
        assert!(Witness::new(&p, 0, half()).is_err());
        assert!(Witness::new(&p, 1, BigRational::one()).is_err());
        assert!(Witness::new(&p, 1, BigRational::zero()).is_err());
        assert!(Witness::new(&params(2, 3, 2), 1, half()).is_err());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("1/2").unwrap(), half());
        assert_eq!(parse_rational(" 3 ").unwrap(), BigRational::from_integer(3.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a").is_err());
    }
}
