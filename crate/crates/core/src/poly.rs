//! Exact multivariate polynomials over the rationals.
//!
//! Two variable spaces are supported: the entries of the generic `m x n`
//! matrix `X`, and the entries of the factor matrices `Y` (`m x r`) and `Z`
//! (`r x n`). Variables of a space are numbered by their rank in the term
//! order, index 0 being the largest variable, so that the degree reverse
//! lexicographic comparison is a plain scan over the exponent vector.
//!
//! On the `YZ` space the ranking is
//!
//! ```text
//! y[m,1] > y[m-1,1] > ... > y[1,1] > y[m,2] > ... > y[1,r]
//!        > z[1,n] > ... > z[1,1] > z[2,n] > ... > z[r,1]
//! ```
//!
//! On the `X` space variables are ranked row-major, `x[1,1]` largest. That
//! ranking only fixes the canonical storage order of `K[X]`.

mod parse;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};

pub use parse::parse_polynomial;

/// The ambient polynomial ring: `K[X]` or `K[Y,Z]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum VariableSpace {
    X { m: usize, n: usize },
    YZ { m: usize, r: usize, n: usize },
}

/// A single indeterminate, 1-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(usize, usize),
    Y(usize, usize),
    Z(usize, usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Var::X(i, j) => write!(f, "x[{i},{j}]"),
            Var::Y(i, j) => write!(f, "y[{i},{j}]"),
            Var::Z(i, j) => write!(f, "z[{i},{j}]"),
        }
    }
}

impl VariableSpace {
    pub fn x(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParameters(format!(
                "matrix dimensions must be positive, got {m}x{n}"
            )));
        }
        Ok(VariableSpace::X { m, n })
    }

    pub fn yz(m: usize, r: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 || r == 0 {
            return Err(Error::InvalidParameters(format!(
                "dimensions must be positive, got m={m}, r={r}, n={n}"
            )));
        }
        Ok(VariableSpace::YZ { m, r, n })
    }

    pub fn num_vars(&self) -> usize {
        match *self {
            VariableSpace::X { m, n } => m * n,
            VariableSpace::YZ { m, r, n } => m * r + r * n,
        }
    }

    pub fn is_x(&self) -> bool {
        matches!(self, VariableSpace::X { .. })
    }

    pub fn is_yz(&self) -> bool {
        matches!(self, VariableSpace::YZ { .. })
    }

    /// Position of `var` in the term-order ranking (0 = largest).
    pub fn index_of(&self, var: Var) -> Result<usize> {
        let out_of_range = || Error::IndexOutOfRange {
            var: var.to_string(),
            space: *self,
        };
        match (*self, var) {
            (VariableSpace::X { m, n }, Var::X(i, j)) => {
                if (1..=m).contains(&i) && (1..=n).contains(&j) {
                    Ok((i - 1) * n + (j - 1))
                } else {
                    Err(out_of_range())
                }
            }
            (VariableSpace::YZ { m, r, .. }, Var::Y(i, j)) => {
                if (1..=m).contains(&i) && (1..=r).contains(&j) {
                    Ok((j - 1) * m + (m - i))
                } else {
                    Err(out_of_range())
                }
            }
            (VariableSpace::YZ { m, r, n }, Var::Z(u, v)) => {
                if (1..=r).contains(&u) && (1..=n).contains(&v) {
                    Ok(m * r + (u - 1) * n + (n - v))
                } else {
                    Err(out_of_range())
                }
            }
            _ => Err(out_of_range()),
        }
    }

    /// Inverse of [`VariableSpace::index_of`].
    pub fn var_at(&self, idx: usize) -> Var {
        assert!(idx < self.num_vars(), "variable index {idx} out of range");
        match *self {
            VariableSpace::X { n, .. } => Var::X(idx / n + 1, idx % n + 1),
            VariableSpace::YZ { m, r, n } => {
                if idx < m * r {
                    Var::Y(m - idx % m, idx / m + 1)
                } else {
                    let k = idx - m * r;
                    Var::Z(k / n + 1, n - k % n)
                }
            }
        }
    }

    /// Number of `y` variables; they occupy indices `0..y_count()`.
    pub fn y_count(&self) -> usize {
        match *self {
            VariableSpace::X { .. } => 0,
            VariableSpace::YZ { m, r, .. } => m * r,
        }
    }
}

impl fmt::Display for VariableSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VariableSpace::X { m, n } => write!(f, "X-space(m={m}, n={n})"),
            VariableSpace::YZ { m, r, n } => write!(f, "YZ-space(m={m}, r={r}, n={n})"),
        }
    }
}

/// Degree reverse lexicographic comparison of exponent vectors whose
/// positions are listed from the largest variable to the smallest.
pub(crate) fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // the smaller exponent on the smallest differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// A monomial over a [`VariableSpace`].
///
/// `Ord` is the term order (after the space, which only matters when
/// comparing across spaces).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    space: VariableSpace,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(space: VariableSpace) -> Self {
        Monomial {
            space,
            exps: vec![0; space.num_vars()],
        }
    }

    pub fn var(space: VariableSpace, var: Var) -> Result<Self> {
        let mut m = Monomial::one(space);
        m.exps[space.index_of(var)?] = 1;
        Ok(m)
    }

    /// Builds a monomial from exponents indexed by term-order rank.
    pub fn from_exponents(space: VariableSpace, exps: Vec<u32>) -> Result<Self> {
        if exps.len() != space.num_vars() {
            return Err(Error::DimensionMismatch {
                expected: space.num_vars(),
                got: exps.len(),
            });
        }
        Ok(Monomial { space, exps })
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated
    /// variables accumulate.
    pub fn from_vars<I>(space: VariableSpace, vars: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Var, u32)>,
    {
        let mut m = Monomial::one(space);
        for (v, e) in vars {
            m.exps[space.index_of(v)?] += e;
        }
        Ok(m)
    }

    pub fn space(&self) -> VariableSpace {
        self.space
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: Var) -> Result<u32> {
        Ok(self.exps[self.space.index_of(var)?])
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// `(Y-degree, Z-degree)`; on the `X` space the Z-degree is 0.
    pub fn bidegree(&self) -> (u32, u32) {
        let split = self.space.y_count();
        let y = self.exps[..split].iter().sum();
        let z = self.exps[split..].iter().sum();
        (y, z)
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.space == other.space && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        check_space(self.space, other.space)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial {
            space: self.space,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            space: self.space,
            exps: self.exps.iter().map(|e| e * k).collect(),
        }
    }

    /// Variables with positive exponent, in print order (`x`/`y` before
    /// `z`, row-major within a matrix).
    pub fn support(&self) -> Vec<(Var, u32)> {
        let mut vars: Vec<(Var, u32)> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (self.space.var_at(i), e))
            .collect();
        vars.sort();
        vars
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        self.try_mul(rhs).expect("monomial product across variable spaces")
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.space
            .cmp(&other.space)
            .then_with(|| degrevlex(&self.exps, &other.exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let support = self.support();
        if support.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in support.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

fn check_space(a: VariableSpace, b: VariableSpace) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::SpaceMismatch { left: a, right: b })
    }
}

/// The degree reverse lexicographic order on a variable space, with the
/// variable ranking described in the module docs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TermOrder {
    space: VariableSpace,
}

impl TermOrder {
    pub fn new(space: VariableSpace) -> Self {
        TermOrder { space }
    }

    pub fn space(&self) -> VariableSpace {
        self.space
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        check_space(self.space, a.space)?;
        check_space(self.space, b.space)?;
        Ok(degrevlex(&a.exps, &b.exps))
    }

    pub fn leading_term(&self, f: &Polynomial) -> Result<(Monomial, BigRational)> {
        check_space(self.space, f.space)?;
        f.leading_term()
    }
}

pub fn compare_monomials(a: &Monomial, b: &Monomial, order: &TermOrder) -> Result<Ordering> {
    order.compare(a, b)
}

pub fn leading_term(f: &Polynomial, order: &TermOrder) -> Result<(Monomial, BigRational)> {
    order.leading_term(f)
}

/// A polynomial with rational coefficients, kept in canonical form: no
/// zero coefficients, terms sorted by the term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    space: VariableSpace,
    terms: BTreeMap<Monomial, BigRational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    match op {
        ArithOp::Add => f.try_add(g),
        ArithOp::Sub => f.try_sub(g),
        ArithOp::Mul => f.try_mul(g),
    }
}

impl Polynomial {
    pub fn zero(space: VariableSpace) -> Self {
        Polynomial {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(space: VariableSpace) -> Self {
        Polynomial::constant(space, BigRational::one())
    }

    pub fn constant(space: VariableSpace, c: BigRational) -> Self {
        Polynomial::from_term(Monomial::one(space), c)
    }

    pub fn from_term(m: Monomial, c: BigRational) -> Self {
        let space = m.space;
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { space, terms }
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Polynomial::from_term(m, BigRational::one())
    }

    pub fn var(space: VariableSpace, var: Var) -> Result<Self> {
        Ok(Polynomial::from_monomial(Monomial::var(space, var)?))
    }

    /// Collects `(monomial, coefficient)` pairs, summing repeated monomials.
    pub fn from_terms<I>(space: VariableSpace, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut acc: HashMap<Monomial, BigRational> = HashMap::new();
        for (m, c) in terms {
            check_space(space, m.space)?;
            *acc.entry(m).or_insert_with(BigRational::zero) += c;
        }
        Ok(Polynomial::from_map(space, acc))
    }

    fn from_map(space: VariableSpace, acc: HashMap<Monomial, BigRational>) -> Self {
        Polynomial {
            space,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn space(&self) -> VariableSpace {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_term(&self) -> Result<(Monomial, BigRational)> {
        self.terms
            .last_key_value()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last_key_value().map(|(m, _)| m)
    }

    /// Highest total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn homogeneous_components(&self) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Polynomial::zero(self.space))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_space(self.space, other.space)?;
        let mut out = self.clone();
        out.add_scaled(other, &BigRational::one());
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_space(self.space, other.space)?;
        let mut out = self.clone();
        out.add_scaled(other, &-BigRational::one());
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_space(self.space, other.space)?;
        let mut acc: HashMap<Monomial, BigRational> =
            HashMap::with_capacity(self.len() * other.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca * cb;
                match acc.entry(a.mul_unchecked(b)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += c,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        Ok(Polynomial::from_map(self.space, acc))
    }

    /// `self += factor * other`, in place. Spaces must agree.
    pub fn add_scaled(&mut self, other: &Polynomial, factor: &BigRational) {
        assert_eq!(self.space, other.space, "polynomial space mismatch");
        if factor.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            let delta = c * factor;
            match self.terms.get_mut(m) {
                Some(existing) => {
                    *existing += delta;
                    if existing.is_zero() {
                        self.terms.remove(m);
                    }
                }
                None => {
                    self.terms.insert(m.clone(), delta);
                }
            }
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero(self.space);
        }
        Polynomial {
            space: self.space,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        check_space(self.space, m.space)?;
        Ok(Polynomial {
            space: self.space,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul_unchecked(m), c.clone()))
                .collect(),
        })
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(self.space);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Parses the text grammar documented in the README.
    pub fn parse(text: &str, space: VariableSpace) -> Result<Polynomial> {
        parse_polynomial(text, space)
    }

    /// A random polynomial with at most `max_terms` terms of degree at most
    /// `max_degree`; coefficients are small nonzero integers with an
    /// occasional fraction.
    pub fn random<R: Rng + ?Sized>(
        space: VariableSpace,
        rng: &mut R,
        max_degree: u32,
        max_terms: usize,
    ) -> Polynomial {
        let nvars = space.num_vars();
        let mut terms = Vec::new();
        for _ in 0..rng.gen_range(1..=max_terms.max(1)) {
            let deg = rng.gen_range(0..=max_degree);
            let mut exps = vec![0u32; nvars];
            for _ in 0..deg {
                exps[rng.gen_range(0..nvars)] += 1;
            }
            let mut num: i64 = rng.gen_range(1..=5);
            if rng.gen_bool(0.5) {
                num = -num;
            }
            let den: i64 = if rng.gen_bool(0.2) { rng.gen_range(2..=3) } else { 1 };
            terms.push((
                Monomial { space, exps },
                BigRational::new(num.into(), den.into()),
            ));
        }
        Polynomial::from_terms(space, terms).expect("space is consistent")
    }

    /// Random homogeneous polynomial of degree `degree`.
    pub fn random_homogeneous<R: Rng + ?Sized>(
        space: VariableSpace,
        rng: &mut R,
        degree: u32,
        max_terms: usize,
    ) -> Polynomial {
        let nvars = space.num_vars();
        let mut terms = Vec::new();
        for _ in 0..rng.gen_range(1..=max_terms.max(1)) {
            let mut exps = vec![0u32; nvars];
            for _ in 0..degree {
                exps[rng.gen_range(0..nvars)] += 1;
            }
            let c: i64 = rng.gen_range(1..=7) * if rng.gen_bool(0.5) { 1 } else { -1 };
            terms.push((Monomial { space, exps }, BigRational::from_integer(c.into())));
        }
        Polynomial::from_terms(space, terms).expect("space is consistent")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial space mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial space mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial space mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            space: self.space,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn yz(m: usize, r: usize, n: usize) -> VariableSpace {
        VariableSpace::yz(m, r, n).unwrap()
    }

    #[test]
    fn ranking_matches_listed_order() {
        let s = yz(3, 2, 3);
        let listed = [
            Var::Y(3, 1),
            Var::Y(2, 1),
            Var::Y(1, 1),
            Var::Y(3, 2),
            Var::Y(2, 2),
            Var::Y(1, 2),
            Var::Z(1, 3),
            Var::Z(1, 2),
            Var::Z(1, 1),
            Var::Z(2, 3),
            Var::Z(2, 2),
            Var::Z(2, 1),
        ];
        for (k, v) in listed.iter().enumerate() {
            assert_eq!(s.index_of(*v).unwrap(), k);
            assert_eq!(s.var_at(k), *v);
        }
    }

    #[test]
    fn degree_one_variables_follow_ranking() {
        let s = yz(2, 2, 2);
        let order = TermOrder::new(s);
        for i in 0..s.num_vars() {
            for j in 0..s.num_vars() {
                let a = Monomial::var(s, s.var_at(i)).unwrap();
                let b = Monomial::var(s, s.var_at(j)).unwrap();
                // smaller index = larger variable
                assert_eq!(order.compare(&a, &b).unwrap(), j.cmp(&i));
            }
        }
    }

    #[test]
    fn one_minor_leading_term_example() {
        let s = yz(2, 2, 2);
        let order = TermOrder::new(s);
        let a = Monomial::from_vars(s, [(Var::Y(1, 1), 1), (Var::Z(1, 2), 1)]).unwrap();
        let b = Monomial::from_vars(s, [(Var::Y(1, 2), 1), (Var::Z(2, 2), 1)]).unwrap();
        assert_eq!(order.compare(&a, &b).unwrap(), Ordering::Greater);
        assert_eq!(order.compare(&a, &a).unwrap(), Ordering::Equal);
    }

    #[test]
    fn degree_dominates() {
        let s = yz(2, 2, 2);
        let order = TermOrder::new(s);
        let big = Monomial::from_vars(s, [(Var::Z(2, 1), 3)]).unwrap();
        let small = Monomial::from_vars(s, [(Var::Y(2, 1), 2)]).unwrap();
        assert_eq!(order.compare(&big, &small).unwrap(), Ordering::Greater);
    }

    #[test]
    fn compare_rejects_mismatched_spaces() {
        let a = Monomial::one(yz(2, 2, 2));
        let b = Monomial::one(yz(2, 1, 2));
        let order = TermOrder::new(yz(2, 2, 2));
        assert!(matches!(
            order.compare(&a, &b),
            Err(Error::SpaceMismatch { .. })
        ));
    }

    #[test]
    fn leading_term_of_single_term() {
        let s = yz(2, 2, 2);
        let f = Polynomial::parse("3*y[1,1]", s).unwrap();
        let (m, c) = leading_term(&f, &TermOrder::new(s)).unwrap();
        assert_eq!(m, Monomial::var(s, Var::Y(1, 1)).unwrap());
        assert_eq!(c, q(3));
        assert_eq!(
            Polynomial::zero(s).leading_term(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn additive_inverse_cancels() {
        let s = VariableSpace::x(2, 2).unwrap();
        let f = Polynomial::parse("x[1,1]^2 - 1/2*x[1,2] + 7", s).unwrap();
        assert!((&f + &(-&f)).is_zero());
        assert!(poly_arith(&f, &f, ArithOp::Sub).unwrap().is_zero());
    }

    #[test]
    fn two_minor_from_factors() {
        let s = VariableSpace::x(2, 2).unwrap();
        let p = |t: &str| Polynomial::parse(t, s).unwrap();
        let det = &(&p("x[1,1]") * &p("x[2,2]")) - &(&p("x[1,2]") * &p("x[2,1]"));
        assert_eq!(det, p("x[1,1]*x[2,2] - x[1,2]*x[2,1]"));
        assert_eq!(det.len(), 2);
        assert!(det.is_homogeneous());
    }

    #[test]
    fn arithmetic_rejects_mismatched_spaces() {
        let f = Polynomial::one(VariableSpace::x(2, 2).unwrap());
        let g = Polynomial::one(VariableSpace::x(2, 3).unwrap());
        assert!(poly_arith(&f, &g, ArithOp::Mul).is_err());
    }

    #[test]
    fn printing() {
        let s = yz(2, 1, 2);
        let f = Polynomial::parse("-3/2*y[2,1]^2", s).unwrap();
        assert_eq!(f.to_string(), "-3/2*y[2,1]^2");
        assert_eq!(f.leading_term().unwrap().1, BigRational::new((-3).into(), 2.into()));
        assert_eq!(Polynomial::zero(s).to_string(), "0");
        let x = VariableSpace::x(2, 2).unwrap();
        assert_eq!(
            Polynomial::parse("x[1,1] + x[1,1]", x).unwrap().to_string(),
            "2*x[1,1]"
        );
    }

    #[test]
    fn homogeneous_split() {
        let s = VariableSpace::x(2, 2).unwrap();
        let f = Polynomial::parse("x[1,1]*x[2,2] + x[1,2] - 4", s).unwrap();
        let comps = f.homogeneous_components();
        assert_eq!(comps.keys().copied().collect::<Vec<_>>(), vec![0, 1, 2]);
        let total = comps
            .values()
            .fold(Polynomial::zero(s), |acc, c| &acc + c);
        assert_eq!(total, f);
    }
}
