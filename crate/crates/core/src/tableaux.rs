//! Minors, bitableaux and standard bitableaux.
//!
//! A bitableau is an ordered product of minors `[a_1..a_t | b_1..b_t]` with
//! weakly decreasing sizes. It is standard when consecutive factors are
//! comparable, `d_1 <= d_2 <= ... <= d_w` in the order implemented by
//! [`minor_leq`], which amounts to every column of the left and the right
//! tableau being non-decreasing from top to bottom.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::VariableSpace;

/// The triple `(m, n, r)`: `X` is `m x n`, `Y` is `m x r`, `Z` is `r x n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Params {
    pub m: usize,
    pub n: usize,
    pub r: usize,
}

impl Params {
    /// Validates `1 <= r <= min(m, n)`.
    pub fn new(m: usize, n: usize, r: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParameters(format!(
                "m and n must be positive, got m={m}, n={n}"
            )));
        }
        if r == 0 || r > m.min(n) {
            return Err(Error::InvalidParameters(format!(
                "need 1 <= r <= min(m, n), got m={m}, n={n}, r={r}"
            )));
        }
        Ok(Params { m, n, r })
    }

    /// The hypothesis `r < min(m, n)` under which the divisorial ideals are
    /// studied.
    pub fn require_proper(&self) -> Result<()> {
        if self.r < self.m.min(self.n) {
            Ok(())
        } else {
            Err(Error::InvalidParameters(format!(
                "need r < min(m, n), got m={}, n={}, r={}",
                self.m, self.n, self.r
            )))
        }
    }

    /// `r == min(m, n)`, i.e. `R_{r+1} = K[X]`.
    pub fn is_full_rank(&self) -> bool {
        self.r == self.m.min(self.n)
    }

    /// Swaps the roles of rows and columns.
    pub fn transpose(&self) -> Params {
        Params {
            m: self.n,
            n: self.m,
            r: self.r,
        }
    }

    pub fn x_space(&self) -> VariableSpace {
        VariableSpace::X {
            m: self.m,
            n: self.n,
        }
    }

    pub fn yz_space(&self) -> VariableSpace {
        VariableSpace::YZ {
            m: self.m,
            r: self.r,
            n: self.n,
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, n={}, r={})", self.m, self.n, self.r)
    }
}

/// A minor `[a_1 .. a_t | b_1 .. b_t]` with strictly increasing row and
/// column indices (1-based). The empty minor has value 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Minor {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

fn strictly_increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

impl Minor {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(Error::InvalidMinor(format!(
                "{} row indices but {} column indices",
                rows.len(),
                cols.len()
            )));
        }
        if rows.first() == Some(&0) || cols.first() == Some(&0) {
            return Err(Error::InvalidMinor("indices are 1-based".into()));
        }
        if !strictly_increasing(&rows) || !strictly_increasing(&cols) {
            return Err(Error::InvalidMinor(
                "indices must be strictly increasing".into(),
            ));
        }
        Ok(Minor { rows, cols })
    }

    pub fn empty() -> Self {
        Minor {
            rows: Vec::new(),
            cols: Vec::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Checks that the indices fit an `m x n` matrix.
    pub fn check_bounds(&self, m: usize, n: usize) -> Result<()> {
        let row_ok = self.rows.last().is_none_or(|&a| a <= m);
        let col_ok = self.cols.last().is_none_or(|&b| b <= n);
        if row_ok && col_ok {
            Ok(())
        } else {
            Err(Error::InvalidMinor(format!(
                "{self} does not fit a {m}x{n} matrix"
            )))
        }
    }

    /// All minors of size `t` of an `m x n` matrix.
    pub fn all_of_size(m: usize, n: usize, t: usize) -> Vec<Minor> {
        let mut out = Vec::new();
        for rows in (1..=m).combinations(t) {
            for cols in (1..=n).combinations(t) {
                out.push(Minor {
                    rows: rows.clone(),
                    cols,
                });
            }
        }
        out
    }

    /// All nonempty minors of an `m x n` matrix.
    pub fn all(m: usize, n: usize) -> Vec<Minor> {
        (1..=m.min(n))
            .flat_map(|t| Minor::all_of_size(m, n, t))
            .collect()
    }
}

/// `d1 ⪯ d2`: `size(d1) >= size(d2)` and the first `size(d2)` row and
/// column indices of `d1` are bounded by those of `d2`.
pub fn minor_leq(d1: &Minor, d2: &Minor) -> bool {
    d1.size() >= d2.size()
        && d1.rows.iter().zip(&d2.rows).all(|(a, c)| a <= c)
        && d1.cols.iter().zip(&d2.cols).all(|(b, d)| b <= d)
}

impl PartialOrd for Minor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical total order: larger minors first, then lexicographic on the
/// row indices, then on the column indices.
impl Ord for Minor {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .size()
            .cmp(&self.size())
            .then_with(|| self.rows.cmp(&other.rows))
            .then_with(|| self.cols.cmp(&other.cols))
    }
}

impl fmt::Display for Minor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}|{}]",
            self.rows.iter().join(" "),
            self.cols.iter().join(" ")
        )
    }
}

impl FromStr for Minor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parsed = parse_minors(s)?;
        match parsed.as_slice() {
            [one] => Ok(one.clone()),
            _ => Err(Error::Syntax {
                pos: 0,
                msg: format!("expected exactly one minor, found {}", parsed.len()),
            }),
        }
    }
}

impl Serialize for Minor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses a concatenation of minors such as `[1 2|1 2][2|3]`.
fn parse_minors(s: &str) -> Result<Vec<Minor>> {
    let mut out = Vec::new();
    let mut rest = s;
    let mut offset = 0;
    loop {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        rest = trimmed;
        if rest.is_empty() {
            return Ok(out);
        }
        if !rest.starts_with('[') {
            return Err(Error::Syntax {
                pos: offset,
                msg: "expected '['".into(),
            });
        }
        let close = rest.find(']').ok_or(Error::Syntax {
            pos: offset,
            msg: "unterminated minor".into(),
        })?;
        let body = &rest[1..close];
        let (left, right) = body.split_once('|').ok_or(Error::Syntax {
            pos: offset,
            msg: "expected '|' inside minor".into(),
        })?;
        let nums = |part: &str| -> Result<Vec<usize>> {
            part.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Syntax {
                        pos: offset,
                        msg: format!("bad index '{t}'"),
                    })
                })
                .collect()
        };
        out.push(Minor::new(nums(left)?, nums(right)?)?);
        offset += close + 1;
        rest = &rest[close + 1..];
    }
}

/// A product of nonempty minors with weakly decreasing sizes. The empty
/// product is the bitableau of value 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bitableau {
    factors: Vec<Minor>,
}

impl Bitableau {
    pub fn new(factors: Vec<Minor>) -> Result<Self> {
        if factors.iter().any(Minor::is_empty) {
            return Err(Error::InvalidMinor(
                "empty minors only occur as the empty product".into(),
            ));
        }
        if factors.windows(2).any(|w| w[0].size() < w[1].size()) {
            return Err(Error::InvalidMinor(
                "factor sizes must be weakly decreasing".into(),
            ));
        }
        Ok(Bitableau { factors })
    }

    pub fn empty() -> Self {
        Bitableau {
            factors: Vec::new(),
        }
    }

    pub fn factors(&self) -> &[Minor] {
        &self.factors
    }

    pub fn shape(&self) -> Vec<usize> {
        self.factors.iter().map(Minor::size).collect()
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(Minor::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_standard(&self) -> bool {
        is_standard(self)
    }

    pub fn check_bounds(&self, m: usize, n: usize) -> Result<()> {
        self.factors.iter().try_for_each(|d| d.check_bounds(m, n))
    }

    /// Membership in `S_r`: standard, indices within `params`, and no
    /// factor larger than `r`.
    pub fn check_in_s_r(&self, params: &Params) -> Result<()> {
        self.check_bounds(params.m, params.n)?;
        if !self.is_standard() {
            return Err(Error::NotStandard(self.to_string()));
        }
        if let Some(size) = self.factors.first().map(Minor::size) {
            if size > params.r {
                return Err(Error::ShapeTooLarge {
                    tableau: self.to_string(),
                    size,
                    r: params.r,
                });
            }
        }
        Ok(())
    }

    /// Column `j` (0-based) of the left tableau.
    pub fn left_column(&self, j: usize) -> Vec<usize> {
        self.factors
            .iter()
            .filter_map(|d| d.rows.get(j).copied())
            .collect()
    }

    /// Column `j` (0-based) of the right tableau.
    pub fn right_column(&self, j: usize) -> Vec<usize> {
        self.factors
            .iter()
            .filter_map(|d| d.cols.get(j).copied())
            .collect()
    }
}

impl fmt::Display for Bitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "[|]");
        }
        for d in &self.factors {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for Bitableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let factors: Vec<Minor> = parse_minors(s)?
            .into_iter()
            .filter(|d| !d.is_empty())
            .collect();
        Bitableau::new(factors)
    }
}

impl Serialize for Bitableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn is_standard(s: &Bitableau) -> bool {
    s.factors.windows(2).all(|w| minor_leq(&w[0], &w[1]))
}

/// Partitions of `d` into parts of size at most `max_part`, each listed
/// weakly decreasing; the list is lexicographically descending.
pub fn partitions(d: usize, max_part: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, max_part, &mut Vec::new(), &mut out);
    out
}

/// Tableaux of the given shape (row lengths, weakly decreasing) with
/// entries in `1..=max_entry`, rows strictly increasing and columns weakly
/// increasing downward. Listed in lexicographic order of their rows.
pub fn row_strict_tableaux(shape: &[usize], max_entry: usize) -> Vec<Vec<Vec<usize>>> {
    fn fill_row(
        len: usize,
        pos: usize,
        lower: &[usize],
        max_entry: usize,
        row: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == len {
            out.push(row.clone());
            return;
        }
        let mut lo = lower.get(pos).copied().unwrap_or(1);
        if let Some(&prev) = row.last() {
            lo = lo.max(prev + 1);
        }
        if len > max_entry {
            return;
        }
        let hi = max_entry - (len - 1 - pos);
        for v in lo..=hi {
            row.push(v);
            fill_row(len, pos + 1, lower, max_entry, row, out);
            row.pop();
        }
    }

    fn go(
        shape: &[usize],
        k: usize,
        max_entry: usize,
        cur: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if k == shape.len() {
            out.push(cur.clone());
            return;
        }
        let lower: Vec<usize> = cur.last().cloned().unwrap_or_default();
        let mut rows = Vec::new();
        fill_row(shape[k], 0, &lower, max_entry, &mut Vec::new(), &mut rows);
        for row in rows {
            cur.push(row);
            go(shape, k + 1, max_entry, cur, out);
            cur.pop();
        }
    }

    if shape.first().is_some_and(|&t| t > max_entry) {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(shape, 0, max_entry, &mut Vec::new(), &mut out);
    out
}

/// All standard bitableaux of `S_r` of degree `d`, each once, sorted in the
/// canonical order (lexicographic on the factor list).
pub fn enumerate_standard(params: &Params, d: usize) -> Vec<Bitableau> {
    let mut out = Vec::new();
    for shape in partitions(d, params.r) {
        let lefts = row_strict_tableaux(&shape, params.m);
        if lefts.is_empty() {
            continue;
        }
        let rights = row_strict_tableaux(&shape, params.n);
        for left in &lefts {
            for right in &rights {
                let factors = left
                    .iter()
                    .zip(right)
                    .map(|(a, b)| Minor {
                        rows: a.clone(),
                        cols: b.clone(),
                    })
                    .collect();
                out.push(Bitableau { factors });
            }
        }
    }
    out.sort();
    out
}

/// `|S_r|` in degree `d`, without materializing the bitableaux.
pub fn count_standard(params: &Params, d: usize) -> u64 {
    partitions(d, params.r)
        .iter()
        .map(|shape| {
            row_strict_tableaux(shape, params.m).len() as u64
                * row_strict_tableaux(shape, params.n).len() as u64
        })
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Rows,
    Cols,
}

/// The `r`-minors of the first `r` rows (`Side::Rows`, generating the ideal
/// `p`) or of the first `r` columns (`Side::Cols`, generating `q`).
pub fn generators_gamma(params: &Params, side: Side) -> Vec<Minor> {
    let r = params.r;
    let head: Vec<usize> = (1..=r).collect();
    match side {
        Side::Rows => (1..=params.n)
            .combinations(r)
            .map(|cols| Minor {
                rows: head.clone(),
                cols,
            })
            .collect(),
        Side::Cols => (1..=params.m)
            .combinations(r)
            .map(|rows| Minor {
                rows,
                cols: head.clone(),
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minor(s: &str) -> Minor {
        s.parse().unwrap()
    }

    fn bt(s: &str) -> Bitableau {
        s.parse().unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(Params::new(2, 3, 2).is_ok());
        assert!(Params::new(2, 3, 3).is_err());
        assert!(Params::new(2, 3, 0).is_err());
        assert!(Params::new(0, 3, 1).is_err());
        assert!(Params::new(2, 3, 2).unwrap().require_proper().is_err());
        assert!(Params::new(3, 3, 2).unwrap().require_proper().is_ok());
        assert_eq!(Params::new(4, 3, 2).unwrap().transpose(), Params::new(3, 4, 2).unwrap());
    }

    #[test]
    fn minor_parsing_and_display() {
        let d = minor("[1 2|1 3]");
        assert_eq!(d.rows(), &[1, 2]);
        assert_eq!(d.cols(), &[1, 3]);
        assert_eq!(d.to_string(), "[1 2|1 3]");
        assert!("[2 1|1 2]".parse::<Minor>().is_err());
        assert!("[1 2|1]".parse::<Minor>().is_err());
        assert!("[1|1][2|2]".parse::<Minor>().is_err());
        assert!(minor("[|]").is_empty());
    }

    #[test]
    fn order_examples() {
        assert!(minor_leq(&minor("[1 2|1 2]"), &minor("[1|1]")));
        assert!(!minor_leq(&minor("[1|1]"), &minor("[1 2|1 2]")));
        assert!(!minor_leq(&minor("[1|2]"), &minor("[2|1]")));
        assert!(!minor_leq(&minor("[2|1]"), &minor("[1|2]")));
    }

    #[test]
    fn order_is_a_partial_order_on_3x3() {
        let all = Minor::all(3, 3);
        for a in &all {
            assert!(minor_leq(a, a));
            for b in &all {
                if a != b && minor_leq(a, b) {
                    assert!(!minor_leq(b, a), "{a} {b}");
                }
                for c in &all {
                    if minor_leq(a, b) && minor_leq(b, c) {
                        assert!(minor_leq(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn standardness_examples() {
        assert!(bt("[1 2|1 2][2|2]").is_standard());
        assert!(!bt("[1|2][2|1]").is_standard());
        assert!(Bitableau::empty().is_standard());
        assert!(bt("[|]").is_empty());
        assert!("[1|1][1 2|1 2]".parse::<Bitableau>().is_err());
    }

    #[test]
    fn degree_two_with_rank_one() {
        let p = Params::new(2, 2, 1).unwrap();
        let list = enumerate_standard(&p, 2);
        assert_eq!(list.len(), 9);
        assert!(!list.contains(&bt("[1|2][2|1]")));
        assert!(!list.contains(&bt("[2|1][1|2]")));
        assert_eq!(count_standard(&p, 2), 9);
    }

    #[test]
    fn degree_zero_is_the_empty_product() {
        let p = Params::new(3, 2, 2).unwrap();
        assert_eq!(enumerate_standard(&p, 0), vec![Bitableau::empty()]);
    }

    #[test]
    fn shape_two_two_with_fixed_left_tableau() {
        let p = Params::new(3, 3, 2).unwrap();
        let count = enumerate_standard(&p, 4)
            .into_iter()
            .filter(|s| s.shape() == vec![2, 2])
            .filter(|s| s.factors().iter().all(|d| d.rows() == [1, 2]))
            .count();
        assert_eq!(count, 6);
    }

    #[test]
    fn enumeration_is_standard_and_deterministic() {
        let p = Params::new(3, 3, 2).unwrap();
        for d in 0..=3 {
            let a = enumerate_standard(&p, d);
            assert_eq!(a, enumerate_standard(&p, d));
            let mut sorted = a.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), a.len());
            for s in &a {
                assert!(s.is_standard());
                assert_eq!(s.degree(), d);
                assert!(s.shape().windows(2).all(|w| w[0] >= w[1]));
                assert!(s.check_in_s_r(&p).is_ok());
            }
        }
    }

    #[test]
    fn full_rank_counts_monomials() {
        // with r = min(m, n) the standard bitableaux are a basis of K[X]
        let p = Params::new(2, 3, 2).unwrap();
        for d in 0..=4u64 {
            // C(6 + d - 1, d)
            let expected = (1..=d).fold(1u64, |acc, k| acc * (5 + k) / k);
            assert_eq!(count_standard(&p, d as usize), expected);
        }
    }

    #[test]
    fn gamma_generators() {
        let p = Params::new(3, 3, 2).unwrap();
        let rows = generators_gamma(&p, Side::Rows);
        assert_eq!(
            rows,
            vec![minor("[1 2|1 2]"), minor("[1 2|1 3]"), minor("[1 2|2 3]")]
        );
        assert_eq!(
            generators_gamma(&Params::new(4, 3, 2).unwrap(), Side::Cols).len(),
            6
        );
        assert_eq!(
            generators_gamma(&Params::new(2, 2, 1).unwrap(), Side::Rows),
            vec![minor("[1|1]"), minor("[1|2]")]
        );
    }

    #[test]
    fn membership_in_s_r() {
        let p = Params::new(2, 2, 1).unwrap();
        assert!(matches!(
            bt("[1 2|1 2]").check_in_s_r(&p),
            Err(Error::ShapeTooLarge { .. })
        ));
        assert!(matches!(
            bt("[1|2][2|1]").check_in_s_r(&p),
            Err(Error::NotStandard(_))
        ));
        assert!(bt("[3|1]").check_in_s_r(&p).is_err());
    }
}
