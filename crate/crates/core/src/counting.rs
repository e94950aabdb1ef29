//! The `(srpt, last)` triangle of 0012-avoiding inversion sequences.
//!
//! `f_n(k, l)` counts sequences in `I_n(0012)` with `srpt = k` and
//! `last = l`. Row `n` is built from row `n - 1` alone:
//!
//! * `f_n(n-1, n-1) = 1` and `f_n(n-2, n-1) = 0`;
//! * `f_n(k, n-1) = Σ_{k' >= k} f_{n-1}(k', n-2)` for `k <= n-3`;
//! * `f_n(l, l) = Σ_{l' >= k' >= l} f_{n-1}(k', l')` for `l <= n-2`;
//! * `f_n(k, l) = Σ_{k'=k}^{l} f_{n-1}(k', l) + Σ_{l'=l}^{n-2} f_{n-1}(k, l')`
//!   for `k < l <= n-2`.
//!
//! All tail sums come from suffix arrays over the previous row, so a row
//! costs `O(n^2)` additions.

use std::fmt::{self, Debug, Display};
use std::ops::AddAssign;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::closedform;
use crate::seqcore::{enumerate_from, partition_prefixes, stat_profile, Pattern};
use crate::{Error, Result};

pub const DEFAULT_BRUTE_CAP: usize = 9;
pub const MAX_BRUTE_CAP: usize = 11;

/// Additive count type for triangle cells.
pub trait Count: Clone + Zero + One + for<'a> AddAssign<&'a Self> + PartialEq + Debug + Display {}

impl<T> Count for T where
    T: Clone + Zero + One + for<'a> AddAssign<&'a T> + PartialEq + Debug + Display
{
}

#[inline]
fn tri_index(k: usize, l: usize) -> usize {
    l * (l + 1) / 2 + k
}

/// Dense lower-triangular table of `f_n(k, l)` for `0 <= k <= l <= n-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatTriangle<T> {
    n: usize,
    cells: Vec<T>,
}

impl<T: Count> StatTriangle<T> {
    fn zeros(n: usize) -> Self {
        StatTriangle {
            n,
            cells: vec![T::zero(); n * (n + 1) / 2],
        }
    }

    /// The `n = 1` triangle: the single cell `f_1(0, 0) = 1`.
    pub fn first() -> Self {
        StatTriangle {
            n: 1,
            cells: vec![T::one()],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `None` outside `0 <= k <= l <= n-1`.
    pub fn get(&self, k: usize, l: usize) -> Option<&T> {
        (k <= l && l < self.n).then(|| &self.cells[tri_index(k, l)])
    }

    /// The cell value, zero outside the triangle.
    pub fn cell(&self, k: usize, l: usize) -> T {
        self.get(k, l).cloned().unwrap_or_else(T::zero)
    }

    fn slot(&mut self, k: usize, l: usize) -> &mut T {
        &mut self.cells[tri_index(k, l)]
    }

    /// Cells as `(k, l, count)`, ordered by `l` then `k`.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        (0..self.n).flat_map(move |l| (0..=l).map(move |k| (k, l, &self.cells[tri_index(k, l)])))
    }

    pub fn total(&self) -> T {
        let mut t = T::zero();
        for c in &self.cells {
            t += c;
        }
        t
    }

    /// `Σ_k f_n(k, l)`.
    pub fn column_sum(&self, l: usize) -> T {
        let mut t = T::zero();
        for k in 0..=l.min(self.n.saturating_sub(1)) {
            if let Some(c) = self.get(k, l) {
                t += c;
            }
        }
        t
    }

    /// `Σ_k f_n(k, n-1)`: sequences whose last entry is maximal.
    pub fn last_max_count(&self) -> T {
        self.column_sum(self.n - 1)
    }

    /// CSV with header `n,k,l,count`, one line per cell.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,l,count\n");
        for (k, l, c) in self.cells() {
            out.push_str(&format!("{},{},{},{}\n", self.n, k, l, c));
        }
        out
    }

    pub fn to_json_cells(&self) -> Vec<TriangleCell> {
        self.cells()
            .map(|(k, l, c)| TriangleCell {
                k,
                l,
                count: c.to_string(),
            })
            .collect()
    }

    /// JSON array of `{"k", "l", "count"}` with decimal-string counts.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_cells()).expect("serializable")
    }
}

impl StatTriangle<BigUint> {
    pub fn from_json(n: usize, json: &str) -> Result<Self> {
        let cells: Vec<TriangleCell> =
            serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        let mut tri = StatTriangle::zeros(n);
        for c in cells {
            let value = c
                .count
                .parse::<BigUint>()
                .map_err(|_| Error::Parse(c.count.clone()))?;
            if c.k > c.l || c.l >= n {
                return Err(Error::Parse(format!("cell ({}, {}) outside n = {n}", c.k, c.l)));
            }
            *tri.slot(c.k, c.l) = value;
        }
        Ok(tri)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleCell {
    pub k: usize,
    pub l: usize,
    pub count: String,
}

/// Streams triangles for `n = 1, 2, …` using the row recurrences.
#[derive(Debug, Clone)]
pub struct TriangleDp<T> {
    current: Option<StatTriangle<T>>,
    additions: u64,
}

impl<T: Count> Default for TriangleDp<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Count> TriangleDp<T> {
    pub fn new() -> Self {
        TriangleDp {
            current: None,
            additions: 0,
        }
    }

    /// Cell additions performed so far.
    pub fn additions(&self) -> u64 {
        self.additions
    }

    fn add(&mut self, acc: &mut T, x: &T) {
        *acc += x;
        self.additions += 1;
    }

    fn next_row(&mut self, prev: &StatTriangle<T>) -> StatTriangle<T> {
        let m = prev.n; // previous row covers letters 0..=m-1 = 0..=n-2
        let n = m + 1;

        // col_tail(k, l) = Σ_{k'=k}^{l} g(k', l)
        let mut col_tail = StatTriangle::<T>::zeros(m);
        for l in 0..m {
            let mut acc = T::zero();
            for k in (0..=l).rev() {
                self.add(&mut acc, &prev.cells[tri_index(k, l)]);
                *col_tail.slot(k, l) = acc.clone();
            }
        }
        // row_tail(k, l) = Σ_{l'=l}^{m-1} g(k, l')
        let mut row_tail = StatTriangle::<T>::zeros(m);
        for k in 0..m {
            let mut acc = T::zero();
            for l in (k..m).rev() {
                self.add(&mut acc, &prev.cells[tri_index(k, l)]);
                *row_tail.slot(k, l) = acc.clone();
            }
        }

        let mut row = StatTriangle::<T>::zeros(n);
        *row.slot(n - 1, n - 1) = T::one();
        // (n-2, n-1) stays zero.
        for k in 0..m.saturating_sub(1) {
            *row.slot(k, n - 1) = col_tail.cells[tri_index(k, m - 1)].clone();
        }
        // diagonal: Σ_{k' >= l} row_tail(k', k')
        let mut acc = T::zero();
        for l in (0..m).rev() {
            let t = row_tail.cells[tri_index(l, l)].clone();
            self.add(&mut acc, &t);
            *row.slot(l, l) = acc.clone();
        }
        for l in 1..m {
            for k in 0..l {
                let mut v = col_tail.cells[tri_index(k, l)].clone();
                let t = row_tail.cells[tri_index(k, l)].clone();
                self.add(&mut v, &t);
                *row.slot(k, l) = v;
            }
        }
        row
    }
}

impl<T: Count> Iterator for TriangleDp<T> {
    type Item = StatTriangle<T>;

    fn next(&mut self) -> Option<StatTriangle<T>> {
        let next = match self.current.take() {
            None => StatTriangle::first(),
            Some(prev) => self.next_row(&prev),
        };
        self.current = Some(next.clone());
        Some(next)
    }
}

/// `f_n(·, ·)` by recurrence.
pub fn stat_triangle<T: Count>(n: usize) -> Result<StatTriangle<T>> {
    if n == 0 {
        return Err(Error::Domain("stat_triangle needs n >= 1".into()));
    }
    Ok(TriangleDp::new().nth(n - 1).expect("unbounded iterator"))
}

/// Triangles for `n = 1..=n_max`.
pub fn stat_triangles<T: Count>(n_max: usize) -> Vec<StatTriangle<T>> {
    TriangleDp::new().take(n_max).collect()
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if cap > MAX_BRUTE_CAP {
        return Err(Error::Domain(format!(
            "brute-force cap {cap} exceeds the maximum {MAX_BRUTE_CAP}"
        )));
    }
    if n == 0 {
        return Err(Error::Domain("brute-force counts need n >= 1".into()));
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

fn pattern_0012() -> Pattern {
    Pattern::parse("0012").expect("reduced")
}

// Enumerate by prefix partitions, folding each into `acc`.
fn fold_avoiders<A>(
    n: usize,
    patterns: &[Pattern],
    init: A,
    mut f: impl FnMut(&mut A, &crate::seqcore::InversionSequence),
) -> A {
    let mut acc = init;
    for prefix in partition_prefixes(n, 3, patterns) {
        for e in enumerate_from(n, patterns, &prefix) {
            f(&mut acc, &e);
        }
    }
    acc
}

/// `f_n(·, ·)` tallied directly from the enumeration of `I_n(0012)`.
pub fn brute_stat_triangle<T: Count>(n: usize, cap: usize) -> Result<StatTriangle<T>> {
    check_cap(n, cap)?;
    let one = T::one();
    Ok(fold_avoiders(
        n,
        &[pattern_0012()],
        StatTriangle::zeros(n),
        |tri, e| {
            let p = stat_profile(e).expect("nonempty");
            *tri.slot(p.srpt, p.last) += &one;
        },
    ))
}

/// How a count is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Dp,
    Formula,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Brute, Method::Dp, Method::Formula];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Dp => "dp",
            Method::Formula => "formula",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Method::Brute),
            "dp" => Ok(Method::Dp),
            "formula" => Ok(Method::Formula),
            other => Err(Error::Parse(other.to_string())),
        }
    }
}

/// `|I_n(0012)|`.
pub fn count_avoid_0012(n: usize, method: Method, cap: usize) -> Result<BigUint> {
    match method {
        Method::Brute => count_avoiders(n, &[pattern_0012()], cap),
        Method::Dp => Ok(stat_triangle::<BigUint>(n)?.total()),
        Method::Formula => closedform::a279561(n),
    }
}

/// `|{e ∈ I_n(0012) : last(e) = n - 1}|`.
pub fn count_last_max(n: usize, method: Method, cap: usize) -> Result<BigUint> {
    match method {
        Method::Brute => {
            check_cap(n, cap)?;
            Ok(fold_avoiders(n, &[pattern_0012()], BigUint::zero(), |acc, e| {
                if e.last() == Some(n - 1) {
                    *acc += 1u32;
                }
            }))
        }
        Method::Dp => Ok(stat_triangle::<BigUint>(n)?.last_max_count()),
        Method::Formula => closedform::pow2_last(n),
    }
}

/// `|I_n(patterns)|` by enumeration.
pub fn count_avoiders(n: usize, patterns: &[Pattern], cap: usize) -> Result<BigUint> {
    check_cap(n, cap)?;
    Ok(fold_avoiders(n, patterns, BigUint::zero(), |acc, _| *acc += 1u32))
}

pub(crate) mod decimal {
    use num_bigint::BigUint;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountEntry {
    pub n: usize,
    #[serde(with = "decimal")]
    pub count: BigUint,
}

/// Counts for one pattern family by one method.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub family: String,
    pub method: Method,
    pub values: Vec<CountEntry>,
}

impl CountReport {
    /// Rejects value lists not strictly increasing in `n`.
    pub fn new(family: impl Into<String>, method: Method, values: Vec<CountEntry>) -> Result<Self> {
        if values.windows(2).any(|w| w[0].n >= w[1].n) {
            return Err(Error::Precondition("report values must be strictly ordered by n".into()));
        }
        Ok(CountReport {
            family: family.into(),
            method,
            values,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BigTriangle;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn small_rows() {
        let t2: StatTriangle<u64> = stat_triangle(2).unwrap();
        assert_eq!((t2.cell(0, 0), t2.cell(1, 1), t2.cell(0, 1)), (1, 1, 0));
        let t3: StatTriangle<u64> = stat_triangle(3).unwrap();
        assert_eq!(t3.cell(0, 0), 2);
        assert_eq!(t3.cell(0, 1), 1);
        assert_eq!(t3.cell(0, 2), 1);
        assert_eq!(t3.cell(1, 1), 1);
        assert_eq!(t3.cell(2, 2), 1);
        assert_eq!(t3.cell(1, 2), 0);
        assert_eq!(t3.total(), 6);
        assert!(stat_triangle::<u64>(0).is_err());
    }

    #[test]
    fn brute_small() {
        let b1: StatTriangle<u64> = brute_stat_triangle(1, 9).unwrap();
        assert_eq!(b1, StatTriangle::first());
        let b3: StatTriangle<u64> = brute_stat_triangle(3, 9).unwrap();
        assert_eq!(b3, stat_triangle(3).unwrap());
        let b6: StatTriangle<u64> = brute_stat_triangle(6, 9).unwrap();
        assert_eq!(b6.total(), 287);
    }

    #[test]
    fn corner_cells() {
        for t in stat_triangles::<BigUint>(40) {
            let n = t.n();
            assert_eq!(t.cell(n - 1, n - 1), big(1));
            if n >= 2 {
                assert_eq!(t.cell(n - 2, n - 1), big(0));
            }
        }
    }

    #[test]
    fn generic_counts_agree() {
        let a: Vec<StatTriangle<u64>> = stat_triangles(25);
        let b: Vec<StatTriangle<BigUint>> = stat_triangles(25);
        for (x, y) in a.iter().zip(&b) {
            for ((_, _, u), (_, _, v)) in x.cells().zip(y.cells()) {
                assert_eq!(big(*u), *v);
            }
        }
    }

    #[test]
    fn counts_by_method() {
        let expect = [1u64, 2, 6, 21, 77];
        for (i, &v) in expect.iter().enumerate() {
            for m in Method::ALL {
                assert_eq!(count_avoid_0012(i + 1, m, 9).unwrap(), big(v), "{m}");
            }
        }
        for n in 1..=7 {
            let v = count_last_max(n, Method::Brute, 9).unwrap();
            assert_eq!(v, count_last_max(n, Method::Dp, 9).unwrap());
            assert_eq!(v, count_last_max(n, Method::Formula, 9).unwrap());
        }
        assert_eq!(count_last_max(10, Method::Dp, 9).unwrap(), big(256));
    }

    #[test]
    fn cap_enforced() {
        assert_eq!(
            count_avoid_0012(10, Method::Brute, 9),
            Err(Error::CapExceeded { n: 10, cap: 9 })
        );
        assert!(count_avoiders(3, &[], 12).is_err());
        assert!(brute_stat_triangle::<u64>(0, 9).is_err());
    }

    #[test]
    fn csv_and_json() {
        let t: BigTriangle = stat_triangle(3).unwrap();
        let csv = t.to_csv();
        assert!(csv.starts_with("n,k,l,count\n"));
        assert_eq!(csv.lines().count(), 7);
        assert!(csv.lines().any(|l| l == "3,1,2,0"));
        let t2: BigTriangle = stat_triangle(2).unwrap();
        assert_eq!(t2.to_csv(), "n,k,l,count\n2,0,0,1\n2,0,1,0\n2,1,1,1\n");
        let json = t.to_json();
        assert_eq!(StatTriangle::from_json(3, &json).unwrap(), t);
        let t1: BigTriangle = stat_triangle(1).unwrap();
        assert_eq!(t1.to_json(), r#"[{"k":0,"l":0,"count":"1"}]"#);
    }

    #[test]
    fn report_ordering() {
        let e = |n| CountEntry { n, count: big(1) };
        assert!(CountReport::new("0012", Method::Dp, vec![e(1), e(2)]).is_ok());
        assert!(CountReport::new("0012", Method::Dp, vec![e(2), e(2)]).is_err());
        let r = CountReport::new("0012", Method::Dp, vec![e(3)]).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"{"family":"0012","method":"dp","values":[{"n":3,"count":"1"}]}"#);
        assert_eq!(serde_json::from_str::<CountReport>(&json).unwrap(), r);
    }
}
