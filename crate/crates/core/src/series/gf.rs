//! Generating functions assembled from the statistic triangles.
//!
//! With `f_n(k, l)` from [`crate::counting`]:
//!
//! * `L(x;q) = Σ_n (Σ_k f_n(k, n-1) x^k) q^n`
//! * `D(x;q) = Σ_n (Σ_{l <= n-2} f_n(l, l) x^l) q^n`
//! * `F(x,y;q) = Σ_n (Σ_{k <= l} f_n(k, l) x^k y^l) q^n`

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use super::identity::ParamPoint;
use super::TruncatedSeries;
use crate::counting::TriangleDp;
use crate::{Error, Result, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Which {
    L,
    D,
    F,
}

impl FromStr for Which {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L" | "l" => Ok(Which::L),
            "D" | "d" => Ok(Which::D),
            "F" | "f" => Ok(Which::F),
            other => Err(Error::Parse(other.to_string())),
        }
    }
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::L => "L",
            Which::D => "D",
            Which::F => "F",
        })
    }
}

#[inline]
fn tri_index(k: usize, l: usize) -> usize {
    l * (l + 1) / 2 + k
}

/// Triangles `f_1..=f_N` embedded into the scalar type `T`.
#[derive(Debug, Clone)]
pub struct GfData<T> {
    order: usize,
    // rows[n] holds f_n in triangle layout; rows[0] is empty.
    rows: Vec<Vec<T>>,
}

fn powers<T: Scalar>(x: &T, count: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(count);
    let mut p = T::one();
    for _ in 0..count {
        out.push(p.clone());
        p = p * x.clone();
    }
    out
}

impl<T: Scalar> GfData<T> {
    pub fn new(order: usize) -> Self {
        let mut rows = vec![Vec::new()];
        for tri in TriangleDp::<BigUint>::new().take(order) {
            rows.push(tri.cells().map(|(_, _, c)| T::from_count(c)).collect());
        }
        GfData { order, rows }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn f(&self, n: usize, k: usize, l: usize) -> &T {
        &self.rows[n][tri_index(k, l)]
    }

    pub fn l_series(&self, x: &T) -> TruncatedSeries<T> {
        let xp = powers(x, self.order + 1);
        let mut coeffs = vec![T::zero(); self.order + 1];
        for (n, slot) in coeffs.iter_mut().enumerate().skip(1) {
            let mut acc = T::zero();
            for (k, p) in xp.iter().enumerate().take(n) {
                let f = self.f(n, k, n - 1);
                if !f.is_zero() {
                    acc = acc + f.clone() * p.clone();
                }
            }
            *slot = acc;
        }
        TruncatedSeries::from_coeffs(coeffs, self.order)
    }

    pub fn d_series(&self, x: &T) -> TruncatedSeries<T> {
        let xp = powers(x, self.order + 1);
        let mut coeffs = vec![T::zero(); self.order + 1];
        for (n, slot) in coeffs.iter_mut().enumerate().skip(2) {
            let mut acc = T::zero();
            for (l, p) in xp.iter().enumerate().take(n - 1) {
                acc = acc + self.f(n, l, l).clone() * p.clone();
            }
            *slot = acc;
        }
        TruncatedSeries::from_coeffs(coeffs, self.order)
    }

    /// Column polynomials in `x`, reusable across many `y` values.
    pub fn f_columns(&self, x: &T) -> FColumns<T> {
        let xp = powers(x, self.order + 1);
        let cols = (0..=self.order)
            .map(|n| {
                (0..n)
                    .map(|l| {
                        let mut acc = T::zero();
                        for (k, p) in xp.iter().enumerate().take(l + 1) {
                            let f = self.f(n, k, l);
                            if !f.is_zero() {
                                acc = acc + f.clone() * p.clone();
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        FColumns {
            order: self.order,
            cols,
        }
    }

    pub fn f_series(&self, x: &T, y: &T) -> TruncatedSeries<T> {
        self.f_columns(x).at(y)
    }

    pub fn series(&self, which: Which, point: &ParamPoint<T>) -> TruncatedSeries<T> {
        match which {
            Which::L => self.l_series(&point.x),
            Which::D => self.d_series(&point.x),
            Which::F => self.f_series(&point.x, &point.y),
        }
    }
}

/// `cols[n][l] = Σ_k f_n(k, l) x^k` for a fixed `x`.
#[derive(Debug, Clone)]
pub struct FColumns<T> {
    order: usize,
    cols: Vec<Vec<T>>,
}

impl<T: Scalar> FColumns<T> {
    /// `F(x, y; q)` at the stored `x`.
    pub fn at(&self, y: &T) -> TruncatedSeries<T> {
        let yp = powers(y, self.order + 1);
        let coeffs = self
            .cols
            .iter()
            .map(|col| {
                col.iter()
                    .zip(&yp)
                    .fold(T::zero(), |acc, (c, p)| acc + c.clone() * p.clone())
            })
            .collect();
        TruncatedSeries::from_coeffs(coeffs, self.order)
    }
}

/// Builds `L`, `D` or `F` at a parameter point from the recurrence data.
pub fn assemble_from_dp<T: Scalar>(
    which: Which,
    point: &ParamPoint<T>,
    order: usize,
) -> Result<TruncatedSeries<T>> {
    if order == 0 {
        return Err(Error::Domain("assembly needs order >= 1".into()));
    }
    Ok(GfData::new(order).series(which, point))
}
