//! Truncated formal power series in `q`.
//!
//! A [`TruncatedSeries`] of order `N` stores `c_0..=c_N` and represents its
//! class modulo `q^{N+1}`. Binary operations require equal orders.

mod closed;
mod gf;
mod identity;

pub use closed::{
    catalan_root, closed_form, d_closed, f11_closed, f1y_closed, fx1_closed, l_closed,
    sqrt_one_minus_4q,
};
pub use gf::{assemble_from_dp, FColumns, GfData, Which};
pub use identity::{
    check_f11_closed, check_identity, check_kernel_roots, check_l_last, sample_schedule,
    verify_identity, verify_with, Form, Identity, KernelReport, Params, ParamPoint, VerifyFailure, VerifyReport,
    BASE_SAMPLES,
};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::{Error, Rational, Result, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncatedSeries<T> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    pub fn constant(c: T, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    /// `c q^power`, which is zero when `power > order`.
    pub fn monomial(c: T, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// The variable `q`.
    pub fn q(order: usize) -> Self {
        Self::monomial(T::one(), 1, order)
    }

    /// Pads with zeros or drops terms beyond `order`.
    pub fn from_coeffs(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        TruncatedSeries { coeffs }
    }

    /// The polynomial `Σ poly[i] q^i` truncated to `order`.
    pub fn poly(poly: &[T], order: usize) -> Self {
        Self::from_coeffs(poly.iter().take(order + 1).cloned().collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drops terms above `order`; `order` must not exceed the current one.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise the order of a truncated series");
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    /// Cauchy product modulo `q^{N+1}`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![T::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Product with the polynomial `Σ poly[i] q^i`, in `O(N · deg)`.
    pub fn mul_poly(&self, poly: &[T]) -> Self {
        let n = self.order();
        let mut out = vec![T::zero(); n + 1];
        for (d, p) in poly.iter().enumerate().take(n + 1) {
            if p.is_zero() {
                continue;
            }
            for i in 0..=n - d {
                if !self.coeffs[i].is_zero() {
                    out[i + d] = out[i + d].clone() + p.clone() * self.coeffs[i].clone();
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn scale(&self, c: &T) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn recip(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let n = self.order();
        let inv0 = T::one() / a0.clone();
        let mut out: Vec<T> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for m in 1..=n {
            let mut acc = T::zero();
            for k in 1..=m {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc = acc + a.clone() * out[m - k].clone();
                }
            }
            out.push(-(acc * inv0.clone()));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `self / other`.
    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.recip()?)
    }

    /// Division by the polynomial `Σ poly[i] q^i`, whose constant term must be
    /// nonzero. Runs in `O(N · deg)`.
    pub fn div_poly(&self, poly: &[T]) -> Result<Self> {
        let p0 = poly.first().cloned().unwrap_or_else(T::zero);
        if p0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let n = self.order();
        let mut out: Vec<T> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let mut acc = self.coeffs[m].clone();
            for (d, p) in poly.iter().enumerate().skip(1).take(m) {
                if !p.is_zero() {
                    acc = acc - p.clone() * out[m - d].clone();
                }
            }
            out.push(acc / p0.clone());
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Exact division by `q`; the result has order `N - 1`.
    pub fn div_q(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.order() == 0 {
            return Err(Error::NotInvertible);
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Square root with constant term 1 of a series with constant term 1,
    /// by Newton iteration `s <- (s + a / s) / 2`, doubling the number of
    /// correct coefficients per step.
    pub fn sqrt_unit(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Domain("sqrt_unit needs constant term 1".into()));
        }
        let target = self.order() + 1;
        let two = T::one() + T::one();
        let mut s = TruncatedSeries::one(0);
        let mut precision = 1;
        while precision < target {
            precision = (2 * precision).min(target);
            let order = precision - 1;
            let s_ext = TruncatedSeries::from_coeffs(s.coeffs, order);
            let a = self.truncated(order);
            let quotient = a.try_mul(&s_ext.recip()?)?;
            s = s_ext.try_add(&quotient)?.scale(&(T::one() / two.clone()));
        }
        Ok(s)
    }

    /// Newton steps [`sqrt_unit`](Self::sqrt_unit) performs at this order:
    /// `ceil(log2(N + 1))`.
    pub fn newton_steps(order: usize) -> usize {
        let target = order + 1;
        let mut p = 1;
        let mut steps = 0;
        while p < target {
            p *= 2;
            steps += 1;
        }
        steps
    }
}

impl<T: Scalar> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        self.try_add(rhs).expect("series orders must match")
    }
}

impl<T: Scalar> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        self.try_sub(rhs).expect("series orders must match")
    }
}

impl<T: Scalar> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        self.try_mul(rhs).expect("series orders must match")
    }
}

impl<T: Scalar> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn neg(self) -> TruncatedSeries<T> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Scalar> fmt::Display for TruncatedSeries<T> {
    /// Renders `c0 + c1 q + c2 q^2 + …`, skipping zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let unit = magnitude == "1";
            let needs_parens = magnitude.contains('/') && i > 0;
            match i {
                0 => f.write_str(&magnitude)?,
                _ => {
                    if !unit {
                        if needs_parens {
                            write!(f, "({magnitude})")?;
                        } else {
                            f.write_str(&magnitude)?;
                        }
                    }
                    if i == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{i}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let err = || Error::Parse(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// `"p/q"` in lowest terms, denominator always written.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl TruncatedSeries<Rational> {
    /// JSON array of coefficient strings `"p/q"` in index order.
    pub fn to_json(&self) -> String {
        let strings: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        serde_json::to_string(&strings).expect("serializable")
    }

    pub fn from_json(json: &str) -> Result<Self> {
        let strings: Vec<String> =
            serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        if strings.is_empty() {
            return Err(Error::Parse("empty coefficient list".into()));
        }
        let coeffs = strings
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncatedSeries { coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{F64Series, RationalSeries};
    use num_traits::One;
    use proptest::prelude::*;

    fn r(num: i64, den: i64) -> Rational {
        Rational::ratio(num, den)
    }

    fn ints(v: &[i64], order: usize) -> RationalSeries {
        RationalSeries::from_coeffs(v.iter().map(|&x| r(x, 1)).collect(), order)
    }

    #[test]
    fn small_products() {
        let a = ints(&[1, 1], 4);
        let b = ints(&[1, -1], 4);
        assert_eq!(&a * &b, ints(&[1, 0, -1], 4));
        let geom = RationalSeries::from_coeffs((0..=8).map(|i| r(1 << i, 1)).collect(), 8);
        assert_eq!(&ints(&[1, -2], 8) * &geom, RationalSeries::one(8));
        assert_eq!(ints(&[1, -2], 8).recip().unwrap(), geom);
        assert_eq!(ints(&[1, -1], 5).recip().unwrap(), ints(&[1; 6], 5));
    }

    #[test]
    fn order_mismatch_and_zero_constant() {
        let a = RationalSeries::one(3);
        let b = RationalSeries::one(4);
        assert_eq!(a.try_add(&b), Err(Error::OrderMismatch(3, 4)));
        assert!(a.try_mul(&b).is_err());
        assert_eq!(RationalSeries::q(3).recip(), Err(Error::NotInvertible));
        assert!(RationalSeries::one(3).div_poly(&[r(0, 1), r(1, 1)]).is_err());
    }

    #[test]
    fn div_poly_matches_recip() {
        let a = ints(&[3, -1, 4, 1, -5, 9, 2], 6);
        let p = [r(2, 3), r(-1, 1), r(5, 7)];
        let via_recip = a.try_div(&RationalSeries::poly(&p, 6)).unwrap();
        assert_eq!(a.div_poly(&p).unwrap(), via_recip);
        assert_eq!(a.mul_poly(&p), &a * &RationalSeries::poly(&p, 6));
    }

    #[test]
    fn newton_step_count() {
        assert_eq!(RationalSeries::newton_steps(0), 0);
        assert_eq!(RationalSeries::newton_steps(1), 1);
        assert_eq!(RationalSeries::newton_steps(5), 3);
        assert_eq!(RationalSeries::newton_steps(7), 3);
        assert_eq!(RationalSeries::newton_steps(8), 4);
    }

    #[test]
    fn sqrt_rejects_non_unit() {
        assert!(ints(&[4, 1], 3).sqrt_unit().is_err());
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(ints(&[1, -2, -2, -4], 3).to_string(), "1 - 2q - 2q^2 - 4q^3");
        assert_eq!(ints(&[0, 1, 1, 2], 3).to_string(), "q + q^2 + 2q^3");
        assert_eq!(RationalSeries::zero(2).to_string(), "0");
        let s = RationalSeries::from_coeffs(vec![r(-1, 2), r(0, 1), r(3, 4)], 2);
        assert_eq!(s.to_string(), "-1/2 + (3/4)q^2");
    }

    #[test]
    fn json_coefficients() {
        let s = RationalSeries::from_coeffs(vec![r(1, 1), r(-2, 4), r(0, 1)], 2);
        let json = s.to_json();
        assert_eq!(json, r#"["1/1","-1/2","0/1"]"#);
        assert_eq!(RationalSeries::from_json(&json).unwrap(), s);
        assert!(RationalSeries::from_json("[]").is_err());
        assert!(RationalSeries::from_json(r#"["1/0"]"#).is_err());
        assert_eq!(parse_rational("-6/4").unwrap(), r(-3, 2));
        assert_eq!(parse_rational("5").unwrap(), r(5, 1));
    }

    #[test]
    fn float_series_agrees_approximately() {
        let a = F64Series::from_coeffs(vec![1.0, -4.0], 10);
        let s = a.sqrt_unit().unwrap();
        let sq = &s * &s;
        for (i, c) in sq.coeffs().iter().enumerate() {
            let expect = if i == 0 { 1.0 } else if i == 1 { -4.0 } else { 0.0 };
            assert!((c - expect).abs() < 1e-9);
        }
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rational::ratio(n, d))
    }

    fn series(order: usize) -> impl Strategy<Value = RationalSeries> {
        prop::collection::vec(rational(), order + 1)
            .prop_map(move |c| RationalSeries::from_coeffs(c, order))
    }

    fn unit_series(order: usize) -> impl Strategy<Value = RationalSeries> {
        series(order).prop_map(|mut s| {
            s.coeffs[0] = Rational::one();
            s
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn ring_laws(a in series(12), b in series(12), c in series(12)) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn recip_is_inverse(a in series(12)) {
            prop_assume!(!a.coeff(0).is_zero());
            let inv = a.recip().unwrap();
            prop_assert_eq!(&a * &inv, RationalSeries::one(12));
            prop_assert_eq!(inv.recip().unwrap(), a);
        }

        #[test]
        fn sqrt_squares_back(a in unit_series(12)) {
            let s = a.sqrt_unit().unwrap();
            prop_assert!(s.coeff(0).is_one());
            prop_assert_eq!(&s * &s, a);
        }
    }
}
