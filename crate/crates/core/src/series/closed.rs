//! Closed forms of the generating functions, expanded exactly.

use super::gf::Which;
use super::identity::ParamPoint;
use super::TruncatedSeries;
use crate::{Error, Result, Scalar};

fn c<T: Scalar>(v: i64) -> T {
    T::from_i64(v)
}

/// The series `s` with `s^2 = 1 - 4q` and `s(0) = 1`.
pub fn sqrt_one_minus_4q<T: Scalar>(order: usize) -> TruncatedSeries<T> {
    TruncatedSeries::poly(&[c(1), c(-4)], order)
        .sqrt_unit()
        .expect("constant term is 1")
}

/// `(1 - sqrt(1 - 4q)) / (2q)`, the root of `1 - y + y^2 q` that stays
/// finite at `q = 0`. Its coefficients are the Catalan numbers.
pub fn catalan_root<T: Scalar>(order: usize) -> TruncatedSeries<T> {
    let s = sqrt_one_minus_4q::<T>(order + 1);
    let numer = &TruncatedSeries::one(order + 1) - &s;
    numer
        .div_q()
        .expect("constant term cancels")
        .scale(&T::ratio(1, 2))
}

/// `q (1-q)^2 / ((1-2q)(1-xq))`.
pub fn l_closed<T: Scalar>(x: &T, order: usize) -> TruncatedSeries<T> {
    TruncatedSeries::poly(&[c(0), c(1), c(-2), c(1)], order)
        .div_poly(&[c(1), c(-2)])
        .and_then(|s| s.div_poly(&[c(1), -x.clone()]))
        .expect("unit constant terms")
}

/// `(1 - 4q + (1-2q) sqrt(1-4q)) / (2 (1-q)(1-4q)) - 1`.
pub fn f11_closed<T: Scalar>(order: usize) -> TruncatedSeries<T> {
    let s = sqrt_one_minus_4q::<T>(order);
    let numer = &TruncatedSeries::poly(&[c(1), c(-4)], order) + &s.mul_poly(&[c(1), c(-2)]);
    let ratio = numer
        .div_poly(&[c(2), c(-2)])
        .and_then(|t| t.div_poly(&[c(1), c(-4)]))
        .expect("unit constant terms");
    &ratio - &TruncatedSeries::one(order)
}

/// `q / (1 - xq) · F(1,1;q)`.
pub fn d_closed<T: Scalar>(x: &T, order: usize) -> TruncatedSeries<T> {
    f11_closed::<T>(order)
        .mul_poly(&[c(0), c(1)])
        .div_poly(&[c(1), -x.clone()])
        .expect("unit constant term")
}

/// `(1 - q) / (1 - xq) · F(1,1;q)`.
pub fn fx1_closed<T: Scalar>(x: &T, order: usize) -> TruncatedSeries<T> {
    f11_closed::<T>(order)
        .mul_poly(&[c(1), c(-1)])
        .div_poly(&[c(1), -x.clone()])
        .expect("unit constant term")
}

/// `1 - q - 2yq + 2yq^2 + y^2 q^2` as a polynomial in `q`.
pub(crate) fn tail_poly<T: Scalar>(y: &T) -> [T; 3] {
    let two = c::<T>(2);
    [
        c(1),
        c::<T>(-1) - two.clone() * y.clone(),
        two * y.clone() + y.clone() * y.clone(),
    ]
}

/// `q/(1-y+y^2 q) · F(1,1;q) + q(1-y)(1-q-2yq+2yq^2+y^2q^2) / ((1-q)(1-2yq)(1-y+y^2q))`.
///
/// Singular at `y = 1`, where `1 - y + y^2 q` is not invertible.
pub fn f1y_closed<T: Scalar>(y: &T, order: usize) -> Result<TruncatedSeries<T>> {
    let kernel = [T::one() - y.clone(), y.clone() * y.clone()];
    if kernel[0].is_zero() {
        return Err(Error::Singular("y = 1 in F(1,y;q)".into()));
    }
    let first = f11_closed::<T>(order)
        .mul_poly(&[c(0), c(1)])
        .div_poly(&kernel)?;
    let second = TruncatedSeries::poly(&tail_poly(y), order)
        .mul_poly(&[c(0), T::one() - y.clone()])
        .div_poly(&[c(1), c(-1)])?
        .div_poly(&[c(1), c::<T>(-2) * y.clone()])?
        .div_poly(&kernel)?;
    Ok(&first + &second)
}

/// Closed form for the requested generating function at a parameter point.
///
/// `F(x, y)` has one only on the lines `y = 1` or `x = 1`.
pub fn closed_form<T: Scalar>(
    which: Which,
    point: &ParamPoint<T>,
    order: usize,
) -> Result<TruncatedSeries<T>> {
    match which {
        Which::L => Ok(l_closed(&point.x, order)),
        Which::D => Ok(d_closed(&point.x, order)),
        Which::F => {
            if point.y.is_one() {
                Ok(fx1_closed(&point.x, order))
            } else if point.x.is_one() {
                f1y_closed(&point.y, order)
            } else {
                Err(Error::NoClosedForm(format!(
                    "F(x,y;q) at x = {}, y = {}",
                    point.x, point.y
                )))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rational, RationalSeries};

    fn ints(v: &[i64], order: usize) -> RationalSeries {
        RationalSeries::from_coeffs(v.iter().map(|&x| Rational::from_i64(x)).collect(), order)
    }

    #[test]
    fn sqrt_prefix() {
        let s = sqrt_one_minus_4q::<Rational>(5);
        assert_eq!(s, ints(&[1, -2, -2, -4, -10, -28], 5));
        for n in 0..=30 {
            let s = sqrt_one_minus_4q::<Rational>(n);
            assert_eq!(&s * &s, ints(&[1, -4], n));
        }
    }

    #[test]
    fn catalan() {
        assert_eq!(catalan_root::<Rational>(5), ints(&[1, 1, 2, 5, 14, 42], 5));
    }

    #[test]
    fn l_closed_values() {
        assert_eq!(
            l_closed(&Rational::from_i64(1), 6),
            ints(&[0, 1, 1, 2, 4, 8, 16], 6)
        );
        // x = 0: q(1-q)^2/(1-2q)
        let expect = ints(&[0, 1, -2, 1], 8).div_poly(&[Rational::from_i64(1), Rational::from_i64(-2)]).unwrap();
        assert_eq!(l_closed(&Rational::from_i64(0), 8), expect);
    }

    #[test]
    fn f11_prefix() {
        assert_eq!(f11_closed::<Rational>(6), ints(&[0, 1, 2, 6, 21, 77, 287], 6));
    }

    #[test]
    fn f_needs_a_unit_parameter() {
        let p = ParamPoint::new(Rational::ratio(1, 2), Rational::ratio(1, 3));
        assert!(matches!(closed_form(Which::F, &p, 5), Err(Error::NoClosedForm(_))));
        let p = ParamPoint::new(Rational::from_i64(1), Rational::from_i64(1));
        assert_eq!(closed_form(Which::F, &p, 6).unwrap(), f11_closed(6));
        assert!(f1y_closed(&Rational::from_i64(1), 5).is_err());
    }
}
