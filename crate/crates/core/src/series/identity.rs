//! Residual checks for the functional equations satisfied by `L`, `D`, `F`.
//!
//! Every check forms `left - right` as a truncated series in `q`, with the
//! unknown generating functions assembled from the recurrence data and every
//! closed form expanded exactly. An identity holds to order `N` when the
//! residual vanishes.
//!
//! Parameters are sampled at rational points. The `q^n` coefficient of each
//! residual is a polynomial of degree at most `n + 2` in each parameter, so
//! `N + 3` distinct samples per parameter certify the identity through
//! `q^N`; two-parameter identities are checked on the full product grid.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use super::closed::{catalan_root, f11_closed, l_closed, tail_poly};
use super::gf::{FColumns, GfData};
use super::TruncatedSeries;
use crate::closedform;
use crate::{Error, Result, Scalar};

/// Values for the formal parameters `x` and `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamPoint<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> ParamPoint<T> {
    pub fn new(x: T, y: T) -> Self {
        ParamPoint { x, y }
    }

    pub fn x_only(x: T) -> Self {
        ParamPoint { x, y: T::one() }
    }

    pub fn y_only(y: T) -> Self {
        ParamPoint { x: T::one(), y }
    }
}

impl<T: Scalar> fmt::Display for ParamPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={}, y={}", self.x, self.y)
    }
}

/// Which parameters an identity depends on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Params {
    X,
    Y,
    XY,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `L(x;q) = q(1-q)^2 / ((1-2q)(1-xq))`
    GGf,
    /// `(1-xq)(1-x+xq) L(x;q) = q(1-xq) L(1;q) + q(1-q)(1-x)`
    FuncG,
    /// `D(x;q) = D(0;q) / (1-xq)`
    D1,
    /// `D(x;q) = q F(1,1;q) / (1-xq)`
    D2,
    /// `F(x,1;q) = (1-q) F(1,1;q) / (1-xq)`
    FX1,
    /// The functional equation for `F(x,y;q)`.
    FXY,
    /// `F(1,y;q)` in terms of `F(1,1;q)`.
    F1Y,
}

impl Identity {
    pub const ALL: [Identity; 7] = [
        Identity::GGf,
        Identity::FuncG,
        Identity::D1,
        Identity::D2,
        Identity::FX1,
        Identity::FXY,
        Identity::F1Y,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::GGf => "G-gf",
            Identity::FuncG => "func-G",
            Identity::D1 => "D-1",
            Identity::D2 => "D-2",
            Identity::FX1 => "F-x1",
            Identity::FXY => "F-xy",
            Identity::F1Y => "F-1y",
        }
    }

    pub fn params(self) -> Params {
        match self {
            Identity::FXY => Params::XY,
            Identity::F1Y => Params::Y,
            _ => Params::X,
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// How a residual is formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Form {
    /// Both sides multiplied through by every denominator in `x`, `y` and
    /// `q`, so any parameter value is admissible.
    #[default]
    Cleared,
    /// Left side minus right side as written, dividing where the identity
    /// divides. Points where a divisor vanishes are rejected.
    AsStated,
}

/// Default leading sample values for `x` and `y`.
pub const BASE_SAMPLES: [(i64, i64); 8] = [
    (0, 1),
    (1, 2),
    (-1, 1),
    (2, 3),
    (3, 1),
    (5, 7),
    (-2, 5),
    (7, 4),
];

/// `count` distinct rationals `(num, den)`: [`BASE_SAMPLES`] first, then
/// `±p/d` for `d = 1, 2, …` and `1 <= p <= 4d`, in that order. With
/// `exclude_one`, the value 1 is skipped.
pub fn sample_schedule(count: usize, exclude_one: bool) -> Vec<(i64, i64)> {
    let mut out: Vec<(i64, i64)> = Vec::with_capacity(count);
    let push = |v: (i64, i64), out: &mut Vec<(i64, i64)>| {
        if out.len() < count && !(exclude_one && v == (1, 1)) && !out.contains(&v) {
            out.push(v);
        }
    };
    for v in BASE_SAMPLES {
        push(v, &mut out);
    }
    let mut den = 1i64;
    while out.len() < count {
        for p in 1..=4 * den {
            if p.gcd(&den) == 1 {
                push((p, den), &mut out);
                push((-p, den), &mut out);
            }
        }
        den += 1;
    }
    out
}

fn c<T: Scalar>(v: i64) -> T {
    T::from_i64(v)
}

type S<T> = TruncatedSeries<T>;

/// Series that every residual reuses.
struct Shared<'a, T> {
    data: &'a GfData<T>,
    f11: S<T>,
    l1: S<T>,
    d0: S<T>,
    ones: FColumns<T>,
}

impl<'a, T: Scalar> Shared<'a, T> {
    fn new(data: &'a GfData<T>) -> Self {
        let one = T::one();
        let ones = data.f_columns(&one);
        Shared {
            data,
            f11: ones.at(&one),
            l1: data.l_series(&one),
            d0: data.d_series(&T::zero()),
            ones,
        }
    }

    fn order(&self) -> usize {
        self.data.order()
    }

    fn poly(&self, p: &[T]) -> S<T> {
        S::poly(p, self.order())
    }

    fn residual(
        &self,
        id: Identity,
        form: Form,
        point: &ParamPoint<T>,
        x_columns: Option<&FColumns<T>>,
    ) -> Result<S<T>> {
        let (x, y) = (&point.x, &point.y);
        let one = T::one();
        let q = [T::zero(), T::one()];
        let one_minus_xq = [c(1), -x.clone()];
        let n = self.order();
        Ok(match (id, form) {
            (Identity::GGf, Form::Cleared) => {
                let lhs = self
                    .data
                    .l_series(x)
                    .mul_poly(&[c(1), c(-2)])
                    .mul_poly(&one_minus_xq);
                &lhs - &self.poly(&[c(0), c(1), c(-2), c(1)])
            }
            (Identity::GGf, Form::AsStated) => &self.data.l_series(x) - &l_closed(x, n),
            (Identity::FuncG, _) => {
                let lhs = self
                    .data
                    .l_series(x)
                    .mul_poly(&one_minus_xq)
                    .mul_poly(&[one.clone() - x.clone(), x.clone()]);
                let a = self.l1.mul_poly(&q).mul_poly(&one_minus_xq);
                let omx = one.clone() - x.clone();
                let b = self.poly(&[c(0), omx.clone(), -omx]);
                &(&lhs - &a) - &b
            }
            (Identity::D1, Form::Cleared) => {
                &self.data.d_series(x).mul_poly(&one_minus_xq) - &self.d0
            }
            (Identity::D1, Form::AsStated) => {
                &self.data.d_series(x) - &self.d0.div_poly(&one_minus_xq)?
            }
            (Identity::D2, Form::Cleared) => {
                &self.data.d_series(x).mul_poly(&one_minus_xq) - &self.f11.mul_poly(&q)
            }
            (Identity::D2, Form::AsStated) => {
                &self.data.d_series(x) - &self.f11.mul_poly(&q).div_poly(&one_minus_xq)?
            }
            (Identity::FX1, form) => {
                let fx1 = match x_columns {
                    Some(cols) => cols.at(&one),
                    None => self.data.f_series(x, &one),
                };
                let rhs = self.f11.mul_poly(&[c(1), c(-1)]);
                match form {
                    Form::Cleared => &fx1.mul_poly(&one_minus_xq) - &rhs,
                    Form::AsStated => &fx1 - &rhs.div_poly(&one_minus_xq)?,
                }
            }
            (Identity::FXY, form) => {
                let fxy = match x_columns {
                    Some(cols) => cols.at(y),
                    None => self.data.f_series(x, y),
                };
                let f1y = self.ones.at(y);
                let one_minus_2yq = [c(1), c::<T>(-2) * y.clone()];
                let one_minus_xyq = [c(1), -(x.clone() * y.clone())];
                let omx = one.clone() - x.clone();
                let omy = one.clone() - y.clone();
                let tail = self.poly(&tail_poly(y));
                match form {
                    Form::Cleared => {
                        let kernel = [
                            omx.clone() * omy.clone(),
                            x.clone() * omy.clone() + y.clone() * omx.clone(),
                        ];
                        let lhs = fxy
                            .mul_poly(&kernel)
                            .mul_poly(&one_minus_2yq)
                            .mul_poly(&one_minus_xyq);
                        let t1 = f1y
                            .mul_poly(&[T::zero(), omy.clone()])
                            .mul_poly(&one_minus_2yq)
                            .mul_poly(&one_minus_xyq);
                        let t2 = self
                            .f11
                            .mul_poly(&[T::zero(), omx.clone(), -omx.clone()])
                            .mul_poly(&one_minus_2yq);
                        let t3 = tail.mul_poly(&[T::zero(), omx * omy]);
                        &(&(&lhs - &t1) - &t2) - &t3
                    }
                    Form::AsStated => {
                        if omx.is_zero() || omy.is_zero() {
                            return Err(Error::Singular(format!("F-xy at {point}")));
                        }
                        let a = x.clone() / omx.clone() + y.clone() / omy.clone();
                        let lhs = fxy.mul_poly(&[c(1), a]);
                        let t1 = f1y.mul_poly(&q).scale(&(one.clone() / omx));
                        let t2 = self
                            .f11
                            .mul_poly(&[T::zero(), c(1), c(-1)])
                            .scale(&(one.clone() / omy))
                            .div_poly(&one_minus_xyq)?;
                        let t3 = tail
                            .mul_poly(&q)
                            .div_poly(&one_minus_2yq)?
                            .div_poly(&one_minus_xyq)?;
                        &(&(&lhs - &t1) - &t2) - &t3
                    }
                }
            }
            (Identity::F1Y, form) => {
                let f1y = self.ones.at(y);
                let omy = one.clone() - y.clone();
                let kernel = [omy.clone(), y.clone() * y.clone()];
                let one_minus_2yq = [c(1), c::<T>(-2) * y.clone()];
                let tail = self.poly(&tail_poly(y)).mul_poly(&[T::zero(), omy.clone()]);
                let f11q = self.f11.mul_poly(&q);
                match form {
                    Form::Cleared => {
                        let lhs = f1y
                            .mul_poly(&[c(1), c(-1)])
                            .mul_poly(&one_minus_2yq)
                            .mul_poly(&kernel);
                        let t1 = f11q.mul_poly(&[c(1), c(-1)]).mul_poly(&one_minus_2yq);
                        &(&lhs - &t1) - &tail
                    }
                    Form::AsStated => {
                        if omy.is_zero() {
                            return Err(Error::Singular(format!("F-1y at {point}")));
                        }
                        let t1 = f11q.div_poly(&kernel)?;
                        let t2 = tail
                            .div_poly(&[c(1), c(-1)])?
                            .div_poly(&one_minus_2yq)?
                            .div_poly(&kernel)?;
                        &(&f1y - &t1) - &t2
                    }
                }
            }
        })
    }
}

/// Residual of one identity at one point; zero iff it holds to `order`.
pub fn check_identity<T: Scalar>(
    id: Identity,
    point: &ParamPoint<T>,
    order: usize,
    form: Form,
) -> Result<TruncatedSeries<T>> {
    if order == 0 {
        return Err(Error::Domain("identity checks need order >= 1".into()));
    }
    let data = GfData::new(order);
    Shared::new(&data).residual(id, form, point, None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyFailure {
    pub point: String,
    pub first_nonzero: usize,
    pub coefficient: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub identity: Identity,
    pub order: usize,
    pub samples_per_param: usize,
    pub points: usize,
    pub failures: Vec<VerifyFailure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `id` over `samples` values per parameter (the full grid for
/// `F-xy`). With [`Form::AsStated`], singular values are left out of the
/// schedule rather than reported.
pub fn verify_identity<T: Scalar>(
    id: Identity,
    order: usize,
    samples: usize,
    form: Form,
) -> Result<VerifyReport> {
    verify_with(&GfData::<T>::new(order), id, samples, form)
}

/// [`verify_identity`] over precomputed data.
pub fn verify_with<T: Scalar>(
    data: &GfData<T>,
    id: Identity,
    samples: usize,
    form: Form,
) -> Result<VerifyReport> {
    if data.order() == 0 {
        return Err(Error::Domain("identity checks need order >= 1".into()));
    }
    let shared = Shared::new(data);
    let exclude_one = form == Form::AsStated && matches!(id, Identity::FXY | Identity::F1Y);
    let schedule: Vec<T> = sample_schedule(samples, exclude_one)
        .into_iter()
        .map(|(p, q)| T::ratio(p, q))
        .collect();
    let mut failures = Vec::new();
    let mut points = 0;
    let mut record = |point: &ParamPoint<T>, residual: S<T>| {
        points += 1;
        if let Some(i) = residual.first_nonzero() {
            failures.push(VerifyFailure {
                point: point.to_string(),
                first_nonzero: i,
                coefficient: residual.coeff(i).to_string(),
            });
        }
    };
    match id.params() {
        Params::X => {
            for x in &schedule {
                let point = ParamPoint::x_only(x.clone());
                record(&point, shared.residual(id, form, &point, None)?);
            }
        }
        Params::Y => {
            for y in &schedule {
                let point = ParamPoint::y_only(y.clone());
                record(&point, shared.residual(id, form, &point, None)?);
            }
        }
        Params::XY => {
            for x in &schedule {
                let cols = data.f_columns(x);
                for y in &schedule {
                    let point = ParamPoint::new(x.clone(), y.clone());
                    record(&point, shared.residual(id, form, &point, Some(&cols))?);
                }
            }
        }
    }
    Ok(VerifyReport {
        identity: id,
        order: data.order(),
        samples_per_param: schedule.len(),
        points,
        failures,
    })
}

/// Outcome of the kernel-root checks.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelReport<T> {
    pub order: usize,
    /// `(description, passed)` per check.
    pub checks: Vec<(String, bool)>,
    /// Leading coefficients of the root `y1`.
    pub catalan_prefix: Vec<T>,
}

impl<T> KernelReport<T> {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Verifies the kernel roots and what substituting them yields:
///
/// 1. `x = 1/(1-q)` solves `1 - x + xq = 0`, and substituting it into the
///    right side of the `L` functional equation gives zero with `L(1;q)`
///    from the recurrences;
/// 2. `y1 = (1 - sqrt(1-4q)) / (2q)` solves `1 - y + y^2 q = 0`, and
///    substituting it into the right side of the `F(1,y;q)` equation gives
///    zero with `F(1,1;q)` from the recurrences;
/// 3. for each sampled `y != 1`, `x = (1-y+yq)/(1-y-q+2yq)` annihilates the
///    bivariate kernel, and the right side of the cleared `F(x,y;q)`
///    equation vanishes there.
pub fn check_kernel_roots<T: Scalar>(order: usize, y_samples: usize) -> Result<KernelReport<T>> {
    if order == 0 {
        return Err(Error::Domain("kernel checks need order >= 1".into()));
    }
    let data = GfData::<T>::new(order);
    let shared = Shared::new(&data);
    let n = order;
    let poly = |p: &[T]| S::poly(p, n);
    let one_s = S::<T>::one(n);
    let q_s = S::<T>::q(n);
    let mut checks = Vec::new();

    // x = 1/(1-q)
    let x = poly(&[c(1), c(-1)]).recip()?;
    let kernel = &(&one_s - &x) + &(&x * &q_s);
    checks.push(("1 - x + xq = 0 at x = 1/(1-q)".to_string(), kernel.is_zero()));
    let rhs = &(&(&q_s * &(&one_s - &(&x * &q_s))) * &shared.l1)
        + &(&poly(&[c(0), c(1), c(-1)]) * &(&one_s - &x));
    checks.push((
        "q(1-xq)L(1;q) + q(1-q)(1-x) = 0 at x = 1/(1-q)".to_string(),
        rhs.is_zero(),
    ));

    // y1 = (1 - sqrt(1-4q)) / (2q)
    let y1 = catalan_root::<T>(n);
    let kernel = &(&one_s - &y1) + &(&(&y1 * &y1) * &q_s);
    checks.push(("1 - y + y^2 q = 0 at y = y1".to_string(), kernel.is_zero()));
    let two_y1_q = &y1.mul_poly(&[c(0), c(2)]);
    let y1_sq = &y1 * &y1;
    let tail = &(&(&poly(&[c(1), c(-1)]) - two_y1_q) + &y1.mul_poly(&[c(0), c(0), c(2)]))
        + &y1_sq.mul_poly(&[c(0), c(0), c(1)]);
    let frac = (&(&one_s - &y1) * &tail)
        .mul_poly(&q_s.coeffs()[..2])
        .div_poly(&[c(1), c(-1)])?
        .try_div(&(&one_s - two_y1_q))?;
    let rhs = &shared.f11.mul_poly(&[c(0), c(1)]) + &frac;
    checks.push((
        "qF(1,1;q) + q(1-y)(...)/((1-q)(1-2yq)) = 0 at y = y1".to_string(),
        rhs.is_zero(),
    ));

    // bivariate kernel at sampled y
    let mut kernel_ok = true;
    let mut rhs_ok = true;
    for (p, d) in sample_schedule(y_samples, true) {
        let y = T::ratio(p, d);
        let omy = T::one() - y.clone();
        let top = [omy.clone(), y.clone()];
        let bottom = [omy.clone(), c::<T>(2) * y.clone() - T::one()];
        let xy = poly(&top).div_poly(&bottom)?;
        let k = &poly(&top) - &xy.mul_poly(&bottom);
        kernel_ok &= k.is_zero();

        let one_minus_2yq = [c(1), c::<T>(-2) * y.clone()];
        let one_minus_xyq = &one_s - &xy.mul_poly(&[T::zero(), y.clone()]);
        let omx = &one_s - &xy;
        let t1 = (&shared.ones.at(&y) * &one_minus_xyq)
            .mul_poly(&[T::zero(), omy.clone()])
            .mul_poly(&one_minus_2yq);
        let t2 = (&shared.f11 * &omx)
            .mul_poly(&[T::zero(), c(1), c(-1)])
            .mul_poly(&one_minus_2yq);
        let t3 = (&poly(&tail_poly(&y)) * &omx).mul_poly(&[T::zero(), omy]);
        rhs_ok &= (&(&t1 + &t2) + &t3).is_zero();
    }
    checks.push((
        "bivariate kernel vanishes at x = (1-y+yq)/(1-y-q+2yq)".to_string(),
        kernel_ok,
    ));
    checks.push((
        "cleared F(x,y;q) right side vanishes on the kernel".to_string(),
        rhs_ok,
    ));

    Ok(KernelReport {
        order,
        checks,
        catalan_prefix: y1.coeffs().iter().take(6).cloned().collect(),
    })
}

/// Indices `n <= order` where the closed form of `F(1,1;q)` disagrees with
/// `a279561(n)` (constant term must be 0).
pub fn check_f11_closed<T: Scalar>(order: usize) -> Vec<usize> {
    let f = f11_closed::<T>(order);
    (0..=order)
        .filter(|&n| {
            let expect = if n == 0 {
                T::zero()
            } else {
                T::from_count(&closedform::a279561(n).expect("n >= 1"))
            };
            *f.coeff(n) != expect
        })
        .collect()
}

/// Indices `n <= order` where `L(1;q)` from its closed form disagrees with
/// `pow2_last(n)`.
pub fn check_l_last<T: Scalar>(order: usize) -> Vec<usize> {
    let l = l_closed(&T::one(), order);
    (0..=order)
        .filter(|&n| {
            let expect = if n == 0 {
                T::zero()
            } else {
                T::from_count(&closedform::pow2_last(n).expect("n >= 1"))
            };
            *l.coeff(n) != expect
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(p: i64, q: i64) -> Rational {
        Rational::ratio(p, q)
    }

    #[test]
    fn schedule_is_distinct_and_extends() {
        let s = sample_schedule(43, false);
        assert_eq!(s.len(), 43);
        assert_eq!(&s[..8], &BASE_SAMPLES);
        let vals: Vec<Rational> = s.iter().map(|&(p, q)| r(p, q)).collect();
        for i in 0..vals.len() {
            for j in 0..i {
                assert_ne!(vals[i], vals[j]);
            }
        }
        assert!(s.contains(&(1, 1)));
        assert!(!sample_schedule(43, true).contains(&(1, 1)));
        assert_eq!(sample_schedule(3, false), &BASE_SAMPLES[..3]);
    }

    #[test]
    fn names_round_trip() {
        for id in Identity::ALL {
            assert_eq!(id.name().parse::<Identity>().unwrap(), id);
        }
        assert!("nope".parse::<Identity>().is_err());
    }

    #[test]
    fn single_points() {
        let p = ParamPoint::x_only(r(2, 3));
        assert!(check_identity(Identity::FuncG, &p, 40, Form::Cleared).unwrap().is_zero());
        let p = ParamPoint::new(r(1, 2), r(1, 3));
        assert!(check_identity(Identity::FXY, &p, 30, Form::Cleared).unwrap().is_zero());
        assert!(check_identity(Identity::FXY, &p, 30, Form::AsStated).unwrap().is_zero());
        let p = ParamPoint::x_only(r(0, 1));
        assert!(check_identity(Identity::D1, &p, 20, Form::AsStated).unwrap().is_zero());
    }

    #[test]
    fn singular_points_rejected_as_stated() {
        let p = ParamPoint::new(r(1, 1), r(1, 3));
        assert!(matches!(
            check_identity(Identity::FXY, &p, 10, Form::AsStated),
            Err(Error::Singular(_))
        ));
        assert!(check_identity(Identity::FXY, &p, 10, Form::Cleared).unwrap().is_zero());
        let p = ParamPoint::y_only(r(1, 1));
        assert!(matches!(
            check_identity(Identity::F1Y, &p, 10, Form::AsStated),
            Err(Error::Singular(_))
        ));
    }

    #[test]
    fn broken_data_is_detected() {
        // Perturbing the closed side must leave a nonzero residual.
        let data = GfData::<Rational>::new(12);
        let shared = Shared::new(&data);
        let x = r(2, 3);
        let good = shared
            .residual(Identity::GGf, Form::AsStated, &ParamPoint::x_only(x.clone()), None)
            .unwrap();
        assert!(good.is_zero());
        let wrong = &data.l_series(&x) - &l_closed(&r(3, 4), 12);
        assert_eq!(wrong.first_nonzero(), Some(2));
    }

    #[test]
    fn all_identities_small_order() {
        for id in Identity::ALL {
            for form in [Form::Cleared, Form::AsStated] {
                let rep = verify_identity::<Rational>(id, 12, 15, form).unwrap();
                assert!(rep.passed(), "{id} {form:?}: {:?}", rep.failures);
                let expect = if id == Identity::FXY { 225 } else { 15 };
                assert_eq!(rep.points, expect);
            }
        }
    }

    #[test]
    fn kernel_roots() {
        let rep = check_kernel_roots::<Rational>(20, 8).unwrap();
        assert!(rep.passed(), "{:?}", rep.checks);
        let cat: Vec<Rational> = [1, 1, 2, 5, 14, 42].iter().map(|&v| r(v, 1)).collect();
        assert_eq!(rep.catalan_prefix, cat);
    }

    #[test]
    fn closed_coefficients() {
        assert!(check_f11_closed::<Rational>(30).is_empty());
        assert!(check_l_last::<Rational>(30).is_empty());
    }
}
