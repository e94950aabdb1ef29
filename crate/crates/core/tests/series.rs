use num_traits::{ToPrimitive, Zero};

use invseq::closedform;
use invseq::series::{
    assemble_from_dp, catalan_root, check_f11_closed, check_identity, check_l_last, f11_closed,
    l_closed, sqrt_one_minus_4q, Form, GfData, Identity, ParamPoint, Which,
};
use invseq::{F64Series, Rational, RationalSeries, Scalar};

fn r(p: i64, q: i64) -> Rational {
    Rational::ratio(p, q)
}

#[test]
fn l_matches_closed_form_at_seven_points() {
    let data = GfData::<Rational>::new(40);
    for x in [r(0, 1), r(1, 1), r(1, 2), r(-1, 1), r(2, 3), r(3, 1), r(5, 7)] {
        assert_eq!(data.l_series(&x), l_closed(&x, 40), "x = {x}");
    }
}

#[test]
fn final_identities_to_order_fifty() {
    assert!(check_f11_closed::<Rational>(50).is_empty());
    assert!(check_l_last::<Rational>(50).is_empty());
    let f = f11_closed::<Rational>(50);
    let dp = assemble_from_dp(Which::F, &ParamPoint::new(r(1, 1), r(1, 1)), 30).unwrap();
    for n in 1..=30 {
        assert_eq!(f.coeff(n), dp.coeff(n));
        assert_eq!(
            *f.coeff(n),
            Rational::from_count(&closedform::a279561(n).unwrap())
        );
    }
}

#[test]
fn sqrt_contract_many_orders() {
    for n in 0..=50 {
        let s = sqrt_one_minus_4q::<Rational>(n);
        let sq = &s * &s;
        assert!(sq.coeffs().iter().enumerate().all(|(i, c)| match i {
            0 => *c == r(1, 1),
            1 => *c == r(-4, 1),
            _ => c.is_zero(),
        }));
    }
    let y1 = catalan_root::<Rational>(10);
    let cat = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
    for (i, &c) in cat.iter().enumerate() {
        assert_eq!(*y1.coeff(i), r(c, 1));
    }
}

#[test]
fn documented_residual_examples() {
    let func_g = check_identity(Identity::FuncG, &ParamPoint::x_only(r(2, 3)), 40, Form::Cleared);
    assert!(func_g.unwrap().is_zero());
    let fxy = check_identity(
        Identity::FXY,
        &ParamPoint::new(r(1, 2), r(1, 3)),
        30,
        Form::Cleared,
    );
    assert!(fxy.unwrap().is_zero());
    let d1 = check_identity(Identity::D1, &ParamPoint::x_only(r(0, 1)), 25, Form::AsStated);
    assert!(d1.unwrap().is_zero());
}

#[test]
fn d_assembly_excludes_corner_cell() {
    let d = assemble_from_dp(Which::D, &ParamPoint::x_only(r(1, 1)), 6).unwrap();
    // Σ_{l <= n-2} f_n(l,l): n=2 -> 1, n=3 -> f(0,0)+f(1,1) = 3
    assert_eq!(*d.coeff(1), r(0, 1));
    assert_eq!(*d.coeff(2), r(1, 1));
    assert_eq!(*d.coeff(3), r(3, 1));
}

#[test]
fn float_series_track_exact_ones() {
    let exact = f11_closed::<Rational>(15);
    let approx = f11_closed::<f64>(15);
    for n in 0..=15 {
        let e = exact.coeff(n).to_f64().unwrap();
        assert!((approx.coeff(n) - e).abs() <= 1e-6 * e.abs().max(1.0), "n = {n}");
    }
    let l = F64Series::from_coeffs(vec![1.0, -1.0], 5).recip().unwrap();
    assert!(l.coeffs().iter().all(|c| (c - 1.0).abs() < 1e-12));
}

#[test]
fn json_round_trip() {
    let s: RationalSeries = l_closed(&r(5, 7), 8);
    let back = RationalSeries::from_json(&s.to_json()).unwrap();
    assert_eq!(back, s);
    assert_eq!(back.to_json(), s.to_json());
}
