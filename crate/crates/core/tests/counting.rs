use num_bigint::BigUint;
use num_traits::{One, Zero};

use invseq::closedform;
use invseq::counting::{count_avoiders, stat_triangles, Method, TriangleDp};
use invseq::seqcore::Pattern;
use invseq::BigTriangle;

#[test]
fn row_sum_and_grand_total_laws() {
    for tri in TriangleDp::<BigUint>::new().take(200) {
        let n = tri.n();
        assert_eq!(tri.total(), closedform::a279561(n).unwrap(), "n = {n}");
        assert_eq!(tri.last_max_count(), closedform::pow2_last(n).unwrap(), "n = {n}");
    }
}

#[test]
fn shift_identity_on_diagonal() {
    let tris: Vec<BigTriangle> = stat_triangles(200);
    for n in 2..=200 {
        for k in 0..=n - 2 {
            assert_eq!(
                tris[n - 1].cell(k, k),
                tris[n - k - 1].cell(0, 0),
                "f_{n}({k},{k})"
            );
        }
    }
}

#[test]
fn support() {
    for tri in TriangleDp::<BigUint>::new().take(50) {
        let n = tri.n();
        for (k, l, c) in tri.cells() {
            let expect_zero = n >= 2 && (k, l) == (n - 2, n - 1);
            assert_eq!(c.is_zero(), expect_zero, "n={n} ({k},{l})");
        }
        assert_eq!(tri.get(1, 0), None);
        assert_eq!(tri.cell(0, n), BigUint::zero());
    }
}

#[test]
fn cubic_addition_count() {
    let mut dp = TriangleDp::<BigUint>::new();
    for n in 1..=120u64 {
        dp.next();
        assert!(dp.additions() <= n * n * n, "n = {n}: {}", dp.additions());
    }
    // 3/2 n^2 per row, so about n^3 / 2 in total.
    assert!(dp.additions() >= 120 * 120 * 120 / 3);
}

#[test]
fn small_table_values() {
    let t: BigTriangle = stat_triangles(3).pop().unwrap();
    assert_eq!(t.cell(0, 0), BigUint::from(2u32));
    assert_eq!(t.cell(2, 2), BigUint::one());
}

#[test]
fn classical_families() {
    let bell: Vec<u64> = vec![1, 2, 5, 15, 52, 203];
    let schroder: Vec<u64> = vec![1, 2, 6, 22, 90, 394];
    let p011 = [Pattern::parse("011").unwrap()];
    let p021 = [Pattern::parse("021").unwrap()];
    for n in 1..=6 {
        assert_eq!(count_avoiders(n, &p011, 9).unwrap(), BigUint::from(bell[n - 1]));
        assert_eq!(count_avoiders(n, &p021, 9).unwrap(), BigUint::from(schroder[n - 1]));
    }
}

#[test]
fn method_labels() {
    for m in Method::ALL {
        assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
    }
    assert!("all".parse::<Method>().is_err());
}
