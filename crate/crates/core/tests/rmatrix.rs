use djones_core::rmatrix::{
    gauge_limit_oracle, r_at_one, r_spectral, rmatrix_suite, w_eval, yang_baxter_holds, YangBaxterContext,
};
use djones_core::{CyclotomicField, CyclotomicNumber};
use num_rational::BigRational;
use std::time::Instant;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn pairs() -> Vec<(BigRational, BigRational)> {
    vec![(q(2, 1), q(3, 1)), (q(-3, 2), q(5, 7))]
}

#[test]
fn full_suite_small_orders() {
    for order in [2, 3] {
        let t = Instant::now();
        let report = rmatrix_suite(order, &pairs()).unwrap();
        assert!(report.all_pass(), "{report}");
        eprintln!("N={order}: {} checks in {:?}", report.len(), t.elapsed());
    }
}

#[test]
fn full_suite_order_four() {
    let t = Instant::now();
    let report = rmatrix_suite(4, &pairs()).unwrap();
    assert!(report.all_pass(), "{report}");
    eprintln!("N=4: {} checks in {:?}", report.len(), t.elapsed());
}

#[test]
fn yang_baxter_detects_a_wrong_spectral_product() {
    let f = CyclotomicField::new(3);
    let x = CyclotomicNumber::from_ratio(&f, 2, 1);
    let y = CyclotomicNumber::from_ratio(&f, 3, 1);
    let a = r_spectral(&x, 0, 1).unwrap().matrix;
    let c = r_spectral(&y, 1, 2).unwrap().matrix;
    let good = r_spectral(&(&x * &y), 0, 2).unwrap().matrix;
    let bad = r_spectral(&(&x + &y), 0, 2).unwrap().matrix;
    assert!(yang_baxter_holds(&a, &good, &c));
    assert!(!yang_baxter_holds(&a, &bad, &c));
}

#[test]
fn closed_form_context_at_one() {
    let f = CyclotomicField::new(3);
    let ctx = YangBaxterContext::new(&f, None).unwrap();
    assert!(ctx.check(0, 1, 2));
    let x = CyclotomicNumber::from_ratio(&f, 5, 3);
    assert_eq!(gauge_limit_oracle(&x, 1, 2).unwrap(), r_at_one(1, 2, &f).matrix);
}

#[test]
fn w_quasi_periodicity_with_rational_base() {
    let f = CyclotomicField::new(5);
    let one = CyclotomicNumber::one(&f);
    let x = CyclotomicNumber::from_ratio(&f, -4, 3);
    for k in -6..6 {
        let lhs = &(&one - &x.pow(5).unwrap()) * &w_eval(&x, k + 5).unwrap();
        assert_eq!(lhs, w_eval(&x, k).unwrap());
    }
}
