use djones_core::expansion::{habiro_from_jones, jones_from_habiro, HabiroSequence};
use djones_core::qdiff::QDiffOperator;
use djones_core::algebra::{
    double_angle, habiro_reduce, q_pochhammer, BivariateLaurent, CyclotomicField, CyclotomicNumber,
    LaurentPolynomial,
};
use num_rational::BigRational;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((-6i64..7, -9i64..10), 0..6).prop_map(LaurentPolynomial::from_terms)
}

fn cyclo(order: u32) -> impl Strategy<Value = CyclotomicNumber> {
    prop::collection::vec((-7i64..8, 1i64..5), 1..8).prop_map(move |cs| {
        let f = CyclotomicField::new(order);
        let coeffs: Vec<BigRational> = cs.into_iter().map(|(n, d)| BigRational::new(n.into(), d.into())).collect();
        CyclotomicNumber::from_coefficients(&f, &coeffs)
    })
}

fn operator() -> impl Strategy<Value = QDiffOperator> {
    prop::collection::vec((-2i64..3, -2i64..3, -2i64..3, -2i64..3, -3i64..4), 1..4).prop_map(|ts| {
        ts.into_iter()
            .map(|(qe, xe, a, b, c)| QDiffOperator::term(BivariateLaurent::from_terms([((qe, xe), c)]), a, b))
            .fold(QDiffOperator::zero(), |acc, t| &acc + &t)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a.clone());
        }
        prop_assert_eq!(a.invert_q().invert_q(), a);
    }

    #[test]
    fn cyclotomic_field_laws((a, b, c) in (1u32..10).prop_flat_map(|o| (cyclo(o), cyclo(o), cyclo(o)))) {
        prop_assert!((&(&a * &b) * &c) == (&a * &(&b * &c)));
        prop_assert!((&a * &(&b + &c)) == (&(&a * &b) + &(&a * &c)));
        prop_assert!(a.conj().conj() == a);
        prop_assert!((&a * &b).conj() == &a.conj() * &b.conj());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn habiro_reduction_kills_the_ideal(p in laurent(), g in laurent(), level in 1u32..6) {
        let ideal = q_pochhammer(1, 1, level);
        let shifted = &p + &(&g * &ideal);
        prop_assert_eq!(habiro_reduce(&p, level).unwrap(), habiro_reduce(&shifted, level).unwrap());
    }

    #[test]
    fn habiro_levels_are_compatible(p in laurent(), a in 1u32..7, b in 1u32..7) {
        let (hi, lo) = (a.max(b), a.min(b));
        let via = habiro_reduce(&p, hi).unwrap().reduce_to(lo).unwrap();
        prop_assert_eq!(via, habiro_reduce(&p, lo).unwrap());
    }

    #[test]
    fn habiro_reduction_is_a_ring_map(p in laurent(), r in laurent(), level in 1u32..6) {
        let hp = habiro_reduce(&p, level).unwrap();
        let hr = habiro_reduce(&r, level).unwrap();
        prop_assert_eq!(&hp * &hr, habiro_reduce(&(&p * &r), level).unwrap());
        prop_assert_eq!(&hp + &hr, habiro_reduce(&(&p + &r), level).unwrap());
    }

    #[test]
    fn operator_product_is_associative(a in operator(), b in operator(), c in operator()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn double_angle_sums_a_geometric_series(order in 1u32..9, num in -9i64..10, den in 1i64..6) {
        let f = CyclotomicField::new(order);
        let x = CyclotomicNumber::from_ratio(&f, num, den);
        let one = CyclotomicNumber::one(&f);
        let lhs = &(&CyclotomicNumber::from_integer(&f, order) * &(&one - &x)) * &double_angle(&x, order);
        prop_assert!(lhs == &one - &x.pow(i64::from(order)).unwrap());
    }

    #[test]
    fn supplied_sequences_round_trip(hs in prop::collection::vec(laurent(), 1..5)) {
        let seq = HabiroSequence::supplied("random", hs.clone());
        let count = hs.len() as u32;
        let jones: Vec<LaurentPolynomial> = (1..=count).map(|n| jones_from_habiro(&seq, n).unwrap()).collect();
        for (k, h) in hs.iter().enumerate() {
            prop_assert_eq!(&habiro_from_jones(&jones, k as u32).unwrap(), h);
        }
    }
}
