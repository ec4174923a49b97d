use djones_core::descendants::{
    descendant, dj_colored, dj_eval_root, dj_habiro, dj_x, fourier_recover, habiro_terms_at_root,
    mirror_descendant, verify_52_identities, CheckTarget, DescendantMode,
};
use djones_core::expansion::{jones_from_habiro, HabiroSequence};
use djones_core::{CyclotomicField, CyclotomicNumber, LaurentPolynomial};

fn knots() -> Vec<HabiroSequence> {
    ["3_1", "4_1", "5_2"].iter().map(|k| HabiroSequence::builtin(k).unwrap()).collect()
}

#[test]
fn descendant_zero_is_colored_jones() {
    for seq in knots() {
        for n in 1..=8 {
            assert_eq!(dj_colored(&seq, 0, n).unwrap(), jones_from_habiro(&seq, n).unwrap());
        }
    }
}

#[test]
fn symbolic_terms_specialize_to_colored_values() {
    for seq in knots() {
        for m in -2..=3 {
            let terms = dj_x(&seq, m, 7).unwrap();
            for n in 1..=6u32 {
                let sum: LaurentPolynomial = terms.iter().map(|t| t.substitute_x_power(i64::from(n))).sum();
                assert_eq!(sum, dj_colored(&seq, m, n).unwrap(), "{} m={m} n={n}", seq.knot());
            }
        }
    }
}

#[test]
fn truncation_levels_are_coherent() {
    for seq in knots() {
        for m in -1..=2 {
            let top = dj_habiro(&seq, m, 9).unwrap();
            for level in 1..9 {
                assert_eq!(top.reduce_to(level).unwrap(), dj_habiro(&seq, m, level).unwrap());
            }
        }
    }
}

#[test]
fn truncation_evaluates_to_root_values() {
    for seq in knots() {
        for order in 1..=6u32 {
            let field = CyclotomicField::new(order);
            for m in -2..=2 {
                let trunc = dj_habiro(&seq, m, order).unwrap();
                assert_eq!(trunc.eval_root(&field).unwrap(), dj_eval_root(&seq, m, order).unwrap());
            }
        }
    }
}

#[test]
fn kashaev_values_of_the_figure_eight() {
    let seq = HabiroSequence::builtin("4_1").unwrap();
    for (order, expected) in [(1u32, 1i64), (2, 5), (3, 13)] {
        let field = CyclotomicField::new(order);
        let one = CyclotomicNumber::one(&field);
        // Direct finite sum of |(zeta;zeta)_k|^2.
        let mut oracle = CyclotomicNumber::zero(&field);
        let mut w = one.clone();
        for k in 0..order {
            if k > 0 {
                let z = CyclotomicNumber::zeta_pow(&field, i64::from(k));
                w = &w * &(&(&one - &z) * &(&one - &z.conj()));
            }
            oracle = &oracle + &w;
        }
        let got = dj_eval_root(&seq, 0, order).unwrap();
        assert_eq!(got, oracle);
        assert_eq!(got, CyclotomicNumber::from_integer(&field, expected));
    }
}

#[test]
fn fourier_inversion_recovers_habiro_terms() {
    for seq in knots() {
        for order in [3u32, 5] {
            let field = CyclotomicField::new(order);
            assert_eq!(fourier_recover(&seq, order).unwrap(), habiro_terms_at_root(&seq, &field).unwrap());
        }
    }
}

#[test]
fn mirror_descendants_match_mirrored_data() {
    for seq in knots() {
        let mirror = seq.mirror();
        for m in -3..=3 {
            for mode in [
                DescendantMode::Colored(5),
                DescendantMode::Habiro(6),
                DescendantMode::Root(5),
                DescendantMode::Symbolic(4),
            ] {
                let a = mirror_descendant(&seq, m, mode).unwrap();
                let b = descendant(&mirror, m, mode).unwrap();
                assert_eq!(a.payload, b.payload, "{} m={m} {mode:?}", seq.knot());
            }
        }
    }
}

#[test]
fn trefoil_is_chiral() {
    let seq = HabiroSequence::builtin("3_1").unwrap();
    assert_ne!(dj_colored(&seq, 0, 3).unwrap(), dj_colored(&seq.mirror(), 0, 3).unwrap());
}

#[test]
fn five_two_identities_at_levels_and_roots() {
    for target in [CheckTarget::Level(10), CheckTarget::Level(20), CheckTarget::Root(5), CheckTarget::Root(7)] {
        let report = verify_52_identities(target).unwrap();
        assert_eq!(report.len(), 5);
        assert!(report.all_pass(), "{report}");
    }
}
