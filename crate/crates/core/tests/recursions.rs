use djones_core::expansion::HabiroSequence;
use djones_core::qdiff::{builtin_relation, span_reduction_check_52, verify_relation, RelationMode};

fn check(knot: &str, ms: std::ops::RangeInclusive<i64>, ns: std::ops::RangeInclusive<u32>) {
    let seq = HabiroSequence::builtin(knot).unwrap();
    let rel = builtin_relation(knot).unwrap();
    let ms: Vec<i64> = ms.collect();
    let report = verify_relation(&seq, &rel, &ms, &RelationMode::Colored(ns.collect())).unwrap();
    assert!(report.all_pass(), "{report}");
    let habiro = verify_relation(&seq, &rel, &ms, &RelationMode::Habiro(8)).unwrap();
    assert!(habiro.all_pass(), "{habiro}");
}

#[test]
fn trefoil_recursion_grid() {
    check("3_1", -4..=5, 1..=8);
}

#[test]
fn figure_eight_recursion_grid() {
    check("4_1", -5..=5, 1..=8);
}

#[test]
fn five_two_recursion_grid() {
    check("5_2", 0..=5, 1..=6);
}

#[test]
fn mirror_relation_is_not_satisfied_by_the_original_trefoil() {
    // the relation is chiral: the mirror sequence must fail somewhere
    let seq = HabiroSequence::builtin("3_1*").unwrap();
    let rel = builtin_relation("3_1").unwrap();
    let report = verify_relation(&seq, &rel, &[0, 1], &RelationMode::Colored(vec![2, 3])).unwrap();
    assert!(!report.all_pass());
}

#[test]
fn five_two_span_reduction() {
    let report = span_reduction_check_52(6).unwrap();
    assert!(report.all_pass(), "{report}");
    assert!(report.len() > 10);
}
