use djones::formats::*;
use djones_core::expansion::{jones_from_habiro, HabiroSequence};
use djones_core::qdiff::builtin_relation;
use djones_core::rmatrix::r_spectral;
use djones_core::statesum::builtin;
use djones_core::{BivariateLaurent, CyclotomicField, CyclotomicNumber};

fn data(name: &str) -> String {
    std::fs::read_to_string(format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn shipped_diagrams_match_builtins() {
    assert_eq!(diagram_from_str(&data("4_1.json")).unwrap(), builtin::figure_eight());
    assert_eq!(diagram_from_str(&data("4_1_alt.json")).unwrap(), builtin::figure_eight_alt());
    assert_eq!(diagram_from_str(&data("3_1.json")).unwrap(), builtin::trefoil());
}

#[test]
fn diagram_round_trip() {
    for d in [builtin::figure_eight(), builtin::figure_eight_with_curls(), builtin::unknot()] {
        let text = diagram_to_string(&d).unwrap();
        assert_eq!(diagram_from_str(&text).unwrap(), d);
    }
}

#[test]
fn diagram_errors() {
    let writhe = r#"{"strands_max": 3, "slices": [
        {"event": "cup", "pos": 1}, {"event": "X4+", "pos": 1},
        {"event": "X4+", "pos": 0}, {"event": "cap", "pos": 0}]}"#;
    assert!(diagram_from_str(writhe).is_err());
    let labels = data("4_1.json").replacen("\"u\",\n        \"d\"", "\"d\",\n        \"u\"", 1);
    assert!(diagram_from_str(&labels).is_err());
    let narrow = data("4_1.json").replace("\"strands_max\": 3", "\"strands_max\": 2");
    assert!(diagram_from_str(&narrow).is_err());
    assert!(diagram_from_str(&data("4_1.json").replace("X1+", "X9+")).is_err());
}

#[test]
fn habiro_file_round_trip() {
    let seq = HabiroSequence::builtin("5_2").unwrap();
    let hs = seq.prefix(6).unwrap();
    let text = habiro_file_to_string(&hs);
    let back = habiro_file_from_str("5_2", &text).unwrap();
    assert_eq!(back.prefix(6).unwrap(), hs);
    assert_eq!(jones_from_habiro(&back, 5).unwrap(), jones_from_habiro(&seq, 5).unwrap());
}

#[test]
fn operator_and_bivariate_round_trip() {
    for knot in ["3_1", "4_1", "5_2"] {
        let rel = builtin_relation(knot).unwrap();
        assert_eq!(operator_from_json(&operator_to_json(&rel.lhs)).unwrap(), rel.lhs);
        assert_eq!(bivariate_from_json(&bivariate_to_json(&rel.rhs)).unwrap(), rel.rhs);
    }
    let big = BivariateLaurent::from_terms([((3, -2), num_bigint::BigInt::from(10u8).pow(40))]);
    assert_eq!(bivariate_from_json(&bivariate_to_json(&big)).unwrap(), big);
}

#[test]
fn matrix_round_trip() {
    let f = CyclotomicField::new(3);
    let r = r_spectral(&CyclotomicNumber::from_ratio(&f, 2, 5), 1, 2).unwrap().matrix;
    assert_eq!(matrix_from_json(&matrix_to_json(&r)).unwrap(), r);
}
