use djones_core::expansion::{habiro_from_jones, habiro_recursion_52, jones_from_habiro, HabiroSequence};
use djones_core::LaurentPolynomial;

fn round_trip(knot: &str, kmax: u32) {
    let seq = HabiroSequence::builtin(knot).unwrap();
    let jones: Vec<LaurentPolynomial> = (1..=kmax + 1).map(|n| jones_from_habiro(&seq, n).unwrap()).collect();
    for k in 0..=kmax {
        assert_eq!(habiro_from_jones(&jones, k).unwrap(), seq.h(k as usize).unwrap(), "{knot} k = {k}");
    }
}

#[test]
fn trefoil_round_trip_to_20() {
    round_trip("3_1", 20);
}

#[test]
fn figure_eight_round_trip_to_20() {
    round_trip("4_1", 20);
}

#[test]
fn five_two_round_trip_to_20() {
    round_trip("5_2", 20);
}

#[test]
fn five_two_providers_agree_to_30() {
    let closed = HabiroSequence::builtin("5_2").unwrap();
    let rec = HabiroSequence::recursion_52();
    let a = closed.prefix(31).unwrap();
    let b = rec.prefix(31).unwrap();
    assert_eq!(a, b);
    assert_eq!(habiro_recursion_52(30), a[30]);
}

#[test]
fn triangular_solve_agrees_with_gamma_inversion() {
    // J_n = sum_{k<n} c_{n,k} H_k is triangular with c_{n,n-1} invertible up to a
    // polynomial factor, which gives an independent route to H_{n-1}.
    use djones_core::expansion::kernel_cnk;
    let seq = HabiroSequence::builtin("5_2").unwrap();
    let mut hs: Vec<LaurentPolynomial> = Vec::new();
    for n in 1..=8u32 {
        let j = jones_from_habiro(&seq, n).unwrap();
        let mut rest = j.clone();
        for (k, h) in hs.iter().enumerate() {
            rest -= &(&kernel_cnk(n, k as u32) * h);
        }
        hs.push(rest.div_exact(&kernel_cnk(n, n - 1)).unwrap());
    }
    assert_eq!(hs, seq.prefix(8).unwrap());
}
