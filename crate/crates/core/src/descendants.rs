//! Descendant colored Jones invariants `DJ^{(m)}`.
//!
//! The cyclotomic expansion twisted by `q^{km}`, evaluated in several
//! forms, from colored polynomials to values at roots of unity. Also the two-parameter `5_2` family `DJ_{a,b}` and its
//! linear relations with `DJ^{(0)}, DJ^{(1)}, DJ^{(2)}`.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::{
    habiro_reduce, q_pochhammer, zeta_pochhammer, BivariateLaurent, CyclotomicField, CyclotomicNumber,
    HabiroTruncation, LaurentPolynomial,
};
use crate::error::{Error, Result};
use crate::expansion::{kernel_cnk, kernel_x, HabiroSequence};
use crate::report::{Report, ReportLine};

/// How a descendant is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescendantMode {
    /// Color `n >= 1`, giving a Laurent polynomial.
    Colored(u32),
    /// Symbolic in `x`, as the terms `k < kmax`.
    Symbolic(u32),
    /// `n = 0`, modulo `(q;q)_level`.
    Habiro(u32),
    /// `n = 0` at a primitive `N`-th root of unity.
    Root(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Laurent(LaurentPolynomial),
    Terms(Vec<BivariateLaurent>),
    Habiro(HabiroTruncation),
    Cyclotomic(CyclotomicNumber),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescendantValue {
    pub knot: String,
    pub m: i64,
    pub mode: DescendantMode,
    pub payload: Payload,
}

/// `DJ^{(m)}_n(q) = sum_{k<n} c_{n,k}(q) H_k(q) q^{km}`.
pub fn dj_colored(seq: &HabiroSequence, m: i64, n: u32) -> Result<LaurentPolynomial> {
    if n == 0 {
        return Err(Error::InvalidParameter(String::from(
            "colored descendants need n >= 1; use the Habiro or root modes for n = 0",
        )));
    }
    let hs = seq.prefix(n as usize)?;
    Ok(hs
        .iter()
        .enumerate()
        .map(|(k, h)| (&kernel_cnk(n, k as u32) * h).shift(k as i64 * m))
        .sum())
}

/// The terms `c_k(x,q) H_k(q) q^{km}` for `k < kmax`.
pub fn dj_x(seq: &HabiroSequence, m: i64, kmax: u32) -> Result<Vec<BivariateLaurent>> {
    let hs = seq.prefix(kmax as usize)?;
    Ok(hs
        .iter()
        .enumerate()
        .map(|(k, h)| (&kernel_x(k as u32) * &BivariateLaurent::from_laurent(h)).shift(k as i64 * m, 0))
        .collect())
}

/// `DJ^{(m)}(q) = sum_k (q;q)_k (q^{-1};q^{-1})_k H_k q^{km}` modulo `(q;q)_level`.
pub fn dj_habiro(seq: &HabiroSequence, m: i64, level: u32) -> Result<HabiroTruncation> {
    let hs = seq.prefix(level as usize)?;
    let sum: LaurentPolynomial = hs
        .iter()
        .enumerate()
        .map(|(k, h)| {
            let kk = k as u32;
            let weight = &q_pochhammer(1, 1, kk) * &q_pochhammer(-1, -1, kk);
            (&weight * h).shift(k as i64 * m)
        })
        .sum();
    habiro_reduce(&sum, level)
}

/// `DJ^{(m)}(zeta_N)`; at `m = 0` this is the Kashaev invariant.
pub fn dj_eval_root(seq: &HabiroSequence, m: i64, order: u32) -> Result<CyclotomicNumber> {
    let field = CyclotomicField::new(order);
    let terms = habiro_terms_at_root(seq, &field)?;
    let mut acc = CyclotomicNumber::zero(&field);
    for (k, t) in terms.iter().enumerate() {
        acc = &acc + &(t * &CyclotomicNumber::zeta_pow(&field, k as i64 * m));
    }
    Ok(acc)
}

/// `(zeta;zeta)_k (zeta^{-1};zeta^{-1})_k H_k(zeta)` for `k < N`.
pub fn habiro_terms_at_root(seq: &HabiroSequence, field: &Arc<CyclotomicField>) -> Result<Vec<CyclotomicNumber>> {
    let n = field.order();
    let hs = seq.prefix(n as usize)?;
    let one = CyclotomicNumber::one(field);
    let mut weight = one.clone();
    let mut out = Vec::with_capacity(n as usize);
    for (k, h) in hs.iter().enumerate() {
        if k > 0 {
            let zk = CyclotomicNumber::zeta_pow(field, k as i64);
            weight = &weight * &(&(&one - &zk) * &(&one - &zk.conj()));
        }
        out.push(&weight * &h.eval_zeta(field, 1));
    }
    Ok(out)
}

/// Recovers the Habiro terms at `zeta_N` from `DJ^{(m)}(zeta_N)`, `m < N`,
/// by discrete Fourier inversion.
pub fn fourier_recover(seq: &HabiroSequence, order: u32) -> Result<Vec<CyclotomicNumber>> {
    let field = CyclotomicField::new(order);
    let values: Vec<CyclotomicNumber> = (0..order as i64)
        .map(|m| dj_eval_root(seq, m, order))
        .collect::<Result<_>>()?;
    let inv_n = CyclotomicNumber::from_ratio(&field, 1, i64::from(order));
    Ok((0..order as i64)
        .map(|k| {
            let mut acc = CyclotomicNumber::zero(&field);
            for (m, v) in values.iter().enumerate() {
                acc = &acc + &(v * &CyclotomicNumber::zeta_pow(&field, -k * m as i64));
            }
            &acc * &inv_n
        })
        .collect())
}

/// Evaluates in any mode.
pub fn descendant(seq: &HabiroSequence, m: i64, mode: DescendantMode) -> Result<DescendantValue> {
    let payload = match mode {
        DescendantMode::Colored(n) => Payload::Laurent(dj_colored(seq, m, n)?),
        DescendantMode::Symbolic(kmax) => Payload::Terms(dj_x(seq, m, kmax)?),
        DescendantMode::Habiro(level) => Payload::Habiro(dj_habiro(seq, m, level)?),
        DescendantMode::Root(order) => Payload::Cyclotomic(dj_eval_root(seq, m, order)?),
    };
    Ok(DescendantValue {
        knot: seq.knot(),
        m,
        mode,
        payload,
    })
}

/// The mirror descendant through `DJ^{K*,(m)}(x,q) = DJ^{K,(-m)}(x^{-1},q^{-1})`.
pub fn mirror_descendant(seq: &HabiroSequence, m: i64, mode: DescendantMode) -> Result<DescendantValue> {
    let base = descendant(seq, -m, mode)?;
    let payload = match base.payload {
        Payload::Laurent(p) => Payload::Laurent(p.invert_q()),
        Payload::Terms(ts) => Payload::Terms(ts.iter().map(|t| t.invert_q().invert_x()).collect()),
        Payload::Habiro(h) => Payload::Habiro(h.invert_q()),
        Payload::Cyclotomic(z) => Payload::Cyclotomic(z.conj()),
    };
    Ok(DescendantValue {
        knot: seq.mirror().knot(),
        m,
        mode,
        payload,
    })
}

fn dj_ab_exponent(a: i64, b: i64, k: i64, l: i64) -> Result<i64> {
    let twice = (2 * k + l + 1) * l;
    if twice % 2 != 0 {
        return Err(Error::NonIntegralExponent(alloc::format!("-({twice})/2 at k = {k}, l = {l}")));
    }
    Ok(-twice / 2 + a * k + b * l)
}

/// `DJ_{a,b}` of `5_2` at `zeta_N`:
/// `sum_{k,l} (-1)^l q^{-(2k+l+1)l/2 + ak + bl} (q;q)_{k+l}^2 / (q;q)_l`.
pub fn dj_ab_52(a: i64, b: i64, order: u32) -> Result<CyclotomicNumber> {
    let field = CyclotomicField::new(order);
    let zeta = CyclotomicNumber::zeta(&field);
    let n = order as usize;
    let poch: Vec<CyclotomicNumber> = (0..n).map(|j| zeta_pochhammer(&zeta, j as u32)).collect();
    let poch_inv: Vec<CyclotomicNumber> = poch.iter().map(|p| p.inv()).collect::<Result<_>>()?;
    let mut acc = CyclotomicNumber::zero(&field);
    for k in 0..n {
        for l in 0..n - k {
            let e = dj_ab_exponent(a, b, k as i64, l as i64)?;
            let mut t = &(&poch[k + l] * &poch[k + l]) * &poch_inv[l];
            t = &t * &CyclotomicNumber::zeta_pow(&field, e);
            acc = if l % 2 == 0 { &acc + &t } else { &acc - &t };
        }
    }
    Ok(acc)
}

/// `DJ_{a,b}` of `5_2` modulo `(q;q)_level`.
pub fn dj_ab_52_habiro(a: i64, b: i64, level: u32) -> Result<HabiroTruncation> {
    let mut sum = LaurentPolynomial::zero();
    for k in 0..level {
        for l in 0..level - k {
            let e = dj_ab_exponent(a, b, i64::from(k), i64::from(l))?;
            // (q;q)_{k+l}^2 / (q;q)_l = (q;q)_{k+l} (q^{l+1};q)_k
            let t = &q_pochhammer(1, 1, k + l) * &q_pochhammer(i64::from(l) + 1, 1, k);
            let t = t.shift(e);
            if l % 2 == 0 {
                sum += &t;
            } else {
                sum -= &t;
            }
        }
    }
    habiro_reduce(&sum, level)
}

/// One of the five `5_2` relations in their given normalization
/// `DJ_{a,b} ~ c0 DJ^{(0)} + c1 DJ^{(1)} + c2 DJ^{(2)} + constant`.
#[derive(Clone, Debug)]
pub struct Identity52 {
    pub a: i64,
    pub b: i64,
    pub coefficients: [LaurentPolynomial; 3],
    pub constant: LaurentPolynomial,
}

impl Identity52 {
    /// Right-hand side for the double sum as defined above: the given
    /// homogeneous part picks up one factor of `q`, the constant does not.
    pub fn normalized_rhs<T>(&self, dj: &[T; 3], lift: impl Fn(&LaurentPolynomial) -> T) -> T
    where
        T: Clone + core::ops::Add<Output = T> + core::ops::Mul<Output = T>,
    {
        let q = LaurentPolynomial::q_pow(1);
        let mut acc = lift(&self.constant);
        for (c, d) in self.coefficients.iter().zip(dj) {
            acc = acc + lift(&(&q * c)) * d.clone();
        }
        acc
    }
}

/// The five relations with coefficients as given, before normalization.
pub fn identities_52() -> [Identity52; 5] {
    let lp = |t: &[(i64, i64)]| LaurentPolynomial::from_terms(t.iter().copied());
    let id = |a, b, c0: LaurentPolynomial, c1, c2, k| Identity52 {
        a,
        b,
        coefficients: [c0, c1, c2],
        constant: k,
    };
    let zero = LaurentPolynomial::zero;
    [
        id(1, 0, lp(&[(0, 3), (-1, -1)]), lp(&[(0, 1), (1, -3)]), lp(&[(2, 1)]), zero()),
        id(-1, 0, lp(&[(1, 3)]), lp(&[(2, -3)]), lp(&[(3, 1)]), zero()),
        id(
            1,
            -1,
            lp(&[(0, 3), (-2, 1), (-1, -1)]),
            lp(&[(0, 1), (-1, -1), (1, -3)]),
            lp(&[(2, 1)]),
            lp(&[(-2, -1), (-1, 1)]),
        ),
        id(0, -1, lp(&[(0, -1)]), lp(&[(1, 1)]), zero(), lp(&[(0, 1)])),
        id(-1, -1, lp(&[(1, 2)]), lp(&[(2, -1)]), zero(), zero()),
    ]
}

/// Where the five relations are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckTarget {
    Level(u32),
    Root(u32),
}

/// Checks the five `DJ_{a,b}` relations at a truncation level or root of unity.
pub fn verify_52_identities(target: CheckTarget) -> Result<Report> {
    let seq = HabiroSequence::builtin("5_2")?;
    let mut report = Report::new();
    match target {
        CheckTarget::Level(level) => {
            let dj = [
                dj_habiro(&seq, 0, level)?,
                dj_habiro(&seq, 1, level)?,
                dj_habiro(&seq, 2, level)?,
            ];
            for ident in identities_52() {
                let lhs = dj_ab_52_habiro(ident.a, ident.b, level)?;
                let rhs = ident.normalized_rhs(&dj, |p| habiro_reduce(p, level).expect("positive level"));
                report.push(ReportLine::new(
                    lhs == rhs,
                    "5_2",
                    alloc::format!("a={},b={}", ident.a, ident.b),
                    alloc::format!("level={level}"),
                    lhs.representative(),
                    rhs.representative(),
                ));
            }
        }
        CheckTarget::Root(order) => {
            let field = CyclotomicField::new(order);
            let dj = [
                dj_eval_root(&seq, 0, order)?,
                dj_eval_root(&seq, 1, order)?,
                dj_eval_root(&seq, 2, order)?,
            ];
            for ident in identities_52() {
                let lhs = dj_ab_52(ident.a, ident.b, order)?;
                let rhs = ident.normalized_rhs(&dj, |p| p.eval_zeta(&field, 1));
                report.push(ReportLine::new(
                    lhs == rhs,
                    "5_2",
                    alloc::format!("a={},b={}", ident.a, ident.b),
                    alloc::format!("N={order}"),
                    &lhs,
                    &rhs,
                ));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(t: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(t.iter().copied())
    }

    #[test]
    fn colored_examples() {
        let fig8 = HabiroSequence::builtin("4_1").unwrap();
        assert_eq!(
            dj_colored(&fig8, 0, 2).unwrap(),
            lp(&[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)])
        );
        let trefoil = HabiroSequence::builtin("3_1").unwrap();
        assert!(dj_colored(&trefoil, 7, 1).unwrap().is_one());
        let expect = &LaurentPolynomial::one() + &(&kernel_cnk(2, 1) * &lp(&[(3, -1)]));
        assert_eq!(dj_colored(&trefoil, 1, 2).unwrap(), expect);
    }

    #[test]
    fn kashaev_values_of_figure_eight() {
        let fig8 = HabiroSequence::builtin("4_1").unwrap();
        for (n, v) in [(1, 1), (2, 5), (3, 13)] {
            let field = CyclotomicField::new(n);
            assert_eq!(dj_eval_root(&fig8, 0, n).unwrap(), CyclotomicNumber::from_integer(&field, v));
        }
    }

    #[test]
    fn habiro_examples() {
        let fig8 = HabiroSequence::builtin("4_1").unwrap();
        assert!(dj_habiro(&fig8, 3, 1).unwrap().representative().is_one());
        let direct = &(&LaurentPolynomial::one() + &(&q_pochhammer(1, 1, 1) * &q_pochhammer(-1, -1, 1)))
            + &(&q_pochhammer(1, 1, 2) * &q_pochhammer(-1, -1, 2));
        assert_eq!(dj_habiro(&fig8, 0, 3).unwrap(), habiro_reduce(&direct, 3).unwrap());
    }

    #[test]
    fn dj_ab_small_cases() {
        assert!(dj_ab_52(0, 0, 1).unwrap().is_one());
        assert!(dj_ab_52_habiro(0, 0, 1).unwrap().representative().is_one());
    }

    #[test]
    fn given_identities_hold_after_normalization() {
        assert!(verify_52_identities(CheckTarget::Root(5)).unwrap().all_pass());
        assert!(verify_52_identities(CheckTarget::Level(6)).unwrap().all_pass());
    }
}
