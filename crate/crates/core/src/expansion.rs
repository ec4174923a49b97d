//! The Habiro cyclotomic expansion of the colored Jones polynomial.
//!
//! `J_n(q) = sum_k c_{n,k}(q) H_k(q)` with the kernel
//! `c_{n,k} = q^{-kn} (q^{n+1};q)_k (q^{n-1};q^{-1})_k`, its inversion through
//! the coefficients `gamma_{k,n}`, and built-in sequences for the three
//! standard test knots.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::algebra::{
    pochhammer, q_pochhammer, BivariateLaurent, LaurentPolynomial, Monomial, RationalLaurent,
};
use crate::error::{Error, Result};

/// Where the coefficients `H_k` come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provider {
    ClosedForm31,
    Constant41,
    ClosedForm52,
    Recursion52,
    /// Explicit list `H_0, H_1, ...`.
    Supplied(Vec<LaurentPolynomial>),
}

/// A knot's Habiro coefficients together with a cache of computed values.
///
/// Reads take `&self`; extending the cache takes `&mut self`, so shared
/// readers never observe a partially written cache.
#[derive(Clone, Debug)]
pub struct HabiroSequence {
    knot: String,
    provider: Provider,
    mirrored: bool,
    cache: Vec<LaurentPolynomial>,
}

pub const BUILTIN_KNOTS: [&str; 3] = ["3_1", "4_1", "5_2"];

impl HabiroSequence {
    /// A built-in knot; a trailing `*` selects the mirror image.
    pub fn builtin(name: &str) -> Result<Self> {
        let (base, mirrored) = match name.strip_suffix('*') {
            Some(b) => (b, true),
            None => (name, false),
        };
        let provider = match base {
            "3_1" => Provider::ClosedForm31,
            "4_1" => Provider::Constant41,
            "5_2" => Provider::ClosedForm52,
            _ => return Err(Error::UnknownKnot(String::from(name))),
        };
        let seq = Self {
            knot: String::from(base),
            provider,
            mirrored: false,
            cache: Vec::new(),
        };
        Ok(if mirrored { seq.mirror() } else { seq })
    }

    /// `5_2` through its linear recursion instead of the closed form.
    pub fn recursion_52() -> Self {
        Self {
            knot: String::from("5_2"),
            provider: Provider::Recursion52,
            mirrored: false,
            cache: Vec::new(),
        }
    }

    pub fn supplied(knot: impl Into<String>, coefficients: Vec<LaurentPolynomial>) -> Self {
        Self {
            knot: knot.into(),
            provider: Provider::Supplied(coefficients),
            mirrored: false,
            cache: Vec::new(),
        }
    }

    /// The sequence of the mirror knot, `H_k(q^{-1})`.
    pub fn mirror(&self) -> Self {
        Self {
            knot: self.knot.clone(),
            provider: self.provider.clone(),
            mirrored: !self.mirrored,
            cache: self.cache.iter().map(LaurentPolynomial::invert_q).collect(),
        }
    }

    /// Knot label, with a trailing `*` for a mirror image.
    pub fn knot(&self) -> String {
        let mut s = self.knot.clone();
        if self.mirrored {
            s.push('*');
        }
        s
    }

    pub fn provider(&self) -> &Provider {
        &self.provider
    }

    pub fn is_mirrored(&self) -> bool {
        self.mirrored
    }

    /// Number of coefficients available, `None` when unbounded.
    pub fn available(&self) -> Option<usize> {
        match &self.provider {
            Provider::Supplied(v) => Some(v.len()),
            _ => None,
        }
    }

    /// `H_k`, from the cache when present.
    pub fn h(&self, k: usize) -> Result<LaurentPolynomial> {
        if let Some(p) = self.cache.get(k) {
            return Ok(p.clone());
        }
        let raw = match &self.provider {
            Provider::ClosedForm31 => h31(k),
            Provider::Constant41 => LaurentPolynomial::one(),
            Provider::ClosedForm52 => h52_closed(k),
            Provider::Recursion52 => h52_recursion_prefix(k + 1).pop().expect("nonempty"),
            Provider::Supplied(v) => self.supplied_at(v, k)?,
        };
        Ok(self.orient(raw))
    }

    /// `H_0, ..., H_{count-1}`.
    pub fn prefix(&self, count: usize) -> Result<Vec<LaurentPolynomial>> {
        if count <= self.cache.len() {
            return Ok(self.cache[..count].to_vec());
        }
        match &self.provider {
            Provider::Recursion52 => Ok(h52_recursion_prefix(count)
                .into_iter()
                .map(|p| self.orient(p))
                .collect()),
            _ => (0..count).map(|k| self.h(k)).collect(),
        }
    }

    /// Fills the cache up to and including `H_k`.
    pub fn extend_to(&mut self, k: usize) -> Result<()> {
        if k < self.cache.len() {
            return Ok(());
        }
        self.cache = self.prefix(k + 1)?;
        Ok(())
    }

    fn supplied_at(&self, v: &[LaurentPolynomial], k: usize) -> Result<LaurentPolynomial> {
        v.get(k).cloned().ok_or_else(|| Error::InsufficientData {
            knot: self.knot.clone(),
            needed: k,
            available: v.len(),
        })
    }

    fn orient(&self, p: LaurentPolynomial) -> LaurentPolynomial {
        if self.mirrored {
            p.invert_q()
        } else {
            p
        }
    }
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn h31(k: usize) -> LaurentPolynomial {
    let k = k as i64;
    LaurentPolynomial::monomial(sign(k as usize), k * (k + 3) / 2)
}

/// Gaussian binomial `[k choose s]_q` as a ratio of Pochhammer symbols.
pub fn q_binomial(k: u32, s: u32) -> LaurentPolynomial {
    if s > k {
        return LaurentPolynomial::zero();
    }
    let num = q_pochhammer(1, 1, k);
    let den = &q_pochhammer(1, 1, s) * &q_pochhammer(1, 1, k - s);
    num.div_exact(&den).expect("Gaussian binomials are polynomials")
}

fn h52_closed(k: usize) -> LaurentPolynomial {
    let kk = k as i64;
    let sum: LaurentPolynomial = (0..=k as u32)
        .map(|s| q_binomial(k as u32, s).shift(i64::from(s) * (i64::from(s) + 1)))
        .sum();
    sum.shift(kk * (kk + 3) / 2).scale(&BigInt::from(sign(k)))
}

/// `H_0 .. H_{count-1}` of `5_2` by the forward recursion
/// `H_{k+2} = delta_{k+2,0} - q^{3+k}(1+q-q^{2+k}+q^{4+2k}) H_{k+1} + q^{6+2k}(q^{1+k}-1) H_k`.
fn h52_recursion_prefix(count: usize) -> Vec<LaurentPolynomial> {
    let mut out: Vec<LaurentPolynomial> = Vec::with_capacity(count);
    let zero = LaurentPolynomial::zero();
    for target in 0..count as i64 {
        let k = target - 2;
        let h1 = if target >= 1 { &out[target as usize - 1] } else { &zero };
        let h0 = if target >= 2 { &out[target as usize - 2] } else { &zero };
        let a = LaurentPolynomial::from_terms([(3 + k, 1), (4 + k, 1), (5 + 2 * k, -1), (7 + 3 * k, 1)]);
        let b = LaurentPolynomial::from_terms([(7 + 3 * k, 1), (6 + 2 * k, -1)]);
        let mut next = &(&b * h0) - &(&a * h1);
        if target == 0 {
            next += &LaurentPolynomial::one();
        }
        out.push(next);
    }
    out
}

/// `H_k` of `5_2` by the recursion; zero for negative `k`.
pub fn habiro_recursion_52(k: i64) -> LaurentPolynomial {
    if k < 0 {
        return LaurentPolynomial::zero();
    }
    h52_recursion_prefix(k as usize + 1).pop().expect("nonempty")
}

/// Exact `H_k` of a built-in knot.
pub fn builtin_habiro(knot: &str, k: usize) -> Result<LaurentPolynomial> {
    HabiroSequence::builtin(knot)?.h(k)
}

/// `H_k` of the mirror knot.
pub fn mirror_habiro(seq: &HabiroSequence, k: usize) -> Result<LaurentPolynomial> {
    seq.mirror().h(k)
}

/// The kernel `c_{n,k}(q)`.
pub fn kernel_cnk(n: u32, k: u32) -> LaurentPolynomial {
    let (n, kk) = (i64::from(n), i64::from(k));
    let up = q_pochhammer(n + 1, 1, k);
    let down = q_pochhammer(n - 1, -1, k);
    (&up * &down).shift(-kk * n)
}

/// The kernel `c_k(x,q) = x^{-k} (qx;q)_k (q^{-1}x;q^{-1})_k`.
pub fn kernel_x(k: u32) -> BivariateLaurent {
    let up = pochhammer(Monomial::new(1, 1, 1), Monomial::q_pow(1), k);
    let down = pochhammer(Monomial::new(1, -1, 1), Monomial::q_pow(-1), k);
    (&up * &down).shift(0, -i64::from(k))
}

/// The inversion coefficient `gamma_{k,n}`, zero once `n >= k + 2`.
pub fn gamma_kn(k: u32, n: u32) -> Result<RationalLaurent> {
    if n == 0 {
        return Err(Error::InvalidParameter(String::from("gamma_{k,n} needs n >= 1")));
    }
    if n >= k + 2 {
        return Ok(RationalLaurent::zero());
    }
    let (kk, nn) = (i64::from(k), i64::from(n));
    let sgn = if (kk - nn - 1).rem_euclid(2) == 0 { 1 } else { -1 };
    let e = (kk * (kk + 3) + nn * (nn - 3)) / 2 + 1;
    let num = &q_pochhammer(nn, nn, 2).shift(e) * &LaurentPolynomial::constant(sgn);
    let den = &q_pochhammer(1, 1, k + n + 1) * &q_pochhammer(1, 1, k + 1 - n);
    RationalLaurent::new(num, den)
}

/// `J_n` from the Habiro coefficients.
pub fn jones_from_habiro(seq: &HabiroSequence, n: u32) -> Result<LaurentPolynomial> {
    if n == 0 {
        return Err(Error::InvalidParameter(String::from("colors start at n = 1")));
    }
    let hs = seq.prefix(n as usize)?;
    Ok(hs
        .iter()
        .enumerate()
        .map(|(k, h)| &kernel_cnk(n, k as u32) * h)
        .sum())
}

/// `H_k = sum_{n=1}^{k+1} gamma_{k,n} J_n`, given `jones[n-1] = J_n`.
///
/// The terms are brought over the common denominator
/// `(q;q)_{2k+2} (q;q)_k` and the sum is divided once at the end; a
/// remainder means the input was not a colored Jones sequence.
pub fn habiro_from_jones(jones: &[LaurentPolynomial], k: u32) -> Result<LaurentPolynomial> {
    let need = k as usize + 1;
    if jones.len() < need {
        return Err(Error::InvalidParameter(alloc::format!(
            "need J_1..J_{need}, got {} values",
            jones.len()
        )));
    }
    let common = &q_pochhammer(1, 1, 2 * k + 2) * &q_pochhammer(1, 1, k);
    let kk = i64::from(k);
    let mut total = LaurentPolynomial::zero();
    for n in 1..=k + 1 {
        let gamma = gamma_kn(k, n)?;
        let nn = i64::from(n);
        // common / denominator(gamma), written as a product of binomials
        let cofactor = &q_pochhammer(kk + nn + 2, 1, k + 1 - n) * &q_pochhammer(kk - nn + 2, 1, n - 1);
        debug_assert_eq!(&cofactor * gamma.denominator(), common);
        total += &(&(gamma.numerator() * &cofactor) * &jones[n as usize - 1]);
    }
    total.div_exact(&common).map_err(|_| {
        Error::NonCancellation(alloc::format!("H_{k} is not a Laurent polynomial for this input"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(t: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(t.iter().copied())
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_cnk(1, 1).is_zero());
        assert!(kernel_cnk(5, 0).is_one());
        let expect = &lp(&[(0, 1), (3, -1)]) * &lp(&[(0, 1), (1, -1)]);
        assert_eq!(kernel_cnk(2, 1), expect.shift(-2));
        assert_eq!(kernel_x(0), BivariateLaurent::one());
        assert_eq!(kernel_x(1).substitute_x_power(2), kernel_cnk(2, 1));
    }

    #[test]
    fn gamma_examples() {
        assert!(gamma_kn(0, 2).unwrap().is_zero());
        assert!(gamma_kn(3, 5).unwrap().is_zero());
        assert_eq!(gamma_kn(0, 1).unwrap().to_laurent().unwrap(), LaurentPolynomial::one());
    }

    #[test]
    fn builtin_examples() {
        assert_eq!(builtin_habiro("3_1", 1).unwrap(), lp(&[(2, -1)]));
        assert!(builtin_habiro("4_1", 7).unwrap().is_one());
        assert_eq!(builtin_habiro("5_2", 1).unwrap(), lp(&[(2, -1), (4, -1)]));
        assert_eq!(builtin_habiro("5_2", 2).unwrap(), lp(&[(5, 1), (7, 1), (8, 1), (11, 1)]));
        assert!(matches!(builtin_habiro("6_1", 0), Err(Error::UnknownKnot(_))));
    }

    #[test]
    fn recursion_examples() {
        assert!(habiro_recursion_52(-3).is_zero());
        assert!(habiro_recursion_52(0).is_one());
        assert_eq!(habiro_recursion_52(1), lp(&[(2, -1), (4, -1)]));
    }

    #[test]
    fn mirror_examples() {
        let t = HabiroSequence::builtin("3_1").unwrap();
        assert_eq!(mirror_habiro(&t, 1).unwrap(), lp(&[(-2, -1)]));
        assert!(mirror_habiro(&HabiroSequence::builtin("4_1").unwrap(), 4).unwrap().is_one());
        assert_eq!(HabiroSequence::builtin("3_1*").unwrap().knot(), "3_1*");
    }

    #[test]
    fn jones_examples() {
        let fig8 = HabiroSequence::builtin("4_1").unwrap();
        assert!(jones_from_habiro(&fig8, 1).unwrap().is_one());
        assert_eq!(
            jones_from_habiro(&fig8, 2).unwrap(),
            lp(&[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)])
        );
        let trefoil = HabiroSequence::builtin("3_1").unwrap();
        let expect = &LaurentPolynomial::one() + &(&kernel_cnk(2, 1) * &lp(&[(2, -1)]));
        assert_eq!(jones_from_habiro(&trefoil, 2).unwrap(), expect);
    }

    #[test]
    fn inversion_examples() {
        for (knot, k, expect) in [("3_1", 1, lp(&[(2, -1)])), ("5_2", 1, lp(&[(2, -1), (4, -1)]))] {
            let seq = HabiroSequence::builtin(knot).unwrap();
            let jones: Vec<_> = (1..=k + 1).map(|n| jones_from_habiro(&seq, n).unwrap()).collect();
            assert_eq!(habiro_from_jones(&jones, k).unwrap(), expect);
        }
        let bogus = [LaurentPolynomial::one(), lp(&[(0, 2)])];
        assert!(matches!(habiro_from_jones(&bogus, 1), Err(Error::NonCancellation(_))));
    }

    #[test]
    fn supplied_data_runs_out() {
        let seq = HabiroSequence::supplied("K", alloc::vec![LaurentPolynomial::one()]);
        assert!(matches!(seq.h(1), Err(Error::InsufficientData { .. })));
        assert!(jones_from_habiro(&seq, 1).unwrap().is_one());
    }
}
