use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::sync::Arc;

use super::laurent::forward_owned;
use super::{q_pochhammer, CyclotomicField, CyclotomicNumber, LaurentPolynomial};
use crate::error::{Error, Result};

/// A Laurent polynomial modulo the ideal generated by `(q;q)_level`.
///
/// The representative is canonical: a polynomial in `q` of degree below
/// `level * (level + 1) / 2`, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HabiroTruncation {
    level: u32,
    rep: LaurentPolynomial,
}

/// Canonical reduction of `p` modulo `(q;q)_level`.
///
/// Negative powers are cleared with `q^{-1} = -g(q)`, where
/// `(q;q)_level = 1 + q g(q)`.
pub fn habiro_reduce(p: &LaurentPolynomial, level: u32) -> Result<HabiroTruncation> {
    if level == 0 {
        return Err(Error::InvalidParameter("Habiro truncation level must be at least 1".into()));
    }
    let modulus = q_pochhammer(1, 1, level);
    let rep = reduce_with(p, &modulus);
    Ok(HabiroTruncation { level, rep })
}

fn reduce_with(p: &LaurentPolynomial, modulus: &LaurentPolynomial) -> LaurentPolynomial {
    let lo = p.min_exp().unwrap_or(0);
    if lo >= 0 {
        return p.rem_monic(modulus);
    }
    // q^{-1} = -g with g = (modulus - 1) / q
    let g = (modulus - &LaurentPolynomial::one()).shift(-1);
    let qinv = -&g;
    let e = (-lo) as u64;
    let mut acc = LaurentPolynomial::one();
    let mut base = qinv.rem_monic(modulus);
    let mut k = e;
    while k > 0 {
        if k & 1 == 1 {
            acc = (&acc * &base).rem_monic(modulus);
        }
        k >>= 1;
        if k > 0 {
            base = (&base * &base).rem_monic(modulus);
        }
    }
    let cleared = p.shift(-lo);
    (&cleared * &acc).rem_monic(modulus)
}

impl HabiroTruncation {
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn representative(&self) -> &LaurentPolynomial {
        &self.rep
    }

    pub fn zero(level: u32) -> Result<Self> {
        habiro_reduce(&LaurentPolynomial::zero(), level)
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// Projection to a lower level.
    pub fn reduce_to(&self, level: u32) -> Result<Self> {
        if level > self.level {
            return Err(Error::InvalidParameter(alloc::format!(
                "cannot lift a level {} truncation to level {level}",
                self.level
            )));
        }
        habiro_reduce(&self.rep, level)
    }

    pub fn mul_laurent(&self, p: &LaurentPolynomial) -> Self {
        habiro_reduce(&(&self.rep * p), self.level).expect("level is positive")
    }

    /// Image under the automorphism `q -> q^{-1}`.
    pub fn invert_q(&self) -> Self {
        habiro_reduce(&self.rep.invert_q(), self.level).expect("level is positive")
    }

    /// Evaluation at `q = zeta_N`; defined once `(q;q)_level` vanishes there.
    pub fn eval_root(&self, field: &Arc<CyclotomicField>) -> Result<CyclotomicNumber> {
        if self.level < field.order() {
            return Err(Error::InvalidParameter(alloc::format!(
                "level {} truncation cannot be evaluated at a primitive {}-th root",
                self.level,
                field.order()
            )));
        }
        Ok(self.rep.eval_zeta(field, 1))
    }

    fn combine(&self, rhs: &Self, f: impl Fn(&LaurentPolynomial, &LaurentPolynomial) -> LaurentPolynomial) -> Self {
        let level = self.level.min(rhs.level);
        habiro_reduce(&f(&self.rep, &rhs.rep), level).expect("level is positive")
    }
}

impl fmt::Display for HabiroTruncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]_{}", self.rep, self.level)
    }
}

// Mixed levels combine at the smaller level, following the projective system.
impl<'a> Add<&'a HabiroTruncation> for &'a HabiroTruncation {
    type Output = HabiroTruncation;
    fn add(self, rhs: Self) -> HabiroTruncation {
        self.combine(rhs, |a, b| a + b)
    }
}

impl<'a> Sub<&'a HabiroTruncation> for &'a HabiroTruncation {
    type Output = HabiroTruncation;
    fn sub(self, rhs: Self) -> HabiroTruncation {
        self.combine(rhs, |a, b| a - b)
    }
}

impl<'a> Mul<&'a HabiroTruncation> for &'a HabiroTruncation {
    type Output = HabiroTruncation;
    fn mul(self, rhs: Self) -> HabiroTruncation {
        self.combine(rhs, |a, b| a * b)
    }
}

impl Neg for &HabiroTruncation {
    type Output = HabiroTruncation;
    fn neg(self) -> HabiroTruncation {
        habiro_reduce(&-&self.rep, self.level).expect("level is positive")
    }
}

forward_owned!(HabiroTruncation, Add::add, Sub::sub, Mul::mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let r = habiro_reduce(&LaurentPolynomial::q_pow(-1), 1).unwrap();
        assert_eq!(r.representative(), &LaurentPolynomial::one());
        let p = q_pochhammer(1, 1, 2).shift(5);
        assert!(habiro_reduce(&p, 2).unwrap().is_zero());
        let r = habiro_reduce(&LaurentPolynomial::q_pow(10), 3).unwrap();
        let expected = LaurentPolynomial::from_terms([(0, 4), (1, -1), (2, -5), (3, -4), (4, 2), (5, 5)]);
        assert_eq!(r.representative(), &expected);
        assert!(habiro_reduce(&LaurentPolynomial::one(), 0).is_err());
    }

    #[test]
    fn inverse_of_q_is_a_unit() {
        for level in 1..6 {
            let a = habiro_reduce(&LaurentPolynomial::q_pow(-7), level).unwrap();
            let b = habiro_reduce(&LaurentPolynomial::q_pow(7), level).unwrap();
            assert_eq!((&a * &b).representative(), &LaurentPolynomial::one());
        }
    }
}
