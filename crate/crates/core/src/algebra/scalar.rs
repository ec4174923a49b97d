use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::CyclotomicNumber;
use crate::error::{Error, Result};

/// Minimal field interface shared by rationals and cyclotomic numbers.
pub trait FieldElement:
    Clone + PartialEq + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn ratio_like(&self, n: i64, d: i64) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn inverse(&self) -> Result<Self>;
}

impl FieldElement for BigRational {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn ratio_like(&self, n: i64, d: i64) -> Self {
        Self::new(BigInt::from(n), BigInt::from(d))
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inverse(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.recip())
    }
}

impl FieldElement for CyclotomicNumber {
    fn zero_like(&self) -> Self {
        Self::zero(self.field())
    }
    fn one_like(&self) -> Self {
        Self::one(self.field())
    }
    fn ratio_like(&self, n: i64, d: i64) -> Self {
        Self::from_ratio(self.field(), n, d)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn inverse(&self) -> Result<Self> {
        self.inv()
    }
}

/// `<<x>>_N = (1/N) sum_{a < N} x^a`, the regularized `(1 - x^N)/((1 - x) N)`.
pub fn double_angle<T: FieldElement>(x: &T, n: u32) -> T {
    let mut acc = x.zero_like();
    let mut xa = x.one_like();
    for _ in 0..n {
        acc = acc + xa.clone();
        xa = xa * x.clone();
    }
    acc * x.ratio_like(1, n as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CyclotomicField;

    #[test]
    fn examples() {
        let two = BigRational::from_integer(2.into());
        assert_eq!(double_angle(&two, 3), BigRational::new(7.into(), 3.into()));
        let one = BigRational::one();
        assert_eq!(double_angle(&one, 5), one);
        for n in 2..7 {
            let f = CyclotomicField::new(n);
            assert!(double_angle(&CyclotomicNumber::zeta(&f), n).is_zero());
        }
    }
}
