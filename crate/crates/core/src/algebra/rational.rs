use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::laurent::forward_owned;
use super::LaurentPolynomial;
use crate::error::{Error, Result};

/// Quotient of two Laurent polynomials, kept unreduced.
///
/// Equality is decided by cross-multiplication, so no polynomial gcd is
/// ever needed.
#[derive(Clone, Debug)]
pub struct RationalLaurent {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

impl RationalLaurent {
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self { num, den })
    }

    pub fn zero() -> Self {
        Self::from(LaurentPolynomial::zero())
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this fraction equals, if the division is exact.
    pub fn to_laurent(&self) -> Result<LaurentPolynomial> {
        self.num.div_exact(&self.den)
    }

    /// The numerator obtained after rewriting over `common`, which must be a
    /// multiple of the current denominator.
    pub fn numerator_over(&self, common: &LaurentPolynomial) -> Result<LaurentPolynomial> {
        Ok(&self.num * &common.div_exact(&self.den)?)
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl From<LaurentPolynomial> for RationalLaurent {
    fn from(p: LaurentPolynomial) -> Self {
        Self {
            num: p,
            den: LaurentPolynomial::one(),
        }
    }
}

impl PartialEq for RationalLaurent {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalLaurent {}

impl fmt::Display for RationalLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<'a> Add<&'a RationalLaurent> for &'a RationalLaurent {
    type Output = RationalLaurent;
    fn add(self, rhs: Self) -> RationalLaurent {
        if self.den == rhs.den {
            return RationalLaurent {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        RationalLaurent {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl<'a> Sub<&'a RationalLaurent> for &'a RationalLaurent {
    type Output = RationalLaurent;
    fn sub(self, rhs: Self) -> RationalLaurent {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalLaurent> for &'a RationalLaurent {
    type Output = RationalLaurent;
    fn mul(self, rhs: Self) -> RationalLaurent {
        RationalLaurent {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl Neg for &RationalLaurent {
    type Output = RationalLaurent;
    fn neg(self) -> RationalLaurent {
        RationalLaurent {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_owned!(RationalLaurent, Add::add, Sub::sub, Mul::mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_multiplied_equality() {
        let one_minus_q = LaurentPolynomial::from_terms([(0, 1), (1, -1)]);
        let a = RationalLaurent::new(one_minus_q.clone(), &one_minus_q * &one_minus_q).unwrap();
        let b = RationalLaurent::new(LaurentPolynomial::one(), one_minus_q.clone()).unwrap();
        assert_eq!(a, b);
        assert!(a.to_laurent().is_err());
        assert_eq!((&a * &RationalLaurent::from(one_minus_q)).to_laurent().unwrap(), LaurentPolynomial::one());
        assert!(RationalLaurent::new(LaurentPolynomial::one(), LaurentPolynomial::zero()).is_err());
    }
}
