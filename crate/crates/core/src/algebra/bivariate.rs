use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laurent::forward_owned;
use super::{CyclotomicField, CyclotomicNumber, LaurentPolynomial};

/// Laurent polynomial in `q` and `x` with integer coefficients.
///
/// Keys are `(q exponent, x exponent)`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariateLaurent {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BivariateLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `c * q^qe * x^xe`.
    pub fn monomial(c: impl Into<BigInt>, qe: i64, xe: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(qe, xe, c.into());
        p
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e, 0)
    }

    pub fn x_pow(e: i64) -> Self {
        Self::monomial(1, 0, e)
    }

    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = ((i64, i64), C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for ((qe, xe), c) in iter {
            p.add_term(qe, xe, c.into());
        }
        p
    }

    pub fn from_laurent(p: &LaurentPolynomial) -> Self {
        Self::from_terms(p.terms().map(|(e, c)| ((e, 0), c.clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms sorted by `(q exponent, x exponent)`.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, qe: i64, xe: i64) -> BigInt {
        self.terms.get(&(qe, xe)).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, qe: i64, xe: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((qe, xe)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(qe, xe));
        }
    }

    /// Multiplies by `q^qe x^xe`.
    pub fn shift(&self, qe: i64, xe: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((a + qe, b + xe), c.clone()))
                .collect(),
        }
    }

    /// Image under `x -> q^a`.
    pub fn substitute_x_power(&self, a: i64) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(self.terms.iter().map(|((qe, xe), c)| (qe + a * xe, c.clone())))
    }

    /// Image under `q -> q^{-1}`.
    pub fn invert_q(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|((qe, xe), c)| ((-qe, *xe), c.clone())))
    }

    /// Image under `x -> x^{-1}`.
    pub fn invert_x(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|((qe, xe), c)| ((*qe, -xe), c.clone())))
    }

    /// Image under `q -> zeta^t`, `x -> zeta^(t*s)` (so `x = q^s`).
    pub fn eval_zeta(&self, field: &alloc::sync::Arc<CyclotomicField>, t: i64, s: i64) -> CyclotomicNumber {
        self.substitute_x_power(s).eval_zeta(field, t)
    }

    /// Value at `q = x = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn display_string(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (idx, ((qe, xe), c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                s.push('-');
            } else if idx > 0 {
                s.push('+');
            }
            let a = c.abs();
            let mut factors = alloc::vec::Vec::new();
            if !a.is_one() || (*qe == 0 && *xe == 0) {
                factors.push(alloc::format!("{a}"));
            }
            for (v, e) in [('q', *qe), ('x', *xe)] {
                match e {
                    0 => {}
                    1 => factors.push(alloc::format!("{v}")),
                    _ => factors.push(alloc::format!("{v}^{e}")),
                }
            }
            let _ = write!(s, "{}", factors.join("*"));
        }
        s
    }
}

impl fmt::Display for BivariateLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_string())
    }
}

impl From<i64> for BivariateLaurent {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0, 0)
    }
}

impl From<&LaurentPolynomial> for BivariateLaurent {
    fn from(p: &LaurentPolynomial) -> Self {
        Self::from_laurent(p)
    }
}

impl AddAssign<&BivariateLaurent> for BivariateLaurent {
    fn add_assign(&mut self, rhs: &BivariateLaurent) {
        for ((qe, xe), c) in &rhs.terms {
            self.add_term(*qe, *xe, c.clone());
        }
    }
}

impl<'a> Add<&'a BivariateLaurent> for &'a BivariateLaurent {
    type Output = BivariateLaurent;
    fn add(self, rhs: Self) -> BivariateLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a BivariateLaurent> for &'a BivariateLaurent {
    type Output = BivariateLaurent;
    fn sub(self, rhs: Self) -> BivariateLaurent {
        let mut out = self.clone();
        out += &(-rhs);
        out
    }
}

impl<'a> Mul<&'a BivariateLaurent> for &'a BivariateLaurent {
    type Output = BivariateLaurent;
    fn mul(self, rhs: Self) -> BivariateLaurent {
        let mut out = BivariateLaurent::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivariateLaurent {
    type Output = BivariateLaurent;
    fn neg(self) -> BivariateLaurent {
        BivariateLaurent {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for BivariateLaurent {
    type Output = BivariateLaurent;
    fn neg(self) -> BivariateLaurent {
        -&self
    }
}

forward_owned!(BivariateLaurent, Add::add, Sub::sub, Mul::mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitution_examples() {
        let p = &BivariateLaurent::q_pow(1) + &BivariateLaurent::x_pow(1);
        assert_eq!(
            p.substitute_x_power(2),
            LaurentPolynomial::from_terms([(1, 1), (2, 1)])
        );
        let q2 = BivariateLaurent::q_pow(2);
        assert_eq!(q2.invert_q(), BivariateLaurent::q_pow(-2));
        let f = CyclotomicField::new(4);
        let one_minus_q = BivariateLaurent::from_terms([((0, 0), 1), ((1, 0), -1)]);
        let v = one_minus_q.eval_zeta(&f, 1, 0);
        assert_eq!(v, &CyclotomicNumber::one(&f) - &CyclotomicNumber::zeta(&f));
    }

    #[test]
    fn display() {
        let p = BivariateLaurent::from_terms([((0, -1), 1), ((1, 0), -2), ((0, 0), 3)]);
        assert_eq!(p.display_string(), "x^-1+3-2*q");
    }
}
