use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::dense;
use super::{CyclotomicField, CyclotomicNumber};
use crate::error::{Error, Result};

/// Laurent polynomial in `q` with integer coefficients, stored sparsely.
///
/// No stored coefficient is ever zero, so structural equality is equality
/// of polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub(crate) fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Image under `q -> q^a`.
    pub fn substitute_power(&self, a: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (e * a, c.clone())))
    }

    /// Image under `q -> q^{-1}`.
    pub fn invert_q(&self) -> Self {
        self.substitute_power(-1)
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Image under `q -> zeta^t` in the given cyclotomic field.
    pub fn eval_zeta(&self, field: &alloc::sync::Arc<CyclotomicField>, t: i64) -> CyclotomicNumber {
        let n = field.order() as i64;
        let mut acc = vec_zero(field.degree());
        for (e, c) in &self.terms {
            let k = (e * t).rem_euclid(n) as usize;
            for (slot, b) in acc.iter_mut().zip(field.power_vector(k)) {
                if !b.is_zero() {
                    *slot += c * b;
                }
            }
        }
        CyclotomicNumber::from_integer_vector(field, acc)
    }

    /// Dense coefficient vector starting at the lowest exponent.
    pub(crate) fn to_dense(&self) -> (i64, Vec<BigInt>) {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => {
                let mut v = vec_zero((hi - lo + 1) as usize);
                for (e, c) in &self.terms {
                    v[(e - lo) as usize] = c.clone();
                }
                (lo, v)
            }
            _ => (0, Vec::new()),
        }
    }

    pub(crate) fn from_dense(offset: i64, v: Vec<BigInt>) -> Self {
        let terms = v
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (offset + i as i64, c))
            .collect();
        Self { terms }
    }

    fn span(&self) -> u64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (hi - lo) as u64 + 1,
            _ => 0,
        }
    }

    /// Exact quotient `self / d` in the Laurent ring.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (ea, a) = self.to_dense();
        let (ed, dv) = d.to_dense();
        match dense::div_rem(&a, &dv) {
            Some((q, r)) if r.iter().all(Zero::is_zero) => Ok(Self::from_dense(ea - ed, q)),
            _ => Err(Error::NonCancellation(String::from(
                "Laurent polynomial is not divisible by the given divisor",
            ))),
        }
    }

    /// Remainder of division by a polynomial `d` with nonnegative exponents
    /// and leading coefficient `±1`. `self` must have nonnegative exponents.
    pub(crate) fn rem_monic(&self, d: &Self) -> Self {
        debug_assert!(self.min_exp().unwrap_or(0) >= 0);
        debug_assert!(d.min_exp().unwrap_or(0) >= 0);
        let deg = self.max_exp().unwrap_or(0);
        let mut a = vec_zero(deg as usize + 1);
        for (e, c) in &self.terms {
            a[*e as usize] = c.clone();
        }
        let dd = d.max_exp().expect("nonzero divisor") as usize;
        let mut dv = vec_zero(dd + 1);
        for (e, c) in &d.terms {
            dv[*e as usize] = c.clone();
        }
        let (_, r) = dense::div_rem(&a, &dv).expect("unit leading coefficient");
        Self::from_dense(0, r)
    }

    /// Formats with a chosen variable name and no spaces.
    pub fn display_var(&self, var: char) -> String {
        let mut s = String::new();
        if self.is_zero() {
            s.push('0');
            return s;
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            write_term(&mut s, idx == 0, c, *e, var);
        }
        s
    }
}

fn vec_zero(n: usize) -> Vec<BigInt> {
    let mut v = Vec::with_capacity(n);
    v.resize(n, BigInt::zero());
    v
}

fn write_term(s: &mut String, first: bool, c: &BigInt, e: i64, var: char) {
    use core::fmt::Write;
    let neg = c.is_negative();
    if neg {
        s.push('-');
    } else if !first {
        s.push('+');
    }
    let a = c.abs();
    if e == 0 {
        let _ = write!(s, "{a}");
        return;
    }
    if !a.is_one() {
        let _ = write!(s, "{a}*");
    }
    if e == 1 {
        s.push(var);
    } else {
        let _ = write!(s, "{var}^{e}");
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_var('q'))
    }
}

impl From<i64> for LaurentPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: Self) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: Self) -> LaurentPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: &LaurentPolynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl<'a> Mul<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let work = (self.len() as u64) * (rhs.len() as u64);
        let span = self.span() + rhs.span();
        if span <= 8 * work + 64 {
            let (ea, a) = self.to_dense();
            let (eb, b) = rhs.to_dense();
            return LaurentPolynomial::from_dense(ea + eb, dense::mul(&a, &b));
        }
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty { $tr::$m(&self, &rhs) }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty { $tr::$m(&self, rhs) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(LaurentPolynomial, Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl core::iter::Sum for LaurentPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc = Self::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl core::iter::Product for LaurentPolynomial {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| &a * &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(t: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(t.iter().copied())
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let p = lp(&[(1, 2), (1, -2), (3, 1)]);
        assert_eq!(p, LaurentPolynomial::q_pow(3));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn product_matches_hand_expansion() {
        // (1 - q)(1 - q^2)(1 - q^3)
        let f = |k| lp(&[(0, 1), (k, -1)]);
        let p = &(&f(1) * &f(2)) * &f(3);
        assert_eq!(p, lp(&[(0, 1), (1, -1), (2, -1), (4, 1), (5, 1), (6, -1)]));
    }

    #[test]
    fn sparse_and_dense_products_agree() {
        let a = lp(&[(-500, 3), (700, -2)]);
        let b = lp(&[(-3, 1), (900, 5)]);
        let c = &a * &b;
        assert_eq!(c, lp(&[(-503, 3), (400, 15), (697, -2), (1600, -10)]));
    }

    #[test]
    fn exact_division_round_trip() {
        let a = lp(&[(-2, 1), (0, 3), (5, -1)]);
        let d = lp(&[(1, 1), (4, -1)]);
        let p = &a * &d;
        assert_eq!(p.div_exact(&d).unwrap(), a);
        assert!(lp(&[(0, 1), (1, 1)]).div_exact(&lp(&[(0, 2), (1, 1)])).is_err());
    }

    #[test]
    fn display_is_compact() {
        assert_eq!(lp(&[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 3)]).to_string(), "q^-2-q^-1+1-q+3*q^2");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
    }
}
