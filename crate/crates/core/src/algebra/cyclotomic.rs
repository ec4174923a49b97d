use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The field `Q(zeta_N)` presented by the power basis modulo `Phi_N`.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    /// Coefficients of the monic `Phi_N`, lowest first.
    phi: Vec<BigInt>,
    /// `zeta^k` reduced to the power basis, for `k` in `0..N`.
    powers: Vec<Vec<BigInt>>,
}

impl CyclotomicField {
    pub fn new(order: u32) -> Arc<Self> {
        assert!(order >= 1, "cyclotomic order must be positive");
        let phi = cyclotomic_polynomial(order);
        let d = phi.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![BigInt::zero(); d];
        cur[0] = BigInt::one();
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by zeta
            let mut next = vec![BigInt::zero(); d + 1];
            for (i, c) in cur.iter().enumerate() {
                next[i + 1] = c.clone();
            }
            reduce(&mut next, &phi);
            cur = next;
        }
        Arc::new(Self { order, phi, powers })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Degree of `Phi_N`, the dimension of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn phi(&self) -> &[BigInt] {
        &self.phi
    }

    pub(crate) fn power_vector(&self, k: usize) -> &[BigInt] {
        &self.powers[k % self.order as usize]
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    super::dense::mul(a, b)
}

/// `Phi_N` as `(x^N - 1) / prod_{d | N, d < N} Phi_d`.
fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    let mut den = vec![BigInt::one()];
    for d in 1..n {
        if n.is_multiple_of(d) {
            den = poly_mul(&den, &cyclotomic_polynomial(d));
        }
    }
    let (q, r) = super::dense::div_rem(&num, &den).expect("monic divisor");
    debug_assert!(r.iter().all(Zero::is_zero));
    q
}

/// Reduces `v` in place modulo the monic `phi`, truncating to its degree.
fn reduce(v: &mut Vec<BigInt>, phi: &[BigInt]) {
    let d = phi.len() - 1;
    for top in (d..v.len()).rev() {
        if v[top].is_zero() {
            continue;
        }
        let c = core::mem::take(&mut v[top]);
        for (j, pj) in phi[..d].iter().enumerate() {
            if !pj.is_zero() {
                v[top - d + j] -= &c * pj;
            }
        }
    }
    v.resize(d, BigInt::zero());
}

/// Exact element of `Q(zeta_N)`.
///
/// Stored as an integer vector over the power basis and a positive common
/// denominator, reduced so that the representation is canonical.
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: Arc<CyclotomicField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CyclotomicNumber {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Self {
            field: field.clone(),
            num: vec![BigInt::zero(); field.degree()],
            den: BigInt::one(),
        }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_integer(field, 1)
    }

    pub fn from_integer(field: &Arc<CyclotomicField>, c: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(field);
        z.num[0] = c.into();
        z
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, r: &BigRational) -> Self {
        let mut z = Self::zero(field);
        z.num[0] = r.numer().clone();
        z.den = r.denom().clone();
        z.normalize();
        z
    }

    pub fn from_ratio(field: &Arc<CyclotomicField>, n: i64, d: i64) -> Self {
        Self::from_rational(field, &BigRational::new(n.into(), d.into()))
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let idx = k.rem_euclid(field.order() as i64) as usize;
        Self {
            field: field.clone(),
            num: field.powers[idx].clone(),
            den: BigInt::one(),
        }
    }

    pub fn zeta(field: &Arc<CyclotomicField>) -> Self {
        Self::zeta_pow(field, 1)
    }

    /// Builds from power-basis rationals; longer vectors are reduced mod `Phi_N`.
    pub fn from_coefficients(field: &Arc<CyclotomicField>, coeffs: &[BigRational]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::from_parts(field, num, den)
    }

    pub(crate) fn from_integer_vector(field: &Arc<CyclotomicField>, v: Vec<BigInt>) -> Self {
        Self::from_parts(field, v, BigInt::one())
    }

    fn from_parts(field: &Arc<CyclotomicField>, mut num: Vec<BigInt>, den: BigInt) -> Self {
        if num.len() < field.degree() {
            num.resize(field.degree(), BigInt::zero());
        }
        reduce(&mut num, &field.phi);
        let mut z = Self {
            field: field.clone(),
            num,
            den,
        };
        z.normalize();
        z
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -core::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -core::mem::take(c);
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// True when the element lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn numerator_vector(&self) -> &[BigInt] {
        &self.num
    }

    /// Power-basis coordinates as rationals.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    /// Image under the Galois automorphism `zeta -> zeta^a` (`a` coprime to `N`).
    pub fn galois(&self, a: i64) -> Self {
        let n = self.field.order as i64;
        let mut acc = vec![BigInt::zero(); self.field.degree()];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = ((i as i64) * a).rem_euclid(n) as usize;
            for (slot, b) in acc.iter_mut().zip(&self.field.powers[k]) {
                if !b.is_zero() {
                    *slot += c * b;
                }
            }
        }
        Self::from_parts(&self.field, acc, self.den.clone())
    }

    /// Complex conjugation, the ring map `zeta -> zeta^{N-1}`.
    pub fn conj(&self) -> Self {
        self.galois(self.field.order as i64 - 1)
    }

    /// Multiplicative inverse via the product of the other Galois conjugates.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.field.order as i64;
        let mut others = Self::one(&self.field);
        for a in 2..n.max(2) {
            if a.gcd(&n) == 1 {
                others = &others * &self.galois(a);
            }
        }
        let norm = &others * self;
        debug_assert!(norm.is_rational());
        let r = BigRational::new(norm.num[0].clone(), norm.den.clone());
        let r_inv = CyclotomicNumber::from_rational(&self.field, &r.recip());
        Ok(&others * &r_inv)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut b = base;
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        let num = self.num.iter().map(|x| x * c).collect();
        let mut z = Self {
            field: self.field.clone(),
            num,
            den: self.den.clone(),
        };
        z.normalize();
        z
    }

    fn check_field(&self, rhs: &Self) {
        assert_eq!(
            self.field.order, rhs.field.order,
            "mixing cyclotomic numbers of different orders"
        );
    }

    /// Compact text form in powers of `z`, e.g. `(1/2)-z^2`.
    pub fn display_string(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        let mut first = true;
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let r = BigRational::new(c.clone(), self.den.clone());
            let neg = r.is_negative();
            if neg {
                s.push('-');
            } else if !first {
                s.push('+');
            }
            first = false;
            let a = r.abs();
            let coef = if a.is_integer() {
                alloc::format!("{}", a.numer())
            } else {
                alloc::format!("({}/{})", a.numer(), a.denom())
            };
            match i {
                0 => s.push_str(&coef),
                _ => {
                    if !a.is_one() {
                        let _ = write!(s, "{coef}*");
                    }
                    if i == 1 {
                        s.push('z');
                    } else {
                        let _ = write!(s, "z^{i}");
                    }
                }
            }
        }
        s
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.den == other.den && self.num == other.num
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{}]({})", self.field.order, self.display_string())
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_string())
    }
}

impl<'a> Add<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: Self) -> CyclotomicNumber {
        self.check_field(rhs);
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let (num, den) = if self.den == rhs.den {
            (
                self.num.iter().zip(&rhs.num).map(|(a, b)| a + b).collect(),
                self.den.clone(),
            )
        } else {
            (
                self.num
                    .iter()
                    .zip(&rhs.num)
                    .map(|(a, b)| a * &rhs.den + b * &self.den)
                    .collect(),
                &self.den * &rhs.den,
            )
        };
        let mut z = CyclotomicNumber {
            field: self.field.clone(),
            num,
            den,
        };
        z.normalize();
        z
    }
}

impl<'a> Sub<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: Self) -> CyclotomicNumber {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: Self) -> CyclotomicNumber {
        self.check_field(rhs);
        if self.is_zero() || rhs.is_zero() {
            return CyclotomicNumber::zero(&self.field);
        }
        let mut prod = poly_mul(&self.num, &rhs.num);
        reduce(&mut prod, &self.field.phi);
        let mut z = CyclotomicNumber {
            field: self.field.clone(),
            num: prod,
            den: &self.den * &rhs.den,
        };
        z.normalize();
        z
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

super::laurent::forward_owned!(CyclotomicNumber, Add::add, Sub::sub, Mul::mul);
