use alloc::sync::Arc;

use super::{BivariateLaurent, CyclotomicField, CyclotomicNumber, LaurentPolynomial};

/// Signed monomial `coeff * q^q * x^x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: i64,
    pub q: i64,
    pub x: i64,
}

impl Monomial {
    pub const fn new(coeff: i64, q: i64, x: i64) -> Self {
        Self { coeff, q, x }
    }

    pub const fn q_pow(q: i64) -> Self {
        Self::new(1, q, 0)
    }

    fn to_poly(self) -> BivariateLaurent {
        BivariateLaurent::monomial(self.coeff, self.q, self.x)
    }
}

/// `(z; step)_count = prod_{j < count} (1 - z step^j)`.
pub fn pochhammer(z: Monomial, step: Monomial, count: u32) -> BivariateLaurent {
    let one = BivariateLaurent::one();
    let step = step.to_poly();
    let mut factor = z.to_poly();
    let mut acc = BivariateLaurent::one();
    for _ in 0..count {
        acc = &acc * &(&one - &factor);
        factor = &factor * &step;
    }
    acc
}

/// `prod_{j < count} (1 - q^{a + j*step})`, the one-variable fast path.
pub fn q_pochhammer(a: i64, step: i64, count: u32) -> LaurentPolynomial {
    let mut acc = LaurentPolynomial::one();
    for j in 0..count as i64 {
        let factor = LaurentPolynomial::from_terms([(0, 1), (a + j * step, -1)]);
        acc = &acc * &factor;
    }
    acc
}

/// `(z)_n = prod_{k=1}^{n} (1 - z^k)` over a cyclotomic field.
pub fn zeta_pochhammer(z: &CyclotomicNumber, n: u32) -> CyclotomicNumber {
    let field: &Arc<CyclotomicField> = z.field();
    let one = CyclotomicNumber::one(field);
    let mut acc = one.clone();
    let mut zk = one.clone();
    for _ in 0..n {
        zk = &zk * z;
        acc = &acc * &(&one - &zk);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let q = Monomial::q_pow(1);
        assert_eq!(pochhammer(q, q, 0), BivariateLaurent::one());
        assert_eq!(
            pochhammer(q, q, 3),
            BivariateLaurent::from_terms([((0, 0), 1), ((1, 0), -1), ((2, 0), -1), ((4, 0), 1), ((5, 0), 1), ((6, 0), -1)])
        );
        let qx = Monomial::new(1, 1, 1);
        assert_eq!(
            pochhammer(qx, q, 1),
            BivariateLaurent::from_terms([((0, 0), 1), ((1, 1), -1)])
        );
        assert_eq!(
            q_pochhammer(1, 1, 3),
            pochhammer(q, q, 3).substitute_x_power(0)
        );
    }
}
