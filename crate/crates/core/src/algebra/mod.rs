//! Exact arithmetic: Laurent polynomials, cyclotomic numbers and Habiro truncations.

mod bivariate;
mod cyclotomic;
mod dense;
mod habiro;
mod laurent;
mod pochhammer;
mod rational;
mod scalar;

pub use bivariate::BivariateLaurent;
pub use cyclotomic::{CyclotomicField, CyclotomicNumber};
pub use habiro::{habiro_reduce, HabiroTruncation};
pub use laurent::LaurentPolynomial;
pub(crate) use laurent::forward_owned;
pub use pochhammer::{pochhammer, q_pochhammer, zeta_pochhammer, Monomial};
pub use rational::RationalLaurent;
pub use scalar::{double_angle, FieldElement};
