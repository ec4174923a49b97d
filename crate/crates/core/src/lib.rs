//! Exact computation of descendant colored Jones invariants.
//!
//! The crate covers the Habiro cyclotomic expansion of the colored Jones
//! polynomial and its descendants, the q-difference relations they satisfy,
//! and the root-of-unity R-matrix state sum. All arithmetic is exact; the crate is
//! `no_std` and only needs `alloc`.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod algebra;
pub mod descendants;
pub mod error;
pub mod expansion;
pub mod qdiff;
pub mod report;
pub mod rmatrix;
pub mod statesum;

pub use algebra::{
    BivariateLaurent, CyclotomicField, CyclotomicNumber, HabiroTruncation, LaurentPolynomial,
    RationalLaurent,
};
pub use error::{Error, Result};
pub use report::{Report, ReportLine};
