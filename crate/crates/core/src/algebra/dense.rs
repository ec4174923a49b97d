// Dense kernels behind the sparse polynomial types. Exponents are offsets
// from the lowest term.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    out
}

/// Long division by `d`, whose top coefficient must be a unit or divide
/// every leading coefficient met on the way. Returns `None` on a
/// non-integral quotient coefficient.
pub(crate) fn div_rem(a: &[BigInt], d: &[BigInt]) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
    let dd = d.len() - 1;
    let lead = &d[dd];
    let mut r = a.to_vec();
    if r.len() <= dd {
        return Some((Vec::new(), r));
    }
    let mut quo = vec![BigInt::zero(); r.len() - dd];
    let unit = lead.abs().is_one();
    for top in (dd..r.len()).rev() {
        if r[top].is_zero() {
            continue;
        }
        let c = if unit {
            if lead.is_positive() {
                r[top].clone()
            } else {
                -r[top].clone()
            }
        } else {
            let (c, rem) = r[top].div_rem(lead);
            if !rem.is_zero() {
                return None;
            }
            c
        };
        let shift = top - dd;
        for (j, dj) in d.iter().enumerate() {
            if !dj.is_zero() {
                r[shift + j] -= &c * dj;
            }
        }
        quo[shift] = c;
    }
    r.truncate(dd);
    Some((quo, r))
}
