//! The cyclotomic R-matrix `r(x; m, n)` at a primitive `N`-th root of unity.
//!
//! Indices live in `Z/N`; the two-fold tensor basis is ordered row-major,
//! `(i, j) -> i*N + j`, with `i` in the first factor. Spectral values are
//! exact elements of `Q(zeta_N)`, in practice rationals.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{double_angle, zeta_pochhammer, CyclotomicField, CyclotomicNumber};
use crate::error::{Error, Result};
use crate::report::{Report, ReportLine};

/// Principal residue of `k` modulo `n`.
pub fn prin(k: i64, n: u32) -> u32 {
    k.rem_euclid(i64::from(n)) as u32
}

/// 1 when `0 <= k < n`, else 0.
pub fn hev(k: i64, n: u32) -> u32 {
    u32::from((0..i64::from(n)).contains(&k))
}

/// An element of `{0, ..., N-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ResidueIndex {
    value: u32,
    modulus: u32,
}

impl ResidueIndex {
    pub fn new(k: i64, modulus: u32) -> Self {
        Self {
            value: prin(k, modulus),
            modulus,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }
}

/// Dense matrix over `Q(zeta_N)`.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloMatrix {
    rows: usize,
    cols: usize,
    data: Vec<CyclotomicNumber>,
}

impl CycloMatrix {
    pub fn zeros(field: &Arc<CyclotomicField>, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![CyclotomicNumber::zero(field); rows * cols],
        }
    }

    pub fn identity(field: &Arc<CyclotomicField>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, CyclotomicNumber::one(field));
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CyclotomicNumber) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn try_from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Result<CyclotomicNumber>,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c)?);
            }
        }
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &CyclotomicNumber {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CyclotomicNumber) {
        self.data[r * self.cols + c] = v;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[CyclotomicNumber] {
        &self.data
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        self.data[0].field()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix shapes do not match");
        let field = self.field().clone();
        let mut out = Self::zeros(&field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    /// Kronecker product; the left factor indexes the slow digit.
    pub fn kron(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            let a = self.get(r / rhs.rows, c / rhs.cols);
            let b = rhs.get(r % rhs.rows, c % rhs.cols);
            a * b
        })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }

    /// True when the matrix is `c` times the identity for some scalar `c`.
    pub fn scalar_multiple_of_identity(&self) -> Option<CyclotomicNumber> {
        if self.rows != self.cols || !self.is_diagonal() {
            return None;
        }
        let c = self.get(0, 0).clone();
        (0..self.rows).all(|i| self.get(i, i) == &c).then_some(c)
    }
}

impl fmt::Debug for CycloMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CycloMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).display_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `h(y, m)` with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeMatrix {
    pub matrix: CycloMatrix,
    pub y: CyclotomicNumber,
    pub m: i64,
}

/// `r(x; m, n)` with its parameters; `x = None` marks the closed form at `x = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralRMatrix {
    pub matrix: CycloMatrix,
    pub x: Option<CyclotomicNumber>,
    pub m: i64,
    pub n: i64,
}

/// `w(x|n)`: `1 / prod_{k=1}^{n} (1 - x zeta^k)` for `n >= 0`,
/// `prod_{k=n+1}^{0} (1 - x zeta^k)` for `n < 0`.
pub fn w_eval(x: &CyclotomicNumber, n: i64) -> Result<CyclotomicNumber> {
    let field = x.field();
    let one = CyclotomicNumber::one(field);
    let factor = |k: i64| &one - &(x * &CyclotomicNumber::zeta_pow(field, k));
    if n >= 0 {
        let mut p = one.clone();
        for k in 1..=n {
            p = &p * &factor(k);
        }
        p.inv().map_err(|_| Error::Pole(alloc::format!("w({x}|{n})")))
    } else {
        let mut p = one.clone();
        for k in n + 1..=0 {
            p = &p * &factor(k);
        }
        Ok(p)
    }
}

/// Memoized `w(base | n)` for one base value.
struct WTable<'a> {
    base: &'a CyclotomicNumber,
    memo: BTreeMap<i64, CyclotomicNumber>,
}

impl<'a> WTable<'a> {
    fn new(base: &'a CyclotomicNumber) -> Self {
        Self {
            base,
            memo: BTreeMap::new(),
        }
    }

    fn get(&mut self, n: i64) -> Result<CyclotomicNumber> {
        if let Some(v) = self.memo.get(&n) {
            return Ok(v.clone());
        }
        let v = w_eval(self.base, n)?;
        self.memo.insert(n, v.clone());
        Ok(v)
    }
}

/// `<i|h(y,m)|j> = zeta^{(j-i)m} <<y zeta^{j-i}>>_N`.
pub fn h_matrix(y: &CyclotomicNumber, m: i64) -> GaugeMatrix {
    let field = y.field().clone();
    let n = field.order();
    let matrix = CycloMatrix::from_fn(n as usize, n as usize, |i, j| {
        let d = j as i64 - i as i64;
        let shifted = y * &CyclotomicNumber::zeta_pow(&field, d);
        &CyclotomicNumber::zeta_pow(&field, d * m) * &double_angle(&shifted, n)
    });
    GaugeMatrix {
        matrix,
        y: y.clone(),
        m,
    }
}

/// The spectral R-matrix
/// `<i,j|r(x;m,n)|k,l> = <<x>> zeta^{(i-k+n)(l-j)} w(x/zeta|j-i-m) w(x|l-k+n) / (w(x/zeta|j-k+n-m) w(x/zeta|l-i))`.
pub fn r_spectral(x: &CyclotomicNumber, m: i64, n: i64) -> Result<SpectralRMatrix> {
    let field = x.field().clone();
    let nn = field.order() as usize;
    let x_over = x * &CyclotomicNumber::zeta_pow(&field, -1);
    let mut w_over = WTable::new(&x_over);
    let mut w_x = WTable::new(x);
    let prefactor = double_angle(x, field.order());
    let matrix = CycloMatrix::try_from_fn(nn * nn, nn * nn, |row, col| {
        let (i, j) = ((row / nn) as i64, (row % nn) as i64);
        let (k, l) = ((col / nn) as i64, (col % nn) as i64);
        let num = &w_over.get(j - i - m)? * &w_x.get(l - k + n)?;
        let den = &w_over.get(j - k + n - m)? * &w_over.get(l - i)?;
        let den_inv = den
            .inv()
            .map_err(|_| Error::Pole(alloc::format!("r entry ({i},{j};{k},{l})")))?;
        let phase = CyclotomicNumber::zeta_pow(&field, (i - k + n) * (l - j));
        Ok(&(&(&prefactor * &phase) * &num) * &den_inv)
    })?;
    Ok(SpectralRMatrix {
        matrix,
        x: Some(x.clone()),
        m,
        n,
    })
}

/// `V_{i,j,k,l}(zeta)`, or the conjugate form when `conjugate` is set.
pub fn v_symbol(i: i64, j: i64, k: i64, l: i64, field: &Arc<CyclotomicField>, conjugate: bool) -> CyclotomicNumber {
    let n = field.order();
    let a = prin(j - i - 1, n);
    let b = prin(i - l, n);
    let c = prin(l - k, n);
    let d = prin(k - j, n);
    if hev(i64::from(a + c), n) == 0 || hev(i64::from(b + d), n) == 0 {
        return CyclotomicNumber::zero(field);
    }
    let zeta = CyclotomicNumber::zeta(field);
    let zbar = zeta.conj();
    let den = &(&zeta_pochhammer(&zbar, a) * &zeta_pochhammer(&zeta, b))
        * &(&zeta_pochhammer(&zbar, c) * &zeta_pochhammer(&zeta, d));
    let v = &CyclotomicNumber::from_integer(field, n) * &den.inv().expect("Pochhammer below N is nonzero");
    if conjugate {
        v.conj()
    } else {
        v
    }
}

/// `<i,j|r(1;m,n)|k,l> = V_{i,j-m,k-n,l}(zeta) zeta^{k-l-n+(k-i-n)m}`.
pub fn r_at_one(m: i64, n: i64, field: &Arc<CyclotomicField>) -> SpectralRMatrix {
    let nn = field.order() as usize;
    let matrix = CycloMatrix::from_fn(nn * nn, nn * nn, |row, col| {
        let (i, j) = ((row / nn) as i64, (row % nn) as i64);
        let (k, l) = ((col / nn) as i64, (col % nn) as i64);
        let v = v_symbol(i, j - m, k - n, l, field, false);
        if v.is_zero() {
            return v;
        }
        &v * &CyclotomicNumber::zeta_pow(field, k - l - n + (k - i - n) * m)
    });
    SpectralRMatrix {
        matrix,
        x: None,
        m,
        n,
    }
}

/// The limit `x -> 1` reached exactly through the gauge symmetry:
/// `(1 (x) h(x,0)) r(x;m,n) (1 (x) h(x^{-1},0))`.
pub fn gauge_limit_oracle(x: &CyclotomicNumber, m: i64, n: i64) -> Result<CycloMatrix> {
    let field = x.field();
    let id = CycloMatrix::identity(field, field.order() as usize);
    let r = r_spectral(x, m, n)?;
    let left = id.kron(&h_matrix(x, 0).matrix);
    let right = id.kron(&h_matrix(&x.inv()?, 0).matrix);
    Ok(left.mul(&r.matrix).mul(&right))
}

/// `F_{ij} = zeta^{ij}` and its inverse.
pub fn fourier_matrix(field: &Arc<CyclotomicField>) -> (CycloMatrix, CycloMatrix) {
    let n = field.order() as usize;
    let f = CycloMatrix::from_fn(n, n, |i, j| CyclotomicNumber::zeta_pow(field, (i * j) as i64));
    let inv_n = CyclotomicNumber::from_ratio(field, 1, n as i64);
    let finv = CycloMatrix::from_fn(n, n, |i, j| &CyclotomicNumber::zeta_pow(field, -((i * j) as i64)) * &inv_n);
    (f, finv)
}

/// `(F (x) F) r (F (x) F)^{-1}`.
pub fn fourier_conjugate(r: &CycloMatrix) -> CycloMatrix {
    let (f, finv) = fourier_matrix(r.field());
    f.kron(&f).mul(r).mul(&finv.kron(&finv))
}

/// `F h(x,m) F^{-1}`, expected to be `diag(x^{prin(j-m)})`.
pub fn fourier_gauge(x: &CyclotomicNumber, m: i64) -> CycloMatrix {
    let (f, finv) = fourier_matrix(x.field());
    f.mul(&h_matrix(x, m).matrix).mul(&finv)
}

/// `diag(x^{prin(j-m)})`.
pub fn fourier_gauge_expected(x: &CyclotomicNumber, m: i64) -> Result<CycloMatrix> {
    let field = x.field();
    let n = field.order();
    let mut d = CycloMatrix::zeros(field, n as usize, n as usize);
    for j in 0..n as usize {
        d.set(j, j, x.pow(i64::from(prin(j as i64 - m, n)))?);
    }
    Ok(d)
}

/// The Fourier-side closed form
/// `delta_{prin(i-m-1)+j, prin(k-m-1)+l} zeta^{(j-n)k} x^{l-j} (zeta)_l (zeta)_{prin(i-m-1)} / ((zeta)_j (zeta)_{l-j} (zeta)_{prin(k-m-1)})`,
/// with entries for `l < j` set to zero.
pub fn fourier_r_closed_form(x: &CyclotomicNumber, m: i64, n: i64) -> Result<SpectralRMatrix> {
    let field = x.field().clone();
    let nn = field.order();
    let zeta = CyclotomicNumber::zeta(&field);
    let poch: Vec<CyclotomicNumber> = (0..nn).map(|a| zeta_pochhammer(&zeta, a)).collect();
    let size = (nn * nn) as usize;
    let matrix = CycloMatrix::try_from_fn(size, size, |row, col| {
        let (i, j) = ((row / nn as usize) as i64, (row % nn as usize) as i64);
        let (k, l) = ((col / nn as usize) as i64, (col % nn as usize) as i64);
        let pi = prin(i - m - 1, nn) as i64;
        let pk = prin(k - m - 1, nn) as i64;
        if pi + j != pk + l || l < j {
            return Ok(CyclotomicNumber::zero(&field));
        }
        let num = &poch[l as usize] * &poch[pi as usize];
        let den = &(&poch[j as usize] * &poch[(l - j) as usize]) * &poch[pk as usize];
        let scal = &CyclotomicNumber::zeta_pow(&field, (j - n) * k) * &x.pow(l - j)?;
        Ok(&(&scal * &num) * &den.inv()?)
    })?;
    Ok(SpectralRMatrix {
        matrix,
        x: Some(x.clone()),
        m,
        n,
    })
}

/// `f(x,y|z) = sum_{a=0}^{N-1} w(x|a) / w(y|a) z^a`, defined when
/// `(1 - y^N) z^N = 1 - x^N`.
pub fn f_function(x: &CyclotomicNumber, y: &CyclotomicNumber, z: &CyclotomicNumber) -> Result<CyclotomicNumber> {
    let field = x.field();
    let n = i64::from(field.order());
    let one = CyclotomicNumber::one(field);
    let lhs = &(&one - &y.pow(n)?) * &z.pow(n)?;
    let rhs = &one - &x.pow(n)?;
    if lhs != rhs {
        return Err(Error::Constraint(String::from("(1 - y^N) z^N = 1 - x^N")));
    }
    let mut acc = CyclotomicNumber::zero(field);
    let mut za = one;
    for a in 0..n {
        acc = &acc + &(&(&w_eval(x, a)? * &w_eval(y, a)?.inv()?) * &za);
        za = &za * z;
    }
    Ok(acc)
}

/// Right side of
/// `f(x zeta^a, x/zeta | zeta^{-b}) = x^{prin b} / (<<x>> w(x|prin a)) (zeta)_{pa+pb} / ((zeta)_{pa} (zeta)_{pb})`.
pub fn f_special_value(x: &CyclotomicNumber, a: i64, b: i64) -> Result<CyclotomicNumber> {
    let field = x.field();
    let n = field.order();
    let (pa, pb) = (prin(a, n), prin(b, n));
    let zeta = CyclotomicNumber::zeta(field);
    let num = &x.pow(i64::from(pb))? * &zeta_pochhammer(&zeta, pa + pb);
    let den = &(&double_angle(x, n) * &w_eval(x, i64::from(pa))?)
        * &(&zeta_pochhammer(&zeta, pa) * &zeta_pochhammer(&zeta, pb));
    Ok(&num * &den.inv()?)
}

/// Both sides of `(z;q)_s = sum_t (-z)^t q^{t(t-1)/2} (q)_s / ((q)_t (q)_{s-t})` at `q = zeta`.
pub fn q_binomial_sides(z: &CyclotomicNumber, s: u32) -> Result<(CyclotomicNumber, CyclotomicNumber)> {
    let field = z.field();
    let one = CyclotomicNumber::one(field);
    let zeta = CyclotomicNumber::zeta(field);
    let mut lhs = one.clone();
    for j in 0..i64::from(s) {
        lhs = &lhs * &(&one - &(z * &CyclotomicNumber::zeta_pow(field, j)));
    }
    let mut rhs = CyclotomicNumber::zero(field);
    let ps = zeta_pochhammer(&zeta, s);
    for t in 0..=s {
        let tt = i64::from(t);
        let sign_z = (-z).pow(tt)?;
        let term = &(&sign_z * &CyclotomicNumber::zeta_pow(field, tt * (tt - 1) / 2))
            * &(&ps * &(&zeta_pochhammer(&zeta, t) * &zeta_pochhammer(&zeta, s - t)).inv()?);
        rhs = &rhs + &term;
    }
    Ok((lhs, rhs))
}

/// `Z[zeta]` element as an integer vector in the power basis.
type ZVec = Vec<BigInt>;

/// Matrix scaled by a common rational factor so every entry is integral.
struct IntegralMatrix {
    dim: usize,
    entries: Vec<Option<ZVec>>,
}

impl IntegralMatrix {
    fn new(m: &CycloMatrix) -> Self {
        let den = m.entries().iter().fold(BigInt::one(), |acc, z| acc.lcm(z.denominator()));
        let entries = m
            .entries()
            .iter()
            .map(|z| {
                if z.is_zero() {
                    return None;
                }
                let scale = &den / z.denominator();
                Some(z.numerator_vector().iter().map(|c| c * &scale).collect())
            })
            .collect();
        Self { dim: m.rows(), entries }
    }

    fn get(&self, r: usize, c: usize) -> Option<&ZVec> {
        self.entries[r * self.dim + c].as_ref()
    }
}

/// `acc += a * b` in `Z[zeta]`.
fn zmul_add(acc: &mut ZVec, a: &ZVec, b: &ZVec, phi: &[BigInt]) {
    let d = acc.len();
    let mut prod = vec![BigInt::zero(); 2 * d - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                prod[i + j] += x * y;
            }
        }
    }
    for top in (d..prod.len()).rev() {
        if prod[top].is_zero() {
            continue;
        }
        let c = core::mem::take(&mut prod[top]);
        for (j, p) in phi[..d].iter().enumerate() {
            if !p.is_zero() {
                prod[top - d + j] -= &c * p;
            }
        }
    }
    for (s, p) in acc.iter_mut().zip(prod) {
        *s += p;
    }
}

/// Applies a two-site matrix to tensor factors `(p, q)` of a sparse vector
/// on the three-fold tensor power.
fn apply_two_site(
    r: &IntegralMatrix,
    sites: (usize, usize),
    v: &BTreeMap<[usize; 3], ZVec>,
    n: usize,
    phi: &[BigInt],
) -> BTreeMap<[usize; 3], ZVec> {
    let d = phi.len() - 1;
    let mut out: BTreeMap<[usize; 3], ZVec> = BTreeMap::new();
    for (idx, val) in v {
        let (k, l) = (idx[sites.0], idx[sites.1]);
        let col = k * n + l;
        for i in 0..n {
            for j in 0..n {
                if let Some(e) = r.get(i * n + j, col) {
                    let mut t = *idx;
                    t[sites.0] = i;
                    t[sites.1] = j;
                    let slot = out.entry(t).or_insert_with(|| vec![BigInt::zero(); d]);
                    zmul_add(slot, e, val, phi);
                }
            }
        }
    }
    out.retain(|_, z| z.iter().any(|c| !c.is_zero()));
    out
}

/// Checks `r12(a) r13(b) r23(c) = r23(c) r13(b) r12(a)` exactly.
///
/// Each matrix is scaled to integral entries first; both sides scale by
/// the same factor, so equality is unaffected.
pub fn yang_baxter_holds(a: &CycloMatrix, b: &CycloMatrix, c: &CycloMatrix) -> bool {
    let field = a.field().clone();
    let n = field.order() as usize;
    let phi = field.phi();
    let (ia, ib, ic) = (IntegralMatrix::new(a), IntegralMatrix::new(b), IntegralMatrix::new(c));
    let d = field.degree();
    for e0 in 0..n {
        for e1 in 0..n {
            for e2 in 0..n {
                let mut unit = vec![BigInt::zero(); d];
                unit[0] = BigInt::one();
                let start: BTreeMap<[usize; 3], ZVec> = [([e0, e1, e2], unit)].into_iter().collect();
                let lhs = apply_two_site(&ic, (1, 2), &start, n, phi);
                let lhs = apply_two_site(&ib, (0, 2), &lhs, n, phi);
                let lhs = apply_two_site(&ia, (0, 1), &lhs, n, phi);
                let rhs = apply_two_site(&ia, (0, 1), &start, n, phi);
                let rhs = apply_two_site(&ib, (0, 2), &rhs, n, phi);
                let rhs = apply_two_site(&ic, (1, 2), &rhs, n, phi);
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Precomputed R-matrices for Yang-Baxter checks at one spectral pair.
pub struct YangBaxterContext {
    order: u32,
    /// `r(x)`, `r(xy)`, `r(y)` indexed by `m1 * N + m2`.
    rx: Vec<CycloMatrix>,
    rxy: Vec<CycloMatrix>,
    ry: Vec<CycloMatrix>,
}

impl YangBaxterContext {
    /// Spectral pair `(x, y)`; `None` uses the closed form at `x = y = 1`.
    pub fn new(field: &Arc<CyclotomicField>, pair: Option<(&BigRational, &BigRational)>) -> Result<Self> {
        let n = field.order() as i64;
        let build = |x: Option<&CyclotomicNumber>| -> Result<Vec<CycloMatrix>> {
            let mut out = Vec::new();
            for m1 in 0..n {
                for m2 in 0..n {
                    out.push(match x {
                        Some(x) => r_spectral(x, m1, m2)?.matrix,
                        None => r_at_one(m1, m2, field).matrix,
                    });
                }
            }
            Ok(out)
        };
        let (rx, rxy, ry) = match pair {
            Some((x, y)) => {
                let xx = CyclotomicNumber::from_rational(field, x);
                let yy = CyclotomicNumber::from_rational(field, y);
                let xy = &xx * &yy;
                (build(Some(&xx))?, build(Some(&xy))?, build(Some(&yy))?)
            }
            None => {
                let r = build(None)?;
                (r.clone(), r.clone(), r)
            }
        };
        Ok(Self {
            order: field.order(),
            rx,
            rxy,
            ry,
        })
    }

    /// `r12(x;m1,m2) r13(xy;m1,m3) r23(y;m2,m3) = r23 r13 r12`.
    pub fn check(&self, m1: u32, m2: u32, m3: u32) -> bool {
        let n = self.order as usize;
        let idx = |a: u32, b: u32| a as usize * n + b as usize;
        yang_baxter_holds(&self.rx[idx(m1, m2)], &self.rxy[idx(m1, m3)], &self.ry[idx(m2, m3)])
    }
}

fn rat(r: &BigRational) -> String {
    alloc::format!("{r}")
}

/// Every discrete parameter triple `(m1, m2, m3)` in `(Z/N)^3`.
pub fn parameter_triples(order: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::with_capacity((order * order * order) as usize);
    for m1 in 0..order {
        for m2 in 0..order {
            for m3 in 0..order {
                out.push((m1, m2, m3));
            }
        }
    }
    out
}

/// One report line for a Yang-Baxter check.
pub fn yang_baxter_line(order: u32, pair: Option<(&BigRational, &BigRational)>, (m1, m2, m3): (u32, u32, u32), ok: bool) -> ReportLine {
    let spectral = match pair {
        Some((x, y)) => alloc::format!("x={},y={}", rat(x), rat(y)),
        None => String::from("x=1,y=1"),
    };
    ReportLine::new(
        ok,
        "YB",
        alloc::format!("{spectral},m=({m1},{m2},{m3})"),
        alloc::format!("N={order}"),
        "r12r13r23",
        "r23r13r12",
    )
}

/// The full identity suite for one order `N` and a list of spectral pairs.
pub fn rmatrix_suite(order: u32, pairs: &[(BigRational, BigRational)]) -> Result<Report> {
    let mut report = yang_baxter_suite(order, pairs)?;
    report.extend(identity_suite(order, pairs)?);
    Ok(report)
}

/// Yang-Baxter at every parameter triple, for each pair and at `x = y = 1`.
pub fn yang_baxter_suite(order: u32, pairs: &[(BigRational, BigRational)]) -> Result<Report> {
    let field = CyclotomicField::new(order);
    let mut report = Report::new();
    for (x, y) in pairs {
        let ctx = YangBaxterContext::new(&field, Some((x, y)))?;
        for t in parameter_triples(order) {
            report.push(yang_baxter_line(order, Some((x, y)), t, ctx.check(t.0, t.1, t.2)));
        }
    }
    let ctx = YangBaxterContext::new(&field, None)?;
    for t in parameter_triples(order) {
        report.push(yang_baxter_line(order, None, t, ctx.check(t.0, t.1, t.2)));
    }
    Ok(report)
}

/// The algebraic identities around the R-matrix, without Yang-Baxter.
pub fn identity_suite(order: u32, pairs: &[(BigRational, BigRational)]) -> Result<Report> {
    let field = CyclotomicField::new(order);
    let n = i64::from(order);
    let mut report = Report::new();
    let label = alloc::format!("N={order}");

    for (x, y) in pairs {
        report.extend(gauge_suite(&field, x, y)?);
    }
    let x = pairs
        .first()
        .map(|p| p.0.clone())
        .unwrap_or_else(|| BigRational::from_integer(2.into()));
    let xx = CyclotomicNumber::from_rational(&field, &x);
    for m in 0..n {
        let got = fourier_gauge(&xx, m);
        let want = fourier_gauge_expected(&xx, m)?;
        report.push(ReportLine::new(got == want, "fourier-h", alloc::format!("m={m}"), label.clone(), "FhF^-1", "diag"));
    }
    for m in 0..n {
        for nn in 0..n {
            let oracle = gauge_limit_oracle(&xx, m, nn)?;
            let closed = r_at_one(m, nn, &field).matrix;
            report.push(ReportLine::new(
                oracle == closed,
                "r1",
                alloc::format!("m={m},n={nn}"),
                label.clone(),
                "V-closed-form",
                "gauge-limit",
            ));
            let conj = fourier_conjugate(&r_spectral(&xx, m, nn)?.matrix);
            let closed = fourier_r_closed_form(&xx, m, nn)?.matrix;
            report.push(ReportLine::new(
                conj == closed,
                "fourier-r",
                alloc::format!("m={m},n={nn}"),
                label.clone(),
                "closed-form",
                "conjugation",
            ));
        }
    }
    for a in 0..n {
        for b in 0..n {
            let zeta = CyclotomicNumber::zeta(&field);
            let lhs = f_function(
                &(&xx * &zeta.pow(a)?),
                &(&xx * &zeta.pow(-1)?),
                &zeta.pow(-b)?,
            )?;
            let rhs = f_special_value(&xx, a, b)?;
            report.push(ReportLine::new(lhs == rhs, "f-special", alloc::format!("a={a},b={b}"), label.clone(), &lhs, &rhs));
        }
    }
    for s in 0..order {
        let z = CyclotomicNumber::zeta_pow(&field, 2);
        let (lhs, rhs) = q_binomial_sides(&(&z * &xx), s)?;
        report.push(ReportLine::new(lhs == rhs, "q-binomial", alloc::format!("s={s}"), label.clone(), &lhs, &rhs));
    }
    Ok(report)
}

/// Gauge identities at one spectral pair.
pub fn gauge_suite(field: &Arc<CyclotomicField>, x: &BigRational, y: &BigRational) -> Result<Report> {
    let n = i64::from(field.order());
    let label = alloc::format!("N={}", field.order());
    let xx = CyclotomicNumber::from_rational(field, x);
    let yy = CyclotomicNumber::from_rational(field, y);
    let yinv = yy.inv()?;
    let id = CycloMatrix::identity(field, n as usize);
    let mut report = Report::new();
    for m in 0..n {
        let lhs = h_matrix(&xx, m).matrix.mul(&h_matrix(&yy, m).matrix);
        let rhs = h_matrix(&(&xx * &yy), m).matrix;
        report.push(ReportLine::new(
            lhs == rhs,
            "h1",
            alloc::format!("x={},y={},m={m}", rat(x), rat(y)),
            label.clone(),
            "h(x)h(y)",
            "h(xy)",
        ));
    }
    for m in 0..n {
        for nn in 0..n {
            let r = r_spectral(&xx, m, nn)?.matrix;
            let target = r_spectral(&(&xx * &yy), m, nn)?.matrix;
            let first = h_matrix(&yy, m + 1)
                .matrix
                .kron(&id)
                .mul(&r)
                .mul(&h_matrix(&yinv, m + 1).matrix.kron(&id));
            let second = id
                .kron(&h_matrix(&yinv, 0).matrix)
                .mul(&r)
                .mul(&id.kron(&h_matrix(&yy, 0).matrix));
            let tag = alloc::format!("x={},y={},m={m},n={nn}", rat(x), rat(y));
            report.push(ReportLine::new(first == target, "h2-first", tag.clone(), label.clone(), "h1 r h1^-1", "r(xy)"));
            report.push(ReportLine::new(second == target, "h2-second", tag, label.clone(), "h2^-1 r h2", "r(xy)"));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn residues() {
        assert_eq!(prin(-1, 5), 4);
        assert_eq!(hev(7, 7), 0);
        assert_eq!(hev(0, 7), 1);
        assert_eq!(ResidueIndex::new(-8, 3).value(), 1);
    }

    #[test]
    fn w_examples() {
        let f = CyclotomicField::new(3);
        let x = CyclotomicNumber::from_ratio(&f, 2, 1);
        assert!(w_eval(&x, 0).unwrap().is_one());
        let expect = (&CyclotomicNumber::one(&f) - &x.pow(3).unwrap()).inv().unwrap();
        assert_eq!(w_eval(&x, 3).unwrap(), expect);
        let f2 = CyclotomicField::new(2);
        assert_eq!(w_eval(&CyclotomicNumber::from_ratio(&f2, 2, 1), 1).unwrap(), CyclotomicNumber::from_ratio(&f2, 1, 3));
        let z = CyclotomicNumber::zeta_pow(&f, 2);
        assert!(matches!(w_eval(&z, 1), Err(Error::Pole(_))));
    }

    #[test]
    fn w_recurrence_addition_and_periodicity() {
        let f = CyclotomicField::new(4);
        let one = CyclotomicNumber::one(&f);
        let x = CyclotomicNumber::from_ratio(&f, 3, 2);
        let n = 4i64;
        for k in -2 * n..=2 * n {
            let lhs = &w_eval(&x, k).unwrap() * &(&one - &(&x * &CyclotomicNumber::zeta_pow(&f, k)));
            assert_eq!(lhs, w_eval(&x, k - 1).unwrap());
            let per = &(&one - &x.pow(n).unwrap()) * &w_eval(&x, k + n).unwrap();
            assert_eq!(per, w_eval(&x, k).unwrap());
        }
        for a in -n..=n {
            for b in -n..=n {
                let shifted = &x * &CyclotomicNumber::zeta_pow(&f, a);
                assert_eq!(w_eval(&x, a + b).unwrap(), &w_eval(&x, a).unwrap() * &w_eval(&shifted, b).unwrap());
            }
        }
    }

    #[test]
    fn h_at_one_is_identity() {
        let f = CyclotomicField::new(4);
        for m in 0..4 {
            let h = h_matrix(&CyclotomicNumber::one(&f), m);
            assert_eq!(h.matrix, CycloMatrix::identity(&f, 4));
        }
    }

    #[test]
    fn v_symbol_base_value() {
        for n in 2..=6 {
            let f = CyclotomicField::new(n);
            assert!(v_symbol(0, 0, 0, 0, &f, false).is_one());
            assert!(v_symbol(0, 0, 0, 0, &f, true).is_one());
        }
    }

    #[test]
    fn v_symbol_hev_kill() {
        let f = CyclotomicField::new(4);
        // prin(j-i-1) + prin(l-k) = 3 + 3 >= 4
        assert!(v_symbol(0, 0, 1, 0, &f, false).is_zero());
    }

    #[test]
    fn small_suite_passes() {
        let report = rmatrix_suite(2, &[(q(2, 1), q(3, 1))]).unwrap();
        assert!(report.all_pass(), "{report}");
    }

    #[test]
    fn f_constraint_is_enforced() {
        let f = CyclotomicField::new(3);
        let two = CyclotomicNumber::from_ratio(&f, 2, 1);
        let three = CyclotomicNumber::from_ratio(&f, 3, 1);
        assert!(matches!(f_function(&two, &three, &two), Err(Error::Constraint(_))));
    }

    #[test]
    fn standard_specialization_conserves_charge() {
        for n in 2..=4u32 {
            let f = CyclotomicField::new(n);
            let one = CyclotomicNumber::one(&f);
            let r = fourier_r_closed_form(&one, -1, -1).unwrap().matrix;
            let nn = n as usize;
            for row in 0..nn * nn {
                for col in 0..nn * nn {
                    let (i, j, k, l) = (row / nn, row % nn, col / nn, col % nn);
                    if (i + j) % nn != (k + l) % nn || l < j {
                        assert!(r.get(row, col).is_zero());
                    }
                }
            }
            assert!(yang_baxter_holds(&r, &r, &r), "braid relation at N = {n}");
        }
    }
}
