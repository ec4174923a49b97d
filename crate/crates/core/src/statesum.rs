//! Long-knot diagrams and their exact state-sum contraction at a root of unity.
//!
//! A diagram is read bottom to top as a list of slices. Each slice carries
//! one event acting on adjacent strand positions; strand orientations are
//! tracked to select the crossing type and validate extrema.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::algebra::{CyclotomicField, CyclotomicNumber};
use crate::error::{Error, Result};
use crate::expansion::{jones_from_habiro, HabiroSequence};
use crate::report::{Report, ReportLine};
use crate::rmatrix::{v_symbol, CycloMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Up,
    Down,
}

impl Orientation {
    pub fn code(self) -> &'static str {
        match self {
            Orientation::Up => "u",
            Orientation::Down => "d",
        }
    }

    pub fn from_code(s: &str) -> Option<Self> {
        match s {
            "u" | "up" => Some(Orientation::Up),
            "d" | "down" => Some(Orientation::Down),
            _ => None,
        }
    }
}

/// Which of the four weight formulas a crossing uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum WeightForm {
    PositiveA,
    PositiveB,
    NegativeA,
    NegativeB,
}

/// The eight oriented crossing types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrossingKind {
    X1Pos,
    X2Pos,
    X3Pos,
    X4Pos,
    X1Neg,
    X2Neg,
    X3Neg,
    X4Neg,
}

impl CrossingKind {
    pub const ALL: [CrossingKind; 8] = [
        CrossingKind::X1Pos,
        CrossingKind::X2Pos,
        CrossingKind::X3Pos,
        CrossingKind::X4Pos,
        CrossingKind::X1Neg,
        CrossingKind::X2Neg,
        CrossingKind::X3Neg,
        CrossingKind::X4Neg,
    ];

    pub fn code(self) -> &'static str {
        match self {
            CrossingKind::X1Pos => "X1+",
            CrossingKind::X2Pos => "X2+",
            CrossingKind::X3Pos => "X3+",
            CrossingKind::X4Pos => "X4+",
            CrossingKind::X1Neg => "X1-",
            CrossingKind::X2Neg => "X2-",
            CrossingKind::X3Neg => "X3-",
            CrossingKind::X4Neg => "X4-",
        }
    }

    pub fn from_code(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.code() == s)
    }

    /// +1 or -1.
    pub fn sign(self) -> i32 {
        if (self as u8) < 4 {
            1
        } else {
            -1
        }
    }

    /// Orientations of the two incoming strands, left then right.
    pub fn bottom_orientation(self) -> (Orientation, Orientation) {
        use Orientation::{Down, Up};
        match (self as u8) % 4 {
            0 => (Up, Up),
            1 => (Down, Up),
            2 => (Down, Down),
            _ => (Up, Down),
        }
    }

    /// The kind with the given sign and incoming orientations.
    pub fn for_orientation(sign: i32, bottom: (Orientation, Orientation)) -> Self {
        let base = Self::ALL[..4]
            .iter()
            .copied()
            .find(|k| k.bottom_orientation() == bottom)
            .expect("four orientation pairs are covered");
        if sign >= 0 {
            base
        } else {
            Self::ALL[base as usize + 4]
        }
    }

    /// Letters attached to the corners (sw, se, nw, ne).
    fn corners(self) -> [u8; 4] {
        let word: &[u8; 4] = match (self as u8) % 4 {
            1 => b"jkil",
            2 => b"ijlk",
            _ => b"klji",
        };
        *word
    }

    fn form(self) -> WeightForm {
        match self {
            CrossingKind::X4Pos => WeightForm::PositiveB,
            CrossingKind::X4Neg => WeightForm::NegativeB,
            k if k.sign() > 0 => WeightForm::PositiveA,
            _ => WeightForm::NegativeA,
        }
    }
}

impl fmt::Display for CrossingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// One slice of a sliced diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Event {
    Crossing { kind: CrossingKind, pos: usize },
    /// Creates two strands at `pos`, oriented up then down.
    Cup { pos: usize },
    /// Closes the strands at `pos`, `pos + 1`, which must be oriented down then up.
    Cap { pos: usize },
    Identity,
}

/// A sliced tangle diagram with given incoming orientations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tangle {
    pub bottom: Vec<Orientation>,
    pub events: Vec<Event>,
}

/// Orientation labels before and after one slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slice {
    pub event: Event,
    pub before: Vec<Orientation>,
    pub after: Vec<Orientation>,
}

impl Tangle {
    pub fn new(bottom: Vec<Orientation>, events: Vec<Event>) -> Self {
        Self { bottom, events }
    }

    /// Builds a tangle from `(position, sign)` crossings, deriving each
    /// crossing type from the current orientations.
    pub fn from_word(bottom: Vec<Orientation>, prefix: &[Event], word: &[(usize, i32)], suffix: &[Event]) -> Result<Self> {
        let mut t = Self::new(bottom, prefix.to_vec());
        let mut orient = t.slices()?.last().map(|s| s.after.clone()).unwrap_or_else(|| t.bottom.clone());
        for &(pos, sign) in word {
            if pos + 1 >= orient.len() {
                return Err(Error::InvalidDiagram(alloc::format!("crossing at {pos} with {} strands", orient.len())));
            }
            let kind = CrossingKind::for_orientation(sign, (orient[pos], orient[pos + 1]));
            orient.swap(pos, pos + 1);
            t.events.push(Event::Crossing { kind, pos });
        }
        t.events.extend_from_slice(suffix);
        Ok(t)
    }

    /// Tracks orientations through every event, checking consistency.
    pub fn slices(&self) -> Result<Vec<Slice>> {
        let mut orient = self.bottom.clone();
        let mut out = Vec::with_capacity(self.events.len());
        for (idx, &event) in self.events.iter().enumerate() {
            let before = orient.clone();
            let bad = |msg: String| Error::InvalidDiagram(alloc::format!("slice {idx}: {msg}"));
            match event {
                Event::Crossing { kind, pos } => {
                    if pos + 1 >= orient.len() {
                        return Err(bad(alloc::format!("crossing at {pos} with {} strands", orient.len())));
                    }
                    if (orient[pos], orient[pos + 1]) != kind.bottom_orientation() {
                        return Err(bad(alloc::format!("orientation mismatch for {kind}")));
                    }
                    orient.swap(pos, pos + 1);
                }
                Event::Cup { pos } => {
                    if pos > orient.len() {
                        return Err(bad(alloc::format!("cup at {pos} with {} strands", orient.len())));
                    }
                    orient.splice(pos..pos, [Orientation::Up, Orientation::Down]);
                }
                Event::Cap { pos } => {
                    if pos + 1 >= orient.len() {
                        return Err(bad(alloc::format!("cap at {pos} with {} strands", orient.len())));
                    }
                    if (orient[pos], orient[pos + 1]) != (Orientation::Down, Orientation::Up) {
                        return Err(bad("cap requires orientations (d,u)".to_string()));
                    }
                    orient.drain(pos..pos + 2);
                }
                Event::Identity => {}
            }
            out.push(Slice {
                event,
                before,
                after: orient.clone(),
            });
        }
        Ok(out)
    }

    pub fn top(&self) -> Result<Vec<Orientation>> {
        Ok(self.slices()?.last().map(|s| s.after.clone()).unwrap_or_else(|| self.bottom.clone()))
    }

    /// Positive minus negative crossings.
    pub fn writhe(&self) -> i64 {
        self.events
            .iter()
            .map(|e| match e {
                Event::Crossing { kind, .. } => i64::from(kind.sign()),
                _ => 0,
            })
            .sum()
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Event::Crossing { .. })).count()
    }

    pub fn max_strands(&self) -> Result<usize> {
        Ok(self
            .slices()?
            .iter()
            .map(|s| s.before.len().max(s.after.len()))
            .max()
            .unwrap_or(self.bottom.len()))
    }

    /// Number of closed loops the diagram contains.
    pub fn closed_components(&self) -> usize {
        // Each strand carries an arc label; labels merge at caps.
        let mut parent: Vec<usize> = (0..self.bottom.len()).collect();
        fn find(p: &mut [usize], mut a: usize) -> usize {
            while p[a] != a {
                p[a] = p[p[a]];
                a = p[a];
            }
            a
        }
        let mut labels: Vec<usize> = (0..self.bottom.len()).collect();
        let mut closed = 0;
        for event in &self.events {
            match *event {
                Event::Crossing { pos, .. } if pos + 1 < labels.len() => labels.swap(pos, pos + 1),
                Event::Cup { pos } if pos <= labels.len() => {
                    let id = parent.len();
                    parent.push(id);
                    labels.splice(pos..pos, [id, id]);
                }
                Event::Cap { pos } if pos + 1 < labels.len() => {
                    let (a, b) = (find(&mut parent, labels[pos]), find(&mut parent, labels[pos + 1]));
                    if a == b {
                        closed += 1;
                    } else {
                        parent[a] = b;
                    }
                    labels.drain(pos..pos + 2);
                }
                _ => {}
            }
        }
        closed
    }
}

/// A validated long-knot diagram: one upward strand in and out, writhe zero,
/// a single component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongKnotDiagram {
    tangle: Tangle,
}

impl LongKnotDiagram {
    pub fn new(events: Vec<Event>) -> Result<Self> {
        validate_diagram(Tangle::new(vec![Orientation::Up], events))
    }

    pub fn tangle(&self) -> &Tangle {
        &self.tangle
    }

    pub fn events(&self) -> &[Event] {
        &self.tangle.events
    }
}

/// Checks every long-knot invariant and returns the normalized diagram with
/// identity slices dropped.
pub fn validate_diagram(tangle: Tangle) -> Result<LongKnotDiagram> {
    if tangle.bottom != [Orientation::Up] {
        return Err(Error::InvalidDiagram("a long knot enters as one upward strand".to_string()));
    }
    let top = tangle.top()?;
    if top != [Orientation::Up] {
        return Err(Error::InvalidDiagram(alloc::format!("expected one upward outgoing strand, found {}", top.len())));
    }
    let w = tangle.writhe();
    if w != 0 {
        return Err(Error::InvalidDiagram(alloc::format!("writhe {w} is not zero")));
    }
    if tangle.closed_components() != 0 {
        return Err(Error::InvalidDiagram("diagram has more than one component".to_string()));
    }
    let events = tangle.events.into_iter().filter(|e| *e != Event::Identity).collect();
    Ok(LongKnotDiagram {
        tangle: Tangle::new(tangle.bottom, events),
    })
}

/// Weight of a crossing with corner labels `(i, j, k, l)` placed per its
/// type, colored by the spectral pair `(m, n)`.
pub fn crossing_weight(
    kind: CrossingKind,
    (i, j, k, l): (i64, i64, i64, i64),
    m: i64,
    n: i64,
    field: &Arc<CyclotomicField>,
) -> CyclotomicNumber {
    let (v, e) = match kind.form() {
        WeightForm::PositiveA => (v_symbol(i, j - m, k - n, l, field, false), k - l - n + (k - i - n) * m),
        WeightForm::PositiveB => (v_symbol(k, l, i - m, j - n - 1, field, true), j - 1 - k - n + (j - l - n) * m),
        WeightForm::NegativeA => (v_symbol(i, j - n, k - m, l, field, true), l - k + (l - j + 1 + n) * m),
        WeightForm::NegativeB => (v_symbol(k, l, i - n, j - m - 1, field, false), k - j + 1 + (k - i + 1 + n) * m),
    };
    if v.is_zero() {
        return v;
    }
    &v * &CyclotomicNumber::zeta_pow(field, e)
}

/// Weight of the crossing as a transfer from bottom colors `(sw, se)` to
/// top colors `(nw, ne)`.
pub fn crossing_transfer(
    kind: CrossingKind,
    [sw, se, nw, ne]: [i64; 4],
    m: i64,
    n: i64,
    field: &Arc<CyclotomicField>,
) -> CyclotomicNumber {
    let mut ijkl = [0i64; 4];
    for (letter, value) in kind.corners().into_iter().zip([sw, se, nw, ne]) {
        ijkl[(letter - b'i') as usize] = value;
    }
    crossing_weight(kind, (ijkl[0], ijkl[1], ijkl[2], ijkl[3]), m, n, field)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegmentKind {
    Up,
    Down,
    Cap,
    Cup,
}

/// Every segment carries `delta_{i,j}`.
pub fn segment_weight(_kind: SegmentKind, i: i64, j: i64, field: &Arc<CyclotomicField>) -> CyclotomicNumber {
    if i == j {
        CyclotomicNumber::one(field)
    } else {
        CyclotomicNumber::zero(field)
    }
}

/// Sparse tangle invariant: `(bottom colors, top colors) -> weight`.
pub type TangleTensor = BTreeMap<(Vec<u32>, Vec<u32>), CyclotomicNumber>;

type Transfer = Vec<Vec<CyclotomicNumber>>;

/// Nonzero crossing transfers indexed by `sw * N + se`, then `nw * N + ne`.
fn transfer_table(kind: CrossingKind, m: i64, n: i64, field: &Arc<CyclotomicField>) -> Transfer {
    let nn = i64::from(field.order());
    let mut table = Vec::with_capacity((nn * nn) as usize);
    for sw in 0..nn {
        for se in 0..nn {
            let mut row = Vec::with_capacity((nn * nn) as usize);
            for nw in 0..nn {
                for ne in 0..nn {
                    row.push(crossing_transfer(kind, [sw, se, nw, ne], m, n, field));
                }
            }
            table.push(row);
        }
    }
    table
}

/// Contracts a tangle slice by slice with every crossing colored by `(m, n)`.
pub fn contract_tangle(tangle: &Tangle, field: &Arc<CyclotomicField>, m: i64, n: i64) -> Result<TangleTensor> {
    tangle.slices()?;
    let order = field.order();
    let mut tables: BTreeMap<CrossingKind, Transfer> = BTreeMap::new();
    for e in &tangle.events {
        if let Event::Crossing { kind, .. } = e {
            tables.entry(*kind).or_insert_with(|| transfer_table(*kind, m, n, field));
        }
    }
    let mut out = TangleTensor::new();
    for bottom in colorings(tangle.bottom.len(), order) {
        let mut states: BTreeMap<Vec<u32>, CyclotomicNumber> = BTreeMap::new();
        states.insert(bottom.clone(), CyclotomicNumber::one(field));
        for event in &tangle.events {
            states = step(states, *event, &tables, order);
        }
        for (top, v) in states {
            out.insert((bottom.clone(), top), v);
        }
    }
    Ok(out)
}

fn colorings(len: usize, order: u32) -> Vec<Vec<u32>> {
    let mut all = vec![Vec::new()];
    for _ in 0..len {
        all = all
            .into_iter()
            .flat_map(|c| {
                (0..order).map(move |a| {
                    let mut c = c.clone();
                    c.push(a);
                    c
                })
            })
            .collect();
    }
    all
}

fn step(
    states: BTreeMap<Vec<u32>, CyclotomicNumber>,
    event: Event,
    tables: &BTreeMap<CrossingKind, Transfer>,
    order: u32,
) -> BTreeMap<Vec<u32>, CyclotomicNumber> {
    let mut next: BTreeMap<Vec<u32>, CyclotomicNumber> = BTreeMap::new();
    let mut add = |key: Vec<u32>, v: CyclotomicNumber| {
        match next.get_mut(&key) {
            Some(slot) => *slot = &*slot + &v,
            None => {
                next.insert(key, v);
            }
        }
    };
    match event {
        Event::Identity => return states,
        Event::Cup { pos } => {
            for (s, v) in &states {
                for c in 0..order {
                    let mut t = s.clone();
                    t.splice(pos..pos, [c, c]);
                    add(t, v.clone());
                }
            }
        }
        Event::Cap { pos } => {
            for (s, v) in &states {
                if s[pos] == s[pos + 1] {
                    let mut t = s.clone();
                    t.drain(pos..pos + 2);
                    add(t, v.clone());
                }
            }
        }
        Event::Crossing { kind, pos } => {
            let table = &tables[&kind];
            let nn = order as usize;
            for (s, v) in &states {
                let row = &table[s[pos] as usize * nn + s[pos + 1] as usize];
                for (col, w) in row.iter().enumerate() {
                    if w.is_zero() {
                        continue;
                    }
                    let mut t = s.clone();
                    t[pos] = (col / nn) as u32;
                    t[pos + 1] = (col % nn) as u32;
                    add(t, v * w);
                }
            }
        }
    }
    next.retain(|_, v| !v.is_zero());
    next
}

/// The matrix `<D>_{N,n}`, indexed by (outgoing color, incoming color).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantMatrix {
    pub order: u32,
    pub color: u32,
    pub knot: String,
    pub matrix: CycloMatrix,
}

impl InvariantMatrix {
    pub fn get(&self, top: usize, bottom: usize) -> &CyclotomicNumber {
        self.matrix.get(top, bottom)
    }

    /// The diagonal value when the matrix is a scalar multiple of the identity.
    pub fn scalar(&self) -> Option<CyclotomicNumber> {
        self.matrix.scalar_multiple_of_identity()
    }

    /// Every entry has a denominator dividing a power of `N`.
    pub fn entries_in_ring(&self) -> bool {
        let n = BigInt::from(self.order);
        self.matrix.entries().iter().all(|z| {
            let mut d = z.denominator().clone();
            loop {
                let g = d.gcd(&n);
                if g.is_one() {
                    return d.is_one();
                }
                d /= g;
            }
        })
    }
}

/// `<D>_{N,n}` for a validated long knot, using `m = n = color` at every crossing.
pub fn contract(diagram: &LongKnotDiagram, order: u32, color: u32, knot: &str) -> Result<InvariantMatrix> {
    if order == 0 {
        return Err(Error::InvalidParameter("N must be positive".to_string()));
    }
    let field = CyclotomicField::new(order);
    let c = i64::from(color);
    let tensor = contract_tangle(diagram.tangle(), &field, c, c)?;
    let nn = order as usize;
    let mut matrix = CycloMatrix::zeros(&field, nn, nn);
    for ((bottom, top), v) in tensor {
        matrix.set(top[0] as usize, bottom[0] as usize, v);
    }
    Ok(InvariantMatrix {
        order,
        color,
        knot: knot.to_string(),
        matrix,
    })
}

/// The reduced seven-fold sum for the figure-eight knot, computed directly.
pub fn naive_sum_41(order: u32, color: u32) -> Result<InvariantMatrix> {
    if order == 0 {
        return Err(Error::InvalidParameter("N must be positive".to_string()));
    }
    let field = CyclotomicField::new(order);
    let n = i64::from(order);
    let nu = n as usize;
    // V(0, b, c, d) tables for both conjugations.
    let idx = |b: i64, c: i64, d: i64| {
        (b.rem_euclid(n) as usize * nu + c.rem_euclid(n) as usize) * nu + d.rem_euclid(n) as usize
    };
    let mut vz = Vec::with_capacity(nu * nu * nu);
    let mut vb = Vec::with_capacity(nu * nu * nu);
    for b in 0..n {
        for c in 0..n {
            for d in 0..n {
                vz.push(v_symbol(0, b, c, d, &field, false));
                vb.push(v_symbol(0, b, c, d, &field, true));
            }
        }
    }
    let twist = i64::from(color) + 1;
    let mut by_diff = Vec::with_capacity(nu);
    for diff in 0..n {
        // Accumulate by power of zeta to keep multiplications down.
        let mut buckets = vec![CyclotomicNumber::zero(&field); nu];
        for k1 in 0..n {
            for k2 in 0..n {
                for k3 in 0..n {
                    for k7 in 0..n {
                        let a = &vb[idx(k3, k7, k2)];
                        if a.is_zero() {
                            continue;
                        }
                        for k6 in 0..n {
                            for k4 in 0..n {
                                let b = &vz[idx(k4, k7 - k6, k3 - k6 - 1)];
                                if b.is_zero() {
                                    continue;
                                }
                                let ab = a * b;
                                for k5 in 0..n {
                                    let c = &vb[idx(k5, k2 + k1 - k6, k4 + k1 - 1)];
                                    if c.is_zero() {
                                        continue;
                                    }
                                    let d = &vz[idx(k1, diff - k6 + k1, k5)];
                                    if d.is_zero() {
                                        continue;
                                    }
                                    let e = ((diff + 2 * k1 + k2 - k3 + k4 - k5 - k7) * twist).rem_euclid(n) as usize;
                                    buckets[e] = &buckets[e] + &(&ab * &(c * d));
                                }
                            }
                        }
                    }
                }
            }
        }
        let total = buckets
            .into_iter()
            .enumerate()
            .fold(CyclotomicNumber::zero(&field), |acc, (e, v)| &acc + &(&v * &CyclotomicNumber::zeta_pow(&field, e as i64)));
        by_diff.push(total);
    }
    let matrix = CycloMatrix::from_fn(nu, nu, |i, j| by_diff[(j as i64 - i as i64).rem_euclid(n) as usize].clone());
    Ok(InvariantMatrix {
        order,
        color,
        knot: "4_1".to_string(),
        matrix,
    })
}

/// Compares `<D>_{N,n}` with `J_{n+1}(zeta_N)` times the identity.
pub fn conjecture2_check(seq: &HabiroSequence, diagram: &LongKnotDiagram, order: u32, color: u32) -> Result<Report> {
    let field = CyclotomicField::new(order);
    let knot = seq.knot();
    let inv = contract(diagram, order, color, &knot)?;
    let expected = jones_from_habiro(seq, color + 1)?.eval_zeta(&field, 1);
    let mut report = Report::new();
    let nn = order as usize;
    let zero = CyclotomicNumber::zero(&field);
    let mut pass = true;
    for i in 0..nn {
        for j in 0..nn {
            let want = if i == j { &expected } else { &zero };
            pass &= inv.get(i, j) == want;
        }
    }
    let lhs = match inv.scalar() {
        Some(s) => alloc::format!("{s}*1"),
        None => "non-scalar".to_string(),
    };
    report.push(ReportLine::new(
        pass,
        knot,
        alloc::format!("N={order}"),
        alloc::format!("n={color}"),
        lhs,
        alloc::format!("{expected}*1"),
    ));
    Ok(report)
}

/// Entrywise comparison of two diagrams of the same knot.
pub fn invariance_check(
    knot: &str,
    first: &LongKnotDiagram,
    second: &LongKnotDiagram,
    order: u32,
    color: u32,
) -> Result<Report> {
    let a = contract(first, order, color, knot)?;
    let b = contract(second, order, color, knot)?;
    let show = |m: &InvariantMatrix| match m.scalar() {
        Some(s) => alloc::format!("{s}*1"),
        None => "non-scalar".to_string(),
    };
    let mut report = Report::new();
    report.push(ReportLine::new(
        a == b,
        knot,
        alloc::format!("N={order}"),
        alloc::format!("n={color}"),
        show(&a),
        show(&b),
    ));
    Ok(report)
}

/// Curl on an upward strand made of two crossings of the given signs.
pub fn curl(first: i32, second: i32) -> Vec<Event> {
    vec![
        Event::Cup { pos: 1 },
        Event::Crossing {
            kind: CrossingKind::for_orientation(first, (Orientation::Up, Orientation::Down)),
            pos: 1,
        },
        Event::Crossing {
            kind: CrossingKind::for_orientation(second, (Orientation::Up, Orientation::Down)),
            pos: 0,
        },
        Event::Cap { pos: 0 },
    ]
}

pub mod builtin {
    //! Sample diagrams shipped with the engine.

    use super::*;

    fn cross(kind: CrossingKind, pos: usize) -> Event {
        Event::Crossing { kind, pos }
    }

    /// Two positive and two negative crossings.
    pub fn figure_eight() -> LongKnotDiagram {
        use CrossingKind::*;
        LongKnotDiagram::new(vec![
            Event::Cup { pos: 1 },
            cross(X1Pos, 0),
            cross(X4Pos, 1),
            cross(X4Neg, 0),
            cross(X2Neg, 0),
            Event::Cap { pos: 1 },
        ])
        .expect("built-in diagram is valid")
    }

    /// A second projection of the figure-eight knot with six crossings.
    pub fn figure_eight_alt() -> LongKnotDiagram {
        let word = [(0, 1), (0, 1), (1, -1), (0, 1), (1, -1), (0, -1)];
        let t = Tangle::from_word(vec![Orientation::Up], &[Event::Cup { pos: 1 }], &word, &[Event::Cap { pos: 1 }])
            .expect("word fits three strands");
        validate_diagram(t).expect("built-in diagram is valid")
    }

    /// Figure-eight with a positive and a negative curl inserted below it.
    pub fn figure_eight_with_curls() -> LongKnotDiagram {
        let mut events = curl(1, 1);
        events.extend(curl(-1, -1));
        events.extend_from_slice(figure_eight().events());
        LongKnotDiagram::new(events).expect("built-in diagram is valid")
    }

    /// Trefoil with three crossings balanced by three opposite ones; matches
    /// the chirality of the built-in trefoil Habiro data.
    pub fn trefoil() -> LongKnotDiagram {
        use CrossingKind::*;
        LongKnotDiagram::new(vec![
            Event::Cup { pos: 1 },
            cross(X1Neg, 0),
            cross(X1Neg, 0),
            cross(X1Neg, 0),
            cross(X4Pos, 1),
            cross(X2Pos, 1),
            cross(X4Pos, 1),
            Event::Cap { pos: 1 },
        ])
        .expect("built-in diagram is valid")
    }

    pub fn unknot() -> LongKnotDiagram {
        LongKnotDiagram::new(Vec::new()).expect("empty diagram is valid")
    }

    /// The unknot with one positive and one negative curl.
    pub fn unknot_with_curls() -> LongKnotDiagram {
        let mut events = curl(1, 1);
        events.extend(curl(-1, -1));
        LongKnotDiagram::new(events).expect("balanced curls are valid")
    }

    /// Built-in diagram by knot name.
    pub fn by_name(name: &str) -> Result<LongKnotDiagram> {
        match name {
            "4_1" => Ok(figure_eight()),
            "4_1alt" => Ok(figure_eight_alt()),
            "4_1curls" => Ok(figure_eight_with_curls()),
            "3_1" => Ok(trefoil()),
            "0_1" | "unknot" => Ok(unknot()),
            "0_1curls" => Ok(unknot_with_curls()),
            other => Err(Error::UnknownKnot(other.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uncolored_base_weight() {
        let f = CyclotomicField::new(4);
        assert!(crossing_weight(CrossingKind::X1Pos, (0, 0, 0, 0), 0, 0, &f).is_one());
    }

    #[test]
    fn negative_weights_conjugate_at_zero_color() {
        for order in 2..=4 {
            let f = CyclotomicField::new(order);
            let n = i64::from(order);
            for t in 0..n.pow(4) {
                let c = (t / (n * n * n), t / (n * n) % n, t / n % n, t % n);
                for p in &CrossingKind::ALL[..4] {
                    let (p, q) = (*p, CrossingKind::for_orientation(-1, p.bottom_orientation()));
                    assert_eq!(crossing_weight(q, c, 0, 0, &f), crossing_weight(p, c, 0, 0, &f).conj());
                }
            }
        }
    }

    #[test]
    fn rejects_bad_diagrams() {
        assert!(LongKnotDiagram::new(curl(1, 1)).is_err());
        let wrong = vec![Event::Cup { pos: 0 }, Event::Cap { pos: 0 }];
        assert!(matches!(LongKnotDiagram::new(wrong), Err(Error::InvalidDiagram(_))));
        let mismatch = vec![Event::Crossing {
            kind: CrossingKind::X1Pos,
            pos: 0,
        }];
        assert!(LongKnotDiagram::new(mismatch).is_err());
        // A free loop next to the strand.
        let free = vec![
            Event::Cup { pos: 1 },
            Event::Crossing { kind: CrossingKind::X4Pos, pos: 1 },
            Event::Crossing { kind: CrossingKind::X2Neg, pos: 1 },
            Event::Crossing { kind: CrossingKind::X4Neg, pos: 1 },
            Event::Crossing { kind: CrossingKind::X2Pos, pos: 1 },
        ];
        assert!(LongKnotDiagram::new(free).is_err());
    }

    #[test]
    fn segment_is_delta() {
        let f = CyclotomicField::new(3);
        assert!(segment_weight(SegmentKind::Up, 1, 1, &f).is_one());
        assert!(segment_weight(SegmentKind::Cap, 1, 2, &f).is_zero());
    }

    #[test]
    fn figure_eight_at_two() {
        let m = contract(&builtin::figure_eight(), 2, 1, "4_1").unwrap();
        assert_eq!(m.scalar().unwrap(), CyclotomicNumber::from_integer(&CyclotomicField::new(2), 5));
    }

    #[test]
    fn color_zero_is_trivial() {
        for order in 2..=4 {
            let m = contract(&builtin::figure_eight(), order, 0, "4_1").unwrap();
            assert!(m.scalar().unwrap().is_one());
        }
    }
}
