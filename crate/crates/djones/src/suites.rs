//! Verification grids, parallel over independent cells.
//!
//! Every function returns its report lines in the same order as the
//! sequential loop would, so output stays byte-stable.

use djones_core::expansion::HabiroSequence;
use djones_core::qdiff::{builtin_relation, verify_relation, RelationMode};
use djones_core::rmatrix::{identity_suite, parameter_triples, yang_baxter_line, YangBaxterContext};
use djones_core::statesum::{conjecture2_check, contract, invariance_check, naive_sum_41, LongKnotDiagram};
use djones_core::{CyclotomicField, Report, ReportLine, Result};
use num_rational::BigRational;
use rayon::prelude::*;

fn collect(parts: Vec<Result<Report>>) -> Result<Report> {
    let mut out = Report::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

/// The built-in relation for `knot` on the grid `ms x ns` at `x = q^n`.
pub fn recursion_grid(knot: &str, ms: &[i64], ns: &[u32]) -> Result<Report> {
    let seq = HabiroSequence::builtin(knot)?;
    let rel = builtin_relation(knot)?;
    let parts = ns
        .par_iter()
        .map(|&n| verify_relation(&seq, &rel, ms, &RelationMode::Colored(vec![n])))
        .collect();
    collect(parts)
}

/// The built-in relation at `x = 1` in the Habiro truncation.
pub fn recursion_habiro(knot: &str, ms: &[i64], level: u32) -> Result<Report> {
    let seq = HabiroSequence::builtin(knot)?;
    let rel = builtin_relation(knot)?;
    let parts = ms
        .par_iter()
        .map(|&m| verify_relation(&seq, &rel, &[m], &RelationMode::Habiro(level)))
        .collect();
    collect(parts)
}

/// Yang-Baxter at all parameter triples, for each pair and at `x = y = 1`.
pub fn yang_baxter_parallel(order: u32, pairs: &[(BigRational, BigRational)]) -> Result<Report> {
    let field = CyclotomicField::new(order);
    let mut specs: Vec<Option<(&BigRational, &BigRational)>> = pairs.iter().map(|(x, y)| Some((x, y))).collect();
    specs.push(None);
    let contexts = specs
        .par_iter()
        .map(|p| YangBaxterContext::new(&field, *p))
        .collect::<Result<Vec<_>>>()?;
    let triples = parameter_triples(order);
    let mut report = Report::new();
    for (spec, ctx) in specs.iter().zip(&contexts) {
        let lines: Vec<ReportLine> = triples
            .par_iter()
            .map(|&t| yang_baxter_line(order, *spec, t, ctx.check(t.0, t.1, t.2)))
            .collect();
        report.lines.extend(lines);
    }
    Ok(report)
}

/// The whole R-matrix suite at one order.
pub fn rmatrix_check(order: u32, pairs: &[(BigRational, BigRational)]) -> Result<Report> {
    let (yb, rest) = rayon::join(|| yang_baxter_parallel(order, pairs), || identity_suite(order, pairs));
    let mut report = yb?;
    report.extend(rest?);
    Ok(report)
}

fn cells(orders: &[u32], colors: Option<&[u32]>) -> Vec<(u32, u32)> {
    orders
        .iter()
        .flat_map(|&n| {
            let cs: Vec<u32> = match colors {
                Some(c) => c.to_vec(),
                None => (0..n).collect(),
            };
            cs.into_iter().map(move |c| (n, c))
        })
        .collect()
}

/// `<D>_{N,n}` against `J_{n+1}(zeta_N)` times the identity; `colors = None`
/// runs every color below `N`.
pub fn conjecture2_grid(
    seq: &HabiroSequence,
    diagram: &LongKnotDiagram,
    orders: &[u32],
    colors: Option<&[u32]>,
) -> Result<Report> {
    let parts = cells(orders, colors)
        .into_par_iter()
        .map(|(n, c)| conjecture2_check(seq, diagram, n, c))
        .collect();
    collect(parts)
}

/// The figure-eight contraction against the seven-fold sum.
pub fn oracle_grid_41(diagram: &LongKnotDiagram, orders: &[u32], colors: Option<&[u32]>) -> Result<Report> {
    let parts = cells(orders, colors)
        .into_par_iter()
        .map(|(n, c)| {
            let got = contract(diagram, n, c, "4_1")?;
            let want = naive_sum_41(n, c)?;
            let show = |m: &djones_core::statesum::InvariantMatrix| {
                m.scalar().map_or_else(|| "non-scalar".to_string(), |s| format!("{s}*1"))
            };
            let mut r = Report::new();
            r.push(ReportLine::new(
                got.matrix == want.matrix,
                "4_1",
                format!("N={n}"),
                format!("n={c}"),
                show(&got),
                show(&want),
            ));
            Ok(r)
        })
        .collect();
    collect(parts)
}

/// Two diagrams of one knot compared entrywise.
pub fn invariance_grid(
    knot: &str,
    first: &LongKnotDiagram,
    second: &LongKnotDiagram,
    orders: &[u32],
    colors: Option<&[u32]>,
) -> Result<Report> {
    let parts = cells(orders, colors)
        .into_par_iter()
        .map(|(n, c)| invariance_check(knot, first, second, n, c))
        .collect();
    collect(parts)
}
