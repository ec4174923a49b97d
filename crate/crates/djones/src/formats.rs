//! JSON and text serializations for every exchanged value.
//!
//! Integers are written as decimal strings so coefficients of any size
//! survive a round trip through JSON.

use std::str::FromStr;

use djones_core::expansion::HabiroSequence;
use djones_core::qdiff::QDiffOperator;
use djones_core::rmatrix::CycloMatrix;
use djones_core::statesum::{validate_diagram, CrossingKind, Event, InvariantMatrix, LongKnotDiagram, Orientation, Tangle};
use djones_core::{BivariateLaurent, CyclotomicField, CyclotomicNumber, LaurentPolynomial, Report};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Core(#[from] djones_core::Error),
}

pub type FormatResult<T> = std::result::Result<T, FormatError>;

fn malformed(msg: impl Into<String>) -> FormatError {
    FormatError::Malformed(msg.into())
}

fn big(s: &str) -> FormatResult<BigInt> {
    BigInt::from_str(s).map_err(|_| malformed(format!("not an integer: {s}")))
}

fn int_field(v: &Value) -> FormatResult<i64> {
    v.as_i64().ok_or_else(|| malformed(format!("expected an integer, found {v}")))
}

fn string_field(v: &Value) -> FormatResult<&str> {
    v.as_str().ok_or_else(|| malformed(format!("expected a string, found {v}")))
}

fn array(v: &Value) -> FormatResult<&Vec<Value>> {
    v.as_array().ok_or_else(|| malformed(format!("expected an array, found {v}")))
}

/// `[[e, "c"], ...]` in increasing exponent order.
pub fn laurent_to_json(p: &LaurentPolynomial) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([e, c.to_string()])).collect())
}

pub fn laurent_from_json(v: &Value) -> FormatResult<LaurentPolynomial> {
    let mut terms = Vec::new();
    for t in array(v)? {
        let t = array(t)?;
        if t.len() != 2 {
            return Err(malformed("Laurent term must be [exponent, \"coefficient\"]"));
        }
        terms.push((int_field(&t[0])?, big(string_field(&t[1])?)?));
    }
    Ok(LaurentPolynomial::from_terms(terms))
}

/// `[[qe, xe, "c"], ...]`.
pub fn bivariate_to_json(p: &BivariateLaurent) -> Value {
    Value::Array(p.terms().map(|((qe, xe), c)| json!([qe, xe, c.to_string()])).collect())
}

pub fn bivariate_from_json(v: &Value) -> FormatResult<BivariateLaurent> {
    let mut terms = Vec::new();
    for t in array(v)? {
        let t = array(t)?;
        if t.len() != 3 {
            return Err(malformed("bivariate term must be [q exponent, x exponent, \"coefficient\"]"));
        }
        terms.push(((int_field(&t[0])?, int_field(&t[1])?), big(string_field(&t[2])?)?));
    }
    Ok(BivariateLaurent::from_terms(terms))
}

/// `{"order": N, "coefficients": ["p/q", ...]}` in the power basis of `zeta_N`.
pub fn cyclotomic_to_json(z: &CyclotomicNumber) -> Value {
    let coefficients: Vec<String> = z.coefficients().iter().map(|c| c.to_string()).collect();
    json!({ "order": z.order(), "coefficients": coefficients })
}

pub fn cyclotomic_from_json(v: &Value) -> FormatResult<CyclotomicNumber> {
    let order = v
        .get("order")
        .and_then(Value::as_u64)
        .filter(|&n| n >= 1)
        .ok_or_else(|| malformed("cyclotomic value needs a positive \"order\""))?;
    let coeffs = array(v.get("coefficients").ok_or_else(|| malformed("missing \"coefficients\""))?)?
        .iter()
        .map(|c| {
            let s = string_field(c)?;
            BigRational::from_str(s).map_err(|_| malformed(format!("not a rational: {s}")))
        })
        .collect::<FormatResult<Vec<_>>>()?;
    let field = CyclotomicField::new(order as u32);
    Ok(CyclotomicNumber::from_coefficients(&field, &coeffs))
}

/// `[[a, b, bivariate], ...]` for terms `c Q^a S^b`.
pub fn operator_to_json(op: &QDiffOperator) -> Value {
    Value::Array(op.terms().map(|((a, b), c)| json!([a, b, bivariate_to_json(c)])).collect())
}

pub fn operator_from_json(v: &Value) -> FormatResult<QDiffOperator> {
    let mut op = QDiffOperator::zero();
    for t in array(v)? {
        let t = array(t)?;
        if t.len() != 3 {
            return Err(malformed("operator term must be [a, b, coefficient]"));
        }
        let term = QDiffOperator::term(bivariate_from_json(&t[2])?, int_field(&t[0])?, int_field(&t[1])?);
        op = &op + &term;
    }
    Ok(op)
}

/// One line per index: `k<TAB>[[e, "c"], ...]`.
pub fn habiro_file_to_string(hs: &[LaurentPolynomial]) -> String {
    hs.iter()
        .enumerate()
        .map(|(k, h)| format!("{k}\t{}\n", laurent_to_json(h)))
        .collect()
}

/// Parses a Habiro file; indices must run `0, 1, 2, ...` without gaps.
pub fn habiro_file_from_str(knot: &str, text: &str) -> FormatResult<HabiroSequence> {
    let mut hs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, body) = line
            .split_once('\t')
            .ok_or_else(|| malformed(format!("line {}: expected k<TAB>json", lineno + 1)))?;
        let k: usize = k
            .trim()
            .parse()
            .map_err(|_| malformed(format!("line {}: bad index {k}", lineno + 1)))?;
        if k != hs.len() {
            return Err(malformed(format!("line {}: expected index {}, found {k}", lineno + 1, hs.len())));
        }
        hs.push(laurent_from_json(&serde_json::from_str(body)?)?);
    }
    Ok(HabiroSequence::supplied(knot, hs))
}

/// One slice of the diagram file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceRecord {
    pub event: String,
    #[serde(default)]
    pub pos: usize,
    /// Orientations of the strands the event acts on, bottom side.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub orient: Vec<String>,
}

/// `{"strands_max": int, "slices": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramFile {
    pub strands_max: usize,
    pub slices: Vec<SliceRecord>,
}

impl DiagramFile {
    pub fn from_diagram(d: &LongKnotDiagram) -> FormatResult<Self> {
        let slices = d.tangle().slices()?;
        let records = slices
            .iter()
            .map(|s| {
                let (event, pos, acted) = match s.event {
                    Event::Crossing { kind, pos } => (kind.code().to_string(), pos, s.before[pos..pos + 2].to_vec()),
                    Event::Cup { pos } => ("cup".to_string(), pos, s.after[pos..pos + 2].to_vec()),
                    Event::Cap { pos } => ("cap".to_string(), pos, s.before[pos..pos + 2].to_vec()),
                    Event::Identity => ("id".to_string(), 0, Vec::new()),
                };
                SliceRecord {
                    event,
                    pos,
                    orient: acted.iter().map(|o| o.code().to_string()).collect(),
                }
            })
            .collect();
        Ok(Self {
            strands_max: d.tangle().max_strands()?,
            slices: records,
        })
    }

    /// Validates the orientation labels against the strand bound.
    pub fn to_diagram(&self) -> FormatResult<LongKnotDiagram> {
        let mut events = Vec::with_capacity(self.slices.len());
        for (idx, s) in self.slices.iter().enumerate() {
            let event = match s.event.as_str() {
                "cup" => Event::Cup { pos: s.pos },
                "cap" => Event::Cap { pos: s.pos },
                "id" => Event::Identity,
                code => Event::Crossing {
                    kind: CrossingKind::from_code(code)
                        .ok_or_else(|| malformed(format!("slice {idx}: unknown event {code}")))?,
                    pos: s.pos,
                },
            };
            events.push(event);
        }
        let tangle = Tangle::new(vec![Orientation::Up], events);
        let slices = tangle.slices()?;
        for (idx, (rec, sl)) in self.slices.iter().zip(&slices).enumerate() {
            if rec.orient.is_empty() {
                continue;
            }
            let acted: Vec<Orientation> = rec
                .orient
                .iter()
                .map(|o| Orientation::from_code(o).ok_or_else(|| malformed(format!("slice {idx}: bad orientation {o}"))))
                .collect::<FormatResult<_>>()?;
            let expected = match sl.event {
                Event::Cup { pos } => &sl.after[pos..pos + 2],
                Event::Crossing { pos, .. } | Event::Cap { pos } => &sl.before[pos..pos + 2],
                Event::Identity => &sl.before[..],
            };
            if acted != expected {
                return Err(malformed(format!("slice {idx}: orientation labels disagree with the diagram")));
            }
        }
        let d = validate_diagram(tangle)?;
        let used = d.tangle().max_strands()?;
        if used > self.strands_max {
            return Err(malformed(format!("diagram uses {used} strands, strands_max is {}", self.strands_max)));
        }
        Ok(d)
    }
}

pub fn diagram_from_str(text: &str) -> FormatResult<LongKnotDiagram> {
    serde_json::from_str::<DiagramFile>(text)?.to_diagram()
}

pub fn diagram_to_string(d: &LongKnotDiagram) -> FormatResult<String> {
    Ok(serde_json::to_string_pretty(&DiagramFile::from_diagram(d)?)?)
}

/// `{"order", "rows", "cols", "entries": [[cyclotomic, ...], ...]}`.
pub fn matrix_to_json(m: &CycloMatrix) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|r| Value::Array((0..m.cols()).map(|c| cyclotomic_to_json(m.get(r, c))).collect()))
        .collect();
    json!({ "order": m.field().order(), "rows": m.rows(), "cols": m.cols(), "entries": entries })
}

pub fn matrix_from_json(v: &Value) -> FormatResult<CycloMatrix> {
    let rows = array(v.get("entries").ok_or_else(|| malformed("missing \"entries\""))?)?;
    let parsed = rows
        .iter()
        .map(|r| array(r)?.iter().map(cyclotomic_from_json).collect::<FormatResult<Vec<_>>>())
        .collect::<FormatResult<Vec<_>>>()?;
    let ncols = parsed.first().map_or(0, Vec::len);
    if parsed.is_empty() || ncols == 0 || parsed.iter().any(|r| r.len() != ncols) {
        return Err(malformed("matrix rows must be nonempty and of equal length"));
    }
    Ok(CycloMatrix::from_fn(parsed.len(), ncols, |r, c| parsed[r][c].clone()))
}

pub fn invariant_to_json(m: &InvariantMatrix) -> Value {
    json!({
        "knot": m.knot,
        "N": m.order,
        "color": m.color,
        "scalar": m.scalar().map(|s| cyclotomic_to_json(&s)),
        "matrix": matrix_to_json(&m.matrix),
    })
}

pub fn report_to_json(r: &Report) -> Value {
    Value::Array(
        r.lines
            .iter()
            .map(|l| {
                json!({
                    "status": if l.pass { "PASS" } else { "FAIL" },
                    "knot": l.knot,
                    "m": l.m,
                    "n": l.n,
                    "lhs": l.lhs,
                    "rhs": l.rhs,
                })
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_round_trip() {
        let p = LaurentPolynomial::from_terms([(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]);
        let v = laurent_to_json(&p);
        assert_eq!(v.to_string(), r#"[[-2,"1"],[-1,"-1"],[0,"1"],[1,"-1"],[2,"1"]]"#);
        assert_eq!(laurent_from_json(&v).unwrap(), p);
    }

    #[test]
    fn cyclotomic_round_trip() {
        let f = CyclotomicField::new(5);
        let z = &CyclotomicNumber::from_ratio(&f, 2, 3) - &CyclotomicNumber::zeta_pow(&f, 3);
        assert_eq!(cyclotomic_from_json(&cyclotomic_to_json(&z)).unwrap(), z);
    }

    #[test]
    fn rejects_garbage() {
        assert!(laurent_from_json(&json!([[1, 2]])).is_err());
        assert!(diagram_from_str("{\"strands_max\": 3}").is_err());
        assert!(habiro_file_from_str("x", "1\t[]\n").is_err());
    }
}
