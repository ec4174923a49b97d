//! Verification reports shared by every checker.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// One checked identity or grid cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportLine {
    pub pass: bool,
    pub knot: String,
    /// Descendant index or identity label.
    pub m: String,
    /// Color `n`, truncation level or root order.
    pub n: String,
    pub lhs: String,
    pub rhs: String,
}

impl ReportLine {
    pub fn new(
        pass: bool,
        knot: impl Into<String>,
        m: impl Into<String>,
        n: impl Into<String>,
        lhs: impl fmt::Display,
        rhs: impl fmt::Display,
    ) -> Self {
        Self {
            pass,
            knot: knot.into(),
            m: m.into(),
            n: n.into(),
            lhs: alloc::format!("{lhs}"),
            rhs: alloc::format!("{rhs}"),
        }
    }
}

impl fmt::Display for ReportLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {} {} {} {}", self.knot, self.m, self.n, self.lhs, self.rhs)
    }
}

/// Ordered collection of report lines.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<ReportLine>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, line: ReportLine) {
        self.lines.push(line);
    }

    pub fn extend(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    pub fn all_pass(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportLine> {
        self.lines.iter().filter(|l| !l.pass)
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl FromIterator<ReportLine> for Report {
    fn from_iter<I: IntoIterator<Item = ReportLine>>(iter: I) -> Self {
        Self {
            lines: iter.into_iter().collect(),
        }
    }
}
