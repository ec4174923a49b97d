//! The `djones` command line.
//!
//! Exit status: 0 when everything computed passes, 1 when any check fails,
//! 2 on usage errors, malformed input or unknown knots.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use djones_core::descendants::{descendant, mirror_descendant, verify_52_identities, CheckTarget, DescendantMode, Payload};
use djones_core::expansion::{habiro_from_jones, jones_from_habiro, HabiroSequence};
use djones_core::statesum::{builtin, contract, naive_sum_41, LongKnotDiagram};
use djones_core::Report;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::formats::{
    bivariate_to_json, cyclotomic_to_json, diagram_from_str, habiro_file_from_str, invariant_to_json, laurent_to_json,
    matrix_to_json, report_to_json, FormatError,
};
use crate::suites;

#[derive(Debug, Parser)]
#[command(name = "djones", version, about = "Descendant colored Jones invariants and root-of-unity state sums")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Colored,
    Symbolic,
    Habiro,
    Root,
}

/// Inclusive integer range written `a..b`, or a single value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn values(self) -> Vec<i64> {
        (self.lo..=self.hi).collect()
    }

    fn unsigned(self, what: &str, min: i64) -> Result<Vec<u32>, CliError> {
        if self.lo < min || self.hi > i64::from(u32::MAX) {
            return Err(CliError::Usage(format!("{what} must lie in [{min}, {}]", u32::MAX)));
        }
        Ok((self.lo..=self.hi).map(|v| v as u32).collect())
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("not an integer: {t}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(Self { lo, hi })
    }
}

#[derive(Debug, Args)]
pub struct KnotArgs {
    /// Built-in knot (3_1, 4_1, 5_2; a trailing `*` takes the mirror).
    #[arg(long)]
    pub knot: String,
    /// Read H_k from a file of `k<TAB>json` lines instead.
    #[arg(long)]
    pub habiro_file: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Colored Jones polynomials J_n.
    Jones {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long)]
        n: IntRange,
    },
    /// Habiro polynomials H_k, recomputed from the colored Jones polynomials.
    Habiro {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long)]
        k: IntRange,
    },
    /// The descendant DJ^(m) in one evaluation mode.
    Descendant {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t = ModeArg::Colored)]
        mode: ModeArg,
        /// Color for the colored mode.
        #[arg(long)]
        n: Option<u32>,
        /// Number of terms for the symbolic mode.
        #[arg(long, default_value_t = 4)]
        kmax: u32,
        #[arg(long, env = "DJONES_LEVEL", default_value_t = 10)]
        level: u32,
        #[arg(long = "N")]
        order: Option<u32>,
        /// Use the mirror relation instead of mirrored data.
        #[arg(long)]
        via_mirror: bool,
    },
    /// Root-of-unity values DJ^(m)(zeta_N).
    Eval {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        m: IntRange,
        #[arg(long = "N")]
        order: u32,
    },
    /// Checks the built-in q-difference relation on a grid.
    RecursionCheck {
        #[arg(long)]
        knot: String,
        #[arg(long, allow_hyphen_values = true)]
        m: IntRange,
        #[arg(long)]
        n: IntRange,
        /// Also check at x = 1 in the Habiro truncation of this level.
        #[arg(long)]
        level: Option<u32>,
    },
    /// The five DJ_{a,b} relations of 5_2.
    #[command(name = "identities-52")]
    Identities52 {
        #[arg(long, env = "DJONES_LEVEL")]
        level: Option<u32>,
        #[arg(long = "N")]
        order: Option<u32>,
    },
    /// Yang-Baxter together with the algebraic identity suites.
    RmatrixCheck {
        #[arg(long = "N")]
        order: u32,
        /// Spectral pairs `x,y;x,y` of rationals.
        #[arg(long, default_value = "2,3;-3/2,5/7", allow_hyphen_values = true)]
        pairs: String,
    },
    /// The matrix <D>_{N,n} of a diagram.
    Statesum {
        #[command(flatten)]
        source: DiagramSource,
        #[arg(long = "N")]
        order: u32,
        #[arg(long)]
        color: u32,
        /// Compare with the seven-fold sum (figure-eight only).
        #[arg(long)]
        naive: bool,
        /// Write the matrix as JSON to this path.
        #[arg(long)]
        dump: Option<String>,
    },
    /// Compares <K>_{N,n} with J_{n+1}(zeta_N) times the identity.
    Conjecture2 {
        #[command(flatten)]
        source: DiagramSource,
        #[arg(long = "N")]
        order: IntRange,
        /// Defaults to every color below N.
        #[arg(long)]
        color: Option<IntRange>,
    },
    /// Compares two diagrams of one knot entrywise.
    Invariance {
        #[arg(long)]
        knot: String,
        /// Two diagrams: file paths or `builtin:<name>`.
        #[arg(long, num_args = 2, required = true)]
        diagram: Vec<String>,
        #[arg(long = "N")]
        order: IntRange,
        #[arg(long)]
        color: Option<IntRange>,
    },
}

#[derive(Debug, Args)]
pub struct DiagramSource {
    #[arg(long)]
    pub knot: String,
    /// Diagram file, or `builtin:<name>`; defaults to the built-in diagram of the knot.
    #[arg(long)]
    pub diagram: Option<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] djones_core::Error),
}

/// What a command printed and whether every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub pass: bool,
}

impl Outcome {
    fn value(output: String) -> Self {
        Self { output, pass: true }
    }
}

fn sequence(args: &KnotArgs) -> Result<HabiroSequence, CliError> {
    match &args.habiro_file {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(FormatError::from)?;
            Ok(habiro_file_from_str(&args.knot, &text)?)
        }
        None => Ok(HabiroSequence::builtin(&args.knot)?),
    }
}

fn load_diagram(spec: &str) -> Result<LongKnotDiagram, CliError> {
    match spec.strip_prefix("builtin:") {
        Some(name) => Ok(builtin::by_name(name)?),
        None => {
            let text = fs::read_to_string(spec).map_err(FormatError::from)?;
            Ok(diagram_from_str(&text)?)
        }
    }
}

fn diagram_of(source: &DiagramSource) -> Result<LongKnotDiagram, CliError> {
    match &source.diagram {
        Some(spec) => load_diagram(spec),
        None => Ok(builtin::by_name(&source.knot)?),
    }
}

fn parse_pairs(s: &str) -> Result<Vec<(BigRational, BigRational)>, CliError> {
    let rat = |t: &str| BigRational::from_str(t.trim()).map_err(|_| CliError::Usage(format!("not a rational: {t}")));
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let (x, y) = p
                .split_once(',')
                .ok_or_else(|| CliError::Usage(format!("spectral pair must be x,y: {p}")))?;
            Ok((rat(x)?, rat(y)?))
        })
        .collect()
}

fn positive(v: u32, what: &str) -> Result<u32, CliError> {
    if v == 0 {
        Err(CliError::Usage(format!("{what} must be positive")))
    } else {
        Ok(v)
    }
}

fn render_report(report: &Report, format: Format, status_prefix: &str) -> Outcome {
    let output = match format {
        Format::Text => report
            .lines
            .iter()
            .map(|l| format!("{status_prefix}{l}\n"))
            .collect(),
        Format::Json => format!("{}\n", report_to_json(report)),
    };
    Outcome {
        output,
        pass: report.all_pass(),
    }
}

fn render_values(rows: Vec<(String, String, Value)>, format: Format) -> Outcome {
    match format {
        Format::Text => Outcome::value(rows.iter().fold(String::new(), |mut acc, (label, text, _)| {
            let _ = writeln!(acc, "{label} {text}");
            acc
        })),
        Format::Json => {
            let arr: Vec<Value> = rows.into_iter().map(|(label, _, v)| json!({ "index": label, "value": v })).collect();
            Outcome::value(format!("{}\n", Value::Array(arr)))
        }
    }
}

/// Runs one parsed command.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Jones { knot, n } => {
            let seq = sequence(knot)?;
            let ns = n.unsigned("n", 1)?;
            let rows = ns
                .iter()
                .map(|&n| {
                    let j = jones_from_habiro(&seq, n)?;
                    Ok((format!("n={n}"), j.to_string(), laurent_to_json(&j)))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(render_values(rows, format))
        }
        Command::Habiro { knot, k } => {
            let seq = sequence(knot)?;
            let ks = k.unsigned("k", 0)?;
            let top = *ks.last().expect("range is nonempty");
            let jones = (1..=top + 1)
                .map(|n| jones_from_habiro(&seq, n))
                .collect::<Result<Vec<_>, _>>()?;
            let rows = ks
                .iter()
                .map(|&k| {
                    let h = habiro_from_jones(&jones, k)?;
                    Ok((format!("k={k}"), h.to_string(), laurent_to_json(&h)))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(render_values(rows, format))
        }
        Command::Descendant {
            knot,
            m,
            mode,
            n,
            kmax,
            level,
            order,
            via_mirror,
        } => {
            let mode = match mode {
                ModeArg::Colored => DescendantMode::Colored(positive(
                    n.ok_or_else(|| CliError::Usage("--n is required in colored mode".into()))?,
                    "n",
                )?),
                ModeArg::Symbolic => DescendantMode::Symbolic(positive(*kmax, "kmax")?),
                ModeArg::Habiro => DescendantMode::Habiro(positive(*level, "level")?),
                ModeArg::Root => DescendantMode::Root(positive(
                    order.ok_or_else(|| CliError::Usage("--N is required in root mode".into()))?,
                    "N",
                )?),
            };
            let value = if *via_mirror {
                let name = knot.knot.strip_suffix('*').unwrap_or(&knot.knot).to_string();
                let base = sequence(&KnotArgs {
                    knot: name,
                    habiro_file: knot.habiro_file.clone(),
                })?;
                if knot.knot.ends_with('*') {
                    mirror_descendant(&base, *m, mode)?
                } else {
                    mirror_descendant(&base.mirror(), *m, mode)?
                }
            } else {
                descendant(&sequence(knot)?, *m, mode)?
            };
            let (text, json) = match &value.payload {
                Payload::Laurent(p) => (p.to_string(), laurent_to_json(p)),
                Payload::Terms(ts) => (
                    ts.iter().map(|t| t.display_string()).collect::<Vec<_>>().join(" ; "),
                    Value::Array(ts.iter().map(bivariate_to_json).collect()),
                ),
                Payload::Habiro(h) => (h.to_string(), json!({ "level": h.level(), "representative": laurent_to_json(h.representative()) })),
                Payload::Cyclotomic(z) => (z.to_string(), cyclotomic_to_json(z)),
            };
            Ok(render_values(vec![(format!("m={m}"), text, json)], format))
        }
        Command::Eval { knot, m, order } => {
            let seq = sequence(knot)?;
            let order = positive(*order, "N")?;
            let rows = m
                .values()
                .into_iter()
                .map(|m| {
                    let z = djones_core::descendants::dj_eval_root(&seq, m, order)?;
                    Ok((format!("m={m}"), z.to_string(), cyclotomic_to_json(&z)))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(render_values(rows, format))
        }
        Command::RecursionCheck { knot, m, n, level } => {
            let ns = n.unsigned("n", 1)?;
            let ms = m.values();
            let mut report = suites::recursion_grid(knot, &ms, &ns)?;
            if let Some(level) = level {
                report.extend(suites::recursion_habiro(knot, &ms, positive(*level, "level")?)?);
            }
            Ok(render_report(&report, format, ""))
        }
        Command::Identities52 { level, order } => {
            let mut report = Report::new();
            if level.is_none() && order.is_none() {
                return Err(CliError::Usage("give --level and/or --N".into()));
            }
            if let Some(level) = level {
                report.extend(verify_52_identities(CheckTarget::Level(positive(*level, "level")?))?);
            }
            if let Some(order) = order {
                report.extend(verify_52_identities(CheckTarget::Root(positive(*order, "N")?))?);
            }
            Ok(render_report(&report, format, ""))
        }
        Command::RmatrixCheck { order, pairs } => {
            if *order < 2 {
                return Err(CliError::Usage("N must be at least 2".into()));
            }
            let pairs = parse_pairs(pairs)?;
            let report = suites::rmatrix_check(*order, &pairs)?;
            Ok(render_report(&report, format, ""))
        }
        Command::Statesum {
            source,
            order,
            color,
            naive,
            dump,
        } => {
            let order = positive(*order, "N")?;
            let d = diagram_of(source)?;
            let inv = contract(&d, order, *color, &source.knot)?;
            if let Some(path) = dump {
                let text = serde_json::to_string_pretty(&matrix_to_json(&inv.matrix)).map_err(FormatError::from)?;
                fs::write(path, text + "\n").map_err(FormatError::from)?;
            }
            let mut pass = true;
            let mut extra = String::new();
            if *naive {
                let oracle = naive_sum_41(order, *color)?;
                pass = oracle.matrix == inv.matrix;
                extra = format!("{} naive-sum\n", if pass { "PASS" } else { "FAIL" });
            }
            let output = match format {
                Format::Text => {
                    let mut out = String::new();
                    match inv.scalar() {
                        Some(s) => {
                            let _ = writeln!(out, "{} N={order} n={color} scalar {s}", source.knot);
                        }
                        None => {
                            let _ = writeln!(out, "{} N={order} n={color} matrix", source.knot);
                            for r in 0..inv.matrix.rows() {
                                let row: Vec<String> = (0..inv.matrix.cols()).map(|c| inv.get(r, c).to_string()).collect();
                                let _ = writeln!(out, "  {}", row.join("  "));
                            }
                        }
                    }
                    out + &extra
                }
                Format::Json => {
                    let mut v = invariant_to_json(&inv);
                    if *naive {
                        v["naive_agrees"] = json!(pass);
                    }
                    format!("{v}\n")
                }
            };
            Ok(Outcome { output, pass })
        }
        Command::Conjecture2 { source, order, color } => {
            let d = diagram_of(source)?;
            let seq = HabiroSequence::builtin(&source.knot)?;
            let orders = order.unsigned("N", 1)?;
            let colors = color.map(|c| c.unsigned("color", 0)).transpose()?;
            let report = suites::conjecture2_grid(&seq, &d, &orders, colors.as_deref())?;
            Ok(render_report(&report, format, "CONJECTURE-"))
        }
        Command::Invariance {
            knot,
            diagram,
            order,
            color,
        } => {
            let a = load_diagram(&diagram[0])?;
            let b = load_diagram(&diagram[1])?;
            let orders = order.unsigned("N", 1)?;
            let colors = color.map(|c| c.unsigned("color", 0)).transpose()?;
            let report = suites::invariance_grid(knot, &a, &b, &orders, colors.as_deref())?;
            Ok(render_report(&report, format, ""))
        }
    }
}

/// Parses arguments and maps the run result to an exit status.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            ExitCode::from(if outcome.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
