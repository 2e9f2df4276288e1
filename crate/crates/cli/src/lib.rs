//! Command implementations behind the `dragon` binary. Each command returns
//! the full output text so it can be tested without a process.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use dragon_core::counting::sequences::{left_gf, right_gf};
use dragon_core::counting::{RationalGf, Sequence};
use dragon_core::curve::dragon_path;
use dragon_core::enumeration::{
    aligned_listing, bin_type_history, classify_bin, classify_row, enumerate_a, enumerate_s, row_type_history,
};
use dragon_core::lsystem::{
    boundary_full, boundary_left, boundary_right, boundary_right_traced, dragon, BoundarySymbol, LSystem, Word,
    DEFAULT_WORD_CAP,
};
use dragon_core::polyomino::{BoundaryWord, TracedBoundary};
use dragon_core::render::{render_svg, Layer, RenderSpec};
use dragon_core::verify::{self, Level};

/// Default ceiling for commands that draw or trace a whole iterate.
pub const GEOMETRY_CAP: usize = 20;

#[derive(Debug, Parser)]
#[command(
    name = "dragon",
    version,
    about = "Heighway dragon boundary words, counts and enumerations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Draw iterate n of the dragon curve.
    Curve(CurveArgs),
    /// Trace the boundary of the polyomino around iterate n.
    Boundary(BoundaryArgs),
    /// Exact terms of a counting sequence.
    Count(CountArgs),
    /// List the strings, arrays or the aligned correspondence.
    Enumerate(EnumerateArgs),
    /// Run the self-check suite.
    Verify(VerifyArgs),
    /// Print a generating function and its expansion.
    Gf(GfArgs),
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = CurveFormat::Svg)]
    pub format: CurveFormat,
    /// Largest n accepted.
    #[arg(long, default_value_t = GEOMETRY_CAP)]
    pub cap: usize,
    /// Pixels per lattice unit in SVG output.
    #[arg(long, default_value_t = 8)]
    pub scale: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CurveFormat {
    Svg,
    Json,
}

#[derive(Debug, Args)]
pub struct BoundaryArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Side::Full)]
    pub side: Side,
    #[arg(long, value_enum, default_value_t = BoundaryFormat::Word)]
    pub format: BoundaryFormat,
    #[arg(long, default_value_t = GEOMETRY_CAP)]
    pub cap: usize,
    #[arg(long, default_value_t = 8)]
    pub scale: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Left,
    Right,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundaryFormat {
    Svg,
    Word,
    Json,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, value_parser = parse_sequence)]
    pub sequence: Sequence,
    #[arg(long)]
    pub n: u64,
    /// Print every term up to n as `index value` lines.
    #[arg(long, conflicts_with = "bfile")]
    pub table: bool,
    /// Like --table, with a comment header, for OEIS b-files.
    #[arg(long)]
    pub bfile: bool,
    /// Added to every printed index.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub offset: i64,
}

fn parse_sequence(s: &str) -> Result<Sequence, String> {
    s.parse()
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, value_enum)]
    pub set: SetKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = ListFormat::Text)]
    pub format: ListFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SetKind {
    Strings,
    Arrays,
    Aligned,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ListFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_level, default_value = "quick")]
    pub level: Level,
    #[arg(long, value_enum, default_value_t = ListFormat::Text)]
    pub format: ListFormat,
}

fn parse_level(s: &str) -> Result<Level, String> {
    s.parse()
}

#[derive(Debug, Args)]
pub struct GfArgs {
    #[arg(long, value_enum)]
    pub sequence: GfKind,
    /// Highest power of x to expand to.
    #[arg(long, default_value_t = 10)]
    pub terms: usize,
    #[arg(long, value_enum, default_value_t = ListFormat::Text)]
    pub format: ListFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GfKind {
    Left,
    Right,
}

/// Failure classes, each with its own exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad arguments or a cap exceeded.
    Usage(String),
    /// Two independent computations disagreed. Never expected.
    Invariant(String),
    /// The verify suite reported failures; the report is still printed.
    ChecksFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => 2,
            Self::Invariant(_) => 3,
            Self::ChecksFailed(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Usage(m) => write!(f, "error: {m}"),
            Self::Invariant(m) => write!(f, "internal invariant violated: {m}"),
            Self::ChecksFailed(report) => f.write_str(report),
        }
    }
}

impl From<dragon_core::Error> for CliError {
    fn from(e: dragon_core::Error) -> Self {
        match e {
            dragon_core::Error::Cap { .. }
            | dragon_core::Error::WordCapExceeded { .. }
            | dragon_core::Error::BelowStart { .. } => Self::Usage(e.to_string()),
            other => Self::Invariant(other.to_string()),
        }
    }
}

type CliResult = Result<String, CliError>;

pub fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Curve(a) => cmd_curve(a),
        Command::Boundary(a) => cmd_boundary(a),
        Command::Count(a) => cmd_count(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Gf(a) => cmd_gf(a),
    }
}

fn check_geometry_cap(n: usize, cap: usize) -> Result<(), CliError> {
    if cap > DEFAULT_WORD_CAP {
        return Err(CliError::Usage(format!("--cap may not exceed {DEFAULT_WORD_CAP}")));
    }
    if n > cap {
        return Err(CliError::Usage(format!(
            "n = {n} exceeds the cap {cap}; raise it with --cap"
        )));
    }
    Ok(())
}

fn to_json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn cmd_curve(a: &CurveArgs) -> CliResult {
    check_geometry_cap(a.n, a.cap)?;
    match a.format {
        CurveFormat::Svg => Ok(render_svg(&RenderSpec {
            n: a.n,
            layers: vec![Layer::Curve],
            scale: a.scale,
        })?),
        CurveFormat::Json => {
            let path = dragon_path(&dragon().iterate(a.n));
            Ok(to_json(&json!({
                "n": a.n,
                "edges": path.edge_count(),
                "vertices": path.to_json(),
            })))
        }
    }
}

fn side_system(side: Side, n: usize) -> LSystem<BoundarySymbol> {
    match side {
        Side::Full => boundary_full(),
        Side::Left => boundary_left(),
        // The traced right side of the single cell is `r`; from n = 1 on it
        // coincides with the system seeded at `L`.
        Side::Right if n == 0 => boundary_right_traced(),
        Side::Right => boundary_right(),
    }
}

fn side_word(t: &TracedBoundary, side: Side) -> &BoundaryWord {
    match side {
        Side::Full => &t.full,
        Side::Left => &t.left,
        Side::Right => &t.right,
    }
}

/// Geometric word for one side, refused unless the rewriting system agrees.
pub fn checked_boundary(n: usize, side: Side) -> Result<(TracedBoundary, Word<BoundarySymbol>), CliError> {
    let traced = TracedBoundary::of_iterate(n)?;
    let expected = side_system(side, n).iterate(n);
    let got = side_word(&traced, side);
    if got.word != expected || !got.parities_consistent() {
        return Err(CliError::Invariant(format!(
            "traced {side:?} boundary of iterate {n} is {} but rewriting gives {expected}",
            got.word
        )));
    }
    Ok((traced, expected))
}

pub fn cmd_boundary(a: &BoundaryArgs) -> CliResult {
    check_geometry_cap(a.n, a.cap)?;
    let (traced, word) = checked_boundary(a.n, a.side)?;
    match a.format {
        BoundaryFormat::Word => Ok(format!("{word}\n")),
        BoundaryFormat::Json => {
            let w = side_word(&traced, a.side);
            Ok(to_json(&json!({
                "n": a.n,
                "side": format!("{:?}", a.side).to_lowercase(),
                "length": w.len(),
                "word": w.word,
                "parities": w.parity_string(),
            })))
        }
        BoundaryFormat::Svg => {
            let layers = match a.side {
                Side::Left => vec![Layer::Curve, Layer::Left],
                Side::Right => vec![Layer::Curve, Layer::Right],
                Side::Full => vec![Layer::Curve, Layer::Left, Layer::Right],
            };
            Ok(render_svg(&RenderSpec {
                n: a.n,
                layers,
                scale: a.scale,
            })?)
        }
    }
}

/// Terms `first..=n` by both routes, refused unless they agree.
pub fn checked_terms(seq: Sequence, n: u64) -> Result<Vec<BigInt>, CliError> {
    let by_matrix = seq.matrix_table(n)?;
    let by_rec = seq.recurrence_table(n)?;
    if by_matrix != by_rec {
        let at = by_matrix.iter().zip(&by_rec).position(|(x, y)| x != y).unwrap_or(0);
        return Err(CliError::Invariant(format!(
            "{seq} term {} differs between matrix and recurrence",
            seq.first_index() + at as u64
        )));
    }
    Ok(by_matrix)
}

/// Single term by matrix powering and by the recurrence, refused unless
/// they agree.
pub fn checked_term(seq: Sequence, n: u64) -> Result<BigInt, CliError> {
    let by_matrix = seq.by_matrix(n)?;
    let by_rec = seq.by_recurrence(n)?;
    if by_matrix != by_rec {
        return Err(CliError::Invariant(format!(
            "{seq}({n}) differs between matrix and recurrence"
        )));
    }
    Ok(by_matrix)
}

pub fn cmd_count(a: &CountArgs) -> CliResult {
    let first = a.sequence.first_index();
    if a.n < first {
        return Err(CliError::Usage(format!("{} starts at index {first}", a.sequence)));
    }
    if !(a.table || a.bfile) {
        return Ok(format!("{}\n", checked_term(a.sequence, a.n)?));
    }
    let terms = checked_terms(a.sequence, a.n)?;
    let mut out = String::new();
    if a.bfile {
        let id = a.sequence.oeis().unwrap_or("(no OEIS entry)");
        let _ = writeln!(out, "# {id}: {} sequence, terms {first}..{}", a.sequence, a.n);
    }
    for (i, v) in terms.iter().enumerate() {
        let _ = writeln!(out, "{} {v}", first as i64 + i as i64 + a.offset);
    }
    Ok(out)
}

pub fn cmd_enumerate(a: &EnumerateArgs) -> CliResult {
    let mut out = String::new();
    match (a.set, a.format) {
        (SetKind::Strings, ListFormat::Text) => {
            for s in enumerate_s(a.n)? {
                let _ = writeln!(out, "{s} {}", classify_bin(&s)?);
            }
        }
        (SetKind::Strings, ListFormat::Json) => {
            let items = enumerate_s(a.n)?
                .iter()
                .map(|s| {
                    let hist: String = bin_type_history(s)?.iter().map(|t| t.letter()).collect();
                    Ok(json!({"string": s, "type": classify_bin(s)?, "history": hist}))
                })
                .collect::<Result<Vec<_>, dragon_core::Error>>()?;
            out = to_json(&json!(items));
        }
        (SetKind::Arrays, ListFormat::Text) => {
            for t in enumerate_a(a.n)? {
                let _ = writeln!(out, "{t} {}", classify_row(&t)?);
            }
        }
        (SetKind::Arrays, ListFormat::Json) => {
            let items = enumerate_a(a.n)?
                .iter()
                .map(|t| {
                    let hist: String = row_type_history(t)?.iter().map(|r| r.letter()).collect();
                    Ok(json!({"array": t, "type": classify_row(t)?, "history": hist}))
                })
                .collect::<Result<Vec<_>, dragon_core::Error>>()?;
            out = to_json(&json!(items));
        }
        (SetKind::Aligned, ListFormat::Text) => {
            for e in aligned_listing(a.n)? {
                let _ = writeln!(
                    out,
                    "{} {} {} {} {}",
                    e.index,
                    dragon_core::lsystem::Alphabet::glyph(e.element),
                    e.string,
                    e.array,
                    e.array_types
                );
            }
        }
        (SetKind::Aligned, ListFormat::Json) => {
            out = to_json(&serde_json::to_value(aligned_listing(a.n)?).expect("serializable"));
        }
    }
    Ok(out)
}

pub fn cmd_verify(a: &VerifyArgs) -> CliResult {
    let report = verify::run(a.level);
    let text = match a.format {
        ListFormat::Json => to_json(&serde_json::to_value(&report).expect("serializable")),
        ListFormat::Text => {
            let mut s = String::new();
            for c in &report.checks {
                let _ = writeln!(
                    s,
                    "{} {:<28} {:>6} ms  {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.millis,
                    c.detail
                );
            }
            let failed = report.failures().count();
            let _ = writeln!(
                s,
                "{} of {} checks passed",
                report.checks.len() - failed,
                report.checks.len()
            );
            s
        }
    };
    if report.passed {
        Ok(text)
    } else {
        Err(CliError::ChecksFailed(text))
    }
}

pub fn cmd_gf(a: &GfArgs) -> CliResult {
    let (name, gf, first): (&str, RationalGf, u64) = match a.sequence {
        GfKind::Left => ("left", left_gf(), 0),
        GfKind::Right => ("right", right_gf(), 0),
    };
    let coeffs = gf.expand(a.terms)?;
    Ok(match a.format {
        ListFormat::Json => to_json(&json!({
            "sequence": name,
            "numerator": gf.numerator(),
            "denominator": gf.denominator(),
            "coefficients": coeffs.iter().map(dragon_core::json::value).collect::<Vec<_>>(),
        })),
        ListFormat::Text => {
            let list: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
            format!(
                "numerator:   {}\ndenominator: {}\ncoefficients from x^{first}: {}\n",
                gf.numerator(),
                gf.denominator(),
                list.join(", ")
            )
        }
    })
}
