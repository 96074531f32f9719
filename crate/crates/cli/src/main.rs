//! `hgq`: command-line front end for the HS/HC verifier.
//!
//! Exit codes: 0 when every requested check passes, 1 when a verification
//! fails, 2 for usage and input errors.

mod geometry;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use hgq::catalog::{self, Bound, FamilyKey, GroupFacts, GroupId};
use hgq::diophantine::{solve_hc, solve_hs};
use hgq::params::Mode;
use hgq::report::{ReportMode, VerificationReport};
use hgq::verify::case_hc::run_hc;
use hgq::verify::case_hs::run_hs;
use hgq::verify::citations::CaseLabel;
use hgq::verify::RunOptions;

#[derive(Parser, Debug)]
#[command(name = "hgq", version, about = "Checks the HS/HC case analysis for line-transitive generalised quadrangles")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for case evaluation (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Facts about one catalogue entry.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// List canonical simple groups under an order bound.
    Enumerate(EnumerateArgs),
    /// Solve the HS or HC parameter equation for one order.
    Solve {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        order: BigUint,
        #[arg(long)]
        smax: u64,
    },
    /// Run a case engine.
    Verify {
        #[arg(value_enum)]
        mode: ModeArg,
        /// Restrict to one family: Alt, Sporadic, A, 2A, B, C, D, 2D, E6, ...
        #[arg(long)]
        family: Option<String>,
    },
    /// Coset-geometry checks on small groups.
    Geometry(geometry::GeometryArgs),
}

#[derive(Subcommand, Debug)]
enum GroupCmd {
    /// Order, |Out|, simplicity and canonical isomorph of a group id.
    Info { id: String },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct BoundArgs {
    /// Keep groups with |T| <= N.
    #[arg(long, value_name = "N")]
    max_order: Option<BigUint>,
    /// Keep groups with |T| <= c |Out(T)|^e.
    #[arg(long, num_args = 2, value_names = ["C", "E"])]
    poly_out: Option<Vec<u64>>,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[command(flatten)]
    bound: BoundArgs,
    #[arg(long)]
    family: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Hs,
    Hc,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Hs => Mode::HS,
            ModeArg::Hc => Mode::HC,
        }
    }
}

/// Failure to run a command at all (exit 2).
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> UsageError {
        UsageError(e.to_string())
    }
}

fn parse_family(f: Option<&str>) -> Result<Option<FamilyKey>, UsageError> {
    f.map(|s| FamilyKey::parse(s).ok_or_else(|| UsageError(format!("unknown family {s:?}")))).transpose()
}

#[derive(Serialize)]
struct GroupInfo {
    #[serde(flatten)]
    facts: GroupFacts,
    hs_case: CaseLabel,
    hc_case: CaseLabel,
}

fn group_info(id: &str) -> Result<VerificationReport, UsageError> {
    let id: GroupId = id.parse()?;
    let facts = catalog::classify(&id)?;
    let mut text = format!("{}\n  order      {}\n  |Out|      {}\n  simple     {}\n", facts.id, facts.order, facts.out_order, facts.is_simple);
    if !facts.is_canonical() {
        let _ = writeln!(text, "  isomorphic {}", facts.canonical);
    }
    let info = GroupInfo { hs_case: CaseLabel::of(Mode::HS, &id), hc_case: CaseLabel::of(Mode::HC, &id), facts };
    let _ = writeln!(text, "  HS case    {}\n  HC case    {}", info.hs_case, info.hc_case);
    Ok(VerificationReport::plain(ReportMode::GroupInfo, &[info], text, Vec::new()))
}

fn enumerate(args: &EnumerateArgs) -> Result<VerificationReport, UsageError> {
    let bound = match (&args.bound.max_order, &args.bound.poly_out) {
        (Some(n), _) => Bound::OrderLeq(n.clone()),
        (None, Some(ce)) => {
            let e = u32::try_from(ce[1]).map_err(|_| UsageError("exponent too large".into()))?;
            Bound::poly_out(ce[0], e)
        }
        (None, None) => return Err(UsageError("give --max-order or --poly-out".into())),
    };
    let family = parse_family(args.family.as_deref())?;
    let groups: Vec<GroupFacts> =
        catalog::enumerate_under(bound)?.into_iter().filter(|g| family.is_none_or(|f| g.id.family_key() == f)).collect();
    let mut text = String::new();
    for g in &groups {
        let _ = writeln!(text, "{:<16} {:>24}  |Out| = {}", g.id.to_string(), g.order, g.out_order);
    }
    let _ = writeln!(text, "{} groups", groups.len());
    Ok(VerificationReport::plain(ReportMode::Enumerate, &groups, text, Vec::new()))
}

#[derive(Serialize)]
struct SolveEntry {
    s: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    y: Option<u64>,
    t_prime: u64,
    t: u64,
}

fn solve(mode: Mode, order: &BigUint, smax: u64) -> VerificationReport {
    let entries: Vec<SolveEntry> = match mode {
        Mode::HS => solve_hs(order, smax).into_iter().map(|w| SolveEntry { s: w.s, y: None, t_prime: w.t_prime, t: w.t() }).collect(),
        Mode::HC => {
            solve_hc(order, smax).into_iter().map(|w| SolveEntry { s: w.s, y: Some(w.y), t_prime: w.t_prime(), t: w.t() }).collect()
        }
    };
    let mut text = format!("{mode} solutions for |T| = {order}, s <= {smax}: {}\n", entries.len());
    for e in &entries {
        let y = e.y.map(|y| format!(" y = {y}")).unwrap_or_default();
        let _ = writeln!(text, "  s = {}{y}  t' = {}  t = {}", e.s, e.t_prime, e.t);
    }
    VerificationReport::plain(ReportMode::Solve, &entries, text, Vec::new())
}

fn verify(mode: Mode, family: Option<&str>, jobs: Option<usize>) -> Result<VerificationReport, UsageError> {
    let opts = RunOptions { family: parse_family(family)?, jobs };
    let run = match mode {
        Mode::HS => run_hs(&opts),
        Mode::HC => run_hc(&opts),
    };
    // Engine errors are verification failures, not usage errors.
    match run.and_then(|r| VerificationReport::from_run(&r, opts.family.is_none())) {
        Ok(report) => Ok(report),
        Err(e) => {
            let text = format!("{mode} verification failed: {e}\n");
            Ok(VerificationReport::plain::<()>(report_mode(mode), &[], text, vec![e.to_string()]))
        }
    }
}

fn report_mode(mode: Mode) -> ReportMode {
    match mode {
        Mode::HS => ReportMode::HS,
        Mode::HC => ReportMode::HC,
    }
}

fn run(cli: &Cli) -> Result<VerificationReport, UsageError> {
    match &cli.command {
        Command::Group { cmd: GroupCmd::Info { id } } => group_info(id),
        Command::Enumerate(args) => enumerate(args),
        Command::Solve { mode, order, smax } => Ok(solve((*mode).into(), order, *smax)),
        Command::Verify { mode, family } => verify((*mode).into(), family.as_deref(), cli.jobs),
        Command::Geometry(args) => geometry::run(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json => print!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            if report.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
