//! Command-line front end. [`run`] takes the full argument vector and
//! writes reports to `out`, diagnostics to `err`.
//!
//! Exit codes: 0 when the property or implication holds (or a listing
//! completed), 1 when it fails or a counterexample was found, 2 on input
//! or usage errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::enumerate::{enumerate_topologies_capped, DEFAULT_ENUMERATION_CAP, MAX_ENUMERATION_CAP};
use crate::gamma::gamma_open_family;
use crate::lab::{
    check_implication, run_paper_examples, theorem_report, with_workers, Atom, Implication, LabReport, OpSource,
    Scope,
};
use crate::separation::ClosedMode;
use crate::spacefile::parse_space_file;
use crate::subspace::TraceConvention;
use crate::verdict::Verdict;

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "gammatop", version, about = "Operation-based separation properties of finite topological spaces")]
struct Cli {
    /// Worker threads for scans (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Print `-` instead of elapsed times, for byte-stable output.
    #[arg(long, global = true)]
    no_timings: bool,
    /// Allow carriers of up to five points.
    #[arg(long, global = true)]
    extended: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate properties of the space in a file.
    Check {
        file: PathBuf,
        /// A single property, e.g. `open-op` or `gs-normal(gamma)`;
        /// `gamma-open-family` lists the γ-open sets.
        #[arg(long)]
        property: Option<String>,
        #[command(flatten)]
        conventions: Conventions,
    },
    /// List the topologies on a carrier.
    Enumerate {
        #[arg(long)]
        points: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Search for a counterexample to an implication.
    Falsify {
        #[arg(long)]
        points: usize,
        #[arg(long, value_enum, default_value_t = Ops::Catalog)]
        ops: Ops,
        /// `atom & atom => atom`
        #[arg(long)]
        implication: String,
        #[command(flatten)]
        conventions: Conventions,
    },
    /// Scan every theorem row.
    Theorems {
        #[arg(long)]
        points: usize,
        #[arg(long, value_enum, default_value_t = Ops::Catalog)]
        ops: Ops,
        /// Restrict to one closed-set mode (default: both).
        #[arg(long, value_enum)]
        closed_mode: Option<ModeArg>,
        /// Restrict to one trace convention (default: both).
        #[arg(long, value_enum)]
        trace_convention: Option<ConvArg>,
    },
    /// Rebuild the worked examples and compare with their stated properties.
    PaperExamples,
}

#[derive(Args, Debug)]
struct Conventions {
    #[arg(long, value_enum, default_value_t = ModeArg::Tau)]
    closed_mode: ModeArg,
    #[arg(long, value_enum, default_value_t = ConvArg::Max)]
    trace_convention: ConvArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Ops {
    Catalog,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Tau,
    Gamma,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConvArg {
    Max,
    Min,
}

impl From<Ops> for OpSource {
    fn from(o: Ops) -> Self {
        match o {
            Ops::Catalog => OpSource::Catalog,
            Ops::All => OpSource::AllTables,
        }
    }
}

impl From<ModeArg> for ClosedMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Tau => ClosedMode::Tau,
            ModeArg::Gamma => ClosedMode::Gamma,
        }
    }
}

impl From<ConvArg> for TraceConvention {
    fn from(c: ConvArg) -> Self {
        match c {
            ConvArg::Max => TraceConvention::MaxTrace,
            ConvArg::Min => TraceConvention::MinTrace,
        }
    }
}

/// An error that maps to exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    jobs: Option<usize>,
    timings: bool,
    cap: usize,
}

/// Runs one command line (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_HOLDS;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let mut ctx = Ctx {
        out,
        jobs: cli.jobs,
        timings: !cli.no_timings,
        cap: if cli.extended {
            MAX_ENUMERATION_CAP
        } else {
            DEFAULT_ENUMERATION_CAP
        },
    };
    let result = match cli.command {
        Command::Check {
            file,
            property,
            conventions,
        } => check(&mut ctx, &file, property.as_deref(), &conventions),
        Command::Enumerate { points, count_only } => enumerate(&mut ctx, points, count_only),
        Command::Falsify {
            points,
            ops,
            implication,
            conventions,
        } => falsify(&mut ctx, points, ops.into(), &implication, &conventions),
        Command::Theorems {
            points,
            ops,
            closed_mode,
            trace_convention,
        } => theorems(&mut ctx, points, ops.into(), closed_mode, trace_convention),
        Command::PaperExamples => paper_examples(&mut ctx),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn scope(ctx: &Ctx<'_>, points: usize, ops: OpSource) -> Result<Scope, UsageError> {
    let scope = Scope {
        max_points: points,
        ops,
        cap: ctx.cap,
    };
    scope.validate()?;
    Ok(scope)
}

fn check(ctx: &mut Ctx<'_>, file: &PathBuf, property: Option<&str>, conv: &Conventions) -> Result<i32, UsageError> {
    let text = std::fs::read_to_string(file).map_err(|e| UsageError(format!("{}: {e}", file.display())))?;
    let space = parse_space_file(&text).map_err(|e| UsageError(format!("{}: {e}", file.display())))?;
    let mode = ClosedMode::from(conv.closed_mode);
    let trace = TraceConvention::from(conv.trace_convention);
    writeln!(ctx.out, "space {}: {}", space.name(), space.describe())?;
    let atoms = match property {
        Some("gamma-open-family") => {
            let fam = gamma_open_family(&space);
            writeln!(ctx.out, "gamma-open-family: {}", fam.family().render(space.names()))?;
            return Ok(EXIT_HOLDS);
        }
        Some(p) => vec![Atom::parse(p, mode, trace)?],
        None => Atom::summary(mode, trace),
    };
    let mut all = true;
    for atom in &atoms {
        match atom.evaluate(&space) {
            Verdict::Holds(_) => writeln!(ctx.out, "{atom}: true")?,
            Verdict::Fails(w) => {
                all = false;
                writeln!(ctx.out, "{atom}: false  witness {}", w.render(space.names()))?;
            }
        }
    }
    Ok(if all { EXIT_HOLDS } else { EXIT_FAILS })
}

fn enumerate(ctx: &mut Ctx<'_>, points: usize, count_only: bool) -> Result<i32, UsageError> {
    let ts = enumerate_topologies_capped(points, ctx.cap)?;
    if count_only {
        writeln!(ctx.out, "{}", ts.len())?;
    } else {
        for (i, t) in ts.iter().enumerate() {
            writeln!(ctx.out, "t{i} {}", t.render())?;
        }
        writeln!(ctx.out, "{} topologies on {points} points", ts.len())?;
    }
    Ok(EXIT_HOLDS)
}

fn falsify(
    ctx: &mut Ctx<'_>,
    points: usize,
    ops: OpSource,
    text: &str,
    conv: &Conventions,
) -> Result<i32, UsageError> {
    let scope = scope(ctx, points, ops)?;
    let imp = Implication::parse(text, conv.closed_mode.into(), conv.trace_convention.into())?;
    let row = with_workers(ctx.jobs, || check_implication(imp.to_string(), &imp, scope))??;
    let report = LabReport { rows: vec![row] };
    write!(ctx.out, "{}", report.render(ctx.timings))?;
    let row = &report.rows[0];
    match &row.counterexample {
        None => {
            writeln!(ctx.out, "no counterexample, {} instances", row.total)?;
            Ok(EXIT_HOLDS)
        }
        Some(c) => {
            writeln!(ctx.out, "counterexample: {}", c.render())?;
            Ok(EXIT_FAILS)
        }
    }
}

fn theorems(
    ctx: &mut Ctx<'_>,
    points: usize,
    ops: OpSource,
    mode: Option<ModeArg>,
    conv: Option<ConvArg>,
) -> Result<i32, UsageError> {
    let scope = scope(ctx, points, ops)?;
    let modes: Vec<ClosedMode> = match mode {
        Some(m) => vec![m.into()],
        None => ClosedMode::ALL.to_vec(),
    };
    let convs: Vec<TraceConvention> = match conv {
        Some(c) => vec![c.into()],
        None => TraceConvention::ALL.to_vec(),
    };
    let report = with_workers(ctx.jobs, || theorem_report(scope, &modes, &convs))??;
    write!(ctx.out, "{}", report.render(ctx.timings))?;
    let k = report.counterexamples();
    writeln!(ctx.out, "{} rows, {k} with counterexamples", report.rows.len())?;
    Ok(if k == 0 { EXIT_HOLDS } else { EXIT_FAILS })
}

fn paper_examples(ctx: &mut Ctx<'_>) -> Result<i32, UsageError> {
    let report = run_paper_examples();
    write!(ctx.out, "{}", report.render())?;
    Ok(if report.all_reproduced() {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    })
}

