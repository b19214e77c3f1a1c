//! The `adolg` command line.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::braid::{parse_braid, parse_braid_list, BraidWord};
use crate::hecke::{
    enumerate_s5_check_words, family_check_words, s4_check_words, write_family_files, CheckWord, Family,
};
use crate::invariant::{compute_ado3_with, compute_lg_specialized_with, compute_lg_with, InvariantError, TraceOptions};
use crate::verify::{
    check_corollary, check_relations, check_symmetry, run_equality_sweep, CheckReport, SweepOptions, SweepReport,
};

#[derive(Parser, Debug)]
#[command(
    name = "adolg",
    version,
    about = "ADO-3 and Links-Gould invariants of braid closures"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the invariant of each braid, one polynomial per line
    Compute(ComputeArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
    /// Write the S4 and S5 check words as braid-list files
    Enumerate {
        /// Output directory
        #[arg(long, default_value = "words")]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InvariantKind {
    Ado3,
    Lg,
    LgSpec,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[arg(long, value_enum)]
    pub invariant: InvariantKind,
    /// A braid such as "{3,{1,-2,1}}"
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    pub braid: Option<String>,
    /// A braid-list file, one braid per line, '#' comments
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Check every column of the open-strand operator
    #[arg(long)]
    pub paranoid: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Relations,
    S4,
    S5,
    S5Type(Family),
    Corollary,
    Symmetry,
    All,
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "relations" => Suite::Relations,
            "s4" => Suite::S4,
            "s5" => Suite::S5,
            "corollary" => Suite::Corollary,
            "symmetry" => Suite::Symmetry,
            "all" => Suite::All,
            _ => {
                let k = s
                    .strip_prefix("s5-type=")
                    .ok_or_else(|| format!("unknown suite '{s}'"))?;
                let family = k
                    .parse()
                    .ok()
                    .and_then(Family::from_type_number)
                    .ok_or_else(|| format!("type must be 1..10, got '{k}'"))?;
                Suite::S5Type(family)
            }
        })
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// relations | s4 | s5 | s5-type=K | corollary | symmetry | all
    pub suite: Suite,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub paranoid: bool,
    /// Fraction of sweep words also run through generic Links-Gould
    #[arg(long, default_value_t = 0.01)]
    pub audit: f64,
    /// Write a JSON report here
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    checks: &'a [CheckReport],
    sweep: Option<&'a SweepReport>,
}

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Parses `std::env::args` and runs; the exit code is 0 on success, 1 when a
/// check fails and 2 for usage or input errors.
pub fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            ExitCode::from(code as u8)
        }
    }
}

pub fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Compute(args) => compute(&args),
        Command::Verify(args) => verify(&args),
        Command::Enumerate { out } => match write_family_files(&out) {
            Ok(paths) => {
                for p in paths {
                    println!("{}", p.display());
                }
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {}: {e}", out.display());
                ExitCode::from(EXIT_FAILURE)
            }
        },
    }
}

fn read_braids(args: &ComputeArgs) -> Result<Vec<BraidWord>, String> {
    if let Some(text) = &args.braid {
        return parse_braid(text).map(|b| vec![b]).map_err(|e| e.to_string());
    }
    let path = args.file.as_ref().expect("clap requires --braid or --file");
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_braid_list(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn compute_one(kind: InvariantKind, b: &BraidWord, options: TraceOptions) -> Result<String, InvariantError> {
    Ok(match kind {
        InvariantKind::Ado3 => compute_ado3_with(b, options)?.value.to_string(),
        InvariantKind::Lg => compute_lg_with(b, options)?.value.display_with(["t0", "t1"]),
        InvariantKind::LgSpec => compute_lg_specialized_with(b, options)?.value.to_string(),
    })
}

fn compute(args: &ComputeArgs) -> ExitCode {
    let braids = match read_braids(args) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let options = TraceOptions {
        paranoid: args.paranoid,
        ..Default::default()
    };
    for b in &braids {
        match compute_one(args.invariant, b, options) {
            Ok(v) => println!("{v}"),
            Err(e) => {
                eprintln!("error: {b}: {e}");
                return ExitCode::from(EXIT_FAILURE);
            }
        }
    }
    ExitCode::SUCCESS
}

fn sweep_words(suite: Suite) -> Vec<CheckWord> {
    match suite {
        Suite::S4 | Suite::Corollary | Suite::Symmetry => s4_check_words(),
        Suite::S5 => enumerate_s5_check_words(),
        Suite::S5Type(f) => family_check_words(f),
        Suite::All => s4_check_words().into_iter().chain(enumerate_s5_check_words()).collect(),
        Suite::Relations => Vec::new(),
    }
}

fn verify(args: &VerifyArgs) -> ExitCode {
    let mut checks = Vec::new();
    if matches!(args.suite, Suite::Relations | Suite::All) {
        checks.extend(check_relations());
    }
    let words = sweep_words(args.suite);
    let sweep = if words.is_empty() {
        None
    } else {
        let options = SweepOptions {
            jobs: args.jobs,
            paranoid: args.paranoid,
            audit_fraction: args.audit,
            progress: true,
        };
        match run_equality_sweep(&words, &options) {
            Ok(r) => Some(r),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_FAILURE);
            }
        }
    };
    if let Some(report) = &sweep {
        let values = match report.ado3_values() {
            Ok(v) => v,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_FAILURE);
            }
        };
        if matches!(args.suite, Suite::Corollary | Suite::All) {
            checks.push(check_corollary(&values));
        }
        if matches!(args.suite, Suite::Symmetry | Suite::All) {
            checks.push(check_symmetry(&values));
        }
    }

    let mut ok = true;
    for c in &checks {
        let status = if c.passed() { "ok" } else { "FAILED" };
        println!("{:<24} {status} ({} checked)", c.name, c.checked);
        for f in &c.failures {
            println!("    {f}");
        }
        ok &= c.passed();
    }
    if let Some(r) = &sweep {
        if !matches!(args.suite, Suite::Corollary | Suite::Symmetry) {
            for s in &r.summary {
                println!("{:<24} {}/{} equal", s.family, s.equal, s.total);
            }
            for e in r.failures() {
                println!(
                    "    {} {}: diff {}",
                    e.family,
                    e.braid,
                    e.diff.as_deref().unwrap_or("audit mismatch")
                );
            }
            ok &= r.passed();
        }
    }
    if let Some(path) = &args.report {
        let out = VerifyOutput {
            checks: &checks,
            sweep: sweep.as_ref(),
        };
        let json = serde_json::to_string_pretty(&out).expect("report serializes");
        if let Err(e) = fs::write(path, json) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(EXIT_FAILURE);
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE)
    }
}
