//! `smallcat`: finite categories, groupoids, group bundles, and actions as
//! structured text documents.
//!
//! Every command reads documents given with `--in`, writes its output
//! document (if any) to `--out` or standard output, and always writes a run
//! report to `--report` or standard error. Exit codes: 0 pass, 1 law
//! violation, 2 parse or usage error, 3 isomorphism budget exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use smallcat_cli::{commands, docs, report};
use smallcat::bundle::ChoicePolicy;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "smallcat",
    version,
    about = "Finite categories, groupoids, bundles, and actions from structured text documents"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PolicyArg {
    /// Least object index as representative, least morphism index as connector.
    LeastIndex,
    /// Greatest indices instead.
    GreatestIndex,
}

#[derive(Args)]
struct Common {
    /// Input document file; repeat it for the two-input comparison commands.
    #[arg(long = "in", value_name = "FILE")]
    inputs: Vec<PathBuf>,
    /// Write the output document here instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Write the run report here instead of standard error.
    #[arg(long, value_name = "FILE")]
    report: Option<PathBuf>,
    /// Node budget for isomorphism searches.
    #[arg(long, value_name = "N", default_value_t = smallcat::iso::DEFAULT_BUDGET)]
    budget: u64,
    /// Choice policy for standardization.
    #[arg(long, value_enum, default_value_t = PolicyArg::LeastIndex)]
    policy: PolicyArg,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the laws of any document kind.
    Validate(Common),
    /// Decompose a groupoid into a group bundle with a verified isomorphism.
    Standardize(Common),
    /// Build the standard groupoid of a group bundle.
    BuildStandard(Common),
    /// Build the semi-direct product of an action.
    Semidirect(Common),
    /// Build the shared-unit semi-direct product (identity object map).
    SemidirectShared(Common),
    /// Build the restricted semi-direct product through the tilde category.
    RestrictedSemidirect(Common),
    /// Build the opposite of a category, groupoid, or action.
    Opposite(Common),
    /// Build the companion category on the action domain.
    Gphi(Common),
    /// Build the inner (conjugation) action of a groupoid on itself.
    InnerAction(Common),
    /// Build the transformation groupoid of a group action on a set.
    TransformationGroupoid(Common),
    /// Search for an isomorphism between two categories or groupoids.
    IsoCheck(Common),
    /// Compare the groupoid and orbit–stabilizer isomorphism criteria.
    CorollaryCheck(Common),
    /// List every action axiom violation of an action document.
    AxiomsReport(Common),
}

impl Cmd {
    fn parts(&self) -> (&'static str, &Common) {
        match self {
            Cmd::Validate(c) => ("validate", c),
            Cmd::Standardize(c) => ("standardize", c),
            Cmd::BuildStandard(c) => ("build-standard", c),
            Cmd::Semidirect(c) => ("semidirect", c),
            Cmd::SemidirectShared(c) => ("semidirect-shared", c),
            Cmd::RestrictedSemidirect(c) => ("restricted-semidirect", c),
            Cmd::Opposite(c) => ("opposite", c),
            Cmd::Gphi(c) => ("gphi", c),
            Cmd::InnerAction(c) => ("inner-action", c),
            Cmd::TransformationGroupoid(c) => ("transformation-groupoid", c),
            Cmd::IsoCheck(c) => ("iso-check", c),
            Cmd::CorollaryCheck(c) => ("corollary-check", c),
            Cmd::AxiomsReport(c) => ("axioms-report", c),
        }
    }
}

/// Writes the report to `--report` or standard error; returns `false` when
/// the file cannot be written.
fn write_report(common: &Common, report: &report::RunReport) -> bool {
    let text = report.emit();
    match &common.report {
        Some(path) => match fs::write(path, &text) {
            Ok(()) => true,
            Err(e) => {
                eprintln!("cannot write report to {}: {e}", path.display());
                false
            }
        },
        None => {
            eprint!("{text}");
            true
        }
    }
}

/// A failure before the command could run: emits a fail report and exits 2.
fn early_failure(
    command: &'static str,
    common: &Common,
    message: String,
    start: Instant,
) -> ExitCode {
    let mut report = report::RunReport::new(command, &[]);
    report.verdict = report::Verdict::Fail;
    report.violation(message);
    report.timing_ms = start.elapsed().as_millis();
    write_report(common, &report);
    ExitCode::from(2)
}

fn run(command: &'static str, common: &Common) -> ExitCode {
    let start = Instant::now();
    if common.inputs.is_empty() {
        return early_failure(command, common, "at least one '--in FILE' is required".into(), start);
    }
    let mut inputs = Vec::new();
    for path in &common.inputs {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                return early_failure(
                    command,
                    common,
                    format!("cannot read {}: {e}", path.display()),
                    start,
                )
            }
        };
        match docs::parse_document(&text) {
            Ok(doc) => inputs.push(doc),
            Err(e) => {
                return early_failure(command, common, format!("{}: {e}", path.display()), start)
            }
        }
    }
    let request = commands::Request {
        command,
        inputs,
        budget: common.budget,
        policy: match common.policy {
            PolicyArg::LeastIndex => ChoicePolicy::LeastIndex,
            PolicyArg::GreatestIndex => ChoicePolicy::GreatestIndex,
        },
    };
    let mut outcome = commands::run(&request);
    outcome.report.timing_ms = start.elapsed().as_millis();

    if let Some(doc) = &outcome.document {
        let text = docs::emit(doc);
        match &common.out {
            Some(path) => {
                if let Err(e) = fs::write(path, &text) {
                    eprintln!("cannot write output to {}: {e}", path.display());
                    write_report(common, &outcome.report);
                    return ExitCode::from(2);
                }
            }
            None => print!("{text}"),
        }
    }
    if !write_report(common, &outcome.report) {
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.exit)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (command, common) = cli.command.parts();
    run(command, common)
}
