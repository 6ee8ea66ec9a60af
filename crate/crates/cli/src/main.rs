//! Command line front end: invariants of pfaffian ladder ideals, a
//! multiplicity table over parameter ranges, an oracle check computed from
//! scratch, an ascii ladder picture and a built-in consistency battery.
//!
//! Exit codes: 0 success, 1 computation error, 2 usage error, 3 oracle
//! mismatch. Data goes to stdout, diagnostics to stderr.

mod output;
mod select;
mod selftest;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pfaffian_ladders::invariants::{family_multiplicity, InvariantReport};
use pfaffian_ladders::oracle::{format_basis, groebner_for_spec, verify};

use output::OutputFormat;
use select::{parse_range, FamilyName, InclusiveRange, SelectArgs};

#[derive(Parser)]
#[command(name = "pfladder", version, about = "Invariants of pfaffian ideals of ladders")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Height, multiplicity, h-vector and regularity of one ideal
    Invariants(InvariantsArgs),
    /// Checks recomputed from scratch with Groebner bases
    Oracle {
        #[command(subcommand)]
        command: OracleCmd,
    },
    /// Multiplicity grid over parameter ranges
    Table(TableArgs),
    /// Ascii picture of a ladder
    Render(RenderArgs),
    /// Cross checks between the formulas, the recursion and the oracle
    Selftest,
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Recompute the invariants from a Groebner basis and compare
    Verify(VerifyArgs),
}

#[derive(Args)]
struct InvariantsArgs {
    #[command(flatten)]
    select: SelectArgs,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    select: SelectArgs,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
    /// Also print the reduced Groebner basis, one polynomial per line
    #[arg(long)]
    dump_basis: bool,
}

#[derive(Args)]
struct TableArgs {
    /// Family to tabulate
    #[arg(long, value_enum, ignore_case = true)]
    family: FamilyName,
    /// Pfaffian size parameter, a value or lo..hi (inclusive)
    #[arg(long, value_parser = parse_range)]
    t: Option<InclusiveRange>,
    /// Ambient size, a value or lo..hi (families I and Ln)
    #[arg(long, value_parser = parse_range)]
    n: Option<InclusiveRange>,
    /// Count of leading smaller blocks, a value or lo..hi (families Ljk and Hjk)
    #[arg(long, value_parser = parse_range)]
    j: Option<InclusiveRange>,
    /// Block count, a value or lo..hi (families Lk, Ljk and Hjk)
    #[arg(long, value_parser = parse_range)]
    k: Option<InclusiveRange>,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    select: SelectArgs,
}

/// What ended the run: a bad invocation or a failed computation.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Computation(pfaffian_ladders::Error),
}

impl Failure {
    pub fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(msg.into())
    }
}

impl From<pfaffian_ladders::Error> for Failure {
    fn from(e: pfaffian_ladders::Error) -> Self {
        Failure::Computation(e)
    }
}

fn error_name(e: &pfaffian_ladders::Error) -> &'static str {
    use pfaffian_ladders::Error::*;
    match e {
        CornerOutOfRange { .. } => "CornerOutOfRange",
        CoincidentCorners { .. } => "CoincidentCorners",
        NotSortable { .. } => "NotSortable",
        EmptySpec => "EmptySpec",
        StepNotApplicable { .. } => "StepNotApplicable",
        BadCornerIndex { .. } => "BadCornerIndex",
        UnknownFamily { .. } => "UnknownFamily",
        BadParams { .. } => "BadParams",
        HypothesisFails { .. } => "HypothesisFails",
        NonTermination => "NonTermination",
        OddSubset { .. } => "OddSubset",
        IndexOutOfRange { .. } => "IndexOutOfRange",
        TooManyGenerators { .. } => "TooManyGenerators",
        BudgetExceeded { .. } => "BudgetExceeded",
        NegativeHEntry { .. } => "NegativeHEntry",
    }
}

fn main() -> ExitCode {
    match run(&Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Computation(e)) => {
            eprintln!("error: {}: {e}", error_name(&e));
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Cmd::Invariants(args) => run_invariants(args),
        Cmd::Oracle {
            command: OracleCmd::Verify(args),
        } => run_verify(args),
        Cmd::Table(args) => run_table(args),
        Cmd::Render(args) => run_render(args),
        Cmd::Selftest => selftest::run(),
    }
}

fn run_invariants(args: &InvariantsArgs) -> Result<u8, Failure> {
    let sel = args.select.resolve()?;
    let report = InvariantReport::from_engine(&sel.spec)?;
    print!("{}", output::invariants(&report, args.format));
    Ok(0)
}

fn run_verify(args: &VerifyArgs) -> Result<u8, Failure> {
    let sel = args.select.resolve()?;
    let report = verify(&sel.spec, sel.family)?;
    print!("{}", output::verification(&report, args.format));
    if args.dump_basis {
        let (ring, basis) = groebner_for_spec(&sel.spec.normalize())?;
        println!("{}", format_basis(&ring, &basis));
    }
    Ok(if report.pass { 0 } else { 3 })
}

fn run_table(args: &TableArgs) -> Result<u8, Failure> {
    let name = args.family;
    let t_range = args.t.ok_or_else(|| Failure::usage("--t is required"))?;
    let n_values = select::range_values("n", args.n, name.takes_n())?;
    let j_values = select::range_values("j", args.j, name.takes_j())?;
    let k_values = select::range_values("k", args.k, name.takes_k())?;

    let mut columns = vec!["t"];
    if name.takes_n() {
        columns.push("n");
    }
    if name.takes_j() {
        columns.push("j");
    }
    if name.takes_k() {
        columns.push("k");
    }

    let mut rows = Vec::new();
    for t in t_range.iter() {
        for &n in &n_values {
            for &j in &j_values {
                for &k in &k_values {
                    let family = select::assemble(name, t, n, j, k);
                    if family.spec().is_err() {
                        // parameter combination outside the family's range
                        continue;
                    }
                    let multiplicity = family_multiplicity(family)?;
                    let params: Vec<usize> =
                        [Some(t), n, j, k].into_iter().flatten().collect();
                    rows.push(output::TableRow {
                        params,
                        multiplicity: multiplicity.to_string(),
                    });
                }
            }
        }
    }
    let table = output::Table {
        family: name.cli_name(),
        columns,
        rows,
    };
    print!("{}", output::table(&table, args.format));
    Ok(0)
}

fn run_render(args: &RenderArgs) -> Result<u8, Failure> {
    let sel = args.select.resolve()?;
    println!("{}", sel.spec.ladder().render_ascii());
    let sizes: Vec<String> = sel.spec.t().iter().map(|t| t.to_string()).collect();
    println!("sizes: {}", sizes.join(" "));
    Ok(0)
}
