//! Command-line front end.
//!
//! Subcommands: bounds (full report), family (sweep of the sharp cyclic
//! family), minima, witness, index, verify. Groups are given as
//! `--modulus n` for one cyclic factor or `--factors a,b,...` for a
//! product; characters as bare integers over a cyclic group or
//! colon-separated tuples over a product, negatives reduced modulo the
//! factor orders.
//!
//! Exit codes: 0 success, 1 computation error (budget, insufficient
//! degree), 2 usage error, 3 violated theoretical guarantee or internal
//! error. All diagnostics go to stderr as `error[code]: message`.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{
    extension_index_budgeted, family_sweep, successive_minima_budgeted, verify_all_budgeted,
    BoundsReport, FamilyRow, REPORT_SCHEMA,
};
use crate::enumerate::{Geometry, DEFAULT_POINT_BUDGET};
use crate::error::Error;
use crate::group::{AbelianGroup, CharSupport};
use crate::lattice::LatticeIndex;
use crate::witness::{default_names, generator_witness_budgeted, monomial_string};

#[derive(Parser)]
#[command(
    name = "invar-lattice",
    version,
    about = "Exact degree bounds for rational invariants of finite abelian groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute all bounds, minima, indices, and witnesses for one instance.
    Bounds(BoundsCmd),
    /// Sweep the sharp family over Z/n and compare with the closed form.
    Family(FamilyCmd),
    /// Successive minima of the L1 ball with respect to the lattice.
    Minima(MinimaCmd),
    /// Generator witness at a chosen degree, with monomial renderings.
    Witness(WitnessCmd),
    /// Extension index of the degree-bounded subfield.
    Index(IndexCmd),
    /// Run every theoretical check and report each one.
    Verify(VerifyCmd),
}

#[derive(Args)]
struct InstanceArgs {
    /// Order of a cyclic group (shorthand for --factors n).
    #[arg(long, conflicts_with = "factors")]
    modulus: Option<i64>,
    /// Cyclic factor orders of a product group, comma separated.
    #[arg(long, value_delimiter = ',')]
    factors: Option<Vec<i64>>,
    /// Characters: bare integers over a cyclic group, colon-separated
    /// tuples over a product; negative entries reduce modulo the order.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required = true
    )]
    chars: Vec<String>,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Cap on points emitted by any single enumeration call.
    #[arg(long, default_value_t = DEFAULT_POINT_BUDGET)]
    budget: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Rational,
    Polynomial,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GeometryArg {
    Cross,
    Simplex,
}

impl From<GeometryArg> for Geometry {
    fn from(g: GeometryArg) -> Self {
        match g {
            GeometryArg::Cross => Geometry::CrossPolytope,
            GeometryArg::Simplex => Geometry::Simplex,
        }
    }
}

#[derive(Args)]
struct BoundsCmd {
    #[command(flatten)]
    instance: InstanceArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Which side of the report the table shows; json and csv always
    /// carry everything.
    #[arg(long, value_enum, default_value_t = Mode::Both)]
    mode: Mode,
}

#[derive(Args)]
struct FamilyCmd {
    /// Range of cyclic orders, as `lo:hi` or a single value.
    #[arg(long)]
    n: String,
    /// Range of support sizes, as `lo:hi` or a single value.
    #[arg(long)]
    m: String,
    /// Worker threads for the sweep; 0 picks the machine parallelism.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct MinimaCmd {
    #[command(flatten)]
    instance: InstanceArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct WitnessCmd {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long, allow_hyphen_values = true)]
    degree: i64,
    #[arg(long, value_enum, default_value_t = GeometryArg::Cross)]
    geometry: GeometryArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct IndexCmd {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long, allow_hyphen_values = true)]
    degree: i64,
    #[arg(long, value_enum, default_value_t = GeometryArg::Cross)]
    geometry: GeometryArg,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyCmd {
    #[command(flatten)]
    instance: InstanceArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CmdResult = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

impl InstanceArgs {
    fn support(&self) -> Result<CharSupport, Failure> {
        let group = match (self.modulus, &self.factors) {
            (Some(n), None) => AbelianGroup::cyclic(n)?,
            (None, Some(factors)) => AbelianGroup::new(factors.clone())?,
            (None, None) => return Err(usage("one of --modulus or --factors is required")),
            (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
        };
        let mut raw = Vec::with_capacity(self.chars.len());
        for item in &self.chars {
            let residues: Result<Vec<i64>, _> = item
                .split(':')
                .map(|part| part.trim().parse::<i64>())
                .collect();
            let residues = residues
                .map_err(|_| usage(format!("cannot parse character '{item}' as integers")))?;
            raw.push(residues);
        }
        Ok(CharSupport::new(group, &raw)?)
    }
}

fn parse_range(text: &str, flag: &str) -> Result<(i64, i64), Failure> {
    let parse = |part: &str| {
        part.trim()
            .parse::<i64>()
            .map_err(|_| usage(format!("cannot parse --{flag} range '{text}'")))
    };
    match text.split_once(':') {
        Some((lo, hi)) => Ok((parse(lo)?, parse(hi)?)),
        None => {
            let v = parse(text)?;
            Ok((v, v))
        }
    }
}

fn resolve_workers(requested: usize) -> usize {
    if requested > 0 {
        requested
    } else {
        std::thread::available_parallelism().map_or(1, |n| n.get())
    }
}

fn support_label(support: &CharSupport) -> String {
    support
        .chars()
        .iter()
        .map(|c| {
            c.residues()
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(":")
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn support_tuples(support: &CharSupport) -> Vec<Vec<i64>> {
    support
        .chars()
        .iter()
        .map(|c| c.residues().to_vec())
        .collect()
}

fn emit_json<T: Serialize>(value: &T) -> CmdResult {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::Lib(Error::Internal(format!("serialization failed: {e}"))))?;
    println!("{text}");
    Ok(())
}

fn join<T: std::fmt::Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn vector_label(v: &[i64]) -> String {
    format!("({})", join(v, ", "))
}

fn cmd_bounds(cmd: &BoundsCmd) -> CmdResult {
    let support = cmd.instance.support()?;
    let report = verify_all_budgeted(&support, cmd.output.budget)?;
    match cmd.output.format {
        Format::Json => emit_json(&report),
        Format::Csv => {
            println!("group,effective_order,gamma_r,beta_r,gamma_poly,beta_poly,minima,extremal");
            println!(
                "{},{},{},{},{},{},{},{}",
                report.group,
                report.effective_order,
                report.gamma_r,
                report.beta_r,
                report.gamma_poly,
                report.beta_poly,
                join(&report.successive_minima, " "),
                report.theoretical.extremal
            );
            Ok(())
        }
        Format::Table => {
            print_bounds_table(&report, cmd.mode);
            Ok(())
        }
    }
}

fn print_bounds_table(report: &BoundsReport, mode: Mode) {
    let row = |k: &str, v: String| println!("{k:<22}{v}");
    row("group", report.group.clone());
    row(
        "support",
        report
            .support
            .iter()
            .map(|c| join(c, ":"))
            .collect::<Vec<_>>()
            .join(", "),
    );
    row("effective order", report.effective_order.to_string());
    let rational = mode != Mode::Polynomial;
    let polynomial = mode != Mode::Rational;
    if rational {
        row("gamma_r", report.gamma_r.to_string());
        row("beta_r", report.beta_r.to_string());
        row("successive minima", join(&report.successive_minima, " "));
        for (d, idx) in &report.extension_indices {
            row(&format!("index at degree {d}"), idx.to_string());
        }
    }
    if polynomial {
        row("gamma_poly", report.gamma_poly.to_string());
        row("beta_poly", report.beta_poly.to_string());
    }
    let t = &report.theoretical;
    row("root lower bound", t.root_lower_bound.to_string());
    row("hard floor", t.hard_floor.to_string());
    row("involutions only", t.involution_only.to_string());
    if let Some(v) = t.family_value {
        row("family value", v.to_string());
    }
    if let Some(r) = &t.minkowski_rhs {
        row("minima bound", r.to_string());
    }
    row("noether cap", t.noether_cap.to_string());
    row("extremal", t.extremal.to_string());
    let witness_block = |tag: &str, w: &crate::bounds::WitnessData| {
        println!("witness ({tag}, degree {})", w.degree);
        for (point, monomial) in w.generators.iter().zip(&w.monomials) {
            println!("  {:<18}{monomial}", vector_label(point));
        }
    };
    if rational {
        witness_block("cross", &report.witnesses.rational);
    }
    if polynomial {
        witness_block("simplex", &report.witnesses.polynomial);
    }
}

#[derive(Serialize)]
struct FamilyReport {
    schema: String,
    rows: Vec<FamilyRow>,
    all_match: bool,
}

fn cmd_family(cmd: &FamilyCmd) -> CmdResult {
    let n_range = parse_range(&cmd.n, "n")?;
    let m_range = parse_range(&cmd.m, "m")?;
    let workers = resolve_workers(cmd.workers);
    let rows = family_sweep(n_range, m_range, workers, cmd.output.budget)?;
    let all_match = rows.iter().all(|r| r.matches);
    match cmd.output.format {
        Format::Json => emit_json(&FamilyReport {
            schema: REPORT_SCHEMA.to_string(),
            rows: rows.clone(),
            all_match,
        })?,
        Format::Csv => {
            println!("n,m,predicted,beta_r,gamma_r,match");
            for r in &rows {
                println!(
                    "{},{},{},{},{},{}",
                    r.n, r.m, r.predicted, r.beta_r, r.gamma_r, r.matches
                );
            }
        }
        Format::Table => {
            println!(
                "{:>4} {:>3} {:>9} {:>7} {:>8} {:>6}",
                "n", "m", "predicted", "beta_r", "gamma_r", "match"
            );
            for r in &rows {
                println!(
                    "{:>4} {:>3} {:>9} {:>7} {:>8} {:>6}",
                    r.n, r.m, r.predicted, r.beta_r, r.gamma_r, r.matches
                );
            }
        }
    }
    if all_match {
        Ok(())
    } else {
        Err(Failure::Lib(Error::TheoryViolation(format!(
            "family sweep found mismatching cells in n={}:{}, m={}:{}",
            n_range.0, n_range.1, m_range.0, m_range.1
        ))))
    }
}

#[derive(Serialize)]
struct MinimaReport {
    schema: String,
    group: String,
    support: Vec<Vec<i64>>,
    successive_minima: Vec<i64>,
    gamma_r: i64,
}

fn cmd_minima(cmd: &MinimaCmd) -> CmdResult {
    let support = cmd.instance.support()?;
    let minima = successive_minima_budgeted(&support, cmd.output.budget)?;
    let gamma_r = *minima.last().expect("support is non-empty");
    match cmd.output.format {
        Format::Json => emit_json(&MinimaReport {
            schema: REPORT_SCHEMA.to_string(),
            group: support.group().to_string(),
            support: support_tuples(&support),
            successive_minima: minima,
            gamma_r,
        }),
        Format::Csv => {
            println!("i,lambda");
            for (i, l) in minima.iter().enumerate() {
                println!("{},{}", i + 1, l);
            }
            Ok(())
        }
        Format::Table => {
            println!("{}", join(&minima, " "));
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct WitnessReport {
    schema: String,
    group: String,
    support: Vec<Vec<i64>>,
    degree: i64,
    geometry: Geometry,
    generators: Vec<Vec<i64>>,
    monomials: Vec<String>,
    coefficients: Vec<Vec<i64>>,
    target_basis: Vec<Vec<i64>>,
}

fn cmd_witness(cmd: &WitnessCmd) -> CmdResult {
    let support = cmd.instance.support()?;
    let geometry = Geometry::from(cmd.geometry);
    let cert = generator_witness_budgeted(&support, cmd.degree, geometry, cmd.output.budget)?;
    let names = default_names(&support);
    let monomials: Vec<String> = cert
        .generators
        .iter()
        .map(|p| monomial_string(p, &names))
        .collect::<Result<_, _>>()?;
    match cmd.output.format {
        Format::Json => emit_json(&WitnessReport {
            schema: REPORT_SCHEMA.to_string(),
            group: support.group().to_string(),
            support: support_tuples(&support),
            degree: cert.degree,
            geometry,
            generators: cert.generators.points().to_vec(),
            monomials,
            coefficients: cert.coefficients,
            target_basis: cert.target_basis,
        }),
        Format::Csv => {
            println!("degree,monomial,exponents");
            for (point, monomial) in cert.generators.iter().zip(&monomials) {
                println!(
                    "{},{},{}",
                    point.iter().map(|x| x.abs()).sum::<i64>(),
                    monomial,
                    join(point, " ")
                );
            }
            Ok(())
        }
        Format::Table => {
            println!(
                "generators of {} at degree <= {} ({geometry})",
                support.group(),
                cert.degree
            );
            for (point, monomial) in cert.generators.iter().zip(&monomials) {
                println!("  {:<18}{monomial}", vector_label(point));
            }
            println!("basis rewrite verified: coefficients * generators = canonical basis");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct IndexReport {
    schema: String,
    group: String,
    support: Vec<Vec<i64>>,
    degree: i64,
    geometry: Geometry,
    index: LatticeIndex,
}

fn cmd_index(cmd: &IndexCmd) -> CmdResult {
    let support = cmd.instance.support()?;
    let geometry = Geometry::from(cmd.geometry);
    let index = extension_index_budgeted(&support, cmd.degree, geometry, cmd.output.budget)?;
    match cmd.output.format {
        Format::Json => emit_json(&IndexReport {
            schema: REPORT_SCHEMA.to_string(),
            group: support.group().to_string(),
            support: support_tuples(&support),
            degree: cmd.degree,
            geometry,
            index,
        }),
        Format::Csv => {
            println!("degree,geometry,index");
            println!("{},{},{}", cmd.degree, geometry, index);
            Ok(())
        }
        Format::Table => {
            println!("{index}");
            Ok(())
        }
    }
}

fn cmd_verify(cmd: &VerifyCmd) -> CmdResult {
    let support = cmd.instance.support()?;
    let report = verify_all_budgeted(&support, cmd.output.budget)?;
    match cmd.output.format {
        Format::Json => emit_json(&report),
        Format::Csv | Format::Table => {
            let t = &report.theoretical;
            let line = |name: &str, detail: String| println!("ok  {name:<28}{detail}");
            println!("{} with support {}", report.group, support_label(&support));
            line(
                "inequality chain",
                format!(
                    "gamma_r {} <= beta_r {} <= beta_poly {}; gamma_poly {}",
                    report.gamma_r, report.beta_r, report.beta_poly, report.gamma_poly
                ),
            );
            line(
                "largest minimum",
                format!("lambda_m = {} = gamma_r", report.gamma_r),
            );
            line(
                "m-th root bound",
                format!(
                    "gamma_r {} >= integer root {} of order {}",
                    report.gamma_r, t.root_lower_bound, report.effective_order
                ),
            );
            line(
                "hard floor",
                format!("gamma_r {} >= {}", report.gamma_r, t.hard_floor),
            );
            line(
                "minima profile",
                format!(
                    "{} non-decreasing, first >= 2",
                    join(&report.successive_minima, " ")
                ),
            );
            line(
                "minkowski product",
                format!(
                    "product {} bounded by m! * det",
                    report.successive_minima.iter().product::<i64>()
                ),
            );
            if let Some(r) = &t.minkowski_rhs {
                line("prime minima bound", format!("gamma_r <= {r}"));
            }
            if let Some(v) = t.family_value {
                line("family sharpness", format!("beta_r = gamma_r = {v}"));
            }
            line("noether cap", format!("beta_poly <= {}", t.noether_cap));
            line(
                "extension indices",
                format!(
                    "non-increasing, 1 at beta_r: {:?}",
                    report.extension_indices
                ),
            );
            line("extremal check", format!("extremal = {}", t.extremal));
            println!("all checks passed");
            Ok(())
        }
    }
}

fn code_slug(e: &Error) -> &'static str {
    match e {
        Error::Overflow => "overflow",
        Error::InvalidFactorOrder(_) => "invalid-factor",
        Error::CharacterShape { .. } => "character-shape",
        Error::DimensionMismatch { .. } => "dimension-mismatch",
        Error::TrivialSupport => "trivial-support",
        Error::NotFullRank { .. } => "not-full-rank",
        Error::NegativeDegree(_) => "negative-degree",
        Error::BudgetExceeded { .. } => "budget-exceeded",
        Error::NotSublattice { .. } => "not-sublattice",
        Error::InsufficientDegree { .. } => "insufficient-degree",
        Error::NegativeExponent(_) => "negative-exponent",
        Error::WeightMismatch(..) => "weight-mismatch",
        Error::EmptyMonomialList => "empty-monomials",
        Error::NotPrime(_) => "not-prime",
        Error::InvalidFamily { .. } => "invalid-family",
        Error::TheoryViolation(_) => "theory-violation",
        Error::Internal(_) => "internal",
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::TheoryViolation(_) | Error::Internal(_) => 3,
        Error::InvalidFactorOrder(_)
        | Error::CharacterShape { .. }
        | Error::DimensionMismatch { .. }
        | Error::TrivialSupport
        | Error::NegativeDegree(_)
        | Error::NotPrime(_)
        | Error::InvalidFamily { .. } => 2,
        _ => 1,
    }
}

/// Parses and runs one invocation; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let outcome = match &cli.command {
        Command::Bounds(cmd) => cmd_bounds(cmd),
        Command::Family(cmd) => cmd_family(cmd),
        Command::Minima(cmd) => cmd_minima(cmd),
        Command::Witness(cmd) => cmd_witness(cmd),
        Command::Index(cmd) => cmd_index(cmd),
        Command::Verify(cmd) => cmd_verify(cmd),
    };
    match outcome {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            eprintln!("error[usage]: {msg}");
            2
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error[{}]: {e}", code_slug(&e));
            exit_code(&e)
        }
    }
}
