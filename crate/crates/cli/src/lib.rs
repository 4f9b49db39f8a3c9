//! Command-line front end: `analyze`, `verify-theorem` and `compare-models`.

pub mod commands;
pub mod input;
pub mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use e2top::catalog::CatalogEntry;
use e2top::simplicial::{Budget, DEFAULT_SIMPLEX_BUDGET};

use commands::{AnalyzeOptions, Model, TheoremOptions};
use input::NamedGroup;

/// Largest accepted `--max-dim`.
pub const MAX_DIM_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitCode {
    Ok = 0,
    VerificationFailed = 1,
    InputError = 2,
    BudgetExceeded = 3,
}

#[derive(Parser, Debug)]
#[command(name = "e2top", version, about = "Homology and fundamental group of E(2, G) for finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Homology of the chosen models and π₁ data for one group.
    Analyze(AnalyzeArgs),
    /// Check abelian ⟺ π₁ trivial ⟺ acyclic across a catalog.
    VerifyTheorem(TheoremArgs),
    /// Compare reduced homology of the e2, ebar and coset models.
    CompareModels(CompareArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct GroupSource {
    /// Catalog descriptor such as `S3`, `Q16`, `ES+32` or `C2xC4`.
    #[arg(long)]
    pub group: Option<String>,
    /// File with `degree N` and one cycle-notation generator per line.
    #[arg(long)]
    pub group_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CommonArgs {
    /// Cap on simplices materialized per model.
    #[arg(long, env = "E2TOP_BUDGET", default_value_t = DEFAULT_SIMPLEX_BUDGET)]
    pub budget_simplices: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Leave timings out so reports are reproducible byte for byte.
    #[arg(long)]
    pub no_timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub source: GroupSource,
    /// Chains are built through this degree; homology is reported below it.
    #[arg(long, default_value_t = 3)]
    pub max_dim: usize,
    #[arg(long, value_delimiter = ',', default_value = "e2,ebar,coset")]
    pub models: Vec<Model>,
    /// Directory receiving one `<model>.chains` file per model.
    #[arg(long)]
    pub dump_chains: Option<PathBuf>,
    /// File receiving the π₁ presentation.
    #[arg(long)]
    pub dump_pi1: Option<PathBuf>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct TheoremArgs {
    /// `default`, `abelian`, or a comma-separated list of descriptors.
    #[arg(long, default_value = "default")]
    pub catalog: String,
    #[arg(long)]
    pub max_order: Option<usize>,
    /// Include the order-32 extraspecial groups in the default catalog.
    #[arg(long)]
    pub big: bool,
    #[arg(long, default_value_t = 3)]
    pub max_dim: usize,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    #[command(flatten)]
    pub source: GroupSource,
    /// Highest homology degree compared.
    #[arg(long, default_value_t = 2)]
    pub max_deg: usize,
    #[command(flatten)]
    pub common: CommonArgs,
}

/// Runs a parsed command, writing the report to `out` and diagnostics to
/// `err`.
pub fn run<W: Write, E: Write>(cli: Cli, out: &mut W, err: &mut E) -> ExitCode {
    match execute(cli, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            ExitCode::InputError
        }
    }
}

fn execute<W: Write>(cli: Cli, out: &mut W) -> Result<ExitCode, String> {
    match cli.command {
        Command::Analyze(a) => {
            check_dim(a.max_dim, 1)?;
            let g = resolve(&a.source)?;
            let opts = AnalyzeOptions {
                max_dim: a.max_dim,
                models: dedup_models(a.models),
                budget: Budget::new(a.common.budget_simplices),
                timings: !a.common.no_timings,
                dump_chains: a.dump_chains,
                dump_pi1: a.dump_pi1,
            };
            let (report, code) = commands::analyze(&g, &opts)?;
            emit(out, a.common.format, &report, commands::analysis_table)?;
            Ok(code)
        }
        Command::VerifyTheorem(t) => {
            check_dim(t.max_dim, 1)?;
            let entries = catalog_entries(&t.catalog, t.big)?;
            let opts = TheoremOptions {
                max_order: t.max_order,
                max_dim: t.max_dim,
                budget: Budget::new(t.common.budget_simplices),
                timings: !t.common.no_timings,
            };
            let report = commands::verify_theorem(&t.catalog, &entries, &opts);
            emit(out, t.common.format, &report, commands::theorem_table)?;
            Ok(if report.all_pass { ExitCode::Ok } else { ExitCode::VerificationFailed })
        }
        Command::CompareModels(c) => {
            check_dim(c.max_deg + 1, 1)?;
            let g = resolve(&c.source)?;
            let (report, code) = commands::compare_models(&g, c.max_deg, Budget::new(c.common.budget_simplices));
            emit(out, c.common.format, &report, commands::comparison_table)?;
            Ok(code)
        }
    }
}

fn check_dim(d: usize, min: usize) -> Result<(), String> {
    if d < min || d > MAX_DIM_CAP {
        Err(format!("dimension {d} outside {min}..={MAX_DIM_CAP}"))
    } else {
        Ok(())
    }
}

fn resolve(source: &GroupSource) -> Result<NamedGroup, String> {
    let g = match (&source.group, &source.group_file) {
        (Some(d), _) => input::from_descriptor(d),
        (None, Some(p)) => input::from_file(p),
        (None, None) => return Err("one of --group or --group-file is required".into()),
    };
    g.map_err(|e| e.to_string())
}

fn dedup_models(models: Vec<Model>) -> Vec<Model> {
    let mut seen = Vec::new();
    for m in models {
        if !seen.contains(&m) {
            seen.push(m);
        }
    }
    seen
}

pub fn catalog_entries(name: &str, big: bool) -> Result<Vec<CatalogEntry>, String> {
    match name {
        "default" => Ok(CatalogEntry::default_catalog(big)),
        "abelian" => Ok(CatalogEntry::abelian_catalog()),
        list => list
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse::<CatalogEntry>().map_err(|e| e.to_string()))
            .collect(),
    }
}

fn emit<W: Write, T: Serialize>(
    out: &mut W,
    format: Format,
    report: &T,
    table: fn(&T) -> String,
) -> Result<(), String> {
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).map_err(|e| e.to_string())?;
            s.push('\n');
            s
        }
        Format::Table => table(report),
    };
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())
}
