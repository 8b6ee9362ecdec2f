//! Argument parsing and subcommand dispatch.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use runoff_core::{
    classify_strategy, condorcet_mixture, strategy_entropy, MixtureWeights, Model, Strategy,
    SupportVector,
};
use serde_json::json;

use crate::config::{self, MapConfig, RegionConfig, SweepConfig};
use crate::numfmt::{parse_number, parse_triple};
use crate::report::{run_region, run_sweep, to_json};
use crate::{parallel, svg, tables, CliError};

#[derive(Debug, Parser)]
#[command(name = "runoff", version, about = "Transitive and intransitive strategies in a two-round election")]
pub struct Cli {
    /// Worker threads (default: one per core). Output does not depend on it.
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dump sampled strategies and their elimination distributions as CSV.
    Map(MapArgs),
    /// Coverage of the simplex and the relevant-intransitive region.
    Region(RegionArgs),
    /// Relevant area as the leader's support grows.
    Sweep(SweepArgs),
    /// Classify one strategy `P R S`.
    Classify(TripleArgs),
    /// Pairwise probabilities of a Condorcet mixture `W1 W2 W3`.
    Condorcet(TripleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Quantum,
    Classical,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Quantum => Model::Quantum,
            ModelArg::Classical => Model::Classical,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Switch {
    On,
    Off,
}

#[derive(Debug, Args)]
pub struct SupportArgs {
    /// Support vector `w0,w1,w2`; fractions like `1/3` are accepted.
    #[arg(long, value_parser = parse_triple, conflicts_with = "omega2")]
    pub omega: Option<[f64; 3]>,

    /// Leader support; sets `w0 = w1 = (1 - omega2) / 2`.
    #[arg(long, value_parser = parse_number)]
    pub omega2: Option<f64>,
}

impl SupportArgs {
    fn resolve(&self) -> Result<SupportVector, CliError> {
        Ok(match (self.omega, self.omega2) {
            (Some([a, b, c]), _) => SupportVector::new(a, b, c)?,
            (None, Some(w2)) => SupportVector::with_leader(w2)?,
            (None, None) => SupportVector::uniform(),
        })
    }
}

#[derive(Debug, Args)]
pub struct MapArgs {
    #[arg(long, value_enum, default_value = "quantum")]
    pub model: ModelArg,
    #[command(flatten)]
    pub support: SupportArgs,
    #[arg(long, default_value_t = config::DEFAULT_MAP_SAMPLES)]
    pub n: u64,
    #[arg(long, default_value_t = config::DEFAULT_SEED)]
    pub seed: u64,
    /// CSV output (stdout if omitted).
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalysisArgs {
    #[arg(long, value_enum, default_value = "quantum")]
    pub model: ModelArg,
    #[arg(long, default_value_t = config::DEFAULT_REGION_SAMPLES)]
    pub n: u64,
    /// Subdivisions per triangle edge.
    #[arg(long, default_value_t = config::DEFAULT_GRID)]
    pub grid: u32,
    #[arg(long, default_value_t = config::DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = config::DEFAULT_MIN_HITS)]
    pub min_hits: u32,
    #[arg(long, default_value_t = config::DEFAULT_AREA_THRESHOLD)]
    pub area_threshold: f64,
    #[arg(long, value_enum, default_value = "on")]
    pub oracle: Switch,
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    #[command(flatten)]
    pub analysis: AnalysisArgs,
    #[command(flatten)]
    pub support: SupportArgs,
    /// JSON report (stdout if omitted).
    #[arg(long)]
    pub json: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub analysis: AnalysisArgs,
    #[arg(long, value_parser = parse_number, default_value = "1/3")]
    pub omega2_from: f64,
    #[arg(long, value_parser = parse_number, default_value_t = config::DEFAULT_SWEEP_TO)]
    pub omega2_to: f64,
    #[arg(long, value_parser = parse_number, default_value_t = config::DEFAULT_SWEEP_STEP)]
    pub step: f64,
    /// JSON result (stdout if omitted).
    #[arg(long)]
    pub json: Option<PathBuf>,
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TripleArgs {
    #[arg(value_parser = parse_number, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(value_parser = parse_number, allow_negative_numbers = true)]
    pub b: f64,
    #[arg(value_parser = parse_number, allow_negative_numbers = true)]
    pub c: f64,
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|e| CliError::io(format!("writing {}", path.display()), e))
}

fn emit(path: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match path {
        Some(p) => write_file(p, bytes),
        None => io::stdout()
            .write_all(bytes)
            .map_err(|e| CliError::io("writing stdout", e)),
    }
}

impl AnalysisArgs {
    fn region_config(&self, omega: SupportVector) -> RegionConfig {
        RegionConfig {
            model: self.model.into(),
            omega: omega.as_array(),
            n: self.n,
            grid: self.grid,
            seed: self.seed,
            min_hits: self.min_hits,
            area_threshold: self.area_threshold,
            oracle: self.oracle == Switch::On,
        }
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let workers = cli.workers;
    parallel::with_workers(workers, move || dispatch(cli.command))?
}

fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::Map(args) => cmd_map(&args),
        Command::Region(args) => cmd_region(&args),
        Command::Sweep(args) => cmd_sweep(&args),
        Command::Classify(args) => cmd_classify(&args),
        Command::Condorcet(args) => cmd_condorcet(&args),
    }
}

fn cmd_map(args: &MapArgs) -> Result<(), CliError> {
    let omega = args.support.resolve()?;
    let cfg = MapConfig {
        model: args.model.into(),
        omega: omega.as_array(),
        n: args.n,
        seed: args.seed,
    };
    let points = tables::map_points(cfg.model, &omega, cfg.n, cfg.seed);
    let mut buf = Vec::new();
    tables::write_map(&mut buf, cfg.model, &points)
        .map_err(|e| CliError::io("formatting CSV", e.into()))?;
    emit(args.csv.as_deref(), &buf)?;
    if let Some(path) = &args.svg {
        write_file(path, svg::map_svg(cfg.model, &omega, &points).as_bytes())?;
    }
    Ok(())
}

fn cmd_region(args: &RegionArgs) -> Result<(), CliError> {
    let omega = args.support.resolve()?;
    let cfg = args.analysis.region_config(omega);
    let (doc, outcome) = run_region(&cfg)?;
    emit(args.json.as_deref(), to_json(&doc).as_bytes())?;
    if let Some(path) = &args.svg {
        write_file(path, svg::region_svg(&outcome).as_bytes())?;
    }
    Ok(())
}

fn cmd_sweep(args: &SweepArgs) -> Result<(), CliError> {
    let a = &args.analysis;
    let cfg = SweepConfig {
        model: a.model.into(),
        omega2_from: args.omega2_from,
        omega2_to: args.omega2_to,
        step: args.step,
        n: a.n,
        grid: a.grid,
        seed: a.seed,
        min_hits: a.min_hits,
        area_threshold: a.area_threshold,
        oracle: a.oracle == Switch::On,
    };
    let doc = run_sweep(&cfg)?;
    emit(args.json.as_deref(), to_json(&doc).as_bytes())?;
    if let Some(path) = &args.csv {
        let mut buf = Vec::new();
        tables::write_sweep(&mut buf, &doc.result)
            .map_err(|e| CliError::io("formatting CSV", e.into()))?;
        write_file(path, &buf)?;
    }
    match doc.result.critical_omega2 {
        Some(_) => Ok(()),
        None => Err(CliError::NoVanishing(format!(
            "relevant area stays above {} up to omega2 = {}",
            cfg.area_threshold, cfg.omega2_to
        ))),
    }
}

fn cmd_classify(args: &TripleArgs) -> Result<(), CliError> {
    let strategy = Strategy::new(args.a, args.b, args.c)?;
    let class = classify_strategy(&strategy);
    println!("{class}");
    let line = json!({
        "p": strategy.p(),
        "r": strategy.r(),
        "s": strategy.s(),
        "class": class.label(),
        "classification": class,
        "entropy": strategy_entropy(&strategy),
    });
    println!("{line}");
    Ok(())
}

fn cmd_condorcet(args: &TripleArgs) -> Result<(), CliError> {
    let weights = MixtureWeights::new(args.a, args.b, args.c)?;
    let out = condorcet_mixture(&weights);
    println!(
        "P(A≻B) = {:.4}, P(B≻C) = {:.4}, P(C≻A) = {:.4}: {}",
        out.a_over_b, out.b_over_c, out.c_over_a, out.relation
    );
    let line = json!({
        "a_over_b": out.a_over_b,
        "b_over_c": out.b_over_c,
        "c_over_a": out.c_over_a,
        "relation": out.relation.to_string(),
    });
    println!("{line}");
    Ok(())
}
