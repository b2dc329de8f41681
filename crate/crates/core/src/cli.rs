//! The `pvg` command line: `generate`, `build`, `metrics`, `sweep`.
//!
//! Exit codes: 0 success, 2 configuration or usage error, 3 input parse
//! error, 4 computation error, 5 I/O error.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::error::{PvgError, Result};
use crate::experiment::{export, ExperimentConfig, Manifest};
use crate::graph::{build_pvg, Adjacency, PvgParams};
use crate::metrics::{compute_all, connected_components, BaselineConfig};
use crate::series::{generate_am, io, normalize, AmSignalParams};

pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_COMPUTE: i32 = 4;
pub const EXIT_IO: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "pvg", version, about = "Probabilistic visibility graphs for time series")]
pub struct Cli {
    /// Worker threads (defaults to all cores). Results do not depend on it.
    #[arg(long, global = true, env = "PVG_THREADS")]
    pub threads: Option<usize>,

    /// Log progress to stderr (-v info, -vv debug).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write an amplitude-modulated test signal as `index,time,value` CSV.
    Generate(GenerateArgs),
    /// Build the PVG of a series and export its matrices and edge list.
    Build(BuildArgs),
    /// Compute network metrics of an edge list or of a series' PVG.
    Metrics(MetricsArgs),
    /// Run a parameter sweep described by a TOML/JSON config or manifest.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct GenerateArgs {
    #[arg(long)]
    pub output: PathBuf,
    /// TOML/JSON file with AM signal parameters; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub amplitude: Option<f64>,
    #[arg(long)]
    pub carrier_hz: Option<f64>,
    #[arg(long)]
    pub modulation_hz: Option<f64>,
    #[arg(long)]
    pub depth: Option<f64>,
    #[arg(long)]
    pub noise_std: Option<f64>,
    #[arg(long)]
    pub duration: Option<f64>,
    #[arg(long)]
    pub dt: Option<f64>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct BuildArgs {
    /// Series CSV (`value`, `time,value` or `index,time,value`).
    #[arg(long)]
    pub input: PathBuf,
    /// Output directory.
    #[arg(long)]
    pub output: PathBuf,
    #[arg(long, default_value_t = 1.0)]
    pub rho: f64,
    #[arg(long, default_value_t = 0.5)]
    pub p0: f64,
    /// Sample interval for single-column input.
    #[arg(long, default_value_t = 1.0)]
    pub dt: f64,
    /// Also write dense CSV copies of the matrices.
    #[arg(long)]
    pub dense_csv: bool,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct MetricsArgs {
    /// Edge list CSV `i,j`.
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    pub graph: Option<PathBuf>,
    /// Node count for `--graph` (default: largest index + 1).
    #[arg(long, requires = "graph")]
    pub nodes: Option<usize>,
    /// Series CSV; its PVG at `--rho`/`--p0` is measured.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = 1.0)]
    pub rho: f64,
    #[arg(long, default_value_t = 0.5)]
    pub p0: f64,
    #[arg(long, default_value_t = 1.0)]
    pub dt: f64,
    /// Output JSON file.
    #[arg(long)]
    pub output: PathBuf,
    /// Seed of the random baseline.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random graphs per baseline; 0 skips small-worldness.
    #[arg(long, default_value_t = 20)]
    pub realizations: usize,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub config: PathBuf,
    /// Output directory.
    #[arg(long)]
    pub output: PathBuf,
    /// Overrides every seed in the config.
    #[arg(long)]
    pub seed: Option<u64>,
}

pub fn exit_code(err: &PvgError) -> i32 {
    match err {
        PvgError::InvalidParams(_)
        | PvgError::Config(_)
        | PvgError::TooShort { .. }
        | PvgError::RateMismatch { .. } => EXIT_CONFIG,
        PvgError::Parse { .. } | PvgError::InvalidSeries(_) | PvgError::Csv(_) | PvgError::Json(_) => EXIT_PARSE,
        PvgError::Disconnected { .. }
        | PvgError::DegenerateBaseline
        | PvgError::InsufficientSupport { .. }
        | PvgError::IndexOutOfRange { .. } => EXIT_COMPUTE,
        PvgError::Io(_) => EXIT_IO,
    }
}

fn write_json_file<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

fn ensure_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    Ok(())
}

fn cmd_generate(args: &GenerateArgs) -> Result<()> {
    let mut params = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            if path.extension().is_some_and(|e| e == "json") {
                serde_json::from_str(&text)?
            } else {
                toml::from_str(&text).map_err(|e| PvgError::Config(e.to_string()))?
            }
        }
        None => AmSignalParams::default(),
    };
    let overrides = [
        (args.amplitude, &mut params.carrier_amplitude),
        (args.carrier_hz, &mut params.carrier_hz),
        (args.modulation_hz, &mut params.modulation_hz),
        (args.depth, &mut params.modulation_depth),
        (args.noise_std, &mut params.noise_std),
        (args.duration, &mut params.duration_s),
        (args.dt, &mut params.dt),
    ];
    for (value, slot) in overrides {
        if let Some(v) = value {
            *slot = v;
        }
    }
    if let Some(seed) = args.seed {
        params.rng_seed = seed;
    }
    let series = generate_am(&params)?;
    io::save_series(&series, &args.output)?;
    println!("N = {}", series.len());
    println!("RMS = {}", series.rms());
    Ok(())
}

#[derive(Debug, Serialize)]
struct BuildReport {
    n: usize,
    n_edges: usize,
    rho: f64,
    p0: f64,
    dt: f64,
    constant_input: bool,
    outputs: Vec<String>,
}

#[derive(Debug, Serialize)]
struct BuildManifest {
    tool: String,
    version: String,
    command: &'static str,
    input: PathBuf,
    dt: f64,
    params: PvgParams,
    dense_csv: bool,
}

fn cmd_build(args: &BuildArgs) -> Result<()> {
    let params = PvgParams::new(args.rho, args.p0)?;
    let series = io::load_series(&args.input, args.dt)?;
    ensure_dir(&args.output)?;

    let started = Instant::now();
    let norm = normalize(&series);
    let pvg = build_pvg(&norm, params)?;
    let elapsed = started.elapsed();

    let mut outputs = vec!["prob.bin", "strength.bin", "weighted.bin", "edges.csv"];
    pvg.prob.save_binary(&args.output.join("prob.bin"))?;
    pvg.strength.save_binary(&args.output.join("strength.bin"))?;
    pvg.weighted.save_binary(&args.output.join("weighted.bin"))?;
    pvg.adjacency.save_edge_list(&args.output.join("edges.csv"))?;
    if args.dense_csv {
        for (name, m) in [("prob.csv", &pvg.prob), ("strength.csv", &pvg.strength), ("weighted.csv", &pvg.weighted)] {
            let mut out = std::io::BufWriter::new(std::fs::File::create(args.output.join(name))?);
            m.write_csv(&mut out)?;
            std::io::Write::flush(&mut out)?;
            outputs.push(name);
        }
    }
    outputs.extend(["report.json", "manifest.json"]);

    let report = BuildReport {
        n: pvg.n(),
        n_edges: pvg.adjacency.edge_count(),
        rho: params.rho,
        p0: params.p0,
        dt: series.dt(),
        constant_input: norm.is_constant(),
        outputs: outputs.iter().map(|s| (*s).to_owned()).collect(),
    };
    write_json_file(&args.output.join("report.json"), &report)?;
    let manifest = BuildManifest {
        tool: env!("CARGO_PKG_NAME").to_owned(),
        version: env!("CARGO_PKG_VERSION").to_owned(),
        command: "build",
        input: std::path::absolute(&args.input)?,
        dt: args.dt,
        params,
        dense_csv: args.dense_csv,
    };
    write_json_file(&args.output.join("manifest.json"), &manifest)?;
    println!("N = {}, edges = {}, build time = {:.3} s", report.n, report.n_edges, elapsed.as_secs_f64());
    Ok(())
}

fn cmd_metrics(args: &MetricsArgs) -> Result<()> {
    let adj = match (&args.graph, &args.input) {
        (Some(path), _) => Adjacency::load_edge_list(path, args.nodes)?,
        (None, Some(path)) => {
            let params = PvgParams::new(args.rho, args.p0)?;
            let series = io::load_series(path, args.dt)?;
            crate::graph::ObstructionHeights::compute(&normalize(&series)).adjacency(&params)
        }
        (None, None) => return Err(PvgError::Config("one of --graph or --input is required".into())),
    };
    let (_, components) = connected_components(&adj);
    if components > 1 {
        return Err(PvgError::Disconnected { components });
    }
    let baseline = BaselineConfig { n_realizations: args.realizations, rng_seed: args.seed };
    let metrics = compute_all(&adj, (args.realizations > 0).then_some(&baseline));
    write_json_file(&args.output, &metrics)
}

fn cmd_sweep(args: &SweepArgs) -> Result<()> {
    let mut cfg = ExperimentConfig::load(&args.config)?;
    if let Some(seed) = args.seed {
        cfg.set_seed(seed);
    }
    let cfg = cfg.resolved();
    cfg.validate()?;
    ensure_dir(&args.output)?;

    let result = cfg.run()?;
    let files = ["cells.csv", "aggregates.csv", "result.json", "manifest.json"];
    let create = |name: &str| -> Result<std::io::BufWriter<std::fs::File>> {
        Ok(std::io::BufWriter::new(std::fs::File::create(args.output.join(name))?))
    };
    export::write_cells_csv(&result, create(files[0])?)?;
    export::write_aggregates_csv(&result, create(files[1])?)?;
    let mut json = create(files[2])?;
    export::write_json(&result, &mut json)?;
    std::io::Write::flush(&mut json)?;
    write_json_file(&args.output.join(files[3]), &Manifest::new(cfg, &files))?;

    let failed = result.cells.iter().filter(|c| c.error.is_some()).count();
    println!("{} cells, {} failed", result.cells.len(), failed);
    if failed == result.cells.len() {
        return Err(PvgError::InvalidParams("every cell of the sweep failed".into()));
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<()> {
    let work = || match &cli.command {
        Command::Generate(a) => cmd_generate(a),
        Command::Build(a) => cmd_build(a),
        Command::Metrics(a) => cmd_metrics(a),
        Command::Sweep(a) => cmd_sweep(a),
    };
    match cli.threads {
        Some(0) => Err(PvgError::Config("--threads must be >= 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| PvgError::Config(e.to_string()))?
            .install(work),
        None => work(),
    }
}

fn report(err: &PvgError) {
    let detail = match err {
        PvgError::Disconnected { components } => {
            serde_json::json!({ "error": "disconnected", "components": components, "message": err.to_string() })
        }
        _ => serde_json::json!({ "error": "failed", "message": err.to_string() }),
    };
    eprintln!("{detail}");
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { 0 };
        }
    };
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    let _ = env_logger::Builder::new().filter_level(level).try_init();
    match run(&cli) {
        Ok(()) => 0,
        Err(e) => {
            report(&e);
            exit_code(&e)
        }
    }
}

pub fn main() -> i32 {
    run_from(std::env::args_os())
}
