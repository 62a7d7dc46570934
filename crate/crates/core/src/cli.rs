//! Command-line front end: `generate`, `analyze`, `compare` and `sweep`.
//!
//! Exit codes: 0 success, 1 usage or configuration error, 2 I/O or input
//! data error, 3 comparison failure.

use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::generators::{generate, parse_kv, GrowthConfig, Model};
use crate::graph::Graph;
use crate::io::{
    read_edge_list, read_reports, write_edge_list, write_report, write_series, ReadMode,
    ReportFormat,
};
use crate::metrics::{analyze, Analysis, Exec, FitWindow, MetricsReport};
use crate::reference::{average, compare, Reference};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_COMPARE_FAILED: i32 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn io(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_IO,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_)
            | Error::Parse { .. }
            | Error::Disconnected(..)
            | Error::IsolatedNode(_) => EXIT_IO,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "astopo",
    version,
    about = "Grow and analyze Internet-like AS-level topologies"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Grow networks and write their edge lists.
    Generate {
        #[command(flatten)]
        growth: GrowthArgs,
        #[arg(long, default_value_t = 1)]
        runs: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compute the metrics report and plot series of edge lists.
    Analyze {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        fit: FitArgs,
        /// Skip duplicate edges and self-loops instead of failing.
        #[arg(long)]
        lenient: bool,
    },
    /// Average reports and check them against a reference column.
    Compare {
        /// Report files, or directories holding `*.report.json` files.
        #[arg(required = true)]
        reports: Vec<PathBuf>,
        /// `as`, `pfp`, `ig`, `ba`, or the path of a report file.
        #[arg(long, default_value = "pfp")]
        reference: String,
        /// `key = band` lines overriding the reference's default bands.
        #[arg(long)]
        tolerances: Option<PathBuf>,
    },
    /// Generate and analyze every point of a parameter grid.
    Sweep {
        /// `name=v1,v2,...` with name one of delta, alpha, p, q, m. Repeatable.
        #[arg(long = "grid")]
        grid: Vec<String>,
        #[command(flatten)]
        growth: GrowthArgs,
        #[arg(long, default_value_t = 1)]
        runs: usize,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        fit: FitArgs,
    },
}

#[derive(Debug, Clone, Default, Args)]
pub struct GrowthArgs {
    /// `key = value` config file; its keys override the flags.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_parser = ["ba", "ig", "test", "pfp"])]
    pub model: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long)]
    pub q: Option<f64>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub delta: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub seed_nodes: Option<usize>,
    #[arg(long)]
    pub seed_extra_edges: Option<usize>,
}

#[derive(Debug, Clone, Copy, Default, Args)]
pub struct FitArgs {
    #[arg(long)]
    pub fit_kmin: Option<usize>,
    #[arg(long)]
    pub fit_kupper: Option<usize>,
}

impl FitArgs {
    fn window(&self, g: &Graph) -> FitWindow {
        let d = FitWindow::default_for(g);
        FitWindow {
            k_min: self.fit_kmin.unwrap_or(d.k_min),
            k_upper: self.fit_kupper.unwrap_or(d.k_upper),
        }
    }
}

/// Reads a config source: a `key = value` file or a run manifest.
fn read_config_pairs(path: &Path) -> CliResult<Vec<(String, String)>> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::io(format!("cannot read {}: {e}", path.display())))?;
    if text.trim_start().starts_with('{') {
        let manifest: RunManifest = serde_json::from_str(&text)
            .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
        let cfg = manifest.config.ok_or_else(|| {
            CliError::usage(format!("{} records no growth config", path.display()))
        })?;
        Ok(parse_kv(&cfg.to_kv_string())?)
    } else {
        Ok(parse_kv(&text)?)
    }
}

impl GrowthArgs {
    /// Defaults, then flags, then config-file keys.
    pub fn resolve(&self) -> CliResult<GrowthConfig> {
        let file_pairs = match &self.config {
            Some(path) => read_config_pairs(path)?,
            None => Vec::new(),
        };
        let model: Model = match file_pairs.iter().find(|(k, _)| k == "model") {
            Some((_, v)) => v.parse()?,
            None => match &self.model {
                Some(m) => m.parse()?,
                None => Model::Pfp,
            },
        };
        let mut cfg = GrowthConfig::defaults(model);
        if let Some(v) = self.n {
            cfg.target_n = v;
        }
        if let Some(v) = self.m {
            cfg.m = v;
        }
        if let Some(v) = self.p {
            cfg.p = v;
        }
        if let Some(v) = self.q {
            cfg.q = v;
        }
        if let Some(v) = self.alpha {
            cfg.alpha = v;
        }
        if let Some(v) = self.delta {
            cfg.delta = v;
        }
        if let Some(v) = self.seed {
            cfg.rng_seed = v;
        }
        if let Some(v) = self.seed_nodes {
            cfg.seed_nodes = v;
        }
        if let Some(v) = self.seed_extra_edges {
            cfg.seed_extra_edges = v;
        }
        cfg.apply_kv(&file_pairs)?;
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Written next to every output; enough to reproduce it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub config: Option<GrowthConfig>,
    pub config_hash: Option<String>,
    pub inputs: Vec<String>,
    pub outputs: Vec<String>,
    pub fit: Option<FitWindow>,
    pub skipped_links: Option<usize>,
    pub version: String,
    pub duration_secs: f64,
}

impl RunManifest {
    fn new(command: &str) -> Self {
        RunManifest {
            command: command.to_string(),
            config: None,
            config_hash: None,
            inputs: Vec::new(),
            outputs: Vec::new(),
            fit: None,
            skipped_links: None,
            version: env!("CARGO_PKG_VERSION").to_string(),
            duration_secs: 0.0,
        }
    }

    fn write(&self, path: &Path) -> CliResult<()> {
        let file = create(path)?;
        serde_json::to_writer_pretty(file, self).map_err(|e| CliError::io(e.to_string()))
    }
}

fn create(path: &Path) -> CliResult<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display())))
}

fn ensure_dir(dir: &Path) -> CliResult<()> {
    fs::create_dir_all(dir)
        .map_err(|e| CliError::io(format!("cannot create {}: {e}", dir.display())))
}

/// Edge-list file name for a generated graph.
pub fn edge_list_name(cfg: &GrowthConfig) -> String {
    format!("{}_n{}_s{}.edges", cfg.model, cfg.target_n, cfg.rng_seed)
}

fn run_configs(base: &GrowthConfig, runs: usize) -> Vec<GrowthConfig> {
    (0..runs as u64)
        .map(|i| base.clone().with_seed(base.rng_seed.wrapping_add(i)))
        .collect()
}

/// Generates `runs` graphs with seeds `rng_seed, rng_seed + 1, ...` into
/// `out`, returning the edge-list paths.
pub fn cmd_generate(base: &GrowthConfig, runs: usize, out: &Path) -> CliResult<Vec<PathBuf>> {
    if runs == 0 {
        return Err(CliError::usage("--runs must be at least 1"));
    }
    base.validate()?;
    ensure_dir(out)?;
    run_configs(base, runs)
        .par_iter()
        .map(|cfg| {
            let start = Instant::now();
            let grown = generate(cfg)?;
            let path = out.join(edge_list_name(cfg));
            let mut w = create(&path)?;
            write_edge_list(&grown.graph, Some(&cfg.hash()), &mut w)?;
            w.flush().map_err(|e| CliError::io(e.to_string()))?;
            let mut manifest = RunManifest::new("generate");
            manifest.config = Some(cfg.clone());
            manifest.config_hash = Some(cfg.hash());
            manifest.outputs = vec![path.display().to_string()];
            manifest.skipped_links = Some(grown.skipped_links);
            manifest.duration_secs = start.elapsed().as_secs_f64();
            manifest.write(&path.with_extension("manifest.json"))?;
            Ok(path)
        })
        .collect()
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("graph")
        .to_string()
}

/// Writes `<stem>.report.json` and one `<stem>.<suffix>.dat` per series,
/// recording them in `manifest`. Returns the report path.
pub fn write_analysis(
    analysis: &Analysis,
    name: &str,
    out: &Path,
    manifest: &mut RunManifest,
) -> CliResult<PathBuf> {
    let report_path = out.join(format!("{name}.report.json"));
    write_report(&analysis.report, ReportFormat::Json, create(&report_path)?)?;
    manifest.outputs.push(report_path.display().to_string());
    for (suffix, series) in &analysis.series {
        let p = out.join(format!("{name}.{suffix}.dat"));
        write_series(series, create(&p)?)?;
        manifest.outputs.push(p.display().to_string());
    }
    manifest.fit = Some(analysis.fit);
    Ok(report_path)
}

pub fn cmd_analyze(
    inputs: &[PathBuf],
    out: &Path,
    fit: FitArgs,
    mode: ReadMode,
) -> CliResult<Vec<PathBuf>> {
    ensure_dir(out)?;
    let mut written = Vec::new();
    for input in inputs {
        let start = Instant::now();
        let file = File::open(input)
            .map_err(|e| CliError::io(format!("cannot read {}: {e}", input.display())))?;
        let (g, _) = read_edge_list(BufReader::new(file), mode)
            .map_err(|e| CliError::io(format!("{}: {e}", input.display())))?;
        let analysis = analyze(&g, Some(fit.window(&g)), Exec::Parallel)
            .map_err(|e| CliError::io(format!("{}: {e}", input.display())))?;
        let mut manifest = RunManifest::new("analyze");
        manifest.inputs = vec![input.display().to_string()];
        let path = write_analysis(&analysis, &stem(input), out, &mut manifest)?;
        manifest.duration_secs = start.elapsed().as_secs_f64();
        manifest.write(&out.join(format!("{}.analyze.json", stem(input))))?;
        written.push(path);
    }
    Ok(written)
}

fn is_report_file(p: &Path) -> bool {
    let name = p.file_name().and_then(|n| n.to_str()).unwrap_or("");
    name.ends_with(".report.json") || name.ends_with(".report.csv")
}

/// Loads reports from files and directories (non-recursive).
pub fn load_reports(paths: &[PathBuf]) -> CliResult<Vec<MetricsReport>> {
    let mut files = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut found: Vec<PathBuf> = fs::read_dir(p)
                .map_err(|e| CliError::io(format!("cannot list {}: {e}", p.display())))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| is_report_file(p))
                .collect();
            found.sort();
            files.extend(found);
        } else {
            files.push(p.clone());
        }
    }
    let mut reports = Vec::new();
    for f in files {
        let format = ReportFormat::from_path(&f)?;
        let file = File::open(&f)
            .map_err(|e| CliError::io(format!("cannot read {}: {e}", f.display())))?;
        reports.extend(
            read_reports(BufReader::new(file), format)
                .map_err(|e| CliError::io(format!("{}: {e}", f.display())))?,
        );
    }
    if reports.is_empty() {
        return Err(CliError::usage("no reports found"));
    }
    Ok(reports)
}

/// Resolves a built-in reference name or a report file path.
pub fn load_reference(name: &str, tolerances: Option<&Path>) -> CliResult<Reference> {
    let mut reference = match Reference::builtin(name) {
        Some(r) => r,
        None => {
            let path = Path::new(name);
            if !path.is_file() {
                return Err(CliError::usage(format!(
                    "unknown reference `{name}` (expected as, pfp, ig, ba or a report file)"
                )));
            }
            let reports = load_reports(&[path.to_path_buf()])?;
            Reference::from_report(name, &reports[0])
        }
    };
    if let Some(t) = tolerances {
        let text = fs::read_to_string(t)
            .map_err(|e| CliError::io(format!("cannot read {}: {e}", t.display())))?;
        reference.apply_tolerances(&text)?;
    }
    Ok(reference)
}

/// Prints the comparison table and returns the exit code.
pub fn cmd_compare(
    reports: &[PathBuf],
    reference: &str,
    tolerances: Option<&Path>,
) -> CliResult<i32> {
    let reference = load_reference(reference, tolerances)?;
    let reports = load_reports(reports)?;
    let cmp = compare(&reports, &reference)?;
    println!("{cmp}");
    Ok(if cmp.passed() {
        EXIT_OK
    } else {
        EXIT_COMPARE_FAILED
    })
}

const SWEEP_KEYS: [&str; 5] = ["delta", "alpha", "p", "q", "m"];

/// Parses repeated `name=v1,v2` axes into the grid's points.
pub fn parse_grid(axes: &[String]) -> CliResult<Vec<Vec<(String, String)>>> {
    if axes.is_empty() {
        return Err(CliError::usage(
            "empty grid: give at least one --grid name=values",
        ));
    }
    let mut points: Vec<Vec<(String, String)>> = vec![Vec::new()];
    for axis in axes {
        let (name, values) = axis
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("bad grid axis `{axis}`")))?;
        let name = name.trim();
        if !SWEEP_KEYS.contains(&name) {
            return Err(CliError::usage(format!(
                "cannot sweep `{name}`; expected one of {SWEEP_KEYS:?}"
            )));
        }
        let values: Vec<&str> = values
            .split(',')
            .map(str::trim)
            .filter(|v| !v.is_empty())
            .collect();
        if values.is_empty() {
            return Err(CliError::usage(format!("grid axis `{name}` has no values")));
        }
        points = points
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |v| {
                    let mut q = p.clone();
                    q.push((name.to_string(), v.to_string()));
                    q
                })
            })
            .collect();
    }
    Ok(points)
}

/// Runs generate + analyze for every grid point and writes `summary.csv`
/// with one row of averaged metrics per point.
pub fn cmd_sweep(
    base: &GrowthConfig,
    axes: &[String],
    runs: usize,
    out: &Path,
    fit: FitArgs,
) -> CliResult<PathBuf> {
    let points = parse_grid(axes)?;
    if runs == 0 {
        return Err(CliError::usage("--runs must be at least 1"));
    }
    ensure_dir(out)?;
    let mut rows = Vec::new();
    for (i, point) in points.iter().enumerate() {
        let mut cfg = base.clone();
        cfg.apply_kv(point)?;
        cfg.validate()?;
        let dir = out.join(format!("point_{i:03}"));
        let edge_files = cmd_generate(&cfg, runs, &dir)?;
        let reports = cmd_analyze(&edge_files, &dir, fit, ReadMode::Strict)?;
        let reports = load_reports(&reports)?;
        rows.push((cfg, average(&reports)));
    }
    let path = out.join("summary.csv");
    let mut w = csv::Writer::from_writer(create(&path)?);
    let mut header: Vec<String> = ["model", "runs"].iter().map(|s| s.to_string()).collect();
    header.extend(SWEEP_KEYS.iter().map(|s| s.to_string()));
    header.extend(MetricsReport::KEYS.iter().map(|s| s.to_string()));
    w.write_record(&header)
        .map_err(|e| CliError::io(e.to_string()))?;
    for (cfg, avg) in rows {
        let mut rec = vec![
            cfg.model.to_string(),
            runs.to_string(),
            cfg.delta.to_string(),
            cfg.alpha.to_string(),
            cfg.p.to_string(),
            cfg.q.to_string(),
            cfg.m.to_string(),
        ];
        rec.extend(
            avg.iter()
                .map(|(_, v)| v.map_or_else(String::new, |x| x.to_string())),
        );
        w.write_record(&rec)
            .map_err(|e| CliError::io(e.to_string()))?;
    }
    w.flush().map_err(|e| CliError::io(e.to_string()))?;
    Ok(path)
}

/// Executes a parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Generate { growth, runs, out } => growth
            .resolve()
            .and_then(|cfg| cmd_generate(&cfg, runs, &out))
            .map(|paths| {
                for p in paths {
                    println!("{}", p.display());
                }
                EXIT_OK
            }),
        Command::Analyze {
            inputs,
            out,
            fit,
            lenient,
        } => {
            let mode = if lenient {
                ReadMode::Lenient
            } else {
                ReadMode::Strict
            };
            cmd_analyze(&inputs, &out, fit, mode).map(|paths| {
                for p in paths {
                    println!("{}", p.display());
                }
                EXIT_OK
            })
        }
        Command::Compare {
            reports,
            reference,
            tolerances,
        } => cmd_compare(&reports, &reference, tolerances.as_deref()),
        Command::Sweep {
            grid,
            growth,
            runs,
            out,
            fit,
        } => growth
            .resolve()
            .and_then(|cfg| cmd_sweep(&cfg, &grid, runs, &out, fit))
            .map(|p| {
                println!("{}", p.display());
                EXIT_OK
            }),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

/// Parses `args` (program name first) and runs. Argument errors exit 1.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            }
        }
    }
}
