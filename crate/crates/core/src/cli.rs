//! Command-line front end.
//!
//! Every subcommand's options serialize to JSON (`--print-config`) and can be
//! replayed with `--config FILE`. Exit codes: 0 success, 1 error, 2 when
//! `validate` finds a rejected test.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::constants::ConstantTable;
use crate::deployment::{Deployer, Deployment, Mode, Point, YIncrement};
use crate::error::{Error, Result};
use crate::io::{self, Format};
use crate::report::{
    render_seed_table, render_traffic_diff, seed_report, traffic_diff, SeedReportConfig,
    TrafficDiffConfig,
};
use crate::stats::{run_suite, SuiteConfig, SuiteData, SuiteOutcome};
use crate::topology::{graph_over, DegreeStats};
use crate::traffic::{Distribution, TrafficGenerator, TrafficMatrix};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_REJECTED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "wsn-datagen",
    version,
    about = "Seed-reproducible WSN dataset generator and validator"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,
    /// Run the command stored in a JSON config (see --print-config).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Print the resolved config as JSON and exit.
    #[arg(long, global = true)]
    pub print_config: bool,
}

#[derive(Debug, Clone, PartialEq, Subcommand, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Generate a node deployment.
    Deploy(DeployArgs),
    /// Generate a per-slot packet matrix.
    Traffic(TrafficArgs),
    /// Radius-graph statistics of a deployment.
    Analyze(AnalyzeArgs),
    /// Run the randomness suite on a dataset.
    Validate(ValidateArgs),
    /// Seed table or packet-table comparison.
    Report(ReportArgs),
}

/// Serializable form of a command line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub command: Command,
}

impl RunConfig {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

fn parse_format(s: &str) -> std::result::Result<Format, String> {
    match s.to_ascii_lowercase().as_str() {
        "csv" => Ok(Format::Csv),
        "json" => Ok(Format::Json),
        _ => Err(format!("expected csv or json, got {s:?}")),
    }
}

fn parse_y_increment(s: &str) -> std::result::Result<YIncrement, String> {
    match s.to_ascii_lowercase().as_str() {
        "a" => Ok(YIncrement::A),
        "c" => Ok(YIncrement::C),
        _ => Err(format!("expected a or c, got {s:?}")),
    }
}

fn parse_report_format(s: &str) -> std::result::Result<ReportFormat, String> {
    match s.to_ascii_lowercase().as_str() {
        "text" => Ok(ReportFormat::Text),
        "json" => Ok(ReportFormat::Json),
        _ => Err(format!("expected text or json, got {s:?}")),
    }
}

fn parse_report_kind(s: &str) -> std::result::Result<ReportKind, String> {
    match s.to_ascii_lowercase().as_str() {
        "table1" | "seeds" => Ok(ReportKind::Table1),
        "table2" | "traffic" => Ok(ReportKind::Table2),
        _ => Err(format!("expected table1 or table2, got {s:?}")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportKind {
    #[default]
    Table1,
    Table2,
}

#[derive(Debug, Clone, PartialEq, Parser, Serialize, Deserialize)]
#[serde(default)]
pub struct DeployArgs {
    #[arg(long, default_value_t = 100)]
    pub nodes: usize,
    /// Side of the square area (its width when --height is given).
    #[arg(long, default_value_t = 100.0)]
    pub area: f64,
    /// Rescale Y to [0, height).
    #[arg(long)]
    pub height: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = Mode::NonGrid)]
    pub mode: Mode,
    /// Increment of the Y recurrence.
    #[arg(long, value_parser = parse_y_increment, default_value = "a")]
    pub y_increment: YIncrement,
    /// Override the multiplier (requires --c).
    #[arg(long, requires = "c")]
    pub a: Option<f64>,
    /// Override the increment (requires --a).
    #[arg(long, requires = "a")]
    pub c: Option<f64>,
    /// JSON array replacing the constant table.
    #[arg(long)]
    pub constants_file: Option<PathBuf>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format; defaults to the --out extension, else csv.
    #[arg(long, value_parser = parse_format)]
    pub format: Option<Format>,
    /// Also write an SVG scatter plot.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Parser, Serialize, Deserialize)]
#[serde(default)]
pub struct TrafficArgs {
    #[arg(long, default_value_t = 80)]
    pub nodes: usize,
    #[arg(long, default_value_t = 5)]
    pub slots: usize,
    #[arg(long, default_value_t = 2.0)]
    pub pmin: f64,
    #[arg(long, default_value_t = 10.0)]
    pub pmax: f64,
    /// Rate of the exp-transform distribution.
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
    #[arg(long, default_value_t = Distribution::Uniform)]
    pub dist: Distribution,
    /// Restart the uniform stream at each node.
    #[arg(long)]
    pub reseed_per_node: bool,
    /// Accept equal multiplier and increment in exp-recurrence.
    #[arg(long)]
    pub allow_equal_constants: bool,
    #[arg(long)]
    pub constants_file: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_parser = parse_format)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, PartialEq, Parser, Serialize, Deserialize)]
#[serde(default)]
pub struct AnalyzeArgs {
    /// Deployment file (json, or csv with --area).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Transmission ranges, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = vec![10.0, 15.0, 20.0])]
    pub tr: Vec<f64>,
    #[arg(long, default_value_t = 0.0)]
    pub epsilon: f64,
    /// Area side for csv input.
    #[arg(long, default_value_t = 100.0)]
    pub area: f64,
    /// Write the edge list for the first range.
    #[arg(long)]
    pub edges_out: Option<PathBuf>,
    #[arg(long, value_parser = parse_report_format, default_value = "text")]
    pub format: ReportFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Parser, Serialize, Deserialize)]
#[serde(default)]
pub struct ValidateArgs {
    /// Deployment or traffic file (json or csv).
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = 0.01)]
    pub alpha_ks: f64,
    #[arg(long, default_value_t = 0.001)]
    pub alpha_chi2: f64,
    #[arg(long, default_value_t = 0.01)]
    pub alpha_auto: f64,
    #[arg(long, default_value_t = 0.001)]
    pub alpha_circular: f64,
    #[arg(long, default_value_t = 10)]
    pub classes: usize,
    /// Autocorrelation lags, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = vec![1usize])]
    pub lags: Vec<usize>,
    /// Additive slack on every critical value.
    #[arg(long, default_value_t = 0.0)]
    pub slack: f64,
    /// Area side for deployment csv input.
    #[arg(long, default_value_t = 100.0)]
    pub area: f64,
    /// Area height for deployment csv input; defaults to --area.
    #[arg(long)]
    pub height: Option<f64>,
    /// Packet bounds for traffic csv input.
    #[arg(long, default_value_t = 2.0)]
    pub pmin: f64,
    #[arg(long, default_value_t = 10.0)]
    pub pmax: f64,
    #[arg(long, value_parser = parse_report_format, default_value = "text")]
    pub format: ReportFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Parser, Serialize, Deserialize)]
#[serde(default)]
pub struct ReportArgs {
    /// table1: per-seed table; table2: packet-table comparison.
    #[arg(long, value_parser = parse_report_kind, default_value = "table1")]
    pub kind: ReportKind,
    /// Seeds, comma separated; the published seed list when absent.
    #[arg(long, value_delimiter = ',')]
    pub seeds: Vec<u64>,
    /// Node count (table1 default 100, table2 default 80).
    #[arg(long)]
    pub nodes: Option<usize>,
    #[arg(long, default_value_t = 100.0)]
    pub area: f64,
    #[arg(long, value_delimiter = ',', default_values_t = vec![10.0, 15.0, 20.0])]
    pub tr: Vec<f64>,
    #[arg(long, default_value_t = 0.0)]
    pub epsilon: f64,
    /// Append agreement with the published rows.
    #[arg(long)]
    pub compare: bool,
    #[arg(long)]
    pub constants_file: Option<PathBuf>,
    #[arg(long, value_parser = parse_report_format, default_value = "text")]
    pub format: ReportFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

macro_rules! default_from_clap {
    ($($t:ty => $name:literal),*) => {$(
        impl Default for $t {
            fn default() -> Self {
                <$t>::try_parse_from([$name]).expect("defaults parse")
            }
        }
    )*};
}

default_from_clap!(
    DeployArgs => "deploy",
    TrafficArgs => "traffic",
    AnalyzeArgs => "analyze",
    ValidateArgs => "validate",
    ReportArgs => "report"
);

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

pub fn resolve(cli: Cli) -> Result<RunConfig> {
    match (cli.command, cli.config) {
        (Some(_), Some(_)) => Err(Error::param(
            "give either a subcommand or --config, not both",
        )),
        (Some(command), None) => Ok(RunConfig { command }),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(&path)?;
            RunConfig::from_json(&text).map_err(|e| Error::parse(Some(&path), e.to_string()))
        }
        (None, None) => Err(Error::param("no subcommand given (try --help)")),
    }
}

pub fn run(cli: Cli) -> Result<i32> {
    let print = cli.print_config;
    let config = resolve(cli)?;
    if print {
        println!("{}", config.to_json());
        return Ok(EXIT_OK);
    }
    execute(&config)
}

pub fn execute(config: &RunConfig) -> Result<i32> {
    match &config.command {
        Command::Deploy(a) => cmd_deploy(a),
        Command::Traffic(a) => cmd_traffic(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Validate(a) => cmd_validate(a),
        Command::Report(a) => cmd_report(a),
    }
}

fn require_input(input: &Option<PathBuf>) -> Result<&Path> {
    input
        .as_deref()
        .ok_or_else(|| Error::param("--input is required"))
}

fn load_table(path: Option<&Path>) -> Result<ConstantTable> {
    match path {
        None => Ok(ConstantTable::canonical()),
        Some(p) => {
            let text = std::fs::read_to_string(p)?;
            ConstantTable::from_json(&text).map_err(|e| Error::parse(Some(p), e.to_string()))
        }
    }
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(p) => io::write_atomic(p, bytes),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// Summary goes to stdout when data goes to a file, else to stderr.
fn summary(out: Option<&Path>, line: &str) {
    if out.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

fn output_format(format: Option<Format>, out: Option<&Path>) -> Format {
    format.unwrap_or_else(|| out.map(Format::from_path).unwrap_or_default())
}

pub fn cmd_deploy(args: &DeployArgs) -> Result<i32> {
    let deployer = Deployer {
        table: load_table(args.constants_file.as_deref())?,
        y_increment: args.y_increment,
        constants: args.a.zip(args.c),
        height: args.height,
    };
    let d = deployer.generate(args.mode, args.nodes, args.area, args.seed)?;
    let out = args.out.as_deref();
    let bytes = match output_format(args.format, out) {
        Format::Csv => io::deployment_csv(&d)?,
        Format::Json => io::deployment_json(&d)?,
    };
    emit(out, &bytes)?;
    if let Some(svg) = &args.svg {
        io::write_atomic(svg, io::deployment_svg(&d).as_bytes())?;
    }
    summary(
        out,
        &format!(
            "seed={} a={} c={} mode={} n={} area={}x{}",
            d.seed,
            d.params.a,
            d.params.c,
            d.mode,
            d.node_count(),
            d.area_width,
            d.area_height
        ),
    );
    Ok(EXIT_OK)
}

pub fn cmd_traffic(args: &TrafficArgs) -> Result<i32> {
    let gen = TrafficGenerator {
        table: load_table(args.constants_file.as_deref())?,
        reseed_per_node: args.reseed_per_node,
        allow_equal_constants: args.allow_equal_constants,
    };
    let m = gen.generate(
        args.dist,
        args.nodes,
        args.slots,
        args.pmin,
        args.pmax,
        args.lambda,
    )?;
    let out = args.out.as_deref();
    let bytes = match output_format(args.format, out) {
        Format::Csv => io::traffic_csv(&m)?,
        Format::Json => io::traffic_json(&m)?,
    };
    emit(out, &bytes)?;
    summary(
        out,
        &format!(
            "dist={} x0={} a={} c={} nodes={} slots={} range=[{}, {})",
            m.distribution,
            m.params.seed,
            m.params.a,
            m.params.c,
            m.node_count(),
            m.slot_count(),
            m.p_min,
            m.p_max
        ),
    );
    Ok(EXIT_OK)
}

/// A dataset read from disk.
#[derive(Debug, Clone)]
pub enum Dataset {
    Deployment {
        points: Vec<Point>,
        width: f64,
        height: f64,
    },
    Traffic {
        values: Vec<Vec<f64>>,
        p_min: f64,
        p_max: f64,
    },
}

impl Dataset {
    pub fn kind(&self) -> &'static str {
        match self {
            Dataset::Deployment { .. } => "deployment",
            Dataset::Traffic { .. } => "traffic",
        }
    }
}

impl From<Deployment> for Dataset {
    fn from(d: Deployment) -> Self {
        Dataset::Deployment {
            points: d.points,
            width: d.area_width,
            height: d.area_height,
        }
    }
}

impl From<TrafficMatrix> for Dataset {
    fn from(m: TrafficMatrix) -> Self {
        Dataset::Traffic {
            values: m.values,
            p_min: m.p_min,
            p_max: m.p_max,
        }
    }
}

/// Reads a deployment or traffic file. CSV inputs carry no metadata, so the
/// area and packet bounds come from the caller.
pub fn read_dataset(path: &Path, area: (f64, f64), bounds: (f64, f64)) -> Result<Dataset> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::parse(Some(path), format!("cannot read: {e}")))?;
    match Format::from_path(path) {
        Format::Json => {
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| Error::parse(Some(path), e.to_string()))?;
            let parsed = if value.get("points").is_some() {
                serde_json::from_value::<io::DeploymentFile>(value)
                    .map_err(Error::from)
                    .and_then(Deployment::try_from)
                    .map(Dataset::from)
            } else if value.get("values").is_some() {
                serde_json::from_value::<io::TrafficFile>(value)
                    .map_err(Error::from)
                    .and_then(TrafficMatrix::try_from)
                    .map(Dataset::from)
            } else {
                Err(Error::param("neither a deployment nor a traffic file"))
            };
            parsed.map_err(|e| Error::parse(Some(path), e.to_string()))
        }
        Format::Csv => {
            let header = text.lines().next().unwrap_or("").trim();
            let parsed = if header == "node_id,x,y" {
                io::parse_points_csv(&text).map(|points| Dataset::Deployment {
                    points,
                    width: area.0,
                    height: area.1,
                })
            } else {
                io::parse_matrix_csv(&text).map(|values| Dataset::Traffic {
                    values,
                    p_min: bounds.0,
                    p_max: bounds.1,
                })
            };
            parsed.map_err(|e| Error::parse(Some(path), e.to_string()))
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RangeSummary {
    pub transmission_range: f64,
    pub epsilon: f64,
    pub isolated: usize,
    pub edges: usize,
    pub components: usize,
    pub connected: bool,
    pub degree: DegreeStats,
}

pub fn cmd_analyze(args: &AnalyzeArgs) -> Result<i32> {
    if args.tr.is_empty() {
        return Err(Error::param("--tr needs at least one range"));
    }
    let points = match read_dataset(
        require_input(&args.input)?,
        (args.area, args.area),
        (0.0, 1.0),
    )? {
        Dataset::Deployment { points, .. } => points,
        Dataset::Traffic { .. } => return Err(Error::param("analyze needs a deployment file")),
    };
    let mut rows = Vec::new();
    for (i, &tr) in args.tr.iter().enumerate() {
        let g = graph_over(&points, tr, args.epsilon)?;
        if i == 0 {
            if let Some(path) = &args.edges_out {
                let bytes = match Format::from_path(path) {
                    Format::Csv => io::edges_csv(&g)?,
                    Format::Json => io::graph_json(&g)?,
                };
                io::write_atomic(path, &bytes)?;
            }
        }
        rows.push(RangeSummary {
            transmission_range: tr,
            epsilon: args.epsilon,
            isolated: g.isolated().count(),
            edges: g.edges.len(),
            components: g.component_count(),
            connected: g.is_connected(),
            degree: g.degree_stats(),
        });
    }
    let text = match args.format {
        ReportFormat::Json => serde_json::to_string_pretty(&rows)? + "\n",
        ReportFormat::Text => {
            let mut s = format!(
                "{:>8} {:>9} {:>7} {:>11} {:>8} {:>9} {:>8}\n",
                "tr", "isolated", "edges", "components", "deg min", "deg mean", "deg max"
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:>8} {:>9} {:>7} {:>11} {:>8} {:>9.3} {:>8}",
                    r.transmission_range,
                    r.isolated,
                    r.edges,
                    r.components,
                    r.degree.min,
                    r.degree.mean,
                    r.degree.max
                );
            }
            s
        }
    };
    emit(args.out.as_deref(), text.as_bytes())?;
    Ok(EXIT_OK)
}

impl ValidateArgs {
    pub fn suite_config(&self) -> SuiteConfig {
        SuiteConfig {
            alpha_ks: self.alpha_ks,
            alpha_chi2: self.alpha_chi2,
            alpha_auto: self.alpha_auto,
            alpha_circular: self.alpha_circular,
            classes: self.classes,
            lags: self.lags.clone(),
            slack: self.slack,
            ..SuiteConfig::default()
        }
    }
}

#[derive(Debug, Clone, Serialize)]
struct ValidationReport<'a> {
    input: Option<&'a Path>,
    kind: &'a str,
    all_satisfied: bool,
    config: &'a SuiteConfig,
    #[serde(flatten)]
    outcome: &'a SuiteOutcome,
}

pub fn validate_dataset(data: &Dataset, config: &SuiteConfig) -> Result<SuiteOutcome> {
    let suite_data = match data {
        Dataset::Deployment {
            points,
            width,
            height,
        } => SuiteData::from_points(points, *width, *height)?,
        Dataset::Traffic {
            values,
            p_min,
            p_max,
        } => SuiteData::from_matrix(values, *p_min, *p_max)?,
    };
    run_suite(&suite_data, config)
}

pub fn render_outcome(outcome: &SuiteOutcome) -> String {
    let mut s = format!(
        "{:<16} {:<10} {:>6} {:>10} {:>10} {:>7} {}\n",
        "test", "scope", "n", "statistic", "critical", "alpha", "verdict"
    );
    for r in &outcome.reports {
        let _ = writeln!(
            s,
            "{:<16} {:<10} {:>6} {:>10.5} {:>10.5} {:>7} {}",
            r.test.as_str(),
            r.scope,
            r.sample_size,
            r.statistic,
            r.critical_value,
            r.alpha,
            r.verdict
        );
    }
    let _ = writeln!(
        s,
        "overall: {}",
        if outcome.all_satisfied() {
            "Satisfied"
        } else {
            "Rejected"
        }
    );
    s
}

pub fn cmd_validate(args: &ValidateArgs) -> Result<i32> {
    let height = args.height.unwrap_or(args.area);
    let data = read_dataset(
        require_input(&args.input)?,
        (args.area, height),
        (args.pmin, args.pmax),
    )?;
    let config = args.suite_config();
    let outcome = validate_dataset(&data, &config)?;
    let text = match args.format {
        ReportFormat::Text => render_outcome(&outcome),
        ReportFormat::Json => {
            let report = ValidationReport {
                input: args.input.as_deref(),
                kind: data.kind(),
                all_satisfied: outcome.all_satisfied(),
                config: &config,
                outcome: &outcome,
            };
            serde_json::to_string_pretty(&report)? + "\n"
        }
    };
    emit(args.out.as_deref(), text.as_bytes())?;
    Ok(if outcome.all_satisfied() {
        EXIT_OK
    } else {
        EXIT_REJECTED
    })
}

pub fn cmd_report(args: &ReportArgs) -> Result<i32> {
    let table = load_table(args.constants_file.as_deref())?;
    let text = match args.kind {
        ReportKind::Table1 => {
            let mut cfg = SeedReportConfig {
                area: args.area,
                ranges: args.tr.clone(),
                epsilon: args.epsilon,
                ..SeedReportConfig::default()
            };
            if !args.seeds.is_empty() {
                cfg.seeds = args.seeds.clone();
            }
            if let Some(n) = args.nodes {
                cfg.nodes = n;
            }
            let deployer = Deployer {
                table,
                ..Deployer::default()
            };
            let rows = seed_report(&cfg, &deployer)?;
            match args.format {
                ReportFormat::Text => render_seed_table(&rows, &cfg.ranges, args.compare),
                ReportFormat::Json => {
                    let agreement: Vec<_> = rows.iter().map(|r| r.agreement(&cfg.ranges)).collect();
                    let v = serde_json::json!({
                        "config": cfg,
                        "rows": rows,
                        "agreement": if args.compare { Some(agreement) } else { None },
                    });
                    serde_json::to_string_pretty(&v)? + "\n"
                }
            }
        }
        ReportKind::Table2 => {
            let mut cfg = TrafficDiffConfig::default();
            if let Some(n) = args.nodes {
                cfg.nodes = n;
            }
            let diff = traffic_diff(&cfg, &table)?;
            match args.format {
                ReportFormat::Text => render_traffic_diff(&diff),
                ReportFormat::Json => serde_json::to_string_pretty(&diff)? + "\n",
            }
        }
    };
    emit(args.out.as_deref(), text.as_bytes())?;
    Ok(EXIT_OK)
}
