//! Command-line frontend: structural info, indicator tables, grid
//! verification, and themed scans, rendered as JSON, CSV, or text.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use fsind::groups::GroupSpec;
use fsind::scan::{
    cmd_indicators, cmd_info, cmd_scan, cmd_verify, info_text, Grid, Report, ScanError, ScanKind,
};

#[derive(Parser)]
#[command(
    name = "fsind",
    version,
    about = "Exact higher Frobenius-Schur indicators for metacyclic and generalized \
             quaternion groups and their Drinfel'd doubles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the structural summary of one group
    Info {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Tabulate indicators for one group or for its Drinfel'd double
    Indicators {
        #[command(flatten)]
        spec: SpecArgs,
        /// Tabulate the irreducible modules of the double instead
        #[arg(long)]
        double: bool,
        /// Largest power to tabulate; defaults to twice the exponent
        #[arg(long)]
        m_max: Option<u64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Cross-validate every closed form against brute force over a grid
    Verify {
        #[command(flatten)]
        grid: GridArgs,
        /// Check powers up to this multiple of each exponent
        #[arg(long, default_value_t = 2)]
        m_factor: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run one themed scan over a grid
    Scan {
        /// Which scan to run
        #[arg(value_enum)]
        kind: ScanKind,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct SpecArgs {
    /// Order of the normal cyclic factor Z_k
    #[arg(long)]
    k: Option<u64>,
    /// Prime order of the twist action
    #[arg(long)]
    q: Option<u64>,
    /// Twist exponent: conjugation sends a to a^n
    #[arg(long)]
    n: Option<u64>,
    /// Stretch of the acting factor, so b has order ql
    #[arg(long, default_value_t = 1)]
    l: u64,
    /// Generalized quaternion group Q_{4n} instead of a metacyclic group
    #[arg(long, conflicts_with_all = ["k", "q", "n", "l"])]
    quaternion: Option<u64>,
}

impl SpecArgs {
    fn to_spec(&self) -> Result<GroupSpec> {
        if let Some(n) = self.quaternion {
            return Ok(GroupSpec::quaternion(n));
        }
        match (self.k, self.q, self.n) {
            (Some(k), Some(q), Some(n)) => Ok(GroupSpec::metacyclic(k, q, n, self.l)),
            _ => bail!("specify either --quaternion N or all of --k, --q, --n"),
        }
    }
}

#[derive(Args)]
struct GridArgs {
    /// Largest k in the metacyclic sweep
    #[arg(long, default_value_t = 200)]
    k_max: u64,
    /// Primes to use for q, comma separated
    #[arg(long, value_delimiter = ',', default_value = "2,3,5,7")]
    q_set: Vec<u64>,
    /// Largest l in the metacyclic sweep
    #[arg(long, default_value_t = 4)]
    l_max: u64,
    /// Largest n in the quaternion sweep
    #[arg(long, default_value_t = 12)]
    quat_max: u64,
}

impl GridArgs {
    fn to_grid(&self) -> Result<Grid> {
        Ok(Grid::new(self.k_max, &self.q_set, self.l_max, self.quat_max)?)
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Output format; info defaults to text, everything else to json
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the report to this path instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for grid sweeps
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Info { spec, output } => {
            let spec = spec.to_spec()?;
            let report = cmd_info(&spec)?;
            emit(&report, &output, true)
        }
        Command::Indicators { spec, double, m_max, output } => {
            let spec = spec.to_spec()?;
            let report = with_jobs(output.jobs, || cmd_indicators(&spec, double, m_max))?;
            emit(&report, &output, false)
        }
        Command::Verify { grid, m_factor, output } => {
            let grid = grid.to_grid()?;
            let report = with_jobs(output.jobs, || cmd_verify(&grid, m_factor))?;
            emit(&report, &output, false)
        }
        Command::Scan { kind, grid, output } => {
            let grid = grid.to_grid()?;
            let report = with_jobs(output.jobs, || cmd_scan(kind, &grid))?;
            emit(&report, &output, false)
        }
    }
}

fn with_jobs<T: Send>(
    jobs: usize,
    task: impl FnOnce() -> Result<T, ScanError> + Send,
) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .context("building the worker pool")?;
    Ok(pool.install(task)?)
}

fn emit(report: &Report, output: &OutputArgs, is_info: bool) -> Result<ExitCode> {
    let format = output
        .format
        .unwrap_or(if is_info { Format::Text } else { Format::Json });
    let body = match format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
        Format::Text => {
            if !is_info {
                bail!("--format text is only available for the info command");
            }
            info_text(report)
        }
    };
    match &output.out {
        Some(path) => {
            fs::write(path, &body).with_context(|| format!("writing {}", path.display()))?;
            eprintln!(
                "{}: {} rows, {} passed, {} failed, {} skipped -> {}",
                report.meta.command,
                report.summary.rows,
                report.summary.passed,
                report.summary.failed,
                report.summary.skipped,
                path.display()
            );
        }
        None => print!("{body}"),
    }
    Ok(ExitCode::from(report.exit_code() as u8))
}
