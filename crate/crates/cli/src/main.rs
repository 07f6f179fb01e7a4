//! `zwdpp`: scriptable experiments on z-measures, their kernels and gap
//! probabilities. Every subcommand writes a JSON (or CSV) report and exits
//! with 0 iff all of its checks pass.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use zwdpp::ZWParams64;

/// Directory used for relative `--out` paths.
pub const OUT_DIR_ENV: &str = "ZWDPP_OUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "zwdpp", version, about = "z-measures, determinantal kernels and gap probabilities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate the z-measure on a window with normalization diagnostics.
    MeasureTable(commands::MeasureTableArgs),
    /// Brute-force correlation functions next to kernel determinants.
    Correlations(commands::CorrelationsArgs),
    /// Check the particles/holes involution on random signatures.
    Involution(commands::InvolutionArgs),
    /// Evaluate a kernel on a grid of points.
    Kernel(commands::KernelArgs),
    /// Gap probability curve, σ and the Painlevé VI residual.
    Gap(commands::GapArgs),
    /// Compare sampled α⁺₁ with the Fredholm CDF over a list of N.
    Converge(commands::ConvergeArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

/// Flags shared by every subcommand.
#[derive(Args, Debug, Clone, serde::Serialize)]
pub struct Common {
    #[arg(long, default_value_t = 0.3, allow_negative_numbers = true)]
    pub z_re: f64,
    #[arg(long, default_value_t = 0.4, allow_negative_numbers = true)]
    pub z_im: f64,
    #[arg(long, default_value_t = 0.3, allow_negative_numbers = true)]
    pub w_re: f64,
    #[arg(long, default_value_t = -0.4, allow_negative_numbers = true)]
    pub w_im: f64,
    /// Number of rows N.
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma-separated list of N.
    #[arg(long, value_delimiter = ',')]
    pub n_list: Option<Vec<usize>>,
    /// Parts of signatures are restricted to [-window, window].
    #[arg(long)]
    pub window: Option<i64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Tolerance of the command's main check.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Output file; relative paths resolve against $ZWDPP_OUT_DIR when set.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

impl Common {
    pub fn params(&self) -> Result<ZWParams64> {
        ZWParams64::from_parts(self.z_re, self.z_im, self.w_re, self.w_im).context("invalid (z, w)")
    }

    pub fn n_or(&self, default: usize) -> usize {
        self.n.unwrap_or(default)
    }

    pub fn n_list_or(&self, default: &[usize]) -> Vec<usize> {
        match (&self.n_list, self.n) {
            (Some(l), _) => l.clone(),
            (None, Some(n)) => vec![n],
            (None, None) => default.to_vec(),
        }
    }

    fn out_path(&self) -> Option<PathBuf> {
        let p = self.out.clone()?;
        if p.is_relative() {
            if let Some(dir) = std::env::var_os(OUT_DIR_ENV) {
                return Some(PathBuf::from(dir).join(p));
            }
        }
        Some(p)
    }
}

fn run(cli: Cli) -> Result<bool> {
    let started = Instant::now();
    let (name, common, report) = match &cli.command {
        Command::MeasureTable(a) => ("measure-table", &a.common, commands::measure_table(a)?),
        Command::Correlations(a) => ("correlations", &a.common, commands::correlations(a)?),
        Command::Involution(a) => ("involution", &a.common, commands::involution(a)?),
        Command::Kernel(a) => ("kernel", &a.common, commands::kernel(a)?),
        Command::Gap(a) => ("gap", &a.common, commands::gap(a)?),
        Command::Converge(a) => ("converge", &a.common, commands::converge(a)?),
    };
    let (config, tolerances, outcome) = report;
    let text = match common.format {
        Format::Json => report::render_json(name, &config, &outcome, common.seed, tolerances),
        Format::Csv => outcome.table.to_csv(),
    };
    match common.out_path() {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            }
            std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        }
        None => print!("{text}"),
    }
    for c in outcome.checks.iter().filter(|c| !c.pass) {
        eprintln!("check failed: {} = {:e} (tol {:e})", c.name, c.value, c.tol);
    }
    eprintln!("{name}: {:.2}s", started.elapsed().as_secs_f64());
    Ok(outcome.passed())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
