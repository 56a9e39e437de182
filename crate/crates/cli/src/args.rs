use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hnla_core::ensemble::{GridKind, GridSpec};

/// Heralded noiseless linear amplifier laboratory.
#[derive(Debug, Parser)]
#[command(name = "hnla", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format (default: csv for fig1, json otherwise).
    #[arg(long, global = true, value_enum, env = "HNLA_FORMAT")]
    pub format: Option<Format>,

    /// Write to this file (atomically) instead of stdout.
    #[arg(long, global = true, env = "HNLA_OUTPUT")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fidelity and success probability of the truncated squeezer versus N.
    Fig1(Fig1Args),
    /// Closed-form output parameters for one squeezed coherent input.
    Transform(TransformArgs),
    /// Homodyne x/p signaling test on an amplified EPR half.
    Nosignal(NoSignalArgs),
    /// Photon-number and heterodyne scenarios on an amplified EPR half.
    Epr(EprArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SqueezingList {
    /// Squeezing levels in dB (e^{-2r} = 10^{-dB/10}), comma separated.
    #[arg(long = "squeezing-db", value_delimiter = ',')]
    pub db: Option<Vec<f64>>,
    /// Squeezing levels as r, comma separated.
    #[arg(long = "squeezing-r", value_delimiter = ',')]
    pub r: Option<Vec<f64>>,
}

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
pub struct Squeezing {
    /// Squeezing in dB.
    #[arg(long = "squeezing-db")]
    pub db: Option<f64>,
    /// Squeezing strength r.
    #[arg(long = "squeezing-r")]
    pub r: Option<f64>,
}

#[derive(Debug, Args)]
pub struct Fig1Args {
    #[arg(long, env = "HNLA_GAIN", default_value_t = 1.1)]
    pub gain: f64,
    #[command(flatten)]
    pub squeezing: SqueezingList,
    /// Truncation photon number N, or an inclusive range `A-B`.
    #[arg(long, env = "HNLA_N_TRUNC", default_value = "0-20")]
    pub n_trunc: String,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[arg(long, env = "HNLA_GAIN", default_value_t = 1.1)]
    pub gain: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub alpha_re: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub alpha_im: f64,
    #[command(flatten)]
    pub squeezing: Squeezing,
    /// Squeezing angle in radians (0 squeezes x, π squeezes p).
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phi: f64,
    /// Cutoff for the brute-force cross-check (default: automatic).
    #[arg(long, env = "HNLA_N_MAX")]
    pub n_max: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridKindArg {
    Gauss,
    Uniform,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long, value_enum, env = "HNLA_GRID_KIND", default_value = "gauss")]
    pub grid_kind: GridKindArg,
    #[arg(long, env = "HNLA_GRID_POINTS", default_value_t = 201)]
    pub grid_points: usize,
    /// Half-width of uniform grids in standard deviations.
    #[arg(long, env = "HNLA_GRID_SIGMAS", default_value_t = 6.0)]
    pub grid_sigmas: f64,
    /// Angular nodes of heterodyne grids.
    #[arg(long, env = "HNLA_GRID_ANGLES", default_value_t = 64)]
    pub grid_angles: usize,
}

impl GridArgs {
    pub fn spec(&self) -> GridSpec {
        GridSpec {
            kind: match self.grid_kind {
                GridKindArg::Gauss => GridKind::Gauss,
                GridKindArg::Uniform => GridKind::Uniform,
            },
            points: self.grid_points,
            sigmas: self.grid_sigmas,
            angles: self.grid_angles,
        }
    }
}

#[derive(Debug, Args)]
pub struct NoSignalArgs {
    /// Two-mode squeezing of the shared EPR pair.
    #[arg(long, env = "HNLA_S", default_value_t = 0.5)]
    pub s: f64,
    #[arg(long, env = "HNLA_GAIN", default_value_t = 1.1)]
    pub gain: f64,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, env = "HNLA_N_MAX")]
    pub n_max: Option<usize>,
    /// Largest acceptable trace distance.
    #[arg(long, env = "HNLA_TOLERANCE", default_value_t = 1e-6)]
    pub tolerance: f64,
}

pub type EprArgs = NoSignalArgs;
