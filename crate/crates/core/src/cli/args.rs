use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use super::{CliError, Format, InitialStateSpec, Mode, Preset, RunConfig};

#[derive(Debug, Parser)]
#[command(
    name = "qtherm",
    version,
    about = "Qubit thermalization by random spin-flip pulses"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run an experiment and write its time series.
    Run(RunArgs),
    /// Check a configuration and print derived quantities without running.
    Validate(RunArgs),
}

/// Flags override values loaded from `--config`.
#[derive(Debug, Default, Args)]
pub struct RunArgs {
    /// JSON file holding a full or partial configuration.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub eps1: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub eps2: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub hbar: Option<f64>,
    /// Shock rate of the second qubit.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda_b: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub eps1_b: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub eps2_b: Option<f64>,
    /// Named initial state.
    #[arg(long, value_enum, conflicts_with = "bloch")]
    pub state: Option<Preset>,
    /// Single-qubit initial state as a Bloch vector `x,y,z`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub bloch: Option<Vec<f64>>,
    #[arg(long, allow_hyphen_values = true)]
    pub t_start: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub t_stop: Option<f64>,
    #[arg(long)]
    pub t_points: Option<usize>,
    #[arg(long)]
    pub n_traj: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// RK4 step used by the sweep mode.
    #[arg(long, allow_hyphen_values = true)]
    pub dt: Option<f64>,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Worker threads for Monte Carlo modes (0 = all cores). Results do not
    /// depend on it.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

impl RunArgs {
    pub fn into_config(self) -> Result<RunConfig, CliError> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
                serde_json::from_str(&text)
                    .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?
            }
            None => RunConfig::default(),
        };
        macro_rules! take {
            ($($field:ident),*) => {
                $(if let Some(v) = self.$field { cfg.$field = v; })*
            };
        }
        take!(mode, lambda, eps1, eps2, hbar, t_start, t_stop, t_points, n_traj, seed, dt, format);
        if self.lambda_b.is_some() {
            cfg.lambda_b = self.lambda_b;
        }
        if self.eps1_b.is_some() {
            cfg.eps1_b = self.eps1_b;
        }
        if self.eps2_b.is_some() {
            cfg.eps2_b = self.eps2_b;
        }
        if self.out.is_some() {
            cfg.out = self.out;
        }
        if let Some(p) = self.state {
            cfg.state = Some(InitialStateSpec::Preset(p));
        }
        if let Some(v) = self.bloch {
            let [x, y, z] = v[..] else {
                return Err(CliError::Config(
                    "--bloch takes exactly three values".into(),
                ));
            };
            cfg.state = Some(InitialStateSpec::Bloch([x, y, z]));
        }
        Ok(cfg)
    }
}
