//! Experiment driver behind the `qtherm` binary.
//!
//! A [`RunConfig`] comes from flags, a JSON file, or both (flags win).
//! [`run`] evaluates it on a time grid and returns a [`Table`]; [`execute`]
//! also writes it as CSV or JSON.
//!
//! Column sets per mode:
//!
//! | mode | columns |
//! |------|---------|
//! | `analytic` | `t, a, re_b, im_b, d, r1, r2, r3, purity, entropy` |
//! | `mc` | analytic columns, `se_a, se_re_b, se_im_b, se_d, n_traj, seed` |
//! | `two-qubit` | `t, c00 … c33, purity, entropy, factorization_gap` |
//! | `two-qubit-mc` | two-qubit columns, `se_c00 … se_c33, n_traj, seed` |
//! | `sweep` | `t, a, re_b, im_b, d, ode_max_abs_diff, mc_max_abs_diff, mc_max_z, distance_to_equilibrium, n_traj, seed` |
//! | `entropy` | `t, entropy, purity, distance_to_equilibrium` |

mod args;
mod config;
mod output;
mod run;

pub use args::{Cli, Command, RunArgs};
pub use config::{
    Format, InitialState, InitialStateSpec, Mode, Preset, RunConfig, SeparableTermSpec,
};
pub use output::{Cell, Table};
pub use run::{columns, execute, run, validate, ValidationReport};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Model(#[from] crate::Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
