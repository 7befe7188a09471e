use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::analytic::ModelParams;
use crate::composite::{example_state_clauser, SeparableSum, SeparableTerm, TwoQubitParams};
use crate::qmat::{
    from_bloch, from_pauli_coeffs, BlochVector, DensityMatrix2, DensityMatrix4, PauliCoefficients2Q,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Closed-form single-qubit evolution.
    Analytic,
    /// Single-qubit trajectory ensemble.
    Mc,
    /// Closed-form two-qubit evolution.
    TwoQubit,
    /// Two-qubit trajectory ensemble.
    TwoQubitMc,
    /// Closed form against the RK4 integrator and the trajectory ensemble.
    Sweep,
    /// Entropy and purity along the closed-form evolution.
    Entropy,
}

impl Mode {
    pub fn is_monte_carlo(self) -> bool {
        matches!(self, Mode::Mc | Mode::TwoQubitMc | Mode::Sweep)
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use clap::ValueEnum;
        let name = self.to_possible_value().expect("no skipped variants");
        f.write_str(name.get_name())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Preset {
    /// `|2⟩⟨2|`.
    Ground,
    /// `|1⟩⟨1|`.
    Excited,
    /// `(I + σ₁)/2`.
    Plus,
    /// `½(|1⟩⟨1|⊗|2⟩⟨2| + |2⟩⟨2|⊗|1⟩⟨1|)`.
    ClauserExample,
    /// `I/2` for one qubit, `I/4` for two.
    MaximallyMixed,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeparableTermSpec {
    pub weight: f64,
    /// Bloch vector of the first factor.
    pub a: [f64; 3],
    /// Bloch vector of the second factor.
    pub b: [f64; 3],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InitialStateSpec {
    Preset(Preset),
    Bloch([f64; 3]),
    /// Two-qubit Pauli table `C_{μν}`, `C₀₀ = 1`.
    Pauli([[f64; 4]; 4]),
    Separable(Vec<SeparableTermSpec>),
}

/// A state resolved from its spec.
#[derive(Clone, Debug, PartialEq)]
pub enum InitialState {
    One(DensityMatrix2),
    Two(DensityMatrix4),
}

impl InitialStateSpec {
    /// Resolves to a state; `two_qubit` selects the dimension of
    /// `maximally-mixed`, the only preset that exists in both.
    pub fn resolve(&self, two_qubit: bool) -> Result<InitialState, CliError> {
        Ok(match self {
            InitialStateSpec::Preset(p) => match p {
                Preset::Ground => InitialState::One(DensityMatrix2::ground()),
                Preset::Excited => InitialState::One(DensityMatrix2::excited()),
                Preset::Plus => InitialState::One(DensityMatrix2::plus()),
                Preset::ClauserExample => InitialState::Two(example_state_clauser()),
                Preset::MaximallyMixed if two_qubit => {
                    InitialState::Two(DensityMatrix4::maximally_mixed())
                }
                Preset::MaximallyMixed => InitialState::One(DensityMatrix2::maximally_mixed()),
            },
            InitialStateSpec::Bloch([x, y, z]) => {
                InitialState::One(from_bloch(BlochVector::new(*x, *y, *z))?)
            }
            InitialStateSpec::Pauli(c) => {
                InitialState::Two(from_pauli_coeffs(&PauliCoefficients2Q::new(*c)?)?)
            }
            InitialStateSpec::Separable(terms) => {
                let terms = terms
                    .iter()
                    .map(|t| {
                        Ok(SeparableTerm {
                            weight: t.weight,
                            rho_a: from_bloch(BlochVector(t.a))?,
                            rho_b: from_bloch(BlochVector(t.b))?,
                        })
                    })
                    .collect::<Result<Vec<_>, crate::Error>>()?;
                InitialState::Two(SeparableSum::new(terms)?.assemble())
            }
        })
    }
}

/// Everything needed to reproduce a run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub mode: Mode,
    pub eps1: f64,
    pub eps2: f64,
    pub lambda: f64,
    pub hbar: f64,
    /// Second-qubit parameters; each defaults to the first qubit's value.
    pub eps1_b: Option<f64>,
    pub eps2_b: Option<f64>,
    pub lambda_b: Option<f64>,
    /// Defaults to `excited` for single-qubit modes and `clauser-example`
    /// for two-qubit modes.
    pub state: Option<InitialStateSpec>,
    pub t_start: f64,
    pub t_stop: f64,
    pub t_points: usize,
    pub n_traj: u64,
    pub seed: u64,
    /// RK4 step for the sweep mode.
    pub dt: f64,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            mode: Mode::Analytic,
            eps1: 1.0,
            eps2: 0.0,
            lambda: 1.0,
            hbar: 1.0,
            eps1_b: None,
            eps2_b: None,
            lambda_b: None,
            state: None,
            t_start: 0.0,
            t_stop: 5.0,
            t_points: 51,
            n_traj: 10_000,
            seed: 0,
            dt: 1e-3,
            out: None,
            format: Format::Csv,
        }
    }
}

impl RunConfig {
    pub fn is_two_qubit(&self) -> bool {
        match self.mode {
            Mode::TwoQubit | Mode::TwoQubitMc => true,
            Mode::Entropy => matches!(
                self.state,
                Some(InitialStateSpec::Preset(Preset::ClauserExample))
                    | Some(InitialStateSpec::Pauli(_))
                    | Some(InitialStateSpec::Separable(_))
            ),
            _ => false,
        }
    }

    /// Fills in the mode-dependent defaults so the config is self-contained.
    pub fn resolved(mut self) -> Self {
        if self.state.is_none() {
            let two = matches!(self.mode, Mode::TwoQubit | Mode::TwoQubitMc);
            self.state = Some(InitialStateSpec::Preset(if two {
                Preset::ClauserExample
            } else {
                Preset::Excited
            }));
        }
        self.eps1_b.get_or_insert(self.eps1);
        self.eps2_b.get_or_insert(self.eps2);
        self.lambda_b.get_or_insert(self.lambda);
        self
    }

    pub fn qubit_a(&self) -> Result<ModelParams, CliError> {
        Ok(ModelParams::with_hbar(
            self.eps1,
            self.eps2,
            self.lambda,
            self.hbar,
        )?)
    }

    pub fn qubit_b(&self) -> Result<ModelParams, CliError> {
        Ok(ModelParams::with_hbar(
            self.eps1_b.unwrap_or(self.eps1),
            self.eps2_b.unwrap_or(self.eps2),
            self.lambda_b.unwrap_or(self.lambda),
            self.hbar,
        )?)
    }

    pub fn two_qubit_params(&self) -> Result<TwoQubitParams, CliError> {
        Ok(TwoQubitParams::new(self.qubit_a()?, self.qubit_b()?))
    }

    /// Evenly spaced grid from `t_start` to `t_stop` inclusive.
    pub fn time_grid(&self) -> Result<Vec<f64>, CliError> {
        if !(self.t_start.is_finite() && self.t_start >= 0.0) {
            return Err(CliError::Config(format!(
                "t-start must be non-negative, got {}",
                self.t_start
            )));
        }
        if !self.t_stop.is_finite() {
            return Err(CliError::Config("t-stop must be finite".into()));
        }
        match self.t_points {
            0 => Err(CliError::Config("t-points must be at least 1".into())),
            1 => Ok(vec![self.t_start]),
            n => {
                if self.t_stop <= self.t_start {
                    return Err(CliError::Config(format!(
                        "time grid must be increasing: t-start {} >= t-stop {}",
                        self.t_start, self.t_stop
                    )));
                }
                let step = (self.t_stop - self.t_start) / (n - 1) as f64;
                Ok((0..n)
                    .map(|k| {
                        if k == n - 1 {
                            self.t_stop
                        } else {
                            self.t_start + step * k as f64
                        }
                    })
                    .collect())
            }
        }
    }

    pub fn initial_state(&self) -> Result<InitialState, CliError> {
        let spec = self
            .state
            .clone()
            .unwrap_or(InitialStateSpec::Preset(Preset::Excited));
        spec.resolve(self.is_two_qubit())
    }

    /// All checks made before a run, collected rather than short-circuited.
    pub fn check(&self) -> Vec<String> {
        let mut failures = Vec::new();
        if let Err(e) = self.qubit_a() {
            failures.push(format!("qubit A: {e}"));
        }
        if matches!(self.mode, Mode::TwoQubit | Mode::TwoQubitMc) {
            if let Err(e) = self.qubit_b() {
                failures.push(format!("qubit B: {e}"));
            }
        }
        match self.time_grid() {
            Err(CliError::Config(msg)) => failures.push(msg),
            Err(e) => failures.push(e.to_string()),
            Ok(_) => {}
        }
        if self.mode.is_monte_carlo() && self.n_traj < 2 {
            failures.push(format!(
                "n-traj must be at least 2 for Monte Carlo modes, got {}",
                self.n_traj
            ));
        }
        if self.mode == Mode::Sweep && !(self.dt.is_finite() && self.dt > 0.0) {
            failures.push(format!("dt must be positive, got {}", self.dt));
        }
        match self.initial_state() {
            Err(e) => failures.push(format!("initial state: {e}")),
            Ok(state) => {
                let want_two = self.is_two_qubit();
                match (state, want_two) {
                    (InitialState::One(_), true) => failures.push(format!(
                        "mode {} needs a two-qubit initial state",
                        self.mode
                    )),
                    (InitialState::Two(_), false) => failures.push(format!(
                        "mode {} needs a single-qubit initial state",
                        self.mode
                    )),
                    _ => {}
                }
            }
        }
        failures
    }
}
