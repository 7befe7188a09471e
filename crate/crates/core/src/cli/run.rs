use std::fs::File;
use std::io::{BufWriter, Write};

use super::{Cell, CliError, Format, InitialState, Mode, RunConfig, Table};
use crate::analytic::{
    asymptotic_state, characteristic_roots, evolve_density, integrate_master_equation, ModelParams,
};
use crate::composite::{
    asymptotic_two_qubit, evolve_two_qubit, factorization_gap, two_qubit_ensemble_coefficients,
};
use crate::qmat::{
    pauli_coeffs, to_bloch, trace_distance, DensityMatrix, DensityMatrix2, DensityMatrix4,
};
use crate::stochastic::{ensemble_average, RngSeed};

const SINGLE_COLUMNS: [&str; 10] = [
    "t", "a", "re_b", "im_b", "d", "r1", "r2", "r3", "purity", "entropy",
];
const SINGLE_SE_COLUMNS: [&str; 4] = ["se_a", "se_re_b", "se_im_b", "se_d"];
const MC_TRAILER: [&str; 2] = ["n_traj", "seed"];
const SWEEP_COLUMNS: [&str; 9] = [
    "t",
    "a",
    "re_b",
    "im_b",
    "d",
    "ode_max_abs_diff",
    "mc_max_abs_diff",
    "mc_max_z",
    "distance_to_equilibrium",
];
const ENTROPY_COLUMNS: [&str; 4] = ["t", "entropy", "purity", "distance_to_equilibrium"];

fn coefficient_names(prefix: &str) -> Vec<String> {
    (0..16)
        .map(|k| format!("{prefix}c{}{}", k / 4, k % 4))
        .collect()
}

/// Column names emitted for `mode`, in order.
pub fn columns(mode: Mode) -> Vec<String> {
    let own = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    match mode {
        Mode::Analytic => own(&SINGLE_COLUMNS),
        Mode::Mc => [
            own(&SINGLE_COLUMNS),
            own(&SINGLE_SE_COLUMNS),
            own(&MC_TRAILER),
        ]
        .concat(),
        Mode::TwoQubit | Mode::TwoQubitMc => {
            let mut cols = vec!["t".to_string()];
            cols.extend(coefficient_names(""));
            cols.extend(own(&["purity", "entropy", "factorization_gap"]));
            if mode == Mode::TwoQubitMc {
                cols.extend(coefficient_names("se_"));
                cols.extend(own(&MC_TRAILER));
            }
            cols
        }
        Mode::Sweep => [own(&SWEEP_COLUMNS), own(&MC_TRAILER)].concat(),
        Mode::Entropy => own(&ENTROPY_COLUMNS),
    }
}

fn single_row(t: f64, rho: &DensityMatrix2) -> Result<Vec<Cell>, CliError> {
    let r = to_bloch(rho).0;
    let b = rho.b();
    Ok([
        t,
        rho.a(),
        b.re,
        b.im,
        rho.d(),
        r[0],
        r[1],
        r[2],
        rho.purity(),
        rho.entropy()?,
    ]
    .into_iter()
    .map(Cell::Real)
    .collect())
}

fn two_qubit_row(t: f64, rho: &DensityMatrix4) -> Result<Vec<Cell>, CliError> {
    let mut row = vec![Cell::Real(t)];
    row.extend(pauli_coeffs(rho).flatten().map(Cell::Real));
    row.extend([rho.purity(), rho.entropy()?, factorization_gap(rho)].map(Cell::Real));
    Ok(row)
}

fn entropy_row<const N: usize>(
    t: f64,
    rho: &DensityMatrix<N>,
    equilibrium: &DensityMatrix<N>,
) -> Result<Vec<Cell>, CliError> {
    Ok([
        t,
        rho.entropy()?,
        rho.purity(),
        trace_distance(rho, equilibrium),
    ]
    .map(Cell::Real)
    .to_vec())
}

fn one(state: InitialState) -> Result<DensityMatrix2, CliError> {
    match state {
        InitialState::One(rho) => Ok(rho),
        InitialState::Two(_) => Err(CliError::Config(
            "this mode needs a single-qubit initial state".into(),
        )),
    }
}

fn two(state: InitialState) -> Result<DensityMatrix4, CliError> {
    match state {
        InitialState::Two(rho) => Ok(rho),
        InitialState::One(_) => Err(CliError::Config(
            "this mode needs a two-qubit initial state".into(),
        )),
    }
}

/// Computes the output table of a run without writing it.
///
/// Monte Carlo modes run on the current rayon pool; the result does not
/// depend on its size.
pub fn run(config: &RunConfig) -> Result<Table, CliError> {
    let failures = config.check();
    if let Some(first) = failures.first() {
        return Err(CliError::Config(first.clone()));
    }
    let grid = config.time_grid()?;
    let state = config.initial_state()?;
    let seed = RngSeed(config.seed);
    let trailer = [Cell::Count(config.n_traj), Cell::Count(config.seed)];
    let mut table = Table::new(columns(config.mode));

    match config.mode {
        Mode::Analytic => {
            let (rho0, p) = (one(state)?, config.qubit_a()?);
            for &t in &grid {
                table.push(single_row(t, &evolve_density(&rho0, &p, t)?)?);
            }
        }
        Mode::Mc => {
            let (rho0, p) = (one(state)?, config.qubit_a()?);
            for &t in &grid {
                let est = ensemble_average(&rho0, &p, t, config.n_traj, seed)?;
                let mut row = single_row(t, &est.mean)?;
                let (re, im) = (est.std_err_re, est.std_err_im);
                row.extend([re[0][0], re[0][1], im[0][1], re[1][1]].map(Cell::Real));
                row.extend(trailer);
                table.push(row);
            }
        }
        Mode::TwoQubit => {
            let (rho0, p) = (two(state)?, config.two_qubit_params()?);
            for &t in &grid {
                table.push(two_qubit_row(t, &evolve_two_qubit(&rho0, &p, t)?)?);
            }
        }
        Mode::TwoQubitMc => {
            let (rho0, p) = (two(state)?, config.two_qubit_params()?);
            for &t in &grid {
                let (c, se) = two_qubit_ensemble_coefficients(&rho0, &p, t, config.n_traj, seed)?;
                let rho = DensityMatrix::from_matrix_unchecked(c.to_matrix());
                let mut row = two_qubit_row(t, &rho)?;
                row.extend(se.iter().flatten().copied().map(Cell::Real));
                row.extend(trailer);
                table.push(row);
            }
        }
        Mode::Sweep => {
            let (rho0, p) = (one(state)?, config.qubit_a()?);
            for &t in &grid {
                let exact = evolve_density(&rho0, &p, t)?;
                let ode = integrate_master_equation(&rho0, &p, t, config.dt)?;
                let mc = ensemble_average(&rho0, &p, t, config.n_traj, seed)?;
                let b = exact.b();
                let mut row: Vec<Cell> = [
                    t,
                    exact.a(),
                    b.re,
                    b.im,
                    exact.d(),
                    ode.max_abs_diff(&exact),
                    mc.mean.max_abs_diff(&exact),
                    mc.max_z_score(&exact),
                    trace_distance(&exact, &asymptotic_state()),
                ]
                .map(Cell::Real)
                .to_vec();
                row.extend(trailer);
                table.push(row);
            }
        }
        Mode::Entropy => match state {
            InitialState::One(rho0) => {
                let p = config.qubit_a()?;
                for &t in &grid {
                    table.push(entropy_row(
                        t,
                        &evolve_density(&rho0, &p, t)?,
                        &asymptotic_state(),
                    )?);
                }
            }
            InitialState::Two(rho0) => {
                let p = config.two_qubit_params()?;
                for &t in &grid {
                    table.push(entropy_row(
                        t,
                        &evolve_two_qubit(&rho0, &p, t)?,
                        &asymptotic_two_qubit(),
                    )?);
                }
            }
        },
    }
    Ok(table)
}

/// Runs `config` and writes the result to `config.out`, or to `sink` when no
/// path is set.
pub fn execute<W: Write>(config: &RunConfig, sink: W) -> Result<Table, CliError> {
    let config = config.clone().resolved();
    let table = run(&config)?;
    match &config.out {
        Some(path) => {
            let file = File::create(path).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            let mut w = BufWriter::new(file);
            write_table(&table, &config, &mut w)
                .and_then(|_| w.flush())
                .map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
        }
        None => write_table(&table, &config, sink).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        })?,
    }
    Ok(table)
}

fn write_table<W: Write>(table: &Table, config: &RunConfig, w: W) -> std::io::Result<()> {
    match config.format {
        Format::Csv => table.write_csv(w),
        Format::Json => table.write_json(config, w),
    }
}

/// Outcome of [`validate`]: derived quantities and every failed check.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ValidationReport {
    pub derived: Vec<(String, String)>,
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (k, v) in &self.derived {
            writeln!(f, "{k}: {v}")?;
        }
        if self.failures.is_empty() {
            writeln!(f, "status: ok")
        } else {
            for e in &self.failures {
                writeln!(f, "error: {e}")?;
            }
            writeln!(f, "status: {} failure(s)", self.failures.len())
        }
    }
}

fn describe_qubit(label: &str, p: &ModelParams, out: &mut Vec<(String, String)>) {
    let r = characteristic_roots(p);
    let fmt = |z: num_complex::Complex64| {
        if z.im == 0.0 {
            format!("{}", z.re)
        } else {
            format!("{}{:+}i", z.re, z.im)
        }
    };
    out.push((format!("{label}omega"), format!("{}", p.omega())));
    out.push((format!("{label}lambda"), format!("{}", p.lambda())));
    out.push((format!("{label}regime"), r.regime.to_string()));
    out.push((format!("{label}r_plus"), fmt(r.r_plus)));
    out.push((format!("{label}r_minus"), fmt(r.r_minus)));
}

/// Checks a config and reports derived quantities without running it.
pub fn validate(config: &RunConfig) -> ValidationReport {
    let config = config.clone().resolved();
    let mut report = ValidationReport {
        failures: config.check(),
        ..Default::default()
    };
    report
        .derived
        .push(("mode".into(), config.mode.to_string()));
    let two = matches!(config.mode, Mode::TwoQubit | Mode::TwoQubitMc);
    if let Ok(p) = config.qubit_a() {
        describe_qubit(if two { "a." } else { "" }, &p, &mut report.derived);
    }
    if two {
        if let Ok(p) = config.qubit_b() {
            describe_qubit("b.", &p, &mut report.derived);
        }
    }
    if let Ok(grid) = config.time_grid() {
        report.derived.push((
            "time_grid".into(),
            format!(
                "{} point(s) on [{}, {}]",
                grid.len(),
                grid[0],
                grid[grid.len() - 1]
            ),
        ));
    }
    match config.initial_state() {
        Ok(InitialState::One(rho)) => {
            let r = to_bloch(&rho).0;
            report.derived.push((
                "initial_bloch".into(),
                format!("({}, {}, {})", r[0] + 0.0, r[1] + 0.0, r[2] + 0.0),
            ));
            report
                .derived
                .push(("initial_purity".into(), format!("{}", rho.purity())));
        }
        Ok(InitialState::Two(rho)) => {
            report
                .derived
                .push(("initial_purity".into(), format!("{}", rho.purity())));
            report.derived.push((
                "initial_factorization_gap".into(),
                format!("{}", factorization_gap(&rho)),
            ));
        }
        Err(_) => {}
    }
    report
}
