use rayon::prelude::*;

use super::{sample_shock_times, trajectory_density, RngSeed};
use crate::analytic::ModelParams;
use crate::error::{invalid, Result};
use crate::qmat::{DensityMatrix, DensityMatrix2, Matrix};

/// Trajectories per reduction block. Blocks are summed internally in index
/// order and then combined in block order, so the floating-point result does
/// not depend on the number of worker threads.
pub const BLOCK_SIZE: u64 = 256;

/// Summation error allowed on entries that are the same in every trajectory.
pub const ROUNDING_FLOOR: f64 = 1e-12;

/// Monte Carlo estimate of a bath-averaged state.
#[derive(Clone, Debug, PartialEq)]
pub struct EnsembleEstimate<const N: usize> {
    pub mean: DensityMatrix<N>,
    /// Standard error of the real part of each entry.
    pub std_err_re: [[f64; N]; N],
    /// Standard error of the imaginary part of each entry.
    pub std_err_im: [[f64; N]; N],
    pub n_traj: u64,
}

impl<const N: usize> EnsembleEstimate<N> {
    pub fn max_std_err(&self) -> f64 {
        self.std_err_re
            .iter()
            .flatten()
            .chain(self.std_err_im.iter().flatten())
            .copied()
            .fold(0.0, f64::max)
    }

    /// Largest `|mean − reference|` measured in standard errors, over real
    /// and imaginary parts of every entry. Differences up to [`ROUNDING_FLOOR`]
    /// score zero; larger ones on an entry with zero error score infinity.
    pub fn max_z_score(&self, reference: &DensityMatrix<N>) -> f64 {
        let (m, r) = (self.mean.matrix(), reference.matrix());
        let z = |diff: f64, se: f64| {
            if diff.abs() <= ROUNDING_FLOOR {
                0.0
            } else if se == 0.0 {
                f64::INFINITY
            } else {
                diff.abs() / se
            }
        };
        let mut worst: f64 = 0.0;
        for i in 0..N {
            for j in 0..N {
                let d = m.0[i][j] - r.0[i][j];
                worst = worst
                    .max(z(d.re, self.std_err_re[i][j]))
                    .max(z(d.im, self.std_err_im[i][j]));
            }
        }
        worst
    }
}

#[derive(Clone, Copy)]
struct Moments<const N: usize> {
    sum: Matrix<N>,
    sum_sq_re: [[f64; N]; N],
    sum_sq_im: [[f64; N]; N],
}

impl<const N: usize> Moments<N> {
    fn zero() -> Self {
        Self {
            sum: Matrix::zeros(),
            sum_sq_re: [[0.0; N]; N],
            sum_sq_im: [[0.0; N]; N],
        }
    }

    fn push(&mut self, x: &Matrix<N>) {
        for i in 0..N {
            for j in 0..N {
                let z = x.0[i][j];
                self.sum.0[i][j] += z;
                self.sum_sq_re[i][j] += z.re * z.re;
                self.sum_sq_im[i][j] += z.im * z.im;
            }
        }
    }

    fn merge(&mut self, other: &Self) {
        self.sum = self.sum + other.sum;
        for i in 0..N {
            for j in 0..N {
                self.sum_sq_re[i][j] += other.sum_sq_re[i][j];
                self.sum_sq_im[i][j] += other.sum_sq_im[i][j];
            }
        }
    }
}

/// Sample mean and per-entry standard errors of arbitrary matrices.
pub(crate) struct RawEstimate<const N: usize> {
    pub mean: Matrix<N>,
    pub std_err_re: [[f64; N]; N],
    pub std_err_im: [[f64; N]; N],
    pub n_traj: u64,
}

impl<const N: usize> RawEstimate<N> {
    /// Caller guarantees the samples were states.
    pub fn into_state_estimate(self) -> EnsembleEstimate<N> {
        EnsembleEstimate {
            mean: DensityMatrix::from_matrix_unchecked(self.mean),
            std_err_re: self.std_err_re,
            std_err_im: self.std_err_im,
            n_traj: self.n_traj,
        }
    }
}

/// Averages `sample(i)` over `i ∈ 0..n_traj` with a fixed reduction order.
///
/// `sample` must be a pure function of the index.
pub(crate) fn reduce_ensemble<const N: usize, F>(n_traj: u64, sample: F) -> Result<RawEstimate<N>>
where
    F: Fn(u64) -> Result<Matrix<N>> + Sync,
{
    if n_traj < 2 {
        return Err(invalid(
            "n_traj",
            format!("need at least 2 trajectories, got {n_traj}"),
        ));
    }
    let n_blocks = n_traj.div_ceil(BLOCK_SIZE);
    let blocks: Vec<Moments<N>> = (0..n_blocks)
        .into_par_iter()
        .map(|b| {
            let mut acc = Moments::zero();
            for i in (b * BLOCK_SIZE)..((b + 1) * BLOCK_SIZE).min(n_traj) {
                acc.push(&sample(i)?);
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;

    let mut total = Moments::zero();
    for block in &blocks {
        total.merge(block);
    }

    let n = n_traj as f64;
    let mean = total.sum.scale_real(1.0 / n);
    let se = |sum_sq: f64, mean: f64| {
        let var = ((sum_sq - n * mean * mean) / (n - 1.0)).max(0.0);
        (var / n).sqrt()
    };
    let mut std_err_re = [[0.0; N]; N];
    let mut std_err_im = [[0.0; N]; N];
    for i in 0..N {
        for j in 0..N {
            std_err_re[i][j] = se(total.sum_sq_re[i][j], mean.0[i][j].re);
            std_err_im[i][j] = se(total.sum_sq_im[i][j], mean.0[i][j].im);
        }
    }
    Ok(RawEstimate {
        mean,
        std_err_re,
        std_err_im,
        n_traj,
    })
}

/// Monte Carlo estimate of the bath-averaged state at time `t`.
///
/// Trajectory `i` samples its shocks on `(0, t]` from `seed.stream(i)`.
/// Because the exponential gaps are drawn in order, calls at different `t`
/// with the same seed see nested truncations of the same realizations.
pub fn ensemble_average(
    rho0: &DensityMatrix2,
    params: &ModelParams,
    t: f64,
    n_traj: u64,
    seed: RngSeed,
) -> Result<EnsembleEstimate<2>> {
    if !(t.is_finite() && t >= 0.0) {
        return Err(invalid(
            "t",
            format!("must be finite and non-negative, got {t}"),
        ));
    }
    reduce_ensemble(n_traj, |i| {
        let mut rng = seed.stream(i);
        let traj = sample_shock_times(params.lambda(), t, &mut rng)?;
        Ok(trajectory_density(rho0, &traj, params, t)?.into_matrix())
    })
    .map(RawEstimate::into_state_estimate)
}
