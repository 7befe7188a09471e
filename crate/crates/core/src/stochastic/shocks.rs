use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use statrs::function::factorial::ln_factorial;

use crate::error::{invalid, Result};

/// Master seed of a Monte Carlo run.
///
/// Trajectory `i` draws from ChaCha8 keyed by `seed` on stream `i`, so every
/// trajectory has its own substream regardless of evaluation order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RngSeed(pub u64);

impl RngSeed {
    pub fn stream(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.0);
        rng.set_stream(index);
        rng
    }
}

/// Shock arrival times of one bath realization on `(0, horizon]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShockTrajectory {
    times: Vec<f64>,
    horizon: f64,
}

impl ShockTrajectory {
    /// Checks that `times` is strictly increasing inside `(0, horizon]`.
    pub fn new(times: Vec<f64>, horizon: f64) -> Result<Self> {
        check_horizon(horizon)?;
        if times.iter().any(|&t| !(t > 0.0 && t <= horizon)) {
            return Err(invalid("times", "shock times must lie in (0, horizon]"));
        }
        if times.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid("times", "shock times must be strictly increasing"));
        }
        Ok(Self { times, horizon })
    }

    /// The realization without shocks.
    pub fn empty(horizon: f64) -> Result<Self> {
        Self::new(Vec::new(), horizon)
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// `N(t)`, the number of shocks up to and including `t`.
    pub fn count_until(&self, t: f64) -> usize {
        self.times.partition_point(|&s| s <= t)
    }
}

fn check_horizon(horizon: f64) -> Result<()> {
    if !(horizon.is_finite() && horizon >= 0.0) {
        return Err(invalid(
            "horizon",
            format!("must be finite and non-negative, got {horizon}"),
        ));
    }
    Ok(())
}

fn check_rate(lambda: f64) -> Result<()> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(invalid(
            "lambda",
            format!("must be positive and finite, got {lambda}"),
        ));
    }
    Ok(())
}

/// One `Exponential(λ)` waiting time by inversion, `−ln(1 − U)/λ`.
pub fn sample_exponential<R: Rng + ?Sized>(lambda: f64, rng: &mut R) -> f64 {
    let u: f64 = rng.random();
    -(-u).ln_1p() / lambda
}

/// Poisson arrivals: cumulative sums of exponential gaps, stopped at the
/// first arrival beyond `horizon`.
pub fn sample_shock_times<R: Rng + ?Sized>(
    lambda: f64,
    horizon: f64,
    rng: &mut R,
) -> Result<ShockTrajectory> {
    check_rate(lambda)?;
    check_horizon(horizon)?;
    let mut times = Vec::new();
    let mut t = 0.0;
    loop {
        t += sample_exponential(lambda, rng);
        if t > horizon {
            break;
        }
        // A zero gap would repeat a time; it has probability 2⁻⁵³ per draw.
        if times.last().is_none_or(|&last| t > last) && t > 0.0 {
            times.push(t);
        }
    }
    Ok(ShockTrajectory { times, horizon })
}

/// Arrival times conditioned on exactly `n` shocks in `(0, horizon]`: sorted
/// i.i.d. uniforms.
pub fn sample_shock_times_conditional<R: Rng + ?Sized>(
    n: usize,
    horizon: f64,
    rng: &mut R,
) -> Result<ShockTrajectory> {
    check_horizon(horizon)?;
    if horizon == 0.0 && n > 0 {
        return Err(invalid(
            "horizon",
            "must be positive when shocks are requested",
        ));
    }
    let mut times: Vec<f64> = (0..n)
        .map(|_| {
            let u: f64 = rng.random();
            horizon * (1.0 - u)
        })
        .collect();
    times.sort_by(f64::total_cmp);
    times.dedup();
    Ok(ShockTrajectory { times, horizon })
}

/// `P(N(t) = n) = (λt)ⁿ e^{−λt} / n!`, evaluated in log space.
pub fn poisson_pmf(n: u64, lambda: f64, t: f64) -> f64 {
    let mean = lambda * t;
    if mean == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    (n as f64 * mean.ln() - mean - ln_factorial(n)).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_horizon_is_empty() {
        let mut rng = RngSeed(1).stream(0);
        assert!(sample_shock_times(1.0, 0.0, &mut rng).unwrap().is_empty());
        assert!(sample_shock_times_conditional(0, 1.0, &mut rng)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn samples_are_ordered_and_bounded() {
        let mut rng = RngSeed(7).stream(3);
        for _ in 0..200 {
            let tr = sample_shock_times(4.0, 2.5, &mut rng).unwrap();
            assert!(ShockTrajectory::new(tr.times().to_vec(), 2.5).is_ok());
            let cond = sample_shock_times_conditional(6, 2.5, &mut rng).unwrap();
            assert_eq!(cond.len(), 6);
            assert!(ShockTrajectory::new(cond.times().to_vec(), 2.5).is_ok());
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let mut rng = RngSeed(0).stream(0);
        assert!(sample_shock_times(0.0, 1.0, &mut rng).is_err());
        assert!(sample_shock_times(1.0, -1.0, &mut rng).is_err());
        assert!(sample_shock_times_conditional(2, -1.0, &mut rng).is_err());
        assert!(ShockTrajectory::new(vec![0.5, 0.4], 1.0).is_err());
        assert!(ShockTrajectory::new(vec![0.0], 1.0).is_err());
        assert!(ShockTrajectory::new(vec![1.5], 1.0).is_err());
    }

    #[test]
    fn mean_count_matches_rate() {
        let mut rng = RngSeed(2024).stream(0);
        let n = 100_000;
        let total: usize = (0..n)
            .map(|_| sample_shock_times(1.0, 10.0, &mut rng).unwrap().len())
            .sum();
        let mean = total as f64 / n as f64;
        assert!(
            (mean - 10.0).abs() < 4.0 * (10.0 / n as f64).sqrt(),
            "mean {mean}"
        );
    }

    #[test]
    fn empty_fraction_matches_exp_minus_one() {
        let mut rng = RngSeed(99).stream(5);
        let n = 100_000;
        let empty = (0..n)
            .filter(|_| sample_shock_times(1.0, 1.0, &mut rng).unwrap().is_empty())
            .count();
        let p = (-1f64).exp();
        let freq = empty as f64 / n as f64;
        assert!((freq - p).abs() < 4.0 * (p * (1.0 - p) / n as f64).sqrt());
    }

    #[test]
    fn single_conditional_shock_is_centered() {
        let mut rng = RngSeed(5).stream(1);
        let n = 20_000;
        let horizon = 3.0;
        let mean = (0..n)
            .map(|_| {
                sample_shock_times_conditional(1, horizon, &mut rng)
                    .unwrap()
                    .times()[0]
            })
            .sum::<f64>()
            / n as f64;
        let sd = horizon / 12f64.sqrt();
        assert!((mean - horizon / 2.0).abs() < 4.0 * sd / (n as f64).sqrt());
    }

    #[test]
    fn pmf_examples() {
        assert!((poisson_pmf(0, 1.0, 1.0) - (-1f64).exp()).abs() < 1e-16);
        assert!((poisson_pmf(2, 2.0, 1.0) - 2.0 * (-2f64).exp()).abs() < 1e-15);
        let total: f64 = (0..=200).map(|n| poisson_pmf(n, 1.0, 5.0)).sum();
        assert!((total - 1.0).abs() < 1e-12);
        assert_eq!(poisson_pmf(0, 1.0, 0.0), 1.0);
        assert_eq!(poisson_pmf(3, 1.0, 0.0), 0.0);
        assert!(poisson_pmf(1000, 1.0, 5.0).is_finite());
    }

    #[test]
    fn count_until() {
        let tr = ShockTrajectory::new(vec![0.1, 0.5, 0.9], 1.0).unwrap();
        assert_eq!(tr.count_until(0.05), 0);
        assert_eq!(tr.count_until(0.5), 2);
        assert_eq!(tr.count_until(1.0), 3);
    }

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let seed = RngSeed(11);
        let a: Vec<u64> = (0..4).map(|_| seed.stream(0).random()).collect();
        assert!(a.windows(2).all(|w| w[0] == w[1]));
        let x: u64 = seed.stream(0).random();
        let y: u64 = seed.stream(1).random();
        assert_ne!(x, y);
    }
}
