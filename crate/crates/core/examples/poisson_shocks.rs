//! Shock counts against the Poisson law, and the conditional sampler.

use qubit_thermalization::stats::{chi_square_test, ks_two_sample};
use qubit_thermalization::stochastic::{
    poisson_pmf, sample_shock_times, sample_shock_times_conditional, RngSeed,
};

fn main() -> qubit_thermalization::Result<()> {
    let (lambda, horizon, n) = (1.0, 3.0, 100_000u64);
    let seed = RngSeed(2024);
    let mut counts = [0u64; 12];
    for i in 0..n {
        let traj = sample_shock_times(lambda, horizon, &mut seed.stream(i))?;
        counts[traj.len().min(11)] += 1;
    }
    let mut expected: Vec<f64> = (0..11)
        .map(|k| poisson_pmf(k, lambda, horizon) * n as f64)
        .collect();
    expected.push(n as f64 - expected.iter().sum::<f64>());
    println!("{:>4} {:>9} {:>11}", "n", "observed", "expected");
    for (k, (o, e)) in counts.iter().zip(&expected).enumerate() {
        let label = if k == 11 {
            ">10".to_string()
        } else {
            k.to_string()
        };
        println!("{label:>4} {o:>9} {e:>11.1}");
    }
    let (chi2, p) = chi_square_test(&counts, &expected);
    println!("chi-square = {chi2:.2}, p = {p:.3}");

    // First arrival among runs with exactly two shocks, both ways.
    let mut filtered = Vec::new();
    let mut i = 0;
    while filtered.len() < 10_000 {
        let traj = sample_shock_times(lambda, 1.0, &mut RngSeed(1).stream(i))?;
        if traj.len() == 2 {
            filtered.push(traj.times()[0]);
        }
        i += 1;
    }
    let conditional: Vec<f64> = (0..10_000)
        .map(|i| {
            sample_shock_times_conditional(2, 1.0, &mut RngSeed(2).stream(i)).map(|t| t.times()[0])
        })
        .collect::<Result<_, _>>()?;
    let (d, p) = ks_two_sample(&filtered, &conditional);
    println!("KS on first arrival: D = {d:.4}, p = {p:.3}");
    Ok(())
}
