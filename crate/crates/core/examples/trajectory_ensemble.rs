//! Monte Carlo over shock trajectories converging to the closed form.

use qubit_thermalization::analytic::{evolve_density, ModelParams};
use qubit_thermalization::qmat::{from_bloch, BlochVector};
use qubit_thermalization::stochastic::{ensemble_average, RngSeed};

fn main() -> qubit_thermalization::Result<()> {
    let p = ModelParams::from_omega(2.0, 1.0)?;
    let rho0 = from_bloch(BlochVector::new(0.6, 0.0, 0.8))?;
    let t = 1.0;
    let exact = evolve_density(&rho0, &p, t)?;
    println!(
        "{:>8} {:>10} {:>10} {:>8}",
        "n_traj", "max err", "max se", "max z"
    );
    for n in [100, 1_000, 10_000, 100_000] {
        let est = ensemble_average(&rho0, &p, t, n, RngSeed(7))?;
        println!(
            "{n:>8} {:>10.2e} {:>10.2e} {:>8.2}",
            est.mean.max_abs_diff(&exact),
            est.max_std_err(),
            est.max_z_score(&exact)
        );
    }
    Ok(())
}
