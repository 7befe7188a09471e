//! A Bell state under independent baths with different rates: correlations
//! and coherences vanish, and the state factorizes.

use qubit_thermalization::analytic::ModelParams;
use qubit_thermalization::composite::{
    bell_phi_plus, evolve_two_qubit, factorization_gap, two_qubit_ensemble_average, TwoQubitParams,
};
use qubit_thermalization::qmat::{partial_trace, DensityMatrix2, Subsystem};
use qubit_thermalization::stochastic::RngSeed;

fn main() -> qubit_thermalization::Result<()> {
    let p = TwoQubitParams::new(
        ModelParams::from_omega(2.0, 1.0)?,
        ModelParams::from_omega(3.0, 0.5)?,
    );
    let rho0 = bell_phi_plus();
    let half = DensityMatrix2::maximally_mixed();
    println!(
        "{:>5} {:>10} {:>10} {:>10}",
        "t", "gap", "purity", "|A - I/2|"
    );
    for t in [0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 40.0] {
        let rho = evolve_two_qubit(&rho0, &p, t)?;
        let a = partial_trace(&rho, Subsystem::Second);
        println!(
            "{t:>5} {:>10.2e} {:>10.6} {:>10.2e}",
            factorization_gap(&rho),
            rho.purity(),
            a.max_abs_diff(&half)
        );
    }

    let t = 1.0;
    let est = two_qubit_ensemble_average(&rho0, &p, t, 20_000, RngSeed(3))?;
    let exact = evolve_two_qubit(&rho0, &p, t)?;
    println!(
        "Monte Carlo at t = {t}: max z = {:.2}, max se = {:.2e}",
        est.max_z_score(&exact),
        est.max_std_err()
    );
    Ok(())
}
