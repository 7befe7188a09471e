//! Closed-form propagator against direct RK4 integration of the averaged
//! equation.

use qubit_thermalization::analytic::{evolve_density, integrate_master_equation, ModelParams};
use qubit_thermalization::qmat::{from_bloch, BlochVector};

fn main() -> qubit_thermalization::Result<()> {
    let rho0 = from_bloch(BlochVector::new(0.6, -0.3, 0.7))?;
    for omega in [0.0, 0.5, 1.0, 2.0] {
        let p = ModelParams::from_omega(omega, 1.0)?;
        let mut worst: f64 = 0.0;
        for k in 0..=24 {
            let t = 5.0 * k as f64 / 24.0;
            let exact = evolve_density(&rho0, &p, t)?;
            let rk4 = integrate_master_equation(&rho0, &p, t, 1e-3)?;
            worst = worst.max(exact.max_abs_diff(&rk4));
        }
        println!("omega = {omega}: max |closed form - RK4| = {worst:.2e}");
    }
    Ok(())
}
