//! Relaxation of the excited state and of a coherent superposition in the
//! three damping regimes.

use qubit_thermalization::analytic::{characteristic_roots, evolve_density, ModelParams};
use qubit_thermalization::qmat::{from_bloch, to_bloch, BlochVector};

fn main() -> qubit_thermalization::Result<()> {
    let rho0 = from_bloch(BlochVector::new(0.8, 0.0, 0.6))?;
    for omega in [0.4, 1.0, 3.0] {
        let p = ModelParams::from_omega(omega, 1.0)?;
        let roots = characteristic_roots(&p);
        println!(
            "omega = {omega}: {} (r+ = {:.4}, r- = {:.4})",
            roots.regime, roots.r_plus, roots.r_minus
        );
        println!("{:>6} {:>9} {:>9} {:>9} {:>9}", "t", "a", "r1", "r2", "r3");
        for k in 0..=8 {
            let t = 0.5 * k as f64;
            let rho = evolve_density(&rho0, &p, t)?;
            let r = to_bloch(&rho).0;
            println!(
                "{t:>6.2} {:>9.5} {:>9.5} {:>9.5} {:>9.5}",
                rho.a(),
                r[0],
                r[1],
                r[2]
            );
        }
        println!();
    }
    Ok(())
}
