//! Two qubits in `½(|1⟩⟨1|⊗|2⟩⟨2| + |2⟩⟨2|⊗|1⟩⟨1|)`, both kicked by
//! independent baths, end up in `I/4`.

use qubit_thermalization::analytic::ModelParams;
use qubit_thermalization::composite::{
    asymptotic_two_qubit, evolve_two_qubit, example_state_clauser, factorization_gap,
    TwoQubitParams,
};
use qubit_thermalization::qmat::{pauli_coeffs, trace_distance};

fn main() -> qubit_thermalization::Result<()> {
    let p = TwoQubitParams::symmetric(ModelParams::from_omega(1.0, 1.0)?);
    let rho0 = example_state_clauser();
    println!("C(0) = {:?}", pauli_coeffs(&rho0).0);
    println!(
        "{:>5} {:>10} {:>10} {:>10} {:>10}",
        "t", "entropy", "purity", "gap", "D(I/4)"
    );
    for t in [0.0, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0] {
        let rho = evolve_two_qubit(&rho0, &p, t)?;
        println!(
            "{t:>5} {:>10.6} {:>10.6} {:>10.2e} {:>10.2e}",
            rho.entropy()?,
            rho.purity(),
            factorization_gap(&rho),
            trace_distance(&rho, &asymptotic_two_qubit())
        );
    }
    println!(
        "ln 2 = {:.6}, 2 ln 2 = {:.6}",
        std::f64::consts::LN_2,
        2.0 * std::f64::consts::LN_2
    );
    Ok(())
}
