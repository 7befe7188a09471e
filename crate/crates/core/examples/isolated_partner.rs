//! Only qubit A is coupled to a bath. Correlations disappear but B keeps
//! the weighted average of its factors. Also: level occupancy of an
//! N-qubit register at equilibrium.

use qubit_thermalization::composite::{
    clauser_separable_sum, isolated_partner_equilibrium, n_qubit_occupancy_distribution,
    partner_bloch_norm, SeparableSum, SeparableTerm,
};
use qubit_thermalization::qmat::{from_bloch, partial_trace, to_bloch, BlochVector, Subsystem};

fn main() -> qubit_thermalization::Result<()> {
    let skewed = SeparableSum::new(vec![
        SeparableTerm {
            weight: 0.75,
            rho_a: from_bloch(BlochVector::new(0.0, 0.0, 1.0))?,
            rho_b: from_bloch(BlochVector::new(1.0, 0.0, 0.0))?,
        },
        SeparableTerm {
            weight: 0.25,
            rho_a: from_bloch(BlochVector::new(0.0, 0.0, -1.0))?,
            rho_b: from_bloch(BlochVector::new(0.0, 1.0, 0.0))?,
        },
    ])?;
    for (name, s) in [
        ("clauser example", clauser_separable_sum()),
        ("skewed", skewed),
    ] {
        let eq = isolated_partner_equilibrium(&s);
        let b = to_bloch(&partial_trace(&eq, Subsystem::First)).0;
        println!(
            "{name}: partner Bloch vector ({:.3}, {:.3}, {:.3}), |r_B| = {:.3}",
            b[0],
            b[1],
            b[2],
            partner_bloch_norm(&s)
        );
    }

    for n in [1, 2, 4, 10] {
        let dist = n_qubit_occupancy_distribution(n)?;
        let shown: Vec<String> = dist.iter().map(|p| format!("{p:.4}")).collect();
        println!("{n:>2} qubits, P(k excited): [{}]", shown.join(", "));
    }
    Ok(())
}
