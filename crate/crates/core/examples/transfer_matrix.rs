//! The 4×4 Pauli transfer matrix of the averaged channel.

use qubit_thermalization::analytic::{pauli_transfer_matrix, ModelParams};

fn show(label: &str, m: &[[f64; 4]; 4]) {
    println!("{label}");
    for row in m {
        println!("  [{}]", row.map(|x| format!("{x:>10.6}")).join(" "));
    }
}

fn main() -> qubit_thermalization::Result<()> {
    let p = ModelParams::from_omega(2.0, 1.0)?;
    show("M(0)", pauli_transfer_matrix(&p, 0.0)?.matrix());
    show("M(0.7)", pauli_transfer_matrix(&p, 0.7)?.matrix());

    let (t, s) = (0.3, 1.1);
    let whole = pauli_transfer_matrix(&p, t + s)?;
    let split = pauli_transfer_matrix(&p, t)?.compose(&pauli_transfer_matrix(&p, s)?);
    println!("|M(t+s) - M(t)M(s)| = {:.2e}", whole.max_abs_diff(&split));

    // No splitting: σ₁ commutes with every flip and is left alone.
    let flat = ModelParams::from_omega(0.0, 1.0)?;
    show(
        "M(2) at omega = 0",
        pauli_transfer_matrix(&flat, 2.0)?.matrix(),
    );
    Ok(())
}
