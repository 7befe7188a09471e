//! Closed-form solution of the bath-averaged single-qubit dynamics and an
//! independent RK4 integrator of the same equation.

mod ode;
mod params;
mod roots;
mod transfer;

pub use ode::{averaged_generator, integrate_averaged_equation, integrate_master_equation};
pub use params::ModelParams;
pub(crate) use roots::Kernel;
pub use roots::{characteristic_roots, CharacteristicRoots, Regime, CRITICAL_BAND};
pub use transfer::{
    asymptotic_state, diagonal_solution, evolve_density, offdiagonal_solution,
    pauli_transfer_matrix, PauliTransferMatrix,
};
