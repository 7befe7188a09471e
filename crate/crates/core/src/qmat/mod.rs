//! Fixed-size complex linear algebra for one and two qubits.

mod density;
mod eigen;
mod mat;
mod pauli;

pub use density::{
    entropy_of_spectrum, partial_trace, purity, tensor_states, trace_distance, von_neumann_entropy,
    DensityMatrix, DensityMatrix2, DensityMatrix4, Subsystem, IDENTITY_TOL, POSITIVITY_TOL,
};
pub use eigen::{eigenvalues_hermitian, eigh, HERMITIAN_TOL};
pub use mat::{tensor, Mat2, Mat4, Matrix};
pub(crate) use pauli::from_pauli_vector;
pub use pauli::{
    from_bloch, from_pauli_coeffs, pauli, pauli_coeffs, pauli_vector, to_bloch, BlochVector,
    PauliCoefficients2Q, PAULI,
};
