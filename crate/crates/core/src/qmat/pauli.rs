use num_complex::Complex64;

use super::{tensor, DensityMatrix, DensityMatrix2, DensityMatrix4, Mat2, Mat4, Matrix};
use crate::error::{invalid, Error, Result};

const O: Complex64 = Complex64::new(0.0, 0.0);
const R: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// `σ₀ = I, σ₁, σ₂, σ₃`.
pub const PAULI: [Mat2; 4] = [
    Matrix([[R, O], [O, R]]),
    Matrix([[O, R], [R, O]]),
    Matrix([[O, Complex64::new(0.0, -1.0)], [I, O]]),
    Matrix([[R, O], [O, Complex64::new(-1.0, 0.0)]]),
];

pub fn pauli(mu: usize) -> Result<Mat2> {
    PAULI.get(mu).copied().ok_or(Error::PauliIndex(mu))
}

/// Bloch vector `r` of `ρ = (I + r·σ)/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochVector(pub [f64; 3]);

impl BlochVector {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        BlochVector([x, y, z])
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// `rᵢ = tr(ρ σᵢ)`.
pub fn to_bloch(rho: &DensityMatrix2) -> BlochVector {
    let [_, x, y, z] = pauli_vector(rho);
    BlochVector([x, y, z])
}

pub fn from_bloch(r: BlochVector) -> Result<DensityMatrix2> {
    if r.0.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite);
    }
    let norm = r.norm();
    if norm > 1.0 + super::POSITIVITY_TOL {
        return Err(Error::BlochNorm(norm));
    }
    Ok(from_pauli_vector([1.0, r.0[0], r.0[1], r.0[2]]))
}

/// Coefficients `(tr ρσ₀, tr ρσ₁, tr ρσ₂, tr ρσ₃) = (1, r₁, r₂, r₃)`.
pub fn pauli_vector(rho: &DensityMatrix2) -> [f64; 4] {
    let m = rho.matrix();
    let (a, b, d) = (m.0[0][0].re, m.0[0][1], m.0[1][1].re);
    // tr(ρσ₁) = 2 Re ρ₂₁, tr(ρσ₂) = 2 Im ρ₂₁ and ρ₂₁ = conj(ρ₁₂).
    [a + d, 2.0 * b.re, 0.0 - 2.0 * b.im, a - d]
}

/// Inverse of [`pauli_vector`]: `ρ = ½ Σ vμ σμ`. The caller guarantees the
/// result is a state (it is for vectors produced by a qubit channel).
pub(crate) fn from_pauli_vector(v: [f64; 4]) -> DensityMatrix2 {
    let half = 0.5;
    let m = Matrix([
        [
            Complex64::new(half * (v[0] + v[3]), 0.0),
            Complex64::new(half * v[1], -half * v[2]),
        ],
        [
            Complex64::new(half * v[1], half * v[2]),
            Complex64::new(half * (v[0] - v[3]), 0.0),
        ],
    ]);
    DensityMatrix::from_matrix_unchecked(m)
}

/// Two-qubit Pauli expansion `ρ = ¼ Σ C_{μν} σ_μ ⊗ σ_ν`, `C₀₀ = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PauliCoefficients2Q(pub [[f64; 4]; 4]);

impl PauliCoefficients2Q {
    pub fn new(c: [[f64; 4]; 4]) -> Result<Self> {
        if c.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        if (c[0][0] - 1.0).abs() > super::IDENTITY_TOL {
            return Err(invalid("C[0][0]", format!("must equal 1, got {}", c[0][0])));
        }
        Ok(Self(c))
    }

    /// Row-major flattening, `C₀₀, C₀₁, …, C₃₃`.
    pub fn flatten(&self) -> [f64; 16] {
        std::array::from_fn(|k| self.0[k / 4][k % 4])
    }

    /// `ρ = ¼ Σ C_{μν} σ_μ ⊗ σ_ν`, not validated.
    pub fn to_matrix(&self) -> Mat4 {
        let mut m = Mat4::zeros();
        for mu in 0..4 {
            for nu in 0..4 {
                let c = self.0[mu][nu];
                if c != 0.0 {
                    m = m + tensor(&PAULI[mu], &PAULI[nu]).scale_real(0.25 * c);
                }
            }
        }
        m
    }
}

/// `C_{μν} = tr(ρ (σ_μ ⊗ σ_ν))`.
pub fn pauli_coeffs(rho: &DensityMatrix4) -> PauliCoefficients2Q {
    let m = rho.matrix();
    let mut c = [[0.0; 4]; 4];
    for (mu, row) in c.iter_mut().enumerate() {
        for (nu, entry) in row.iter_mut().enumerate() {
            *entry = (*m * tensor(&PAULI[mu], &PAULI[nu])).trace().re;
        }
    }
    PauliCoefficients2Q(c)
}

pub fn from_pauli_coeffs(c: &PauliCoefficients2Q) -> Result<DensityMatrix4> {
    DensityMatrix4::new(c.to_matrix())
}
