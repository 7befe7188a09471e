use num_complex::Complex64;

use super::{eigenvalues_hermitian, tensor, Mat2, Mat4, Matrix};
use crate::error::{Error, Result};

/// Slack for Hermiticity and unit trace.
pub const IDENTITY_TOL: f64 = 1e-12;
/// Slack for positivity: eigenvalues down to `-POSITIVITY_TOL` are accepted.
pub const POSITIVITY_TOL: f64 = 1e-10;

/// A validated quantum state: Hermitian, unit trace, positive semidefinite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix<const N: usize> {
    m: Matrix<N>,
}

pub type DensityMatrix2 = DensityMatrix<2>;
pub type DensityMatrix4 = DensityMatrix<4>;

impl<const N: usize> DensityMatrix<N> {
    /// Validates `m` and stores its Hermitian part, so the stored matrix is
    /// exactly Hermitian.
    pub fn new(m: Matrix<N>) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        let herr = m.hermiticity_error();
        if herr > IDENTITY_TOL {
            return Err(Error::NotHermitian(herr));
        }
        let h = m.hermitian_part();
        let tr = h.trace().re;
        if (tr - 1.0).abs() > IDENTITY_TOL {
            return Err(Error::Trace(tr));
        }
        let lowest = eigenvalues_hermitian(&h)?[0];
        if lowest < -POSITIVITY_TOL {
            return Err(Error::NegativeEigenvalue(lowest));
        }
        Ok(Self { m: h })
    }

    /// Wraps a matrix known to be a valid state, keeping only its Hermitian
    /// part.
    pub(crate) fn from_matrix_unchecked(m: Matrix<N>) -> Self {
        Self {
            m: m.hermitian_part(),
        }
    }

    /// `I/N`.
    pub fn maximally_mixed() -> Self {
        Self {
            m: Matrix::identity().scale_real(1.0 / N as f64),
        }
    }

    /// `|ψ⟩⟨ψ|` for a non-zero vector, normalized first.
    pub fn pure(psi: [Complex64; N]) -> Result<Self> {
        let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !norm.is_finite() || norm == 0.0 {
            return Err(crate::error::invalid(
                "psi",
                "state vector must be finite and non-zero",
            ));
        }
        let mut m = Matrix::zeros();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = psi[i] * psi[j].conj() / (norm * norm);
            }
        }
        Ok(Self::from_matrix_unchecked(m))
    }

    pub fn matrix(&self) -> &Matrix<N> {
        &self.m
    }

    pub fn into_matrix(self) -> Matrix<N> {
        self.m
    }

    /// Eigenvalues, ascending.
    pub fn eigenvalues(&self) -> [f64; N] {
        eigenvalues_hermitian(&self.m).expect("density matrix is Hermitian")
    }

    /// `tr(ρ²)`, in `[1/N, 1]`.
    pub fn purity(&self) -> f64 {
        purity(self)
    }

    /// Von Neumann entropy in nats.
    pub fn entropy(&self) -> Result<f64> {
        von_neumann_entropy(self)
    }

    /// Conjugation `U ρ U†` by a unitary.
    pub fn conjugated_by(&self, u: &Matrix<N>) -> Self {
        Self::from_matrix_unchecked(self.m.conjugated_by(u))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.m.max_abs_diff(&other.m)
    }
}

impl DensityMatrix2 {
    /// `|1⟩⟨1|`, the level with energy `ε₁`.
    pub fn excited() -> Self {
        Self {
            m: Mat2::from_diagonal([1.0, 0.0]),
        }
    }

    /// `|2⟩⟨2|`, the level with energy `ε₂`.
    pub fn ground() -> Self {
        Self {
            m: Mat2::from_diagonal([0.0, 1.0]),
        }
    }

    /// `(I + σ₁)/2`.
    pub fn plus() -> Self {
        Self {
            m: Mat2::from_real([[0.5, 0.5], [0.5, 0.5]]),
        }
    }

    /// Population of level 1, `ρ₁₁`.
    pub fn a(&self) -> f64 {
        self.m.0[0][0].re
    }

    /// Coherence `ρ₁₂`.
    pub fn b(&self) -> Complex64 {
        self.m.0[0][1]
    }

    /// Coherence `ρ₂₁ = conj(ρ₁₂)`.
    pub fn c(&self) -> Complex64 {
        self.m.0[1][0]
    }

    /// Population of level 2, `ρ₂₂`.
    pub fn d(&self) -> f64 {
        self.m.0[1][1].re
    }
}

/// `tr(ρ²)`.
pub fn purity<const N: usize>(rho: &DensityMatrix<N>) -> f64 {
    rho.m.0.iter().flatten().map(|z| z.norm_sqr()).sum()
}

/// `S(ρ) = −Σ pᵢ ln pᵢ` over the spectrum, with `0 ln 0 = 0`.
///
/// Eigenvalues in `[−1e-10, 0]` count as zero; anything lower is rejected.
pub fn von_neumann_entropy<const N: usize>(rho: &DensityMatrix<N>) -> Result<f64> {
    entropy_of_spectrum(&eigenvalues_hermitian(&rho.m)?)
}

pub fn entropy_of_spectrum(spectrum: &[f64]) -> Result<f64> {
    let mut s = 0.0;
    for &p in spectrum {
        if p < -POSITIVITY_TOL {
            return Err(Error::NegativeEigenvalue(p));
        }
        if p > 0.0 {
            s -= p * p.ln();
        }
    }
    Ok(s)
}

/// `½ Σ |eig(A − B)|`, in `[0, 1]`. Mismatched dimensions are a type error.
pub fn trace_distance<const N: usize>(a: &DensityMatrix<N>, b: &DensityMatrix<N>) -> f64 {
    let diff = a.m - b.m;
    let eig = eigenvalues_hermitian(&diff).expect("difference of states is Hermitian");
    0.5 * eig.iter().map(|x| x.abs()).sum::<f64>()
}

/// Which factor of a two-qubit system to trace out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    First,
    Second,
}

/// Traces out `subsystem`, returning the marginal of the other qubit.
pub fn partial_trace(rho: &DensityMatrix4, subsystem: Subsystem) -> DensityMatrix2 {
    let m = &rho.m.0;
    let mut out = Mat2::zeros();
    for i in 0..2 {
        for j in 0..2 {
            out.0[i][j] = match subsystem {
                Subsystem::Second => m[2 * i][2 * j] + m[2 * i + 1][2 * j + 1],
                Subsystem::First => m[i][j] + m[2 + i][2 + j],
            };
        }
    }
    DensityMatrix::from_matrix_unchecked(out)
}

/// `ρ_A ⊗ ρ_B` as a two-qubit state.
pub fn tensor_states(a: &DensityMatrix2, b: &DensityMatrix2) -> DensityMatrix4 {
    DensityMatrix::from_matrix_unchecked(tensor(&a.m, &b.m))
}

impl From<DensityMatrix2> for Mat2 {
    fn from(rho: DensityMatrix2) -> Self {
        rho.m
    }
}

impl From<DensityMatrix4> for Mat4 {
    fn from(rho: DensityMatrix4) -> Self {
        rho.m
    }
}
