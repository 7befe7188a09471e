use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::qmat::{Mat2, PAULI};

/// Level energies, shock rate and `ħ` for one qubit.
///
/// The Hamiltonian is `diag(ε₁, ε₂)` and shocks arrive at rate `λ`, each
/// applying the flip `σ₁`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    eps1: f64,
    eps2: f64,
    lambda: f64,
    hbar: f64,
}

impl ModelParams {
    /// Parameters in natural units (`ħ = 1`).
    pub fn new(eps1: f64, eps2: f64, lambda: f64) -> Result<Self> {
        Self::with_hbar(eps1, eps2, lambda, 1.0)
    }

    pub fn with_hbar(eps1: f64, eps2: f64, lambda: f64, hbar: f64) -> Result<Self> {
        if !eps1.is_finite() {
            return Err(invalid("eps1", "must be finite"));
        }
        if !eps2.is_finite() {
            return Err(invalid("eps2", "must be finite"));
        }
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(invalid(
                "lambda",
                format!("must be positive and finite, got {lambda}"),
            ));
        }
        if !(hbar.is_finite() && hbar > 0.0) {
            return Err(invalid(
                "hbar",
                format!("must be positive and finite, got {hbar}"),
            ));
        }
        Ok(Self {
            eps1,
            eps2,
            lambda,
            hbar,
        })
    }

    /// `ε₁ = ω, ε₂ = 0, ħ = 1`.
    pub fn from_omega(omega: f64, lambda: f64) -> Result<Self> {
        Self::new(omega, 0.0, lambda)
    }

    pub fn eps1(&self) -> f64 {
        self.eps1
    }

    pub fn eps2(&self) -> f64 {
        self.eps2
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Level splitting `ω = (ε₁ − ε₂)/ħ`.
    pub fn omega(&self) -> f64 {
        (self.eps1 - self.eps2) / self.hbar
    }

    pub fn hamiltonian(&self) -> Mat2 {
        Mat2::from_diagonal([self.eps1, self.eps2])
    }

    /// Free propagator `U₀(s) = exp(−i s H/ħ)`.
    pub fn free_unitary(&self, s: f64) -> Mat2 {
        let phase = |e: f64| Complex64::from_polar(1.0, -e * s / self.hbar);
        let mut u = Mat2::zeros();
        u.0[0][0] = phase(self.eps1);
        u.0[1][1] = phase(self.eps2);
        u
    }

    /// Shock unitary `V = σ₁`.
    pub fn flip_unitary(&self) -> Mat2 {
        PAULI[1]
    }
}
