//! Closed-form averaged evolution.
//!
//! Populations and coherences decouple. Writing `ρ = (a b; c d)`:
//!
//! ```text
//! a' = λ(d − a)              d' = −λ(d − a)
//! b' = −iωb − λ(b − c)       c' = iωc + λ(b − c)
//! ```
//!
//! so `a − d` decays at rate `2λ` and `b ± c` both solve
//! `x'' + 2λx' + ω²x = 0`. On Bloch coordinates this reads
//! `r₁' = −ωr₂`, `r₂' = ωr₁ − 2λr₂`, `r₃' = −2λr₃`.
//!
//! Images of the Pauli basis under the averaged channel `u(t)`:
//!
//! ```text
//! σ₀ ↦ σ₀
//! σ₁ ↦ f_a σ₁ + f_b σ₂
//! σ₂ ↦ −f_b σ₁ + g σ₂
//! σ₃ ↦ e^{−2λt} σ₃
//! ```
//!
//! with `f_a = (r₊e^{r₋t} − r₋e^{r₊t})/(r₊ − r₋)`,
//! `f_b = ω(e^{r₊t} − e^{r₋t})/(r₊ − r₋)` and
//! `g = −[(r₋ + 2λ)e^{r₊t} − (r₊ + 2λ)e^{r₋t}]/(r₊ − r₋)`.
//! Note the sign of `f_a`: it is the one that makes `u(0)` the identity.
//!
//! For `λ > ω` the slow coherence mode decays only at rate
//! `|r₊| = ω²/(λ + √(λ² − ω²)) < λ`, and at `ω = 0` the `σ₁` component is
//! conserved.

use num_complex::Complex64;

use super::{Kernel, ModelParams};
use crate::error::{invalid, Result};
use crate::qmat::{from_pauli_vector, pauli_vector, DensityMatrix2};

fn check_time(t: f64) -> Result<()> {
    if !(t.is_finite() && t >= 0.0) {
        return Err(invalid(
            "t",
            format!("must be finite and non-negative, got {t}"),
        ));
    }
    Ok(())
}

/// Populations `(a(t), d(t))` from `(a(0), d(0))`.
pub fn diagonal_solution(a0: f64, d0: f64, lambda: f64, t: f64) -> Result<(f64, f64)> {
    check_time(t)?;
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(invalid(
            "lambda",
            format!("must be positive and finite, got {lambda}"),
        ));
    }
    let e = (-2.0 * lambda * t).exp();
    let a = 0.5 * a0 * (1.0 + e) + 0.5 * d0 * (1.0 - e);
    let d = 0.5 * a0 * (1.0 - e) + 0.5 * d0 * (1.0 + e);
    Ok((a, d))
}

/// Coherences `(b(t), c(t))` from `(b(0), c(0))`.
///
/// Initial slopes follow from the coherence equations:
/// `b'(0) = −iωb₀ − λ(b₀ − c₀)`, `c'(0) = iωc₀ + λ(b₀ − c₀)`.
/// `b₀` and `c₀` need not be conjugate.
pub fn offdiagonal_solution(
    b0: Complex64,
    c0: Complex64,
    params: &ModelParams,
    t: f64,
) -> Result<(Complex64, Complex64)> {
    check_time(t)?;
    let (omega, lambda) = (params.omega(), params.lambda());
    let i = Complex64::i();
    let b_dot0 = -i * omega * b0 - lambda * (b0 - c0);
    let c_dot0 = i * omega * c0 + lambda * (b0 - c0);
    let k = Kernel::at(params, t);
    Ok((b0 * k.a + b_dot0 * k.b, c0 * k.a + c_dot0 * k.b))
}

/// Real `4×4` matrix of the averaged channel in the basis `σ₀..σ₃`.
///
/// Column `μ` holds the Pauli coefficients of `u(t)(σ_μ)`, so a coefficient
/// vector `v = (tr ρσ₀, …, tr ρσ₃)` evolves as `v(t) = M(t)·v(0)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PauliTransferMatrix {
    m: [[f64; 4]; 4],
    t: f64,
}

impl PauliTransferMatrix {
    pub fn identity() -> Self {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self { m, t: 0.0 }
    }

    pub fn matrix(&self) -> &[[f64; 4]; 4] {
        &self.m
    }

    pub fn time(&self) -> f64 {
        self.t
    }

    pub fn apply(&self, v: [f64; 4]) -> [f64; 4] {
        std::array::from_fn(|i| (0..4).map(|j| self.m[i][j] * v[j]).sum())
    }

    /// Matrix product `self · other`, the channel at time `t_self + t_other`
    /// when both come from the same parameters.
    pub fn compose(&self, other: &Self) -> Self {
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = (0..4).map(|k| self.m[i][k] * other.m[k][j]).sum();
            }
        }
        Self {
            m,
            t: self.t + other.t,
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.m
            .iter()
            .flatten()
            .zip(other.m.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Applies the channel to a single-qubit state.
    pub fn apply_to_state(&self, rho: &DensityMatrix2) -> DensityMatrix2 {
        from_pauli_vector(self.apply(pauli_vector(rho)))
    }
}

pub fn pauli_transfer_matrix(params: &ModelParams, t: f64) -> Result<PauliTransferMatrix> {
    check_time(t)?;
    let lambda = params.lambda();
    let k = Kernel::at(params, t);
    let f_a = k.a;
    let f_b = params.omega() * k.b;
    let g = k.b_dot(lambda);
    let m = [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, f_a, 0.0 - f_b, 0.0],
        [0.0, f_b, g, 0.0],
        [0.0, 0.0, 0.0, (-2.0 * lambda * t).exp()],
    ];
    Ok(PauliTransferMatrix { m, t })
}

/// Bath-averaged state at time `t`.
pub fn evolve_density(
    rho0: &DensityMatrix2,
    params: &ModelParams,
    t: f64,
) -> Result<DensityMatrix2> {
    Ok(pauli_transfer_matrix(params, t)?.apply_to_state(rho0))
}

/// Equilibrium state `I/2`, the `t → ∞` limit whenever `ω ≠ 0`.
pub fn asymptotic_state() -> DensityMatrix2 {
    DensityMatrix2::maximally_mixed()
}
