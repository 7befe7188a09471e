//! Thermalization of qubits subject to random spin-flip pulses.
//!
//! A two-level system with Hamiltonian `diag(ε₁, ε₂)` is kicked by the flip
//! unitary `σ₁` at the arrival times of a Poisson process of rate `λ`.
//! Averaged over bath realizations the state obeys a linear equation whose
//! solution is available in closed form. Populations equalize at rate `2λ`;
//! coherences die out too unless `ε₁ = ε₂`, so the state relaxes to `I/2`.
//! Two qubits kicked by independent baths relax to `I/4 = I/2 ⊗ I/2`
//! whatever their initial correlations.
//!
//! The crate offers three independent routes to the averaged dynamics:
//!
//! * [`analytic`]: closed-form element solutions and the Pauli transfer
//!   matrix, plus a fixed-step RK4 integrator of the averaged equation.
//! * [`stochastic`]: exact sampling of shock trajectories and ensemble
//!   averages of the piecewise-unitary evolution.
//! * [`composite`]: two-qubit evolution in the Pauli-coefficient
//!   representation and its Monte Carlo counterpart.
//!
//! [`qmat`] holds the small fixed-size linear algebra, and [`cli`] drives
//! experiments from the `qtherm` binary.

#![allow(clippy::needless_range_loop)]

pub mod analytic;
pub mod cli;
pub mod composite;
pub mod error;
pub mod qmat;
pub mod stats;
pub mod stochastic;

pub use error::{Error, Result};
pub use num_complex::Complex64 as Complex;
