//! Exact Monte Carlo over bath realizations.
//!
//! Shocks form a Poisson process of rate `λ`. Between shocks the qubit
//! evolves freely under `H`; at each shock the flip `V = σ₁` acts
//! instantaneously. Averaging `U(t) ρ₀ U(t)†` over realizations estimates
//! the averaged channel computed in closed form by [`crate::analytic`].

mod ensemble;
mod shocks;
mod trajectory;

pub(crate) use ensemble::reduce_ensemble;
pub use ensemble::{ensemble_average, EnsembleEstimate, BLOCK_SIZE, ROUNDING_FLOOR};
pub use shocks::{
    poisson_pmf, sample_exponential, sample_shock_times, sample_shock_times_conditional, RngSeed,
    ShockTrajectory,
};
pub use trajectory::{trajectory_density, trajectory_unitary};
