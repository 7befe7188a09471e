//! Two qubits kicked by independent baths.
//!
//! Each qubit carries its own shock process. In the expansion
//! `ρ = ¼ Σ C_{μν} σ_μ ⊗ σ_ν` the averaged dynamics acts factor by factor,
//! `C(t) = M_A(t) · C(0) · M_B(t)ᵀ`, where `M_A` and `M_B` are the
//! single-qubit Pauli transfer matrices. For `ω ≠ 0` every `M(t)` tends to
//! the projector onto `σ₀`, so any initial state (separable or entangled)
//! relaxes to `I/4 = I/2 ⊗ I/2`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::analytic::{evolve_density, pauli_transfer_matrix, ModelParams};
use crate::error::{invalid, Result};
use crate::qmat::{
    partial_trace, pauli_coeffs, pauli_vector, tensor, tensor_states, trace_distance,
    DensityMatrix, DensityMatrix2, DensityMatrix4, Mat4, PauliCoefficients2Q, Subsystem,
    IDENTITY_TOL,
};
use crate::stochastic::{
    reduce_ensemble, sample_shock_times, trajectory_unitary, EnsembleEstimate, RngSeed,
};

/// Parameters of the two independently kicked qubits.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwoQubitParams {
    pub qubit_a: ModelParams,
    pub qubit_b: ModelParams,
}

impl TwoQubitParams {
    pub fn new(qubit_a: ModelParams, qubit_b: ModelParams) -> Self {
        Self { qubit_a, qubit_b }
    }

    /// Identical parameters for both qubits.
    pub fn symmetric(params: ModelParams) -> Self {
        Self::new(params, params)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeparableTerm {
    pub weight: f64,
    pub rho_a: DensityMatrix2,
    pub rho_b: DensityMatrix2,
}

/// Convex combination `Σ pₖ ρ_{A,k} ⊗ ρ_{B,k}`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeparableSum {
    terms: Vec<SeparableTerm>,
}

impl SeparableSum {
    pub fn new(terms: Vec<SeparableTerm>) -> Result<Self> {
        if terms.is_empty() {
            return Err(invalid("terms", "a separable sum needs at least one term"));
        }
        if terms
            .iter()
            .any(|t| !(t.weight.is_finite() && t.weight > 0.0))
        {
            return Err(invalid("weight", "weights must be positive"));
        }
        let total: f64 = terms.iter().map(|t| t.weight).sum();
        if (total - 1.0).abs() > IDENTITY_TOL {
            return Err(invalid(
                "weight",
                format!("weights sum to {total}, expected 1"),
            ));
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[SeparableTerm] {
        &self.terms
    }

    /// The two-qubit density matrix the sum represents.
    pub fn assemble(&self) -> DensityMatrix4 {
        let m = self.terms.iter().fold(Mat4::zeros(), |acc, t| {
            acc + tensor(t.rho_a.matrix(), t.rho_b.matrix()).scale_real(t.weight)
        });
        DensityMatrix::from_matrix_unchecked(m)
    }
}

/// `½(|1⟩⟨1| ⊗ |2⟩⟨2| + |2⟩⟨2| ⊗ |1⟩⟨1|)` as a separable sum.
pub fn clauser_separable_sum() -> SeparableSum {
    let (up, down) = (DensityMatrix2::excited(), DensityMatrix2::ground());
    SeparableSum::new(vec![
        SeparableTerm {
            weight: 0.5,
            rho_a: up,
            rho_b: down,
        },
        SeparableTerm {
            weight: 0.5,
            rho_a: down,
            rho_b: up,
        },
    ])
    .expect("weights sum to one")
}

/// The classically correlated state `diag(0, ½, ½, 0)`: separable, mixed
/// (purity ½) and symmetric under exchange of the qubits.
pub fn example_state_clauser() -> DensityMatrix4 {
    clauser_separable_sum().assemble()
}

/// The Bell state `(|11⟩ + |22⟩)/√2`.
pub fn bell_phi_plus() -> DensityMatrix4 {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let z = Complex64::new(0.0, 0.0);
    DensityMatrix4::pure([Complex64::new(s, 0.0), z, z, Complex64::new(s, 0.0)])
        .expect("non-zero vector")
}

/// Applies the two transfer matrices to a coefficient table.
fn transform_coeffs(
    c: &PauliCoefficients2Q,
    params: &TwoQubitParams,
    t: f64,
) -> Result<PauliCoefficients2Q> {
    let ma = pauli_transfer_matrix(&params.qubit_a, t)?;
    let mb = pauli_transfer_matrix(&params.qubit_b, t)?;
    let (ma, mb) = (ma.matrix(), mb.matrix());
    let mut out = [[0.0; 4]; 4];
    for (alpha, row) in out.iter_mut().enumerate() {
        for (beta, entry) in row.iter_mut().enumerate() {
            let mut s = 0.0;
            for mu in 0..4 {
                if ma[alpha][mu] == 0.0 {
                    continue;
                }
                for nu in 0..4 {
                    s += ma[alpha][mu] * c.0[mu][nu] * mb[beta][nu];
                }
            }
            *entry = s;
        }
    }
    Ok(PauliCoefficients2Q(out))
}

/// Bath-averaged two-qubit state at time `t`, computed on the Pauli table.
///
/// No separability check is made; entangled inputs are fine.
pub fn evolve_two_qubit(
    rho0: &DensityMatrix4,
    params: &TwoQubitParams,
    t: f64,
) -> Result<DensityMatrix4> {
    let c = transform_coeffs(&pauli_coeffs(rho0), params, t)?;
    Ok(DensityMatrix::from_matrix_unchecked(c.to_matrix()))
}

/// Evolves every factor of a separable sum; weights are unchanged.
pub fn evolve_separable_sum(
    s: &SeparableSum,
    params: &TwoQubitParams,
    t: f64,
) -> Result<SeparableSum> {
    let terms = s
        .terms
        .iter()
        .map(|term| {
            Ok(SeparableTerm {
                weight: term.weight,
                rho_a: evolve_density(&term.rho_a, &params.qubit_a, t)?,
                rho_b: evolve_density(&term.rho_b, &params.qubit_b, t)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(SeparableSum { terms })
}

/// Equilibrium `I/4 = I/2 ⊗ I/2`.
pub fn asymptotic_two_qubit() -> DensityMatrix4 {
    DensityMatrix4::maximally_mixed()
}

/// Equilibrium when only the first qubit is coupled to the bath:
/// `I/2 ⊗ Σₖ pₖ ρ_{B,k}`.
///
/// Correlations are destroyed, but the isolated partner ends in the weighted
/// average of its factors, which is pure only if all its factors coincide.
pub fn isolated_partner_equilibrium(s: &SeparableSum) -> DensityMatrix4 {
    let partner = s.terms.iter().fold(crate::qmat::Mat2::zeros(), |acc, t| {
        acc + t.rho_b.matrix().scale_real(t.weight)
    });
    tensor_states(
        &DensityMatrix2::maximally_mixed(),
        &DensityMatrix::from_matrix_unchecked(partner),
    )
}

/// Trace distance between `ρ` and the product of its marginals; zero exactly
/// for product states.
pub fn factorization_gap(rho: &DensityMatrix4) -> f64 {
    let first = partial_trace(rho, Subsystem::Second);
    let second = partial_trace(rho, Subsystem::First);
    trace_distance(rho, &tensor_states(&first, &second))
}

fn two_qubit_sample(
    rho0: &DensityMatrix4,
    params: &TwoQubitParams,
    t: f64,
    seed: RngSeed,
    i: u64,
) -> Result<DensityMatrix4> {
    let mut rng_a = seed.stream(2 * i);
    let mut rng_b = seed.stream(2 * i + 1);
    let traj_a = sample_shock_times(params.qubit_a.lambda(), t, &mut rng_a)?;
    let traj_b = sample_shock_times(params.qubit_b.lambda(), t, &mut rng_b)?;
    let ua = trajectory_unitary(&traj_a, &params.qubit_a, t)?;
    let ub = trajectory_unitary(&traj_b, &params.qubit_b, t)?;
    Ok(rho0.conjugated_by(&tensor(&ua, &ub)))
}

fn check_time(t: f64) -> Result<()> {
    if !(t.is_finite() && t >= 0.0) {
        return Err(invalid(
            "t",
            format!("must be finite and non-negative, got {t}"),
        ));
    }
    Ok(())
}

/// Monte Carlo estimate of the two-qubit averaged state.
///
/// Realization `i` draws qubit A's shocks from `seed.stream(2i)` and qubit
/// B's from `seed.stream(2i + 1)`, then conjugates by `U_A ⊗ U_B`.
pub fn two_qubit_ensemble_average(
    rho0: &DensityMatrix4,
    params: &TwoQubitParams,
    t: f64,
    n_traj: u64,
    seed: RngSeed,
) -> Result<EnsembleEstimate<4>> {
    check_time(t)?;
    reduce_ensemble(n_traj, |i| {
        Ok(two_qubit_sample(rho0, params, t, seed, i)?.into_matrix())
    })
    .map(|raw| raw.into_state_estimate())
}

/// Same realizations as [`two_qubit_ensemble_average`], averaged in the
/// Pauli representation: the mean coefficient table and the standard error
/// of each `C_{μν}`.
pub fn two_qubit_ensemble_coefficients(
    rho0: &DensityMatrix4,
    params: &TwoQubitParams,
    t: f64,
    n_traj: u64,
    seed: RngSeed,
) -> Result<(PauliCoefficients2Q, [[f64; 4]; 4])> {
    check_time(t)?;
    let raw = reduce_ensemble(n_traj, |i| {
        let c = pauli_coeffs(&two_qubit_sample(rho0, params, t, seed, i)?);
        Ok(Mat4::from_real(c.0))
    })?;
    let mean = std::array::from_fn(|mu| std::array::from_fn(|nu| raw.mean.0[mu][nu].re));
    Ok((PauliCoefficients2Q(mean), raw.std_err_re))
}

/// Largest supported register for [`n_qubit_occupancy_distribution`].
pub const MAX_OCCUPANCY_QUBITS: usize = 20;

/// Equilibrium distribution of the number of qubits in level 1 among `n`
/// independent qubits, each at `I/2`: `Binomial(n, ½)`.
pub fn n_qubit_occupancy_distribution(n_qubits: usize) -> Result<Vec<f64>> {
    if !(1..=MAX_OCCUPANCY_QUBITS).contains(&n_qubits) {
        return Err(invalid(
            "n_qubits",
            format!("must be in 1..={MAX_OCCUPANCY_QUBITS}, got {n_qubits}"),
        ));
    }
    let denom = (1u64 << n_qubits) as f64;
    let mut binom = 1u64;
    let mut out = Vec::with_capacity(n_qubits + 1);
    for k in 0..=n_qubits as u64 {
        out.push(binom as f64 / denom);
        binom = binom * (n_qubits as u64 - k) / (k + 1);
    }
    Ok(out)
}

/// Bloch vector norm of the partner's average, `‖Σ pₖ nₖ‖`, for pure
/// factors `(I + nₖ·σ)/2`.
pub fn partner_bloch_norm(s: &SeparableSum) -> f64 {
    let mut n = [0.0; 3];
    for t in &s.terms {
        let v = pauli_vector(&t.rho_b);
        for k in 0..3 {
            n[k] += t.weight * v[k + 1];
        }
    }
    n.iter().map(|x| x * x).sum::<f64>().sqrt()
}
