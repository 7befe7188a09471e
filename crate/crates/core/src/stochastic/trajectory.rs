use super::ShockTrajectory;
use crate::analytic::ModelParams;
use crate::error::{Error, Result};
use crate::qmat::{DensityMatrix2, Mat2};

/// Piecewise propagator `U₀(t − Tₙ) V U₀(Tₙ − Tₙ₋₁) V ⋯ V U₀(T₁)` built
/// from the shocks with `Tₖ ≤ t`.
///
/// The global phase is kept as is; it cancels in `UρU†`.
pub fn trajectory_unitary(traj: &ShockTrajectory, params: &ModelParams, t: f64) -> Result<Mat2> {
    if !(t >= 0.0 && t <= traj.horizon()) {
        return Err(Error::BeyondHorizon {
            t,
            horizon: traj.horizon(),
        });
    }
    let flip = params.flip_unitary();
    let mut u = Mat2::identity();
    let mut last = 0.0;
    for &shock in &traj.times()[..traj.count_until(t)] {
        u = flip * params.free_unitary(shock - last) * u;
        last = shock;
    }
    Ok(params.free_unitary(t - last) * u)
}

/// `U(t) ρ₀ U(t)†` for one bath realization.
pub fn trajectory_density(
    rho0: &DensityMatrix2,
    traj: &ShockTrajectory,
    params: &ModelParams,
    t: f64,
) -> Result<DensityMatrix2> {
    Ok(rho0.conjugated_by(&trajectory_unitary(traj, params, t)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmat::{from_bloch, BlochVector, PAULI};
    use num_complex::Complex64;

    fn params() -> ModelParams {
        ModelParams::new(1.7, -0.3, 1.0).unwrap()
    }

    #[test]
    fn no_shocks_is_free_evolution() {
        let p = params();
        let tr = ShockTrajectory::empty(2.0).unwrap();
        assert_eq!(
            trajectory_unitary(&tr, &p, 1.3).unwrap(),
            p.free_unitary(1.3)
        );
        let rho = DensityMatrix2::excited();
        assert!(
            trajectory_density(&rho, &tr, &p, 1.3)
                .unwrap()
                .max_abs_diff(&rho)
                < 1e-15
        );
    }

    #[test]
    fn one_shock() {
        let p = params();
        let tr = ShockTrajectory::new(vec![0.4], 1.0).unwrap();
        let expected = p.free_unitary(0.6) * PAULI[1] * p.free_unitary(0.4);
        assert!(
            trajectory_unitary(&tr, &p, 1.0)
                .unwrap()
                .max_abs_diff(&expected)
                < 1e-15
        );
        let out = trajectory_density(&DensityMatrix2::excited(), &tr, &p, 1.0).unwrap();
        assert!(out.max_abs_diff(&DensityMatrix2::ground()) < 1e-15);
        // Shocks after t are ignored.
        assert_eq!(
            trajectory_unitary(&tr, &p, 0.3).unwrap(),
            p.free_unitary(0.3)
        );
    }

    #[test]
    fn degenerate_levels_reduce_to_flips() {
        let p = ModelParams::new(0.8, 0.8, 1.0).unwrap();
        let tr = ShockTrajectory::new(vec![0.1, 0.35, 0.6, 0.9], 1.0).unwrap();
        let u = trajectory_unitary(&tr, &p, 1.0).unwrap();
        let phase = Complex64::from_polar(1.0, -0.8);
        assert!(u.max_abs_diff(&Mat2::identity().scale(phase)) < 1e-15);
        let u3 = trajectory_unitary(&tr, &p, 0.7).unwrap();
        let phase = Complex64::from_polar(1.0, -0.8 * 0.7);
        assert!(u3.max_abs_diff(&PAULI[1].scale(phase)) < 1e-15);
    }

    #[test]
    fn spectrum_is_preserved() {
        let p = params();
        let rho = from_bloch(BlochVector::new(0.2, -0.5, 0.3)).unwrap();
        let tr = ShockTrajectory::new(vec![0.2, 0.25, 1.1, 2.9], 3.0).unwrap();
        let u = trajectory_unitary(&tr, &p, 3.0).unwrap();
        assert!(u.is_unitary(1e-12));
        let out = trajectory_density(&rho, &tr, &p, 3.0).unwrap();
        let (e0, e1) = (rho.eigenvalues(), out.eigenvalues());
        assert!((e0[0] - e1[0]).abs() < 1e-12 && (e0[1] - e1[1]).abs() < 1e-12);
        assert!((out.purity() - rho.purity()).abs() < 1e-12);
    }

    #[test]
    fn beyond_horizon_is_an_error() {
        let tr = ShockTrajectory::empty(1.0).unwrap();
        assert!(matches!(
            trajectory_unitary(&tr, &params(), 1.5),
            Err(Error::BeyondHorizon { .. })
        ));
    }
}
