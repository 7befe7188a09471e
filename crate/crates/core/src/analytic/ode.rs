use num_complex::Complex64;

use super::ModelParams;
use crate::error::{invalid, Result};
use crate::qmat::{DensityMatrix2, Mat2};

/// Right-hand side of the averaged equation,
/// `dX/dt = (−i/ħ)[H, X] + λ(V X V† − X)`.
pub fn averaged_generator(x: &Mat2, params: &ModelParams) -> Mat2 {
    let h = params.hamiltonian();
    let v = params.flip_unitary();
    let coherent = h
        .commutator(x)
        .scale(Complex64::new(0.0, -1.0 / params.hbar()));
    let jumps = (x.conjugated_by(&v) - *x).scale_real(params.lambda());
    coherent + jumps
}

/// Integrates the averaged equation for an arbitrary initial matrix with
/// classical fixed-step RK4.
///
/// The step is `t/n` with `n = ⌈t/dt⌉`, so it never exceeds `dt`.
pub fn integrate_averaged_equation(
    x0: &Mat2,
    params: &ModelParams,
    t: f64,
    dt: f64,
) -> Result<Mat2> {
    if !(dt.is_finite() && dt > 0.0) {
        return Err(invalid(
            "dt",
            format!("must be positive and finite, got {dt}"),
        ));
    }
    if !(t.is_finite() && t >= 0.0) {
        return Err(invalid(
            "t",
            format!("must be finite and non-negative, got {t}"),
        ));
    }
    if t == 0.0 {
        return Ok(*x0);
    }
    let steps = (t / dt).ceil().max(1.0) as usize;
    let h = t / steps as f64;
    let f = |x: &Mat2| averaged_generator(x, params);

    let mut x = *x0;
    for _ in 0..steps {
        let k1 = f(&x);
        let k2 = f(&(x + k1.scale_real(0.5 * h)));
        let k3 = f(&(x + k2.scale_real(0.5 * h)));
        let k4 = f(&(x + k3.scale_real(h)));
        x = x + (k1 + k2.scale_real(2.0) + k3.scale_real(2.0) + k4).scale_real(h / 6.0);
    }
    Ok(x)
}

/// Bath-averaged state at time `t` by direct numerical integration.
pub fn integrate_master_equation(
    rho0: &DensityMatrix2,
    params: &ModelParams,
    t: f64,
    dt: f64,
) -> Result<DensityMatrix2> {
    let m = integrate_averaged_equation(rho0.matrix(), params, t, dt)?;
    DensityMatrix2::new(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmat::{from_bloch, BlochVector, Matrix};

    #[test]
    fn generator_components() {
        // H^×ρ = (ε₁ − ε₂)(0 b; −c 0) and (V♯ − I)ρ = (d−a c−b; b−c a−d).
        let p = ModelParams::new(2.5, 0.5, 0.7).unwrap();
        let (a, b, c, d) = (
            Complex64::new(0.6, 0.0),
            Complex64::new(0.1, 0.2),
            Complex64::new(0.1, -0.2),
            Complex64::new(0.4, 0.0),
        );
        let x = Matrix([[a, b], [c, d]]);
        let g = averaged_generator(&x, &p);
        let i = Complex64::i();
        let expected = Matrix([
            [0.7 * (d - a), -i * 2.0 * b + 0.7 * (c - b)],
            [i * 2.0 * c + 0.7 * (b - c), 0.7 * (a - d)],
        ]);
        assert!(g.max_abs_diff(&expected) < 1e-15);
        assert!(g.trace().norm() < 1e-15);
    }

    #[test]
    fn zero_time_returns_initial_state() {
        let rho = DensityMatrix2::plus();
        let p = ModelParams::from_omega(1.0, 1.0).unwrap();
        assert_eq!(integrate_master_equation(&rho, &p, 0.0, 1e-3).unwrap(), rho);
    }

    #[test]
    fn trace_is_preserved() {
        let rho = from_bloch(BlochVector::new(0.3, 0.5, -0.6)).unwrap();
        let p = ModelParams::from_omega(2.0, 1.0).unwrap();
        let out = integrate_averaged_equation(rho.matrix(), &p, 5.0, 1e-3).unwrap();
        assert!((out.trace() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn rejects_bad_step() {
        let p = ModelParams::from_omega(1.0, 1.0).unwrap();
        let rho = DensityMatrix2::plus();
        assert!(integrate_master_equation(&rho, &p, 1.0, 0.0).is_err());
        assert!(integrate_master_equation(&rho, &p, 1.0, -1e-3).is_err());
    }
}
