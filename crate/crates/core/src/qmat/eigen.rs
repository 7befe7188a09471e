//! Eigen-decomposition of small Hermitian matrices.
//!
//! `2×2` spectra come from the trace/determinant closed form. Anything larger
//! goes through cyclic complex Jacobi rotations, which also yield the
//! eigenbasis.

use num_complex::Complex64;

use super::Matrix;
use crate::error::{Error, Result};

/// Hermiticity slack accepted by the eigen-solvers.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Off-diagonal Frobenius norm at which Jacobi sweeps stop, relative to
/// `max(1, ‖M‖_F)`.
const JACOBI_TOL: f64 = 1e-13;
const MAX_SWEEPS: usize = 64;

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn eigenvalues_hermitian<const N: usize>(m: &Matrix<N>) -> Result<[f64; N]> {
    check_hermitian(m)?;
    if N == 2 {
        let [lo, hi] = closed_form_2x2(m.0[0][0].re, m.0[1][1].re, m.0[0][1]);
        let mut out = [0.0; N];
        out[0] = lo;
        out[1] = hi;
        return Ok(out);
    }
    Ok(jacobi(m).0)
}

/// Eigenvalues (ascending) and the unitary whose columns are the matching
/// eigenvectors, `M = V · diag(λ) · V†`.
pub fn eigh<const N: usize>(m: &Matrix<N>) -> Result<([f64; N], Matrix<N>)> {
    check_hermitian(m)?;
    Ok(jacobi(m))
}

fn check_hermitian<const N: usize>(m: &Matrix<N>) -> Result<()> {
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let err = m.hermiticity_error();
    if err > HERMITIAN_TOL {
        return Err(Error::NotHermitian(err));
    }
    Ok(())
}

fn closed_form_2x2(a: f64, d: f64, b: Complex64) -> [f64; 2] {
    let mean = 0.5 * (a + d);
    let half_gap = (0.5 * (a - d)).hypot(b.norm());
    [mean - half_gap, mean + half_gap]
}

fn off_diagonal_norm<const N: usize>(m: &Matrix<N>) -> f64 {
    let mut s = 0.0;
    for i in 0..N {
        for j in 0..N {
            if i != j {
                s += m.0[i][j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn jacobi<const N: usize>(m: &Matrix<N>) -> ([f64; N], Matrix<N>) {
    let mut a = m.hermitian_part();
    let mut v = Matrix::<N>::identity();
    let tol = JACOBI_TOL * m.frobenius_norm().max(1.0);

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) < tol {
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                let apq = a.0[p][q];
                let mag = apq.norm();
                if mag == 0.0 {
                    continue;
                }
                // Phase e^{-iφ} on column q makes the pivot real, then a real
                // symmetric rotation annihilates it.
                let phase = (apq / mag).conj();
                let theta = (a.0[q][q].re - a.0[p][p].re) / (2.0 * mag);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;

                let mut w = Matrix::<N>::identity();
                w.0[p][p] = Complex64::new(c, 0.0);
                w.0[p][q] = Complex64::new(s, 0.0);
                w.0[q][p] = phase * -s;
                w.0[q][q] = phase * c;

                a = w.dagger() * a * w;
                a.0[p][q] = Complex64::new(0.0, 0.0);
                a.0[q][p] = Complex64::new(0.0, 0.0);
                v = v * w;
            }
        }
    }

    let mut order: [usize; N] = std::array::from_fn(|i| i);
    order.sort_by(|&i, &j| a.0[i][i].re.total_cmp(&a.0[j][j].re));
    let values = std::array::from_fn(|k| a.0[order[k]][order[k]].re);
    let mut vectors = Matrix::<N>::zeros();
    for (k, &src) in order.iter().enumerate() {
        for row in 0..N {
            vectors.0[row][k] = v.0[row][src];
        }
    }
    (values, vectors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmat::{pauli, Mat2, Mat4};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn sigma_z_spectrum() {
        assert_eq!(
            eigenvalues_hermitian(&pauli(3).unwrap()).unwrap(),
            [-1.0, 1.0]
        );
    }

    #[test]
    fn half_identity_spectrum() {
        let m = Mat2::identity().scale_real(0.5);
        assert_eq!(eigenvalues_hermitian(&m).unwrap(), [0.5, 0.5]);
    }

    #[test]
    fn diagonal_4x4_spectrum_is_sorted() {
        let m = Mat4::from_diagonal([0.0, 0.5, 0.5, 0.0]);
        assert_eq!(eigenvalues_hermitian(&m).unwrap(), [0.0, 0.0, 0.5, 0.5]);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = Matrix([[c(1.0, 0.0), c(1.0, 0.0)], [c(0.0, 0.0), c(0.0, 0.0)]]);
        assert!(matches!(
            eigenvalues_hermitian(&m),
            Err(Error::NotHermitian(_))
        ));
    }

    #[test]
    fn jacobi_agrees_with_closed_form_on_2x2() {
        let m = Matrix([[c(0.3, 0.0), c(0.2, -0.4)], [c(0.2, 0.4), c(-1.1, 0.0)]]);
        let closed = eigenvalues_hermitian(&m).unwrap();
        let (jac, _) = eigh(&m).unwrap();
        for (x, y) in closed.iter().zip(jac.iter()) {
            assert!((x - y).abs() < 1e-13);
        }
    }

    #[test]
    fn reconstructs_complex_hermitian_4x4() {
        let mut m = Mat4::zeros();
        let entries = [
            (0, 1, c(0.3, -0.7)),
            (0, 2, c(-0.2, 0.1)),
            (0, 3, c(0.05, 0.4)),
            (1, 2, c(0.6, 0.6)),
            (1, 3, c(-0.3, 0.0)),
            (2, 3, c(0.0, -0.9)),
        ];
        for &(i, j, z) in &entries {
            m.0[i][j] = z;
            m.0[j][i] = z.conj();
        }
        for (i, d) in [1.0, -0.5, 0.25, 2.0].into_iter().enumerate() {
            m.0[i][i] = c(d, 0.0);
        }
        let (vals, vecs) = eigh(&m).unwrap();
        assert!(vecs.is_unitary(1e-12));
        let rebuilt = vecs * Mat4::from_diagonal(vals) * vecs.dagger();
        assert!(rebuilt.max_abs_diff(&m) < 1e-12);
        assert!(vals.windows(2).all(|w| w[0] <= w[1]));
        let trace: f64 = vals.iter().sum();
        assert!((trace - 2.75).abs() < 1e-12);
    }
}
