use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

/// Dense `N×N` complex matrix stored row-major.
///
/// No structural invariant is imposed: unitaries, Hamiltonians and
/// intermediate products all live here. States use
/// [`DensityMatrix`](super::DensityMatrix), which validates on construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix<const N: usize>(pub [[Complex64; N]; N]);

pub type Mat2 = Matrix<2>;
pub type Mat4 = Matrix<4>;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

impl<const N: usize> Default for Matrix<N> {
    fn default() -> Self {
        Self::zeros()
    }
}

impl<const N: usize> Matrix<N> {
    pub const fn zeros() -> Self {
        Matrix([[ZERO; N]; N])
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.0[i][i] = ONE;
        }
        m
    }

    pub fn from_diagonal(diag: [f64; N]) -> Self {
        let mut m = Self::zeros();
        for (i, &x) in diag.iter().enumerate() {
            m.0[i][i] = Complex64::new(x, 0.0);
        }
        m
    }

    /// Builds a matrix from real entries.
    pub fn from_real(rows: [[f64; N]; N]) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = Complex64::new(rows[i][j], 0.0);
            }
        }
        m
    }

    pub const fn dim(&self) -> usize {
        N
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = self.0[j][i].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> Complex64 {
        (0..N).map(|i| self.0[i][i]).sum()
    }

    pub fn diagonal(&self) -> [Complex64; N] {
        std::array::from_fn(|i| self.0[i][i])
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|z| z.is_finite())
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut m = *self;
        m.0.iter_mut().flatten().for_each(|z| *z *= s);
        m
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Largest entrywise deviation from Hermiticity, `max |m_ij − conj(m_ji)|`.
    pub fn hermiticity_error(&self) -> f64 {
        self.max_abs_diff(&self.dagger())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_error() <= tol
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        (*self * self.dagger()).max_abs_diff(&Self::identity()) <= tol
    }

    /// `(M + M†)/2`.
    pub fn hermitian_part(&self) -> Self {
        (*self + self.dagger()).scale_real(0.5)
    }

    /// `[self, other]`.
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    /// `U · self · U†`.
    pub fn conjugated_by(&self, u: &Self) -> Self {
        *u * *self * u.dagger()
    }
}

impl<const N: usize> Index<(usize, usize)> for Matrix<N> {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.0[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for Matrix<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.0[i][j]
    }
}

impl<const N: usize> Add for Matrix<N> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (a, b) in self.0.iter_mut().flatten().zip(rhs.0.iter().flatten()) {
            *a += b;
        }
        self
    }
}

impl<const N: usize> Sub for Matrix<N> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        for (a, b) in self.0.iter_mut().flatten().zip(rhs.0.iter().flatten()) {
            *a -= b;
        }
        self
    }
}

impl<const N: usize> Neg for Matrix<N> {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale_real(-1.0)
    }
}

impl<const N: usize> Mul for Matrix<N> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for k in 0..N {
                let a = self.0[i][k];
                if a == ZERO {
                    continue;
                }
                for j in 0..N {
                    m.0[i][j] += a * rhs.0[k][j];
                }
            }
        }
        m
    }
}

impl<const N: usize> Mul<Complex64> for Matrix<N> {
    type Output = Self;

    fn mul(self, rhs: Complex64) -> Self {
        self.scale(rhs)
    }
}

impl<const N: usize> Mul<f64> for Matrix<N> {
    type Output = Self;

    fn mul(self, rhs: f64) -> Self {
        self.scale_real(rhs)
    }
}

/// Kronecker product `A ⊗ B`.
///
/// Row index `2·i₁ + i₂` and column index `2·j₁ + j₂` map to
/// `A[i₁][j₁]·B[i₂][j₂]`, so the first factor is the first subsystem.
pub fn tensor(a: &Mat2, b: &Mat2) -> Mat4 {
    let mut m = Mat4::zeros();
    for i1 in 0..2 {
        for j1 in 0..2 {
            for i2 in 0..2 {
                for j2 in 0..2 {
                    m.0[2 * i1 + i2][2 * j1 + j2] = a.0[i1][j1] * b.0[i2][j2];
                }
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_times_matrix() {
        let m = Matrix([[c(1.0, 2.0), c(0.5, 0.0)], [c(0.0, -1.0), c(3.0, 0.0)]]);
        assert_eq!(Mat2::identity() * m, m);
        assert_eq!(m * Mat2::identity(), m);
    }

    #[test]
    fn dagger_and_hermiticity() {
        let m = Matrix([[c(1.0, 0.0), c(0.5, 0.25)], [c(0.5, -0.25), c(0.0, 0.0)]]);
        assert!(m.is_hermitian(0.0));
        let n = Matrix([[c(1.0, 0.0), c(0.5, 0.25)], [c(0.5, 0.25), c(0.0, 0.0)]]);
        assert!((n.hermiticity_error() - 0.5).abs() < 1e-15);
        assert!(n.hermitian_part().is_hermitian(0.0));
    }

    #[test]
    fn tensor_of_identities_and_sigma_z() {
        assert_eq!(
            tensor(&Mat2::identity(), &Mat2::identity()),
            Mat4::identity()
        );
        let z = Mat2::from_diagonal([1.0, -1.0]);
        assert_eq!(tensor(&z, &z), Mat4::from_diagonal([1.0, -1.0, -1.0, 1.0]));
    }

    #[test]
    fn tensor_index_convention() {
        // |1⟩⟨1| ⊗ |2⟩⟨2| occupies the (1,1) slot of the 4×4 matrix.
        let p1 = Mat2::from_diagonal([1.0, 0.0]);
        let p2 = Mat2::from_diagonal([0.0, 1.0]);
        assert_eq!(tensor(&p1, &p2), Mat4::from_diagonal([0.0, 1.0, 0.0, 0.0]));
        assert_eq!(tensor(&p2, &p1), Mat4::from_diagonal([0.0, 0.0, 1.0, 0.0]));
    }

    #[test]
    fn commutator_of_diagonals_vanishes() {
        let a = Mat2::from_diagonal([1.0, 2.0]);
        let b = Mat2::from_diagonal([-3.0, 0.5]);
        assert_eq!(a.commutator(&b), Mat2::zeros());
    }
}
