#![allow(dead_code)]

use qubit_thermalization::analytic::ModelParams;
use qubit_thermalization::qmat::{DensityMatrix, Matrix};
use qubit_thermalization::Complex;
use rand::Rng;

/// `G G† / tr(G G†)` for a complex matrix with entries in the unit box.
/// Entries come from `raw`, real parts first.
pub fn state_from_raw<const N: usize>(raw: &[f64]) -> DensityMatrix<N> {
    assert!(raw.len() >= 2 * N * N);
    let mut g = Matrix::<N>::zeros();
    for i in 0..N {
        for j in 0..N {
            let k = i * N + j;
            g.0[i][j] = Complex::new(raw[k], raw[N * N + k]);
        }
    }
    let m = g * g.dagger();
    let tr = m.trace().re;
    DensityMatrix::new(m.scale_real(1.0 / tr)).expect("Ginibre state")
}

pub fn random_state<const N: usize, R: Rng>(rng: &mut R) -> DensityMatrix<N> {
    loop {
        let raw: Vec<f64> = (0..2 * N * N)
            .map(|_| rng.random_range(-1.0..1.0))
            .collect();
        let m = raw.iter().map(|x| x * x).sum::<f64>();
        if m > 1e-3 {
            return state_from_raw(&raw);
        }
    }
}

/// Random pure state `|ψ⟩⟨ψ|`.
pub fn random_pure<const N: usize, R: Rng>(rng: &mut R) -> DensityMatrix<N> {
    let psi: [Complex; N] = std::array::from_fn(|_| {
        Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    });
    DensityMatrix::pure(psi).expect("nonzero vector")
}

pub fn random_params<R: Rng>(rng: &mut R, lambda: (f64, f64), omega: (f64, f64)) -> ModelParams {
    ModelParams::from_omega(
        rng.random_range(omega.0..=omega.1),
        rng.random_range(lambda.0..=lambda.1),
    )
    .unwrap()
}
