use num_complex::Complex64;
use serde::Serialize;

use super::ModelParams;

/// Relative width of the band `|λ² − ω²| ≤ CRITICAL_BAND·λ²` treated as
/// critically damped.
pub const CRITICAL_BAND: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// `λ > |ω|`, two real roots.
    Overdamped,
    /// `λ < |ω|`, complex-conjugate roots.
    Underdamped,
    /// `λ = |ω|`, a repeated root `−λ`.
    Critical,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Regime::Overdamped => "overdamped",
            Regime::Underdamped => "underdamped",
            Regime::Critical => "critical",
        })
    }
}

/// Roots `r± = −λ ± √(λ² − ω²)` of `x'' + 2λx' + ω²x = 0`, the equation
/// obeyed by the coherences.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CharacteristicRoots {
    pub r_plus: Complex64,
    pub r_minus: Complex64,
    pub regime: Regime,
}

pub fn characteristic_roots(params: &ModelParams) -> CharacteristicRoots {
    let lambda = params.lambda();
    let omega = params.omega();
    let disc = lambda * lambda - omega * omega;
    let real = |x: f64| Complex64::new(x, 0.0);

    if disc.abs() <= CRITICAL_BAND * lambda * lambda {
        CharacteristicRoots {
            r_plus: real(-lambda),
            r_minus: real(-lambda),
            regime: Regime::Critical,
        }
    } else if disc > 0.0 {
        let kappa = disc.sqrt();
        // −λ + κ written without cancellation.
        CharacteristicRoots {
            r_plus: real(-omega * omega / (lambda + kappa)),
            r_minus: real(-lambda - kappa),
            regime: Regime::Overdamped,
        }
    } else {
        let nu = (-disc).sqrt();
        CharacteristicRoots {
            r_plus: Complex64::new(-lambda, nu),
            r_minus: Complex64::new(-lambda, -nu),
            regime: Regime::Underdamped,
        }
    }
}

/// Fundamental solutions of `x'' + 2λx' + ω²x = 0`: `x(t) = x(0)·A(t) +
/// x'(0)·B(t)`, with `A(0) = 1, A'(0) = 0, B(0) = 0, B'(0) = 1`.
///
/// In terms of the roots, `B = (e^{r₊t} − e^{r₋t})/(r₊ − r₋)` and
/// `A = (r₊e^{r₋t} − r₋e^{r₊t})/(r₊ − r₋)`; both are real in every regime
/// and are evaluated here in real arithmetic. Inside the critical band the
/// confluent limit `A = e^{−λt}(1 + λt)`, `B = t e^{−λt}` is used.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Kernel {
    pub a: f64,
    pub b: f64,
}

impl Kernel {
    pub fn at(params: &ModelParams, t: f64) -> Self {
        let lambda = params.lambda();
        let roots = characteristic_roots(params);
        match roots.regime {
            Regime::Critical => {
                let decay = (-lambda * t).exp();
                Kernel {
                    a: decay * (1.0 + lambda * t),
                    b: t * decay,
                }
            }
            Regime::Underdamped => {
                let nu = roots.r_plus.im;
                let decay = (-lambda * t).exp();
                let sinc = (nu * t).sin() / nu;
                Kernel {
                    a: decay * ((nu * t).cos() + lambda * sinc),
                    b: decay * sinc,
                }
            }
            Regime::Overdamped => {
                let (rp, rm) = (roots.r_plus.re, roots.r_minus.re);
                let two_kappa = rp - rm;
                let b = if two_kappa * t < 1.0 {
                    (rm * t).exp() * (two_kappa * t).exp_m1() / two_kappa
                } else {
                    ((rp * t).exp() - (rm * t).exp()) / two_kappa
                };
                Kernel {
                    a: (rp * t).exp() - rp * b,
                    b,
                }
            }
        }
    }

    /// `B'(t) = A(t) − 2λB(t)`, the solution with `x(0) = 1, x'(0) = −2λ`.
    pub fn b_dot(&self, lambda: f64) -> f64 {
        self.a - 2.0 * lambda * self.b
    }
}
