//! Goodness-of-fit tests used to check the shock samplers.

use statrs::distribution::{ChiSquared, ContinuousCDF};

/// Pearson chi-square statistic and upper-tail p-value of `observed` counts
/// against `expected` counts, with `bins − 1` degrees of freedom.
pub fn chi_square_test(observed: &[u64], expected: &[f64]) -> (f64, f64) {
    assert_eq!(observed.len(), expected.len(), "bin count mismatch");
    assert!(observed.len() >= 2, "need at least two bins");
    let stat: f64 = observed
        .iter()
        .zip(expected)
        .map(|(&o, &e)| {
            let d = o as f64 - e;
            d * d / e
        })
        .sum();
    let dist = ChiSquared::new((observed.len() - 1) as f64).expect("positive degrees of freedom");
    (stat, dist.sf(stat))
}

/// Two-sample Kolmogorov–Smirnov statistic `D` and its asymptotic p-value.
///
/// The p-value uses the Kolmogorov limit law evaluated at
/// `(√nₑ + 0.12 + 0.11/√nₑ)·D` with `nₑ = nm/(n + m)`.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> (f64, f64) {
    assert!(!a.is_empty() && !b.is_empty(), "samples must be non-empty");
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (n, m) = (a.len() as f64, b.len() as f64);

    let (mut i, mut j) = (0, 0);
    let mut d: f64 = 0.0;
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / n - j as f64 / m).abs());
    }

    let ne = n * m / (n + m);
    let s = ne.sqrt();
    (d, kolmogorov_sf((s + 0.12 + 0.11 / s) * d))
}

/// `P(K > x)` for the Kolmogorov distribution.
pub fn kolmogorov_sf(x: f64) -> f64 {
    if x < 0.2 {
        return 1.0;
    }
    let mut sum = 0.0;
    let mut sign = 1.0;
    for k in 1..=100 {
        let kf = k as f64;
        let term = (-2.0 * kf * kf * x * x).exp();
        sum += sign * term;
        if term < 1e-16 {
            break;
        }
        sign = -sign;
    }
    (2.0 * sum).clamp(0.0, 1.0)
}
