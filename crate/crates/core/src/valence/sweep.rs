use std::f64::consts::PI;

use num_complex::Complex64;

use crate::harmonic::DEFAULT_SOLVER_TOL;
use crate::map::StandardRationalMap;

use super::report::valence_report_with;

/// Fraction of perturbed maps `c + e` that keep `3n - 1` zeros, the offsets
/// `e` filling the disc of the given radius on a sunflower pattern.
pub fn openness_sweep(map: &StandardRationalMap, radius: f64, samples: usize) -> f64 {
    if radius == 0.0 || samples == 0 {
        return 1.0;
    }
    let golden = PI * (3.0 - 5f64.sqrt());
    let retained = (0..samples)
        .filter(|&k| {
            let rho = radius * ((k + 1) as f64 / samples as f64).sqrt();
            let offset = Complex64::from_polar(rho, golden * k as f64);
            let perturbed = map.with_c(map.c() + offset);
            valence_report_with(&perturbed, DEFAULT_SOLVER_TOL, None)
                .map(|report| report.extremal)
                .unwrap_or(false)
        })
        .count();
    retained as f64 / samples as f64
}
