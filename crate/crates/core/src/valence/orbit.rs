use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::map::StandardRationalMap;

/// Trailing iterates checked for a revisit.
pub const PERIODIC_WINDOW: usize = 64;
/// Default revisit radius and convergence tolerance.
pub const REVISIT_RADIUS: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitDiagnostic {
    /// Iterates of `z -> conj(r(z))` after infinity; the first is `conj(c)`.
    pub orbit: Vec<Complex64>,
    pub limit: Complex64,
    /// `|r'(limit)|`.
    pub multiplier: f64,
    pub periodic_detected: bool,
}

/// Follow the anti-map from infinity until successive iterates differ by less
/// than `tol` or an iterate returns within `tol` of one of the previous
/// [`PERIODIC_WINDOW`] iterates. Landing on a zero of `p` sends the orbit back
/// to infinity and counts as a cycle.
pub fn orbit_of_infinity(
    map: &StandardRationalMap,
    max_iter: usize,
    tol: f64,
) -> Result<OrbitDiagnostic> {
    if max_iter < 100 {
        return Err(Error::InvalidInput(format!(
            "orbit needs max_iter >= 100, got {max_iter}"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidInput(format!(
            "orbit tolerance {tol} not positive"
        )));
    }
    let mut orbit = vec![map.c().conj()];
    let periodic = |orbit: Vec<Complex64>| {
        let limit = *orbit.last().expect("orbit is non-empty");
        OrbitDiagnostic {
            orbit,
            limit,
            multiplier: map.r_prime(limit).norm(),
            periodic_detected: true,
        }
    };
    for _ in 0..max_iter {
        let z = *orbit.last().expect("orbit is non-empty");
        if map.p().eval(z).norm() == 0.0 {
            return Ok(periodic(orbit));
        }
        let next = map.anti_map(z);
        if !next.is_finite() {
            return Ok(periodic(orbit));
        }
        if (next - z).norm() < tol {
            orbit.push(next);
            return Ok(OrbitDiagnostic {
                orbit,
                limit: next,
                multiplier: map.r_prime(next).norm(),
                periodic_detected: false,
            });
        }
        let window = orbit.len().saturating_sub(PERIODIC_WINDOW);
        let revisit = orbit[window..orbit.len() - 1]
            .iter()
            .any(|w| (w - next).norm() < tol);
        orbit.push(next);
        if revisit {
            return Ok(periodic(orbit));
        }
    }
    Err(Error::Inconclusive {
        iterations: max_iter,
    })
}
