use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::map::StandardRationalMap;
use crate::poly::{roots, ComplexPolynomial, RootSet};
use crate::valence::classify_zero_with_radius;

use super::eliminant::eliminant;
use super::newton::newton_polish;
use super::zero::HarmonicZero;

pub const DEFAULT_SOLVER_TOL: f64 = 1e-8;

/// Root tolerances tried in turn on the eliminant.
const ELIMINANT_ROOT_TOLS: [f64; 3] = [1e-13, 1e-11, 1e-9];
const POLISH_ITERS: usize = 60;
/// Slack applied to the forward-error estimate of an eliminant root.
const CONDITIONING_SLACK: f64 = 1e3;

#[derive(Debug, Clone, PartialEq)]
pub struct SolveDiagnostics {
    pub eliminant_degree: usize,
    pub eliminant_interpolated: bool,
    pub eliminant_roots: Vec<Complex64>,
    /// Eliminant roots that passed the genuineness filter.
    pub candidates: usize,
    /// Candidates whose Newton polish failed.
    pub polish_failures: usize,
    /// Polished candidates merged into an earlier zero.
    pub merged: usize,
    pub zeros: Vec<HarmonicZero>,
}

/// All zeros of `H`, i.e. all solutions of `conj(c) + 1/conj(p(z)) = z`,
/// sorted by real then imaginary part.
pub fn solve_fixed_points(map: &StandardRationalMap, tol: f64) -> Result<Vec<HarmonicZero>> {
    Ok(solve_fixed_points_detailed(map, tol)?.zeros)
}

pub fn solve_fixed_points_detailed(
    map: &StandardRationalMap,
    tol: f64,
) -> Result<SolveDiagnostics> {
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::InvalidInput(format!(
            "solver tolerance {tol} not in (0, 1)"
        )));
    }
    let elim = eliminant(map);
    let e = &elim.poly;
    let mut diag = SolveDiagnostics {
        eliminant_degree: e.degree(),
        eliminant_interpolated: elim.interpolated,
        eliminant_roots: Vec::new(),
        candidates: 0,
        polish_failures: 0,
        merged: 0,
        zeros: Vec::new(),
    };
    if e.degree() == 0 {
        return Ok(diag);
    }
    let root_set = eliminant_roots(e)?;
    let e_prime = e.derivative();
    let merge_radius = tol.sqrt();

    let mut located: Vec<Complex64> = Vec::new();
    for &u in &root_set.roots {
        let pu = map.p().eval(u);
        if pu.norm() == 0.0 {
            continue;
        }
        if map.genuineness_residual(u) > filter_threshold(map, e, &e_prime, u, tol) {
            continue;
        }
        diag.candidates += 1;
        let out = newton_polish(map, u, POLISH_ITERS, false);
        if !(out.residual <= 1e-10 * (1.0 + out.z.norm())) {
            diag.polish_failures += 1;
            continue;
        }
        if located.iter().any(|w| (w - out.z).norm() <= merge_radius) {
            diag.merged += 1;
            continue;
        }
        located.push(out.z);
    }
    diag.eliminant_roots = root_set.roots;

    let poles = if located.is_empty() {
        Vec::new()
    } else {
        roots(map.p(), 1e-12)?.roots
    };
    for (i, &z) in located.iter().enumerate() {
        let nearest_zero = located
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, w)| (w - z).norm())
            .fold(f64::INFINITY, f64::min);
        let nearest_pole = poles
            .iter()
            .map(|w| (w - z).norm())
            .fold(f64::INFINITY, f64::min);
        let radius = (10.0 * merge_radius)
            .min(0.4 * nearest_zero)
            .min(0.4 * nearest_pole);
        diag.zeros.push(classify_zero_with_radius(map, z, radius)?);
    }
    diag.zeros.sort_by(|a, b| {
        a.location
            .re
            .total_cmp(&b.location.re)
            .then(a.location.im.total_cmp(&b.location.im))
    });
    Ok(diag)
}

fn eliminant_roots(e: &ComplexPolynomial) -> Result<RootSet> {
    let mut last = None;
    for tol in ELIMINANT_ROOT_TOLS {
        match roots(e, tol) {
            Ok(rs) => return Ok(rs),
            Err(err @ Error::NonConvergence { .. }) => last = Some(err),
            Err(err) => return Err(err),
        }
    }
    Err(last.expect("at least one tolerance tried"))
}

/// Admissible violation of `conj(u) = c + 1/p(u)` at an eliminant root:
/// `tol (1 + |u|)` plus the first-order effect of the root's own forward
/// error `eps * deg * sum|e_k||u|^k / |E'(u)|`.
fn filter_threshold(
    map: &StandardRationalMap,
    e: &ComplexPolynomial,
    e_prime: &ComplexPolynomial,
    u: Complex64,
    tol: f64,
) -> f64 {
    let slope = e_prime.eval(u).norm();
    let rounding = f64::EPSILON * e.degree() as f64 * e.abs_eval(u.norm());
    let forward = if slope > 0.0 {
        rounding / slope
    } else {
        f64::INFINITY
    };
    let sensitivity = 1.0 + map.r_prime(u).norm();
    tol * (1.0 + u.norm()) + CONDITIONING_SLACK * sensitivity * forward
}
