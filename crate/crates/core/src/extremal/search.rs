use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harmonic::{HarmonicZero, DEFAULT_SOLVER_TOL};
use crate::map::StandardRationalMap;
use crate::valence::{valence_report_with, ValenceReport};

use super::geyer::GeyerPolynomial;
use super::moebius::{perturb_to_standard_form, MoebiusParam};

/// Fixed points count as attracting when `|r'| < 1 - ATTRACTING_MARGIN`.
pub const ATTRACTING_MARGIN: f64 = 1e-6;

/// `0.1 * 2^-k` for `k = 0..=20`.
pub fn default_schedule() -> Vec<f64> {
    geometric_schedule(0.1, 1, 20)
}

/// `start * 2^(-k / steps_per_halving)` down to `start * 2^-halvings`.
pub fn geometric_schedule(start: f64, steps_per_halving: u32, halvings: u32) -> Vec<f64> {
    let steps = steps_per_halving.max(1);
    (0..=steps * halvings)
        .map(|k| start * 2f64.powf(-(k as f64) / steps as f64))
        .collect()
}

/// Evidence that a perturbed map is extremal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixedPointCertificate {
    pub delta: f64,
    pub attracting: Vec<HarmonicZero>,
    pub total: usize,
    pub margin: f64,
    /// Schedule entries tried before this one.
    pub rejected: usize,
}

pub fn delta_search(
    g: &GeyerPolynomial,
    schedule: &[f64],
) -> Result<(MoebiusParam, StandardRationalMap, FixedPointCertificate)> {
    delta_search_with(g, schedule, DEFAULT_SOLVER_TOL).map(|(m, map, cert, _)| (m, map, cert))
}

/// Walk down `schedule` and return the first `delta` whose standard form has
/// exactly `n` attracting fixed points and `3n - 1` zeros in total, together
/// with its valence report. Entries whose solve or report fails are skipped.
pub fn delta_search_with(
    g: &GeyerPolynomial,
    schedule: &[f64],
    tol: f64,
) -> Result<(
    MoebiusParam,
    StandardRationalMap,
    FixedPointCertificate,
    ValenceReport,
)> {
    g.validate()?;
    check_schedule(schedule)?;
    let n = g.degree();
    for (rejected, &delta) in schedule.iter().enumerate() {
        let m = MoebiusParam::real(delta)?;
        let map = perturb_to_standard_form(&g.poly, m)?;
        let report = match valence_report_with(&map, tol, Some(m.delta())) {
            Ok(report) => report,
            Err(_) => continue,
        };
        let attracting: Vec<HarmonicZero> = report
            .zeros
            .iter()
            .filter(|z| z.is_attracting(ATTRACTING_MARGIN))
            .copied()
            .collect();
        if attracting.len() == n && report.total as usize == 3 * n - 1 {
            let cert = FixedPointCertificate {
                delta,
                attracting,
                total: report.total as usize,
                margin: ATTRACTING_MARGIN,
                rejected,
            };
            return Ok((m, map, cert, report));
        }
    }
    Err(Error::Exhausted {
        expected: 3 * n - 1,
    })
}

/// Strictly decreasing entries in `(0, 1)`.
pub fn check_schedule(schedule: &[f64]) -> Result<()> {
    if schedule.is_empty() {
        return Err(Error::InvalidInput("empty delta schedule".into()));
    }
    if schedule.iter().any(|d| !(*d > 0.0 && *d < 1.0)) {
        return Err(Error::InvalidInput(
            "delta schedule entries must lie in (0, 1)".into(),
        ));
    }
    if schedule.windows(2).any(|w| !(w[1] < w[0])) {
        return Err(Error::InvalidInput(
            "delta schedule must be strictly decreasing".into(),
        ));
    }
    Ok(())
}
