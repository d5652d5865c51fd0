use std::path::Path;

use logharmonic::harmonic::{default_search_box, Contour, DEFAULT_SOLVER_TOL};
use logharmonic::valence::{
    argument_principle_terms, pole_data, valence_report_with, PoleData, ValenceReport,
};
use logharmonic::{Error, StandardRationalMap};

use crate::instance::load_instance;
use crate::{EXIT_MISMATCH, EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE};

#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub code: i32,
    pub message: String,
    pub report: Option<ValenceReport>,
}

impl VerifyOutcome {
    fn fail(code: i32, message: impl Into<String>, report: Option<ValenceReport>) -> Self {
        Self {
            code,
            message: message.into(),
            report,
        }
    }
}

pub fn verify_file(path: &Path) -> VerifyOutcome {
    verify_file_with(path, DEFAULT_SOLVER_TOL)
}

/// Re-solve, re-classify and re-count a stored instance or report.
///
/// Exit codes: 2 when the file cannot be read or parsed; 3 when a report
/// invariant or an argument-principle identity fails (or the solve itself
/// fails); 4 when the invariants hold but the counts differ from the
/// recorded ones, or from `3n - 1` if none are recorded.
pub fn verify_file_with(path: &Path, tol: f64) -> VerifyOutcome {
    let loaded = match load_instance(path) {
        Ok(l) => l,
        Err(e) => return VerifyOutcome::fail(EXIT_USAGE, e.to_string(), None),
    };
    let map = &loaded.map;
    let report = match valence_report_with(map, tol, loaded.delta) {
        Ok(r) => r,
        Err(e) => return VerifyOutcome::fail(EXIT_NUMERICAL, e.to_string(), None),
    };
    if let Err(e) = local_identities(map, &report) {
        return VerifyOutcome::fail(EXIT_NUMERICAL, e.to_string(), Some(report));
    }
    let counts = report.to_document().counts;
    match loaded.expected {
        Some(expected) if expected != counts => {
            return VerifyOutcome::fail(
                EXIT_MISMATCH,
                format!("recorded counts {expected:?}, recomputed {counts:?}"),
                Some(report),
            );
        }
        None if !report.extremal => {
            return VerifyOutcome::fail(
                EXIT_MISMATCH,
                format!("{} zeros, expected {}", report.total, 3 * report.n - 1),
                Some(report),
            );
        }
        _ => {}
    }
    let message = format!(
        "ok: n = {}, N+ = {}, N- = {}, total = {}, winding = {}",
        report.n, report.n_plus, report.n_minus, report.total, report.winding_large_circle
    );
    VerifyOutcome {
        code: EXIT_OK,
        message,
        report: Some(report),
    }
}

/// Argument-principle identity on the search box and on a small circle
/// about every zero and every pole.
fn local_identities(map: &StandardRationalMap, report: &ValenceReport) -> Result<(), Error> {
    let poles = pole_data(map)?;
    let mut contours = vec![Contour::Rect(default_search_box(map))];
    let sites: Vec<_> = report
        .zeros
        .iter()
        .map(|z| z.location)
        .chain(poles.poles.iter().map(|p| p.location))
        .collect();
    for (i, &s) in sites.iter().enumerate() {
        let nearest = sites
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, w)| (w - s).norm())
            .fold(f64::INFINITY, f64::min);
        let radius = (0.4 * nearest).min(1e-2 * (1.0 + s.norm()));
        contours.push(Contour::circle(s, radius));
    }
    check_all(map, report, &poles, &contours)
}

fn check_all(
    map: &StandardRationalMap,
    report: &ValenceReport,
    poles: &PoleData,
    contours: &[Contour],
) -> Result<(), Error> {
    for contour in contours {
        let (winding, expected) = argument_principle_terms(map, &report.zeros, poles, contour)?;
        if winding != expected {
            return Err(Error::Inconsistent(format!(
                "winding {winding} != {expected} on {contour:?}"
            )));
        }
    }
    Ok(())
}
