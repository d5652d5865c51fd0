//! Counting and certifying the zeros of `H`.

mod classify;
mod orbit;
mod poles;
mod report;
mod sweep;

pub use classify::{
    classify_zero, classify_zero_with_radius, LOCAL_ORDER_RADIUS, SINGULAR_THRESHOLD,
};
pub use orbit::{orbit_of_infinity, OrbitDiagnostic, PERIODIC_WINDOW, REVISIT_RADIUS};
pub use poles::{pole_data, Pole, PoleData};
pub use report::{
    argument_principle_check, argument_principle_terms, large_circle, valence_report,
    valence_report_with, Counts, ReportDocument, ValenceReport, ZeroRecord, REPORT_VERSION,
};
pub use sweep::openness_sweep;
