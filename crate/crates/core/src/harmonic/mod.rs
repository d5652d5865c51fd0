//! Zeros of `H(z) = z - conj(c) - 1/conj(p(z))`.
//!
//! The primary route complexifies `z` and `conj(z)` into independent unknowns,
//! eliminates one of them to get a single polynomial (the eliminant), keeps the
//! roots that satisfy the reality condition and polishes them with Newton's
//! method on `(Re H, Im H)`. The grid oracle is an independent brute-force
//! check, and the winding number ties the counts to the argument principle.

mod eliminant;
mod newton;
mod oracle;
mod solve;
mod winding;
mod zero;

pub use eliminant::{
    eliminant, eliminant_by_expansion, eliminant_by_interpolation, Eliminant, ELIMINANT_TRIM,
    INTERPOLATION_RANGE_THRESHOLD,
};
pub use newton::{newton_polish, NewtonOutcome};
pub use oracle::{default_search_box, grid_oracle, Rect};
pub use solve::{
    solve_fixed_points, solve_fixed_points_detailed, SolveDiagnostics, DEFAULT_SOLVER_TOL,
};
pub use winding::{winding_number, winding_number_with, Contour, WindingOptions};
pub use zero::{HarmonicZero, Orientation};
