//! Extremal instances: Geyer polynomials, their Moebius perturbation into
//! standard form, the delta search and the Blaschke model.

mod blaschke;
mod geyer;
mod moebius;
mod search;

pub use blaschke::{
    blaschke, blaschke_derivative, blaschke_fixed_point, blaschke_inclusion_holds,
    blaschke_inclusion_radius, blaschke_regime,
};
pub use geyer::{
    geyer_candidates, geyer_candidates_from, geyer_from_critical_points, geyer_solve,
    geyer_solve_signed, geyer_solve_with, pair_lattice_seeds, random_seed, real_spread_seeds,
    roots_of_unity_seeds, seed_ladder, GeyerPolynomial, Normalization, GEYER_RESIDUAL_TOL,
    MIN_SEPARATION,
};
pub use moebius::{moebius_apply, perturb_to_standard_form, ExtendedComplex, MoebiusParam};
pub use search::{
    check_schedule, default_schedule, delta_search, delta_search_with, geometric_schedule,
    FixedPointCertificate, ATTRACTING_MARGIN,
};
