//! Numerical laboratory for extremal logharmonic polynomials.
//!
//! The central object is the anti-rational map `z -> conj(c + 1/p(z))`. Its
//! fixed points are the solutions of `p(z) * conj(z - conj(c)) = 1`, i.e. the
//! zeros of the harmonic function `H(z) = z - conj(c) - 1/conj(p(z))`. The crate
//! builds maps for which this equation has the maximal number `3n - 1` of
//! solutions and certifies the count by two independent routes: an explicit
//! solve (eliminant polynomial plus Newton polish) and the generalized
//! argument principle.
//!
//! Module map:
//!
//! * [`poly`] - dense complex polynomials and the simultaneous root finder.
//! * [`map`] - the standard form `r(z) = c + 1/p(z)` and the field `H`.
//! * [`extremal`] - Geyer polynomials, the Moebius perturbation, the delta
//!   search and the Blaschke model.
//! * [`harmonic`] - eliminant, zero solver, grid oracle, winding numbers.
//! * [`valence`] - zero classification, pole data, valence reports, orbit
//!   diagnostic, openness sweep.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod extremal;
pub mod harmonic;
pub mod map;
pub mod poly;
pub mod valence;

pub use error::{Error, Result};
pub use map::StandardRationalMap;
pub use num_complex::Complex64;
pub use poly::ComplexPolynomial;
