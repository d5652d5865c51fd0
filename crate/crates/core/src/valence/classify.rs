use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::harmonic::{winding_number_with, Contour, HarmonicZero, Orientation, WindingOptions};
use crate::map::StandardRationalMap;

/// `|J_H|` below this marks a numerically neutral fixed point.
pub const SINGULAR_THRESHOLD: f64 = 1e-8;

/// Default radius of the circle used to read off the local order.
pub const LOCAL_ORDER_RADIUS: f64 = 1e-3;

pub fn classify_zero(map: &StandardRationalMap, z: Complex64) -> Result<HarmonicZero> {
    classify_zero_with_radius(map, z, LOCAL_ORDER_RADIUS)
}

/// Jacobian `1 - |r'(z)|^2`, orientation by its sign and order by the winding
/// of `H` on a circle of the given radius about `z`.
pub fn classify_zero_with_radius(
    map: &StandardRationalMap,
    z: Complex64,
    radius: f64,
) -> Result<HarmonicZero> {
    let residual = map.h(z).norm();
    if !(residual <= 1e-8 * (1.0 + z.norm())) {
        return Err(Error::InvalidInput(format!(
            "{z} is not a zero of H (|H| = {residual:e})"
        )));
    }
    let multiplier = map.r_prime(z).norm();
    let jacobian = 1.0 - multiplier * multiplier;
    if !(jacobian.abs() >= SINGULAR_THRESHOLD) {
        return Err(Error::SingularZero {
            location: z,
            jacobian,
        });
    }
    let orientation = if jacobian > 0.0 {
        Orientation::SensePreserving
    } else {
        Orientation::SenseReversing
    };

    let opts = WindingOptions {
        margin: 0.0,
        ..WindingOptions::default()
    };
    let local = winding_number_with(map, &Contour::circle(z, radius), opts)?;
    let expected_sign = if jacobian > 0.0 { 1 } else { -1 };
    if local == 0 || local.signum() != expected_sign {
        return Err(Error::Inconsistent(format!(
            "local winding {local} at {z} disagrees with jacobian {jacobian:e}"
        )));
    }
    Ok(HarmonicZero {
        location: z,
        orientation,
        order: local.unsigned_abs() as u32,
        jacobian,
        multiplier,
    })
}
