use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::map::PlanarField;

use super::oracle::Rect;

/// Closed, positively oriented Jordan curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Contour {
    Circle { center: Complex64, radius: f64 },
    Rect(Rect),
}

impl Contour {
    pub fn circle(center: Complex64, radius: f64) -> Self {
        Contour::Circle { center, radius }
    }

    /// Point at parameter `t` in `[0, 1]`, counterclockwise. Rectangles are
    /// parametrized by arc length starting at the lower-left corner.
    pub fn point(&self, t: f64) -> Complex64 {
        match *self {
            Contour::Circle { center, radius } => center + Complex64::from_polar(radius, TAU * t),
            Contour::Rect(r) => {
                let (w, h) = (r.width(), r.height());
                let mut s = t.rem_euclid(1.0) * 2.0 * (w + h);
                if s < w {
                    return Complex64::new(r.min.re + s, r.min.im);
                }
                s -= w;
                if s < h {
                    return Complex64::new(r.max.re, r.min.im + s);
                }
                s -= h;
                if s < w {
                    return Complex64::new(r.max.re - s, r.max.im);
                }
                s -= w;
                Complex64::new(r.min.re, r.max.im - s)
            }
        }
    }

    pub fn contains(&self, z: Complex64) -> bool {
        match *self {
            Contour::Circle { center, radius } => (z - center).norm() < radius,
            Contour::Rect(r) => r.contains(z),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindingOptions {
    pub initial_samples: usize,
    /// Maximum number of bisections of one initial segment.
    pub max_depth: u32,
    /// Minimum admissible `clearance` on the contour.
    pub margin: f64,
}

impl Default for WindingOptions {
    fn default() -> Self {
        Self {
            initial_samples: 256,
            max_depth: 40,
            margin: 1e-6,
        }
    }
}

pub fn winding_number<F: PlanarField + ?Sized>(field: &F, contour: &Contour) -> Result<i64> {
    winding_number_with(field, contour, WindingOptions::default())
}

/// `(1/2pi) * (change of arg F along the contour)`.
///
/// Segments are bisected until every phase increment is below `pi/2`; the
/// summed increments are then an integer multiple of `2pi` up to rounding.
pub fn winding_number_with<F: PlanarField + ?Sized>(
    field: &F,
    contour: &Contour,
    opts: WindingOptions,
) -> Result<i64> {
    if opts.initial_samples < 4 {
        return Err(Error::InvalidInput(
            "winding needs at least 4 samples".into(),
        ));
    }
    let sample = |t: f64| -> Result<Complex64> {
        let z = contour.point(t);
        let clearance = field.clearance(z);
        if !(clearance >= opts.margin) {
            return Err(Error::ContourTooClose {
                distance: clearance,
                margin: opts.margin,
            });
        }
        Ok(field.value(z))
    };

    let n = opts.initial_samples;
    let first = sample(0.0)?;
    let mut prev = first;
    let mut total = 0.0;
    for k in 1..=n {
        let t0 = (k - 1) as f64 / n as f64;
        let t1 = k as f64 / n as f64;
        let next = if k == n { first } else { sample(t1)? };
        total += refine(&sample, t0, prev, t1, next, opts.max_depth)?;
        prev = next;
    }
    let turns = total / TAU;
    let rounded = turns.round();
    if (turns - rounded).abs() > 1e-6 {
        return Err(Error::NonConvergence {
            context: "winding number integrality",
            iterations: opts.max_depth as usize,
        });
    }
    Ok(rounded as i64)
}

fn refine(
    sample: &dyn Fn(f64) -> Result<Complex64>,
    t0: f64,
    v0: Complex64,
    t1: f64,
    v1: Complex64,
    depth: u32,
) -> Result<f64> {
    let delta = (v1 / v0).arg();
    if delta.abs() < FRAC_PI_2 {
        return Ok(delta);
    }
    if depth == 0 {
        return Err(Error::NonConvergence {
            context: "winding number refinement",
            iterations: 0,
        });
    }
    let tm = 0.5 * (t0 + t1);
    let vm = sample(tm)?;
    Ok(refine(sample, t0, v0, tm, vm, depth - 1)? + refine(sample, tm, vm, t1, v1, depth - 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Power(i32);

    impl PlanarField for Power {
        fn value(&self, z: Complex64) -> Complex64 {
            if self.0 >= 0 {
                z.powi(self.0)
            } else {
                z.conj().powi(-self.0)
            }
        }

        fn wirtinger(&self, _z: Complex64) -> (Complex64, Complex64) {
            unimplemented!()
        }
    }

    #[test]
    fn counts_analytic_and_anti_analytic_powers() {
        let circle = Contour::circle(Complex64::new(0.0, 0.0), 1.0);
        assert_eq!(winding_number(&Power(3), &circle).unwrap(), 3);
        assert_eq!(winding_number(&Power(-2), &circle).unwrap(), -2);
        let rect = Contour::Rect(Rect::square(Complex64::new(0.2, 0.1), 0.7));
        assert_eq!(winding_number(&Power(5), &rect).unwrap(), 5);
        let away = Contour::circle(Complex64::new(3.0, 0.0), 1.0);
        assert_eq!(winding_number(&Power(4), &away).unwrap(), 0);
    }

    #[test]
    fn contour_through_zero_is_rejected() {
        let circle = Contour::circle(Complex64::new(1.0, 0.0), 1.0);
        assert!(matches!(
            winding_number(&Power(1), &circle),
            Err(Error::ContourTooClose { .. })
        ));
    }

    #[test]
    fn rect_parametrization_is_closed() {
        let r = Rect::square(Complex64::new(0.0, 0.0), 1.0);
        let c = Contour::Rect(r);
        assert!((c.point(0.0) - c.point(1.0)).norm() < 1e-15);
        assert!((c.point(0.25) - Complex64::new(1.0, -1.0)).norm() < 1e-15);
        assert!((c.point(0.5) - Complex64::new(1.0, 1.0)).norm() < 1e-15);
    }
}
