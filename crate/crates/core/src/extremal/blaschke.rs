use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// `(n - 1) / (n + 1)`, the admissible bound on `|delta|`.
pub fn blaschke_regime(n: usize) -> f64 {
    (n as f64 - 1.0) / (n as f64 + 1.0)
}

/// `B(z) = (z^n + delta) / (1 + delta z^n)`.
pub fn blaschke(n: usize, delta: f64, z: Complex64) -> Complex64 {
    let w = z.powu(n as u32);
    (w + delta) / (1.0 + delta * w)
}

/// `B'(z) = n z^(n-1) (1 - delta^2) / (1 + delta z^n)^2`.
pub fn blaschke_derivative(n: usize, delta: f64, z: Complex64) -> Complex64 {
    let w = z.powu(n as u32);
    let den = 1.0 + delta * w;
    n as f64 * z.powu(n as u32 - 1) * (1.0 - delta * delta) / (den * den)
}

fn real_b(n: usize, delta: f64, x: f64) -> (f64, f64) {
    let w = x.powi(n as i32);
    let den = 1.0 + delta * w;
    let value = (w + delta) / den;
    let slope = n as f64 * x.powi(n as i32 - 1) * (1.0 - delta * delta) / (den * den);
    (value, slope)
}

/// The attracting real fixed point `x*` of `B` in `(-1, 1)` and `B'(x*)`,
/// found by iterating from `delta` and polishing with Newton.
pub fn blaschke_fixed_point(n: usize, delta: f64) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("degree {n} < 2")));
    }
    let bound = blaschke_regime(n);
    if !(delta.abs() < bound) {
        return Err(Error::OutOfRegime { delta, bound });
    }
    if delta == 0.0 {
        return Ok((0.0, 0.0));
    }
    let mut x = delta;
    for _ in 0..10_000 {
        let next = real_b(n, delta, x).0;
        let step = (next - x).abs();
        x = next;
        if step < 1e-14 {
            break;
        }
    }
    for _ in 0..8 {
        let (value, slope) = real_b(n, delta, x);
        let g = value - x;
        let dg = slope - 1.0;
        if g == 0.0 || dg == 0.0 {
            break;
        }
        x -= g / dg;
    }
    let (value, multiplier) = real_b(n, delta, x);
    if !(x.abs() < 1.0 && (value - x).abs() <= 1e-12 && multiplier.abs() < 1.0) {
        return Err(Error::NonConvergence {
            context: "blaschke fixed point",
            iterations: 10_000,
        });
    }
    Ok((x, multiplier))
}

/// Whether `B(D(0, r)) = D_delta` lies inside `D(0, r)`, checked through
/// `max |B|` over `samples` points of the circle `|z| = r`. The second
/// inclusion `D(0, r) ⊂ D(0, r^(1/n))` holds for every `r` in `(0, 1)`.
pub fn blaschke_inclusion_holds(n: usize, delta: f64, r: f64, samples: usize) -> bool {
    if !(r > 0.0 && r < 1.0) || samples == 0 {
        return false;
    }
    (0..samples).all(|k| {
        let z = Complex64::from_polar(r, TAU * k as f64 / samples as f64);
        blaschke(n, delta, z).norm() < r
    })
}

/// Largest `r = 1 - 2^-k`, `k = 1..=40`, passing [`blaschke_inclusion_holds`].
pub fn blaschke_inclusion_radius(n: usize, delta: f64, samples: usize) -> Option<f64> {
    (1..=40)
        .rev()
        .map(|k| 1.0 - 0.5f64.powi(k))
        .find(|&r| blaschke_inclusion_holds(n, delta, r, samples))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_delta_is_superattracting_origin() {
        for n in 2..=6 {
            assert_eq!(blaschke_fixed_point(n, 0.0).unwrap(), (0.0, 0.0));
        }
    }

    #[test]
    fn closed_form_for_quadratic() {
        let (x, m) = blaschke_fixed_point(2, 0.2).unwrap();
        let exact = (0.8 - 0.48f64.sqrt()) / 0.4;
        assert!((x - exact).abs() <= 1e-12);
        assert!(m.abs() < 1.0 && m.abs() > 0.0);
        let slope = blaschke_derivative(2, 0.2, Complex64::new(x, 0.0));
        assert!((slope.re - m).abs() < 1e-14);
    }

    #[test]
    fn out_of_regime() {
        assert!(matches!(
            blaschke_fixed_point(2, 0.5),
            Err(Error::OutOfRegime { .. })
        ));
        assert!(blaschke_fixed_point(3, -0.5).is_err());
    }

    #[test]
    fn inclusions_hold_near_one() {
        let r = blaschke_inclusion_radius(3, 0.3, 512).unwrap();
        assert!(r > 0.5 && r < 1.0);
        assert!(!blaschke_inclusion_holds(3, 0.3, 0.1, 512));
    }
}
