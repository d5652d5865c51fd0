use num_complex::Complex64;

use crate::map::PlanarField;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NewtonOutcome {
    pub z: Complex64,
    /// `|F(z)|` at the returned point.
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Newton's method on `(Re F, Im F)` using the Wirtinger form of the real
/// Jacobian: the step solves `F_z dz + F_zbar conj(dz) = -F`.
///
/// With `damped`, each step is halved until `|F|` decreases.
pub fn newton_polish<F: PlanarField + ?Sized>(
    field: &F,
    start: Complex64,
    max_iter: usize,
    damped: bool,
) -> NewtonOutcome {
    let mut z = start;
    let mut h = field.value(z);
    let mut iterations = 0;
    let mut converged = false;
    while iterations < max_iter {
        if h.norm() == 0.0 {
            converged = true;
            break;
        }
        if !h.re.is_finite() || !h.im.is_finite() {
            break;
        }
        let (a, b) = field.wirtinger(z);
        let det = a.norm_sqr() - b.norm_sqr();
        if det == 0.0 || !det.is_finite() {
            break;
        }
        let step = (-a.conj() * h + b * h.conj()) / det;
        iterations += 1;

        let mut next = z + step;
        let mut next_h = field.value(next);
        if damped {
            let mut lambda = 1.0;
            while !(next_h.norm() < h.norm()) && lambda > 1.0 / 1024.0 {
                lambda *= 0.5;
                next = z + step * lambda;
                next_h = field.value(next);
            }
            if !(next_h.norm() < h.norm()) {
                converged = step.norm() <= 1e-10 * (1.0 + z.norm());
                break;
            }
        }
        let moved = (next - z).norm();
        z = next;
        h = next_h;
        if moved <= 16.0 * f64::EPSILON * (1.0 + z.norm()) {
            converged = true;
            break;
        }
    }
    NewtonOutcome {
        z,
        residual: h.norm(),
        iterations,
        converged,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::StandardRationalMap;
    use crate::poly::ComplexPolynomial;

    #[test]
    fn converges_quadratically_near_a_zero() {
        // p(z) = z^2 - 2z + 2, c = 0 has the zero z = 1
        let map = StandardRationalMap::new(
            Complex64::new(0.0, 0.0),
            ComplexPolynomial::from_real(&[2.0, -2.0, 1.0]),
        )
        .unwrap();
        let out = newton_polish(&map, Complex64::new(1.05, 0.03), 50, false);
        assert!(out.converged);
        assert!((out.z - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        assert!(out.iterations < 10);
    }
}
