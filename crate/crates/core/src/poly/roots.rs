//! Aberth–Ehrlich simultaneous iteration.

use std::f64::consts::TAU;

use num_complex::Complex64;

use super::ComplexPolynomial;
use crate::error::{Error, Result};

pub const DEFAULT_ROOT_BUDGET: usize = 2000;

/// Offset of the starting circle so that no initial guess sits on a symmetry axis.
const START_ANGLE: f64 = 0.4;

#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    /// Backward residual `|p(z)| / sum_k |a_k| max(1, |z|)^k` of each root.
    pub residuals: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootCluster {
    pub center: Complex64,
    pub multiplicity: usize,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    /// Group roots closer than `radius` (transitively). Clusters are listed in
    /// order of their first member; the center is the member mean.
    pub fn clusters(&self, radius: f64) -> Vec<RootCluster> {
        let n = self.roots.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], i: usize) -> usize {
            let mut root = i;
            while parent[root] != root {
                root = parent[root];
            }
            let mut k = i;
            while parent[k] != root {
                let next = parent[k];
                parent[k] = root;
                k = next;
            }
            root
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if (self.roots[i] - self.roots[j]).norm() <= radius {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut order: Vec<usize> = Vec::new();
        let mut sums: Vec<(Complex64, usize)> = vec![(Complex64::new(0.0, 0.0), 0); n];
        for i in 0..n {
            let r = find(&mut parent, i);
            if sums[r].1 == 0 {
                order.push(r);
            }
            sums[r].0 += self.roots[i];
            sums[r].1 += 1;
        }
        order
            .into_iter()
            .map(|r| RootCluster {
                center: sums[r].0 / sums[r].1 as f64,
                multiplicity: sums[r].1,
            })
            .collect()
    }
}

/// All roots of `poly` with the default iteration budget.
pub fn roots(poly: &ComplexPolynomial, tol: f64) -> Result<RootSet> {
    roots_with_budget(poly, tol, DEFAULT_ROOT_BUDGET)
}

/// All `deg(poly)` roots, found by Aberth–Ehrlich iteration on the
/// max-coefficient-normalized polynomial.
///
/// A root is accepted once its correction drops below `tol * (1 + |z|)` or its
/// backward residual drops below `tol`. Exact zero roots (vanishing low-order
/// coefficients) are split off before iterating.
pub fn roots_with_budget(poly: &ComplexPolynomial, tol: f64, max_iter: usize) -> Result<RootSet> {
    if poly.degree() == 0 {
        return Err(Error::InvalidInput(
            "root finding needs a polynomial of degree >= 1".into(),
        ));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidInput(
            "root tolerance must be positive".into(),
        ));
    }
    let scaled = poly.normalized();
    let zero_roots = scaled
        .coeffs()
        .iter()
        .take_while(|c| **c == Complex64::new(0.0, 0.0))
        .count();
    let reduced = ComplexPolynomial::new(scaled.coeffs()[zero_roots..].to_vec());

    let mut found = vec![Complex64::new(0.0, 0.0); zero_roots];
    if reduced.degree() > 0 {
        found.extend(aberth(&reduced, tol, max_iter)?);
    }
    let residuals = found
        .iter()
        .map(|&z| backward_residual(&scaled, z))
        .collect();
    Ok(RootSet {
        roots: found,
        residuals,
    })
}

fn backward_residual(p: &ComplexPolynomial, z: Complex64) -> f64 {
    let scale = p.abs_eval(z.norm().max(1.0));
    if scale == 0.0 {
        0.0
    } else {
        p.eval(z).norm() / scale
    }
}

/// Newton ratio `p(z)/p'(z)`, evaluated through the reversed polynomial when
/// `|z| > 1` so that high powers never overflow.
fn newton_ratio(p: &ComplexPolynomial, z: Complex64) -> (Complex64, bool) {
    let n = p.degree() as f64;
    if z.norm() <= 1.0 {
        let (v, d) = p.eval_with_derivative(z);
        if v.norm() == 0.0 {
            return (Complex64::new(0.0, 0.0), true);
        }
        (v / d, false)
    } else {
        let y = z.inv();
        let mut rev = Complex64::new(0.0, 0.0);
        let mut rev_d = Complex64::new(0.0, 0.0);
        for &c in p.coeffs() {
            rev_d = rev_d * y + rev;
            rev = rev * y + c;
        }
        if rev.norm() == 0.0 {
            return (Complex64::new(0.0, 0.0), true);
        }
        // p(z) = z^n rev(y), p'(z) = z^(n-1) (n rev(y) - y rev'(y))
        (z * rev / (rev * n - y * rev_d), false)
    }
}

fn aberth_step(z: &[Complex64], i: usize, ratio: Complex64) -> Complex64 {
    let repulsion: Complex64 = (0..z.len())
        .filter(|&j| j != i)
        .map(|j| (z[i] - z[j]).inv())
        .sum();
    ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion)
}

fn aberth(p: &ComplexPolynomial, tol: f64, max_iter: usize) -> Result<Vec<Complex64>> {
    let n = p.degree();
    let radius = p.fujiwara_bound().max(f64::MIN_POSITIVE);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, TAU * k as f64 / n as f64 + START_ANGLE))
        .collect();
    if n == 1 {
        return Ok(vec![-p.coeffs()[0] / p.coeffs()[1]]);
    }
    let mut done = vec![false; n];
    for _ in 0..max_iter {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (ratio, exact) = newton_ratio(p, z[i]);
            if exact || backward_residual(p, z[i]) <= tol {
                done[i] = true;
                continue;
            }
            let step = aberth_step(&z, i, ratio);
            if !step.re.is_finite() || !step.im.is_finite() {
                continue;
            }
            z[i] -= step;
            if step.norm() <= tol * (1.0 + z[i].norm()) {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            break;
        }
    }
    // polish: the residual test above may stop a root well before it reaches
    // working accuracy
    for _ in 0..2 {
        for i in 0..n {
            let (ratio, exact) = newton_ratio(p, z[i]);
            if exact {
                continue;
            }
            let candidate = z[i] - aberth_step(&z, i, ratio);
            if candidate.re.is_finite()
                && candidate.im.is_finite()
                && backward_residual(p, candidate) <= backward_residual(p, z[i])
            {
                z[i] = candidate;
            }
        }
    }
    if z.iter().all(|&zi| backward_residual(p, zi) <= tol) {
        Ok(z)
    } else {
        Err(Error::NonConvergence {
            context: "aberth root iteration",
            iterations: max_iter,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_by_re_im(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| {
            a.re.partial_cmp(&b.re)
                .unwrap()
                .then(a.im.partial_cmp(&b.im).unwrap())
        });
        v
    }

    #[test]
    fn quadratic_with_imaginary_roots() {
        let p = ComplexPolynomial::from_real(&[1.0, 0.0, 1.0]);
        let rs = sorted_by_re_im(roots(&p, 1e-12).unwrap().roots);
        assert!((rs[0] - Complex64::new(0.0, -1.0)).norm() < 1e-12);
        assert!((rs[1] - Complex64::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn cube_roots_of_unity() {
        let p = ComplexPolynomial::from_real(&[-1.0, 0.0, 0.0, 1.0]);
        let rs = roots(&p, 1e-12).unwrap();
        assert_eq!(rs.len(), 3);
        for k in 0..3 {
            let w = Complex64::from_polar(1.0, TAU * k as f64 / 3.0);
            assert!(rs.roots.iter().any(|r| (r - w).norm() < 1e-12));
        }
    }

    #[test]
    fn factored_cubic() {
        // (z-1)(z-2)(z-3) = z^3 - 6z^2 + 11z - 6
        let p = ComplexPolynomial::from_real(&[-6.0, 11.0, -6.0, 1.0]);
        let rs = sorted_by_re_im(roots(&p, 1e-12).unwrap().roots);
        for (r, want) in rs.iter().zip([1.0, 2.0, 3.0]) {
            assert!(
                (r - Complex64::new(want, 0.0)).norm() < 1e-10,
                "{r} vs {want}"
            );
        }
    }

    #[test]
    fn exact_zero_roots_are_split_off() {
        let p = ComplexPolynomial::from_real(&[0.0, 0.0, 0.0, 1.0]);
        let rs = roots(&p, 1e-12).unwrap();
        let cl = rs.clusters(1e-6);
        assert_eq!(cl.len(), 1);
        assert_eq!(cl[0].multiplicity, 3);
        assert_eq!(cl[0].center, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn double_root_clusters() {
        // (z-1)^2 (z+2)
        let p = ComplexPolynomial::from_real(&[2.0, -3.0, 0.0, 1.0]);
        let rs = roots(&p, 1e-12).unwrap();
        let cl = rs.clusters(1e-6);
        assert_eq!(cl.len(), 2);
        let double = cl.iter().find(|c| c.multiplicity == 2).unwrap();
        assert!((double.center - Complex64::new(1.0, 0.0)).norm() < 1e-6);
    }

    #[test]
    fn constant_is_rejected() {
        let p = ComplexPolynomial::from_real(&[3.0]);
        assert!(matches!(roots(&p, 1e-12), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn tiny_budget_reports_non_convergence() {
        let p = ComplexPolynomial::from_real(&[1.0, 2.0, -3.0, 0.5, 4.0, 1.0, -2.0, 0.25]);
        assert!(matches!(
            roots_with_budget(&p, 1e-14, 1),
            Err(Error::NonConvergence { .. })
        ));
    }
}
