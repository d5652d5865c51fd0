use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::map::StandardRationalMap;
use crate::poly::ComplexPolynomial;

use super::solve::DEFAULT_SOLVER_TOL;

/// Leading coefficients below this fraction of their rounding scale are dropped.
pub const ELIMINANT_TRIM: f64 = 1e-13;

/// Coefficient dynamic range above which the eliminant is rebuilt by
/// interpolation instead of symbolic expansion.
pub const INTERPOLATION_RANGE_THRESHOLD: f64 = 1e12;

/// Univariate polynomial whose roots contain every zero of `H`.
///
/// With `u = z` and `v = conj(z)` treated as independent, the zero condition
/// becomes the pair `conj_p(v) (u - conj(c)) = 1` and `p(u) (v - c) = 1`.
/// Substituting `v = c + 1/p(u)` and clearing `p(u)^n` gives
///
/// `E(u) = [sum_k conj(a_k) (c p(u) + 1)^k p(u)^(n-k)] (u - conj(c)) - p(u)^n`,
///
/// of degree at most `n^2 + 1`. Roots with `v != conj(u)` are spurious.
#[derive(Debug, Clone, PartialEq)]
pub struct Eliminant {
    pub poly: ComplexPolynomial,
    pub spurious_filter_tol: f64,
    pub interpolated: bool,
}

/// Eliminant by expansion, falling back to interpolation at scaled roots of
/// unity when the expanded coefficients span more than
/// [`INTERPOLATION_RANGE_THRESHOLD`].
pub fn eliminant(map: &StandardRationalMap) -> Eliminant {
    let expanded = eliminant_by_expansion(map);
    if dynamic_range(&expanded) <= INTERPOLATION_RANGE_THRESHOLD {
        return Eliminant {
            poly: expanded,
            spurious_filter_tol: DEFAULT_SOLVER_TOL,
            interpolated: false,
        };
    }
    let radius = interpolation_radius(&expanded);
    Eliminant {
        poly: eliminant_by_interpolation(map, radius),
        spurious_filter_tol: DEFAULT_SOLVER_TOL,
        interpolated: true,
    }
}

pub fn eliminant_by_expansion(map: &StandardRationalMap) -> ComplexPolynomial {
    let e = expand(map.p(), map.c(), false);
    trim_leading(&e, &magnitude_bound(map), |_| 0.0)
}

/// The expansion run on `|a_k|`, `|c|` with every subtraction turned into an
/// addition. Coefficient `k` bounds the sum of the moduli of the terms that
/// make up coefficient `k` of the eliminant.
fn magnitude_bound(map: &StandardRationalMap) -> ComplexPolynomial {
    let abs = ComplexPolynomial::new(
        map.p()
            .coeffs()
            .iter()
            .map(|a| Complex64::new(a.norm(), 0.0))
            .collect(),
    );
    expand(&abs, Complex64::new(map.c().norm(), 0.0), true)
}

fn expand(p: &ComplexPolynomial, c: Complex64, magnitudes: bool) -> ComplexPolynomial {
    let n = p.degree();
    let x = &p.scale(c) + &ComplexPolynomial::constant(Complex64::new(1.0, 0.0));

    // powers of x ascending, powers of p descending
    let mut x_pows = Vec::with_capacity(n + 1);
    x_pows.push(ComplexPolynomial::constant(Complex64::new(1.0, 0.0)));
    for k in 1..=n {
        let next = &x_pows[k - 1] * &x;
        x_pows.push(next);
    }
    let mut p_pows = Vec::with_capacity(n + 1);
    p_pows.push(ComplexPolynomial::constant(Complex64::new(1.0, 0.0)));
    for k in 1..=n {
        let next = &p_pows[k - 1] * p;
        p_pows.push(next);
    }

    let mut homogenized = ComplexPolynomial::zero();
    for (k, a) in p.coeffs().iter().enumerate() {
        let term = (&x_pows[k] * &p_pows[n - k]).scale(a.conj());
        homogenized = &homogenized + &term;
    }
    if magnitudes {
        let shift = ComplexPolynomial::linear_factor(-c);
        &(&homogenized * &shift) + &p_pows[n]
    } else {
        let shift = ComplexPolynomial::linear_factor(c.conj());
        &(&homogenized * &shift) - &p_pows[n]
    }
}

/// Drop leading coefficients that are indistinguishable from rounding:
/// `|e_k| <= ELIMINANT_TRIM * max(bound_k, noise(k))`.
fn trim_leading(
    e: &ComplexPolynomial,
    bound: &ComplexPolynomial,
    noise: impl Fn(usize) -> f64,
) -> ComplexPolynomial {
    let mut coeffs = e.coeffs().to_vec();
    while coeffs.len() > 1 {
        let k = coeffs.len() - 1;
        let scale = bound
            .coeffs()
            .get(k)
            .map_or(0.0, |b| b.norm())
            .max(noise(k));
        if coeffs[k].norm() > ELIMINANT_TRIM * scale {
            break;
        }
        coeffs.pop();
    }
    ComplexPolynomial::new(coeffs)
}

/// Eliminant coefficients from its values on the circle `|u| = radius`
/// (inverse DFT of `n^2 + 2` samples).
pub fn eliminant_by_interpolation(map: &StandardRationalMap, radius: f64) -> ComplexPolynomial {
    let n = map.degree();
    let samples = n * n + 2;
    let values: Vec<Complex64> = (0..samples)
        .map(|j| {
            let u = Complex64::from_polar(radius, TAU * j as f64 / samples as f64);
            eval_eliminant(map, u)
        })
        .collect();
    let coeffs: Vec<Complex64> = (0..samples)
        .map(|k| {
            let sum: Complex64 = values
                .iter()
                .enumerate()
                .map(|(j, v)| {
                    v * Complex64::from_polar(1.0, -TAU * (j * k) as f64 / samples as f64)
                })
                .sum();
            sum / samples as f64 / radius.powi(k as i32)
        })
        .collect();
    let e = ComplexPolynomial::new(coeffs);
    // sampling noise on |u| = radius, expressed per coefficient
    let floor = e
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, a)| a.norm() * radius.powi(k as i32))
        .fold(0.0, f64::max);
    trim_leading(&e, &magnitude_bound(map), |k| floor / radius.powi(k as i32))
}

/// Direct evaluation of `E(u)` in homogeneous form (no division by `p(u)`).
pub(crate) fn eval_eliminant(map: &StandardRationalMap, u: Complex64) -> Complex64 {
    let p = map.p();
    let n = p.degree();
    let pu = p.eval(u);
    let x = map.c() * pu + 1.0;
    let mut hom = Complex64::new(0.0, 0.0);
    for (k, a) in p.coeffs().iter().enumerate() {
        hom += a.conj() * x.powu(k as u32) * pu.powu((n - k) as u32);
    }
    hom * (u - map.c().conj()) - pu.powu(n as u32)
}

fn dynamic_range(p: &ComplexPolynomial) -> f64 {
    let mags: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| c.norm())
        .filter(|&m| m > 0.0)
        .collect();
    let max = mags.iter().copied().fold(0.0, f64::max);
    let min = mags.iter().copied().fold(f64::INFINITY, f64::min);
    if mags.is_empty() {
        1.0
    } else {
        max / min
    }
}

/// Geometric-mean root modulus `(|e_0| / |e_N|)^(1/N)`, or one when `e_0 = 0`.
fn interpolation_radius(p: &ComplexPolynomial) -> f64 {
    let n = p.degree();
    let low = p.coeffs()[0].norm();
    if n == 0 || low == 0.0 {
        return 1.0;
    }
    let r = (low / p.leading().norm()).powf(1.0 / n as f64);
    if r.is_finite() && r > 0.0 {
        r
    } else {
        1.0
    }
}
