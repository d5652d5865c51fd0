#![allow(dead_code)]

use logharmonic::{Complex64, ComplexPolynomial, StandardRationalMap};
use rand::Rng;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Real `p` of degree 2..=4 with `|lead| >= 0.5` and `|c| <= 3`.
pub fn random_instance(rng: &mut impl Rng) -> StandardRationalMap {
    let n = rng.gen_range(2..=4);
    let mut coeffs: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
    let lead = rng.gen_range(0.5..2.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    coeffs.push(lead);
    let radius = 3.0 * rng.gen::<f64>().sqrt();
    let angle = rng.gen_range(0.0..std::f64::consts::TAU);
    StandardRationalMap::new(
        Complex64::from_polar(radius, angle),
        ComplexPolynomial::from_real(&coeffs),
    )
    .unwrap()
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::new(0.0, 0.0);
    let mut d = Complex64::new(0.0, 0.0);
    for &a in coeffs.iter().rev() {
        d = d * z + v;
        v = v * z + a;
    }
    (v, d)
}

/// `z - conj(c) - 1/conj(p(z))` and its Wirtinger derivatives, evaluated from
/// the raw coefficients.
pub fn field(map: &StandardRationalMap, z: Complex64) -> (Complex64, Complex64, Complex64) {
    let (p, dp) = horner(map.p().coeffs(), z);
    let h = z - map.c().conj() - 1.0 / p.conj();
    let h_zbar = dp.conj() / (p.conj() * p.conj());
    (h, Complex64::new(1.0, 0.0), h_zbar)
}

fn polish(map: &StandardRationalMap, mut z: Complex64) -> Option<Complex64> {
    for _ in 0..100 {
        let (h, a, b) = field(map, z);
        let det = a.norm_sqr() - b.norm_sqr();
        if !h.is_finite() || det.abs() < 1e-14 {
            return None;
        }
        let step = (b * h.conj() - a.conj() * h) / det;
        let step = if step.norm() > 1.0 {
            step / step.norm()
        } else {
            step
        };
        z += step;
        if step.norm() < 1e-15 * (1.0 + z.norm()) {
            break;
        }
    }
    let (h, _, _) = field(map, z);
    (h.norm() <= 1e-11 * (1.0 + z.norm())).then_some(z)
}

/// Brute force: Newton from every node of a square grid centered at `conj(c)`
/// and from rings around every root of `p`, deduplicated at `1e-7`.
pub fn brute_force_zeros(
    map: &StandardRationalMap,
    half_width: f64,
    resolution: usize,
) -> Vec<Complex64> {
    let center = map.c().conj();
    let mut starts = Vec::new();
    let h = 2.0 * half_width / (resolution - 1) as f64;
    for j in 0..resolution {
        for i in 0..resolution {
            starts.push(center + c(-half_width + i as f64 * h, -half_width + j as f64 * h));
        }
    }
    for root in durand_kerner(map.p()) {
        for k in 0..64 {
            for scale in [1e-3, 1e-2, 5e-2, 0.2] {
                starts.push(root + Complex64::from_polar(scale, k as f64 * 0.0981748));
            }
        }
    }
    let mut zeros: Vec<Complex64> = Vec::new();
    for s in starts {
        if let Some(z) = polish(map, s) {
            if (z - center).re.abs() <= half_width
                && (z - center).im.abs() <= half_width
                && zeros.iter().all(|w| (w - z).norm() > 1e-7)
            {
                zeros.push(z);
            }
        }
    }
    zeros
}

/// Durand-Kerner on the raw coefficients.
pub fn durand_kerner(p: &ComplexPolynomial) -> Vec<Complex64> {
    let coeffs = p.coeffs();
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|a| a / lead).collect();
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(1.0 + 0.1 * k as f64, 0.4 + k as f64 * 1.7))
        .collect();
    for _ in 0..500 {
        for k in 0..n {
            let (v, _) = horner(&monic, roots[k]);
            let denom: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| roots[k] - roots[j])
                .product();
            roots[k] -= v / denom;
        }
    }
    roots
}

pub fn hausdorff(a: &[Complex64], b: &[Complex64]) -> f64 {
    let one_way = |x: &[Complex64], y: &[Complex64]| {
        x.iter()
            .map(|p| {
                y.iter()
                    .map(|q| (p - q).norm())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    if a.is_empty() && b.is_empty() {
        return 0.0;
    }
    one_way(a, b).max(one_way(b, a))
}
