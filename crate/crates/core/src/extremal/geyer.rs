use std::f64::consts::TAU;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::ComplexPolynomial;

/// Bound on `|p'(z_j)|` and `|p(z_j) - conj(z_j)|`.
pub const GEYER_RESIDUAL_TOL: f64 = 1e-9;
/// Minimum separation of critical points.
pub const MIN_SEPARATION: f64 = 1e-6;
/// Points with `|Im| <=` this are treated as real.
const REAL_AXIS_TOL: f64 = 1e-12;
const NEWTON_ITERS: usize = 200;

/// Real polynomial of degree `n` whose `n - 1` critical points are all fixed
/// by `z -> conj(p(z))`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeyerPolynomial {
    pub poly: ComplexPolynomial,
    pub critical_points: Vec<Complex64>,
}

/// The two real conditions fixing the affine freedom: `sum Re z_j = sum_re`
/// and `|a| = abs_a`, where `p'(z) = a * prod (z - z_j)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Normalization {
    pub sum_re: f64,
    pub abs_a: f64,
}

impl Normalization {
    /// Centered with `|a| = n/2` for seeds symmetric under `z -> -z`,
    /// otherwise monic with the seed's real-part sum.
    pub fn for_seeds(n: usize, seeds: &[Complex64]) -> Self {
        let symmetric = seeds
            .iter()
            .all(|s| seeds.iter().any(|t| (s + t).norm() <= 1e-9));
        if symmetric {
            Self {
                sum_re: 0.0,
                abs_a: n as f64 / 2.0,
            }
        } else {
            Self {
                sum_re: seeds.iter().map(|s| s.re).sum(),
                abs_a: n as f64,
            }
        }
    }
}

impl GeyerPolynomial {
    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    /// `(max |p'(z_j)|, max |p(z_j) - conj(z_j)|)`, evaluated afresh.
    pub fn residuals(&self) -> (f64, f64) {
        let dp = self.poly.derivative();
        self.critical_points.iter().fold((0.0, 0.0), |(a, b), &z| {
            (
                f64::max(a, dp.eval(z).norm()),
                f64::max(b, (self.poly.eval(z) - z.conj()).norm()),
            )
        })
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.degree();
        if n < 2 || self.critical_points.len() != n - 1 {
            return Err(Error::Inconsistent(format!(
                "degree {n} with {} critical points",
                self.critical_points.len()
            )));
        }
        if !self.poly.is_real(1e-12) {
            return Err(Error::Inconsistent("coefficients are not real".into()));
        }
        if !conjugation_closed(&self.critical_points, 1e-9) {
            return Err(Error::Inconsistent(
                "critical set is not closed under conjugation".into(),
            ));
        }
        if min_separation(&self.critical_points) <= MIN_SEPARATION {
            return Err(Error::Inconsistent("critical points collide".into()));
        }
        let (crit, fixed) = self.residuals();
        let worst = crit.max(fixed);
        if !(worst <= GEYER_RESIDUAL_TOL) {
            return Err(Error::Unrealizable { residual: worst });
        }
        Ok(())
    }

    /// Conjugate by `z -> alpha z + beta` (`alpha > 0`, `beta` real) so the
    /// critical points have zero mean real part and `|lead| = 1/2`.
    pub fn canonical(&self) -> GeyerPolynomial {
        let n = self.degree();
        let beta = self.critical_points.iter().map(|z| z.re).sum::<f64>()
            / self.critical_points.len() as f64;
        let alpha = (0.5 / self.poly.leading().norm()).powf(1.0 / (n - 1) as f64);
        self.conjugated(alpha, beta)
    }

    /// Conjugate by `z -> factor z`. Critical points scale by `1 / factor`.
    pub fn rescaled(&self, factor: f64) -> GeyerPolynomial {
        self.conjugated(factor, 0.0)
    }

    fn conjugated(&self, alpha: f64, beta: f64) -> GeyerPolynomial {
        let inner = ComplexPolynomial::from_real(&[beta, alpha]);
        let shifted = &ComplexPolynomial::compose(&self.poly, &inner)
            - &ComplexPolynomial::constant(Complex64::new(beta, 0.0));
        let poly = real_part(&shifted.scale(Complex64::new(1.0 / alpha, 0.0)));
        let mut critical_points: Vec<Complex64> = self
            .critical_points
            .iter()
            .map(|z| (z - beta) / alpha)
            .collect();
        sort_points(&mut critical_points);
        GeyerPolynomial {
            poly,
            critical_points,
        }
    }

    /// Same polynomial up to real affine conjugation and `z -> -z`.
    pub fn equivalent(&self, other: &GeyerPolynomial, tol: f64) -> bool {
        if self.degree() != other.degree() {
            return false;
        }
        let a = self.canonical();
        let b = other.canonical();
        let close = |x: &ComplexPolynomial, y: &ComplexPolynomial| {
            x.coeffs()
                .iter()
                .zip(y.coeffs())
                .all(|(u, v)| (u - v).norm() <= tol)
        };
        let reflected = ComplexPolynomial::new(
            b.poly
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 0 { -c } else { *c })
                .collect(),
        );
        close(&a.poly, &b.poly) || close(&a.poly, &reflected)
    }
}

/// Direct construction from prescribed critical points: with
/// `P = integral of prod (z - z_j)` solve `a P(z_j) + d = conj(z_j)` for real
/// `(a, d)` in least squares. An underdetermined system is closed with the
/// monic choice `a = n`.
pub fn geyer_from_critical_points(points: &[Complex64]) -> Result<GeyerPolynomial> {
    check_points(points)?;
    if min_separation(points) <= MIN_SEPARATION {
        return Err(Error::InvalidInput(
            "critical points are not distinct".into(),
        ));
    }
    let n = points.len() + 1;
    let antider = real_part(&ComplexPolynomial::from_roots(points)).antiderivative();
    let (a, d) = match least_squares_ad(&antider, points) {
        Some(ad) => ad,
        None => {
            let a = n as f64;
            let d = points
                .iter()
                .map(|z| z.re - a * antider.eval(*z).re)
                .sum::<f64>()
                / points.len() as f64;
            (a, d)
        }
    };
    let poly = affine(&antider, a, d);
    let residual = points
        .iter()
        .map(|z| (poly.eval(*z) - z.conj()).norm())
        .fold(0.0, f64::max);
    if !(residual <= GEYER_RESIDUAL_TOL) {
        return Err(Error::Unrealizable { residual });
    }
    let mut critical_points = points.to_vec();
    sort_points(&mut critical_points);
    let g = GeyerPolynomial {
        poly,
        critical_points,
    };
    g.validate()?;
    Ok(g)
}

pub fn geyer_solve(n: usize, seeds: &[Complex64]) -> Result<GeyerPolynomial> {
    geyer_solve_with(n, seeds, Normalization::for_seeds(n, seeds))
}

/// Newton solve for the critical points and `d` (conjugation symmetry built
/// into the parametrization), trying both signs of `a`.
pub fn geyer_solve_with(
    n: usize,
    seeds: &[Complex64],
    norm: Normalization,
) -> Result<GeyerPolynomial> {
    let first = initial_sign(seeds);
    match geyer_solve_signed(n, seeds, norm, first) {
        Ok(g) => Ok(g),
        Err(_) => geyer_solve_signed(n, seeds, norm, -first),
    }
}

/// [`geyer_solve_with`] for one fixed sign of `a`.
pub fn geyer_solve_signed(
    n: usize,
    seeds: &[Complex64],
    norm: Normalization,
    sign: f64,
) -> Result<GeyerPolynomial> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("degree {n} < 2")));
    }
    if seeds.len() != n - 1 {
        return Err(Error::InvalidInput(format!(
            "{} seed points for degree {n}",
            seeds.len()
        )));
    }
    if !(norm.abs_a > 0.0 && norm.abs_a.is_finite() && norm.sum_re.is_finite()) {
        return Err(Error::InvalidInput("invalid normalization".into()));
    }
    check_points(seeds)?;
    let layout = Layout::from_seeds(seeds);
    let a = sign.signum() * norm.abs_a;
    let mut x = layout.initial(seeds, a);
    let system = |x: &DVector<f64>| layout.residual(x, a, norm.sum_re);

    let mut f = system(&x);
    let mut iterations = 0;
    while iterations < NEWTON_ITERS && max_abs(&f) > 1e-14 {
        iterations += 1;
        let jac = jacobian(&system, &x);
        let Some(dx) = jac.lu().solve(&(-&f)) else {
            break;
        };
        let current = max_abs(&f);
        let mut lambda = 1.0;
        let mut accepted = false;
        while lambda >= 1e-4 {
            let trial = &x + lambda * &dx;
            let ft = system(&trial);
            if max_abs(&ft) < current {
                x = trial;
                f = ft;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    let (points, poly) = layout.build(&x, a);
    let mut critical_points = points;
    sort_points(&mut critical_points);
    let g = GeyerPolynomial {
        poly,
        critical_points,
    };
    g.validate().map_err(|_| Error::NonConvergence {
        context: "geyer newton",
        iterations,
    })?;
    Ok(g)
}

/// Deterministic seed ladder: scaled roots of unity, real spreads, then
/// conjugate-pair lattices.
pub fn seed_ladder(n: usize) -> Vec<Vec<Complex64>> {
    let mut ladder = roots_of_unity_seeds(n);
    ladder.extend(real_spread_seeds(n));
    ladder.extend(pair_lattice_seeds(n));
    ladder
}

/// The `(n - 1)`-st roots of unity at radii 1, 0.6 and 1.5.
pub fn roots_of_unity_seeds(n: usize) -> Vec<Vec<Complex64>> {
    let m = n.saturating_sub(1);
    if m == 0 {
        return Vec::new();
    }
    [1.0, 0.6, 1.5]
        .into_iter()
        .map(|radius| {
            let reals: Vec<f64> = if m % 2 == 1 {
                vec![radius]
            } else {
                vec![radius, -radius]
            };
            let pairs: Vec<Complex64> = (1..=(m - 1) / 2)
                .map(|k| Complex64::from_polar(radius, TAU * k as f64 / m as f64))
                .collect();
            conjugate_closed(&reals, &pairs)
        })
        .collect()
}

/// `n - 1` equispaced real points in `[-s, s]` for `s` in 1, 1.5, 0.6.
pub fn real_spread_seeds(n: usize) -> Vec<Vec<Complex64>> {
    let m = n.saturating_sub(1);
    if m == 0 {
        return Vec::new();
    }
    [1.0, 1.5, 0.6]
        .into_iter()
        .map(|scale| {
            let reals: Vec<f64> = if m == 1 {
                vec![scale]
            } else {
                (0..m)
                    .map(|k| scale * (-1.0 + 2.0 * k as f64 / (m - 1) as f64))
                    .collect()
            };
            conjugate_closed(&reals, &[])
        })
        .collect()
}

/// Conjugate pairs on a small lattice above `[-0.5, 0.5]`, the remaining
/// points real.
pub fn pair_lattice_seeds(n: usize) -> Vec<Vec<Complex64>> {
    let m = n.saturating_sub(1);
    let mut ladder = Vec::new();
    for pairs_count in (1..=m / 2).rev() {
        let real_count = m - 2 * pairs_count;
        for height in [0.8, 1.2] {
            let reals: Vec<f64> = match real_count {
                0 => Vec::new(),
                1 => vec![1.0],
                r => (0..r)
                    .map(|k| -1.0 + 2.0 * k as f64 / (r - 1) as f64)
                    .collect(),
            };
            let pairs: Vec<Complex64> = (0..pairs_count)
                .map(|k| {
                    let x = if pairs_count == 1 {
                        -0.5
                    } else {
                        -0.5 + k as f64 / (pairs_count - 1) as f64
                    };
                    let y = if k % 2 == 0 { height } else { height * 0.6 };
                    Complex64::new(x, y)
                })
                .collect();
            ladder.push(conjugate_closed(&reals, &pairs));
        }
    }
    ladder
}

/// Random conjugation-closed seed with centered real parts.
pub fn random_seed(n: usize, rng: &mut impl Rng) -> Vec<Complex64> {
    let m = n - 1;
    let choices: Vec<usize> = (0..=m).filter(|k| (m - k).is_multiple_of(2)).collect();
    let real_count = choices[rng.gen_range(0..choices.len())];
    let mut reals: Vec<f64> = (0..real_count).map(|_| rng.gen_range(-2.0..2.0)).collect();
    reals.sort_by(f64::total_cmp);
    let pairs: Vec<Complex64> = (0..(m - real_count) / 2)
        .map(|_| Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(0.1..2.0)))
        .collect();
    let mean =
        (reals.iter().sum::<f64>() + 2.0 * pairs.iter().map(|p| p.re).sum::<f64>()) / m as f64;
    let reals: Vec<f64> = reals.iter().map(|r| r - mean).collect();
    let pairs: Vec<Complex64> = pairs.iter().map(|p| p - mean).collect();
    conjugate_closed(&reals, &pairs)
}

pub fn geyer_candidates(
    n: usize,
    rng_seed: u64,
    want: usize,
    random_attempts: usize,
) -> Result<Vec<GeyerPolynomial>> {
    geyer_candidates_from(n, &seed_ladder(n), rng_seed, want, random_attempts)
}

/// Up to `want` pairwise inequivalent Geyer polynomials of degree `n`, from
/// `ladder` followed by `random_attempts` random seeds drawn from a generator
/// seeded with `rng_seed`. Both signs of `a` are tried per seed.
pub fn geyer_candidates_from(
    n: usize,
    ladder: &[Vec<Complex64>],
    rng_seed: u64,
    want: usize,
    random_attempts: usize,
) -> Result<Vec<GeyerPolynomial>> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("degree {n} < 2")));
    }
    let mut found: Vec<GeyerPolynomial> = Vec::new();
    let consider = |seeds: &[Complex64], found: &mut Vec<GeyerPolynomial>| {
        let norm = Normalization::for_seeds(n, seeds);
        let first = initial_sign(seeds);
        for sign in [first, -first] {
            if found.len() >= want {
                return;
            }
            if let Ok(g) = geyer_solve_signed(n, seeds, norm, sign) {
                if !found.iter().any(|h| h.equivalent(&g, 1e-6)) {
                    found.push(g);
                }
            }
        }
    };
    for seeds in ladder {
        consider(seeds, &mut found);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    for _ in 0..random_attempts {
        if found.len() >= want {
            break;
        }
        let seeds = random_seed(n, &mut rng);
        consider(&seeds, &mut found);
    }
    if found.is_empty() {
        return Err(Error::NonConvergence {
            context: "geyer seed ladder",
            iterations: random_attempts,
        });
    }
    Ok(found)
}

/// Unknown layout: real critical points, then `(re, im)` of each upper
/// half-plane point, then `d`.
struct Layout {
    reals: usize,
    pairs: usize,
}

impl Layout {
    fn from_seeds(seeds: &[Complex64]) -> Self {
        let reals = seeds.iter().filter(|s| s.im.abs() <= REAL_AXIS_TOL).count();
        Self {
            reals,
            pairs: (seeds.len() - reals) / 2,
        }
    }

    fn initial(&self, seeds: &[Complex64], a: f64) -> DVector<f64> {
        let mut x = Vec::with_capacity(self.reals + 2 * self.pairs + 1);
        x.extend(
            seeds
                .iter()
                .filter(|s| s.im.abs() <= REAL_AXIS_TOL)
                .map(|s| s.re),
        );
        for s in seeds.iter().filter(|s| s.im > REAL_AXIS_TOL) {
            x.push(s.re);
            x.push(s.im);
        }
        x.push(0.0);
        let mut x = DVector::from_vec(x);
        let (points, poly) = self.build(&x, a);
        let d = points.iter().map(|z| z.re - poly.eval(*z).re).sum::<f64>() / points.len() as f64;
        let last = x.len() - 1;
        x[last] = d;
        x
    }

    fn points(&self, x: &DVector<f64>) -> Vec<Complex64> {
        let mut pts: Vec<Complex64> = (0..self.reals).map(|k| Complex64::new(x[k], 0.0)).collect();
        for k in 0..self.pairs {
            let z = Complex64::new(x[self.reals + 2 * k], x[self.reals + 2 * k + 1]);
            pts.push(z);
            pts.push(z.conj());
        }
        pts
    }

    fn build(&self, x: &DVector<f64>, a: f64) -> (Vec<Complex64>, ComplexPolynomial) {
        let points = self.points(x);
        let antider = real_part(&ComplexPolynomial::from_roots(&points)).antiderivative();
        let poly = affine(&antider, a, x[x.len() - 1]);
        (points, poly)
    }

    fn residual(&self, x: &DVector<f64>, a: f64, sum_re: f64) -> DVector<f64> {
        let (points, poly) = self.build(x, a);
        let mut f = Vec::with_capacity(x.len());
        for z in &points[..self.reals] {
            f.push(poly.eval(*z).re - z.re);
        }
        for k in 0..self.pairs {
            let z = points[self.reals + 2 * k];
            let v = poly.eval(z) - z.conj();
            f.push(v.re);
            f.push(v.im);
        }
        f.push(points.iter().map(|z| z.re).sum::<f64>() - sum_re);
        DVector::from_vec(f)
    }
}

fn jacobian(system: &impl Fn(&DVector<f64>) -> DVector<f64>, x: &DVector<f64>) -> DMatrix<f64> {
    let dim = x.len();
    let mut jac = DMatrix::zeros(dim, dim);
    for k in 0..dim {
        let h = 1e-7 * (1.0 + x[k].abs());
        let mut plus = x.clone();
        let mut minus = x.clone();
        plus[k] += h;
        minus[k] -= h;
        let column = (system(&plus) - system(&minus)) / (2.0 * h);
        jac.set_column(k, &column);
    }
    jac
}

fn max_abs(v: &DVector<f64>) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Real `(a, d)` minimizing `sum |a P(z_j) + d - conj(z_j)|^2`, or `None` if
/// the normal equations are singular.
fn least_squares_ad(antider: &ComplexPolynomial, points: &[Complex64]) -> Option<(f64, f64)> {
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for z in points {
        let v = antider.eval(*z);
        rows.extend([v.re, 1.0, v.im, 0.0]);
        rhs.extend([z.re, -z.im]);
    }
    let a = DMatrix::from_row_slice(rhs.len(), 2, &rows);
    let b = DVector::from_vec(rhs);
    let svd = a.svd(true, true);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    if !(smin > 1e-12 * smax) {
        return None;
    }
    let sol = svd.solve(&b, 0.0).ok()?;
    Some((sol[0], sol[1]))
}

fn initial_sign(seeds: &[Complex64]) -> f64 {
    let antider = real_part(&ComplexPolynomial::from_roots(seeds)).antiderivative();
    match least_squares_ad(&antider, seeds) {
        Some((a, _)) if a < 0.0 => -1.0,
        _ => 1.0,
    }
}

fn affine(antider: &ComplexPolynomial, a: f64, d: f64) -> ComplexPolynomial {
    &antider.scale(Complex64::new(a, 0.0)) + &ComplexPolynomial::constant(Complex64::new(d, 0.0))
}

fn real_part(p: &ComplexPolynomial) -> ComplexPolynomial {
    ComplexPolynomial::new(
        p.coeffs()
            .iter()
            .map(|c| Complex64::new(c.re, 0.0))
            .collect(),
    )
}

fn check_points(points: &[Complex64]) -> Result<()> {
    if points.is_empty() {
        return Err(Error::InvalidInput("no critical points".into()));
    }
    if points.iter().any(|z| !z.is_finite()) {
        return Err(Error::InvalidInput("non-finite critical point".into()));
    }
    if !conjugation_closed(points, 1e-9) {
        return Err(Error::InvalidInput(
            "critical points are not closed under conjugation".into(),
        ));
    }
    Ok(())
}

fn conjugation_closed(points: &[Complex64], tol: f64) -> bool {
    let mut used = vec![false; points.len()];
    for z in points {
        match (0..points.len()).find(|&j| !used[j] && (points[j] - z.conj()).norm() <= tol) {
            Some(j) => used[j] = true,
            None => return false,
        }
    }
    true
}

fn min_separation(points: &[Complex64]) -> f64 {
    let mut best = f64::INFINITY;
    for (i, z) in points.iter().enumerate() {
        for w in &points[i + 1..] {
            best = best.min((z - w).norm());
        }
    }
    best
}

fn conjugate_closed(reals: &[f64], upper: &[Complex64]) -> Vec<Complex64> {
    let mut pts: Vec<Complex64> = reals.iter().map(|&r| Complex64::new(r, 0.0)).collect();
    for z in upper {
        pts.push(*z);
        pts.push(z.conj());
    }
    pts
}

fn sort_points(points: &mut [Complex64]) {
    points.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_coeffs(p: &ComplexPolynomial, expected: &[f64], tol: f64) {
        assert_eq!(p.degree() + 1, expected.len(), "{p}");
        for (a, b) in p.coeffs().iter().zip(expected) {
            assert!((a - c(*b, 0.0)).norm() <= tol, "{p} vs {expected:?}");
        }
    }

    #[test]
    fn direct_examples() {
        let g = geyer_from_critical_points(&[c(1.0, 0.0)]).unwrap();
        assert_coeffs(&g.poly, &[2.0, -2.0, 1.0], 1e-14);
        let g = geyer_from_critical_points(&[c(-1.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert_coeffs(&g.poly, &[0.0, 1.5, 0.0, -0.5], 1e-14);
        let g = geyer_from_critical_points(&[c(0.0, 1.0), c(0.0, -1.0)]).unwrap();
        assert_coeffs(&g.poly, &[0.0, -1.5, 0.0, -0.5], 1e-14);
        assert!(matches!(
            geyer_from_critical_points(&[c(-1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]),
            Err(Error::Unrealizable { .. })
        ));
    }

    #[test]
    fn direct_rejects_non_closed_set() {
        assert!(geyer_from_critical_points(&[c(0.0, 1.0), c(1.0, 0.0)]).is_err());
    }

    #[test]
    fn newton_examples() {
        let g = geyer_solve(2, &[c(1.0, 0.0)]).unwrap();
        assert_coeffs(&g.poly, &[2.0, -2.0, 1.0], 1e-12);
        let g = geyer_solve(3, &[c(-1.1, 0.0), c(1.1, 0.0)]).unwrap();
        assert_coeffs(&g.poly, &[0.0, 1.5, 0.0, -0.5], 1e-10);
        let g = geyer_solve(4, &[c(1.0, 0.0), c(-0.5, 0.8), c(-0.5, -0.8)]).unwrap();
        g.validate().unwrap();
        assert_eq!(g.degree(), 4);
    }

    #[test]
    fn canonical_form_identifies_affine_copies() {
        let a = geyer_from_critical_points(&[c(1.0, 0.0)]).unwrap();
        let b = geyer_solve(2, &[c(0.3, 0.0)]).unwrap();
        assert!(a.equivalent(&b, 1e-9));
        let canon = a.canonical();
        assert_coeffs(&canon.poly, &[0.0, 0.0, 0.5], 1e-14);
        canon.validate().unwrap();
    }

    #[test]
    fn rescaling_keeps_critical_fixed_points() {
        let g = geyer_solve(3, &[c(-1.1, 0.0), c(1.1, 0.0)]).unwrap();
        let h = g.rescaled(0.7);
        h.validate().unwrap();
        // z^3 -> 0.49 z^3 after conjugation by 0.7 z
        assert!((h.poly.leading().re + 0.5 * 0.49).abs() < 1e-12);
        assert!(h.equivalent(&g, 1e-9));
    }

    #[test]
    fn ladder_seeds_are_conjugation_closed() {
        for n in 2..=7 {
            for seeds in seed_ladder(n) {
                assert_eq!(seeds.len(), n - 1);
                assert!(conjugation_closed(&seeds, 0.0));
            }
        }
    }
}
