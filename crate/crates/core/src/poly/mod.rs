//! Dense univariate polynomials over `Complex64`.

mod roots;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use roots::{roots, roots_with_budget, RootCluster, RootSet, DEFAULT_ROOT_BUDGET};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A polynomial stored as ascending coefficients: `coeffs[k]` multiplies `z^k`.
///
/// The representation is canonical: the last coefficient is nonzero, except
/// for the zero polynomial which is stored as a single zero entry.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Complex64>", into = "Vec<Complex64>")]
pub struct ComplexPolynomial {
    coeffs: Vec<Complex64>,
}

impl ComplexPolynomial {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.len() > 1 && coeffs[coeffs.len() - 1] == ZERO {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(ZERO);
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![ZERO] }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `z`.
    pub fn identity() -> Self {
        Self::new(vec![ZERO, ONE])
    }

    /// `z - root`.
    pub fn linear_factor(root: Complex64) -> Self {
        Self::new(vec![-root, ONE])
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        roots.iter().fold(Self::constant(ONE), |acc, &r| {
            &acc * &Self::linear_factor(r)
        })
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == ZERO
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs[self.coeffs.len() - 1]
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    /// Value and first derivative in one Horner pass.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut value = ZERO;
        let mut deriv = ZERO;
        for &c in self.coeffs.iter().rev() {
            deriv = deriv * z + value;
            value = value * z + c;
        }
        (value, deriv)
    }

    /// `sum |a_k| |z|^k`, the natural scale for the rounding error of `eval`.
    pub fn abs_eval(&self, r: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + c.norm())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(ZERO);
        out.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| c / (k as f64 + 1.0)),
        );
        Self::new(out)
    }

    /// `outer(inner(z))`, by Horner nesting over the coefficients of `outer`.
    pub fn compose(outer: &Self, inner: &Self) -> Self {
        outer
            .coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, &c| &(&acc * inner) + &Self::constant(c))
    }

    /// Coefficient-wise conjugate, so that `conj_coeffs(p)(conj z) == conj(p(z))`.
    pub fn conj_coeffs(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.conj()).collect(),
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * factor).collect())
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut result = Self::constant(ONE);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn norm_l1(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Copy rescaled so that the largest coefficient has modulus one.
    pub fn normalized(&self) -> Self {
        let m = self.max_abs_coeff();
        if m == 0.0 {
            self.clone()
        } else {
            self.scale(Complex64::new(1.0 / m, 0.0))
        }
    }

    /// Drop leading coefficients whose modulus is below `rel * max|a_k|`.
    pub fn trim_relative(&self, rel: f64) -> Self {
        let cutoff = rel * self.max_abs_coeff();
        let mut coeffs = self.coeffs.clone();
        while coeffs.len() > 1 && coeffs[coeffs.len() - 1].norm() <= cutoff {
            coeffs.pop();
        }
        Self::new(coeffs)
    }

    /// True when every coefficient is real up to `tol` relative to the largest one.
    pub fn is_real(&self, tol: f64) -> bool {
        let m = self.max_abs_coeff().max(f64::MIN_POSITIVE);
        self.coeffs.iter().all(|c| c.im.abs() <= tol * m)
    }

    /// Fujiwara's bound: every root satisfies `|z| <= 2 max_k |a_{n-k}/a_n|^{1/k}`
    /// (with the constant term halved).
    pub fn fujiwara_bound(&self) -> f64 {
        let n = self.degree();
        if n == 0 {
            return 0.0;
        }
        let lead = self.leading().norm();
        let mut bound: f64 = 0.0;
        for k in 1..=n {
            let mut ratio = self.coeffs[n - k].norm() / lead;
            if k == n {
                ratio *= 0.5;
            }
            bound = bound.max(ratio.powf(1.0 / k as f64));
        }
        2.0 * bound
    }
}

impl fmt::Debug for ComplexPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ComplexPolynomial{:?}", self.coeffs)
    }
}

impl fmt::Display for ComplexPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if *c == ZERO && !(k == 0 && first) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{k}")?,
            }
        }
        Ok(())
    }
}

impl TryFrom<Vec<Complex64>> for ComplexPolynomial {
    type Error = String;

    fn try_from(coeffs: Vec<Complex64>) -> Result<Self, Self::Error> {
        if coeffs
            .iter()
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err("polynomial coefficients must be finite".into());
        }
        Ok(Self::new(coeffs))
    }
}

impl From<ComplexPolynomial> for Vec<Complex64> {
    fn from(p: ComplexPolynomial) -> Self {
        p.coeffs
    }
}

impl Add for &ComplexPolynomial {
    type Output = ComplexPolynomial;

    fn add(self, rhs: Self) -> ComplexPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let get = |v: &[Complex64], k: usize| v.get(k).copied().unwrap_or(ZERO);
        ComplexPolynomial::new(
            (0..len)
                .map(|k| get(&self.coeffs, k) + get(&rhs.coeffs, k))
                .collect(),
        )
    }
}

impl Sub for &ComplexPolynomial {
    type Output = ComplexPolynomial;

    fn sub(self, rhs: Self) -> ComplexPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &ComplexPolynomial {
    type Output = ComplexPolynomial;

    fn neg(self) -> ComplexPolynomial {
        ComplexPolynomial {
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }
}

impl Mul for &ComplexPolynomial {
    type Output = ComplexPolynomial;

    fn mul(self, rhs: Self) -> ComplexPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ComplexPolynomial::zero();
        }
        let mut out = vec![ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ComplexPolynomial::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eval_examples() {
        let p = ComplexPolynomial::from_real(&[2.0, -2.0, 1.0]);
        assert_eq!(p.eval(c(1.0, 0.0)), c(1.0, 0.0));
        let q = ComplexPolynomial::from_real(&[0.0, 1.5, 0.0, -0.5]);
        assert_eq!(q.eval(c(1.0, 0.0)), c(1.0, 0.0));
        let s = ComplexPolynomial::from_real(&[0.0, -1.5, 0.0, -0.5]);
        assert_eq!(s.eval(c(0.0, 1.0)), c(0.0, -1.0));
    }

    #[test]
    fn derivative_examples() {
        let p = ComplexPolynomial::from_real(&[2.0, -2.0, 1.0]);
        assert_eq!(p.derivative(), ComplexPolynomial::from_real(&[-2.0, 2.0]));
        assert!(ComplexPolynomial::from_real(&[5.0]).derivative().is_zero());
        let q = ComplexPolynomial::from_real(&[0.0, 1.5, 0.0, -0.5]);
        assert_eq!(
            q.derivative(),
            ComplexPolynomial::from_real(&[1.5, 0.0, -1.5])
        );
    }

    #[test]
    fn compose_examples() {
        let sq = ComplexPolynomial::from_real(&[0.0, 0.0, 1.0]);
        let shift = ComplexPolynomial::from_real(&[1.0, 1.0]);
        assert_eq!(
            ComplexPolynomial::compose(&sq, &shift),
            ComplexPolynomial::from_real(&[1.0, 2.0, 1.0])
        );
        let plus3 = ComplexPolynomial::from_real(&[3.0, 1.0]);
        assert_eq!(
            ComplexPolynomial::compose(&plus3, &sq),
            ComplexPolynomial::from_real(&[3.0, 0.0, 1.0])
        );
        let cube = ComplexPolynomial::from_real(&[0.0, 0.0, 0.0, 1.0]);
        let twice = ComplexPolynomial::from_real(&[0.0, 2.0]);
        assert_eq!(
            ComplexPolynomial::compose(&cube, &twice),
            ComplexPolynomial::from_real(&[0.0, 0.0, 0.0, 8.0])
        );
    }

    #[test]
    fn conj_coeffs_examples() {
        let p = ComplexPolynomial::new(vec![c(0.0, 1.0), c(0.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(
            p.conj_coeffs(),
            ComplexPolynomial::new(vec![c(0.0, -1.0), c(0.0, 0.0), c(1.0, 0.0)])
        );
        let real = ComplexPolynomial::from_real(&[1.0, -4.0, 2.5]);
        assert_eq!(real.conj_coeffs(), real);
        let q = ComplexPolynomial::new(vec![c(0.0, 0.0), c(1.0, 1.0)]);
        assert_eq!(
            q.conj_coeffs(),
            ComplexPolynomial::new(vec![c(0.0, 0.0), c(1.0, -1.0)])
        );
    }

    #[test]
    fn canonical_form_trims_leading_zeros() {
        let p = ComplexPolynomial::from_real(&[1.0, 2.0, 0.0, 0.0]);
        assert_eq!(p.degree(), 1);
        let z = ComplexPolynomial::from_real(&[0.0, 0.0]);
        assert!(z.is_zero());
        assert_eq!(z.coeffs().len(), 1);
    }

    #[test]
    fn eval_with_derivative_matches_separate_calls() {
        let p = ComplexPolynomial::new(vec![c(1.0, -2.0), c(0.5, 0.5), c(-3.0, 0.0), c(0.0, 2.0)]);
        let z = c(0.3, -1.2);
        let (v, d) = p.eval_with_derivative(z);
        assert!((v - p.eval(z)).norm() < 1e-14);
        assert!((d - p.derivative().eval(z)).norm() < 1e-14);
    }

    #[test]
    fn pow_and_from_roots() {
        let p = ComplexPolynomial::from_real(&[1.0, 1.0]).pow(3);
        assert_eq!(p, ComplexPolynomial::from_real(&[1.0, 3.0, 3.0, 1.0]));
        let q = ComplexPolynomial::from_roots(&[c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)]);
        assert_eq!(q, ComplexPolynomial::from_real(&[-6.0, 11.0, -6.0, 1.0]));
    }

    #[test]
    fn fujiwara_bound_encloses_roots() {
        let q = ComplexPolynomial::from_real(&[-6.0, 11.0, -6.0, 1.0]);
        assert!(q.fujiwara_bound() >= 3.0);
    }

    #[test]
    fn serde_rejects_non_finite() {
        let err = serde_json::from_str::<ComplexPolynomial>("[[1.0, 0.0], [1e400, 0.0]]");
        assert!(err.is_err());
    }
}
