//! The standard form `r(z) = c + 1/p(z)` and the harmonic field it induces.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::ComplexPolynomial;

/// `r(z) = c + 1/p(z)` with `deg p >= 2`.
///
/// `r` has a critical point of degree `n - 1` at infinity and `r(inf) = c`.
/// The associated harmonic function is `H(z) = z - conj(c) - 1/conj(p(z))`,
/// whose zeros are the fixed points of the anti-map `z -> conj(r(z))`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StandardRationalMap {
    c: Complex64,
    p: ComplexPolynomial,
}

impl StandardRationalMap {
    pub fn new(c: Complex64, p: ComplexPolynomial) -> Result<Self> {
        if p.degree() < 2 {
            return Err(Error::InvalidInput(format!(
                "standard form needs deg p >= 2, got {}",
                p.degree()
            )));
        }
        if !c.re.is_finite() || !c.im.is_finite() {
            return Err(Error::InvalidInput("c must be finite".into()));
        }
        Ok(Self { c, p })
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    pub fn p(&self) -> &ComplexPolynomial {
        &self.p
    }

    pub fn degree(&self) -> usize {
        self.p.degree()
    }

    /// Same polynomial, different `c`.
    pub fn with_c(&self, c: Complex64) -> Self {
        Self {
            c,
            p: self.p.clone(),
        }
    }

    pub fn r(&self, z: Complex64) -> Complex64 {
        self.c + self.p.eval(z).inv()
    }

    /// `r'(z) = -p'(z) / p(z)^2`.
    pub fn r_prime(&self, z: Complex64) -> Complex64 {
        let (v, d) = self.p.eval_with_derivative(z);
        -d / (v * v)
    }

    /// One step of the anti-map `z -> conj(c + 1/p(z))`.
    pub fn anti_map(&self, z: Complex64) -> Complex64 {
        self.r(z).conj()
    }

    /// `H(z) = z - conj(c) - 1/conj(p(z))`.
    pub fn h(&self, z: Complex64) -> Complex64 {
        z - self.c.conj() - self.p.eval(z).conj().inv()
    }

    /// Wirtinger derivative `H_zbar = conj(p'(z)) / conj(p(z))^2 = -conj(r'(z))`;
    /// the analytic derivative `H_z` is identically one.
    pub fn h_zbar(&self, z: Complex64) -> Complex64 {
        -self.r_prime(z).conj()
    }

    /// Violation of `conj(u) = c + 1/p(u)`, the condition that an eliminant
    /// root `u` is a genuine zero of `H`.
    pub fn genuineness_residual(&self, u: Complex64) -> f64 {
        (u.conj() - self.r(u)).norm()
    }

    /// `10 (1 + |c| + fujiwara(p))`: a circle of this radius about the origin
    /// encloses every zero and pole of `H`.
    pub fn large_circle_radius(&self) -> f64 {
        10.0 * (1.0 + self.c.norm() + self.p.fujiwara_bound())
    }
}

/// A planar field with Wirtinger derivatives, sampled by the grid oracle and
/// the winding-number tracker.
pub trait PlanarField {
    fn value(&self, z: Complex64) -> Complex64;

    /// `(F_z, F_zbar)` at `z`.
    fn wirtinger(&self, z: Complex64) -> (Complex64, Complex64);

    /// Smallest of the quantities that must stay away from zero on a contour
    /// (the field itself, plus whatever controls its poles).
    fn clearance(&self, z: Complex64) -> f64 {
        self.value(z).norm()
    }
}

impl PlanarField for StandardRationalMap {
    fn value(&self, z: Complex64) -> Complex64 {
        self.h(z)
    }

    fn wirtinger(&self, z: Complex64) -> (Complex64, Complex64) {
        (Complex64::new(1.0, 0.0), self.h_zbar(z))
    }

    fn clearance(&self, z: Complex64) -> f64 {
        self.h(z).norm().min(self.p.eval(z).norm())
    }
}
