use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::map::StandardRationalMap;
use crate::poly::ComplexPolynomial;

/// `M_delta(w) = (w + delta) / (1 + delta w)` with `|delta| < 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Complex64", into = "Complex64")]
pub struct MoebiusParam {
    delta: Complex64,
}

impl MoebiusParam {
    pub fn new(delta: Complex64) -> Result<Self> {
        if !(delta.is_finite() && delta.norm() < 1.0) {
            return Err(Error::InvalidInput(format!(
                "need |delta| < 1, got {delta}"
            )));
        }
        Ok(Self { delta })
    }

    pub fn real(delta: f64) -> Result<Self> {
        Self::new(Complex64::new(delta, 0.0))
    }

    pub fn delta(&self) -> Complex64 {
        self.delta
    }
}

impl TryFrom<Complex64> for MoebiusParam {
    type Error = Error;

    fn try_from(delta: Complex64) -> Result<Self> {
        Self::new(delta)
    }
}

impl From<MoebiusParam> for Complex64 {
    fn from(m: MoebiusParam) -> Self {
        m.delta
    }
}

/// A point of the Riemann sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedComplex {
    Finite(Complex64),
    Infinity,
}

impl ExtendedComplex {
    pub fn finite(self) -> Option<Complex64> {
        match self {
            ExtendedComplex::Finite(z) => Some(z),
            ExtendedComplex::Infinity => None,
        }
    }
}

impl From<Complex64> for ExtendedComplex {
    fn from(z: Complex64) -> Self {
        ExtendedComplex::Finite(z)
    }
}

pub fn moebius_apply(m: MoebiusParam, w: ExtendedComplex) -> ExtendedComplex {
    let d = m.delta;
    match w {
        ExtendedComplex::Infinity if d == Complex64::new(0.0, 0.0) => ExtendedComplex::Infinity,
        ExtendedComplex::Infinity => ExtendedComplex::Finite(d.inv()),
        ExtendedComplex::Finite(w) => {
            let den = 1.0 + d * w;
            if den == Complex64::new(0.0, 0.0) {
                ExtendedComplex::Infinity
            } else {
                ExtendedComplex::Finite((w + d) / den)
            }
        }
    }
}

/// Standard form of `M_delta o p`: `c = 1/delta` and
/// `p_delta = delta (1 + delta p) / (delta^2 - 1)`.
pub fn perturb_to_standard_form(
    p: &ComplexPolynomial,
    m: MoebiusParam,
) -> Result<StandardRationalMap> {
    let d = m.delta;
    if d == Complex64::new(0.0, 0.0) {
        return Err(Error::InvalidInput("delta must be nonzero".into()));
    }
    if p.degree() < 2 {
        return Err(Error::InvalidInput(format!("degree {} < 2", p.degree())));
    }
    let one = ComplexPolynomial::constant(Complex64::new(1.0, 0.0));
    let p_delta = (&one + &p.scale(d)).scale(d / (d * d - 1.0));
    StandardRationalMap::new(d.inv(), p_delta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn apply_examples() {
        let id = MoebiusParam::real(0.0).unwrap();
        assert_eq!(moebius_apply(id, c(0.3, -2.0).into()), c(0.3, -2.0).into());
        assert_eq!(
            moebius_apply(id, ExtendedComplex::Infinity),
            ExtendedComplex::Infinity
        );
        let half = MoebiusParam::real(0.5).unwrap();
        assert_eq!(
            moebius_apply(half, ExtendedComplex::Infinity),
            c(2.0, 0.0).into()
        );
        assert_eq!(moebius_apply(half, c(0.0, 0.0).into()), c(0.5, 0.0).into());
        assert_eq!(
            moebius_apply(half, c(-2.0, 0.0).into()),
            ExtendedComplex::Infinity
        );
    }

    #[test]
    fn param_must_lie_in_disc() {
        assert!(MoebiusParam::real(1.0).is_err());
        assert!(MoebiusParam::new(c(0.8, 0.8)).is_err());
        assert!(MoebiusParam::new(c(f64::NAN, 0.0)).is_err());
    }

    #[test]
    fn perturbation_of_z_squared() {
        let p = ComplexPolynomial::from_real(&[0.0, 0.0, 1.0]);
        let map = perturb_to_standard_form(&p, MoebiusParam::real(0.5).unwrap()).unwrap();
        assert_eq!(map.c(), c(2.0, 0.0));
        let expected = [-2.0 / 3.0, 0.0, -1.0 / 3.0];
        for (a, b) in map.p().coeffs().iter().zip(expected) {
            assert!((a - c(b, 0.0)).norm() < 1e-15);
        }
        for z in [c(0.3, 0.1), c(-1.2, 2.0)] {
            let lhs = 2.0 - 3.0 / (2.0 + z * z);
            let rhs = (z * z + 0.5) / (1.0 + z * z / 2.0);
            assert!((lhs - rhs).norm() < 1e-14);
            assert!((map.r(z) - rhs).norm() < 1e-14);
        }
    }

    #[test]
    fn zero_delta_rejected() {
        let p = ComplexPolynomial::from_real(&[2.0, -2.0, 1.0]);
        assert!(perturb_to_standard_form(&p, MoebiusParam::real(0.0).unwrap()).is_err());
    }
}
