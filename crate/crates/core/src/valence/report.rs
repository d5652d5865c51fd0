use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harmonic::{
    solve_fixed_points, winding_number, Contour, HarmonicZero, Orientation, DEFAULT_SOLVER_TOL,
};
use crate::map::StandardRationalMap;
use crate::poly::ComplexPolynomial;

use super::poles::{pole_data, PoleData};

pub const REPORT_VERSION: u32 = 1;

/// Circle of radius `map.large_circle_radius()` about the origin.
pub fn large_circle(map: &StandardRationalMap) -> Contour {
    Contour::circle(Complex64::new(0.0, 0.0), map.large_circle_radius())
}

/// `(winding of H over region, N+ - N- - (P+ - P-) inside region)`.
pub fn argument_principle_terms(
    map: &StandardRationalMap,
    zeros: &[HarmonicZero],
    poles: &PoleData,
    region: &Contour,
) -> Result<(i64, i64)> {
    if let Some(z) = zeros
        .iter()
        .find(|z| z.orientation == Orientation::Singular && region.contains(z.location))
    {
        return Err(Error::SingularZero {
            location: z.location,
            jacobian: z.jacobian,
        });
    }
    let winding = winding_number(map, region)?;
    let zero_part: i64 = zeros
        .iter()
        .filter(|z| region.contains(z.location))
        .map(HarmonicZero::signed_order)
        .sum();
    // P+ is always zero: every pole is sense-reversing.
    let p_minus = poles.order_where(|w| region.contains(w)) as i64;
    Ok((winding, zero_part + p_minus))
}

/// Exact integer comparison of the winding of `H` over `region` against the
/// signed count of zeros and poles inside it.
pub fn argument_principle_check(
    map: &StandardRationalMap,
    zeros: &[HarmonicZero],
    region: &Contour,
) -> Result<bool> {
    let poles = pole_data(map)?;
    let (winding, expected) = argument_principle_terms(map, zeros, &poles, region)?;
    Ok(winding == expected)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValenceReport {
    pub n: usize,
    pub n_plus: u32,
    pub n_minus: u32,
    pub p_plus: u32,
    pub p_minus: u32,
    pub total: u32,
    pub winding_large_circle: i64,
    pub extremal: bool,
    pub zeros: Vec<HarmonicZero>,
    pub delta_used: Option<Complex64>,
    pub c: Complex64,
    pub p: ComplexPolynomial,
}

pub fn valence_report(map: &StandardRationalMap) -> Result<ValenceReport> {
    valence_report_with(map, DEFAULT_SOLVER_TOL, None)
}

/// Solve, classify, count poles, wind around the large circle and check the
/// report invariants.
pub fn valence_report_with(
    map: &StandardRationalMap,
    tol: f64,
    delta_used: Option<Complex64>,
) -> Result<ValenceReport> {
    let zeros = solve_fixed_points(map, tol)?;
    let poles = pole_data(map)?;
    let (winding, _) = argument_principle_terms(map, &zeros, &poles, &large_circle(map))?;
    let order_of = |o: Orientation| -> u32 {
        zeros
            .iter()
            .filter(|z| z.orientation == o)
            .map(|z| z.order)
            .sum()
    };
    let n = map.degree();
    let n_plus = order_of(Orientation::SensePreserving);
    let n_minus = order_of(Orientation::SenseReversing);
    let total = n_plus + n_minus;
    let report = ValenceReport {
        n,
        n_plus,
        n_minus,
        p_plus: 0,
        p_minus: poles.total_order,
        total,
        winding_large_circle: winding,
        extremal: total as usize == 3 * n - 1,
        zeros,
        delta_used,
        c: map.c(),
        p: map.p().clone(),
    };
    report.check()?;
    Ok(report)
}

impl ValenceReport {
    /// Report invariants; any violation signals an upstream numerical failure.
    pub fn check(&self) -> Result<()> {
        let fail = |what: String| Err(Error::Inconsistent(what));
        if self.total != self.n_plus + self.n_minus {
            return fail(format!(
                "total {} != n_plus {} + n_minus {}",
                self.total, self.n_plus, self.n_minus
            ));
        }
        let expected =
            self.n_plus as i64 - self.n_minus as i64 - (self.p_plus as i64 - self.p_minus as i64);
        if self.winding_large_circle != expected {
            return fail(format!(
                "large-circle winding {} != N+ - N- - (P+ - P-) = {expected}",
                self.winding_large_circle
            ));
        }
        if self.extremal != (self.total as usize == 3 * self.n - 1) {
            return fail("extremal flag disagrees with total".into());
        }
        if self.n_plus as usize > self.n {
            return fail(format!(
                "{} attracting fixed points exceed degree {}",
                self.n_plus, self.n
            ));
        }
        if self.total as usize > 3 * self.n - 1 {
            return fail(format!(
                "{} zeros exceed the bound {}",
                self.total,
                3 * self.n - 1
            ));
        }
        if self.p_minus as usize != self.n || self.p_plus != 0 {
            return fail(format!(
                "pole orders ({}, {}) != (0, {})",
                self.p_plus, self.p_minus, self.n
            ));
        }
        Ok(())
    }

    pub fn attracting(&self, margin: f64) -> usize {
        self.zeros
            .iter()
            .filter(|z| z.is_attracting(margin))
            .count()
    }

    pub fn to_document(&self) -> ReportDocument {
        ReportDocument {
            version: REPORT_VERSION,
            n: self.n,
            c: self.c,
            delta: self.delta_used,
            p_coeffs: self.p.coeffs().to_vec(),
            zeros: self
                .zeros
                .iter()
                .map(|z| ZeroRecord {
                    z: z.location,
                    orientation: z.orientation,
                    order: z.order,
                    jacobian: z.jacobian,
                    multiplier: z.multiplier,
                })
                .collect(),
            counts: Counts {
                n_plus: self.n_plus,
                n_minus: self.n_minus,
                p_plus: self.p_plus,
                p_minus: self.p_minus,
                total: self.total,
            },
            winding: self.winding_large_circle,
            extremal: self.extremal,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("report serializes")
    }
}

/// On-disk form of a [`ValenceReport`]. Complex numbers are `[re, im]` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub version: u32,
    pub n: usize,
    pub c: Complex64,
    pub delta: Option<Complex64>,
    pub p_coeffs: Vec<Complex64>,
    pub zeros: Vec<ZeroRecord>,
    pub counts: Counts,
    pub winding: i64,
    pub extremal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZeroRecord {
    pub z: Complex64,
    pub orientation: Orientation,
    pub order: u32,
    pub jacobian: f64,
    pub multiplier: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Counts {
    pub n_plus: u32,
    pub n_minus: u32,
    pub p_plus: u32,
    pub p_minus: u32,
    pub total: u32,
}

impl ReportDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Self = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("report JSON: {e}")))?;
        if doc.version != REPORT_VERSION {
            return Err(Error::InvalidInput(format!(
                "unsupported report version {}",
                doc.version
            )));
        }
        Ok(doc)
    }

    /// Rebuild the map the report was computed for.
    pub fn map(&self) -> Result<StandardRationalMap> {
        StandardRationalMap::new(self.c, ComplexPolynomial::new(self.p_coeffs.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(c: f64, coeffs: &[f64]) -> StandardRationalMap {
        StandardRationalMap::new(Complex64::new(c, 0.0), ComplexPolynomial::from_real(coeffs))
            .unwrap()
    }

    #[test]
    fn far_target_report() {
        let report = valence_report(&map(10.0, &[0.0, 0.0, 1.0])).unwrap();
        assert_eq!(report.n, 2);
        assert_eq!(report.p_minus, 2);
        assert_eq!(report.winding_large_circle, 1);
        assert_eq!(
            report.n_plus as i64 - report.n_minus as i64 + report.p_minus as i64,
            1
        );
        assert!(!report.extremal);
    }

    #[test]
    fn pole_only_circle_and_empty_region() {
        let m = map(0.0, &[2.0, -2.0, 1.0]);
        let zeros = solve_fixed_points(&m, DEFAULT_SOLVER_TOL).unwrap();
        let around_pole = Contour::circle(Complex64::new(1.0, 1.0), 1e-2);
        let poles = pole_data(&m).unwrap();
        let (w, e) = argument_principle_terms(&m, &zeros, &poles, &around_pole).unwrap();
        // a simple pole of H contributes -(P+ - P-) = +1
        assert_eq!((w, e), (1, 1));
        let empty = Contour::circle(Complex64::new(-20.0, 3.0), 1.0);
        assert!(argument_principle_check(&m, &zeros, &empty).unwrap());
    }

    #[test]
    fn document_round_trip() {
        let report = valence_report(&map(10.0, &[0.0, 0.0, 1.0])).unwrap();
        let text = report.to_json();
        let doc = ReportDocument::from_json(&text).unwrap();
        assert_eq!(doc, report.to_document());
        assert_eq!(doc.delta, None);
        assert_eq!(doc.map().unwrap().c(), report.c);
        assert!(ReportDocument::from_json("{}").is_err());
    }
}
