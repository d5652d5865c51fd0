use std::fs;
use std::path::Path;

use logharmonic::valence::{Counts, ReportDocument};
use logharmonic::{Complex64, ComplexPolynomial, Error, Result, StandardRationalMap};
use serde::{Deserialize, Serialize};

pub const INSTANCE_VERSION: u32 = 1;

/// On-disk form of a certified map `r = c + 1/p`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub version: u32,
    pub n: usize,
    pub c: Complex64,
    pub delta: Option<Complex64>,
    pub p_coeffs: Vec<Complex64>,
    /// Unperturbed polynomial and its fixed critical points.
    pub geyer: Option<GeyerRecord>,
    /// Counts certified when the instance was written.
    pub counts: Option<Counts>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeyerRecord {
    pub coeffs: Vec<Complex64>,
    pub critical_points: Vec<Complex64>,
}

impl InstanceDocument {
    pub fn map(&self) -> Result<StandardRationalMap> {
        let map = StandardRationalMap::new(self.c, ComplexPolynomial::new(self.p_coeffs.clone()))?;
        if map.degree() != self.n {
            return Err(Error::InvalidInput(format!(
                "n = {} but p has degree {}",
                self.n,
                map.degree()
            )));
        }
        Ok(map)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance serializes")
    }
}

/// A map read back from an instance or report file.
#[derive(Debug, Clone)]
pub struct LoadedInstance {
    pub map: StandardRationalMap,
    pub delta: Option<Complex64>,
    pub expected: Option<Counts>,
}

/// Parse an instance or report document. Every failure here, including I/O,
/// is an input error.
pub fn load_instance(path: &Path) -> Result<LoadedInstance> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    parse_instance(&text)
}

pub fn parse_instance(text: &str) -> Result<LoadedInstance> {
    match serde_json::from_str::<InstanceDocument>(text) {
        Ok(doc) => {
            if doc.version != INSTANCE_VERSION {
                return Err(Error::InvalidInput(format!(
                    "unsupported instance version {}",
                    doc.version
                )));
            }
            Ok(LoadedInstance {
                map: doc.map()?,
                delta: doc.delta,
                expected: doc.counts,
            })
        }
        Err(instance_err) => {
            let doc = ReportDocument::from_json(text).map_err(|report_err| {
                Error::InvalidInput(format!(
                    "neither an instance ({instance_err}) nor a report ({report_err})"
                ))
            })?;
            let map = doc.map()?;
            if map.degree() != doc.n {
                return Err(Error::InvalidInput(format!(
                    "n = {} but p has degree {}",
                    doc.n,
                    map.degree()
                )));
            }
            Ok(LoadedInstance {
                map,
                delta: doc.delta,
                expected: Some(doc.counts),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc() -> InstanceDocument {
        InstanceDocument {
            version: INSTANCE_VERSION,
            n: 2,
            c: Complex64::new(10.0, 0.0),
            delta: Some(Complex64::new(0.1, 0.0)),
            p_coeffs: vec![
                Complex64::new(-0.1, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(-0.01, 0.0),
            ],
            geyer: None,
            counts: None,
        }
    }

    #[test]
    fn round_trip() {
        let loaded = parse_instance(&doc().to_json()).unwrap();
        assert_eq!(loaded.map.c(), Complex64::new(10.0, 0.0));
        assert_eq!(loaded.map.degree(), 2);
        assert_eq!(loaded.delta, Some(Complex64::new(0.1, 0.0)));
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(parse_instance("{not json").is_err());
        assert!(parse_instance("{}").is_err());
        let mut d = doc();
        d.n = 3;
        assert!(parse_instance(&d.to_json()).is_err());
        let mut d = doc();
        d.version = 99;
        assert!(parse_instance(&d.to_json()).is_err());
    }
}
