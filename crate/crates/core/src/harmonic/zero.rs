use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    SensePreserving,
    SenseReversing,
    Singular,
}

impl Orientation {
    pub fn as_str(&self) -> &'static str {
        match self {
            Orientation::SensePreserving => "sense_preserving",
            Orientation::SenseReversing => "sense_reversing",
            Orientation::Singular => "singular",
        }
    }
}

/// A located zero of `H` with its local data.
///
/// `jacobian = 1 - multiplier^2` where `multiplier = |r'(location)|`; the zero
/// is sense-preserving exactly when it is an attracting fixed point of the
/// anti-map.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HarmonicZero {
    pub location: Complex64,
    pub orientation: Orientation,
    pub order: u32,
    pub jacobian: f64,
    pub multiplier: f64,
}

impl HarmonicZero {
    /// Signed contribution to the argument principle.
    pub fn signed_order(&self) -> i64 {
        match self.orientation {
            Orientation::SensePreserving => self.order as i64,
            Orientation::SenseReversing => -(self.order as i64),
            Orientation::Singular => 0,
        }
    }

    pub fn is_attracting(&self, margin: f64) -> bool {
        self.multiplier < 1.0 - margin
    }
}
