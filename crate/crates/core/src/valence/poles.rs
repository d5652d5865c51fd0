use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::map::StandardRationalMap;
use crate::poly::roots;

const POLE_ROOT_TOL: f64 = 1e-12;
const POLE_CLUSTER_RADIUS: f64 = 1e-5;

/// A zero of `p`, hence a pole of `H`. Every pole is sense-reversing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pole {
    pub location: Complex64,
    pub order: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PoleData {
    pub poles: Vec<Pole>,
    pub total_order: u32,
}

impl PoleData {
    /// Sum of the orders of the poles strictly inside `inside`.
    pub fn order_where(&self, inside: impl Fn(Complex64) -> bool) -> u32 {
        self.poles
            .iter()
            .filter(|pole| inside(pole.location))
            .map(|pole| pole.order)
            .sum()
    }

    pub fn min_distance(&self, z: Complex64) -> f64 {
        self.poles
            .iter()
            .map(|pole| (pole.location - z).norm())
            .fold(f64::INFINITY, f64::min)
    }
}

pub fn pole_data(map: &StandardRationalMap) -> Result<PoleData> {
    let set = roots(map.p(), POLE_ROOT_TOL)?;
    let mut poles: Vec<Pole> = set
        .clusters(POLE_CLUSTER_RADIUS)
        .into_iter()
        .map(|cl| Pole {
            location: cl.center,
            order: cl.multiplicity as u32,
        })
        .collect();
    poles.sort_by(|a, b| {
        a.location
            .re
            .total_cmp(&b.location.re)
            .then(a.location.im.total_cmp(&b.location.im))
    });
    let total_order = poles.iter().map(|pole| pole.order).sum::<u32>();
    if total_order as usize != map.degree() {
        return Err(Error::Inconsistent(format!(
            "pole orders sum to {total_order}, expected {}",
            map.degree()
        )));
    }
    Ok(PoleData { poles, total_order })
}
