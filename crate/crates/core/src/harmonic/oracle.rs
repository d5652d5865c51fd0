use std::collections::{HashMap, HashSet};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::map::{PlanarField, StandardRationalMap};

use super::newton::newton_polish;

/// Axis-aligned rectangle `[min.re, max.re] x [min.im, max.im]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub min: Complex64,
    pub max: Complex64,
}

impl Rect {
    pub fn new(min: Complex64, max: Complex64) -> Result<Self> {
        if !(min.re < max.re && min.im < max.im) {
            return Err(Error::InvalidInput(format!(
                "degenerate rectangle {min} .. {max}"
            )));
        }
        Ok(Self { min, max })
    }

    pub fn square(center: Complex64, half_width: f64) -> Self {
        let d = Complex64::new(half_width, half_width);
        Self {
            min: center - d,
            max: center + d,
        }
    }

    pub fn width(&self) -> f64 {
        self.max.re - self.min.re
    }

    pub fn height(&self) -> f64 {
        self.max.im - self.min.im
    }

    pub fn contains(&self, z: Complex64) -> bool {
        z.re > self.min.re && z.re < self.max.re && z.im > self.min.im && z.im < self.max.im
    }
}

/// Square of half-width `4 (1 + |c| + fujiwara(p))` centered at `conj(c)`.
pub fn default_search_box(map: &StandardRationalMap) -> Rect {
    let half = 4.0 * (1.0 + map.c().norm() + map.p().fujiwara_bound());
    Rect::square(map.c().conj(), half)
}

const ORACLE_NEWTON_ITERS: usize = 200;
/// Halvings of the grid spacing around flagged nodes.
const REFINE_LEVELS: u32 = 10;
const NEIGHBOURS: [(i64, i64); 8] = [
    (-1, -1),
    (0, -1),
    (1, -1),
    (-1, 0),
    (1, 0),
    (-1, 1),
    (0, 1),
    (1, 1),
];

/// Brute-force zero finder: samples `|F|` on a `resolution x resolution` grid,
/// polishes every node where `|F|` is small with damped Newton and returns the
/// distinct zeros inside `rect`.
///
/// A grid node is kept when `|F| <= 1.5 h (|F_z| + |F_zbar|)`, `h` the grid
/// diagonal, which any node adjacent to a zero satisfies to first order. Near
/// a pole a zero need not show up as a local minimum of `|F|` on the grid, so
/// every node passing the test is polished. The neighbourhoods of those nodes
/// and of local maxima of `|F|` are resampled at half the spacing, down to
/// `2^-10` of the initial spacing.
pub fn grid_oracle<F: PlanarField + ?Sized>(
    field: &F,
    rect: Rect,
    resolution: usize,
) -> Result<Vec<Complex64>> {
    if resolution < 64 {
        return Err(Error::InvalidInput(format!(
            "grid oracle needs resolution >= 64, got {resolution}"
        )));
    }
    let dx = rect.width() / (resolution - 1) as f64;
    let dy = rect.height() / (resolution - 1) as f64;
    let last = (resolution - 1) as i64;

    let mut zeros: Vec<Complex64> = Vec::new();
    let mut nodes: Vec<(i64, i64)> = Vec::new();
    for j in 0..=last {
        for i in 0..=last {
            nodes.push((i, j));
        }
    }
    for level in 0..=REFINE_LEVELS {
        let scale = (1i64 << level) as f64;
        let (hx, hy) = (dx / scale, dy / scale);
        let spacing = hx.hypot(hy);
        let at = |(i, j): (i64, i64)| rect.min + Complex64::new(i as f64 * hx, j as f64 * hy);
        let mag: HashMap<(i64, i64), f64> = nodes
            .iter()
            .map(|&k| {
                let v = field.value(at(k)).norm();
                (k, if v.is_nan() { f64::INFINITY } else { v })
            })
            .collect();
        let mut refine = Vec::new();
        for &(i, j) in &nodes {
            let here = mag[&(i, j)];
            // local maxima of |F| mark poles, which can hide a nearby zero
            let peak = NEIGHBOURS
                .iter()
                .all(|(di, dj)| mag.get(&(i + di, j + dj)).is_some_and(|&v| v <= here));
            let z = at((i, j));
            let (a, b) = field.wirtinger(z);
            let near_zero = here.is_finite() && here <= 1.5 * spacing * (a.norm() + b.norm());
            if near_zero {
                let out = newton_polish(field, z, ORACLE_NEWTON_ITERS, true);
                let accept = out.residual <= 1e-10 * (1.0 + out.z.norm()) && rect.contains(out.z);
                if accept
                    && !zeros
                        .iter()
                        .any(|w| (w - out.z).norm() <= 1e-8 * (1.0 + w.norm()))
                {
                    zeros.push(out.z);
                }
            }
            if near_zero || peak {
                refine.push((i, j));
            }
        }
        // children on the half-spacing lattice within one cell
        let limit = last << (level + 1);
        let mut next = HashSet::new();
        for (i, j) in refine {
            for dj in -2..=2 {
                for di in -2..=2 {
                    let (ci, cj) = (2 * i + di, 2 * j + dj);
                    if (0..=limit).contains(&ci) && (0..=limit).contains(&cj) {
                        next.insert((ci, cj));
                    }
                }
            }
        }
        nodes = next.into_iter().collect();
        nodes.sort_unstable();
    }
    zeros.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(zeros)
}
