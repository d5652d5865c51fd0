use std::path::PathBuf;

use logharmonic::extremal::{check_schedule, geometric_schedule};
use logharmonic::harmonic::DEFAULT_SOLVER_TOL;
use logharmonic::valence::REVISIT_RADIUS;
use logharmonic::{Complex64, Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeedStrategy {
    RootsOfUnity,
    RealSpread,
    Explicit,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub solver: f64,
    pub orbit: f64,
    pub orbit_max_iter: usize,
    pub sweep_radius: f64,
    pub sweep_samples: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            solver: DEFAULT_SOLVER_TOL,
            orbit: REVISIT_RADIUS,
            orbit_max_iter: 10_000,
            sweep_radius: 1e-6,
            sweep_samples: 8,
        }
    }
}

/// `0.1 * 2^(-k/4)` for `k = 0..=80`: the same range as the coarse
/// halving schedule with four steps per halving.
pub fn refined_schedule() -> Vec<f64> {
    geometric_schedule(0.1, 4, 20)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub n: usize,
    pub seed_strategy: SeedStrategy,
    pub explicit_points: Option<Vec<Complex64>>,
    pub delta_schedule: Vec<f64>,
    pub tolerances: Tolerances,
    pub output_dir: PathBuf,
    pub emit_svg: bool,
    pub rng_seed: u64,
}

impl RunConfig {
    pub fn new(n: usize, output_dir: impl Into<PathBuf>) -> Self {
        Self {
            n,
            seed_strategy: SeedStrategy::RootsOfUnity,
            explicit_points: None,
            delta_schedule: refined_schedule(),
            tolerances: Tolerances::default(),
            output_dir: output_dir.into(),
            emit_svg: false,
            rng_seed: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidInput(format!(
                "n = {} but n >= 2 is required",
                self.n
            )));
        }
        check_schedule(&self.delta_schedule)?;
        let t = &self.tolerances;
        if !(t.solver > 0.0 && t.solver < 1.0) {
            return Err(Error::InvalidInput(format!(
                "solver tolerance {}",
                t.solver
            )));
        }
        if t.orbit.is_nan() || t.orbit <= 0.0 || t.orbit_max_iter < 100 {
            return Err(Error::InvalidInput("orbit settings out of range".into()));
        }
        if !(t.sweep_radius >= 0.0 && t.sweep_radius.is_finite()) {
            return Err(Error::InvalidInput(
                "sweep radius must be finite and >= 0".into(),
            ));
        }
        match (self.seed_strategy, &self.explicit_points) {
            (SeedStrategy::Explicit, None) => Err(Error::InvalidInput(
                "explicit seed strategy needs points".into(),
            )),
            (SeedStrategy::Explicit, Some(pts)) if pts.len() != self.n - 1 => Err(
                Error::InvalidInput(format!("{} explicit points for n = {}", pts.len(), self.n)),
            ),
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        RunConfig::new(3, "out").validate().unwrap();
        assert!(RunConfig::new(1, "out").validate().is_err());
        let mut cfg = RunConfig::new(3, "out");
        cfg.delta_schedule = vec![0.1, 0.2];
        assert!(cfg.validate().is_err());
        let mut cfg = RunConfig::new(3, "out");
        cfg.seed_strategy = SeedStrategy::Explicit;
        assert!(cfg.validate().is_err());
        cfg.explicit_points = Some(vec![Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)]);
        cfg.validate().unwrap();
    }
}
