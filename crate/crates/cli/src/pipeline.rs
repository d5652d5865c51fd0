use std::fs;
use std::path::{Path, PathBuf};

use logharmonic::extremal::{
    delta_search_with, geyer_candidates_from, geyer_solve, pair_lattice_seeds, real_spread_seeds,
    roots_of_unity_seeds, FixedPointCertificate, GeyerPolynomial, MoebiusParam, ATTRACTING_MARGIN,
};
use logharmonic::valence::{
    openness_sweep, orbit_of_infinity, pole_data, OrbitDiagnostic, ValenceReport,
};
use logharmonic::{Complex64, Error, StandardRationalMap};
use serde::Serialize;

use crate::config::{RunConfig, SeedStrategy};
use crate::instance::{GeyerRecord, InstanceDocument, INSTANCE_VERSION};
use crate::{svg, EXIT_MISMATCH, EXIT_NUMERICAL, EXIT_USAGE};

/// Distinct Geyer polynomials collected before the delta search.
const CANDIDATES_WANTED: usize = 4;
const RANDOM_SEED_ATTEMPTS: usize = 300;
/// Dilations `z -> s z` applied to each canonical form.
const RESCALE_FACTORS: [f64; 5] = [0.5, 0.6, 0.7, 0.8, 0.9];

pub const INSTANCE_FILE: &str = "instance.json";
pub const REPORT_FILE: &str = "report.json";
pub const DIAGNOSTICS_FILE: &str = "diagnostics.json";
pub const FAILURE_FILE: &str = "failure.json";
pub const SVG_FILE: &str = "plot.svg";

/// Machine-readable failure record, also written as `failure.json`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub stage: &'static str,
    pub kind: String,
    pub message: String,
    pub code: i32,
}

impl Failure {
    pub fn from_error(stage: &'static str, err: &Error) -> Self {
        let code = match err {
            Error::InvalidInput(_) => EXIT_USAGE,
            _ => EXIT_NUMERICAL,
        };
        Self {
            stage,
            kind: err.kind().to_string(),
            message: err.to_string(),
            code,
        }
    }

    fn io(stage: &'static str, path: &Path, err: std::io::Error) -> Self {
        Self {
            stage,
            kind: "io".into(),
            message: format!("{}: {err}", path.display()),
            code: EXIT_NUMERICAL,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("failure serializes")
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} failed ({}): {}", self.stage, self.kind, self.message)
    }
}

type Certified = (
    MoebiusParam,
    StandardRationalMap,
    FixedPointCertificate,
    ValenceReport,
);

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CandidateOutcome {
    pub coeffs: Vec<Complex64>,
    pub critical_points: Vec<Complex64>,
    pub delta: Option<f64>,
    pub multiplier: Option<f64>,
    pub error: Option<String>,
}

#[derive(Debug, Clone)]
pub struct PipelineRun {
    pub geyer: GeyerPolynomial,
    pub moebius: MoebiusParam,
    pub map: StandardRationalMap,
    pub certificate: FixedPointCertificate,
    pub report: ValenceReport,
    pub orbit: Result<OrbitDiagnostic, Error>,
    pub sweep_fraction: f64,
    pub candidates: Vec<CandidateOutcome>,
    pub chosen: usize,
    pub files: Vec<PathBuf>,
}

impl PipelineRun {
    pub fn instance_document(&self) -> InstanceDocument {
        InstanceDocument {
            version: INSTANCE_VERSION,
            n: self.report.n,
            c: self.map.c(),
            delta: Some(self.moebius.delta()),
            p_coeffs: self.map.p().coeffs().to_vec(),
            geyer: Some(GeyerRecord {
                coeffs: self.geyer.poly.coeffs().to_vec(),
                critical_points: self.geyer.critical_points.clone(),
            }),
            counts: Some(self.report.to_document().counts),
        }
    }
}

/// Geyer construction, delta search, valence report, orbit diagnostic and
/// openness sweep, without touching the filesystem. Succeeds only if the
/// chosen map is certified extremal.
pub fn certify(cfg: &RunConfig) -> Result<PipelineRun, Failure> {
    cfg.validate()
        .map_err(|e| Failure::from_error("config", &e))?;
    let forms = geyer_forms(cfg).map_err(|e| Failure::from_error("geyer", &e))?;

    let mut candidates = Vec::new();
    let mut best: Option<(usize, f64, Certified, Result<OrbitDiagnostic, Error>)> = None;
    for (k, g) in forms.iter().enumerate() {
        let outcome = delta_search_with(g, &cfg.delta_schedule, cfg.tolerances.solver);
        let orbit = outcome.as_ref().ok().map(|(_, map, _, _)| {
            orbit_of_infinity(map, cfg.tolerances.orbit_max_iter, cfg.tolerances.orbit)
        });
        let multiplier = orbit
            .as_ref()
            .and_then(|o| o.as_ref().ok())
            .filter(|o| !o.periodic_detected)
            .map(|o| o.multiplier);
        candidates.push(CandidateOutcome {
            coeffs: g.poly.coeffs().to_vec(),
            critical_points: g.critical_points.clone(),
            delta: outcome.as_ref().ok().map(|o| o.2.delta),
            multiplier,
            error: outcome.as_ref().err().map(|e| e.to_string()),
        });
        let (Ok(found), Some(orbit)) = (outcome, orbit) else {
            continue;
        };
        // distance of the multiplier from {0, 1}; failed orbits rank last
        let score = multiplier.map_or(-1.0, |m| m.min(1.0 - m));
        let better = match &best {
            None => true,
            Some((_, s, (_, _, cert, _), _)) => {
                score > *s || (score == *s && found.2.delta > cert.delta)
            }
        };
        if better {
            best = Some((k, score, found, orbit));
        }
    }
    let Some((chosen, _, (moebius, map, certificate, report), orbit)) = best else {
        let err = Error::Exhausted {
            expected: 3 * cfg.n - 1,
        };
        return Err(Failure::from_error("delta_search", &err));
    };

    if !(report.extremal && report.attracting(ATTRACTING_MARGIN) == cfg.n) {
        return Err(Failure {
            stage: "valence_report",
            kind: "count_mismatch".into(),
            message: format!(
                "{} zeros with {} attracting for n = {}",
                report.total,
                report.attracting(ATTRACTING_MARGIN),
                cfg.n
            ),
            code: EXIT_MISMATCH,
        });
    }

    let sweep_fraction = openness_sweep(
        &map,
        cfg.tolerances.sweep_radius,
        cfg.tolerances.sweep_samples,
    );
    Ok(PipelineRun {
        geyer: forms[chosen].clone(),
        moebius,
        map,
        certificate,
        report,
        orbit,
        sweep_fraction,
        candidates,
        chosen,
        files: Vec::new(),
    })
}

/// [`certify`] and persist the artifacts. On failure a `failure.json` is
/// written to the output directory when possible.
pub fn run_pipeline(cfg: &RunConfig) -> Result<PipelineRun, Failure> {
    let result = certify(cfg).and_then(|mut run| {
        run.files = write_artifacts(cfg, &run)?;
        Ok(run)
    });
    if let Err(failure) = &result {
        if fs::create_dir_all(&cfg.output_dir).is_ok() {
            let _ = fs::write(cfg.output_dir.join(FAILURE_FILE), failure.to_json());
        }
    }
    result
}

fn geyer_forms(cfg: &RunConfig) -> logharmonic::Result<Vec<GeyerPolynomial>> {
    let n = cfg.n;
    let found = match cfg.seed_strategy {
        SeedStrategy::Explicit => {
            let points = cfg.explicit_points.as_deref().unwrap_or_default();
            vec![geyer_solve(n, points)?]
        }
        strategy => {
            let mut ladder = if strategy == SeedStrategy::RealSpread {
                let mut l = real_spread_seeds(n);
                l.extend(roots_of_unity_seeds(n));
                l
            } else {
                let mut l = roots_of_unity_seeds(n);
                l.extend(real_spread_seeds(n));
                l
            };
            ladder.extend(pair_lattice_seeds(n));
            geyer_candidates_from(
                n,
                &ladder,
                cfg.rng_seed,
                CANDIDATES_WANTED,
                RANDOM_SEED_ATTEMPTS,
            )?
        }
    };
    // each polynomial as solved, centered with |lead| = 1/2, and dilations of that
    let mut forms: Vec<GeyerPolynomial> = Vec::new();
    for g in found {
        let canonical = g.canonical();
        let dilations: Vec<_> = RESCALE_FACTORS
            .iter()
            .map(|&s| canonical.rescaled(s))
            .collect();
        for form in [g, canonical].into_iter().chain(dilations) {
            let duplicate = forms.iter().any(|f| {
                f.poly
                    .coeffs()
                    .iter()
                    .zip(form.poly.coeffs())
                    .all(|(a, b)| (a - b).norm() <= 1e-12)
            });
            if !duplicate && form.validate().is_ok() {
                forms.push(form);
            }
        }
    }
    Ok(forms)
}

#[derive(Serialize)]
struct Diagnostics<'a> {
    version: u32,
    n: usize,
    rng_seed: u64,
    seed_strategy: SeedStrategy,
    schedule: &'a [f64],
    candidates: &'a [CandidateOutcome],
    chosen: usize,
    certificate: &'a FixedPointCertificate,
    orbit: OrbitRecord,
    sweep: SweepRecord,
}

#[derive(Serialize)]
struct OrbitRecord {
    converged: bool,
    error: Option<String>,
    limit: Option<Complex64>,
    multiplier: Option<f64>,
    periodic_detected: Option<bool>,
    orbit: Vec<Complex64>,
}

#[derive(Serialize)]
struct SweepRecord {
    radius: f64,
    samples: usize,
    fraction: f64,
}

pub fn diagnostics_json(cfg: &RunConfig, run: &PipelineRun) -> String {
    let orbit = match &run.orbit {
        Ok(o) => OrbitRecord {
            converged: !o.periodic_detected,
            error: None,
            limit: Some(o.limit),
            multiplier: Some(o.multiplier),
            periodic_detected: Some(o.periodic_detected),
            orbit: o.orbit.clone(),
        },
        Err(e) => OrbitRecord {
            converged: false,
            error: Some(e.to_string()),
            limit: None,
            multiplier: None,
            periodic_detected: None,
            orbit: Vec::new(),
        },
    };
    let doc = Diagnostics {
        version: 1,
        n: cfg.n,
        rng_seed: cfg.rng_seed,
        seed_strategy: cfg.seed_strategy,
        schedule: &cfg.delta_schedule,
        candidates: &run.candidates,
        chosen: run.chosen,
        certificate: &run.certificate,
        orbit,
        sweep: SweepRecord {
            radius: cfg.tolerances.sweep_radius,
            samples: cfg.tolerances.sweep_samples,
            fraction: run.sweep_fraction,
        },
    };
    serde_json::to_string_pretty(&doc).expect("diagnostics serialize")
}

fn write_artifacts(cfg: &RunConfig, run: &PipelineRun) -> Result<Vec<PathBuf>, Failure> {
    let dir = &cfg.output_dir;
    fs::create_dir_all(dir).map_err(|e| Failure::io("write", dir, e))?;
    let mut files = Vec::new();
    let mut put = |name: &str, text: String| -> Result<(), Failure> {
        let path = dir.join(name);
        fs::write(&path, text).map_err(|e| Failure::io("write", &path, e))?;
        files.push(path);
        Ok(())
    };
    put(INSTANCE_FILE, run.instance_document().to_json())?;
    put(REPORT_FILE, run.report.to_json())?;
    put(DIAGNOSTICS_FILE, diagnostics_json(cfg, run))?;
    if cfg.emit_svg {
        let poles = pole_data(&run.map).map_err(|e| Failure::from_error("svg", &e))?;
        put(SVG_FILE, svg::render(&run.map, &run.report, &poles))?;
    }
    Ok(files)
}
