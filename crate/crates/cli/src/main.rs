use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use logharmonic::extremal::{
    blaschke_fixed_point, geyer_candidates, perturb_to_standard_form, MoebiusParam,
};
use logharmonic::harmonic::{solve_fixed_points, DEFAULT_SOLVER_TOL};
use logharmonic::valence::{openness_sweep, valence_report_with};
use logharmonic::{ComplexPolynomial, Error};
use logharmonic_cli::parse::{parse_complex_list, parse_reals};
use logharmonic_cli::pipeline::REPORT_FILE;
use logharmonic_cli::{
    load_instance, run_pipeline, verify_file, InstanceDocument, RunConfig, SeedStrategy,
    EXIT_NUMERICAL, EXIT_USAGE, INSTANCE_VERSION,
};
use serde_json::json;

// aliases keep clap from treating a parsed list as repeated values
type Reals = Vec<f64>;
type Points = Vec<logharmonic::Complex64>;

#[derive(Parser)]
#[command(
    name = "logharmonic",
    version,
    about = "Extremal logharmonic polynomial laboratory"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    RootsOfUnity,
    RealSpread,
    Explicit,
}

#[derive(Subcommand)]
enum Command {
    /// Build, certify and persist an extremal instance of degree n.
    Construct {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=12))]
        n: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated, strictly decreasing delta values.
        #[arg(long, value_parser = parse_reals)]
        schedule: Option<Reals>,
        #[arg(long, default_value_t = DEFAULT_SOLVER_TOL)]
        tol: f64,
        #[arg(long, default_value = "out")]
        out: PathBuf,
        #[arg(long)]
        svg: bool,
        /// Print the report JSON instead of a summary.
        #[arg(long)]
        json: bool,
        #[arg(long, value_enum, default_value = "roots-of-unity")]
        strategy: Strategy,
        /// Seed critical points for the explicit strategy, e.g. "1,-0.5+0.8i,-0.5-0.8i".
        #[arg(long, value_parser = parse_complex_list, allow_hyphen_values = true)]
        points: Option<Points>,
        #[arg(long, default_value_t = 1e-6)]
        sweep_radius: f64,
        #[arg(long, default_value_t = 8)]
        sweep_samples: usize,
    },
    /// Standard form c + 1/p_delta of M_delta o p as an instance document.
    Perturb {
        /// Degree of a Geyer polynomial to perturb (first seed-ladder solution).
        #[arg(long, conflicts_with = "poly", value_parser = clap::value_parser!(u32).range(2..=12))]
        n: Option<u32>,
        /// Explicit coefficients, constant term first.
        #[arg(long, value_parser = parse_complex_list, allow_hyphen_values = true)]
        poly: Option<Points>,
        #[arg(long)]
        delta: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the instance here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Zeros of H for a stored instance or report.
    Solve {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SOLVER_TOL)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Independently re-verify a stored instance or report.
    Verify { file: PathBuf },
    /// Full valence report for a stored instance or report.
    Report {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SOLVER_TOL)]
        tol: f64,
        #[arg(long)]
        json: bool,
        /// Write the report JSON into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fraction of perturbed c keeping 3n - 1 zeros.
    Sweep {
        file: PathBuf,
        #[arg(long, default_value_t = 1e-6)]
        radius: f64,
        #[arg(long, default_value_t = 16)]
        samples: usize,
        #[arg(long)]
        json: bool,
    },
    /// Attracting real fixed point of (z^n + delta) / (1 + delta z^n).
    Blaschke {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        delta: f64,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidInput(_) => EXIT_USAGE,
                _ => EXIT_NUMERICAL,
            }
        }
    };
    ExitCode::from(code as u8)
}

fn run(command: Command) -> Result<i32, Error> {
    match command {
        Command::Construct {
            n,
            seed,
            schedule,
            tol,
            out,
            svg,
            json,
            strategy,
            points,
            sweep_radius,
            sweep_samples,
        } => {
            let mut cfg = RunConfig::new(n as usize, out);
            cfg.rng_seed = seed;
            if let Some(schedule) = schedule {
                cfg.delta_schedule = schedule;
            }
            cfg.tolerances.solver = tol;
            cfg.tolerances.sweep_radius = sweep_radius;
            cfg.tolerances.sweep_samples = sweep_samples;
            cfg.emit_svg = svg;
            cfg.seed_strategy = match strategy {
                Strategy::RootsOfUnity => SeedStrategy::RootsOfUnity,
                Strategy::RealSpread => SeedStrategy::RealSpread,
                Strategy::Explicit => SeedStrategy::Explicit,
            };
            cfg.explicit_points = points;
            match run_pipeline(&cfg) {
                Ok(run) => {
                    if json {
                        println!("{}", run.report.to_json());
                    } else {
                        let r = &run.report;
                        println!(
                            "n = {}, delta = {}, zeros = {} (N+ = {}, N- = {}), winding = {}, extremal = {}",
                            r.n, run.certificate.delta, r.total, r.n_plus, r.n_minus,
                            r.winding_large_circle, r.extremal
                        );
                        match &run.orbit {
                            Ok(o) => println!(
                                "orbit of infinity: limit {:.6}, multiplier {:.3e}, periodic {}",
                                o.limit, o.multiplier, o.periodic_detected
                            ),
                            Err(e) => println!("orbit of infinity: {e}"),
                        }
                        println!("openness sweep: {}", run.sweep_fraction);
                        for f in &run.files {
                            println!("wrote {}", f.display());
                        }
                    }
                    Ok(0)
                }
                Err(failure) => {
                    eprintln!("error: {failure}");
                    Ok(failure.code)
                }
            }
        }
        Command::Perturb {
            n,
            poly,
            delta,
            seed,
            out,
        } => {
            let m = MoebiusParam::real(delta)?;
            let p = match (n, poly) {
                (_, Some(coeffs)) => ComplexPolynomial::new(coeffs),
                (Some(n), None) => geyer_candidates(n as usize, seed, 1, 300)?.remove(0).poly,
                (None, None) => {
                    return Err(Error::InvalidInput("need --n or --poly".into()));
                }
            };
            let map = perturb_to_standard_form(&p, m)?;
            let doc = InstanceDocument {
                version: INSTANCE_VERSION,
                n: map.degree(),
                c: map.c(),
                delta: Some(m.delta()),
                p_coeffs: map.p().coeffs().to_vec(),
                geyer: None,
                counts: None,
            };
            emit(out, doc.to_json())?;
            Ok(0)
        }
        Command::Solve { file, tol, json } => {
            let loaded = load_instance(&file)?;
            let zeros = solve_fixed_points(&loaded.map, tol)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&zeros).expect("zeros serialize")
                );
            } else {
                for z in &zeros {
                    println!(
                        "{:+.12} {:+.12}i  {}  order {}  multiplier {:.6e}",
                        z.location.re,
                        z.location.im,
                        z.orientation.as_str(),
                        z.order,
                        z.multiplier
                    );
                }
                println!("{} zeros", zeros.len());
            }
            Ok(0)
        }
        Command::Verify { file } => {
            let outcome = verify_file(&file);
            if outcome.code == 0 {
                println!("{}", outcome.message);
            } else {
                eprintln!("verify failed: {}", outcome.message);
            }
            Ok(outcome.code)
        }
        Command::Report {
            file,
            tol,
            json,
            out,
        } => {
            let loaded = load_instance(&file)?;
            let report = valence_report_with(&loaded.map, tol, loaded.delta)?;
            let text = report.to_json();
            if let Some(dir) = out {
                fs::create_dir_all(&dir)
                    .and_then(|_| fs::write(dir.join(REPORT_FILE), &text))
                    .map_err(|e| Error::InvalidInput(format!("{}: {e}", dir.display())))?;
            }
            if json {
                println!("{text}");
            } else {
                println!(
                    "n = {}, zeros = {} (N+ = {}, N- = {}), P- = {}, winding = {}, extremal = {}",
                    report.n,
                    report.total,
                    report.n_plus,
                    report.n_minus,
                    report.p_minus,
                    report.winding_large_circle,
                    report.extremal
                );
            }
            Ok(0)
        }
        Command::Sweep {
            file,
            radius,
            samples,
            json,
        } => {
            if !(radius >= 0.0 && radius.is_finite()) {
                return Err(Error::InvalidInput(format!("radius {radius}")));
            }
            let loaded = load_instance(&file)?;
            let fraction = openness_sweep(&loaded.map, radius, samples);
            if json {
                println!(
                    "{}",
                    json!({"radius": radius, "samples": samples, "fraction": fraction})
                );
            } else {
                println!("retained fraction {fraction} over {samples} samples of radius {radius}");
            }
            Ok(0)
        }
        Command::Blaschke { n, delta, json } => {
            let (x, multiplier) = blaschke_fixed_point(n as usize, delta)?;
            if json {
                println!(
                    "{}",
                    json!({"n": n, "delta": delta, "x_star": x, "multiplier": multiplier})
                );
            } else {
                println!("x* = {x:.15}, multiplier = {multiplier:.15}");
            }
            Ok(0)
        }
    }
}

fn emit(out: Option<PathBuf>, text: String) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(&path, text)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}
