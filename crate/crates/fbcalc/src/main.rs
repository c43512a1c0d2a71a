use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fbcalc::schema::{read_json, CertificateSpec, MeasureSpec, ModelSpec};
use fbcalc::{run_scenario, AppError, Format, ScenarioConfig};
use fbcalc_core::calculus::functional_calculus;
use fbcalc_core::jordan::{construct_certificate, verify_certificate, JordanOptions};
use fbcalc_core::linalg::{op_norm, spec_radius};
use fbcalc_core::measure::CompactMeasure;
use fbcalc_core::transform::{eval_fb, ray_max, sector_sup, RayMaxOptions, DEFAULT_THETA_GRID};
use fbcalc_core::C64;
use serde_json::json;

/// Fourier–Borel functional calculus toolkit.
///
/// Exit status: 0 all checks pass, 1 a check failed, 2 usage or input
/// error, 3 numeric failure. Set RAYON_NUM_THREADS to limit threads.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate F(z) = ∫ e^{-zζ} dμ(ζ).
    FbEval {
        #[arg(long)]
        measure: PathBuf,
        /// Point as RE,IM.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: C64,
    },
    /// Maximize |F| along the ray at angle THETA (mass-zero measures).
    RayMax {
        #[arg(long)]
        measure: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        theta: f64,
    },
    /// Supremum of |F| over the open sector of half-angle ALPHA.
    SectorSup {
        #[arg(long)]
        measure: PathBuf,
        #[arg(long)]
        alpha: f64,
    },
    /// Compute F(-uA) on a semigroup model.
    Calculus {
        #[arg(long)]
        measure: PathBuf,
        #[arg(long)]
        model: PathBuf,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        u: C64,
        /// Include the matrix entries in the output.
        #[arg(long)]
        matrix: bool,
    },
    /// Build a curve certificate, or re-verify a stored one.
    Jordan {
        #[arg(long)]
        measure: PathBuf,
        #[arg(long)]
        verify: Option<PathBuf>,
        #[arg(long, default_value_t = 1000)]
        density: usize,
    },
    /// Run a verification scenario and write its report.
    Verify {
        scenario: String,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

fn parse_complex(s: &str) -> Result<C64, String> {
    let (re, im) = s.split_once(',').unwrap_or((s, "0"));
    let part = |p: &str| p.trim().parse::<f64>().map_err(|e| format!("'{p}': {e}"));
    let z = C64::new(part(re)?, part(im)?);
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err("complex number must be finite".into())
    }
}

fn load_measure(path: &Path) -> Result<CompactMeasure, AppError> {
    read_json::<MeasureSpec>(path)?.to_measure()
}

fn pair(z: C64) -> [f64; 2] {
    [z.re, z.im]
}

fn print(value: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&value).expect("json value"));
}

fn run(cli: Cli) -> Result<i32, AppError> {
    match cli.command {
        Command::FbEval { measure, z } => {
            let mu = load_measure(&measure)?;
            print(json!({ "z": pair(z), "value": pair(eval_fb(&mu, z)) }));
        }
        Command::RayMax { measure, theta } => {
            let r = ray_max(&load_measure(&measure)?, theta, &RayMaxOptions::default())?;
            print(json!({ "theta": theta, "r_star": r.r_star, "value": r.value, "location": pair(r.location) }));
        }
        Command::SectorSup { measure, alpha } => {
            let s = sector_sup(&load_measure(&measure)?, alpha, DEFAULT_THETA_GRID, &RayMaxOptions::default())?;
            let rays: Vec<_> = s.rays.iter().map(|(th, r)| json!({ "theta": th, "r_star": r.r_star, "value": r.value })).collect();
            print(json!({ "alpha": alpha, "value": s.value, "boundary_value": s.boundary_value, "rays": rays }));
        }
        Command::Calculus { measure, model, u, matrix } => {
            let mu = load_measure(&measure)?;
            let model = read_json::<ModelSpec>(&model)?.to_model()?;
            let f = functional_calculus(&model, &mu, u)?;
            let mut out = json!({
                "u": pair(u),
                "dim": model.dim(),
                "norm": op_norm(&f.matrix)?,
                "spectral_radius": spec_radius(&f.matrix)?,
                "quad_error": f.quad_error,
            });
            if matrix {
                let rows: Vec<Vec<[f64; 2]>> = f.matrix.to_dense().rows().into_iter().map(|r| r.into_iter().map(pair).collect()).collect();
                out["rows"] = json!(rows);
            }
            print(out);
        }
        Command::Jordan { measure, verify, density } => {
            let mu = load_measure(&measure)?;
            match verify {
                Some(path) => {
                    let cert = read_json::<CertificateSpec>(&path)?.to_certificate()?;
                    let v = verify_certificate(&mu, &cert, density)?;
                    print(json!({
                        "ok": v.ok, "margin_i": v.margin_i, "margin_ii": v.margin_ii,
                        "simple": v.simple, "issues": v.issues,
                    }));
                    return Ok(if v.ok { 0 } else { 1 });
                }
                None => {
                    let opts = JordanOptions { density, ..JordanOptions::default() };
                    let cert = construct_certificate(&mu, &opts)?;
                    println!("{}", serde_json::to_string_pretty(&CertificateSpec::from(&cert)).expect("certificate"));
                }
            }
        }
        Command::Verify { scenario, config, out, format } => {
            let cfg = match config {
                Some(p) => read_json::<ScenarioConfig>(&p)?,
                None => ScenarioConfig::default(),
            };
            let report = run_scenario(&scenario, &cfg)?;
            report.emit(format, &out)?;
            for s in &report.scenarios {
                let bad = s.checks.iter().filter(|c| !matches!(c.verdict, fbcalc::Verdict::Pass | fbcalc::Verdict::Info)).count();
                println!("{:8} {:4} checks, {} not passing", s.scenario, s.checks.len(), bad);
            }
            return Ok(report.exit_code());
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
