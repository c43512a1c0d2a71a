//! Acceptance criteria, one line each. Run with
//! `cargo test -p fbcalc --test acceptance`.

use std::f64::consts::{FRAC_PI_3, PI};
use std::process::ExitCode;

use fbcalc::constants::JORDAN_CROSSING_DIM;
use fbcalc::{run_scenario, ScenarioConfig, ScenarioReport, Verdict, VerificationReport};
use fbcalc_core::measure::{Atom, CompactMeasure};
use fbcalc_core::optimize::lin_space;
use fbcalc_core::transform::{ray_max, RayMaxOptions, TransformEvaluator};
use fbcalc_core::C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn scenario<'a>(report: &'a VerificationReport, id: &str) -> &'a ScenarioReport {
    report.scenario(id).unwrap_or_else(|| panic!("scenario {id} missing"))
}

/// All named checks exist and pass; `prefix*` matches every check with that prefix.
fn all_pass(s: &ScenarioReport, names: &[&str]) -> (bool, Vec<String>) {
    let mut bad = Vec::new();
    for name in names {
        let matching: Vec<_> = match name.strip_suffix('*') {
            Some(p) => s.checks.iter().filter(|c| c.name.starts_with(p)).collect(),
            None => s.checks.iter().filter(|c| c.name == *name).collect(),
        };
        if matching.is_empty() {
            bad.push(format!("{name} missing"));
        }
        for c in matching {
            if c.verdict != Verdict::Pass {
                bad.push(format!("{} = {:?} ({:?})", c.name, c.value, c.verdict));
            }
        }
    }
    (bad.is_empty(), bad)
}

fn from_checks(s: &ScenarioReport, names: &[&str], detail: String) -> Outcome {
    let (ok, bad) = all_pass(s, names);
    if ok {
        outcome(true, detail)
    } else {
        outcome(false, bad.join("; "))
    }
}

fn value(s: &ScenarioReport, name: &str) -> f64 {
    s.check(name).and_then(|c| c.value).unwrap_or(f64::NAN)
}

fn criterion1(r: &VerificationReport) -> Outcome {
    let s = scenario(r, "rem37");
    let detail = format!("rho = {:.8}, sector sup = {:.10}", value(s, "rho[u=0.5]"), value(s, "sector_sup_about_0.29"));
    from_checks(s, &["rho[*", "sector_sup_about_0.29", "strict_rho_below_sector_sup"], detail)
}

fn criterion2(r: &VerificationReport) -> Outcome {
    let s = scenario(r, "ex36");
    let rows = s.checks.iter().filter(|c| c.name.starts_with("rho_vs_ray_max")).count();
    let worst = s
        .checks
        .iter()
        .filter(|c| c.name.starts_with("rho_vs_ray_max"))
        .filter_map(|c| Some((c.value? - c.benchmark?).abs()))
        .fold(0.0, f64::max);
    let h = s.check("hypothesis_lhs_vs_rhs");
    let gap = h.and_then(|c| Some((c.value? - c.benchmark?).abs())).unwrap_or(f64::NAN);
    let o = from_checks(s, &["rho_vs_ray_max*", "hypothesis_lhs_vs_rhs"], format!("{rows} t-samples, worst |rho - ray max| = {worst:.2e}, |LHS - RHS| = {gap:.2e}"));
    if rows != 8 {
        return outcome(false, format!("expected 8 t-samples, got {rows}"));
    }
    o
}

fn criterion3(r: &VerificationReport) -> Outcome {
    let s = scenario(r, "hille");
    let crossing = format!("crossing_dim_{JORDAN_CROSSING_DIM}");
    let detail = format!(
        "b = {:.12}, |F(b)| = {:.12}, n = 64 norm = {:.1}, n = 32 at u = 1e-4: {:.2e}, crossing at n = {JORDAN_CROSSING_DIM}",
        value(s, "argmax"),
        value(s, "abs_max"),
        value(s, "uat_norm[n=64,u=0.1]"),
        value(s, "uat_norm[n=32,u=1e-4]")
    );
    from_checks(s, &["argmax", "abs_max", "nondecreasing_in_n", &crossing, "vanishes_as_u_decreases"], detail)
}

fn criterion4(r: &VerificationReport, cfg: &ScenarioConfig) -> Outcome {
    let s = scenario(r, "lemma42");
    let residuals: Vec<_> = s.checks.iter().filter(|c| c.name.starts_with("max_residual")).collect();
    let families = ["diag", "jordan"].iter().all(|f| residuals.iter().any(|c| c.name.contains(f)));
    let worst = residuals.iter().filter_map(|c| c.value).fold(0.0, f64::max);
    let o = from_checks(s, &["max_residual*"], format!("{} samples on {} model/measure pairs, worst residual {worst:.2e}", cfg.identity_samples, residuals.len()));
    if !families || cfg.identity_samples != 20 {
        return outcome(false, "both model families with 20 samples are required");
    }
    o
}

fn criterion5(r: &VerificationReport) -> Outcome {
    let s = scenario(r, "cor43");
    let probes = s.checks.iter().filter(|c| c.name.starts_with("bound[")).count();
    let cs: Vec<f64> = s.checks.iter().filter(|c| c.name.starts_with("C[")).filter_map(|c| c.value).collect();
    let o = from_checks(s, &["bound[*"], format!("{probes} probes, C in [{:.3}, {:.3e}]", cs.iter().copied().fold(f64::INFINITY, f64::min), cs.iter().copied().fold(0.0, f64::max)));
    if cs.len() != probes {
        return outcome(false, "constant C not reported for every probe");
    }
    o
}

fn criterion6(r: &VerificationReport) -> Outcome {
    let s = scenario(r, "lemma44");
    let c = s.check("region_sup_vs_formula");
    let detail = c.map(|c| format!("sampled sup {:.12} vs formula {:.12}", c.value.unwrap_or(f64::NAN), c.benchmark.unwrap_or(f64::NAN))).unwrap_or_default();
    from_checks(s, &["region_sup_vs_formula", "region_sup_finite", "unbounded_flagged"], detail)
}

fn criterion7(r: &VerificationReport) -> Outcome {
    let s = scenario(r, "jordan");
    let detail = format!(
        "b = {:.12}, delta = {:.4}, margins ({:.2e}, {:.2e}), doubled delta margin {:.2e}",
        value(s, "b"),
        s.check("delta_positive").and_then(|c| c.benchmark).unwrap_or(f64::NAN),
        value(s, "margin_i"),
        value(s, "margin_ii"),
        value(s, "doubled_delta_margin_i")
    );
    from_checks(s, &["b", "m", "delta_positive", "margin_i", "margin_ii", "verified", "doubled_delta_margin_i"], detail)
}

/// Floating-point scale of `F(z)`: `Σ|w|·|e^{-zζ}|`.
fn scale(mu: &CompactMeasure, z: C64) -> f64 {
    TransformEvaluator::new(mu).decay_bound(z).max(1.0)
}

fn criterion8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let d12 = CompactMeasure::dirac_difference(1.0, 2.0).unwrap();
    let deriv = CompactMeasure::derivative_functional(C64::new(1.0, 0.0), 0.25, 128).unwrap();
    let skew = CompactMeasure::atomic(vec![Atom::new(C64::new(1.0, 0.4), C64::new(0.5, -1.0)), Atom::new(C64::new(0.7, -0.2), C64::new(2.0, 0.3))]).unwrap();
    let pairs = [(&d12, &d12), (&d12, &deriv), (&skew, &d12)];
    let mut worst_conv = 0.0f64;
    for (mu, nu) in pairs {
        let prod = mu.convolve(nu).unwrap();
        let (fm, fn_, fp) = (TransformEvaluator::new(mu), TransformEvaluator::new(nu), TransformEvaluator::new(&prod));
        for _ in 0..100 {
            let z = C64::from_polar(5.0 * rng.gen::<f64>().sqrt(), rng.gen_range(-PI..PI));
            let err = (fp.eval(z) - fm.eval(z) * fn_.eval(z)).norm() / (scale(mu, z) * scale(nu, z));
            worst_conv = worst_conv.max(err);
        }
    }
    let mut worst_conj = 0.0f64;
    let conj = skew.conjugate();
    for _ in 0..100 {
        let z = C64::from_polar(5.0 * rng.gen::<f64>().sqrt(), rng.gen_range(-PI..PI));
        let lhs = TransformEvaluator::new(&conj).eval(z);
        let rhs = TransformEvaluator::new(&skew).eval(z.conj()).conj();
        worst_conj = worst_conj.max((lhs - rhs).norm() / scale(&skew, z));
    }
    let mut worst_deriv = 0.0f64;
    let ev = TransformEvaluator::new(&deriv);
    for _ in 0..50 {
        let z = C64::from_polar(5.0 * rng.gen::<f64>().sqrt(), rng.gen_range(-PI..PI));
        worst_deriv = worst_deriv.max((ev.eval(z) - (-z * (-z).exp())).norm());
    }
    let ok = worst_conv <= 1e-10 && worst_conj <= 1e-15 && worst_deriv <= 1e-10;
    outcome(ok, format!("convolution {worst_conv:.1e} (relative to scale), conjugation {worst_conj:.1e}, derivative closed form {worst_deriv:.1e}"))
}

fn criterion9() -> Outcome {
    let d12 = CompactMeasure::dirac_difference(1.0, 2.0).unwrap();
    let square = d12.convolve(&d12).unwrap();
    let thetas = lin_space(0.0, FRAC_PI_3, 33);
    let mut worst_drop = f64::NEG_INFINITY;
    for mu in [&d12, &square] {
        let m: Vec<f64> = thetas.iter().map(|&t| ray_max(mu, t, &RayMaxOptions::default()).unwrap().value).collect();
        for w in m.windows(2) {
            worst_drop = worst_drop.max(w[0] - w[1]);
        }
    }
    outcome(worst_drop <= 1e-9, format!("largest decrease between neighbours {worst_drop:.2e}"))
}

fn criterion10(r: &VerificationReport) -> Outcome {
    let flagged = ["probe45", "cor46", "hille", "hyp32"].iter().all(|id| !scenario(r, id).limitations.is_empty());
    // rows probing the infinite-dimensional bound must not carry a verdict
    let unclaimed = ["probe45", "cor46"].iter().all(|id| {
        scenario(r, id).checks.iter().filter(|c| c.name.starts_with("norm[") || c.name.starts_with("norm_product[")).all(|c| c.verdict == Verdict::Info)
    });
    let hyp = all_pass(scenario(r, "hyp32"), &["bounded_satisfied", "fine_sharp", "two_atom_form"]).0;
    outcome(flagged && unclaimed && hyp, "limitations attached to probe45, cor46, hille and hyp32; lower-bound rows are info-only; hypothesis checks pass")
}

fn main() -> ExitCode {
    let cfg = ScenarioConfig { record_timing: true, ..ScenarioConfig::default() };
    let report = run_scenario("all", &cfg).expect("scenarios run");
    let results = [
        ("rem37 spectral radius and sector supremum", criterion1(&report)),
        ("ex36 spectral radius equals ray maximum", criterion2(&report)),
        ("hille maximizer and Jordan surrogate trends", criterion3(&report)),
        ("lemma42 residuals", criterion4(&report, &cfg)),
        ("cor43 bound", criterion5(&report)),
        ("lemma44 region supremum", criterion6(&report)),
        ("jordan certificate", criterion7(&report)),
        ("transform algebra", criterion8()),
        ("ray maximum monotone in angle", criterion9()),
        ("finite-model limitations reported", criterion10(&report)),
    ];
    let mut failed = 0;
    for (i, (label, o)) in results.iter().enumerate() {
        let tag = if o.ok { "PASS" } else { "FAIL" };
        println!("criterion {:2} {tag}: {label}: {}", i + 1, o.detail);
        failed += usize::from(!o.ok);
    }
    let slowest = report.scenarios.iter().map(|s| (s.runtime_secs.unwrap_or(f64::NAN), s.scenario.as_str())).fold((0.0, ""), |a, b| if b.0 > a.0 { b } else { a });
    println!("slowest scenario: {} ({:.2} s)", slowest.1, slowest.0);
    if failed == 0 {
        println!("all {} criteria pass", results.len());
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria fail");
        ExitCode::FAILURE
    }
}
