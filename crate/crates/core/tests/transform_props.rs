use fbcalc_core::measure::{Atom, CompactMeasure};
use fbcalc_core::optimize::lin_space;
use fbcalc_core::transform::{ray_max, RayMaxOptions, TransformEvaluator};
use fbcalc_core::C64;
use proptest::prelude::*;

fn derivative() -> CompactMeasure {
    CompactMeasure::derivative_functional(C64::new(1.0, 0.0), 0.25, 128).unwrap()
}

/// Real mass-zero measures on (0, ∞).
fn symmetric_measure() -> impl Strategy<Value = CompactMeasure> {
    prop::collection::vec((0.3f64..3.0, -1.0f64..1.0), 1..4).prop_map(|parts| {
        let mut atoms: Vec<Atom> = parts.iter().map(|&(x, w)| Atom::new(C64::new(x, 0.0), C64::new(w, 0.0))).collect();
        let total: f64 = parts.iter().map(|p| p.1).sum();
        atoms.push(Atom::new(C64::new(3.5, 0.0), C64::new(-total, 0.0)));
        CompactMeasure::atomic(atoms).unwrap()
    })
}

fn any_measure() -> impl Strategy<Value = CompactMeasure> {
    prop_oneof![
        symmetric_measure(),
        symmetric_measure().prop_map(|m| m.convolve(&derivative()).unwrap()),
        Just(derivative()),
    ]
}

fn complex_in_disk(r: f64) -> impl Strategy<Value = C64> {
    (0.0..r, -std::f64::consts::PI..std::f64::consts::PI).prop_map(|(m, a)| C64::from_polar(m, a))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn derivative_matches_central_difference(mu in any_measure(), z in complex_in_disk(3.0)) {
        let ev = TransformEvaluator::new(&mu);
        let h = 1e-5;
        let fd = (ev.eval(z + h) - ev.eval(z - h)) / (2.0 * h);
        let d = ev.eval_deriv(z, 1).unwrap();
        prop_assert!((fd - d).norm() <= 1e-7 * d.norm().max(1.0), "{} vs {}", fd, d);
    }

    #[test]
    fn cauchy_riemann(mu in any_measure(), z in complex_in_disk(3.0)) {
        let ev = TransformEvaluator::new(&mu);
        let h = 1e-5;
        let dx = (ev.eval(z + h) - ev.eval(z - h)) / (2.0 * h);
        let dy = (ev.eval(z + C64::new(0.0, h)) - ev.eval(z - C64::new(0.0, h))) / (2.0 * h);
        prop_assert!((dx + C64::i() * dy).norm() <= 1e-7 * dx.norm().max(1.0));
    }

    #[test]
    fn modulus_below_decay_bound(mu in any_measure(), z in complex_in_disk(6.0)) {
        let ev = TransformEvaluator::new(&mu);
        prop_assert!(ev.eval(z).norm() <= ev.decay_bound(z) * (1.0 + 1e-12));
    }

    #[test]
    fn decays_along_rays(mu in any_measure(), theta in -1.2f64..1.2) {
        prop_assume!(theta.abs() + mu.declared_support_half_angle() < 1.5);
        let ev = TransformEvaluator::new(&mu);
        let dir = C64::from_polar(1.0, theta);
        let mut r = 8.0;
        let mut last = f64::INFINITY;
        for _ in 0..6 {
            let bound = ev.decay_bound(dir * r);
            prop_assert!(bound < last);
            last = bound;
            r *= 2.0;
        }
        prop_assert!(ev.eval(dir * r).norm() < 1e-10);
    }

    #[test]
    fn ray_maximum_is_nondecreasing_in_angle(mu in symmetric_measure()) {
        let opts = RayMaxOptions::default();
        let ev = TransformEvaluator::new(&mu);
        prop_assume!(ev.ray_max(0.0, &opts).unwrap().value > 1e-6);
        let mut prev = 0.0;
        for th in lin_space(0.0, 1.2, 32) {
            let r = ev.ray_max(th, &opts).unwrap();
            prop_assert!((r.value - ev.eval(r.location).norm()).abs() <= 1e-15);
            prop_assert!(r.value >= prev - 1e-9, "{} < {} at {}", r.value, prev, th);
            prev = r.value;
        }
    }

    #[test]
    fn ray_max_symmetric_in_angle(mu in symmetric_measure(), th in 0.0f64..1.2) {
        let opts = RayMaxOptions::default();
        let a = ray_max(&mu, th, &opts).unwrap().value;
        let b = ray_max(&mu, -th, &opts).unwrap().value;
        prop_assert!((a - b).abs() <= 1e-12 * a.max(1e-300));
    }
}

#[test]
fn derivative_functional_transform_closed_form() {
    let ev = TransformEvaluator::new(&derivative());
    for k in 0..50 {
        let z = C64::from_polar(0.1 * (k % 10) as f64 + 0.05, 0.7 * k as f64);
        let want = -z * (-z).exp();
        assert!((ev.eval(z) - want).norm() < 1e-10, "{z}");
    }
}
