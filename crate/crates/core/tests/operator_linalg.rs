use fbcalc_core::linalg::{eigenvalues, expm, op_norm, spec_radius, CMatrix, Lu, Operator};
use fbcalc_core::operator::SemigroupModel;
use fbcalc_core::optimize::log_space;
use fbcalc_core::C64;
use nalgebra::DMatrix;
use proptest::prelude::*;

fn to_na(m: &CMatrix) -> DMatrix<C64> {
    DMatrix::from_fn(m.dim(), m.dim(), |i, j| m[(i, j)])
}

fn matrix(n: usize, scale: f64) -> impl Strategy<Value = CMatrix> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n * n).prop_map(move |v| {
        let mut it = v.into_iter();
        CMatrix::from_fn(n, |_, _| {
            let (a, b) = it.next().unwrap();
            C64::new(a * scale, b * scale)
        })
    })
}

fn sector_point(max_r: f64, max_angle: f64) -> impl Strategy<Value = C64> {
    (0.0..max_r, -max_angle..max_angle).prop_map(|(r, a)| C64::from_polar(r, a))
}

fn models() -> Vec<SemigroupModel> {
    vec![
        SemigroupModel::log_spaced(1e-6, 1.0, 64).unwrap(),
        SemigroupModel::jordan(8, 8.0, 0.0).unwrap(),
        SemigroupModel::jordan(8, 8.0, 1.0).unwrap(),
        SemigroupModel::matrix(CMatrix::from_fn(5, |i, j| {
            C64::new(((i * 3 + j) % 4) as f64 * 0.3 - 0.9 * (i == j) as u8 as f64, (i as f64 - j as f64) * 0.1)
        }))
        .unwrap(),
    ]
}

fn rel_diff(a: &Operator, b: &Operator) -> f64 {
    a.sub(b).max_abs() / a.max_abs().max(b.max_abs()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn semigroup_law(s in sector_point(1.0, 1.5), t in sector_point(1.0, 1.5)) {
        for m in models() {
            let lhs = m.semigroup_at(s).unwrap().matmul(&m.semigroup_at(t).unwrap());
            let rhs = m.semigroup_at(s + t).unwrap();
            prop_assert!(rel_diff(&lhs, &rhs) <= 1e-10, "{:?}", m.kind());
        }
    }

    #[test]
    fn diagonal_model_contracts(t in sector_point(50.0, std::f64::consts::FRAC_PI_2)) {
        let m = SemigroupModel::log_spaced(1e-6, 1.0, 512).unwrap();
        prop_assert!(op_norm(&m.semigroup_at(t).unwrap()).unwrap() <= 1.0 + 1e-12);
    }

    #[test]
    fn jordan_spectral_radius(t in sector_point(2.0, 1.5), lambda0 in 0.0f64..3.0, n in 1usize..20) {
        let m = SemigroupModel::jordan(n, n as f64, lambda0).unwrap();
        let rho = spec_radius(&m.semigroup_at(t).unwrap()).unwrap();
        prop_assert!((rho - (-lambda0 * t.re).exp()).abs() <= 1e-15 * rho.max(1.0));
    }

    #[test]
    fn op_norm_matches_svd(a in matrix(5, 1.0)) {
        let svd = to_na(&a).svd(false, false);
        let want = svd.singular_values.iter().copied().fold(0.0, f64::max);
        let got = op_norm(&Operator::Dense(a)).unwrap();
        prop_assert!((got - want).abs() <= 1e-9 * want);
    }

    #[test]
    fn spectral_radius_matches_schur(a in matrix(7, 1.0)) {
        let schur = nalgebra::linalg::Schur::new(to_na(&a));
        let (_, t) = schur.unpack();
        let want = (0..7).map(|i| t[(i, i)].norm()).fold(0.0, f64::max);
        let got = spec_radius(&Operator::Dense(a.clone())).unwrap();
        prop_assert!((got - want).abs() <= 1e-10 * want.max(1.0));
        let mut ours: Vec<f64> = eigenvalues(&a).unwrap().iter().map(|z| z.norm()).collect();
        let mut theirs: Vec<f64> = (0..7).map(|i| t[(i, i)].norm()).collect();
        ours.sort_by(f64::total_cmp);
        theirs.sort_by(f64::total_cmp);
        for (x, y) in ours.iter().zip(&theirs) {
            prop_assert!((x - y).abs() <= 1e-8);
        }
    }

    #[test]
    fn expm_matches_nalgebra(a in matrix(6, 2.0)) {
        let ours = expm(&a).unwrap();
        let theirs = to_na(&a).exp();
        let scale = theirs.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let err = (0..6).flat_map(|i| (0..6).map(move |j| (i, j))).map(|(i, j)| (ours[(i, j)] - theirs[(i, j)]).norm()).fold(0.0, f64::max);
        prop_assert!(err <= 1e-12 * scale.max(1.0), "{}", err);
    }

    #[test]
    fn lu_inverse_matches_nalgebra(a in matrix(6, 1.0)) {
        let mut shifted = a.clone();
        shifted.add_diagonal(C64::new(3.0, 0.0));
        let (inv, cond) = Lu::factor(&shifted).unwrap().inverse();
        let theirs = to_na(&shifted).try_inverse().unwrap();
        let err = (0..6).flat_map(|i| (0..6).map(move |j| (i, j))).map(|(i, j)| (inv[(i, j)] - theirs[(i, j)]).norm()).fold(0.0, f64::max);
        prop_assert!(err <= 1e-12 * cond);
    }

    #[test]
    fn resolvent_residual(z in sector_point(3.0, 3.1)) {
        for m in models() {
            let Ok(r) = m.resolvent(z) else { continue };
            let mut shifted = m.generator();
            shifted.add_identity(z);
            let prod = shifted.matmul(&r);
            let err = prod.sub(&Operator::identity(m.dim(), prod.is_diagonal())).max_abs();
            prop_assert!(err <= 1e-10 * r.max_abs().max(1.0));
        }
    }
}

#[test]
fn generator_consistency_ratio() {
    for m in models() {
        let a = m.generator();
        let err = |h: f64| {
            let mut d = m.semigroup_at(C64::new(h, 0.0)).unwrap();
            d.add_identity(C64::new(-1.0, 0.0));
            d.scale(C64::new(1.0 / h, 0.0)).sub(&a).max_abs()
        };
        let (e4, e5) = (err(1e-4), err(1e-5));
        let ratio = e4 / e5;
        assert!((ratio - 10.0).abs() < 1.0 || e4 < 1e-10, "{:?}: {e4} {e5}", m.kind());
    }
}

#[test]
fn fine_grid_spectral_radius_is_a_quarter() {
    let m = SemigroupModel::diagonal(log_space(1e-6, 1.0, 4096)).unwrap();
    for u in [0.1, 0.5, 1.0] {
        let t = C64::new(u, 0.0);
        let f = m.semigroup_at(t).unwrap().sub(&m.semigroup_at(t * 2.0).unwrap());
        assert!((spec_radius(&f).unwrap() - 0.25).abs() < 1e-4);
        assert_eq!(spec_radius(&f).unwrap(), op_norm(&f).unwrap());
    }
}
