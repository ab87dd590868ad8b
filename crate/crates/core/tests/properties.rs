use bergman_core::functions::{DiskFunction, TaylorPoly};
use bergman_core::geometry::{
    ball_identity_residual, ball_metric, ball_phi, beta_c, comparability, double_radius, rho_c, BallMetric, BallPoint,
    Metric,
};
use bergman_core::lifting::lift_eval;
use bergman_core::quadrature::{AngularRule, DiskGrid, GridSpec};
use bergman_core::witness::build_witness;
use bergman_core::Complex64;
use proptest::prelude::*;

fn disk_pt(max: f64) -> impl Strategy<Value = Complex64> {
    (0.0..max, 0.0f64..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

fn ball_pt(dim: usize) -> impl Strategy<Value = BallPoint> {
    (prop::collection::vec(-1.0f64..1.0, 2 * dim), 0.0f64..0.995).prop_map(move |(v, t)| {
        let c: Vec<Complex64> = v.chunks(2).map(|p| Complex64::new(p[0], p[1])).collect();
        let n = c.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt().max(1e-12);
        BallPoint::new(&c.iter().map(|x| x * (t / n)).collect::<Vec<_>>()).unwrap()
    })
}

fn coeffs(max_deg: usize) -> impl Strategy<Value = TaylorPoly> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..=max_deg + 1)
        .prop_map(|v| TaylorPoly::new(v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn triangle_inequality(x in disk_pt(0.999), y in disk_pt(0.999), z in disk_pt(0.999)) {
        prop_assert!(rho_c(x, z) <= rho_c(x, y) + rho_c(y, z) + 1e-12);
        prop_assert!(beta_c(x, z) <= beta_c(x, y) + beta_c(y, z) + 1e-12);
        prop_assert!(rho_c(x, x) == 0.0 && beta_c(x, x) == 0.0);
    }

    #[test]
    fn beta_is_artanh_rho(z in disk_pt(0.9), w in disk_pt(0.9)) {
        prop_assert!((beta_c(z, w) - rho_c(z, w).atanh()).abs() < 1e-13);
    }

    #[test]
    fn doubling_contains_two_steps(
        z in disk_pt(0.99),
        r in 0.05f64..0.9,
        a in (0.0f64..1.0, 0.0f64..std::f64::consts::TAU),
        b in (0.0f64..1.0, 0.0f64..std::f64::consts::TAU),
    ) {
        use bergman_core::geometry::disk_phi;
        let u = disk_phi(z, Complex64::from_polar(r * a.0, a.1));
        let v = disk_phi(u, Complex64::from_polar(r * b.0, b.1));
        prop_assert!(rho_c(z, v) < double_radius(r).unwrap() + 1e-12);
    }

    #[test]
    fn comparability_bounds(z in disk_pt(0.999), r in 0.05f64..0.95, a in (0.0f64..1.0, 0.0f64..std::f64::consts::TAU)) {
        use bergman_core::geometry::disk_phi;
        let w = disk_phi(z, Complex64::from_polar(r * a.0, a.1));
        let c = comparability(r).unwrap();
        let m = 1.0 - z.norm_sqr();
        let k = m / (Complex64::new(1.0, 0.0) - z.conj() * w).norm();
        let q = m / (1.0 - w.norm_sqr());
        let tol = 1e-9;
        prop_assert!(k >= c.kernel_lower * (1.0 - tol) && k <= c.kernel_upper * (1.0 + tol));
        prop_assert!(q >= c.ratio_lower * (1.0 - tol) && q <= c.ratio_upper * (1.0 + tol));
    }

    #[test]
    fn ball_identity_and_involution(z in ball_pt(2), w in ball_pt(2)) {
        prop_assert!(ball_identity_residual(&z, &w).unwrap() < 1e-12);
        let back = ball_phi(&z, &ball_phi(&z, &w).unwrap()).unwrap();
        prop_assert!(back.sub(&w).norm() < 1e-10);
        let rho = ball_metric(&z, &w, BallMetric::Rho).unwrap();
        prop_assert!(rho <= ball_metric(&z, &w, BallMetric::D).unwrap() + 1e-14);
        prop_assert!(rho <= ball_metric(&z, &w, BallMetric::Beta).unwrap() + 1e-15);
    }

    #[test]
    fn ball_metric_symmetric_in_three_dims(z in ball_pt(3), w in ball_pt(3)) {
        for kind in [BallMetric::Rho, BallMetric::Beta, BallMetric::D] {
            let a = ball_metric(&z, &w, kind).unwrap();
            let b = ball_metric(&w, &z, kind).unwrap();
            prop_assert!((a - b).abs() <= 1e-12 * a.max(1.0), "{kind:?} {a} {b}");
        }
    }

    #[test]
    fn lift_is_linear(f in coeffs(12), g in coeffs(12), a in -2.0f64..2.0, b in -2.0f64..2.0, z in disk_pt(0.99), w in disk_pt(0.99)) {
        let n = f.coeffs().len().max(g.coeffs().len());
        let at = |p: &TaylorPoly, k: usize| p.coeffs().get(k).copied().unwrap_or_default();
        let h = TaylorPoly::new((0..n).map(|k| at(&f, k) * a + at(&g, k) * b).collect()).unwrap();
        let (f, g, h) = (DiskFunction::TaylorPoly(f), DiskFunction::TaylorPoly(g), DiskFunction::TaylorPoly(h));
        let lhs = lift_eval(&h, z, w);
        let rhs = lift_eval(&f, z, w) * a + lift_eval(&g, z, w) * b;
        prop_assert!((lhs - rhs).norm() < 1e-12 * (1.0 + rhs.norm()));
    }

    #[test]
    fn diagonal_of_lift_is_derivative(f in coeffs(20), z in disk_pt(0.999)) {
        let f = DiskFunction::TaylorPoly(f);
        let d = lift_eval(&f, z, z);
        prop_assert!((d - f.derivative(z)).norm() <= 1e-13 * (1.0 + d.norm()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn witness_scale_covariance(f in coeffs(8), c in 0.1f64..5.0, z in disk_pt(0.99)) {
        let f = DiskFunction::TaylorPoly(f);
        let fc = f.scaled(Complex64::new(c, 0.0)).unwrap();
        let w = build_witness(&f, Metric::Rho, 0.5).unwrap();
        let wc = build_witness(&fc, Metric::Rho, 0.5).unwrap();
        prop_assert!((wc.g(z) - c * w.g(z)).abs() <= 1e-12 * (1.0 + wc.g(z)));
    }

    #[test]
    fn partials_nondecreasing(k in 0usize..40, alpha in -0.9f64..3.0, s in 0.0f64..0.9) {
        let spec = GridSpec { radial_nodes: 10, tail_nodes: 10, levels: 8, angular: AngularRule::Uniform { m: 8 } };
        let g = DiskGrid::new(alpha, spec).unwrap();
        let r = g.integrate(|z| z.norm_sqr().powi(k as i32) / (1.0 - z.norm_sqr()).powf(s));
        prop_assert!(r.partials.windows(2).all(|w| w[1] >= w[0]));
    }
}
