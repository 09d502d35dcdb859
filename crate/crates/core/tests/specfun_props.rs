use expwave::specfun::{
    carlson_rf, discriminant, ellint_f, ellint_k, gauss_2f1, jacobi_am, jacobi_sn_cn_dn,
    weierstrass_p, WeierstrassInvariants, WeierstrassP,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn jacobi_squares(u in -10.0f64..10.0, m in -1.0f64..1.0) {
        let t = jacobi_sn_cn_dn(u, m);
        prop_assert!((t.sn * t.sn + t.cn * t.cn - 1.0).abs() <= 1e-12);
        prop_assert!((t.dn * t.dn + m * t.sn * t.sn - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn sn_is_sine_of_amplitude(u in -10.0f64..10.0, m in -1.0f64..0.999) {
        let t = jacobi_sn_cn_dn(u, m);
        let phi = jacobi_am(u, m);
        prop_assert!((t.sn - phi.sin()).abs() <= 1e-12);
        prop_assert!((t.cn - phi.cos()).abs() <= 1e-12);
    }

    #[test]
    fn amplitude_inverts_f(phi in -1.5f64..1.5, m in -2.0f64..0.99) {
        let u = ellint_f(phi, m).unwrap();
        prop_assert!((jacobi_am(u, m) - phi).abs() <= 1e-10);
    }

    #[test]
    fn superunitary_round_trip(m in 1.01f64..6.0, t in 0.05f64..0.95) {
        // real domain |sin φ| ≤ 1/√m
        let phi = t * (1.0 / m.sqrt()).asin();
        let u = ellint_f(phi, m).unwrap();
        prop_assert!((jacobi_am(u, m) - phi).abs() <= 1e-10);
    }

    #[test]
    fn f_is_odd_and_quasi_periodic(phi in 0.0f64..3.0, m in -1.0f64..0.95) {
        let k = ellint_k(m).unwrap();
        let f = ellint_f(phi, m).unwrap();
        prop_assert!((ellint_f(-phi, m).unwrap() + f).abs() <= 1e-13);
        let shifted = ellint_f(phi + std::f64::consts::PI, m).unwrap();
        prop_assert!((shifted - f - 2.0 * k).abs() <= 1e-11 * k.max(1.0));
    }

    #[test]
    fn carlson_homogeneity(x in 0.0f64..5.0, y in 0.01f64..5.0, z in 0.01f64..5.0, s in 0.1f64..10.0) {
        let a = carlson_rf(s * x, s * y, s * z).unwrap();
        let b = carlson_rf(x, y, z).unwrap() / s.sqrt();
        prop_assert!((a - b).abs() <= 1e-13 * b.abs());
        let perm = carlson_rf(z, x, y).unwrap();
        prop_assert!((perm - carlson_rf(x, y, z).unwrap()).abs() <= 1e-14 * perm.abs());
    }

    #[test]
    fn weierstrass_equation(g2 in -5.0f64..5.0, g3 in -5.0f64..5.0, z in 0.05f64..3.0) {
        prop_assume!(discriminant(g2, g3).abs() > 1e-3);
        let wp = WeierstrassP::new(WeierstrassInvariants::new(g2, g3));
        prop_assume!(wp.distance_to_pole(z) > 0.05);
        let (p, dp) = wp.eval(z).unwrap();
        let rhs = 4.0 * p * p * p - g2 * p - g3;
        prop_assert!((dp * dp - rhs).abs() / p.abs().powi(3).max(1.0) <= 1e-10);
        let (pm, dpm) = wp.eval(-z).unwrap();
        prop_assert!((pm - p).abs() <= 1e-12 * p.abs().max(1.0));
        prop_assert!((dpm + dp).abs() <= 1e-11 * dp.abs().max(1.0));
    }

    #[test]
    fn weierstrass_homogeneity(g2 in -3.0f64..3.0, g3 in -3.0f64..3.0, z in 0.05f64..0.6, s in 0.5f64..2.0) {
        // ℘(sz; s⁻⁴g₂, s⁻⁶g₃) = s⁻²℘(z; g₂, g₃)
        prop_assume!(discriminant(g2, g3).abs() > 1e-3);
        let (p, _) = weierstrass_p(z, WeierstrassInvariants::new(g2, g3)).unwrap();
        let (q, _) = weierstrass_p(s * z, WeierstrassInvariants::new(g2 / s.powi(4), g3 / s.powi(6))).unwrap();
        prop_assert!((q - p / (s * s)).abs() <= 1e-11 * (p / (s * s)).abs().max(1.0));
    }

    #[test]
    fn euler_transformation(a in 0.1f64..2.0, b in 0.1f64..2.0, c in 0.5f64..3.0, x in -30.0f64..0.45) {
        // ₂F₁(a,b;c;x) = (1−x)^{c−a−b} ₂F₁(c−a,c−b;c;x)
        let lhs = gauss_2f1(a, b, c, x).unwrap();
        let rhs = (1.0 - x).powf(c - a - b) * gauss_2f1(c - a, c - b, c, x).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-10 * lhs.abs().max(1e-3));
    }

    #[test]
    fn logarithm_special_case(x in -20.0f64..0.45) {
        prop_assume!(x.abs() > 1e-8);
        let f = gauss_2f1(1.0, 1.0, 2.0, x).unwrap();
        let want = -(1.0 - x).ln() / x;
        prop_assert!((f - want).abs() <= 1e-12 * want);
    }
}
