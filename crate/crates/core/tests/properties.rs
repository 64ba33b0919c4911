use std::f64::consts::PI;

use num_complex::Complex64;
use parabolic::oracle::{bracket_root, scan_sign_change, BracketSolverConfig};
use parabolic::radius::{
    caratheodory_order_radius, frak_f_radius, radius_into_flp, s_star_beta_radius, starlike_disc_radius, RadiusId,
};
use parabolic::region::{argument_sector_check, inscribed_disc, omega_margin, real_part_profile};
use parabolic::series::p0_coefficients;
use parabolic::{eval_lp, eval_p0, sqrt_upper};
use proptest::prelude::*;

fn disc_point() -> impl Strategy<Value = Complex64> {
    (0.0f64..1.0, -PI..PI).prop_map(|(rho, t)| Complex64::from_polar(rho.sqrt(), t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn sqrt_branch_is_upper(z in disc_point()) {
        let s = sqrt_upper(z);
        prop_assert!((s * s - z).norm() < 1e-12);
        prop_assert!(s.im >= -1e-15);
    }

    #[test]
    fn lp_commutes_with_conjugation(z in disc_point()) {
        prop_assume!((z - 1.0).norm() > 1e-6);
        let a = eval_lp(z.conj()).unwrap();
        let b = eval_lp(z).unwrap().conj();
        prop_assert!((a - b).norm() <= 1e-12 * (1.0 + b.norm()));
    }

    #[test]
    fn series_matches_closed_form_on_half_disc(rho in 0.0f64..0.5, t in -PI..PI) {
        let z = Complex64::from_polar(rho, t);
        let s = p0_coefficients(80).unwrap();
        let (value, tail) = s.eval_with_tail(z);
        prop_assert!((value - eval_p0(z).unwrap()).norm() <= tail + 1e-14);
    }

    #[test]
    fn region_points_lie_in_sector(x in -20.0f64..1.5, frac in -1.0f64..1.0) {
        let half_width = (3.0 - 2.0 * x).sqrt();
        let w = Complex64::new(x, frac * half_width * (1.0 - 1e-12));
        prop_assume!(omega_margin(w) > 0.0);
        prop_assert!(argument_sector_check(w).unwrap());
    }

    #[test]
    fn inscribed_disc_is_maximal(a in -3.0f64..1.49) {
        let d = inscribed_disc(a).unwrap();
        let mut escaped = false;
        for k in 0..256 {
            let t = -PI + 2.0 * PI * (k as f64 + 0.5) / 256.0;
            let inside = Complex64::new(a, 0.0) + Complex64::from_polar(d.radius * (1.0 - 1e-9), t);
            prop_assert!(omega_margin(inside) > 0.0, "a = {a}, angle {t}");
            let outside = Complex64::new(a, 0.0) + Complex64::from_polar(d.radius * (1.0 + 1e-3), t);
            escaped |= omega_margin(outside) <= 0.0;
        }
        prop_assert!(escaped);
    }

    #[test]
    fn real_part_profile_is_monotone(r in 0.01f64..0.94) {
        let r2 = r + 0.01;
        prop_assert!(real_part_profile(r2, 0.0).unwrap() > real_part_profile(r, 0.0).unwrap());
        prop_assert!(real_part_profile(r2, 1.0).unwrap() < real_part_profile(r, 1.0).unwrap());
    }

    #[test]
    fn carathedory_radius_decreases(a in 0.0f64..0.98) {
        let lo = caratheodory_order_radius(a).unwrap().closed_form;
        let hi = caratheodory_order_radius(a + 0.01).unwrap().closed_form;
        prop_assert!(hi < lo);
    }

    #[test]
    fn starlike_disc_radius_increases(a in 0.01f64..0.99) {
        let lo = starlike_disc_radius(a).unwrap().closed_form;
        let hi = starlike_disc_radius(a + 0.01).unwrap().closed_form;
        prop_assert!(hi > lo);
    }

    #[test]
    fn booth_radius_decreases(a in 0.01f64..0.98) {
        let lo = radius_into_flp(RadiusId::Booth { alpha: a }).unwrap().closed_form;
        let hi = radius_into_flp(RadiusId::Booth { alpha: a + 0.01 }).unwrap().closed_form;
        prop_assert!(hi < lo);
    }

    #[test]
    fn frak_f_radius_decreases(a in -1.0f64..0.99) {
        let lo = frak_f_radius(a).unwrap().closed_form;
        let hi = frak_f_radius(a + 0.01).unwrap().closed_form;
        prop_assert!(hi < lo);
    }

    #[test]
    fn s_star_beta_is_dual_to_caratheodory(k in 1u32..1024) {
        // dyadic β keeps 1 − β exact
        let beta = k as f64 / 1024.0;
        let s = s_star_beta_radius(beta).unwrap().closed_form;
        let c = caratheodory_order_radius(1.0 - beta).unwrap().closed_form;
        prop_assert_eq!(s, c);
    }

    #[test]
    fn bisection_is_stable_under_grid_doubling(cells in 4usize..512, c in 0.05f64..0.95) {
        let f = |r: f64| r * r.exp() - c * c.exp();
        let cfg = BracketSolverConfig::default();
        let root = |n: usize| {
            let (a, b) = scan_sign_change(&f, 0.0, 1.0, n).unwrap();
            if a == b { a } else { bracket_root(f, a, b, &cfg).unwrap() }
        };
        prop_assert!((root(cells) - root(2 * cells)).abs() <= 2.0 * cfg.abs_tol);
        prop_assert!((root(cells) - c).abs() <= 2.0 * cfg.abs_tol);
    }
}

#[test]
fn radius_roots_stable_under_grid_doubling() {
    for id in [RadiusId::Sp, RadiusId::Cardioid, RadiusId::Janowski { a: 0.5, b: -0.55 }] {
        let e = radius_into_flp(id).unwrap();
        let a = e.oracle_root_with_cells(64).unwrap();
        let b = e.oracle_root_with_cells(128).unwrap();
        assert!((a - b).abs() < 2e-12, "{id}: {a} vs {b}");
    }
}
