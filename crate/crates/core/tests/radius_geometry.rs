//! Image-level checks of the radius catalogue beyond the scalar conditions.

use parabolic::oracle::{check_subordination_inclusion, frak_f_disc, Parallelism};
use parabolic::radius::{frak_f_radius, radius_entry, RadiusId};
use parabolic::region::{inscribed_disc, OmegaLp};
use parabolic::Target;

const PASS: f64 = 1.0 - 1e-6;
const FAIL: f64 = 1.0 + 1e-3;

#[test]
fn target_images_touch_the_region_at_the_radius() {
    let cases = [
        (RadiusId::Sp, Target::Parabolic),
        (RadiusId::Ss, Target::Sine),
        (RadiusId::Delta, Target::Crescent),
        (RadiusId::CoshSqrt, Target::CoshSqrt),
        (RadiusId::Asinh, Target::Asinh),
        (RadiusId::Cardioid, Target::Cardioid),
        (RadiusId::Booth { alpha: 0.8 }, Target::Booth { alpha: 0.8 }),
        (RadiusId::AlphaE { alpha: 0.3 }, Target::ExpAlpha { alpha: 0.3 }),
    ];
    for (id, target) in cases {
        let r = radius_entry(id).unwrap().closed_form;
        let inside = check_subordination_inclusion(|z| target.eval(z), r * PASS, &OmegaLp, 4096, Parallelism::Global).unwrap();
        assert!(inside.passed, "{id}: {}", inside.notes);
        let outside = check_subordination_inclusion(|z| target.eval(z), r * FAIL, &OmegaLp, 4096, Parallelism::Global).unwrap();
        assert!(!outside.passed, "{id}: {}", outside.notes);
    }
}

#[test]
fn frak_f_disc_stays_inside_inscribed_disc() {
    for a in [-1.0, -0.5, 0.0, 0.5, 1.0] {
        let radius = frak_f_radius(a).unwrap().closed_form;
        for k in 1..=100 {
            let r = radius * k as f64 / 100.0;
            let (center, rad) = frak_f_disc(a, r).unwrap();
            assert!((1.0..1.5).contains(&center), "A = {a}, r = {r}");
            let max = inscribed_disc(center).unwrap().radius;
            assert!(rad <= max + 1e-12, "A = {a}, r = {r}: {rad} > {max}");
        }
    }
}

#[test]
fn witnesses_land_on_the_boundary() {
    for id in [RadiusId::Sp, RadiusId::CoshSqrt, RadiusId::Janowski { a: 0.5, b: -0.55 }, RadiusId::FrakF { a: 0.0 }] {
        let w = radius_entry(id).unwrap().witness.unwrap();
        assert!(w.region_margin().abs() < 1e-9, "{id}: {}", w.region_margin());
    }
}
