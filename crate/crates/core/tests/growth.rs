use num_complex::Complex64;
use parabolic::oracle::{class_member_series, growth_bounds, random_schwarz, seeded_rng};

const SEED: u64 = 20_240_601;

#[test]
fn class_members_respect_growth_bounds() {
    let mut rng = seeded_rng(SEED);
    for _ in 0..40 {
        let w = random_schwarz(&mut rng);
        let f = class_member_series(&w, 200).unwrap();
        for r in [0.2, 0.5, 0.8] {
            let (lo, hi) = growth_bounds(r).unwrap();
            for k in 0..16 {
                let z = Complex64::from_polar(r, -std::f64::consts::PI + (k as f64 + 0.5) * std::f64::consts::PI / 8.0);
                let m = f.eval(z).norm();
                assert!(m >= lo - 1e-8 && m <= hi + 1e-8, "r = {r}: {lo} <= {m} <= {hi}");
            }
        }
    }
}
