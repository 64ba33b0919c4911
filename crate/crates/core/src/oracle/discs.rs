use crate::error::{Error, Result};

fn check_r_n(r: f64, n: u32) -> Result<()> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::ParamRange {
            name: "r",
            value: r,
            range: "[0, 1)",
        });
    }
    if n == 0 {
        return Err(Error::ParamRange {
            name: "n",
            value: 0.0,
            range: "n >= 1",
        });
    }
    Ok(())
}

/// Disc `(center, radius)` containing `p(z)` for `|z| = r` when
/// `p ≺ (1+Az)/(1+Bz)` and `p(z) = 1 + c_n z^n + …`.
pub fn janowski_disc_bound(a: f64, b: f64, r: f64, n: u32) -> Result<(f64, f64)> {
    if !(-1.0 <= b && b < a && a <= 1.0) {
        return Err(Error::ParamRange {
            name: "B",
            value: b,
            range: "-1 <= B < A <= 1",
        });
    }
    check_r_n(r, n)?;
    let rn = r.powi(n as i32);
    let den = 1.0 - b * b * rn * rn;
    Ok(((1.0 - a * b * rn * rn) / den, (a - b).abs() * rn / den))
}

/// The order-`α` case `A = 1 − 2α`, `B = −1` written out.
pub fn caratheodory_order_disc(alpha: f64, r: f64, n: u32) -> Result<(f64, f64)> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::ParamRange {
            name: "alpha",
            value: alpha,
            range: "[0, 1)",
        });
    }
    check_r_n(r, n)?;
    let rn = r.powi(n as i32);
    let den = 1.0 - rn * rn;
    Ok(((1.0 + (1.0 - 2.0 * alpha) * rn * rn) / den, 2.0 * (1.0 - alpha) * rn / den))
}

/// Disc containing `(1+Az)/(1−z) + z p₁'/p₁ + z p₂'/p₂` on `|z| = r` for
/// Carathéodory `p₁, p₂`, assembled as a Minkowski sum of three discs.
pub fn frak_f_disc(a: f64, r: f64) -> Result<(f64, f64)> {
    if !(-1.0..=1.0).contains(&a) {
        return Err(Error::ParamRange {
            name: "A",
            value: a,
            range: "[-1, 1]",
        });
    }
    check_r_n(r, 1)?;
    // A = −1 collapses (1+Az)/(1−z) to the constant 1
    let (c0, r0) = if a == -1.0 { (1.0, 0.0) } else { janowski_disc_bound(a, -1.0, r, 1)? };
    // |z p'/p| ≤ 2r/(1−r²): the order-0 disc's radius about center 0
    let (_, rp) = caratheodory_order_disc(0.0, r, 1)?;
    Ok((c0, r0 + 2.0 * rp))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_radius_is_point_one() {
        assert_eq!(janowski_disc_bound(0.5, -0.5, 0.0, 1).unwrap(), (1.0, 0.0));
        assert_eq!(caratheodory_order_disc(0.3, 0.0, 2).unwrap(), (1.0, 0.0));
    }

    #[test]
    fn order_zero_specialisation() {
        for r in [0.1, 0.4, 0.9] {
            let (c, rad) = janowski_disc_bound(1.0, -1.0, r, 1).unwrap();
            let (c2, rad2) = caratheodory_order_disc(0.0, r, 1).unwrap();
            let d = 1.0 - r * r;
            assert!((c - (1.0 + r * r) / d).abs() < 1e-15 && (c - c2).abs() < 1e-15);
            assert!((rad - 2.0 * r / d).abs() < 1e-15 && (rad - rad2).abs() < 1e-15);
        }
    }

    #[test]
    fn order_alpha_is_janowski_with_b_minus_one() {
        for (alpha, r, n) in [(0.3, 0.6, 2), (0.0, 0.2, 1), (0.9, 0.95, 3)] {
            let a = janowski_disc_bound(1.0 - 2.0 * alpha, -1.0, r, n).unwrap();
            let b = caratheodory_order_disc(alpha, r, n).unwrap();
            assert!((a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12);
        }
        assert!(janowski_disc_bound(0.2, 0.2, 0.5, 1).is_err());
        assert!(janowski_disc_bound(0.2, 0.1, 1.0, 1).is_err());
        assert!(janowski_disc_bound(0.2, 0.1, 0.5, 0).is_err());
    }

    #[test]
    fn frak_f_aggregate_matches_closed_form() {
        for a in [-1.0, -0.3, 0.0, 0.7, 1.0] {
            for r in [0.05, 0.1, 0.3] {
                let (c, rad) = frak_f_disc(a, r).unwrap();
                let d = 1.0 - r * r;
                assert!((c - (1.0 + a * r * r) / d).abs() < 1e-14, "A={a} r={r}");
                assert!((rad - (5.0 + a) * r / d).abs() < 1e-14, "A={a} r={r}");
            }
        }
    }
}
