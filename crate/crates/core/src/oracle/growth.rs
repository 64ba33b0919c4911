use serde::Serialize;

use super::quadrature::{integrate_with_breaks, QuadConfig};
use crate::error::{Error, Result};
use crate::region::re_p0_bounds;
use crate::series::p0_coefficients;

/// Below this point the integrand `P_0(±t)/t` is integrated termwise from
/// its power series.
const SERIES_CUTOFF: f64 = 0.1;
const SERIES_DEGREE: usize = 40;

/// `∫_0^r P_0(σt)/t dt` for `σ = ±1`.
fn log_growth_integral(r: f64, sigma: f64) -> Result<f64> {
    if r == 0.0 {
        return Ok(0.0);
    }
    let p0 = p0_coefficients(SERIES_DEGREE)?;
    let a = r.min(SERIES_CUTOFF);
    // ∫_0^a Σ c_n (σt)^n / t dt = Σ c_n σ^n a^n / n
    let mut head = 0.0;
    let mut pow = 1.0;
    for n in 1..=SERIES_DEGREE {
        pow *= sigma * a;
        head += p0.coeff(n).re * pow / n as f64;
    }
    if r <= SERIES_CUTOFF {
        return Ok(head);
    }
    let integrand = |t: f64| -> f64 {
        let (min, max) = re_p0_bounds(t).unwrap_or((f64::NAN, f64::NAN));
        (if sigma > 0.0 { min } else { max }) / t
    };
    // graded mesh towards t = 1 where the lower integrand has a log² singularity
    let mut breaks = Vec::new();
    let mut gap = 1.0 - a;
    while gap > (1.0 - r) && gap > 1e-15 {
        gap *= 0.5;
        breaks.push(1.0 - gap);
    }
    let cfg = QuadConfig::default();
    let tail = integrate_with_breaks(integrand, a, r, &breaks, &cfg)?;
    Ok(head + tail.value)
}

/// Sharp bounds `r exp ∫_0^r P_0(t)/t dt ≤ |f(z)| ≤ r exp ∫_0^r P_0(−t)/t dt`
/// for `|z| = r`, by adaptive quadrature.
pub fn growth_bounds(r: f64) -> Result<(f64, f64)> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::DomainError(format!("growth radius r = {r} must lie in [0, 1)")));
    }
    if r == 0.0 {
        return Ok((0.0, 0.0));
    }
    let lower = r * log_growth_integral(r, 1.0)?.exp();
    let upper = r * log_growth_integral(r, -1.0)?.exp();
    Ok((lower, upper))
}

/// Limit estimate for `−f_0(−r)` as `r → 1⁻`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoveringEstimate {
    pub value: f64,
    /// Last `k` used, with `r = 1 − 2^{−k}`.
    pub k: u32,
    pub sequence: Vec<f64>,
    pub note: String,
}

/// Evaluates `−f_0(−r) = r exp ∫_0^r P_0(−t)/t dt` at `r = 1 − 2^{−k}` until
/// successive values differ by less than `1e−8`.
pub fn covering_constant() -> Result<CoveringEstimate> {
    const STABILITY: f64 = 1e-8;
    let mut sequence = Vec::new();
    for k in 1..=52u32 {
        let r = 1.0 - 0.5f64.powi(k as i32);
        let (_, upper) = growth_bounds(r)?;
        sequence.push(upper);
        if let [.., prev, last] = sequence[..] {
            if (last - prev).abs() < STABILITY {
                return Ok(CoveringEstimate {
                    value: last,
                    k,
                    sequence,
                    note: "covering constant read as lim_{r->1-} -f0(-r); numeric limit of r = 1 - 2^-k".into(),
                });
            }
        }
    }
    Err(Error::NoConvergence { values: sequence })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{extremal_f0, extremal_g0};
    use num_complex::Complex64;

    #[test]
    fn zero_radius() {
        assert_eq!(growth_bounds(0.0).unwrap(), (0.0, 0.0));
        assert!(growth_bounds(1.0).is_err());
    }

    #[test]
    fn quadrature_matches_series_extremals() {
        let f0 = extremal_f0(400).unwrap();
        let g0 = extremal_g0(400).unwrap();
        for r in [0.05, 0.1, 0.3, 0.6, 0.9] {
            let (lo, hi) = growth_bounds(r).unwrap();
            let z = Complex64::new(r, 0.0);
            assert!((lo - f0.eval(z).re).abs() < 1e-10, "r={r}");
            assert!((hi - g0.eval(z).re).abs() < 1e-10, "r={r}");
        }
    }

    #[test]
    fn covering_sequence_is_increasing() {
        let est = covering_constant().unwrap();
        assert!(est.sequence.windows(2).all(|w| w[1] > w[0]));
        let (_, upper) = growth_bounds(1.0 - 1e-6).unwrap();
        assert!(est.value > upper);
    }
}
