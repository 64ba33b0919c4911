use std::collections::BTreeMap;

use num_complex::Complex64;

use super::circle::circle_angles;
use super::Parallelism;
use crate::error::{Error, Result};
use crate::kernel::Target;
use crate::region::omega_margin;
use crate::report::{ReportKind, VerificationReport, SCHEMA_VERSION};
use crate::series::PowerSeries;

/// Relative radii of the concentric sampling circles.
pub const CERTIFY_RADII: [f64; 12] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99, 0.999];

/// Angles per circle when no count is given.
pub const DEFAULT_CERTIFY_SAMPLES: usize = 1024;

/// Below this modulus `f` or `f'` counts as vanishing.
const VANISH_TOL: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq)]
enum Source {
    Series {
        f: PowerSeries,
        df: PowerSeries,
        d2f: PowerSeries,
    },
    Target(Target),
}

/// An analytic function on `|z| < disc_radius`, given by a truncated series
/// or by one of the named target maps.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticSample {
    source: Source,
    disc_radius: f64,
}

impl AnalyticSample {
    pub fn from_series(series: PowerSeries, disc_radius: f64) -> Result<Self> {
        check_disc_radius(disc_radius)?;
        let df = series.derivative();
        let d2f = df.derivative();
        Ok(Self {
            source: Source::Series { f: series, df, d2f },
            disc_radius,
        })
    }

    pub fn from_target(target: Target) -> Self {
        Self {
            source: Source::Target(target),
            disc_radius: 1.0,
        }
    }

    pub fn disc_radius(&self) -> f64 {
        self.disc_radius
    }

    pub fn series(&self) -> Option<&PowerSeries> {
        match &self.source {
            Source::Series { f, .. } => Some(f),
            Source::Target(_) => None,
        }
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        match &self.source {
            Source::Series { f, .. } => Ok(f.eval(z)),
            Source::Target(t) => t.eval(z),
        }
    }

    /// `(f, f', f'')` at `z`; only series samples carry derivatives.
    fn jet(&self, z: Complex64) -> Result<(Complex64, Complex64, Complex64)> {
        match &self.source {
            Source::Series { f, df, d2f } => Ok((f.eval(z), df.eval(z), d2f.eval(z))),
            Source::Target(t) => Err(Error::DomainError(format!(
                "derivatives of target `{t}` are not available; supply a series"
            ))),
        }
    }
}

fn check_disc_radius(r: f64) -> Result<()> {
    if r > 0.0 && r <= 1.0 {
        Ok(())
    } else {
        Err(Error::DomainError(format!("disc radius {r} must lie in (0, 1]")))
    }
}

/// Outcome of [`certify_sufficient_condition`].
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub report: VerificationReport,
    /// Strict inequality held at every sample.
    pub hypothesis_holds: bool,
    pub sup_lhs: f64,
    /// `(3 + 2t)/6`.
    pub bound: f64,
    /// Largest sampled `|z f'/f − 1|`.
    pub max_disc_distance: f64,
    /// Smallest sampled `Ω_LP` margin of `z f'/f`.
    pub min_omega_margin: f64,
    /// `z f'/f` stayed in `|w − 1| < 1/2` and in `Ω_LP` at every sample.
    pub conclusion_holds: bool,
}

pub fn certify_sufficient_condition(f: &AnalyticSample, t: f64, samples: usize) -> Result<Certificate> {
    certify_sufficient_condition_with(f, t, samples, Parallelism::Serial)
}

/// Samples `|t(1 + z f''/f') + (1−t) z f'/f − 1|` on the circles
/// [`CERTIFY_RADII`] (scaled by the sample's disc radius) and compares it
/// with `(3 + 2t)/6`. When the bound holds, the image of `z f'/f` is checked
/// against `|w − 1| < 1/2` and `Ω_LP` at the same points.
pub fn certify_sufficient_condition_with(
    f: &AnalyticSample,
    t: f64,
    samples: usize,
    parallelism: Parallelism,
) -> Result<Certificate> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::ParamRange {
            name: "t",
            value: t,
            range: "[0, 1]",
        });
    }
    let zero = Complex64::new(0.0, 0.0);
    let (f0, df0, _) = f.jet(zero)?;
    if f0.norm() > 1e-12 || (df0 - 1.0).norm() > 1e-12 {
        return Err(Error::DomainError("certification needs f(0) = 0 and f'(0) = 1".into()));
    }
    let samples = samples.max(1);
    let angles = circle_angles(samples);
    let points: Vec<Complex64> = CERTIFY_RADII
        .iter()
        .flat_map(|&rho| angles.iter().map(move |&a| Complex64::from_polar(rho * f.disc_radius(), a)))
        .collect();

    let evaluated = parallelism.map(points.len(), |k| -> Result<(f64, Complex64)> {
        let z = points[k];
        let (fz, dfz, d2fz) = f.jet(z)?;
        if !dfz.is_finite() || dfz.norm() < VANISH_TOL {
            return Err(Error::DerivativeVanishes { z });
        }
        if !fz.is_finite() || !d2fz.is_finite() || fz.norm() < VANISH_TOL {
            return Err(Error::SingularSample { z });
        }
        let q = z * dfz / fz;
        let lhs = (t * (1.0 + z * d2fz / dfz) + (1.0 - t) * q - 1.0).norm();
        Ok((lhs, q))
    });

    let bound = (3.0 + 2.0 * t) / 6.0;
    let (mut sup_lhs, mut max_disc, mut min_margin) = (0.0f64, 0.0f64, f64::INFINITY);
    for item in evaluated {
        let (lhs, q) = item?;
        sup_lhs = sup_lhs.max(lhs);
        max_disc = max_disc.max((q - 1.0).norm());
        min_margin = min_margin.min(omega_margin(q));
    }
    let hypothesis_holds = sup_lhs < bound;
    let conclusion_holds = max_disc < 0.5 && min_margin > 0.0;
    let passed = hypothesis_holds && conclusion_holds;
    let notes = match (hypothesis_holds, conclusion_holds) {
        (true, true) => format!("inequality and conclusion hold at {} samples", points.len()),
        (true, false) => format!(
            "inequality holds but z f'/f leaves the disc or region (max |q-1| = {max_disc}, min margin = {min_margin})"
        ),
        (false, _) => format!("inequality fails: sup = {sup_lhs} >= {bound}"),
    };
    let mut params = BTreeMap::new();
    params.insert("t".to_string(), t);
    params.insert("disc_radius".to_string(), f.disc_radius());
    let report = VerificationReport {
        schema: SCHEMA_VERSION,
        id: "sufficiency".into(),
        kind: ReportKind::Sufficiency,
        params,
        closed_form: bound,
        oracle_value: sup_lhs,
        gap: (bound - sup_lhs).abs(),
        tolerance: 0.0,
        samples: points.len(),
        passed,
        notes,
    };
    Ok(Certificate {
        report,
        hypothesis_holds,
        sup_lhs,
        bound,
        max_disc_distance: max_disc,
        min_omega_margin: min_margin,
        conclusion_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quadratic(c: f64) -> AnalyticSample {
        AnalyticSample::from_series(PowerSeries::from_real(&[0.0, 1.0, c]), 1.0).unwrap()
    }

    #[test]
    fn identity_passes_for_every_t() {
        let f = quadratic(0.0);
        for t in [0.0, 0.5, 1.0] {
            let c = certify_sufficient_condition(&f, t, 64).unwrap();
            assert_eq!(c.sup_lhs, 0.0);
            assert!(c.report.passed);
        }
    }

    #[test]
    fn quadratic_threshold_at_t_zero() {
        // sup |cz/(1+cz)| on |z| = ρ is cρ/(1 − cρ)
        let rho = 0.999;
        let pass = certify_sufficient_condition(&quadratic(0.3), 0.0, 1024).unwrap();
        assert!(pass.hypothesis_holds && pass.conclusion_holds);
        assert!((pass.sup_lhs - 0.3 * rho / (1.0 - 0.3 * rho)).abs() < 1e-12);
        let fail = certify_sufficient_condition(&quadratic(0.4), 0.0, 1024).unwrap();
        assert!(!fail.hypothesis_holds);
        assert!((fail.sup_lhs - 0.4 * rho / (1.0 - 0.4 * rho)).abs() < 1e-12);
    }

    #[test]
    fn bound_at_t_one() {
        let c = certify_sufficient_condition(&quadratic(0.1), 1.0, 16).unwrap();
        assert!((c.bound - 5.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_input() {
        let f = AnalyticSample::from_series(PowerSeries::from_real(&[0.0, 2.0]), 1.0).unwrap();
        assert!(certify_sufficient_condition(&f, 0.5, 8).is_err());
        assert!(certify_sufficient_condition(&quadratic(0.1), 1.5, 8).is_err());
        let target = AnalyticSample::from_target(Target::Sine);
        assert!(certify_sufficient_condition(&target, 0.5, 8).is_err());
        // f' = 1 + 2z vanishes at z = −1/2, a grid point of the circle ρ = 0.5
        let crit = AnalyticSample::from_series(PowerSeries::from_real(&[0.0, 1.0, 1.0]), 1.0).unwrap();
        let err = certify_sufficient_condition(&crit, 0.0, 4).unwrap_err();
        assert!(matches!(err, Error::DerivativeVanishes { .. } | Error::SingularSample { .. }), "{err:?}");
    }

    #[test]
    fn parallel_matches_serial() {
        let f = quadratic(0.2);
        let a = certify_sufficient_condition(&f, 0.5, 256).unwrap();
        let b = certify_sufficient_condition_with(&f, 0.5, 256, Parallelism::Threads(3)).unwrap();
        assert_eq!(a, b);
    }
}
