use std::collections::BTreeMap;

use num_complex::Complex64;

use super::circle::{circle_angles, extremize_on_circle, Functional};
use super::sufficiency::AnalyticSample;
use super::Parallelism;
use crate::error::{Error, Result};
use crate::region::Region;
use crate::report::{ReportKind, VerificationReport, SCHEMA_VERSION};

/// Samples `map` on `|z| = r` and checks every image point against `region`.
///
/// A failing sample is conclusive. Passing only means no violation was seen
/// at the sampled angles, and the report says so.
pub fn check_subordination_inclusion<F, R>(map: F, r: f64, region: &R, samples: usize, parallelism: Parallelism) -> Result<VerificationReport>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync,
    R: Region + ?Sized,
{
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::DomainError(format!("circle radius r = {r} must lie in [0, 1]")));
    }
    let samples = samples.max(1);
    let angles = circle_angles(samples);
    let evaluated = parallelism.map(samples, |k| {
        let theta = angles[k];
        let w = map(Complex64::from_polar(r, theta)).map_err(|_| Error::SingularOnCircle { r, angle: theta })?;
        let margin = region.margin(w);
        let support_agrees = region
            .alternate_contains(w)
            .is_none_or(|alt| alt == (margin > 0.0) || margin.abs() < 1e-12);
        Ok((theta, margin, support_agrees))
    });
    let mut worst = (f64::NAN, f64::INFINITY);
    let mut disagreements = 0;
    for item in evaluated {
        let (theta, margin, agrees) = item?;
        if margin < worst.1 {
            worst = (theta, margin);
        }
        if !agrees {
            disagreements += 1;
        }
    }
    let inside = worst.1 > 0.0;
    let mut notes = if inside {
        format!("verified at {samples} samples (necessary condition only); worst angle {}", worst.0)
    } else {
        format!("violated at angle {} with margin {}", worst.0, worst.1)
    };
    if disagreements > 0 {
        notes.push_str(&format!("; alternate membership test disagreed at {disagreements} samples"));
    }
    let mut params = BTreeMap::new();
    params.insert("r".to_string(), r);
    Ok(VerificationReport {
        schema: SCHEMA_VERSION,
        id: format!("inclusion[{}]", region.name()),
        kind: ReportKind::Containment,
        params,
        closed_form: 0.0,
        oracle_value: worst.1,
        gap: worst.1.abs(),
        tolerance: 0.0,
        samples,
        passed: inside && disagreements == 0,
        notes,
    })
}

/// Checks `min_{|z|=r} Re p(z) ≥ α`.
pub fn caratheodory_order_check(p: &AnalyticSample, alpha: f64, r: f64) -> Result<VerificationReport> {
    if (p.eval(Complex64::new(0.0, 0.0))? - 1.0).norm() > 1e-12 {
        return Err(Error::DomainError("Caratheodory check needs p(0) = 1".into()));
    }
    let rr = r * p.disc_radius();
    let ext = extremize_on_circle(|z| p.eval(z), rr, Functional::Re)?;
    let mut params = BTreeMap::new();
    params.insert("alpha".to_string(), alpha);
    params.insert("r".to_string(), rr);
    Ok(VerificationReport {
        schema: SCHEMA_VERSION,
        id: "caratheodory-order".into(),
        kind: ReportKind::Containment,
        params,
        closed_form: alpha,
        oracle_value: ext.min,
        gap: (ext.min - alpha).abs(),
        tolerance: 0.0,
        samples: ext.samples,
        passed: ext.min >= alpha,
        notes: format!("min Re p = {} at angle {}", ext.min, ext.argmin),
    })
}

/// Radius of the largest disc `|w − 1| < ρ` inside `φ(𝔻)`, estimated as the
/// minimum of `|φ(e^{iθ}) − 1|` over the unit circle.
pub fn inner_disc_radius<F>(map: F) -> Result<f64>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync,
{
    let ext = extremize_on_circle(|z| map(z).map(|w| w - 1.0), 1.0, Functional::Abs)?;
    Ok(ext.min)
}
