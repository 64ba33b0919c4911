//! The full verification run behind `verify --all`.
//!
//! Items are listed in a fixed order and every computation is seeded or
//! deterministic, so two runs produce identical reports.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::Result;
use crate::kernel::eval_p0;
use crate::oracle::{
    certify_sufficient_condition, covering_constant, extremize_on_circle, growth_bounds, AnalyticSample, Functional, DEFAULT_CERTIFY_SAMPLES,
};
use crate::radius::{catalog_ids, radius_entry, RadiusId};
use crate::region::{
    inscribed_radius_vertex_branch, inscribed_radius_zeta_branch, min_distance_at_critical_points, re_p0_bounds,
};
use crate::report::{ReportKind, VerificationReport};
use crate::series::{extremal_f0, extremal_g0, PowerSeries};

pub const SERIES_TOLERANCE: f64 = 1e-12;
pub const LEMMA_TOLERANCE: f64 = 1e-8;
pub const DISC_TOLERANCE: f64 = 1e-9;
pub const GROWTH_TOLERANCE: f64 = 1e-8;
pub const COVERING_STABILITY: f64 = 1e-8;

/// Degree of the series evaluations compared against quadrature.
const GROWTH_SERIES_DEGREE: usize = 400;

type Runner = Box<dyn Fn(f64) -> Result<VerificationReport> + Send + Sync>;

/// One named check. `run` receives the radius tolerance; other checks use
/// their own pinned tolerances.
pub struct SuiteItem {
    pub id: String,
    run: Runner,
}

impl SuiteItem {
    pub fn run(&self, radius_tolerance: f64) -> Result<VerificationReport> {
        (self.run)(radius_tolerance)
    }
}

fn params(pairs: &[(&str, f64)]) -> BTreeMap<String, f64> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn radius_item(id: RadiusId) -> SuiteItem {
    SuiteItem {
        id: id.to_string(),
        run: Box::new(move |tol| radius_entry(id)?.verify(tol)),
    }
}

fn g0_coefficient_items() -> Vec<SuiteItem> {
    let pi2 = PI * PI;
    let expected = [
        (2, 8.0 / pi2),
        (3, -8.0 * (pi2 - 12.0) / (3.0 * pi2 * pi2)),
        (4, 8.0 * (1440.0 - 360.0 * pi2 + 23.0 * pi2 * pi2) / (135.0 * pi2 * pi2 * pi2)),
    ];
    expected
        .into_iter()
        .map(|(n, value)| SuiteItem {
            id: format!("g0-coefficient[n={n}]"),
            run: Box::new(move |_| {
                let g0 = extremal_g0(8)?;
                Ok(VerificationReport::agreement(
                    ReportKind::Agreement,
                    format!("g0-coefficient[n={n}]"),
                    params(&[("n", n as f64)]),
                    value,
                    g0.coeff(n).re,
                    SERIES_TOLERANCE,
                    9,
                    "exp-of-integral recurrence against the closed expression",
                ))
            }),
        })
        .collect()
}

fn lemma_items() -> Vec<SuiteItem> {
    let mut items = Vec::new();
    for r in [0.1, 0.3, 0.5, 0.7, 0.9] {
        for (which, label) in [(0usize, "min"), (1, "max")] {
            let id = format!("re-p0-{label}[r={r}]");
            items.push(SuiteItem {
                id: id.clone(),
                run: Box::new(move |_| {
                    let bounds = re_p0_bounds(r)?;
                    let e = extremize_on_circle(eval_p0, r, Functional::Re)?;
                    let (closed, oracle, angle, at) = if which == 0 {
                        (bounds.0, e.min, e.argmin, 0.0)
                    } else {
                        (bounds.1, e.max, e.argmax, PI)
                    };
                    let mut rep = VerificationReport::agreement(
                        ReportKind::Agreement,
                        id.clone(),
                        params(&[("r", r)]),
                        closed,
                        oracle,
                        LEMMA_TOLERANCE,
                        e.samples,
                        format!("extremal angle {angle}"),
                    );
                    rep.passed &= (angle - at).abs() < 1e-9;
                    Ok(rep)
                }),
            });
        }
    }
    items
}

fn disc_items() -> Vec<SuiteItem> {
    let mut items: Vec<SuiteItem> = [-1.0, -0.5, 0.0, 0.25, 0.5]
        .into_iter()
        .map(|a: f64| {
            let id = format!("inscribed-disc[a={a}]");
            SuiteItem {
                id: id.clone(),
                run: Box::new(move |_| {
                    let r = inscribed_radius_zeta_branch(a);
                    let d = min_distance_at_critical_points(a)?;
                    Ok(VerificationReport::agreement(
                        ReportKind::Agreement,
                        id.clone(),
                        params(&[("a", a)]),
                        r * r,
                        d,
                        DISC_TOLERANCE,
                        2,
                        "squared radius against the distance profile at its critical points",
                    ))
                }),
            }
        })
        .collect();
    items.push(SuiteItem {
        id: "inscribed-disc-branches[a=0.5]".into(),
        run: Box::new(|_| {
            Ok(VerificationReport::agreement(
                ReportKind::Agreement,
                "inscribed-disc-branches[a=0.5]",
                params(&[("a", 0.5)]),
                inscribed_radius_vertex_branch(0.5),
                inscribed_radius_zeta_branch(0.5),
                DISC_TOLERANCE,
                1,
                "both radius branches at the case boundary",
            ))
        }),
    });
    items
}

fn growth_items() -> Vec<SuiteItem> {
    let mut items = Vec::new();
    for r in [0.3, 0.6, 0.9] {
        for (which, label) in [(0usize, "lower"), (1, "upper")] {
            let id = format!("growth-{label}[r={r}]");
            items.push(SuiteItem {
                id: id.clone(),
                run: Box::new(move |_| {
                    let (lo, hi) = growth_bounds(r)?;
                    let z = Complex64::new(r, 0.0);
                    let (quad, series) = if which == 0 {
                        (lo, extremal_f0(GROWTH_SERIES_DEGREE)?.eval(z).re)
                    } else {
                        (hi, extremal_g0(GROWTH_SERIES_DEGREE)?.eval(z).re)
                    };
                    Ok(VerificationReport::agreement(
                        ReportKind::Agreement,
                        id.clone(),
                        params(&[("r", r)]),
                        series,
                        quad,
                        GROWTH_TOLERANCE,
                        GROWTH_SERIES_DEGREE,
                        "series evaluation against adaptive quadrature",
                    ))
                }),
            });
        }
    }
    items.push(SuiteItem {
        id: "covering-constant".into(),
        run: Box::new(|_| {
            let est = covering_constant()?;
            let n = est.sequence.len();
            let prev = est.sequence[n - 2];
            Ok(VerificationReport::agreement(
                ReportKind::Agreement,
                "covering-constant",
                params(&[("k", est.k as f64)]),
                est.value,
                prev,
                COVERING_STABILITY,
                n,
                format!("value {:.10}; {}", est.value, est.note),
            ))
        }),
    });
    items
}

fn sufficiency_items() -> Vec<SuiteItem> {
    [(0.3, true), (0.4, false)]
        .into_iter()
        .map(|(c, expect_pass)| {
            let id = format!("sufficiency[c={c},t=0]");
            SuiteItem {
                id: id.clone(),
                run: Box::new(move |_| {
                    let f = AnalyticSample::from_series(PowerSeries::from_real(&[0.0, 1.0, c]), 1.0)?;
                    let cert = certify_sufficient_condition(&f, 0.0, DEFAULT_CERTIFY_SAMPLES)?;
                    let mut rep = cert.report;
                    rep.id = id.clone();
                    rep.params.insert("c".into(), c);
                    rep.passed = cert.hypothesis_holds == expect_pass && (!expect_pass || cert.conclusion_holds);
                    rep.notes = format!(
                        "z + c z^2 expected to {} the inequality; {}",
                        if expect_pass { "satisfy" } else { "violate" },
                        rep.notes
                    );
                    Ok(rep)
                }),
            }
        })
        .collect()
}

/// Every check, in output order.
pub fn suite() -> Vec<SuiteItem> {
    let mut items: Vec<SuiteItem> = catalog_ids().into_iter().map(radius_item).collect();
    items.extend(g0_coefficient_items());
    items.extend(lemma_items());
    items.extend(disc_items());
    items.extend(growth_items());
    items.extend(sufficiency_items());
    items
}

/// Runs every check. A check that errors is reported as a failure carrying
/// the error text.
pub fn verify_all(radius_tolerance: f64) -> Vec<VerificationReport> {
    suite().iter().map(|item| run_item(item, radius_tolerance)).collect()
}

pub fn run_item(item: &SuiteItem, radius_tolerance: f64) -> VerificationReport {
    item.run(radius_tolerance).unwrap_or_else(|err| VerificationReport {
        schema: crate::report::SCHEMA_VERSION,
        id: item.id.clone(),
        kind: ReportKind::Agreement,
        params: BTreeMap::new(),
        closed_form: f64::NAN,
        oracle_value: f64::NAN,
        gap: f64::NAN,
        tolerance: radius_tolerance,
        samples: 0,
        passed: false,
        notes: format!("error: {err}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let items = suite();
        let mut ids: Vec<&str> = items.iter().map(|i| i.id.as_str()).collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn cheap_items_pass() {
        for item in suite().iter().filter(|i| i.id.starts_with("g0-") || i.id.starts_with("inscribed")) {
            let rep = item.run(1e-9).unwrap();
            assert!(rep.passed, "{rep:?}");
        }
    }
}
