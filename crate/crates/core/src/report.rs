use std::collections::BTreeMap;

use serde::Serialize;

/// Version of the JSON record layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportKind {
    /// Closed form against an independent oracle; `passed ⇔ gap ≤ tolerance`.
    Radius,
    /// Sampled image containment; `oracle_value` is the worst margin and
    /// `passed` means every sample was strictly inside.
    Containment,
    /// Differential-inequality certificate; `closed_form` is the bound,
    /// `oracle_value` the largest sampled left-hand side.
    Sufficiency,
    /// Two independent evaluations of the same quantity.
    Agreement,
}

/// One verification outcome. Serialized as a single JSON line by the CLI.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub id: String,
    pub kind: ReportKind,
    pub params: BTreeMap<String, f64>,
    pub closed_form: f64,
    pub oracle_value: f64,
    pub gap: f64,
    pub tolerance: f64,
    pub samples: usize,
    pub passed: bool,
    pub notes: String,
}

impl VerificationReport {
    /// Report for two evaluations that must agree within `tolerance`.
    pub fn agreement(
        kind: ReportKind,
        id: impl Into<String>,
        params: BTreeMap<String, f64>,
        closed_form: f64,
        oracle_value: f64,
        tolerance: f64,
        samples: usize,
        notes: impl Into<String>,
    ) -> Self {
        let gap = (closed_form - oracle_value).abs();
        Self {
            schema: SCHEMA_VERSION,
            id: id.into(),
            kind,
            params,
            closed_form,
            oracle_value,
            gap,
            tolerance,
            samples,
            passed: gap <= tolerance,
            notes: notes.into(),
        }
    }
}
