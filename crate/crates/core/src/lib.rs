//! Numerics for the parabolic starlike class: the map `LP(z)`, its region
//! `Ω_LP`, extremal functions, a catalogue of sharp radii and the
//! independent oracles that re-derive each of them.

pub mod error;
pub mod kernel;
pub mod oracle;
pub mod radius;
pub mod region;
pub mod report;
pub mod series;
pub mod suite;

pub use error::{Error, Result};
pub use kernel::{eval_lp, eval_p, eval_p0, eval_target, sqrt_upper, ComplexPoint, JanowskiParams, ParabolaParams, Target};
pub use radius::{radius_entry, RadiusEntry, RadiusId};
pub use region::{in_omega_lp, inscribed_disc, omega_margin, InscribedDisc, Region};
pub use report::{ReportKind, VerificationReport, SCHEMA_VERSION};
pub use series::PowerSeries;
