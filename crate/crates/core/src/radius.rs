//! Catalogue of sharp radius results.
//!
//! Every entry carries a closed-form value and a signed scalar condition
//! whose smallest root on the search interval is the radius. Conditions are
//! negative for radii that satisfy the inclusion and positive beyond it. They
//! are evaluated through routes that do not share code with the closed form:
//! circle extremization of the target map, disc aggregation, series or
//! quadrature evaluation of the extremal function.

use std::collections::BTreeMap;
use std::f64::consts::{E, PI, SQRT_2};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernel::{eval_lp, eval_p0, JanowskiParams, Target};
use crate::oracle::{
    bracket_root, extremize_on_circle, frak_f_disc, growth_bounds, illinois_root, inner_disc_radius, smallest_root,
    BracketSolverConfig, Functional,
};
use crate::region::{log_ratio, omega_margin};
use crate::report::{ReportKind, VerificationReport};
use crate::series::{extremal_g0, DEFAULT_DEGREE};

/// Default tolerance between closed form and oracle root.
pub const RADIUS_TOLERANCE: f64 = 1e-9;

/// Cells of the uniform sign-change scan preceding bisection.
pub const SCAN_CELLS: usize = 256;

/// Offset of the two-sided crossing probe.
pub const CROSSING_EPS: f64 = 1e-3;

/// `γ_0 = tanh²(π/(2√2))`, the zero of `LP` on `(0, 1)`.
pub fn gamma_zero() -> f64 {
    (PI / (2.0 * SQRT_2)).tanh().powi(2)
}

/// `tanh²(π√x/(2√2))`, the root of `|P_0(r)| = x`.
fn tanh_sq_radius(x: f64) -> f64 {
    (PI * x.sqrt() / (2.0 * SQRT_2)).tanh().powi(2)
}

/// `LP(r)` on `[0, 1)` through the real `artanh` form.
fn lp_real(r: f64) -> f64 {
    1.0 - 2.0 / (PI * PI) * log_ratio(r).powi(2)
}

/// `Φ(r, σ) = (1 − r²) LP(r) − r(1 + σ)`; `|f'| ≤ |g'|` holds at radius `r`
/// for the modulus `σ` of the majorizing factor iff `Φ(r, σ) ≥ 0`.
pub fn majorization_phi(r: f64, sigma: f64) -> f64 {
    (1.0 - r * r) * lp_real(r) - r * (1.0 + sigma)
}

/// `Ψ(r, σ) = σ + r(1 − σ²)/((1 − r²) LP(r))`, the factor bounding `|f'|/|g'|`.
pub fn majorization_psi(r: f64, sigma: f64) -> f64 {
    sigma + r * (1.0 - sigma * sigma) / ((1.0 - r * r) * lp_real(r))
}

/// `2π²r − (1 − r²)(π² − 2 log²((1+√r)/(1−√r)))`, which equals `−π² Φ(r, 1)`.
pub fn majorization_sigma_one_equation(r: f64) -> f64 {
    let l = ((1.0 + r.sqrt()) / (1.0 - r.sqrt())).ln();
    2.0 * PI * PI * r - (1.0 - r * r) * (PI * PI - 2.0 * l * l)
}

/// Identifies one radius result together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadiusId {
    /// Into `1 + P_{0,π}`.
    Sp,
    /// Into `1 + sin z`.
    Ss,
    /// Into `z + √(1+z²)`.
    Delta,
    CoshSqrt,
    Asinh,
    Cardioid,
    Booth { alpha: f64 },
    AlphaE { alpha: f64 },
    Janowski { a: f64, b: f64 },
    /// Carathéodory order `α` for `p ≺ LP`.
    CaratheodoryOrder { alpha: f64 },
    /// Inclusion in `|w − 1| < α`.
    StarlikeDisc { alpha: f64 },
    /// Disc-based radii `r_1 … r_9` into the target classes of
    /// [`COROLLARY_TARGETS`].
    Corollary(u8),
    SStarBeta { beta: f64 },
    FrakF { a: f64 },
    MBeta { beta: f64 },
    Majorization,
    Omega,
}

/// Keys accepted by [`RadiusId::parse`], in catalogue order.
pub const RADIUS_KEYS: [&str; 25] = [
    "sp",
    "ss",
    "delta",
    "cosh-sqrt",
    "asinh",
    "cardioid",
    "booth",
    "alpha-e",
    "janowski",
    "caratheodory",
    "starlike-disc",
    "r1",
    "r2",
    "r3",
    "r4",
    "r5",
    "r6",
    "r7",
    "r8",
    "r9",
    "s-star-beta",
    "frak-f",
    "m-beta",
    "majorization",
    "omega",
];

/// Target maps of `r_1 … r_9` with the exact inner-disc constants
/// `min_{|z|=1} |φ(z) − 1|` that their closed forms use.
pub const COROLLARY_TARGETS: [(Target, &str); 9] = [
    (Target::ExpAlpha { alpha: 0.0 }, "1 - 1/e"),
    (Target::Sine, "sin 1"),
    (Target::CoshSqrt, "1 - cos 1"),
    (Target::Cardioid, "1/e"),
    (Target::Asinh, "asinh 1"),
    (Target::Sigmoid, "(e-1)/(e+1)"),
    (Target::Nephroid, "2/3"),
    (Target::Lemniscate, "sqrt 2 - 1"),
    (Target::RightLemniscate, "sqrt(sqrt(2 eta)(1 - sqrt(2 eta))), eta = sqrt 2 - 1"),
];

fn corollary_alpha(k: u8) -> f64 {
    let eta = SQRT_2 - 1.0;
    let s = (2.0 * eta).sqrt();
    match k {
        1 => 1.0 - 1.0 / E,
        2 => 1f64.sin(),
        3 => 1.0 - 1f64.cos(),
        4 => 1.0 / E,
        5 => 1f64.asinh(),
        6 => (E - 1.0) / (E + 1.0),
        7 => 2.0 / 3.0,
        8 => eta,
        _ => (s * (1.0 - s)).sqrt(),
    }
}

/// The published closed forms of `r_1 … r_9`, each in its own algebraic
/// shape.
fn corollary_closed_form(k: u8) -> f64 {
    let eta = SQRT_2 - 1.0;
    let th2 = |x: f64| x.tanh().powi(2);
    match k {
        1 => th2(0.5 * ((E - 1.0) / (2.0 * E)).sqrt() * PI),
        2 => th2(PI / (2.0 * (2.0 / 1f64.sin()).sqrt())),
        3 => th2(PI * 0.5f64.sin() / 2.0),
        4 => th2(PI / (2.0 * (2.0 * E).sqrt())),
        5 => th2(PI * (0.5 * 1f64.asinh()).sqrt() / 2.0),
        6 => th2(((E - 1.0) / (E + 1.0)).sqrt() * PI / (2.0 * SQRT_2)),
        7 => th2(PI / (2.0 * 3f64.sqrt())),
        8 => th2(PI * eta.sqrt() / (2.0 * SQRT_2)),
        _ => {
            let s = (2.0 * eta).sqrt();
            th2(PI * (s * (1.0 - s)).powf(0.25) / (2.0 * SQRT_2))
        }
    }
}

fn param_err(name: &'static str, value: f64, range: &'static str) -> Error {
    Error::ParamRange { name, value, range }
}

impl RadiusId {
    /// Builds an id from a key of [`RADIUS_KEYS`] and named parameters
    /// (`alpha`, `beta`, `A`, `B`; matched case-insensitively for `alpha`
    /// and `beta`). Missing `alpha`/`beta`/`A` take the value of the first
    /// grid point of the default catalogue.
    pub fn parse(key: &str, params: &BTreeMap<String, f64>) -> Result<Self> {
        let get = |name: &str| -> Option<f64> {
            params
                .iter()
                .find(|(k, _)| k.as_str() == name || (name.len() > 1 && k.eq_ignore_ascii_case(name)))
                .map(|(_, v)| *v)
        };
        let need = |name: &str| -> Result<f64> {
            get(name).ok_or_else(|| Error::DomainError(format!("radius `{key}` needs parameter `{name}`")))
        };
        let id = match key {
            "sp" => RadiusId::Sp,
            "ss" => RadiusId::Ss,
            "delta" => RadiusId::Delta,
            "cosh-sqrt" => RadiusId::CoshSqrt,
            "asinh" => RadiusId::Asinh,
            "cardioid" => RadiusId::Cardioid,
            "booth" => RadiusId::Booth {
                alpha: get("alpha").unwrap_or(0.0),
            },
            "alpha-e" => RadiusId::AlphaE {
                alpha: get("alpha").unwrap_or(0.0),
            },
            "janowski" => RadiusId::Janowski {
                a: need("A")?,
                b: need("B")?,
            },
            "caratheodory" => RadiusId::CaratheodoryOrder {
                alpha: get("alpha").unwrap_or(0.0),
            },
            "starlike-disc" => RadiusId::StarlikeDisc {
                alpha: get("alpha").unwrap_or(1.0),
            },
            "s-star-beta" => RadiusId::SStarBeta { beta: need("beta")? },
            "frak-f" => RadiusId::FrakF { a: need("A")? },
            "m-beta" => RadiusId::MBeta { beta: need("beta")? },
            "majorization" => RadiusId::Majorization,
            "omega" => RadiusId::Omega,
            other => match other.strip_prefix('r').and_then(|k| k.parse::<u8>().ok()) {
                Some(k @ 1..=9) => RadiusId::Corollary(k),
                _ => return Err(Error::UnknownId(other.to_string())),
            },
        };
        id.validate()?;
        Ok(id)
    }

    fn validate(&self) -> Result<()> {
        match *self {
            RadiusId::Booth { alpha } | RadiusId::AlphaE { alpha } | RadiusId::CaratheodoryOrder { alpha } => {
                if !(0.0..1.0).contains(&alpha) {
                    return Err(param_err("alpha", alpha, "[0, 1)"));
                }
            }
            RadiusId::StarlikeDisc { alpha } => {
                if !(alpha > 0.0 && alpha <= 1.0) {
                    return Err(param_err("alpha", alpha, "(0, 1]"));
                }
            }
            RadiusId::Janowski { a, b } => {
                if !(-1.0 < b && b < a && a <= 1.0) {
                    return Err(param_err("B", b, "-1 < B < A <= 1"));
                }
            }
            RadiusId::SStarBeta { beta } => {
                if !(0.0..1.0).contains(&beta) {
                    return Err(param_err("beta", beta, "[0, 1)"));
                }
            }
            RadiusId::FrakF { a } => {
                if !(-1.0..=1.0).contains(&a) {
                    return Err(param_err("A", a, "[-1, 1]"));
                }
            }
            RadiusId::MBeta { beta } => {
                if !(beta > 1.0 && beta < 1.5) {
                    return Err(param_err("beta", beta, "(1, 3/2)"));
                }
            }
            RadiusId::Corollary(k) => {
                if !(1..=9).contains(&k) {
                    return Err(Error::UnknownId(format!("r{k}")));
                }
            }
            _ => {}
        }
        Ok(())
    }

    pub fn key(&self) -> String {
        match self {
            RadiusId::Sp => "sp".into(),
            RadiusId::Ss => "ss".into(),
            RadiusId::Delta => "delta".into(),
            RadiusId::CoshSqrt => "cosh-sqrt".into(),
            RadiusId::Asinh => "asinh".into(),
            RadiusId::Cardioid => "cardioid".into(),
            RadiusId::Booth { .. } => "booth".into(),
            RadiusId::AlphaE { .. } => "alpha-e".into(),
            RadiusId::Janowski { .. } => "janowski".into(),
            RadiusId::CaratheodoryOrder { .. } => "caratheodory".into(),
            RadiusId::StarlikeDisc { .. } => "starlike-disc".into(),
            RadiusId::Corollary(k) => format!("r{k}"),
            RadiusId::SStarBeta { .. } => "s-star-beta".into(),
            RadiusId::FrakF { .. } => "frak-f".into(),
            RadiusId::MBeta { .. } => "m-beta".into(),
            RadiusId::Majorization => "majorization".into(),
            RadiusId::Omega => "omega".into(),
        }
    }

    pub fn params(&self) -> BTreeMap<String, f64> {
        let pairs: Vec<(&str, f64)> = match *self {
            RadiusId::Booth { alpha }
            | RadiusId::AlphaE { alpha }
            | RadiusId::CaratheodoryOrder { alpha }
            | RadiusId::StarlikeDisc { alpha } => vec![("alpha", alpha)],
            RadiusId::Janowski { a, b } => vec![("A", a), ("B", b)],
            RadiusId::SStarBeta { beta } | RadiusId::MBeta { beta } => vec![("beta", beta)],
            RadiusId::FrakF { a } => vec![("A", a)],
            _ => vec![],
        };
        pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
    }
}

impl fmt::Display for RadiusId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self.params();
        if params.is_empty() {
            return f.write_str(&self.key());
        }
        let inner: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}[{}]", self.key(), inner.join(","))
    }
}

/// A decimal quoted to `digits` places, read as the exact value rounded or
/// truncated at that place.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PublishedDecimal {
    pub value: f64,
    pub digits: u32,
}

impl PublishedDecimal {
    /// Whether `x` truncated to `digits` places reproduces the quoted value.
    pub fn consistent_with(&self, x: f64) -> bool {
        let scale = 10f64.powi(self.digits as i32);
        let quoted = (self.value * scale).round();
        (x * scale).floor() == quoted || (x * scale).round() == quoted
    }
}

/// Value of an extremal construction at the point `z0 = radius`, with the
/// level it must reach there.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub label: String,
    pub z0: f64,
    pub value: Complex64,
    pub level: f64,
}

impl Witness {
    pub fn level_gap(&self) -> f64 {
        (self.value - self.level).norm()
    }

    /// `Ω_LP` margin of the witness value; zero when it lands on the
    /// boundary (level `3/2` on the real axis is the vertex).
    pub fn region_margin(&self) -> f64 {
        omega_margin(self.value)
    }
}

pub type Condition = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// One radius result.
#[derive(Clone)]
pub struct RadiusEntry {
    pub id: RadiusId,
    pub label: String,
    pub closed_form: f64,
    condition: Condition,
    /// Interval scanned for the smallest root.
    pub search: (f64, f64),
    /// The radius is `1` when the condition has no root on the interval.
    pub capped: bool,
    pub published: Option<PublishedDecimal>,
    pub witness: Option<Witness>,
}

impl fmt::Debug for RadiusEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RadiusEntry")
            .field("id", &self.id)
            .field("label", &self.label)
            .field("closed_form", &self.closed_form)
            .field("search", &self.search)
            .field("capped", &self.capped)
            .field("published", &self.published)
            .field("witness", &self.witness)
            .finish()
    }
}

impl RadiusEntry {
    pub fn condition(&self, r: f64) -> f64 {
        (self.condition)(r)
    }

    pub fn oracle_root(&self) -> Result<f64> {
        self.oracle_root_with_cells(SCAN_CELLS)
    }

    /// Scan with `cells` uniform cells, then bisect the first bracket.
    pub fn oracle_root_with_cells(&self, cells: usize) -> Result<f64> {
        let cfg = BracketSolverConfig::default();
        let (lo, hi) = self.search;
        match smallest_root(|r| self.condition(r), lo, hi, cells, &cfg) {
            Err(Error::NoSignChange { .. }) if self.capped => Ok(1.0),
            other => other,
        }
    }

    /// Condition values at `closed_form ∓ eps`; `None` when the probe would
    /// leave `[0, 1]`.
    pub fn crossing(&self, eps: f64) -> Option<(f64, f64)> {
        let (lo, hi) = (self.closed_form - eps, self.closed_form + eps);
        if lo < 0.0 || hi > self.search.1 {
            return None;
        }
        Some((self.condition(lo), self.condition(hi)))
    }

    pub fn verify(&self, tolerance: f64) -> Result<VerificationReport> {
        let root = self.oracle_root()?;
        let mut notes = Vec::new();
        match self.crossing(CROSSING_EPS) {
            Some((below, above)) => notes.push(format!(
                "numeric sharpness: condition {below:.3e} / {above:.3e} at radius -/+ {CROSSING_EPS}"
            )),
            None => notes.push("numeric sharpness probe skipped at the end of the range".to_string()),
        }
        if let Some(p) = self.published {
            notes.push(format!(
                "published {:.*}: gap {:.2e}",
                p.digits as usize,
                p.value,
                (self.closed_form - p.value).abs()
            ));
        }
        if let Some(w) = &self.witness {
            notes.push(format!("witness {}: level gap {:.2e}", w.label, w.level_gap()));
        }
        Ok(VerificationReport::agreement(
            ReportKind::Radius,
            self.id.to_string(),
            self.id.params(),
            self.closed_form,
            root,
            tolerance,
            SCAN_CELLS,
            notes.join("; "),
        ))
    }
}

/// `max_{|z|=r} Re φ(z) − 3/2`.
fn max_re_condition(target: Target) -> Condition {
    Arc::new(move |r: f64| match extremize_on_circle(|z| target.eval(z), r, Functional::Re) {
        Ok(e) => e.max - 1.5,
        Err(_) => f64::NAN,
    })
}

fn target_witness(target: Target, z0: f64, level: f64) -> Option<Witness> {
    let value = target.eval(Complex64::new(z0, 0.0)).ok()?;
    Some(Witness {
        label: target.to_string(),
        z0,
        value,
        level,
    })
}

fn p0_modulus(r: f64) -> f64 {
    eval_p0(Complex64::new(r, 0.0)).map(|w| w.norm()).unwrap_or(f64::NAN)
}

fn lp_at(x: f64) -> f64 {
    eval_lp(Complex64::new(x, 0.0)).map(|w| w.re).unwrap_or(f64::NAN)
}

fn memo(cell: &'static OnceLock<Result<f64>>, init: impl FnOnce() -> Result<f64>) -> Result<f64> {
    cell.get_or_init(init).clone()
}

/// Root of `r e^r = 1/2`, by the Illinois method.
fn cardioid_closed_form() -> Result<f64> {
    static CELL: OnceLock<Result<f64>> = OnceLock::new();
    memo(&CELL, || {
        illinois_root(|r: f64| r * r.exp() - 0.5, 0.0, 1.0, &BracketSolverConfig::default())
    })
}

/// Root of `Φ(r, 0)` on `[0, γ_0]`, by the Illinois method.
fn majorization_closed_form() -> Result<f64> {
    static CELL: OnceLock<Result<f64>> = OnceLock::new();
    memo(&CELL, || {
        illinois_root(|r| majorization_phi(r, 0.0), 0.0, gamma_zero(), &BracketSolverConfig::default())
    })
}

/// Root of `g_0(r)|P_0(r)| = 1/2` with `g_0` from the growth quadrature,
/// by the Illinois method.
fn omega_closed_form() -> Result<f64> {
    static CELL: OnceLock<Result<f64>> = OnceLock::new();
    memo(&CELL, || {
        let f = |r: f64| match growth_bounds(r) {
            Ok((_, g0)) => g0 * (2.0 / (PI * PI)) * log_ratio(r).powi(2) - 0.5,
            Err(_) => f64::NAN,
        };
        illinois_root(f, 0.0, 0.9, &BracketSolverConfig::default())
    })
}

fn entry(
    id: RadiusId,
    label: impl Into<String>,
    closed_form: f64,
    condition: Condition,
    search: (f64, f64),
) -> RadiusEntry {
    RadiusEntry {
        id,
        label: label.into(),
        closed_form,
        condition,
        search,
        capped: false,
        published: None,
        witness: None,
    }
}

fn published(value: f64, digits: u32) -> Option<PublishedDecimal> {
    Some(PublishedDecimal { value, digits })
}

/// Radii of inclusion in the classes `S*(φ)` of the target maps.
pub fn radius_into_flp(id: RadiusId) -> Result<RadiusEntry> {
    id.validate()?;
    let simple = |target: Target, label: &str, closed: f64| {
        let mut e = entry(id, label, closed, max_re_condition(target), (0.0, 0.999));
        e.witness = target_witness(target, closed, 1.5);
        e
    };
    Ok(match id {
        RadiusId::Sp => simple(Target::Parabolic, "S*_p", (PI / 4.0).tanh().powi(2)),
        RadiusId::Ss => simple(Target::Sine, "S*_s", PI / 6.0),
        RadiusId::Delta => simple(Target::Crescent, "Delta*", 5.0 / 12.0),
        RadiusId::CoshSqrt => simple(Target::CoshSqrt, "S*_cosh-sqrt", 1.5f64.acosh().powi(2)),
        RadiusId::Asinh => simple(Target::Asinh, "S*_asinh", 0.5f64.sinh()),
        RadiusId::Cardioid => {
            let mut e = simple(Target::Cardioid, "S*_cardioid", cardioid_closed_form()?);
            e.published = published(0.3517, 4);
            e
        }
        RadiusId::Booth { alpha } => {
            let closed = if alpha == 0.0 { 0.5 } else { ((1.0 + alpha).sqrt() - 1.0) / alpha };
            simple(Target::Booth { alpha }, "BS*(alpha)", closed)
        }
        RadiusId::AlphaE { alpha } => {
            let target = Target::ExpAlpha { alpha };
            let capped = alpha >= 1.0 - 1.0 / (2.0 * (E - 1.0));
            let closed = if capped { 1.0 } else { (1.0 - 1.0 / (2.0 * (alpha - 1.0))).ln() };
            let mut e = entry(id, "S*_alpha,e", closed, max_re_condition(target), (0.0, 1.0));
            e.capped = true;
            if !capped {
                e.witness = target_witness(target, closed, 1.5);
            }
            e
        }
        RadiusId::Janowski { a, b } => {
            let capped = !(b < (2.0 * a - 1.0) / 3.0);
            let closed = if capped { 1.0 } else { 1.0 / (2.0 * a - 3.0 * b) };
            let condition: Condition =
                Arc::new(move |r: f64| (a - b) * r + 1.0 - a * b * r * r - 1.5 * (1.0 - b * b * r * r));
            let mut e = entry(id, "S*(A,B)", closed, condition, (0.0, 1.0));
            e.capped = true;
            if !capped {
                e.witness = target_witness(Target::Janowski(JanowskiParams::new(a, b)?), closed, 1.5);
            }
            e
        }
        other => return Err(Error::UnknownId(other.key())),
    })
}

/// `γ_α`: radius where `p ≺ LP` becomes Carathéodory of order `α`.
pub fn caratheodory_order_radius(alpha: f64) -> Result<RadiusEntry> {
    let id = RadiusId::CaratheodoryOrder { alpha };
    id.validate()?;
    let closed = tanh_sq_radius(1.0 - alpha);
    let mut e = entry(
        id,
        "Caratheodory order alpha",
        closed,
        Arc::new(move |r| alpha - lp_at(r)),
        (0.0, 0.999),
    );
    e.witness = target_witness(Target::Lp, closed, alpha);
    if alpha == 0.0 {
        e.published = published(0.6469, 4);
    }
    Ok(e)
}

/// `r_α`: radius of inclusion in `S*(1 + αz)`.
pub fn starlike_disc_radius(alpha: f64) -> Result<RadiusEntry> {
    let id = RadiusId::StarlikeDisc { alpha };
    id.validate()?;
    let closed = tanh_sq_radius(alpha);
    let condition: Condition = Arc::new(move |r: f64| {
        let l = ((1.0 + r.sqrt()) / (1.0 - r.sqrt())).ln();
        2.0 * l * l - alpha * PI * PI
    });
    let mut e = entry(id, "S*(1+alpha z)", closed, condition, (0.0, 0.999));
    e.witness = Some(Witness {
        label: "|P0|".into(),
        z0: closed,
        value: Complex64::new(p0_modulus(closed), 0.0),
        level: alpha,
    });
    if alpha == 1.0 {
        e.published = published(0.6469, 4);
    }
    Ok(e)
}

/// `r_k`, `k = 1 … 9`: inclusion in the disc `|w − 1| < α_k` inscribed in
/// the target class, with `α_k` re-derived numerically from the map.
pub fn corollary_radii(k: u8) -> Result<RadiusEntry> {
    let id = RadiusId::Corollary(k);
    id.validate()?;
    let (target, _) = COROLLARY_TARGETS[(k - 1) as usize];
    let inner = inner_disc_radius(|z| target.eval(z))?;
    let closed = corollary_closed_form(k);
    let mut e = entry(
        id,
        format!("r{k} into {}", target.name()),
        closed,
        Arc::new(move |r| p0_modulus(r) - inner),
        (0.0, 0.999),
    );
    e.witness = Some(Witness {
        label: "|P0|".into(),
        z0: closed,
        value: Complex64::new(p0_modulus(closed), 0.0),
        level: inner,
    });
    e.published = match k {
        8 => published(0.376, 3),
        9 => published(0.283, 3),
        _ => None,
    };
    Ok(e)
}

/// Inner-disc constant `α_k` in closed form.
pub fn corollary_inner_constant(k: u8) -> Result<f64> {
    RadiusId::Corollary(k).validate()?;
    Ok(corollary_alpha(k))
}

/// `tanh²(π√β/(2√2))`, which coincides with `γ_{1−β}`.
pub fn s_star_beta_radius(beta: f64) -> Result<RadiusEntry> {
    let id = RadiusId::SStarBeta { beta };
    id.validate()?;
    let closed = tanh_sq_radius(beta);
    let order = 1.0 - beta;
    let mut e = entry(id, "S*(beta)", closed, Arc::new(move |r| order - lp_at(r)), (0.0, 0.999));
    e.witness = target_witness(Target::Lp, closed, order);
    Ok(e)
}

/// `R_𝔉 = (√(A² + 12A + 28) − (5 + A))/(2A + 3)`.
pub fn frak_f_radius(a: f64) -> Result<RadiusEntry> {
    let id = RadiusId::FrakF { a };
    id.validate()?;
    let closed = ((a * a + 12.0 * a + 28.0).sqrt() - (5.0 + a)) / (2.0 * a + 3.0);
    let condition: Condition = Arc::new(move |r| match frak_f_disc(a, r) {
        Ok((c, rad)) => c + rad - 1.5,
        Err(_) => f64::NAN,
    });
    let mut e = entry(id, "frak-F", closed, condition, (0.0, 0.999));
    // z f'/f of z(1+z)²/(1−z)^{3+A}
    let z = closed;
    e.witness = Some(Witness {
        label: "z(1+z)^2/(1-z)^(3+A)".into(),
        z0: z,
        value: Complex64::new(1.0 + 2.0 * z / (1.0 + z) + (3.0 + a) * z / (1.0 - z), 0.0),
        level: 1.5,
    });
    e.published = if a == -1.0 {
        published(0.123, 3)
    } else if a == 1.0 {
        published(0.080, 3)
    } else {
        None
    };
    Ok(e)
}

/// `r_β = 1 + 2cot²δ − 2|sec δ / tan²δ|`, `δ = π√(β−1)/√2`.
pub fn m_beta_radius(beta: f64) -> Result<RadiusEntry> {
    let id = RadiusId::MBeta { beta };
    id.validate()?;
    let d = PI * (beta - 1.0).sqrt() / SQRT_2;
    let closed = 1.0 + 2.0 / d.tan().powi(2) - 2.0 * (1.0 / d.cos() / d.tan().powi(2)).abs();
    let mut e = entry(id, "M(beta)", closed, Arc::new(move |r| lp_at(-r) - beta), (0.0, 0.999_999));
    e.witness = target_witness(Target::Lp, -closed, beta);
    Ok(e)
}

/// Radius of `|f'| ≤ |g'|` under majorization, the root of `Φ(r, 0)`.
pub fn majorization_radius() -> Result<RadiusEntry> {
    let closed = majorization_closed_form()?;
    // oracle route: complex-log LP
    let condition: Condition = Arc::new(|r: f64| r - (1.0 - r * r) * lp_at(r));
    let mut e = entry(RadiusId::Majorization, "majorization", closed, condition, (0.0, gamma_zero()));
    e.published = published(0.4220, 4);
    Ok(e)
}

/// Radius of `|z f' − f| < 1/2`, the root of `g_0(r)|P_0(r)| = 1/2`.
pub fn omega_radius() -> Result<RadiusEntry> {
    let closed = omega_closed_form()?;
    let g0 = Arc::new(extremal_g0(DEFAULT_DEGREE)?);
    let condition: Condition = Arc::new(move |r: f64| {
        let z = Complex64::new(r, 0.0);
        let (g, tail) = g0.eval_with_tail(z);
        if tail > 1e-13 {
            return f64::NAN;
        }
        g.re * p0_modulus(r) - 0.5
    });
    let mut e = entry(RadiusId::Omega, "Omega", closed, condition, (0.0, 0.7));
    e.published = published(0.522864, 6);
    Ok(e)
}

/// Entry for any id.
pub fn radius_entry(id: RadiusId) -> Result<RadiusEntry> {
    match id {
        RadiusId::CaratheodoryOrder { alpha } => caratheodory_order_radius(alpha),
        RadiusId::StarlikeDisc { alpha } => starlike_disc_radius(alpha),
        RadiusId::Corollary(k) => corollary_radii(k),
        RadiusId::SStarBeta { beta } => s_star_beta_radius(beta),
        RadiusId::FrakF { a } => frak_f_radius(a),
        RadiusId::MBeta { beta } => m_beta_radius(beta),
        RadiusId::Majorization => majorization_radius(),
        RadiusId::Omega => omega_radius(),
        other => radius_into_flp(other),
    }
}

/// `A` values of the Janowski grid; `B` runs over five interior points of
/// `(−1, A)`.
pub const JANOWSKI_A_GRID: [f64; 5] = [-0.5, 0.0, 0.25, 0.5, 1.0];

/// Every id of the default catalogue, in a fixed order.
pub fn catalog_ids() -> Vec<RadiusId> {
    let mut ids = vec![
        RadiusId::Sp,
        RadiusId::Ss,
        RadiusId::Delta,
        RadiusId::CoshSqrt,
        RadiusId::Asinh,
        RadiusId::Cardioid,
    ];
    ids.extend([0.0, 0.2, 0.5, 0.8].map(|alpha| RadiusId::Booth { alpha }));
    ids.extend([0.0, 0.3, 0.6, 0.8].map(|alpha| RadiusId::AlphaE { alpha }));
    for a in JANOWSKI_A_GRID {
        for j in 0..5 {
            let b = -1.0 + (a + 1.0) * (j as f64 + 0.5) / 5.0;
            ids.push(RadiusId::Janowski { a, b });
        }
    }
    ids.extend([0.0, 0.25, 0.5, 0.75].map(|alpha| RadiusId::CaratheodoryOrder { alpha }));
    ids.extend([0.25, 0.5, 0.75, 1.0].map(|alpha| RadiusId::StarlikeDisc { alpha }));
    ids.extend((1..=9).map(RadiusId::Corollary));
    ids.extend([0.25, 0.5, 0.75].map(|beta| RadiusId::SStarBeta { beta }));
    ids.extend([-1.0, 0.0, 1.0].map(|a| RadiusId::FrakF { a }));
    ids.extend([1.1, 1.25, 1.4].map(|beta| RadiusId::MBeta { beta }));
    ids.push(RadiusId::Majorization);
    ids.push(RadiusId::Omega);
    ids
}

pub fn catalog() -> Result<Vec<RadiusEntry>> {
    catalog_ids().into_iter().map(radius_entry).collect()
}

/// Bisection root of an entry's condition on an explicit bracket.
pub fn bisect_condition(entry: &RadiusEntry, lo: f64, hi: f64) -> Result<f64> {
    bracket_root(|r| entry.condition(r), lo, hi, &BracketSolverConfig::default())
}
