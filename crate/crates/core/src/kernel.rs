//! Branch-correct evaluation of the parabolic maps `P_{τ,θ}`, `LP` and the
//! catalogue of Ma-Minda target functions.
//!
//! Square roots use the upper-half-plane branch ([`sqrt_upper`]); logarithms
//! are principal. For `|z| < 1` the argument `(1+w)/(1-w)` with `|w| < 1`
//! stays in the right half-plane, so the principal log never meets its cut.

use std::collections::BTreeMap;
use std::f64::consts::{PI, SQRT_2};
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex point in the plane. Operations never return NaN or infinite
/// components; singular inputs are reported as errors instead.
pub type ComplexPoint = Complex64;

/// Distance below which `e^{iτ}√z` is treated as hitting the log singularity.
pub const SINGULAR_TOL: f64 = 1e-12;

/// Slack allowed on `|z| ≤ 1` before a point is rejected as outside the disc.
pub const DISC_SLACK: f64 = 1e-12;

/// Square root with `Im ≥ 0`. On the non-negative real axis this is the
/// ordinary positive root.
pub fn sqrt_upper(z: Complex64) -> Complex64 {
    let s = z.sqrt();
    let s = if s.im < 0.0 { -s } else { s };
    // normalise signed zeros so that e.g. sqrt_upper(0.25) is exactly (0.5, +0)
    Complex64::new(s.re + 0.0, s.im + 0.0)
}

/// `e^{iθ}` with exact values on the coordinate axes.
fn unit(theta: f64) -> Complex64 {
    if theta == 0.0 {
        Complex64::new(1.0, 0.0)
    } else if theta == PI || theta == -PI {
        Complex64::new(-1.0, 0.0)
    } else if theta == PI / 2.0 {
        Complex64::new(0.0, 1.0)
    } else if theta == -PI / 2.0 {
        Complex64::new(0.0, -1.0)
    } else {
        Complex64::from_polar(1.0, theta)
    }
}

fn check_disc(z: Complex64) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) || z.norm() > 1.0 + DISC_SLACK {
        return Err(Error::OutsideDisc { z });
    }
    Ok(())
}

fn finite(z: Complex64, w: Complex64) -> Result<Complex64> {
    if w.re.is_finite() && w.im.is_finite() {
        Ok(w)
    } else {
        Err(Error::SingularPoint { z })
    }
}

/// Rotation and tilt of the parabola `P_{τ,θ}`; both angles in `(−π, π]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParabolaParams {
    tau: f64,
    theta: f64,
}

impl ParabolaParams {
    /// The horizontal parabola opening to the left, `P_0 = P_{0,0}`.
    pub const HORIZONTAL: ParabolaParams = ParabolaParams { tau: 0.0, theta: 0.0 };
    /// `P_{0,π}`, the parabola of parabolic starlikeness.
    pub const RONNING: ParabolaParams = ParabolaParams { tau: 0.0, theta: PI };

    pub fn new(tau: f64, theta: f64) -> Result<Self> {
        for (name, v) in [("tau", tau), ("theta", theta)] {
            if !(v > -PI && v <= PI) {
                return Err(Error::ParamRange {
                    name,
                    value: v,
                    range: "(-pi, pi]",
                });
            }
        }
        Ok(Self { tau, theta })
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// `P_{τ,θ}(z) = (2e^{i(θ+π)}/π²) · log²((1 + e^{iτ}√z)/(1 − e^{iτ}√z))`.
pub fn eval_p(params: ParabolaParams, z: Complex64) -> Result<Complex64> {
    check_disc(z)?;
    let w = unit(params.tau) * sqrt_upper(z);
    let one = Complex64::new(1.0, 0.0);
    if (w - one).norm() < SINGULAR_TOL || (w + one).norm() < SINGULAR_TOL {
        return Err(Error::SingularPoint { z });
    }
    let l = ((one + w) / (one - w)).ln();
    let factor = -unit(params.theta) * (2.0 / (PI * PI));
    finite(z, factor * l * l)
}

/// `P_0 = P_{0,0}`.
pub fn eval_p0(z: Complex64) -> Result<Complex64> {
    eval_p(ParabolaParams::HORIZONTAL, z)
}

/// `LP(z) = 1 + P_0(z) = 1 − (2/π²) log²((1+√z)/(1−√z))`.
pub fn eval_lp(z: Complex64) -> Result<Complex64> {
    Ok(1.0 + eval_p0(z)?)
}

/// Janowski pair with `−1 ≤ B < A ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JanowskiParams {
    a: f64,
    b: f64,
}

impl JanowskiParams {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(-1.0..=1.0).contains(&a) || !a.is_finite() {
            return Err(Error::ParamRange {
                name: "A",
                value: a,
                range: "[-1, 1]",
            });
        }
        if !(b >= -1.0 && b < a) {
            return Err(Error::ParamRange {
                name: "B",
                value: b,
                range: "[-1, A)",
            });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }
}

/// The closed catalogue of target maps `φ` with `φ(0) = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Target {
    /// `α + (1−α)e^z`
    ExpAlpha { alpha: f64 },
    /// `α + (1−α)√(1+z)`
    LemniscateAlpha { alpha: f64 },
    /// `1 + z e^z`
    Cardioid,
    /// `2/(1 + e^{−z})`
    Sigmoid,
    /// `1 + sin z`
    Sine,
    /// `1 + sinh⁻¹ z`
    Asinh,
    /// `cosh √z`
    CoshSqrt,
    /// `z + √(1+z²)`
    Crescent,
    /// `√(1+z)`
    Lemniscate,
    /// `(1 + Az)/(1 + Bz)`
    Janowski(JanowskiParams),
    /// `1 + z − z³/3`
    Nephroid,
    /// `1 + P_{0,π}(z)`
    Parabolic,
    /// `√2 − (√2−1)√((1−z)/(1 + 2(√2−1)z))`
    RightLemniscate,
    /// `1 + z/(1 − αz²)`
    Booth { alpha: f64 },
    /// `LP(z)`
    Lp,
}

fn alpha_in_unit(alpha: f64) -> Result<f64> {
    if (0.0..1.0).contains(&alpha) {
        Ok(alpha)
    } else {
        Err(Error::ParamRange {
            name: "alpha",
            value: alpha,
            range: "[0, 1)",
        })
    }
}

impl Target {
    /// Every name accepted by [`Target::from_name`].
    pub const NAMES: [&'static str; 15] = [
        "exp-alpha",
        "lemniscate-alpha",
        "cardioid",
        "sigmoid",
        "sine",
        "asinh",
        "cosh-sqrt",
        "crescent",
        "lemniscate",
        "janowski",
        "nephroid",
        "parabolic",
        "right-lemniscate",
        "booth",
        "lp",
    ];

    /// Builds a target from its name and named parameters (`alpha`, `A`, `B`).
    pub fn from_name(name: &str, params: &BTreeMap<String, f64>) -> Result<Self> {
        let get = |key: &str, default: Option<f64>| -> Result<f64> {
            params
                .iter()
                .find(|(k, _)| k.eq_ignore_ascii_case(key))
                .map(|(_, v)| *v)
                .or(default)
                .ok_or_else(|| Error::DomainError(format!("target `{name}` needs parameter `{key}`")))
        };
        Ok(match name {
            "exp-alpha" | "exp" => Target::ExpAlpha {
                alpha: alpha_in_unit(get("alpha", Some(0.0))?)?,
            },
            "lemniscate-alpha" => Target::LemniscateAlpha {
                alpha: alpha_in_unit(get("alpha", Some(0.0))?)?,
            },
            "cardioid" => Target::Cardioid,
            "sigmoid" => Target::Sigmoid,
            "sine" => Target::Sine,
            "asinh" => Target::Asinh,
            "cosh-sqrt" => Target::CoshSqrt,
            "crescent" => Target::Crescent,
            "lemniscate" => Target::Lemniscate,
            "janowski" => Target::Janowski(JanowskiParams::new(get("A", None)?, get("B", None)?)?),
            "nephroid" => Target::Nephroid,
            "parabolic" => Target::Parabolic,
            "right-lemniscate" => Target::RightLemniscate,
            "booth" => Target::Booth {
                alpha: alpha_in_unit(get("alpha", Some(0.0))?)?,
            },
            "lp" => Target::Lp,
            other => return Err(Error::UnknownTarget(other.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Target::ExpAlpha { .. } => "exp-alpha",
            Target::LemniscateAlpha { .. } => "lemniscate-alpha",
            Target::Cardioid => "cardioid",
            Target::Sigmoid => "sigmoid",
            Target::Sine => "sine",
            Target::Asinh => "asinh",
            Target::CoshSqrt => "cosh-sqrt",
            Target::Crescent => "crescent",
            Target::Lemniscate => "lemniscate",
            Target::Janowski(_) => "janowski",
            Target::Nephroid => "nephroid",
            Target::Parabolic => "parabolic",
            Target::RightLemniscate => "right-lemniscate",
            Target::Booth { .. } => "booth",
            Target::Lp => "lp",
        }
    }

    /// Evaluates `φ(z)` on the closed unit disc.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        check_disc(z)?;
        let one = Complex64::new(1.0, 0.0);
        let w = match *self {
            Target::ExpAlpha { alpha } => alpha + (1.0 - alpha) * z.exp(),
            Target::LemniscateAlpha { alpha } => alpha + (1.0 - alpha) * (one + z).sqrt(),
            Target::Cardioid => one + z * z.exp(),
            Target::Sigmoid => 2.0 / (one + (-z).exp()),
            Target::Sine => one + z.sin(),
            Target::Asinh => one + z.asinh(),
            Target::CoshSqrt => sqrt_upper(z).cosh(),
            Target::Crescent => z + (one + z * z).sqrt(),
            Target::Lemniscate => (one + z).sqrt(),
            Target::Janowski(p) => {
                let den = one + p.b * z;
                if den.norm() < SINGULAR_TOL {
                    return Err(Error::SingularPoint { z });
                }
                (one + p.a * z) / den
            }
            Target::Nephroid => one + z - z * z * z / 3.0,
            Target::Parabolic => one + eval_p(ParabolaParams::RONNING, z)?,
            Target::RightLemniscate => {
                let c = SQRT_2 - 1.0;
                SQRT_2 - c * ((one - z) / (one + 2.0 * c * z)).sqrt()
            }
            Target::Booth { alpha } => {
                let den = one - alpha * z * z;
                if den.norm() < SINGULAR_TOL {
                    return Err(Error::SingularPoint { z });
                }
                one + z / den
            }
            Target::Lp => eval_lp(z)?,
        };
        finite(z, w)
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::ExpAlpha { alpha } | Target::LemniscateAlpha { alpha } | Target::Booth { alpha } => {
                write!(f, "{}[alpha={alpha}]", self.name())
            }
            Target::Janowski(p) => write!(f, "janowski[A={},B={}]", p.a, p.b),
            _ => f.write_str(self.name()),
        }
    }
}

/// Convenience wrapper for [`Target::eval`].
pub fn eval_target(target: &Target, z: Complex64) -> Result<Complex64> {
    target.eval(z)
}
