use std::f64::consts::PI;

use num_complex::Complex64;

use super::Parallelism;
use crate::error::{Error, Result};

/// Scalar functional extremized over a circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Functional {
    Re,
    Abs,
    /// `|arg(w − 2)|`, the quantity bounded by the sector estimate.
    ArgShifted,
}

impl Functional {
    fn apply(&self, w: Complex64) -> f64 {
        match self {
            Functional::Re => w.re,
            Functional::Abs => w.norm(),
            Functional::ArgShifted => (w - 2.0).arg().abs(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleConfig {
    pub grid: usize,
    pub angle_tol: f64,
    pub parallelism: Parallelism,
}

impl Default for CircleConfig {
    fn default() -> Self {
        Self {
            grid: 4096,
            angle_tol: 1e-10,
            parallelism: Parallelism::Serial,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleExtrema {
    pub min: f64,
    pub max: f64,
    pub argmin: f64,
    pub argmax: f64,
    pub samples: usize,
}

/// `n` angles uniformly spaced in `(−π, π]`, the last one equal to `π` and
/// (for even `n`) one of them exactly `0`.
pub fn circle_angles(n: usize) -> Vec<f64> {
    let h = 2.0 * PI / n as f64;
    (0..n).map(|k| -PI + h * (k + 1) as f64).collect()
}

fn wrap_angle(t: f64) -> f64 {
    let mut t = t;
    while t <= -PI {
        t += 2.0 * PI;
    }
    while t > PI {
        t -= 2.0 * PI;
    }
    t
}

/// Improvements smaller than this are rounding noise and do not move the
/// grid extremum.
fn noise(v: f64) -> f64 {
    4.0 * f64::EPSILON * v.abs().max(f64::MIN_POSITIVE)
}

/// Golden-section minimization of `g` on `[a, b]`.
fn golden_min<G: Fn(f64) -> Result<f64>>(g: &G, mut a: f64, mut b: f64, tol: f64) -> Result<(f64, f64)> {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut gc = g(c)?;
    let mut gd = g(d)?;
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        if gc < gd {
            b = d;
            d = c;
            gd = gc;
            c = b - inv_phi * (b - a);
            gc = g(c)?;
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + inv_phi * (b - a);
            gd = g(d)?;
        }
    }
    Ok(if gc < gd { (c, gc) } else { (d, gd) })
}

/// Extremes of `functional(map(r e^{iθ}))` over `θ ∈ (−π, π]` with the
/// default grid of 4096 angles and golden-section refinement to `1e−10`.
pub fn extremize_on_circle<F>(map: F, r: f64, functional: Functional) -> Result<CircleExtrema>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync,
{
    extremize_on_circle_with(map, r, functional, &CircleConfig::default())
}

/// As [`extremize_on_circle`] with an explicit grid. `r = 1` is accepted for
/// maps that extend continuously to the boundary.
pub fn extremize_on_circle_with<F>(map: F, r: f64, functional: Functional, cfg: &CircleConfig) -> Result<CircleExtrema>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync,
{
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::DomainError(format!("circle radius r = {r} must lie in [0, 1]")));
    }
    let grid = cfg.grid.max(8);
    let angles = circle_angles(grid);
    let eval = |theta: f64| -> Result<f64> {
        let w = map(Complex64::from_polar(r, theta)).map_err(|_| Error::SingularOnCircle { r, angle: theta })?;
        let v = functional.apply(w);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::SingularOnCircle { r, angle: theta })
        }
    };
    let values = cfg.parallelism.map(grid, |k| eval(angles[k]));
    let values: Vec<f64> = values.into_iter().collect::<Result<_>>()?;

    let (mut imin, mut imax) = (0, 0);
    for (k, v) in values.iter().enumerate() {
        if *v < values[imin] {
            imin = k;
        }
        if *v > values[imax] {
            imax = k;
        }
    }
    let h = 2.0 * PI / grid as f64;
    let (mut min, mut argmin) = (values[imin], angles[imin]);
    let (t, v) = golden_min(&eval, angles[imin] - h, angles[imin] + h, cfg.angle_tol)?;
    if v < min - noise(min) {
        min = v;
        argmin = wrap_angle(t);
    }
    let (mut max, mut argmax) = (values[imax], angles[imax]);
    let neg = |theta: f64| eval(theta).map(|v| -v);
    let (t, v) = golden_min(&neg, angles[imax] - h, angles[imax] + h, cfg.angle_tol)?;
    if -v > max + noise(max) {
        max = -v;
        argmax = wrap_angle(t);
    }
    Ok(CircleExtrema {
        min,
        max,
        argmin,
        argmax,
        samples: grid,
    })
}
