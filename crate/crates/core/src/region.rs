//! Geometry of the parabolic region `Ω_LP = {w : (Im w)² < 3 − 2 Re w}`.
//!
//! The region is open. Membership is decided through the signed margin
//! [`omega_margin`], positive inside, zero on the boundary parabola.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// `m(w) = 3 − 2 Re w − (Im w)²`.
pub fn omega_margin(w: Complex64) -> f64 {
    3.0 - 2.0 * w.re - w.im * w.im
}

pub fn in_omega_lp(w: Complex64) -> bool {
    omega_margin(w) > 0.0
}

/// The equivalent focus/directrix form `|1 − w| < 2 − Re w`.
pub fn in_omega_lp_support_form(w: Complex64) -> bool {
    (1.0 - w).norm() < 2.0 - w.re
}

fn check_unit_radius(r: f64) -> Result<()> {
    if (0.0..1.0).contains(&r) {
        Ok(())
    } else {
        Err(Error::DomainError(format!("radius r = {r} must lie in [0, 1)")))
    }
}

/// `log((1+√r)/(1−√r)) = 2 artanh √r`.
pub(crate) fn log_ratio(r: f64) -> f64 {
    2.0 * r.sqrt().atanh()
}

/// Extremes of `Re P_0` on `|z| = r`: `(P_0(r), P_0(−r))`.
pub fn re_p0_bounds(r: f64) -> Result<(f64, f64)> {
    check_unit_radius(r)?;
    let min = -(2.0 / (PI * PI)) * log_ratio(r).powi(2);
    let max = (2.0 / (PI * PI)) * (2.0 * r.sqrt() / (1.0 - r)).atan().powi(2);
    Ok((min, max))
}

/// `𝒢(r, c) = Re P_0(r e^{iα})` written in `c = cos(α/2) ∈ [−1, 1]`.
pub fn real_part_profile(r: f64, c: f64) -> Result<f64> {
    check_unit_radius(r)?;
    if !(-1.0..=1.0).contains(&c) {
        return Err(Error::DomainError(format!("c = {c} must lie in [-1, 1]")));
    }
    let sr = r.sqrt();
    let mu1 = 1.0 + r + 2.0 * c * sr;
    let mu2 = 1.0 + r - 2.0 * c * sr;
    let modulus = if r == 0.0 { 0.0 } else { 0.5 * (mu1 / mu2).ln() };
    let angle = (2.0 * (1.0 - c * c).sqrt() * sr / (1.0 - r)).atan();
    Ok((2.0 / (PI * PI)) * (angle * angle - modulus * modulus))
}

/// Largest disc centered at a real point `a < 3/2` contained in `Ω_LP`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InscribedDisc {
    pub center: f64,
    pub radius: f64,
    /// `ζ(η) = log(√η/√(1−η))`; zero in the linear case `a > 1/2`.
    pub zeta: f64,
    /// `η = e^{−π√(1−2a)}/(1 + e^{−π√(1−2a)})`; `1/2` in the linear case.
    pub eta: f64,
}

impl InscribedDisc {
    pub fn contains(&self, w: Complex64) -> bool {
        (w - self.center).norm() < self.radius
    }
}

fn zeta_eta(a: f64) -> (f64, f64) {
    let e = (-PI * (1.0 - 2.0 * a).sqrt()).exp();
    let eta = e / (1.0 + e);
    let zeta = (eta.sqrt() / (1.0 - eta).sqrt()).ln();
    (zeta, eta)
}

/// Radius from the `ζ` branch, valid for `a ≤ 1/2`.
pub fn inscribed_radius_zeta_branch(a: f64) -> f64 {
    let (zeta, _) = zeta_eta(a);
    let z2 = zeta * zeta / (PI * PI);
    ((a - 1.5 + 2.0 * z2).powi(2) + 4.0 * z2).sqrt()
}

/// Radius `3/2 − a` of the vertex branch, valid for `1/2 ≤ a < 3/2`.
pub fn inscribed_radius_vertex_branch(a: f64) -> f64 {
    1.5 - a
}

pub fn inscribed_disc(a: f64) -> Result<InscribedDisc> {
    if !(a < 1.5) {
        return Err(Error::CenterOutsideRange(a));
    }
    if a <= 0.5 {
        let (zeta, eta) = zeta_eta(a);
        Ok(InscribedDisc {
            center: a,
            radius: inscribed_radius_zeta_branch(a),
            zeta,
            eta,
        })
    } else {
        Ok(InscribedDisc {
            center: a,
            radius: inscribed_radius_vertex_branch(a),
            zeta: 0.0,
            eta: 0.5,
        })
    }
}

/// Squared distance `𝒟_a(X)` from `(a, 0)` to the boundary point of
/// `LP(∂𝔻)` parametrised by `X ∈ (0, 1)`.
pub fn boundary_distance_profile(a: f64, x: f64) -> Result<f64> {
    if !(a < 1.5) {
        return Err(Error::CenterOutsideRange(a));
    }
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::DomainError(format!("X = {x} must lie in (0, 1)")));
    }
    let l2 = (x / (1.0 - x * x).sqrt()).ln().powi(2);
    Ok((a + 2.0 / (PI * PI) * l2 - 1.5).powi(2) + 4.0 / (PI * PI) * l2)
}

/// Positive critical points of `𝒟_a` on `(0, 1)`. The profile is even in
/// `X`, so the negative ones are mirror images and are not listed.
pub fn distance_critical_points(a: f64) -> Result<Vec<f64>> {
    if !(a < 1.5) {
        return Err(Error::CenterOutsideRange(a));
    }
    if a < 0.5 {
        let k = PI * (1.0 - 2.0 * a).sqrt();
        Ok(vec![
            (0.5 * k).exp() / (1.0 + k.exp()).sqrt(),
            (-0.5 * k).exp() / (1.0 + (-k).exp()).sqrt(),
        ])
    } else {
        Ok(vec![1.0 / 2f64.sqrt()])
    }
}

/// Minimum of `𝒟_a` over the listed critical points.
pub fn min_distance_at_critical_points(a: f64) -> Result<f64> {
    distance_critical_points(a)?
        .into_iter()
        .map(|x| boundary_distance_profile(a, x))
        .try_fold(f64::INFINITY, |m, d| d.map(|d| m.min(d)))
}

/// Whether `|arg(w − 2)| > 3π/4`, decided without trigonometry:
/// for `u = w − 2` this is `Re u < 0` and `|Im u| < −Re u`.
pub fn argument_sector_check(w: Complex64) -> Result<bool> {
    let u = w - 2.0;
    if u.re == 0.0 && u.im == 0.0 {
        return Err(Error::ArgUndefined);
    }
    Ok(u.re < 0.0 && u.im.abs() < -u.re)
}

/// A planar region given by a signed margin, positive inside.
pub trait Region: Sync {
    fn margin(&self, w: Complex64) -> f64;

    fn contains(&self, w: Complex64) -> bool {
        self.margin(w) > 0.0
    }

    fn name(&self) -> String;

    /// An independent restatement of the membership test, when one exists.
    fn alternate_contains(&self, _w: Complex64) -> Option<bool> {
        None
    }
}

/// `Ω_LP` itself.
#[derive(Debug, Clone, Copy, Default)]
pub struct OmegaLp;

impl Region for OmegaLp {
    fn margin(&self, w: Complex64) -> f64 {
        omega_margin(w)
    }

    fn name(&self) -> String {
        "omega-lp".into()
    }

    fn alternate_contains(&self, w: Complex64) -> Option<bool> {
        Some(in_omega_lp_support_form(w))
    }
}

/// Open disc `|w − center| < radius`.
#[derive(Debug, Clone, Copy)]
pub struct Disc {
    pub center: Complex64,
    pub radius: f64,
}

impl Region for Disc {
    fn margin(&self, w: Complex64) -> f64 {
        self.radius - (w - self.center).norm()
    }

    fn name(&self) -> String {
        format!("disc[{},{}]", self.center, self.radius)
    }
}

/// Half-plane `Re w > threshold`.
#[derive(Debug, Clone, Copy)]
pub struct RightHalfPlane {
    pub threshold: f64,
}

impl Region for RightHalfPlane {
    fn margin(&self, w: Complex64) -> f64 {
        w.re - self.threshold
    }

    fn name(&self) -> String {
        format!("re>{}", self.threshold)
    }
}

/// Half-plane `Re w < threshold`.
#[derive(Debug, Clone, Copy)]
pub struct LeftHalfPlane {
    pub threshold: f64,
}

impl Region for LeftHalfPlane {
    fn margin(&self, w: Complex64) -> f64 {
        self.threshold - w.re
    }

    fn name(&self) -> String {
        format!("re<{}", self.threshold)
    }
}

/// Interior of a closed polyline, decided by winding number. The margin is
/// the distance to the boundary, signed by the winding test.
#[derive(Debug, Clone)]
pub struct PolygonRegion {
    vertices: Vec<Complex64>,
}

impl PolygonRegion {
    pub fn new(vertices: Vec<Complex64>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::DomainError("a polygon needs at least three vertices".into()));
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn winding_number(&self, w: Complex64) -> i32 {
        let n = self.vertices.len();
        let mut wn = 0;
        for i in 0..n {
            let a = self.vertices[i] - w;
            let b = self.vertices[(i + 1) % n] - w;
            let cross = a.re * b.im - a.im * b.re;
            if a.im <= 0.0 {
                if b.im > 0.0 && cross > 0.0 {
                    wn += 1;
                }
            } else if b.im <= 0.0 && cross < 0.0 {
                wn -= 1;
            }
        }
        wn
    }

    fn boundary_distance(&self, w: Complex64) -> f64 {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let a = self.vertices[i];
                let b = self.vertices[(i + 1) % n];
                let ab = b - a;
                let len2 = ab.norm_sqr();
                let t = if len2 == 0.0 {
                    0.0
                } else {
                    (((w - a) * ab.conj()).re / len2).clamp(0.0, 1.0)
                };
                (w - (a + ab * t)).norm()
            })
            .fold(f64::INFINITY, f64::min)
    }
}

impl Region for PolygonRegion {
    fn margin(&self, w: Complex64) -> f64 {
        let d = self.boundary_distance(w);
        if self.winding_number(w) != 0 {
            d
        } else {
            -d
        }
    }

    fn name(&self) -> String {
        format!("polygon[{}]", self.vertices.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn membership_examples() {
        assert!(in_omega_lp(c(1.0, 0.0)));
        assert!(!in_omega_lp(c(1.5, 0.0)));
        assert!(!in_omega_lp(c(1.0, 1.0)));
        assert_eq!(omega_margin(c(1.0, 1.0)), 0.0);
        assert!(in_omega_lp(c(-10.0, 4.0)));
        for w in [c(1.0, 0.0), c(1.4, 0.3), c(-3.0, 2.9), c(-3.0, 3.1), c(2.0, 0.0)] {
            assert_eq!(in_omega_lp(w), in_omega_lp_support_form(w), "{w}");
        }
    }

    #[test]
    fn real_part_bounds_examples() {
        assert_eq!(re_p0_bounds(0.0).unwrap(), (0.0, 0.0));
        let (min, _) = re_p0_bounds(0.25).unwrap();
        assert!((min + 2.0 / (PI * PI) * 3f64.ln().powi(2)).abs() < 1e-15);
        assert!(re_p0_bounds(1.0).is_err());
        assert!(re_p0_bounds(-0.1).is_err());
    }

    #[test]
    fn profile_endpoints_are_the_bounds() {
        for r in [0.05, 0.3, 0.7, 0.95] {
            let (min, max) = re_p0_bounds(r).unwrap();
            assert!((real_part_profile(r, 1.0).unwrap() - min).abs() < 1e-12);
            assert!((real_part_profile(r, -1.0).unwrap() - min).abs() < 1e-12);
            assert!((real_part_profile(r, 0.0).unwrap() - max).abs() < 1e-12);
        }
    }

    #[test]
    fn inscribed_disc_examples() {
        assert_eq!(inscribed_disc(1.0).unwrap().radius, 0.5);
        assert!((inscribed_disc(1.4).unwrap().radius - 0.1).abs() < 1e-15);
        assert!(matches!(inscribed_disc(1.5), Err(Error::CenterOutsideRange(_))));
        // both branches meet at a = 1/2
        assert!(
            (inscribed_radius_zeta_branch(0.5) - inscribed_radius_vertex_branch(0.5)).abs() < 1e-9
        );
        let d = inscribed_disc(0.0).unwrap();
        assert!(d.eta > 0.0 && d.eta < 1.0);
        assert!((d.radius * d.radius - min_distance_at_critical_points(0.0).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn distance_profile_examples() {
        let v = boundary_distance_profile(0.5, 1.0 / 2f64.sqrt()).unwrap();
        assert!((v - 1.0).abs() < 1e-15);
        assert!(boundary_distance_profile(0.0, 1.0).is_err());
        assert!(boundary_distance_profile(0.0, 0.0).is_err());
    }

    #[test]
    fn argument_sector_examples() {
        assert!(argument_sector_check(c(1.0, 0.0)).unwrap());
        assert!(!argument_sector_check(c(1.0, 1.0)).unwrap());
        assert!(!argument_sector_check(c(1.0, -1.0)).unwrap());
        assert!(matches!(argument_sector_check(c(2.0, 0.0)), Err(Error::ArgUndefined)));
    }

    #[test]
    fn polygon_winding() {
        let square = PolygonRegion::new(vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(0.0, 1.0)]).unwrap();
        assert!(square.contains(c(0.5, 0.5)));
        assert!(!square.contains(c(1.5, 0.5)));
        assert!((square.margin(c(0.5, 0.25)) - 0.25).abs() < 1e-15);
    }
}
