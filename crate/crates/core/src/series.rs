//! Truncated complex power series about the origin.
//!
//! Binary operations truncate to the degree of the shorter operand. Callers
//! that need `N` accurate coefficients request `N` up front; nothing here
//! silently extends a series.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernel::ParabolaParams;

/// Degree used when a series is only needed for evaluation at `|z| < 0.7`.
pub const DEFAULT_DEGREE: usize = 64;

/// `Σ_{n=0}^{N} a_n z^n` with `N = coeffs.len() - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    /// Panics if `coeffs` is empty.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs at least a constant term");
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(vec![Complex64::new(0.0, 0.0); degree + 1])
    }

    pub fn one(degree: usize) -> Self {
        let mut s = Self::zero(degree);
        s.coeffs[0] = Complex64::new(1.0, 0.0);
        s
    }

    /// The series `z`, padded to `degree` (which must be at least 1).
    pub fn identity(degree: usize) -> Self {
        let mut s = Self::zero(degree.max(1));
        s.coeffs[1] = Complex64::new(1.0, 0.0);
        s
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^n`, zero beyond the stored degree.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    pub fn truncate(&self, degree: usize) -> Self {
        let n = degree.min(self.degree());
        Self::new(self.coeffs[..=n].to_vec())
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    /// Value together with a ratio-test estimate of the neglected tail
    /// `Σ_{n>N} |a_n||z|^n`. The estimate is infinite when the trailing
    /// coefficients do not decay fast enough for `|z|`.
    pub fn eval_with_tail(&self, z: Complex64) -> (Complex64, f64) {
        let value = self.eval(z);
        let n = self.degree();
        if n < 4 {
            return (value, f64::INFINITY);
        }
        let rho = z.norm();
        let mut ratio: f64 = 0.0;
        for k in n - 3..n {
            let (a, b) = (self.coeffs[k].norm(), self.coeffs[k + 1].norm());
            if a > 0.0 {
                ratio = ratio.max(b / a);
            } else if b > 0.0 {
                ratio = f64::INFINITY;
            }
        }
        let q = ratio.max(1.0) * rho;
        let last = self.coeffs[n].norm() * rho.powi(n as i32);
        let tail = if q < 1.0 { last * q / (1.0 - q) } else { f64::INFINITY };
        (value, tail)
    }

    /// `f'`, one degree shorter (a constant stays a constant zero).
    pub fn derivative(&self) -> Self {
        if self.degree() == 0 {
            return Self::zero(0);
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c * n as f64)
                .collect(),
        )
    }

    /// `z f'(z)`, same degree.
    pub fn z_derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c * n as f64)
                .collect(),
        )
    }

    /// `z · f(z)`, one degree longer.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::new(0.0, 0.0));
        coeffs.extend_from_slice(&self.coeffs);
        Self::new(coeffs)
    }

    /// `f(-z)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { -c } else { *c })
                .collect(),
        )
    }

    /// `f / g`, requiring `g(0) ≠ 0`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let g0 = other.coeffs[0];
        if g0.norm() == 0.0 {
            return Err(Error::DomainError("division by a series with zero constant term".into()));
        }
        let n = self.degree().min(other.degree());
        let mut q = vec![Complex64::new(0.0, 0.0); n + 1];
        for k in 0..=n {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc -= other.coeffs[j] * q[k - j];
            }
            q[k] = acc / g0;
        }
        Ok(Self::new(q))
    }

    /// `log f` for `f(0) = 1`, as the antiderivative of `f'/f`.
    pub fn log(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if (c0 - 1.0).norm() > 0.0 {
            return Err(Error::DomainError(format!("log needs constant term 1, got {c0}")));
        }
        let zd = self.z_derivative().div(self)?;
        integrate_over_t(&zd)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.degree().min(rhs.degree());
        PowerSeries::new((0..=n).map(|k| self.coeffs[k] + rhs.coeffs[k]).collect())
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.degree().min(rhs.degree());
        PowerSeries::new((0..=n).map(|k| self.coeffs[k] - rhs.coeffs[k]).collect())
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.degree().min(rhs.degree());
        let mut out = vec![Complex64::new(0.0, 0.0); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        PowerSeries::new(out)
    }
}

/// Series of `P_{τ,θ}` to degree `n_max`:
/// `a_n = (8e^{i(θ+π)}/π²)(e^{2iτn}/n) Σ_{k<n} 1/(2k+1)`.
pub fn parabola_coefficients(params: ParabolaParams, n_max: usize) -> Result<PowerSeries> {
    if n_max < 1 {
        return Err(Error::DomainError("series degree must be at least 1".into()));
    }
    let lead = -Complex64::from_polar(8.0 / (PI * PI), params.theta());
    let lead = if params.theta() == 0.0 {
        Complex64::new(-8.0 / (PI * PI), 0.0)
    } else {
        lead
    };
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n_max + 1];
    let mut odd_harmonic = 0.0;
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        odd_harmonic += 1.0 / (2 * n - 1) as f64;
        let rot = if params.tau() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::from_polar(1.0, 2.0 * params.tau() * n as f64)
        };
        *c = lead * rot * (odd_harmonic / n as f64);
    }
    Ok(PowerSeries::new(coeffs))
}

/// Series of `P_0` to degree `n_max`; every coefficient is real and negative.
pub fn p0_coefficients(n_max: usize) -> Result<PowerSeries> {
    parabola_coefficients(ParabolaParams::HORIZONTAL, n_max)
}

/// Series of `LP = 1 + P_0`.
pub fn lp_coefficients(n_max: usize) -> Result<PowerSeries> {
    let mut s = p0_coefficients(n_max)?;
    s.coeffs[0] = Complex64::new(1.0, 0.0);
    Ok(s)
}

/// `exp(s)` for `s(0) = 0` via `n e_n = Σ_{k=1}^{n} k s_k e_{n-k}`.
pub fn series_exp(s: &PowerSeries) -> Result<PowerSeries> {
    if s.coeffs[0].norm() != 0.0 {
        return Err(Error::NonzeroConstantTerm(s.coeffs[0]));
    }
    let n = s.degree();
    let mut e = vec![Complex64::new(0.0, 0.0); n + 1];
    e[0] = Complex64::new(1.0, 0.0);
    for m in 1..=n {
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 1..=m {
            acc += s.coeffs[k] * (k as f64) * e[m - k];
        }
        e[m] = acc / m as f64;
    }
    Ok(PowerSeries::new(e))
}

/// `∫_0^z s(t)/t dt` termwise, for `s(0) = 0`.
pub fn integrate_over_t(s: &PowerSeries) -> Result<PowerSeries> {
    if s.coeffs[0].norm() != 0.0 {
        return Err(Error::NonzeroConstantTerm(s.coeffs[0]));
    }
    Ok(PowerSeries::new(
        s.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| if n == 0 { *c } else { c / n as f64 })
            .collect(),
    ))
}

/// `z · exp ∫_0^z q(t)/t dt` to degree `n_max`.
fn exp_integral_times_z(q: &PowerSeries, n_max: usize) -> Result<PowerSeries> {
    let e = series_exp(&integrate_over_t(q)?)?;
    Ok(e.shift_up().truncate(n_max))
}

/// `f_0(z) = z exp ∫_0^z P_0(t)/t dt`, the function with `z f_0'/f_0 = LP`.
pub fn extremal_f0(n_max: usize) -> Result<PowerSeries> {
    let p0 = p0_coefficients(n_max.max(2) - 1)?;
    exp_integral_times_z(&p0, n_max)
}

/// `g_0(z) = z exp ∫_0^z P_0(−t)/t dt = −f_0(−z)`.
pub fn extremal_g0(n_max: usize) -> Result<PowerSeries> {
    let p0 = p0_coefficients(n_max.max(2) - 1)?.reflect();
    exp_integral_times_z(&p0, n_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::eval_p;

    const PI2: f64 = PI * PI;

    #[test]
    fn p0_first_coefficients() {
        let s = p0_coefficients(2).unwrap();
        assert_eq!(s.coeff(0), Complex64::new(0.0, 0.0));
        assert!((s.coeff(1).re + 8.0 / PI2).abs() < 1e-15);
        assert!((s.coeff(2).re + 16.0 / (3.0 * PI2)).abs() < 1e-15);
        assert!(p0_coefficients(0).is_err());
        let long = p0_coefficients(50).unwrap();
        for c in &long.coeffs()[1..] {
            assert!(c.re < 0.0 && c.im == 0.0);
        }
    }

    #[test]
    fn p0_matches_squared_artanh_series() {
        // log((1+w)/(1-w)) = 2 Σ w^{2k+1}/(2k+1); square it in w and read off w^{2n}
        let n = 20;
        let m = 2 * n + 1;
        let mut art = vec![0.0; m + 1];
        for k in 0..=n {
            if 2 * k + 1 <= m {
                art[2 * k + 1] = 2.0 / (2 * k + 1) as f64;
            }
        }
        let mut sq = vec![0.0; m + 1];
        for i in 0..=m {
            for j in 0..=m - i {
                sq[i + j] += art[i] * art[j];
            }
        }
        let s = p0_coefficients(n).unwrap();
        for k in 1..=n {
            let expected = -2.0 / PI2 * sq[2 * k];
            assert!((s.coeff(k).re - expected).abs() < 1e-14, "k={k}");
        }
    }

    #[test]
    fn exp_of_simple_series() {
        let e = series_exp(&PowerSeries::zero(4)).unwrap();
        assert_eq!(e, PowerSeries::one(4));
        let e = series_exp(&PowerSeries::identity(3)).unwrap();
        let expected = [1.0, 1.0, 0.5, 1.0 / 6.0];
        for (k, x) in expected.iter().enumerate() {
            assert!((e.coeff(k).re - x).abs() < 1e-15);
        }
        assert!(matches!(
            series_exp(&PowerSeries::one(3)),
            Err(Error::NonzeroConstantTerm(_))
        ));
    }

    #[test]
    fn integrate_over_t_examples() {
        let s = integrate_over_t(&PowerSeries::identity(3)).unwrap();
        assert_eq!(s, PowerSeries::identity(3));
        let z2 = PowerSeries::from_real(&[0.0, 0.0, 1.0]);
        assert_eq!(integrate_over_t(&z2).unwrap(), PowerSeries::from_real(&[0.0, 0.0, 0.5]));
        let p = integrate_over_t(&p0_coefficients(3).unwrap()).unwrap();
        assert!((p.coeff(1).re + 8.0 / PI2).abs() < 1e-15);
        assert!(integrate_over_t(&PowerSeries::one(2)).is_err());
    }

    #[test]
    fn extremal_coefficients() {
        let f0 = extremal_f0(6).unwrap();
        let g0 = extremal_g0(6).unwrap();
        assert_eq!(f0.coeff(0).norm(), 0.0);
        assert!((f0.coeff(1).re - 1.0).abs() < 1e-15);
        assert!((f0.coeff(2).re + 8.0 / PI2).abs() < 1e-15);
        assert!((g0.coeff(2).re - 8.0 / PI2).abs() < 1e-15);
        // g0(z) = -f0(-z)
        for k in 0..=6 {
            let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
            assert!((g0.coeff(k) - sign * f0.coeff(k)).norm() < 1e-15);
        }
    }

    #[test]
    fn f0_solves_its_defining_equation() {
        let n = 40;
        let f0 = extremal_f0(n).unwrap();
        let lhs = f0.z_derivative();
        let rhs = &f0 * &lp_coefficients(n).unwrap();
        for k in 0..n {
            assert!((lhs.coeff(k) - rhs.coeff(k)).norm() < 1e-12, "k={k}");
        }
        for c in f0.coeffs() {
            assert!(c.im.abs() < 1e-14);
        }
    }

    #[test]
    fn series_agrees_with_closed_form_p() {
        let params = [
            ParabolaParams::HORIZONTAL,
            ParabolaParams::RONNING,
            ParabolaParams::new(0.7, -1.2).unwrap(),
        ];
        let s_deg = 60;
        for p in params {
            let s = parabola_coefficients(p, s_deg).unwrap();
            for k in 0..24 {
                let z = Complex64::from_polar(0.5, -PI + (k as f64 + 0.5) * PI / 12.0);
                let (v, tail) = s.eval_with_tail(z);
                let exact = eval_p(p, z).unwrap();
                assert!(tail < 1e-14, "tail {tail}");
                assert!((v - exact).norm() < 1e-13 + tail, "{z}: {v} vs {exact}");
            }
        }
    }

    #[test]
    fn division_and_log_invert_exp() {
        let p = PowerSeries::new(vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(0.3, -0.2),
            Complex64::new(-0.1, 0.05),
            Complex64::new(0.02, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
        ]);
        let back = series_exp(&p.log().unwrap()).unwrap();
        for k in 0..=5 {
            assert!((back.coeff(k) - p.coeff(k)).norm() < 1e-12);
        }
        let q = p.div(&p).unwrap();
        assert_eq!(q.truncate(5), PowerSeries::one(5));
    }
}
