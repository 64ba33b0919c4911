use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::series::{integrate_over_t, p0_coefficients, series_exp, PowerSeries};

/// Largest modulus of a Blaschke zero drawn by [`random_schwarz`].
pub const MAX_ZERO_MODULUS: f64 = 0.8;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `w(z) = e^{iφ} z ∏ (z − a)/(1 − ā z)` with every `|a| < 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchwarzFunction {
    rotation: f64,
    zeros: Vec<Complex64>,
}

impl SchwarzFunction {
    pub fn new(rotation: f64, zeros: Vec<Complex64>) -> Result<Self> {
        if let Some(a) = zeros.iter().find(|a| !(a.norm() < 1.0)) {
            return Err(Error::DomainError(format!("Blaschke zero {a} must lie in the open unit disc")));
        }
        Ok(Self { rotation, zeros })
    }

    pub fn rotation(&self) -> f64 {
        self.rotation
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.zeros
            .iter()
            .fold(Complex64::from_polar(1.0, self.rotation) * z, |acc, a| acc * (z - a) / (1.0 - a.conj() * z))
    }

    /// Taylor series to degree `n`. A factor `(z − a)/(1 − ā z)` expands as
    /// `−a + Σ_{k≥1} ā^{k−1}(1 − |a|²) z^k`.
    pub fn series(&self, n: usize) -> PowerSeries {
        let mut s = PowerSeries::identity(n).scale(Complex64::from_polar(1.0, self.rotation));
        for a in &self.zeros {
            let mut c = vec![Complex64::new(0.0, 0.0); n + 1];
            c[0] = -a;
            let mut pow = Complex64::new(1.0 - a.norm_sqr(), 0.0);
            for ck in c.iter_mut().skip(1) {
                *ck = pow;
                pow *= a.conj();
            }
            s = &s * &PowerSeries::new(c);
        }
        s
    }
}

fn uniform_in_disc<R: Rng>(rng: &mut R, radius: f64) -> Complex64 {
    let rho = radius * rng.gen::<f64>().sqrt();
    let angle = rng.gen_range(-PI..PI);
    Complex64::from_polar(rho, angle)
}

/// A random rotation times up to two Blaschke factors with zeros in
/// `|a| ≤ 0.8`.
pub fn random_schwarz<R: Rng>(rng: &mut R) -> SchwarzFunction {
    let rotation = rng.gen_range(-PI..PI);
    let count = rng.gen_range(0..=2);
    let zeros = (0..count).map(|_| uniform_in_disc(rng, MAX_ZERO_MODULUS)).collect();
    SchwarzFunction { rotation, zeros }
}

/// `f(z) = z + Σ_{k=2}^{degree} a_k z^k` with `a_k` uniform in the disc of
/// radius `scale/k²`.
pub fn random_polynomial<R: Rng>(rng: &mut R, degree: usize, scale: f64) -> PowerSeries {
    let mut c = vec![Complex64::new(0.0, 0.0); degree.max(1) + 1];
    c[1] = Complex64::new(1.0, 0.0);
    for (k, ck) in c.iter_mut().enumerate().skip(2) {
        *ck = uniform_in_disc(rng, scale / (k * k) as f64);
    }
    PowerSeries::new(c)
}

/// Series to degree `n` of the member `f` with `z f'/f = LP(w(z))`, that is
/// `f = z exp ∫_0^z P_0(w(t))/t dt`.
pub fn class_member_series(w: &SchwarzFunction, n: usize) -> Result<PowerSeries> {
    let n = n.max(2);
    let p0 = p0_coefficients(n)?;
    let ws = w.series(n);
    // Horner composition; w(0) = 0 keeps every truncation exact to degree n
    let mut acc = PowerSeries::zero(n);
    for k in (0..=n).rev() {
        acc = &acc * &ws;
        let mut c = acc.clone().into_coeffs();
        c[0] += p0.coeff(k);
        acc = PowerSeries::new(c);
    }
    let e = series_exp(&integrate_over_t(&acc)?)?;
    Ok(e.shift_up().truncate(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::eval_lp;
    use crate::series::extremal_f0;

    #[test]
    fn seeded_streams_repeat() {
        let a: Vec<u64> = (0..4).map({
            let mut r = seeded_rng(7);
            move |_| r.gen()
        }).collect();
        let b: Vec<u64> = (0..4).map({
            let mut r = seeded_rng(7);
            move |_| r.gen()
        }).collect();
        assert_eq!(a, b);
        let s1 = random_schwarz(&mut seeded_rng(11));
        let s2 = random_schwarz(&mut seeded_rng(11));
        assert_eq!(s1, s2);
    }

    #[test]
    fn schwarz_series_matches_closed_form() {
        let mut rng = seeded_rng(3);
        for _ in 0..10 {
            let w = random_schwarz(&mut rng);
            assert!(w.zeros().iter().all(|a| a.norm() <= MAX_ZERO_MODULUS));
            let s = w.series(120);
            for z in [Complex64::new(0.5, 0.1), Complex64::new(-0.3, -0.6)] {
                assert!((s.eval(z) - w.eval(z)).norm() < 1e-12);
                assert!(w.eval(z).norm() <= z.norm() + 1e-15);
            }
        }
    }

    #[test]
    fn identity_schwarz_gives_f0() {
        let w = SchwarzFunction::new(0.0, vec![]).unwrap();
        let f = class_member_series(&w, 40).unwrap();
        let f0 = extremal_f0(40).unwrap();
        for n in 0..=40 {
            assert!((f.coeff(n) - f0.coeff(n)).norm() < 1e-13, "n={n}");
        }
    }

    #[test]
    fn member_satisfies_subordination_identity() {
        let w = random_schwarz(&mut seeded_rng(5));
        let f = class_member_series(&w, 120).unwrap();
        let df = f.derivative();
        let z = Complex64::new(0.2, 0.3);
        let lhs = z * df.eval(z) / f.eval(z);
        let rhs = eval_lp(w.eval(z)).unwrap();
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn polynomial_is_normalised() {
        let p = random_polynomial(&mut seeded_rng(1), 6, 0.5);
        assert_eq!(p.degree(), 6);
        assert_eq!(p.coeff(0), Complex64::new(0.0, 0.0));
        assert_eq!(p.coeff(1), Complex64::new(1.0, 0.0));
        assert!(p.coeff(4).norm() <= 0.5 / 16.0);
        assert!(SchwarzFunction::new(0.0, vec![Complex64::new(1.0, 0.0)]).is_err());
    }
}
