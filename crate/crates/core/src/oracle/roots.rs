use crate::error::{Error, Result};

/// Stopping rule for the bracketing solvers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BracketSolverConfig {
    pub abs_tol: f64,
    pub max_iter: usize,
}

impl Default for BracketSolverConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            max_iter: 200,
        }
    }
}

impl BracketSolverConfig {
    pub fn new(abs_tol: f64, max_iter: usize) -> Result<Self> {
        if !(abs_tol > 0.0) || max_iter == 0 {
            return Err(Error::DomainError(format!(
                "invalid solver config: abs_tol = {abs_tol}, max_iter = {max_iter}"
            )));
        }
        Ok(Self { abs_tol, max_iter })
    }
}

fn check_bracket(lo: f64, hi: f64, flo: f64, fhi: f64) -> Result<()> {
    if flo.is_nan() || fhi.is_nan() || flo * fhi > 0.0 {
        return Err(Error::NoSignChange { lo, hi });
    }
    Ok(())
}

/// Bisection on `[lo, hi]`. Requires `f(lo)·f(hi) ≤ 0`; stops once the
/// bracket is narrower than `abs_tol` and `|f| ≤ abs_tol`, or when the
/// bracket cannot shrink any further in floating point.
pub fn bracket_root<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, cfg: &BracketSolverConfig) -> Result<f64> {
    let (mut lo, mut hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    check_bracket(lo, hi, flo, fhi)?;
    for _ in 0..cfg.max_iter {
        let mid = lo + 0.5 * (hi - lo);
        let fm = f(mid);
        if fm == 0.0 || mid <= lo || mid >= hi {
            return Ok(mid);
        }
        if (hi - lo) <= cfg.abs_tol && fm.abs() <= cfg.abs_tol {
            return Ok(mid);
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Err(Error::MaxIterExceeded {
        iterations: cfg.max_iter,
    })
}

/// Regula falsi with the Illinois modification. Used as the second,
/// independent solver for radii that are only defined as roots.
pub fn illinois_root<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, cfg: &BracketSolverConfig) -> Result<f64> {
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    check_bracket(lo, hi, fa, fb)?;
    for _ in 0..cfg.max_iter {
        let c = (a * fb - b * fa) / (fb - fa);
        let fc = f(c);
        if fc == 0.0 {
            return Ok(c);
        }
        if (fc < 0.0) != (fb < 0.0) {
            a = b;
            fa = fb;
        } else {
            fa *= 0.5;
        }
        b = c;
        fb = fc;
        if (b - a).abs() <= cfg.abs_tol * 1e-2 || (fb.abs() <= cfg.abs_tol * 1e-3 && (b - a).abs() <= cfg.abs_tol) {
            return Ok(b);
        }
    }
    Err(Error::MaxIterExceeded {
        iterations: cfg.max_iter,
    })
}

/// First cell of a uniform `cells`-grid on `[lo, hi]` across which `f`
/// changes sign relative to `f(lo)`.
pub fn scan_sign_change<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, cells: usize) -> Option<(f64, f64)> {
    let cells = cells.max(1);
    let h = (hi - lo) / cells as f64;
    let mut a = lo;
    let mut fa = f(a);
    for i in 1..=cells {
        let b = if i == cells { hi } else { lo + h * i as f64 };
        let fb = f(b);
        if fa == 0.0 {
            return Some((a, a));
        }
        if fb == 0.0 || (fa < 0.0) != (fb < 0.0) {
            return Some((a, b));
        }
        a = b;
        fa = fb;
    }
    None
}

/// Smallest root on `[lo, hi]`: grid scan followed by bisection in the
/// first sign-changing cell.
pub fn smallest_root<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, cells: usize, cfg: &BracketSolverConfig) -> Result<f64> {
    match scan_sign_change(&f, lo, hi, cells) {
        Some((a, b)) if a == b => Ok(a),
        Some((a, b)) => bracket_root(&f, a, b, cfg),
        None => Err(Error::NoSignChange { lo, hi }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisection_examples() {
        let cfg = BracketSolverConfig::default();
        let r = bracket_root(|r| r - 0.5, 0.0, 1.0, &cfg).unwrap();
        assert!((r - 0.5).abs() < 1e-12);
        let r = bracket_root(|r: f64| r * r.exp() - 0.5, 0.0, 1.0, &cfg).unwrap();
        assert!((r - 0.3517).abs() < 5e-5);
        assert!(matches!(
            bracket_root(|r| r + 1.0, 0.0, 1.0, &cfg),
            Err(Error::NoSignChange { .. })
        ));
        let tight = BracketSolverConfig::new(1e-12, 3).unwrap();
        assert!(matches!(
            bracket_root(|r| r - 0.3, 0.0, 1.0, &tight),
            Err(Error::MaxIterExceeded { .. })
        ));
        assert!(BracketSolverConfig::new(0.0, 10).is_err());
    }

    #[test]
    fn illinois_agrees_with_bisection() {
        let cfg = BracketSolverConfig::default();
        let f = |r: f64| r * r.exp() - 0.5;
        let a = bracket_root(f, 0.0, 1.0, &cfg).unwrap();
        let b = illinois_root(f, 0.0, 1.0, &cfg).unwrap();
        assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn smallest_root_picks_first() {
        let cfg = BracketSolverConfig::default();
        let f = |x: f64| (x - 0.2) * (x - 0.7);
        let r = smallest_root(f, 0.0, 1.0, 64, &cfg).unwrap();
        assert!((r - 0.2).abs() < 1e-12);
    }
}
