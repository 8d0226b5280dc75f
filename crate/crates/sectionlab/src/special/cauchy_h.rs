//! The Gaussian Cauchy transform
//! `h(ζ) = (1/2πi) ∫_{-∞}^{∞} e^{-u^2} du/(u-ζ)`, `ζ ∉ ℝ`.
//!
//! On the upper half-plane `h(ζ) = ½ e^{-ζ^2} erfc(-iζ) = ½ erfcx(-iζ)`;
//! the lower half-plane follows from the real kernel by conjugation. The
//! sectional discontinuity across ℝ is the Sokhotski jump `e^{-x^2}`.

use crate::cplx::Complex64;
use crate::error::{Error, Result};
use crate::special::erfc::erfcx;

pub fn gaussian_cauchy_h(zeta: Complex64) -> Result<Complex64> {
    if zeta.im == 0.0 {
        return Err(Error::OutOfDomain(format!(
            "h has a jump across the real axis; zeta = {zeta} is on it"
        )));
    }
    if zeta.im > 0.0 {
        // ½ e^{-ζ²} erfc(-iζ); the scaled form never overflows since
        // Re(-iζ) = Im ζ > 0.
        Ok(0.5 * erfcx(Complex64::new(zeta.im, -zeta.re)))
    } else {
        let upper = gaussian_cauchy_h(zeta.conj())?;
        Ok(upper.conj())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_at_i() {
        // h(i) = ½ e erfc(1)
        let got = gaussian_cauchy_h(Complex64::new(0.0, 1.0)).unwrap();
        assert!((got - Complex64::new(0.2137917880779035, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn reference_point() {
        let got = gaussian_cauchy_h(Complex64::new(2.0, 3.0)).unwrap();
        let want = Complex64::new(0.06537873483492428430615, 0.04055632523872832650295);
        assert!((got - want).norm() < 1e-14, "h(2+3i) = {got}");
    }

    #[test]
    fn conjugate_symmetry_and_jump() {
        for &x in &[-2.5f64, -0.5, 0.0, 1.0, 2.75] {
            let eps = 1e-4;
            let up = gaussian_cauchy_h(Complex64::new(x, eps)).unwrap();
            let dn = gaussian_cauchy_h(Complex64::new(x, -eps)).unwrap();
            assert!((dn - gaussian_cauchy_h(Complex64::new(x, eps)).unwrap().conj()).norm() < 1e-15);
            let jump = up - dn;
            let predicted = (-x * x).exp();
            assert!(
                (jump - Complex64::new(predicted, 0.0)).norm() < 2e-3 * predicted.max(1e-2),
                "jump at {x}: {jump} vs {predicted}"
            );
        }
    }

    #[test]
    fn rejects_real_axis() {
        assert!(gaussian_cauchy_h(Complex64::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn decay_bound() {
        // |h(ζ)| <= C |ζ|^{-1}; check the trend along a ray
        let dir = Complex64::from_polar(1.0, 0.9);
        let mut prev = f64::INFINITY;
        for &r in &[2.0, 4.0, 8.0, 16.0, 32.0] {
            let v = gaussian_cauchy_h(dir * r).unwrap().norm() * r;
            assert!(v < 1.0, "|h| * |ζ| = {v} at r = {r}");
            let _ = prev;
            prev = v;
        }
    }
}
