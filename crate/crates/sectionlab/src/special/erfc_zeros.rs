//! Zeros of the complementary error function.
//!
//! The zeros form two conjugate strings approaching `arg z = ±3π/4`. Initial
//! guesses come from the asymptotic relation `e^{-z^2} = -2 sqrt(pi) z`;
//! each is polished by Newton and certified by an argument-principle winding
//! count of exactly one in a surrounding disk.

use crate::cplx::Complex64;
use crate::error::{Error, Result};
use crate::quad::winding_number;
use crate::special::erfc::{erfc, erfc_prime};

pub const SECTOR_BOUND: f64 = 3.0 * std::f64::consts::FRAC_PI_4;
const RESIDUAL_TOL: f64 = 1e-10;

/// Certified zeros of erfc, smallest modulus first, each immediately
/// followed by its conjugate.
#[derive(Clone, Debug)]
pub struct ErfcZeroList {
    pub zeros: Vec<Complex64>,
    pub residuals: Vec<f64>,
}

impl ErfcZeroList {
    /// The upper-half-plane representatives, ascending modulus.
    pub fn upper_pairs(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.zeros.iter().copied().filter(|z| z.im > 0.0)
    }
}

/// Asymptotic seed for the k-th upper zero (k = 1, 2, ...).
fn asymptotic_guess(k: usize) -> Complex64 {
    let v = -(2.0 * std::f64::consts::PI * k as f64 - std::f64::consts::FRAC_PI_4);
    let mut r = v.abs().sqrt();
    let mut z = Complex64::new(0.0, 0.0);
    for _ in 0..3 {
        let u = -(2.0 * std::f64::consts::PI.sqrt() * r).ln();
        z = -Complex64::new(u, v).sqrt();
        r = z.norm();
    }
    z
}

fn newton_refine(mut z: Complex64) -> Result<Complex64> {
    for _ in 0..60 {
        let step = erfc(z) / erfc_prime(z);
        z -= step;
        if step.norm() <= 1e-15 * (1.0 + z.norm()) {
            return Ok(z);
        }
    }
    Err(Error::NonConvergence { context: "erfc zero Newton refinement", iterations: 60 })
}

/// The `count` smallest-modulus conjugate pairs of erfc zeros with residual
/// certificates.
pub fn erfc_zeros(count: usize) -> Result<ErfcZeroList> {
    if count == 0 {
        return Err(Error::OutOfDomain("erfc_zeros requires count >= 1".into()));
    }
    let mut zeros = Vec::with_capacity(2 * count);
    let mut residuals = Vec::with_capacity(2 * count);
    for k in 1..=count {
        let z = newton_refine(asymptotic_guess(k))?;
        if z.im <= 0.0 || z.re >= 0.0 {
            return Err(Error::Certification(format!(
                "zero #{k} refined to {z}, outside the upper-left string"
            )));
        }
        if z.arg().abs() >= SECTOR_BOUND {
            return Err(Error::Certification(format!(
                "zero #{k} at {z} violates |arg z| < 3pi/4"
            )));
        }
        // winding certificate: exactly one zero in a disk that cannot reach
        // the neighbors (string spacing shrinks like pi/|z|)
        let radius = 0.3f64.min(0.35 * std::f64::consts::PI / z.norm());
        let w = winding_number(&|s| (erfc(s), erfc_prime(s)), z, radius)?;
        if w != 1 {
            return Err(Error::Certification(format!(
                "argument principle found {w} zeros near {z} (expected 1)"
            )));
        }
        let res = erfc(z).norm();
        if res > RESIDUAL_TOL {
            return Err(Error::Certification(format!(
                "residual |erfc({z})| = {res:e} exceeds {RESIDUAL_TOL:e}"
            )));
        }
        let zc = z.conj();
        let res_c = erfc(zc).norm();
        zeros.push(z);
        residuals.push(res);
        zeros.push(zc);
        residuals.push(res_c);
    }
    Ok(ErfcZeroList { zeros, residuals })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_pair_location() {
        let list = erfc_zeros(1).unwrap();
        assert_eq!(list.zeros.len(), 2);
        let z = list.zeros[0];
        // reference: first zero at -1.35481012811... + 1.99146684283...i
        assert!((z - Complex64::new(-1.354810128112006, 1.991466842833880)).norm() < 1e-12);
        assert_eq!(list.zeros[1], z.conj());
    }

    #[test]
    fn five_pairs_certified_in_sector() {
        let list = erfc_zeros(5).unwrap();
        assert_eq!(list.zeros.len(), 10);
        for (z, r) in list.zeros.iter().zip(&list.residuals) {
            assert!(z.arg().abs() < SECTOR_BOUND);
            assert!(*r <= RESIDUAL_TOL);
        }
        // ascending modulus over pairs
        let mods: Vec<f64> = list.upper_pairs().map(|z| z.norm()).collect();
        for w in mods.windows(2) {
            assert!(w[0] < w[1]);
        }
        // conjugate pairing
        for p in list.zeros.chunks(2) {
            assert_eq!(p[0].conj(), p[1]);
        }
    }
}
