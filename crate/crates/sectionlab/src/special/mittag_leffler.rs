//! Mittag-Leffler function of order `lambda`:
//! `E_{1/lambda}(z) = sum_k z^k / Gamma(k/lambda + 1)`.
//!
//! Plain series with a geometric tail bound, run on the precision ladder.
//! For `lambda = 1` (the exponential) and `lambda = 2` the consecutive
//! coefficient ratios are generated exactly at every rung through
//! half-integer gamma recurrences; other orders fall back to f64 log-gamma
//! ratios, which caps their accuracy near the f64 level.

use crate::cplx::{Complex64, LogComplex};
use crate::error::{Error, Result};
use crate::ladder::{ComplexScalar, DdComplex, MpComplex, Precision};
use crate::series::{sum_series_at, Coeffs, SeriesSum, StopRule};
use crate::special::gamma::ln_gamma_real;

/// Consecutive coefficient ratios `c_{k+1}/c_k` for `c_k = 1/Gamma(k/lambda+1)`.
/// Must be consumed with `k = 0, 1, 2, ...` in order.
pub fn ml_ratio_gen<C: ComplexScalar>(lambda: f64, bits: u32) -> Box<dyn FnMut(usize, u32) -> C> {
    if lambda == 1.0 {
        Box::new(move |k, b| C::one(b).div(&C::from_u64(k as u64 + 1, b)))
    } else if lambda == 2.0 {
        // ratio_k = Gamma(k/2+1)/Gamma((k+1)/2+1); rolling values per parity,
        // both updated by the same factor (k+2)/(k+3).
        let two = C::from_u64(2, bits);
        let sqrt_pi = C::sqrt_pi(bits);
        let mut even = two.div(&sqrt_pi); // Gamma(1)/Gamma(3/2) = 2/sqrt(pi)
        let mut odd = sqrt_pi.div(&two); // Gamma(3/2)/Gamma(2) = sqrt(pi)/2
        let mut expect = 0usize;
        Box::new(move |k, b| {
            debug_assert_eq!(k, expect, "ml ratio generator consumed out of order");
            expect = k + 1;
            let slot = if k % 2 == 0 { &mut even } else { &mut odd };
            let out = slot.clone();
            let f = C::from_u64(k as u64 + 2, b).div(&C::from_u64(k as u64 + 3, b));
            *slot = slot.mul(&f);
            out
        })
    } else {
        Box::new(move |k, b| {
            let r = (ln_gamma_real(k as f64 / lambda + 1.0)
                - ln_gamma_real((k as f64 + 1.0) / lambda + 1.0))
                .exp();
            C::from_f64(r, b)
        })
    }
}

fn rung_for(z: Complex64, lambda: f64) -> Precision {
    // cancellation scale: terms peak near e^{|z|^lambda}, the value is
    // ~ e^{Re z^lambda} in the growth sector and O(poly) elsewhere
    let zl = crate::cplx::principal_pow(z, Complex64::new(lambda, 0.0));
    let lost_bits = (z.norm().powf(lambda) - zl.re.max(0.0)).max(0.0) * std::f64::consts::LOG2_E;
    if lost_bits < 15.0 {
        Precision::F64
    } else if lost_bits < 68.0 {
        Precision::DoubleDouble
    } else if lost_bits < 215.0 {
        Precision::Bits256
    } else {
        Precision::Bits512
    }
}

fn ml_sum(z: Complex64, lambda: f64, rung: Precision) -> SeriesSum {
    let stop = StopRule::Tail { rel_tol: 1e-16 };
    let target = 1e-12;
    match rung {
        Precision::F64 => {
            let mut r = ml_ratio_gen::<Complex64>(lambda, rung.bits());
            sum_series_at::<Complex64>(z, Coeffs::Ratio(&mut *r), stop, target, rung)
        }
        Precision::DoubleDouble => {
            let mut r = ml_ratio_gen::<DdComplex>(lambda, rung.bits());
            sum_series_at::<DdComplex>(z, Coeffs::Ratio(&mut *r), stop, target, rung)
        }
        _ => {
            let mut r = ml_ratio_gen::<MpComplex>(lambda, rung.bits());
            sum_series_at::<MpComplex>(z, Coeffs::Ratio(&mut *r), stop, target, rung)
        }
    }
}

/// Split-log value of `E_{1/lambda}(z)` (the value itself can overflow f64
/// once `Re z^lambda` passes ~709).
pub fn mittag_leffler_ln(z: Complex64, lambda: f64) -> Result<LogComplex> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::OutOfDomain(format!("mittag_leffler requires lambda > 0, got {lambda}")));
    }
    let ceiling = Precision::Bits512;
    let mut last = None;
    for rung in rung_for(z, lambda).ladder_to(ceiling) {
        let s = ml_sum(z, lambda, rung);
        let ok = s.certified;
        last = Some(s);
        if ok {
            break;
        }
    }
    let s = last.expect("at least one rung");
    if !s.certified {
        return Err(Error::RangeExceeded(format!(
            "Mittag-Leffler series tail bound unmet at {} terms, |z| = {:.3}, lambda = {lambda}",
            s.terms_used,
            z.norm()
        )));
    }
    Ok(s.value)
}

/// `E_{1/lambda}(z)` as a plain complex number.
pub fn mittag_leffler(z: Complex64, lambda: f64) -> Result<Complex64> {
    Ok(mittag_leffler_ln(z, lambda)?.value())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_one_is_exp() {
        for &(x, y) in &[(0.5, 0.0), (-3.0, 2.0), (10.0, -4.0), (18.0, 6.0)] {
            let z = Complex64::new(x, y);
            let got = mittag_leffler(z, 1.0).unwrap();
            let want = z.exp();
            assert!((got - want).norm() < 1e-12 * want.norm(), "at {z}: {got} vs {want}");
        }
    }

    #[test]
    fn at_zero_is_one() {
        for &lam in &[0.5, 1.0, 2.0, 3.7] {
            assert_eq!(mittag_leffler(Complex64::new(0.0, 0.0), lam).unwrap(), Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn lambda_two_reference() {
        // E at z=4, lambda=2 equals e^{16} erfc(-4); 40-digit reference
        let got = mittag_leffler(Complex64::new(4.0, 0.0), 2.0).unwrap();
        let want = 17_772_220.904_016_287_65;
        assert!((got.re - want).abs() < 1e-8 * want, "got {got}");
        assert!(got.im == 0.0 || got.im.abs() < 1e-12 * want);
    }

    #[test]
    fn negative_axis_needs_ladder() {
        // E_1(-30) = e^{-30}: catastrophic cancellation for the series in f64
        let got = mittag_leffler(Complex64::new(-30.0, 0.0), 1.0).unwrap();
        let want = (-30.0f64).exp();
        assert!((got.re - want).abs() < 1e-12 * want);
    }

    #[test]
    fn huge_argument_ln_form() {
        // e^{900} overflows f64; the ln form stays finite
        let l = mittag_leffler_ln(Complex64::new(900.0, 0.0), 1.0).unwrap();
        assert!((l.ln_abs - 900.0).abs() < 1e-9);
    }
}
