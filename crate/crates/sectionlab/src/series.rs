//! Rung-generic power-series summation with exact power-of-two
//! renormalization.
//!
//! Both finite sections and entire-series tails are sums `sum_k c_k z^k`
//! whose terms reach magnitudes like `e^{n/lambda}`; the accumulator is kept
//! scaled by `2^{-shift}` so no rung ever overflows, and the result is
//! reported in split log form. Coefficients arrive either as consecutive
//! ratios `c_{k+1}/c_k` (exact at every rung for the built-in models) or as
//! direct values (table-backed models).

use crate::cplx::{Complex64, LogComplex};
use crate::ladder::{ComplexScalar, Precision};

/// When to stop summing.
#[derive(Clone, Copy)]
pub enum StopRule {
    /// Sum exactly the terms `0..=n` (a section).
    Degree(usize),
    /// Stop once the geometric tail bound drops below `rel_tol * |sum|`.
    Tail { rel_tol: f64 },
}

/// How coefficients are produced. Closures are called with consecutive
/// `k = 0, 1, 2, ...` exactly once each, so they may carry recurrence state.
pub enum Coeffs<'a, C> {
    /// `f(k)` returns `c_{k+1} / c_k`.
    Ratio(&'a mut dyn FnMut(usize, u32) -> C),
    /// `f(k)` returns `c_k` itself.
    Direct(&'a mut dyn FnMut(usize, u32) -> C),
}

pub struct SeriesSum {
    pub value: LogComplex,
    /// ln of `sum_k |c_k z^k|`, the cancellation scale.
    pub ln_abs_sum: f64,
    pub terms_used: usize,
    /// Whether the rounding + tail bound meets the requested accuracy.
    pub certified: bool,
}

const RENORM_LIMIT: f64 = 4.49e307; // ~2^1021
const RENORM_STEP: i32 = 512;

/// Sum the series at one rung.
pub fn sum_series_at<C: ComplexScalar>(
    z: Complex64,
    coeffs: Coeffs<'_, C>,
    stop: StopRule,
    target_rel: f64,
    rung: Precision,
) -> SeriesSum {
    let bits = rung.bits();
    let zc = C::from_c64(z, bits);
    let mut coeffs = coeffs;

    // term = c_k z^k / 2^{shift}; in Direct mode zpow = z^k / 2^{shift}
    let mut term;
    let mut zpow = C::one(bits);
    match &mut coeffs {
        Coeffs::Ratio(_) => term = C::one(bits),
        Coeffs::Direct(f) => term = f(0, bits),
    }
    let mut sum = C::zero(bits);
    let mut comp = C::zero(bits); // Kahan compensation
    let mut shift: i64 = 0;
    let mut abs_sum = 0.0f64; // at current shift
    let mut k = 0usize;
    let mut tail_ok = matches!(stop, StopRule::Degree(_));
    let limit = match stop {
        StopRule::Degree(n) => n,
        StopRule::Tail { .. } => 200_000,
    };

    loop {
        // Kahan step: sum += term
        let y = term.sub(&comp);
        let t = sum.add(&y);
        comp = t.sub(&sum).sub(&y);
        sum = t;
        abs_sum += term.abs_f64();

        if k >= limit {
            k += 1;
            break;
        }

        let step_abs;
        match &mut coeffs {
            Coeffs::Ratio(f) => {
                let step = zc.mul(&f(k, bits));
                step_abs = step.abs_f64();
                term = term.mul(&step);
            }
            Coeffs::Direct(f) => {
                let prev = zpow.abs_f64();
                zpow = zpow.mul(&zc);
                let c = f(k + 1, bits);
                let new_term = zpow.mul(&c);
                step_abs = if prev > 0.0 { new_term.abs_f64() / term.abs_f64().max(1e-300) } else { 0.0 };
                term = new_term;
            }
        }
        k += 1;

        if let StopRule::Tail { rel_tol } = stop {
            let q = step_abs;
            if q < 0.7 {
                let t_abs = term.abs_f64();
                if t_abs * q / (1.0 - q) <= rel_tol * sum.abs_f64().max(1e-280) {
                    tail_ok = true;
                    let y = term.sub(&comp);
                    sum = sum.add(&y);
                    abs_sum += t_abs;
                    k += 1;
                    break;
                }
            }
        }

        if term.abs_f64() > RENORM_LIMIT || abs_sum > RENORM_LIMIT || zpow.abs_f64() > RENORM_LIMIT {
            term = term.scale_pow2(-RENORM_STEP);
            sum = sum.scale_pow2(-RENORM_STEP);
            comp = comp.scale_pow2(-RENORM_STEP);
            zpow = zpow.scale_pow2(-RENORM_STEP);
            abs_sum *= f64::powi(2.0, -RENORM_STEP);
            shift += RENORM_STEP as i64;
        }
    }

    let ln_shift = shift as f64 * std::f64::consts::LN_2;
    let value = LogComplex::new(sum.ln_abs() + ln_shift, sum.to_c64().arg());
    let rounding = (2 * k + 8) as f64 * rung.eps() * abs_sum;
    let certified = tail_ok && rounding <= target_rel * sum.abs_f64().max(1e-280);
    SeriesSum { value, ln_abs_sum: abs_sum.ln() + ln_shift, terms_used: k, certified }
}
