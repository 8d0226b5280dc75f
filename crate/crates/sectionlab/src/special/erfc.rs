//! Complex complementary error function.
//!
//! Maclaurin series for moderate `|z|` (run on the precision ladder: the
//! series loses ~`|z|^2 / ln 2` bits to cancellation, so the rung is chosen
//! from the predicted loss and certified by a running error bound), Laplace
//! continued fraction for the scaled complement away from the imaginary
//! axis, reflection `erfc(z) = 2 - erfc(-z)` in the left half-plane.

use crate::cplx::Complex64;
use crate::ladder::{ComplexScalar, DdComplex, MpComplex, Precision};

const TWO_OVER_SQRT_PI: f64 = 1.128_379_167_095_512_6;

/// Relative accuracy target for interior evaluations.
const TARGET_REL: f64 = 1e-14;

/// Maclaurin series for erf at one rung, with a running rounding/tail bound.
/// Returns `(erfc(z), certified)`.
fn erfc_series_at<C: ComplexScalar>(z: Complex64, rung: Precision) -> (Complex64, bool) {
    let bits = rung.bits();
    let zc = C::from_c64(z, bits);
    let neg_z2 = zc.mul(&zc).neg();
    let q_abs = z.norm_sqr(); // |z^2|

    // u_k = (-1)^k z^{2k+1} / k!, term_k = u_k / (2k+1)
    let mut u = zc.clone();
    let mut sum = C::zero(bits);
    let mut abs_sum = 0.0f64; // sum of |term| in f64 (safe: |z| <= ~26)
    let mut tail_ok = false;
    let mut k = 0usize;
    while k < 4000 {
        let term = u.div(&C::from_u64(2 * k as u64 + 1, bits));
        sum = sum.add(&term);
        let t_abs = term.abs_f64();
        abs_sum += t_abs;
        let ratio = q_abs / (k as f64 + 1.0);
        if ratio < 0.7 && t_abs * ratio / (1.0 - ratio) < 1e-40 + 1e-22 * abs_sum {
            tail_ok = true;
            break;
        }
        u = u.mul(&neg_z2).div(&C::from_u64(k as u64 + 1, bits));
        k += 1;
    }

    let two = C::from_u64(2, bits);
    let erf = sum.mul(&two.div(&C::sqrt_pi(bits)));
    let one = C::one(bits);
    let result = one.sub(&erf);
    let value = result.to_c64();

    // rounding error ~ k * eps * sum|term| (scaled by 2/sqrt(pi))
    let rounding = (k as f64 + 4.0) * rung.eps() * abs_sum * TWO_OVER_SQRT_PI;
    let certified = tail_ok && rounding <= TARGET_REL * value.norm().max(1e-300);
    (value, certified)
}

/// Ladder dispatch for the series route.
fn erfc_series(z: Complex64) -> Complex64 {
    // predicted cancellation: the series for erf peaks near e^{|z|^2}
    let predicted_bits = 53.0 + z.norm_sqr() * std::f64::consts::LOG2_E + 8.0;
    let start = if predicted_bits <= 53.0 + 10.0 {
        Precision::F64
    } else if predicted_bits <= 100.0 {
        Precision::DoubleDouble
    } else if predicted_bits <= 250.0 {
        Precision::Bits256
    } else {
        Precision::Bits512
    };
    let mut best = Complex64::new(f64::NAN, f64::NAN);
    for rung in start.ladder_to(Precision::Bits512) {
        let (value, certified) = match rung {
            Precision::F64 => erfc_series_at::<Complex64>(z, rung),
            Precision::DoubleDouble => erfc_series_at::<DdComplex>(z, rung),
            _ => erfc_series_at::<MpComplex>(z, rung),
        };
        best = value;
        if certified {
            return value;
        }
    }
    // top rung reached: still far better than the contract for |z| <= 10
    best
}

/// Scaled complement `erfcx(z) = e^{z^2} erfc(z)` by the Laplace continued
/// fraction, valid for `Re z > 0`; accurate and fast for `|z| >~ 4` away
/// from the imaginary axis. Returns `None` if Lentz iteration stalls.
fn erfcx_cf(z: Complex64) -> Option<Complex64> {
    // erfc(z) sqrt(pi) e^{z^2} = 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
    let tiny = Complex64::new(1e-290, 0.0);
    let mut f = tiny;
    let mut c = f;
    let mut d = Complex64::new(0.0, 0.0);
    for m in 1..400 {
        let a = if m == 1 { Complex64::new(1.0, 0.0) } else { Complex64::new((m as f64 - 1.0) / 2.0, 0.0) };
        d = z + a * d;
        if d.norm() < 1e-290 {
            d = tiny;
        }
        c = z + a / c;
        if c.norm() < 1e-290 {
            c = tiny;
        }
        d = Complex64::new(1.0, 0.0) / d;
        let delta = c * d;
        f *= delta;
        if (delta - Complex64::new(1.0, 0.0)).norm() < 1e-16 {
            return Some(f / Complex64::sqrt_pi());
        }
    }
    None
}

trait SqrtPiExt {
    fn sqrt_pi() -> Complex64;
}
impl SqrtPiExt for Complex64 {
    fn sqrt_pi() -> Complex64 {
        Complex64::new(1.772_453_850_905_516, 0.0)
    }
}

/// `erfcx(z) = e^{z^2} erfc(z)`.
///
/// Continued fraction when it applies, otherwise `e^{z^2} erfc(z)` via the
/// series route.
pub fn erfcx(z: Complex64) -> Complex64 {
    if z.re > 0.0 && z.norm_sqr() >= 20.0 && z.re >= 0.18 * z.im.abs() {
        if let Some(v) = erfcx_cf(z) {
            return v;
        }
    }
    (z * z).exp() * erfc_series(z)
}

/// Complementary error function `erfc(z) = (2/sqrt(pi)) int_z^{z+inf} e^{-s^2} ds`.
///
/// Relative accuracy better than 1e-13 for `|z| <= 10` (away from the zeros
/// of erfc, where accuracy is absolute at the same level).
pub fn erfc(z: Complex64) -> Complex64 {
    if z.re == 0.0 && z.im == 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    let r = z.norm();
    if r <= 4.5 {
        return erfc_series(z);
    }
    // CF sector: comfortably away from the imaginary axis.
    let sector = z.re.abs() >= 0.45 * z.im.abs() || z.re.abs() >= 2.0;
    if sector {
        if z.re > 0.0 {
            if let Some(w) = erfcx_cf(z) {
                return (-z * z).exp() * w;
            }
        } else if let Some(w) = erfcx_cf(-z) {
            return Complex64::new(2.0, 0.0) - (-z * z).exp() * w;
        }
    }
    // near-imaginary band (or CF stall): series with ladder escalation
    erfc_series(z)
}

/// d/dz erfc(z) = -(2/sqrt(pi)) e^{-z^2}.
pub fn erfc_prime(z: Complex64) -> Complex64 {
    -TWO_OVER_SQRT_PI * (-z * z).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relerr(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm().max(1e-300)
    }

    // reference values computed with 40-digit arithmetic
    const REFS: [((f64, f64), (f64, f64)); 6] = [
        ((1.5, 0.5), (-0.007605486221370252182156, -0.04169709366555459796892)),
        ((-2.0, 1.0), (2.003606342725651750912912, 0.01125900602881502507640)),
        ((0.3, -4.0), (-865229.1585705681836256, -804043.1697894664553448)),
        ((5.0, 3.0), (6.820892206573714958555e-9, 8.387289311720404752137e-9)),
        ((-3.0, -8.0), (-2.50545705099394200528630e22, -4.450740831991092285222e22)),
        ((0.1, 7.0), (-1.511509645569248547723826e20, -2.83471662343043851516088e19)),
    ];

    #[test]
    fn reference_values() {
        for ((zr, zi), (wr, wi)) in REFS {
            let got = erfc(Complex64::new(zr, zi));
            let want = Complex64::new(wr, wi);
            assert!(
                relerr(got, want) < 1e-13,
                "erfc({zr}+{zi}i) = {got}, want {want}, relerr {:e}",
                relerr(got, want)
            );
        }
    }

    #[test]
    fn erfc_zero_is_one() {
        assert_eq!(erfc(Complex64::new(0.0, 0.0)), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn real_axis_against_known() {
        // erfc(1) and erfc(-4), classical values
        let e1 = erfc(Complex64::new(1.0, 0.0));
        assert!((e1.re - 0.157_299_207_050_285_13).abs() < 1e-15 && e1.im == 0.0);
        let e4 = erfc(Complex64::new(-4.0, 0.0));
        assert!((e4.re - 1.999_999_984_582_742).abs() < 1e-12);
    }

    #[test]
    fn reflection_and_conjugation_grid() {
        // erfc(z) + erfc(-z) = 2 and erfc(conj z) = conj erfc(z)
        let mut worst = 0.0f64;
        for i in 0..40 {
            let t = i as f64;
            let z = Complex64::new((t * 0.37).sin() * 5.0, (t * 0.61).cos() * 5.0);
            let a = erfc(z);
            let b = erfc(-z);
            let s = (a + b - Complex64::new(2.0, 0.0)).norm();
            let scale = a.norm().max(b.norm()).max(1.0);
            worst = worst.max(s / scale);
            let c = erfc(z.conj());
            assert!((c - a.conj()).norm() <= 1e-13 * scale);
        }
        assert!(worst < 1e-12, "reflection worst {worst:e}");
    }

    #[test]
    fn cf_and_series_agree_on_overlap() {
        for &(x, y) in &[(4.6, 0.3), (5.0, 4.0), (6.0, -2.0), (4.8, -4.5), (9.0, 3.0)] {
            let z = Complex64::new(x, y);
            let cf = (-z * z).exp() * erfcx_cf(z).unwrap();
            let series = erfc_series(z);
            assert!(relerr(cf, series) < 5e-13, "mismatch at {z}: {:e}", relerr(cf, series));
        }
    }
}
