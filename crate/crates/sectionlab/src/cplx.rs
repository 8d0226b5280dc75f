//! Complex scalar helpers: the split log representation and a few principal
//! branch utilities used throughout the crate.

pub use num_complex::Complex64;

/// A complex number stored as `exp(ln_abs) * e^{i arg}`.
///
/// Section values and entire-function evaluations in the critical window
/// reach magnitudes like `e^{n/lambda}` which overflow any fixed-width float;
/// ratios of such quantities are O(1). This type keeps the logarithm of the
/// magnitude so products, quotients and ratios stay overflow-safe.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogComplex {
    pub ln_abs: f64,
    pub arg: f64,
}

impl LogComplex {
    pub const ZERO_MAG: LogComplex = LogComplex { ln_abs: f64::NEG_INFINITY, arg: 0.0 };

    pub fn new(ln_abs: f64, arg: f64) -> Self {
        LogComplex { ln_abs, arg }
    }

    /// Represent an ordinary complex value. Zero maps to `ln_abs = -inf`.
    pub fn from_complex(z: Complex64) -> Self {
        LogComplex { ln_abs: z.norm().ln(), arg: z.arg() }
    }

    /// Interpret a complex logarithm `w = ln z` (so `z = e^w`).
    pub fn from_ln(w: Complex64) -> Self {
        LogComplex { ln_abs: w.re, arg: w.im }
    }

    pub fn is_zero(&self) -> bool {
        self.ln_abs == f64::NEG_INFINITY
    }

    /// The represented value. Overflows to infinity honestly when
    /// `ln_abs > ~709`.
    pub fn value(&self) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        Complex64::from_polar(self.ln_abs.exp(), self.arg)
    }

    pub fn mul(&self, other: &LogComplex) -> LogComplex {
        LogComplex { ln_abs: self.ln_abs + other.ln_abs, arg: self.arg + other.arg }
    }

    pub fn div(&self, other: &LogComplex) -> LogComplex {
        LogComplex { ln_abs: self.ln_abs - other.ln_abs, arg: self.arg - other.arg }
    }

    /// `exp(self - other)` as an ordinary complex number; the workhorse for
    /// ratios of two enormous quantities.
    pub fn ratio_to(&self, other: &LogComplex) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        Complex64::from_polar((self.ln_abs - other.ln_abs).exp(), self.arg - other.arg)
    }
}

/// `e^{i t}`.
pub fn cis(t: f64) -> Complex64 {
    Complex64::new(t.cos(), t.sin())
}

/// Principal branch power `z^a = exp(a Log z)` for complex exponent.
pub fn principal_pow(z: Complex64, a: Complex64) -> Complex64 {
    if a == Complex64::new(0.0, 0.0) {
        return Complex64::new(1.0, 0.0);
    }
    (a * z.ln()).exp()
}

/// `ln(1+u)` for complex `u`, accurate near `u = 0`.
pub fn ln_1p(u: Complex64) -> Complex64 {
    let w = Complex64::new(1.0, 0.0) + u;
    if u.norm() < 1e-4 {
        // two-term correction: Log(1+u) = u - u^2/2 + u^3/3 - ...
        u * (Complex64::new(1.0, 0.0) - u * 0.5 + u * u / 3.0)
    } else {
        w.ln()
    }
}

/// `e^u - 1` for complex `u`, accurate near `u = 0`.
pub fn exp_m1(u: Complex64) -> Complex64 {
    if u.norm() < 1e-4 {
        u * (Complex64::new(1.0, 0.0) + u * 0.5 + u * u / 6.0)
    } else {
        u.exp() - Complex64::new(1.0, 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_complex_round_trip() {
        let z = Complex64::new(-3.25, 1.75);
        let l = LogComplex::from_complex(z);
        let back = l.value();
        assert!((back - z).norm() < 1e-14 * z.norm());
    }

    #[test]
    fn ratio_of_huge_values() {
        // e^{1000+i} / e^{999.5-0.25i} = e^{0.5+1.25i}; both sides overflow f64.
        let a = LogComplex::from_ln(Complex64::new(1000.0, 1.0));
        let b = LogComplex::from_ln(Complex64::new(999.5, -0.25));
        let r = a.ratio_to(&b);
        let expect = Complex64::new(0.5, 1.25).exp();
        assert!((r - expect).norm() < 1e-13 * expect.norm());
    }

    #[test]
    fn exp_m1_small() {
        let u = Complex64::new(1e-9, -2e-9);
        let direct = exp_m1(u);
        assert!((direct - u).norm() < 1e-17);
    }
}
