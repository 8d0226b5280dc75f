//! The precision ladder: f64 → double-double → 256-bit → 512-bit.
//!
//! Ladder-sensitive kernels (section summation, polynomial root finding,
//! series for special functions) are written once, generically over
//! [`ComplexScalar`], and re-run at the next rung whenever an accuracy
//! certificate fails.

use dashu_float::{round::mode::HalfEven, DBig, FBig};
use num_complex::Complex64;
use std::str::FromStr;
use twofloat::TwoFloat;

use crate::error::{Error, Result};

pub type Mpf = FBig<HalfEven, 2>;
pub type DdComplex = num_complex::Complex<TwoFloat>;

/// One rung of the precision ladder.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub enum Precision {
    F64,
    DoubleDouble,
    Bits256,
    Bits512,
}

impl Precision {
    pub fn bits(self) -> u32 {
        match self {
            Precision::F64 => 53,
            Precision::DoubleDouble => 106,
            Precision::Bits256 => 256,
            Precision::Bits512 => 512,
        }
    }

    /// Unit roundoff at this rung. Double-double is not a true 106-bit float;
    /// we use a conservative bound.
    pub fn eps(self) -> f64 {
        match self {
            Precision::F64 => 2.3e-16,
            Precision::DoubleDouble => 5e-31,
            Precision::Bits256 => 9e-77,
            Precision::Bits512 => 7.5e-154,
        }
    }

    pub fn next(self) -> Option<Precision> {
        match self {
            Precision::F64 => Some(Precision::DoubleDouble),
            Precision::DoubleDouble => Some(Precision::Bits256),
            Precision::Bits256 => Some(Precision::Bits512),
            Precision::Bits512 => None,
        }
    }

    pub fn from_bits(bits: u32) -> Result<Precision> {
        match bits {
            53 => Ok(Precision::F64),
            106 => Ok(Precision::DoubleDouble),
            256 => Ok(Precision::Bits256),
            512 => Ok(Precision::Bits512),
            other => Err(Error::Config(format!(
                "precision ceiling must be one of 53, 106, 256, 512 bits (got {other})"
            ))),
        }
    }

    /// Rungs from this one up to and including `ceiling`.
    pub fn ladder_to(self, ceiling: Precision) -> impl Iterator<Item = Precision> {
        let mut cur = Some(self);
        std::iter::from_fn(move |&mut ref mut _x| {
            let rung = cur?;
            if rung > ceiling {
                return None;
            }
            cur = rung.next();
            Some(rung)
        })
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::Bits256
    }
}

/// Complex arithmetic at one ladder rung. Implementations exist for plain
/// `Complex64`, double-double `Complex<TwoFloat>` and the big-float pair
/// [`MpComplex`]. The `bits` argument is only meaningful for the big-float
/// implementation; fixed-width rungs ignore it.
pub trait ComplexScalar: Clone + Send + Sync {
    fn from_c64(z: Complex64, bits: u32) -> Self;
    fn from_f64(x: f64, bits: u32) -> Self {
        Self::from_c64(Complex64::new(x, 0.0), bits)
    }
    fn from_u64(x: u64, bits: u32) -> Self;
    fn zero(bits: u32) -> Self;
    fn one(bits: u32) -> Self {
        Self::from_u64(1, bits)
    }
    fn to_c64(&self) -> Complex64;

    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;

    /// Exact scaling by 2^e.
    fn scale_pow2(&self, e: i32) -> Self;

    /// |z| as f64; may overflow to infinity for extreme big-float values.
    fn abs_f64(&self) -> f64 {
        self.to_c64().norm()
    }

    /// Robust log-magnitude (finite even when `abs_f64` would overflow).
    fn ln_abs(&self) -> f64;

    fn is_zero(&self) -> bool;

    /// sqrt(pi) at this rung; seed constant for half-integer gamma
    /// recurrences and erfc series.
    fn sqrt_pi(bits: u32) -> Self;
}

impl ComplexScalar for Complex64 {
    fn from_c64(z: Complex64, _bits: u32) -> Self {
        z
    }
    fn from_u64(x: u64, _bits: u32) -> Self {
        Complex64::new(x as f64, 0.0)
    }
    fn zero(_bits: u32) -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn to_c64(&self) -> Complex64 {
        *self
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        num_complex::Complex::conj(self)
    }
    fn scale_pow2(&self, e: i32) -> Self {
        let s = f64::powi(2.0, e);
        Complex64::new(self.re * s, self.im * s)
    }
    fn ln_abs(&self) -> f64 {
        // avoid premature overflow of re^2+im^2
        let m = self.re.abs().max(self.im.abs());
        if m == 0.0 {
            return f64::NEG_INFINITY;
        }
        let (a, b) = (self.re / m, self.im / m);
        m.ln() + 0.5 * (a * a + b * b).ln()
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn sqrt_pi(_bits: u32) -> Self {
        Complex64::new(1.772_453_850_905_516, 0.0)
    }
}

impl ComplexScalar for DdComplex {
    fn from_c64(z: Complex64, _bits: u32) -> Self {
        DdComplex::new(TwoFloat::from(z.re), TwoFloat::from(z.im))
    }
    fn from_u64(x: u64, _bits: u32) -> Self {
        DdComplex::new(TwoFloat::from(x as f64), TwoFloat::from(0.0))
    }
    fn zero(_bits: u32) -> Self {
        DdComplex::new(TwoFloat::from(0.0), TwoFloat::from(0.0))
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.hi(), self.im.hi())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        DdComplex::new(self.re, -self.im)
    }
    fn scale_pow2(&self, e: i32) -> Self {
        let s = TwoFloat::from(f64::powi(2.0, e));
        DdComplex::new(self.re * s, self.im * s)
    }
    fn ln_abs(&self) -> f64 {
        self.to_c64().ln_abs()
    }
    fn is_zero(&self) -> bool {
        self.re == TwoFloat::from(0.0) && self.im == TwoFloat::from(0.0)
    }
    fn sqrt_pi(_bits: u32) -> Self {
        // hi/lo split of sqrt(pi)
        DdComplex::new(
            TwoFloat::try_from((1.772_453_850_905_516, -7.666_586_499_825_799e-17))
                .expect("valid dd split"),
            TwoFloat::from(0.0),
        )
    }
}

/// Arbitrary-precision complex number backed by binary big-floats.
#[derive(Clone, Debug)]
pub struct MpComplex {
    pub re: Mpf,
    pub im: Mpf,
}

/// pi to ~700 bits, parsed once per call site that needs it.
const PI_DECIMAL: &str = "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706798214808651328230664709384460955058223172535940812848111745028410270193852110555964462294895493038196442881097566593344612847564823378678316527120190914564856692346034861045432664821339360726024914127372458700660631558817488152092096282925409171536436789259036001133053054882046652138414695194151160943305727036575959195309218611738193261179310511854807446237996274956735188575272489122793818301194912";

fn mp_pi(bits: u32) -> Mpf {
    DBig::from_str(PI_DECIMAL)
        .expect("pi literal parses")
        .with_precision(bits as usize + 32)
        .value()
        .with_base::<2>()
        .value()
        .with_rounding::<HalfEven>()
        .with_precision(bits as usize)
        .value()
}

impl MpComplex {
    pub fn new(re: Mpf, im: Mpf) -> Self {
        MpComplex { re, im }
    }

    fn mpf_from_f64(x: f64, bits: u32) -> Mpf {
        // f64 -> FBig is exact; then pad the working precision.
        Mpf::try_from(x).expect("finite f64").with_precision(bits as usize).value()
    }
}

impl ComplexScalar for MpComplex {
    fn from_c64(z: Complex64, bits: u32) -> Self {
        MpComplex { re: Self::mpf_from_f64(z.re, bits), im: Self::mpf_from_f64(z.im, bits) }
    }
    fn from_u64(x: u64, bits: u32) -> Self {
        MpComplex {
            re: Mpf::from(x).with_precision(bits as usize).value(),
            im: Mpf::ZERO.with_precision(bits as usize).value(),
        }
    }
    fn zero(bits: u32) -> Self {
        let z = Mpf::ZERO.with_precision(bits as usize).value();
        MpComplex { re: z.clone(), im: z }
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64().value(), self.im.to_f64().value())
    }
    fn add(&self, o: &Self) -> Self {
        MpComplex { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    fn sub(&self, o: &Self) -> Self {
        MpComplex { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn mul(&self, o: &Self) -> Self {
        MpComplex {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn div(&self, o: &Self) -> Self {
        let den = &o.re * &o.re + &o.im * &o.im;
        MpComplex {
            re: (&self.re * &o.re + &self.im * &o.im) / &den,
            im: (&self.im * &o.re - &self.re * &o.im) / &den,
        }
    }
    fn neg(&self) -> Self {
        MpComplex { re: -self.re.clone(), im: -self.im.clone() }
    }
    fn conj(&self) -> Self {
        MpComplex { re: self.re.clone(), im: -self.im.clone() }
    }
    fn scale_pow2(&self, e: i32) -> Self {
        let two = Mpf::from(2).with_precision(self.re.precision().max(53)).value();
        let s = two.powi(e.unsigned_abs().into());
        if e >= 0 {
            MpComplex { re: &self.re * &s, im: &self.im * &s }
        } else {
            MpComplex { re: &self.re / &s, im: &self.im / &s }
        }
    }
    fn ln_abs(&self) -> f64 {
        let n2 = &self.re * &self.re + &self.im * &self.im;
        if n2.repr().is_zero() {
            return f64::NEG_INFINITY;
        }
        0.5 * n2.ln().to_f64().value()
    }
    fn is_zero(&self) -> bool {
        self.re.repr().is_zero() && self.im.repr().is_zero()
    }
    fn sqrt_pi(bits: u32) -> Self {
        MpComplex {
            re: mp_pi(bits + 8).sqrt().with_precision(bits as usize).value(),
            im: Mpf::ZERO.with_precision(bits as usize).value(),
        }
    }
}
