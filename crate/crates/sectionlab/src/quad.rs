//! Adaptive Gauss–Kronrod quadrature for complex-valued integrands of a real
//! parameter, plus the argument-principle winding count built on it.

use crate::cplx::Complex64;
use crate::error::{Error, Result};

// 15-point Kronrod nodes on [0, 1]-half (symmetric), with embedded 7-point Gauss.
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469];

#[derive(Clone, Copy, Debug, Default)]
pub struct QuadResult {
    pub value: Complex64,
    pub error_estimate: f64,
    pub nodes_used: usize,
}

impl QuadResult {
    pub fn add(&self, o: &QuadResult) -> QuadResult {
        QuadResult {
            value: self.value + o.value,
            error_estimate: self.error_estimate + o.error_estimate,
            nodes_used: self.nodes_used + o.nodes_used,
        }
    }
}

fn gk15(f: &mut dyn FnMut(f64) -> Complex64, a: f64, b: f64) -> (Complex64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut kronrod = Complex64::new(0.0, 0.0);
    let mut gauss = Complex64::new(0.0, 0.0);
    for (j, (&x, &wk)) in XGK.iter().zip(WGK.iter()).enumerate() {
        let (fp, fm) = if x == 0.0 {
            let v = f(c);
            (v, Complex64::new(0.0, 0.0))
        } else {
            (f(c + h * x), f(c - h * x))
        };
        let pair = fp + fm;
        kronrod += wk * pair;
        if j % 2 == 1 {
            // Gauss-7 subset: j = 1, 3, 5 plus the center j = 7
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * h, (kronrod - gauss).norm() * h.abs())
}

/// Adaptive quadrature of `f` over `[a, b]` to absolute tolerance `tol`.
pub fn integrate(
    f: &mut dyn FnMut(f64) -> Complex64,
    a: f64,
    b: f64,
    tol: f64,
    max_nodes: usize,
) -> Result<QuadResult> {
    // worklist of (a, b, value, err), deterministic splitting order
    let (v0, e0) = gk15(f, a, b);
    let mut nodes = 15usize;
    let mut stack = vec![(a, b, v0, e0)];
    let mut done: Vec<(Complex64, f64)> = Vec::new();
    while let Some((xa, xb, v, e)) = stack.pop() {
        // proportional local tolerance with an absolute floor
        if e <= tol * (xb - xa).abs() / (b - a).abs() || e <= tol * 0.01 {
            done.push((v, e));
            continue;
        }
        if nodes >= max_nodes {
            // give up subdividing; keep the estimate honest
            done.push((v, e));
            continue;
        }
        let mid = 0.5 * (xa + xb);
        let (v1, e1) = gk15(f, xa, mid);
        let (v2, e2) = gk15(f, mid, xb);
        nodes += 30;
        stack.push((xa, mid, v1, e1));
        stack.push((mid, xb, v2, e2));
    }
    let value = done.iter().fold(Complex64::new(0.0, 0.0), |acc, d| acc + d.0);
    let err: f64 = done.iter().map(|d| d.1).sum();
    Ok(QuadResult { value, error_estimate: err, nodes_used: nodes })
}

/// Like [`integrate`] but fails when the error estimate misses `tol`.
pub fn integrate_checked(
    f: &mut dyn FnMut(f64) -> Complex64,
    a: f64,
    b: f64,
    tol: f64,
    max_nodes: usize,
) -> Result<QuadResult> {
    let r = integrate(f, a, b, tol, max_nodes)?;
    if r.error_estimate > tol * 10.0 {
        return Err(Error::QuadratureTolerance { tol, estimate: r.error_estimate });
    }
    Ok(r)
}

/// Argument-principle winding count of `f` around the circle
/// `|z - center| = radius`: `(1/2πi) ∮ f'/f dz`, rounded to the nearest
/// integer, certified to be within 0.25 of it.
pub fn winding_number(
    f: &dyn Fn(Complex64) -> (Complex64, Complex64),
    center: Complex64,
    radius: f64,
) -> Result<i64> {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut g = |t: f64| {
        let z = center + Complex64::from_polar(radius, t);
        let dz = Complex64::new(0.0, 1.0) * Complex64::from_polar(radius, t);
        let (v, d) = f(z);
        d / v * dz
    };
    let r = integrate(&mut g, 0.0, two_pi, 1e-6 * two_pi, 60_000)?;
    let w = r.value / Complex64::new(0.0, two_pi);
    let n = w.re.round();
    if (w.re - n).abs() > 0.25 || w.im.abs() > 0.25 {
        return Err(Error::Certification(format!(
            "winding integral {w} not close to an integer (center {center}, radius {radius})"
        )));
    }
    Ok(n as i64)
}

/// Winding count of `f` around a rectangle with corners `a` (bottom-left)
/// and `b` (top-right); used by argument-principle scans.
pub fn winding_number_rect(
    f: &dyn Fn(Complex64) -> (Complex64, Complex64),
    a: Complex64,
    b: Complex64,
) -> Result<i64> {
    let corners =
        [a, Complex64::new(b.re, a.im), b, Complex64::new(a.re, b.im), a];
    let mut total = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    for w in corners.windows(2) {
        let (p, q) = (w[0], w[1]);
        let mut g = |t: f64| {
            let z = p + (q - p) * t;
            let (v, d) = f(z);
            d / v * (q - p)
        };
        let r = integrate(&mut g, 0.0, 1.0, 1e-6, 60_000)?;
        total += r.value;
        err += r.error_estimate;
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    let w = total / Complex64::new(0.0, two_pi);
    let n = w.re.round();
    if (w.re - n).abs() > 0.25 + err || w.im.abs() > 0.25 + err {
        return Err(Error::Certification(format!("rectangle winding integral {w} ambiguous")));
    }
    Ok(n as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_gaussian() {
        let mut f = |t: f64| Complex64::new((-t * t).exp(), 0.0);
        let r = integrate(&mut f, -8.0, 8.0, 1e-12, 100_000).unwrap();
        let sqrt_pi = std::f64::consts::PI.sqrt();
        assert!((r.value.re - sqrt_pi).abs() < 1e-11, "got {}", r.value.re);
        assert!(r.value.im == 0.0);
    }

    #[test]
    fn integrates_oscillatory_complex() {
        // int_0^{2pi} e^{it} dt = 0, int_0^{2pi} e^{it} e^{-it} dt = 2pi
        let mut f = |t: f64| Complex64::from_polar(1.0, t);
        let r = integrate(&mut f, 0.0, 2.0 * std::f64::consts::PI, 1e-12, 100_000).unwrap();
        assert!(r.value.norm() < 1e-11);
    }

    #[test]
    fn winding_of_polynomial() {
        // f(z) = (z - 0.3)(z + 0.2i): two zeros inside |z| = 1, one inside |z - 0.3| = 0.1
        let f = |z: Complex64| {
            let a = z - Complex64::new(0.3, 0.0);
            let b = z + Complex64::new(0.0, 0.2);
            (a * b, a + b)
        };
        assert_eq!(winding_number(&f, Complex64::new(0.0, 0.0), 1.0).unwrap(), 2);
        assert_eq!(winding_number(&f, Complex64::new(0.3, 0.0), 0.1).unwrap(), 1);
        assert_eq!(winding_number(&f, Complex64::new(2.0, 0.0), 0.5).unwrap(), 0);
    }
}
