//! Numerical laboratory for the critical-window behavior of partial sums of
//! entire functions: erfc-ratio limits, saddle-point contour geometry,
//! Cauchy-transform machinery, and section zero clouds.
//!
//! The library is organized around six subsystems:
//!
//! * [`special`] — complex special functions (erfc and its zeros, the Gaussian
//!   Cauchy transform, Mittag-Leffler, log-gamma).
//! * [`models`] — entire-function models: coefficients, growth profiles and
//!   direct evaluators.
//! * [`saddle`] — the saddle function `phi`, level/descent curve tracing, the
//!   conformal chart, and admissible contour construction.
//! * [`sections`] — overflow-safe section evaluation in the critical window,
//!   zero clouds and the zero-distribution experiments.
//! * [`rh`] — the Cauchy-integral objects `F_n`, `G_n`, `P_n`, their jump
//!   relations, and decay-rate verification suites.
//! * [`runio`] / [`config`] / [`selftest`] — experiment configuration, data
//!   emission with manifests, and the fast invariant suite.
//!
//! All numerical kernels run on a shared precision ladder
//! (f64 → double-double → 256-bit → 512-bit), escalating only when an
//! accuracy certificate fails. Everything is deterministic: identical inputs
//! produce identical outputs regardless of thread count.

pub mod cplx;
pub mod error;
pub mod ladder;
pub mod quad;
pub mod series;
pub mod special;

pub use cplx::{Complex64, LogComplex};
pub use error::{Error, Result};
pub use ladder::Precision;
