//! Complex special functions: erfc and its zeros, the Gaussian Cauchy
//! transform, Mittag-Leffler, log-gamma.
//!
//! Everything here is a pure function of its arguments.

pub mod cauchy_h;
pub mod erfc;
pub mod erfc_zeros;
pub mod gamma;
pub mod mittag_leffler;

pub use cauchy_h::gaussian_cauchy_h;
pub use erfc::{erfc, erfc_prime, erfcx};
pub use erfc_zeros::{erfc_zeros, ErfcZeroList};
pub use gamma::{ln_gamma_real, log_gamma};
pub use mittag_leffler::{mittag_leffler, mittag_leffler_ln};
