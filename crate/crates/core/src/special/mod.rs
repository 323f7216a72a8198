//! Scalar special-function kernel.
//!
//! | Function | Description |
//! |----------|-------------|
//! | [`ln_gamma`] | ln Γ(x), x > 0 |
//! | [`upper_inc_gamma`] | Γ(a, x) |
//! | [`lower_inc_gamma`] | γ(a, x) |
//! | [`bessel_i`], [`bessel_i_scaled`] | I_ν(x) and e^{−x} I_ν(x) |
//! | [`kummer_1f1`] | ₁F₁(a; b; x), x ≥ 0 |
//! | [`pochhammer_log`] | ln (a)_k |
//!
//! All functions are pure and thread-safe.

mod bessel;
mod gamma;
mod hyper;
mod incgamma;

pub use bessel::{bessel_i, bessel_i_scaled};
pub use gamma::{gamma, ln_gamma, pochhammer_log};
pub use hyper::kummer_1f1;
pub use incgamma::{
    gamma_p, gamma_q, ln_lower_inc_gamma, ln_upper_inc_gamma, lower_inc_gamma, upper_inc_gamma,
};

pub(crate) use gamma::{binomial, ln_factorial, ln_gamma_pos};
