//! Modified Bessel function of the first kind for real order ν ≥ 0.
//!
//! The scaled form e^{−x} I_ν(x) is the primary routine: ascending power
//! series for moderate arguments, Hankel asymptotic expansion for large ones.

use super::gamma::ln_gamma_pos;
use crate::error::{Error, Result};
use crate::order::FnOrder;

/// Below this argument the power series is always used.
const SERIES_LIMIT: f64 = 30.0;
/// Largest argument for which the scaled series start term is representable.
const SERIES_MAX: f64 = 700.0;
const MAX_TERMS: usize = 5_000;

fn check(nu: f64, x: f64) -> Result<()> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(Error::domain(format!(
            "bessel_i requires order >= 0, got {nu}"
        )));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("bessel_i requires x >= 0, got {x}")));
    }
    Ok(())
}

/// e^{−x} I_ν(x).
pub fn bessel_i_scaled(nu: FnOrder, x: f64) -> Result<f64> {
    let nu = nu.value();
    check(nu, x)?;
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    if x > SERIES_LIMIT {
        if let Some(v) = asymptotic_scaled(nu, x) {
            return Ok(v);
        }
    }
    if x > SERIES_MAX {
        return Err(Error::NonConvergence {
            what: "bessel_i asymptotic expansion",
            terms: MAX_TERMS,
            partial: f64::NAN,
        });
    }
    series_scaled(nu, x)
}

/// I_ν(x); overflows (error) once x exceeds ≈ 700.
pub fn bessel_i(nu: FnOrder, x: f64) -> Result<f64> {
    let s = bessel_i_scaled(nu, x)?;
    if x > 709.0 {
        return Err(Error::Overflow(format!(
            "bessel_i({nu}, {x}) exceeds f64 range"
        )));
    }
    Ok(s * x.exp())
}

/// Σ_k (x/2)^{2k+ν} / (k! Γ(k+ν+1)), multiplied by e^{−x}.
fn series_scaled(nu: f64, x: f64) -> Result<f64> {
    let half = 0.5 * x;
    let q = half * half;
    let mut term = (nu * half.ln() - ln_gamma_pos(nu + 1.0) - x).exp();
    let mut sum = term;
    for k in 1..MAX_TERMS {
        let kf = k as f64;
        term *= q / (kf * (kf + nu));
        sum += term;
        if kf > half && term <= sum * 1e-17 {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        what: "bessel_i power series",
        terms: MAX_TERMS,
        partial: sum,
    })
}

/// Hankel expansion; `None` when the terms stop shrinking before reaching
/// double precision.
fn asymptotic_scaled(nu: f64, x: f64) -> Option<f64> {
    let mu = 4.0 * nu * nu;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..200 {
        let j = (2 * k - 1) as f64;
        term *= -(mu - j * j) / (k as f64 * 8.0 * x);
        let mag = term.abs();
        sum += term;
        if mag <= 1e-17 * sum.abs() {
            return Some(sum / (2.0 * std::f64::consts::PI * x).sqrt());
        }
        if mag > prev && k as f64 > nu {
            return None;
        }
        prev = mag;
    }
    None
}
