//! Ground truth by adaptive quadrature of the defining integrals.
//!
//! Nuttall:  Q_{m,n}(a,b) = ∫_b^∞ x^m e^{−(x²+a²)/2} I_n(ax) dx
//! Toronto:  T_B(m,n,r)   = 2 r^{n−m+1} e^{−r²} ∫_0^B t^{m−n} e^{−t²} I_n(2rt) dt
//! Marcum:   Q_m(a,b)     = a^{1−m} Q_{m,m−1}(a,b)
//!
//! Exponentials are paired with the scaled Bessel function, e.g.
//! e^{−(x²+a²)/2} I_n(ax) = e^{−(x−a)²/2} · [e^{−ax} I_n(ax)], so no factor
//! leaves the f64 range anywhere in the supported parameter box.

pub mod golden;
mod quad;

pub use quad::Scheme;

use crate::error::{Error, Result};
use crate::order::FnOrder;
use crate::special::bessel_i_scaled;

/// Supported box for order parameters.
pub const ORDER_RANGE: (f64, f64) = (0.0, 10.0);
pub const A_MAX: f64 = 6.0;
pub const B_MAX: f64 = 8.0;
pub const TOL_RANGE: (f64, f64) = (1e-14, 1e-6);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleValue {
    pub value: f64,
    /// Quadrature error estimate plus the tail bound.
    pub abs_err_est: f64,
    pub subdivisions: usize,
    /// Majorant of the discarded tail (zero for finite integrals).
    pub tail_bound: f64,
}

fn check_tol(tol: f64) -> Result<()> {
    if !(TOL_RANGE.0..=TOL_RANGE.1).contains(&tol) {
        return Err(Error::domain(format!(
            "oracle tolerance must lie in [{:e}, {:e}], got {tol:e}",
            TOL_RANGE.0, TOL_RANGE.1
        )));
    }
    Ok(())
}

fn check_order(name: &str, v: f64) -> Result<()> {
    if !(ORDER_RANGE.0..=ORDER_RANGE.1).contains(&v) {
        return Err(Error::domain(format!(
            "oracle: {name} = {v} outside [0, 10]"
        )));
    }
    Ok(())
}

fn check_nuttall_box(m: f64, n: FnOrder, a: f64, b: f64) -> Result<()> {
    check_order("m", m)?;
    check_order("n", n.value())?;
    if !(a > 0.0 && a <= A_MAX) {
        return Err(Error::domain(format!(
            "oracle: a = {a} outside (0, {A_MAX}]"
        )));
    }
    if !(0.0..=B_MAX).contains(&b) {
        return Err(Error::domain(format!(
            "oracle: b = {b} outside [0, {B_MAX}]"
        )));
    }
    Ok(())
}

/// Upper bound on ∫_U^∞ x^m e^{−(x−a)²/2} dx, valid once the log-integrand is
/// decreasing at U. Uses e^{−z} I_n(z) ≤ 1 for n ≥ 0.
fn gaussian_tail_majorant(m: f64, a: f64, upper: f64) -> f64 {
    let slope = (upper - a) - m / upper;
    if slope <= 0.0 {
        return f64::INFINITY;
    }
    (m * upper.ln() - 0.5 * (upper - a).powi(2)).exp() / slope
}

fn finish(
    value: f64,
    quad_err: f64,
    tail: f64,
    panels: usize,
    met: bool,
    tol: f64,
) -> Result<OracleValue> {
    let total = quad_err + tail;
    if !value.is_finite() {
        return Err(Error::domain(
            "oracle integrand produced a non-finite value",
        ));
    }
    if !met || total > tol {
        return Err(Error::ToleranceNotMet {
            best: value,
            achieved: total,
            requested: tol,
        });
    }
    Ok(OracleValue {
        value,
        abs_err_est: total,
        subdivisions: panels,
        tail_bound: tail,
    })
}

pub(crate) fn nuttall_raw(
    scheme: Scheme,
    m: f64,
    n: FnOrder,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<OracleValue> {
    let start = b.max(a).max(1.0);
    let ceiling = b.max(a + 40.0);
    let mut upper = start + 1.0;
    let mut tail = gaussian_tail_majorant(m, a, upper);
    while tail >= 0.5 * tol && upper < ceiling {
        upper += 1.0;
        tail = gaussian_tail_majorant(m, a, upper);
    }
    if tail >= 0.5 * tol {
        return Err(Error::ToleranceNotMet {
            best: f64::NAN,
            achieved: tail,
            requested: tol,
        });
    }
    let integrand = |x: f64| {
        let s = bessel_i_scaled(n, a * x).unwrap_or(f64::NAN);
        x.powf(m) * (-0.5 * (x - a).powi(2)).exp() * s
    };
    let out = quad::integrate(scheme, &integrand, b, upper, 0.5 * tol);
    finish(out.value, out.abs_err, tail, out.panels, out.met, tol)
}

/// Q_{m,n}(a, b) by quadrature, default scheme.
pub fn oracle_nuttall(m: f64, n: FnOrder, a: f64, b: f64, tol: f64) -> Result<OracleValue> {
    oracle_nuttall_with(Scheme::GlobalKronrod, m, n, a, b, tol)
}

pub fn oracle_nuttall_with(
    scheme: Scheme,
    m: f64,
    n: FnOrder,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<OracleValue> {
    check_tol(tol)?;
    check_nuttall_box(m, n, a, b)?;
    nuttall_raw(scheme, m, n, a, b, tol)
}

/// T_B(m, n, r) by quadrature, default scheme.
pub fn oracle_toronto(m: f64, n: FnOrder, r: f64, big_b: f64, tol: f64) -> Result<OracleValue> {
    oracle_toronto_with(Scheme::GlobalKronrod, m, n, r, big_b, tol)
}

pub fn oracle_toronto_with(
    scheme: Scheme,
    m: f64,
    n: FnOrder,
    r: f64,
    big_b: f64,
    tol: f64,
) -> Result<OracleValue> {
    check_tol(tol)?;
    check_order("m", m)?;
    check_order("n", n.value())?;
    if !(r > 0.0 && r <= A_MAX) {
        return Err(Error::domain(format!(
            "oracle: r = {r} outside (0, {A_MAX}]"
        )));
    }
    if !(big_b > 0.0 && big_b <= B_MAX) {
        return Err(Error::domain(format!(
            "oracle: B = {big_b} outside (0, {B_MAX}]"
        )));
    }
    if !(m - n.value() > -1.0) {
        return Err(Error::domain("oracle: T_B requires m - n > -1"));
    }
    let power = m - n.value();
    let pref = 2.0 * r.powf(n.value() - m + 1.0);
    let integrand = |t: f64| {
        let s = bessel_i_scaled(n, 2.0 * r * t).unwrap_or(f64::NAN);
        t.powf(power) * (-(t - r).powi(2)).exp() * s
    };
    let out = quad::integrate(scheme, &integrand, 0.0, big_b, tol / pref);
    finish(
        pref * out.value,
        pref * out.abs_err,
        0.0,
        out.panels,
        out.met,
        tol,
    )
}

/// Q_m(a, b) by quadrature, default scheme.
pub fn oracle_marcum(m: f64, a: f64, b: f64, tol: f64) -> Result<OracleValue> {
    oracle_marcum_with(Scheme::GlobalKronrod, m, a, b, tol)
}

pub fn oracle_marcum_with(scheme: Scheme, m: f64, a: f64, b: f64, tol: f64) -> Result<OracleValue> {
    check_tol(tol)?;
    if !(m >= 1.0) {
        return Err(Error::domain(format!(
            "oracle: Marcum order must be >= 1, got {m}"
        )));
    }
    let n = FnOrder::new(m - 1.0);
    check_nuttall_box(m, n, a, b)?;
    let scale = a.powf(m - 1.0);
    let raw = nuttall_raw(scheme, m, n, a, b, tol * scale)?;
    Ok(OracleValue {
        value: raw.value / scale,
        abs_err_est: raw.abs_err_est / scale,
        subdivisions: raw.subdivisions,
        tail_bound: raw.tail_bound / scale,
    })
}
