//! Incomplete Toronto function
//!
//! ```text
//! T_B(m,n,r) = 2 r^{n−m+1} e^{−r²} ∫_0^B t^{m−n} e^{−t²} I_n(2rt) dt
//!            = Σ_{k≥0} r^{2(n+k)−m+1} γ((m+1)/2 + k, B²) / (k! Γ(n+k+1) e^{r²})
//! ```
//!
//! The P-term polynomial form carries the same weight Γ(P+k) P^{1−2k}/Γ(P−k+1)
//! as the Nuttall polynomial form.

use crate::bound::BoundReport;
use crate::error::{Error, Result};
use crate::nuttall::{marcum_q, REFERENCE_TOL};
use crate::order::{floor_half, FnOrder};
use crate::series::{check_terms, exp_term, ln_poly_weight, sum_adaptive, SeriesResult};
use crate::special::{binomial, kummer_1f1, ln_factorial, ln_gamma_pos, lower_inc_gamma};
use std::f64::consts::{PI, SQRT_2};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorontoParams {
    pub m: f64,
    pub n: FnOrder,
    pub r: f64,
    pub big_b: f64,
}

impl TorontoParams {
    /// Validates r > 0, B > 0, n ≥ 0 and m − n > −1.
    pub fn new(m: f64, n: FnOrder, r: f64, big_b: f64) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::domain(format!("m must be finite, got {m}")));
        }
        if !(n.value() >= 0.0) || !n.value().is_finite() {
            return Err(Error::domain(format!("n must be >= 0, got {n}")));
        }
        if !(r > 0.0) || !r.is_finite() {
            return Err(Error::domain(format!("r must be > 0, got {r}")));
        }
        if !(big_b > 0.0) || !big_b.is_finite() {
            return Err(Error::domain(format!("B must be > 0, got {big_b}")));
        }
        if !(m - n.value() > -1.0) {
            return Err(Error::domain(format!(
                "m - n must exceed -1 (m = {m}, n = {n})"
            )));
        }
        Ok(TorontoParams { m, n, r, big_b })
    }
}

fn ln_series_term(p: &TorontoParams, k: usize) -> Result<f64> {
    let kf = k as f64;
    let n = p.n.value();
    let shape = 0.5 * (p.m + 1.0) + kf;
    let gamma = lower_inc_gamma(shape, p.big_b * p.big_b)?;
    Ok((2.0 * (n + kf) - p.m + 1.0) * p.r.ln() + gamma.ln()
        - ln_factorial(k as u64)
        - ln_gamma_pos(n + kf + 1.0)
        - p.r * p.r)
}

/// P-term polynomial form of T_B(m,n,r), k = 0..=P.
pub fn series_truncated(p: &TorontoParams, terms: usize) -> Result<SeriesResult> {
    check_terms(terms)?;
    let mut sum = 0.0;
    let mut last = 0.0;
    for k in 0..=terms {
        let t = exp_term(
            "toronto polynomial",
            k,
            ln_series_term(p, k)? + ln_poly_weight(terms, k),
        )?;
        sum += t;
        last = t;
    }
    Ok(SeriesResult {
        value: sum,
        terms_used: terms + 1,
        last_term_abs: last.abs(),
        converged: true,
    })
}

/// Exact series cut after k = P, without the polynomial weight. No stop rule is
/// applied, so `converged` is false.
pub fn series_partial(p: &TorontoParams, terms: usize) -> Result<SeriesResult> {
    check_terms(terms)?;
    let mut sum = 0.0;
    let mut last = 0.0;
    for k in 0..=terms {
        let t = exp_term("toronto series", k, ln_series_term(p, k)?)?;
        sum += t;
        last = t;
    }
    Ok(SeriesResult {
        value: sum,
        terms_used: terms + 1,
        last_term_abs: last.abs(),
        converged: false,
    })
}

/// Exact infinite series for T_B(m,n,r) with the three-consecutive-terms stop rule.
pub fn series_adaptive(p: &TorontoParams, tol: f64) -> Result<SeriesResult> {
    if !(tol >= 1e-14) {
        return Err(Error::domain(format!("tol must be >= 1e-14, got {tol:e}")));
    }
    sum_adaptive("toronto series", tol, |k| {
        exp_term("toronto series", k, ln_series_term(p, k)?)
    })
}

/// γ((l+1)/2, x)
fn head(l: u64, x: f64) -> Result<f64> {
    lower_inc_gamma(0.5 * (l as f64 + 1.0), x)
}

/// Exact T_B(m,n,r) for integer m and half-odd n with m ≥ 2n.
///
/// Uses the elementary form of I_{N+½} (see `nuttall::half_integer_closed`);
/// after the shift t = u ± r each piece is ∫ u^l e^{−u²} du over an interval
/// ending at ±r, which is a difference of γ((l+1)/2, ·) at r² and (B∓r)².
/// The inner power of t is m − N − 1 − k, so m ≥ 2N + 1 = 2n keeps it nonnegative.
pub fn closed_form_half(m: f64, n: FnOrder, r: f64, big_b: f64) -> Result<f64> {
    let p = TorontoParams::new(m, n, r, big_b)?;
    let m_int = FnOrder::new(p.m)
        .as_integer()
        .ok_or_else(|| Error::precondition(format!("m = {m} is not an integer")))?;
    let big_n = n
        .half_odd_index()
        .ok_or_else(|| Error::precondition(format!("n = {n} is not a half-odd integer")))?;
    if big_n < 0 || m_int < 2 * big_n + 1 {
        return Err(Error::precondition(format!(
            "closed form needs n >= 1/2 and m >= 2n (m = {m}, n = {n})"
        )));
    }
    let (m_int, big_n) = (m_int as u64, big_n as u64);
    let rr = r * r;
    let near = big_b - r;
    let near_sq = near * near;
    let far_sq = (big_b + r) * (big_b + r);
    let near_sign: f64 = if near > 0.0 {
        1.0
    } else if near < 0.0 {
        -1.0
    } else {
        0.0
    };
    let odd_n_sign = if big_n % 2 == 0 { -1.0 } else { 1.0 }; // (−1)^{N+1}
    let mut total = 0.0;
    for k in 0..=big_n {
        let c_k = (ln_factorial(big_n + k) - ln_factorial(k) - ln_factorial(big_n - k)).exp();
        let k_sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let j = m_int - big_n - 1 - k;
        let mut inner = 0.0;
        for l in 0..=j {
            let l_sign = if l % 2 == 0 { 1.0 } else { -1.0 };
            let g_r = head(l, rr)?;
            // ∫_{−r}^{B−r} u^l e^{−u²} du and ∫_{r}^{B+r} u^l e^{−u²} du
            let grow = 0.5 * (near_sign.powi(l as i32 + 1) * head(l, near_sq)? + l_sign * g_r);
            let decay = 0.5 * (head(l, far_sq)? - g_r);
            let shift_sign = if (j - l) % 2 == 0 { 1.0 } else { -1.0 };
            let pw = r.powi((j - l) as i32);
            inner += binomial(j, l) * pw * (k_sign * grow + odd_n_sign * shift_sign * decay);
        }
        total += c_k * (4.0 * r).powi(-(k as i32)) * inner;
    }
    Ok(total * 2.0 * r.powf(n.value() - m + 1.0) / (4.0 * PI * r).sqrt())
}

/// Truncation-error bound for the P-term polynomial form: the closed form at
/// (⌈m⌉, floor_half(n)) minus the polynomial value. The dominated quantity is
/// the adaptive series minus the same polynomial; the regime is m > n.
pub fn truncation_bound(p: &TorontoParams, terms: usize) -> Result<BoundReport> {
    let truncated = series_truncated(p, terms)?.value;
    let ceiling = closed_form_half(p.m.ceil(), floor_half(p.n.value()), p.r, p.big_b)?;
    let exact = series_adaptive(p, REFERENCE_TOL)?.value;
    Ok(BoundReport::new(
        ceiling - truncated,
        exact - truncated,
        p.m > p.n.value(),
    ))
}

/// Γ((m+1)/2) ₁F₁((m+1)/2; n+1; r²) / (r^{m−2n−1} Γ(n+1) e^{r²}).
///
/// This is T_∞(m,n,r); it bounds T_B from above for every B and does not depend on B.
pub fn upper_bound_1f1(m: f64, n: FnOrder, r: f64) -> Result<f64> {
    let nv = n.value();
    if !(m > -1.0 && nv >= 0.0 && r > 0.0) {
        return Err(Error::domain(
            "upper_bound_1f1 requires m > -1, n >= 0, r > 0",
        ));
    }
    let shape = 0.5 * (m + 1.0);
    let f = kummer_1f1(shape, nv + 1.0, r * r)?;
    Ok((ln_gamma_pos(shape) + f.ln()
        - (m - 2.0 * nv - 1.0) * r.ln()
        - ln_gamma_pos(nv + 1.0)
        - r * r)
        .exp())
}

/// m, n, r ≤ B/2.
pub fn bound_regime(p: &TorontoParams) -> bool {
    p.m.max(p.n.value()).max(p.r) <= 0.5 * p.big_b
}

/// m, n, r ≤ 2B, where the bound is also used as an approximation.
pub fn approximation_regime(p: &TorontoParams) -> bool {
    p.m.max(p.n.value()).max(p.r) <= 2.0 * p.big_b
}

/// The ₁F₁ bound against the adaptive series value.
pub fn upper_bound_report(p: &TorontoParams) -> Result<BoundReport> {
    let bound = upper_bound_1f1(p.m, p.n, p.r)?;
    let exact = series_adaptive(p, REFERENCE_TOL)?.value;
    Ok(BoundReport::new(bound, exact, bound_regime(p)))
}

/// |T_B(m, (m−1)/2, r) + Q_{(m+1)/2}(r√2, B√2) − 1|, both sides by adaptive series.
pub fn marcum_residual(m: f64, r: f64, big_b: f64) -> Result<f64> {
    if !(m >= 1.0) {
        return Err(Error::domain(format!(
            "Marcum identity needs m >= 1, got {m}"
        )));
    }
    let p = TorontoParams::new(m, FnOrder::new(0.5 * (m - 1.0)), r, big_b)?;
    let t = series_adaptive(&p, REFERENCE_TOL)?.value;
    let q = marcum_q(0.5 * (m + 1.0), r * SQRT_2, big_b * SQRT_2, REFERENCE_TOL)?;
    Ok((t + q - 1.0).abs())
}
