//! Nuttall Q-function Q_{m,n}(a,b) and its normalized form 𝒬_{m,n} = Q_{m,n}/a^n.
//!
//! Series (normalized), with s_l = (m+n+2l+1)/2:
//!
//! ```text
//! 𝒬_{m,n}(a,b) = Σ_{l≥0} a^{2l} e^{−a²/2} Γ(s_l, b²/2) / (l! Γ(n+l+1) 2^{(n−m+2l+1)/2})
//! ```
//!
//! The P-term polynomial form multiplies term l by Γ(P+l) P^{1−2l} / Γ(P−l+1),
//! a weight that tends to 1 only as P → ∞, so its error is O(l³/P²) per term
//! rather than the size of the omitted tail.

use crate::bound::BoundReport;
use crate::error::{Error, Result};
use crate::order::{ceil_half, FnOrder};
use crate::series::{check_terms, exp_term, ln_poly_weight, sum_adaptive, SeriesResult};
use crate::special::{
    bessel_i_scaled, binomial, kummer_1f1, ln_factorial, ln_gamma_pos, ln_lower_inc_gamma,
    ln_upper_inc_gamma,
};
use std::f64::consts::{LN_2, PI};

pub use crate::series::MAX_TERMS;

/// Tolerance used for the "exact" reference inside bound reports.
pub const REFERENCE_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuttallParams {
    pub m: f64,
    pub n: FnOrder,
    pub a: f64,
    pub b: f64,
}

impl NuttallParams {
    /// Validates a > 0, b ≥ 0, n ≥ 0 and m + n + 1 > 0 (first gamma shape positive).
    pub fn new(m: f64, n: FnOrder, a: f64, b: f64) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::domain(format!("m must be finite, got {m}")));
        }
        if !(n.value() >= 0.0) || !n.value().is_finite() {
            return Err(Error::domain(format!("n must be >= 0, got {n}")));
        }
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::domain(format!("a must be > 0, got {a}")));
        }
        if !(b >= 0.0) || !b.is_finite() {
            return Err(Error::domain(format!("b must be >= 0, got {b}")));
        }
        if !(m + n.value() + 1.0 > 0.0) {
            return Err(Error::domain("m + n + 1 must be positive"));
        }
        Ok(NuttallParams { m, n, a, b })
    }

    fn with_orders(&self, m: f64, n: f64) -> Result<Self> {
        NuttallParams::new(m, FnOrder::new(n), self.a, self.b)
    }
}

/// ln of the l-th exact-series term.
fn ln_series_term(p: &NuttallParams, l: usize) -> Result<f64> {
    let lf = l as f64;
    let n = p.n.value();
    let shape = 0.5 * (p.m + n + 2.0 * lf + 1.0);
    let ln_power = if l == 0 { 0.0 } else { 2.0 * lf * p.a.ln() };
    Ok(
        ln_power - 0.5 * p.a * p.a + ln_upper_inc_gamma(shape, 0.5 * p.b * p.b)?
            - ln_factorial(l as u64)
            - ln_gamma_pos(n + lf + 1.0)
            - 0.5 * (n - p.m + 2.0 * lf + 1.0) * LN_2,
    )
}

/// P-term polynomial form of 𝒬_{m,n}(a,b), l = 0..=P.
pub fn series_truncated(p: &NuttallParams, terms: usize) -> Result<SeriesResult> {
    check_terms(terms)?;
    let mut sum = 0.0;
    let mut last = 0.0;
    for l in 0..=terms {
        let t = exp_term(
            "nuttall polynomial",
            l,
            ln_series_term(p, l)? + ln_poly_weight(terms, l),
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

/// Exact series cut after l = P, without the polynomial weight. No stop rule is
/// applied, so `converged` is false.
pub fn series_partial(p: &NuttallParams, terms: usize) -> Result<SeriesResult> {
    check_terms(terms)?;
    let mut sum = 0.0;
    let mut last = 0.0;
    for l in 0..=terms {
        let t = exp_term("nuttall series", l, ln_series_term(p, l)?)?;
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

/// Exact infinite series for 𝒬_{m,n}(a,b), summed until three consecutive
/// terms fall below `tol` relative to the partial sum.
pub fn series_adaptive(p: &NuttallParams, tol: f64) -> Result<SeriesResult> {
    if !(tol >= 1e-14) {
        return Err(Error::domain(format!("tol must be >= 1e-14, got {tol:e}")));
    }
    sum_adaptive("nuttall series", tol, |l| {
        exp_term("nuttall series", l, ln_series_term(p, l)?)
    })
}

/// Unnormalized Q_{m,n}(a,b) = a^n 𝒬_{m,n}(a,b) from the adaptive series.
pub fn nuttall_q(p: &NuttallParams, tol: f64) -> Result<f64> {
    let s = series_adaptive(p, tol)?;
    Ok(denormalize(s.value, p))
}

/// Multiplies a normalized value by a^n.
pub fn denormalize(normalized: f64, p: &NuttallParams) -> f64 {
    normalized * (p.n.value() * p.a.ln()).exp()
}

/// Integer-order double series: Γ(s, x) with integer s is expanded into the
/// finite sum (s−1)! e^{−x} Σ_{k<s} x^k/k!, giving an inner sum up to
/// L = (m+n−1)/2 + l. Requires nonnegative integers m, n with m + n odd.
///
/// The outer coefficient is 2^{(m−n−1)/2} e^{−(a²+b²)/2}; this is the
/// normalized function, so no a^n factor appears.
pub fn integer_series(p: &NuttallParams, terms: usize) -> Result<SeriesResult> {
    check_terms(terms)?;
    let (m, n) = match (FnOrder::new(p.m).as_integer(), p.n.as_integer()) {
        (Some(m), Some(n)) if m >= 0 && n >= 0 => (m, n),
        _ => {
            return Err(Error::precondition(
                "integer series needs nonnegative integer m, n",
            ))
        }
    };
    if (m + n) % 2 == 0 {
        return Err(Error::precondition(format!(
            "integer series needs m + n odd so that L is an integer (m = {m}, n = {n})"
        )));
    }
    let half_sq = 0.5 * p.b * p.b;
    let base = ((m + n - 1) / 2) as usize;
    let ln_outer_const = 0.5 * (m - n - 1) as f64 * LN_2 - 0.5 * (p.a * p.a + p.b * p.b);
    let mut sum = 0.0;
    let mut last = 0.0;
    // inner Σ_{k=0}^{L} (b²/2)^k / k!, extended incrementally as L grows with l
    let mut inner = 0.0;
    let mut inner_term = 1.0;
    let mut inner_len = 0usize;
    for l in 0..=terms {
        let upper = base + l;
        while inner_len <= upper {
            if inner_len > 0 {
                inner_term *= half_sq / inner_len as f64;
            }
            inner += inner_term;
            inner_len += 1;
        }
        let lf = l as f64;
        let ln_power = if l == 0 { 0.0 } else { 2.0 * lf * p.a.ln() };
        let ln_outer = ln_outer_const
            + ln_power
            + ln_poly_weight(terms, l)
            + ln_gamma_pos(0.5 * (m + n + 1) as f64 + lf)
            - ln_factorial(l as u64)
            - ln_gamma_pos(n as f64 + lf + 1.0)
            - lf * LN_2;
        let t = exp_term("nuttall integer series", l, ln_outer)? * inner;
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

/// J_l(c) = ∫_c^∞ u^l e^{−u²/2} du.
fn gaussian_moment_tail(l: u64, c: f64) -> Result<f64> {
    let shape = 0.5 * (l as f64 + 1.0);
    let scale = (0.5 * (l as f64 - 1.0) * LN_2).exp();
    let x = 0.5 * c * c;
    if c >= 0.0 {
        Ok(scale * ln_upper_inc_gamma(shape, x)?.exp())
    } else {
        let sign = (-1f64).powi(l as i32);
        Ok(scale * (ln_gamma_pos(shape).exp() + sign * ln_lower_inc_gamma(shape, x)?.exp()))
    }
}

/// Exact 𝒬_{m,n}(a,b) for half-odd-integer m ≥ n.
///
/// With n = N + ½ the Bessel function is elementary,
/// I_n(z) = (2πz)^{−½} Σ_{k=0}^{N} c_k (2z)^{−k} [(−1)^k e^{z} + (−1)^{N+1} e^{−z}],
/// c_k = (N+k)!/(k!(N−k)!). Each piece leaves ∫_b^∞ x^{M−k} e^{−(x∓a)²/2} dx
/// (M = m − ½), which a binomial expansion about x = ±a turns into incomplete
/// gamma functions: Γ(·, (b+a)²/2) on the e^{−z} side, and Γ(·) − sgn(b−a)^{l+1}
/// γ(·, (b−a)²/2) on the e^{z} side.
pub fn half_integer_closed(p: &NuttallParams) -> Result<f64> {
    let big_m = FnOrder::new(p.m)
        .half_odd_index()
        .ok_or_else(|| Error::precondition(format!("m = {} is not a half-odd integer", p.m)))?;
    let big_n =
        p.n.half_odd_index()
            .ok_or_else(|| Error::precondition(format!("n = {} is not a half-odd integer", p.n)))?;
    if big_n < 0 {
        return Err(Error::precondition("n must be at least 1/2"));
    }
    if big_m < big_n {
        return Err(Error::precondition(format!(
            "closed form needs m >= n (m = {}, n = {})",
            p.m, p.n
        )));
    }
    let (big_m, big_n) = (big_m as u64, big_n as u64);
    let a = p.a;
    let near = p.b - a;
    let far = p.b + a;
    let odd_n_sign = if big_n % 2 == 0 { -1.0 } else { 1.0 }; // (−1)^{N+1}
    let mut total = 0.0;
    for k in 0..=big_n {
        let c_k = (ln_factorial(big_n + k) - ln_factorial(k) - ln_factorial(big_n - k)).exp();
        let k_sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let j = big_m - k;
        let mut inner = 0.0;
        for l in 0..=j {
            let w = binomial(j, l) * a.powi((j - l) as i32);
            let far_sign = if (j - l) % 2 == 0 { 1.0 } else { -1.0 };
            inner += w
                * (k_sign * gaussian_moment_tail(l, near)?
                    + odd_n_sign * far_sign * gaussian_moment_tail(l, far)?);
        }
        total += c_k * (2.0 * a).powi(-(k as i32)) * inner;
    }
    Ok(total * a.powf(-p.n.value() - 0.5) / (2.0 * PI).sqrt())
}

/// Truncation-error bound for the P-term polynomial form: the exact closed
/// form at the half-odd ceilings of (m, n) minus the polynomial value.
/// The dominated quantity is the adaptive series minus the same polynomial.
pub fn truncation_bound(p: &NuttallParams, terms: usize) -> Result<BoundReport> {
    let truncated = series_truncated(p, terms)?.value;
    let rounded = p.with_orders(ceil_half(p.m).value(), ceil_half(p.n.value()).value())?;
    let ceiling = half_integer_closed(&rounded)?;
    let exact = series_adaptive(p, REFERENCE_TOL)?.value;
    Ok(BoundReport::new(
        ceiling - truncated,
        exact - truncated,
        p.b > 0.0,
    ))
}

/// Γ((m+n+1)/2) ₁F₁((m+n+1)/2; n+1; a²/2) / (Γ(n+1) 2^{(n−m+1)/2} e^{a²/2}).
///
/// Upper bound on 𝒬_{m,n}(a,b) for every b (equality at b = 0); independent of b.
pub fn upper_bound_1f1(m: f64, n: FnOrder, a: f64) -> Result<f64> {
    let nv = n.value();
    if !(m > 0.0 && nv >= 0.0 && a > 0.0) {
        return Err(Error::domain(
            "upper_bound_1f1 requires m > 0, n >= 0, a > 0",
        ));
    }
    let shape = 0.5 * (m + nv + 1.0);
    let x = 0.5 * a * a;
    let f = kummer_1f1(shape, nv + 1.0, x)?;
    Ok(
        (ln_gamma_pos(shape) + f.ln() - ln_gamma_pos(nv + 1.0) - 0.5 * (nv - m + 1.0) * LN_2 - x)
            .exp(),
    )
}

/// b ≤ (2/3)·min(a, m, n): our reading of the "b → 0 | a, m, n ≥ 3b/2" regime.
pub fn bound_regime(p: &NuttallParams) -> bool {
    p.b <= (2.0 / 3.0) * p.a.min(p.m).min(p.n.value())
}

/// a, m, n ≥ (5/2)·b, where the bound is also used as an approximation.
pub fn approximation_regime(p: &NuttallParams) -> bool {
    p.a.min(p.m).min(p.n.value()) >= 2.5 * p.b
}

/// The ₁F₁ bound against the adaptive series value.
pub fn upper_bound_report(p: &NuttallParams) -> Result<BoundReport> {
    let bound = upper_bound_1f1(p.m, p.n, p.a)?;
    let exact = series_adaptive(p, REFERENCE_TOL)?.value;
    Ok(BoundReport::new(bound, exact, bound_regime(p)))
}

/// |Q_{m,n} − b^{m−1} I_n(ab) e^{−(a²+b²)/2} − a Q_{m−1,n+1} − (m+n−1) Q_{m−2,n}|
/// with every Q from the adaptive series at `REFERENCE_TOL`.
pub fn recursion_residual(p: &NuttallParams) -> Result<f64> {
    let (m, n) = match (FnOrder::new(p.m).as_integer(), p.n.as_integer()) {
        (Some(m), Some(n)) if m >= 2 && n >= 0 => (m as f64, n as f64),
        _ => {
            return Err(Error::precondition(
                "recursion needs integer m >= 2 and integer n >= 0",
            ))
        }
    };
    let q = |mm: f64, nn: f64| -> Result<f64> { nuttall_q(&p.with_orders(mm, nn)?, REFERENCE_TOL) };
    let boundary = if p.b == 0.0 {
        0.0
    } else {
        p.b.powf(m - 1.0) * (-0.5 * (p.a - p.b).powi(2)).exp() * bessel_i_scaled(p.n, p.a * p.b)?
    };
    let lhs = q(m, n)?;
    let rhs = boundary + p.a * q(m - 1.0, n + 1.0)? + (m + n - 1.0) * q(m - 2.0, n)?;
    Ok((lhs - rhs).abs())
}

/// Generalized Marcum Q_m(a,b) = 𝒬_{m,m−1}(a,b), m ≥ 1, by the adaptive series.
///
/// The value is returned as computed; it is never clamped to [0, 1].
pub fn marcum_q(m: f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    if !(m >= 1.0) {
        return Err(Error::domain(format!("Marcum order must be >= 1, got {m}")));
    }
    let p = NuttallParams::new(m, FnOrder::new(m - 1.0), a, b)?;
    Ok(series_adaptive(&p, tol)?.value)
}
