//! Convergence bookkeeping shared by every series evaluation.

use crate::error::{Error, Result};
use crate::special::ln_gamma_pos;

/// Term cap for the adaptive (infinite) series.
pub const MAX_SERIES_TERMS: usize = 10_000;

/// Number of consecutive sub-threshold terms that ends an adaptive sum.
pub const STOP_RUN: usize = 3;

/// Largest log-magnitude a single term may reach before it is treated as overflow.
pub const MAX_TERM_LOG: f64 = 700.0;

/// Largest truncation order accepted by the polynomial forms.
pub const MAX_TERMS: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: f64,
    pub terms_used: usize,
    pub last_term_abs: f64,
    pub converged: bool,
}

/// Sums `term(0), term(1), ...` until `STOP_RUN` consecutive terms are below
/// `tol * |sum|` while no longer growing.
pub(crate) fn sum_adaptive<F>(what: &'static str, tol: f64, mut term: F) -> Result<SeriesResult>
where
    F: FnMut(usize) -> Result<f64>,
{
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut run = 0;
    let mut prev = f64::INFINITY;
    for k in 0..MAX_SERIES_TERMS {
        let t = term(k)?;
        // Neumaier summation
        let s = sum + t;
        if sum.abs() >= t.abs() {
            comp += (sum - s) + t;
        } else {
            comp += (t - s) + sum;
        }
        sum = s;
        let total = sum + comp;
        if t.abs() <= tol * total.abs() && t.abs() <= prev {
            run += 1;
        } else {
            run = 0;
        }
        prev = t.abs();
        if run >= STOP_RUN || (t == 0.0 && total == 0.0 && k >= STOP_RUN) {
            return Ok(SeriesResult {
                value: total,
                terms_used: k + 1,
                last_term_abs: t.abs(),
                converged: true,
            });
        }
    }
    Err(Error::NonConvergence {
        what,
        terms: MAX_SERIES_TERMS,
        partial: sum + comp,
    })
}

/// Exponentiates a log-term after checking it against `MAX_TERM_LOG`.
pub(crate) fn exp_term(what: &str, index: usize, ln_term: f64) -> Result<f64> {
    if ln_term.is_nan() {
        return Err(Error::domain(format!("{what}: term {index} is undefined")));
    }
    if ln_term > MAX_TERM_LOG {
        return Err(Error::Overflow(format!(
            "{what}: log of term {index} is {ln_term:.3}"
        )));
    }
    Ok(ln_term.exp())
}

pub(crate) fn check_terms(terms: usize) -> Result<()> {
    if terms == 0 || terms > MAX_TERMS {
        return Err(Error::domain(format!(
            "terms must lie in 1..={MAX_TERMS}, got {terms}"
        )));
    }
    Ok(())
}

/// ln[Γ(P+l) P^{1−2l} / Γ(P−l+1)], the weight of term l in a P-term polynomial form.
pub(crate) fn ln_poly_weight(terms: usize, l: usize) -> f64 {
    let pf = terms as f64;
    let lf = l as f64;
    ln_gamma_pos(pf + lf) + (1.0 - 2.0 * lf) * pf.ln() - ln_gamma_pos(pf - lf + 1.0)
}
