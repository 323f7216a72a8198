use crate::error::{Error, Result};

const MAX_TERMS: usize = 10_000;
const REL_CUTOFF: f64 = 1e-16;

/// Kummer's ₁F₁(a; b; x) = Σ (a)_i / (b)_i · x^i / i! by the ascending series.
///
/// Only x ≥ 0 is accepted; there is no transformation for large negative
/// arguments.
pub fn kummer_1f1(a: f64, b: f64, x: f64) -> Result<f64> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::domain(format!(
            "kummer_1f1 requires finite x >= 0, got {x}"
        )));
    }
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::domain("kummer_1f1 requires finite parameters"));
    }
    if b <= 0.0 && b == b.round() {
        return Err(Error::domain(format!("kummer_1f1 has a pole at b = {b}")));
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for i in 0..MAX_TERMS {
        let fi = i as f64;
        let ratio = (a + fi) * x / ((b + fi) * (fi + 1.0));
        term *= ratio;
        sum += term;
        if term == 0.0 || (term.abs() < REL_CUTOFF * sum.abs() && ratio.abs() < 1.0) {
            return Ok(sum);
        }
        if !sum.is_finite() {
            return Err(Error::Overflow(format!("kummer_1f1({a}, {b}, {x})")));
        }
    }
    Err(Error::NonConvergence {
        what: "kummer_1f1 series",
        terms: MAX_TERMS,
        partial: sum,
    })
}
