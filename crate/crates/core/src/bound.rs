/// A bound paired with the quantity it is claimed to dominate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub bound_value: f64,
    pub dominated_quantity: f64,
    /// Whether the parameters sit inside the regime where the bound is asserted.
    pub regime_ok: bool,
    /// `bound_value - dominated_quantity`
    pub slack: f64,
}

impl BoundReport {
    pub fn new(bound_value: f64, dominated_quantity: f64, regime_ok: bool) -> Self {
        BoundReport {
            bound_value,
            dominated_quantity,
            regime_ok,
            slack: bound_value - dominated_quantity,
        }
    }

    /// Holds up to roundoff scaled by the bound magnitude.
    pub fn holds(&self, abs_tol: f64) -> bool {
        self.slack >= -abs_tol * self.bound_value.abs().max(1.0)
    }
}
