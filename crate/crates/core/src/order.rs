//! Real-valued function orders and half-integer rounding.

use std::fmt;

/// Tolerance used when classifying an order as integer or half-odd-integer.
pub const ORDER_CLASS_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderClass {
    Integer,
    HalfOddInteger,
    General,
}

/// A real order parameter such as `m` or `n` of `Q_{m,n}` and `T_B(m, n, r)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct FnOrder(f64);

impl FnOrder {
    pub const fn new(value: f64) -> Self {
        FnOrder(value)
    }

    pub const fn value(self) -> f64 {
        self.0
    }

    pub fn class(self) -> OrderClass {
        if (self.0 - self.0.round()).abs() <= ORDER_CLASS_TOL {
            OrderClass::Integer
        } else {
            let shifted = self.0 - 0.5;
            if (shifted - shifted.round()).abs() <= ORDER_CLASS_TOL {
                OrderClass::HalfOddInteger
            } else {
                OrderClass::General
            }
        }
    }

    pub fn is_integer(self) -> bool {
        self.class() == OrderClass::Integer
    }

    pub fn is_half_odd(self) -> bool {
        self.class() == OrderClass::HalfOddInteger
    }

    /// For a half-odd order `N + 1/2`, returns `N`.
    pub fn half_odd_index(self) -> Option<i64> {
        self.is_half_odd().then(|| (self.0 - 0.5).round() as i64)
    }

    /// For an integer order, returns it as `i64`.
    pub fn as_integer(self) -> Option<i64> {
        self.is_integer().then(|| self.0.round() as i64)
    }
}

impl From<f64> for FnOrder {
    fn from(v: f64) -> Self {
        FnOrder(v)
    }
}

impl fmt::Display for FnOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Smallest half-odd-integer not below `n`: `ceil(n - 0.5) + 0.5`.
pub fn ceil_half(n: f64) -> FnOrder {
    FnOrder((n - 0.5).ceil() + 0.5)
}

/// Largest half-odd-integer not above `n`: `floor(n + 0.5) - 0.5`.
pub fn floor_half(n: f64) -> FnOrder {
    FnOrder((n + 0.5).floor() - 0.5)
}
