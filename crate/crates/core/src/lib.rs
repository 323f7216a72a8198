//! Series evaluation, truncation-error bounds and ₁F₁ bounds for the
//! Nuttall Q-function, the Marcum Q-function and the incomplete Toronto
//! function, refereed by adaptive quadrature of their defining integrals.
//!
//! ```
//! use qbounds::{nuttall, FnOrder};
//!
//! let p = nuttall::NuttallParams::new(1.0, FnOrder::new(0.0), 1.0, 1.0).unwrap();
//! let q = nuttall::series_adaptive(&p, 1e-14).unwrap();
//! assert!((q.value - 0.732_879_803_796_820_2).abs() < 1e-14);
//! ```

// `!(x >= 0.0)` is used on purpose so that NaN is rejected
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bound;
pub mod error;
pub mod nuttall;
pub mod oracle;
pub mod order;
pub mod series;
pub mod special;
pub mod toronto;

pub use bound::BoundReport;
pub use error::{Error, Result};
pub use oracle::OracleValue;
pub use order::{ceil_half, floor_half, FnOrder, OrderClass};
pub use series::SeriesResult;
