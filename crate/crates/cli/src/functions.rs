//! Maps (function, method, point) onto the library.

use qbounds::nuttall::{self, NuttallParams};
use qbounds::oracle::{oracle_marcum, oracle_nuttall, oracle_toronto};
use qbounds::toronto::{self, TorontoParams};
use qbounds::{BoundReport, Error, FnOrder, Result, SeriesResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Function {
    /// Q_{m,n}(a,b)
    Nuttall,
    /// Q_{m,n}(a,b) / a^n
    #[value(name = "nuttall_norm")]
    NuttallNorm,
    /// Q_m(a,b) = Q_{m,m-1}(a,b) / a^{m-1}
    Marcum,
    /// T_B(m,n,r)
    Toronto,
}

impl Function {
    pub fn name(self) -> &'static str {
        match self {
            Function::Nuttall => "nuttall",
            Function::NuttallNorm => "nuttall_norm",
            Function::Marcum => "marcum",
            Function::Toronto => "toronto",
        }
    }

    /// Names of the two continuous arguments.
    pub fn arg_names(self) -> (&'static str, &'static str) {
        match self {
            Function::Toronto => ("r", "B"),
            _ => ("a", "b"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    /// P-term polynomial form
    Truncated,
    /// exact series with a relative stopping tolerance
    Adaptive,
    /// finite closed form for half-odd orders
    #[value(name = "closed_half")]
    ClosedHalf,
    /// 1F1 upper bound (b = 0 / B = infinity value)
    #[value(name = "bound_1f1")]
    Bound1F1,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Truncated => "truncated",
            Method::Adaptive => "adaptive",
            Method::ClosedHalf => "closed_half",
            Method::Bound1F1 => "bound_1f1",
        }
    }
}

/// One parameter point. For Marcum, `n = m - 1`; for Toronto, `(x, y) = (r, B)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub m: f64,
    pub n: f64,
    pub x: f64,
    pub y: f64,
}

pub struct Evaluation {
    pub value: f64,
    pub series: Option<SeriesResult>,
}

enum Params {
    Nuttall(NuttallParams),
    Toronto(TorontoParams),
}

fn params(f: Function, pt: &Point) -> Result<Params> {
    match f {
        Function::Nuttall | Function::NuttallNorm => Ok(Params::Nuttall(NuttallParams::new(
            pt.m,
            FnOrder::new(pt.n),
            pt.x,
            pt.y,
        )?)),
        Function::Marcum => {
            if !(pt.m >= 1.0) {
                return Err(Error::Domain(format!(
                    "Marcum order must be >= 1, got {}",
                    pt.m
                )));
            }
            Ok(Params::Nuttall(NuttallParams::new(
                pt.m,
                FnOrder::new(pt.m - 1.0),
                pt.x,
                pt.y,
            )?))
        }
        Function::Toronto => Ok(Params::Toronto(TorontoParams::new(
            pt.m,
            FnOrder::new(pt.n),
            pt.x,
            pt.y,
        )?)),
    }
}

/// Factor turning the normalized value into the reported one.
fn scale(f: Function, p: &NuttallParams) -> f64 {
    match f {
        Function::Nuttall => nuttall::denormalize(1.0, p),
        _ => 1.0,
    }
}

pub fn evaluate(
    f: Function,
    method: Method,
    pt: &Point,
    terms: usize,
    tol: f64,
) -> Result<Evaluation> {
    let with_series = |s: SeriesResult, k: f64| Evaluation {
        value: s.value * k,
        series: Some(s),
    };
    let plain = |v: f64| Evaluation {
        value: v,
        series: None,
    };
    match params(f, pt)? {
        Params::Nuttall(p) => {
            let k = scale(f, &p);
            Ok(match method {
                Method::Truncated => with_series(nuttall::series_truncated(&p, terms)?, k),
                Method::Adaptive => with_series(nuttall::series_adaptive(&p, tol)?, k),
                Method::ClosedHalf => plain(nuttall::half_integer_closed(&p)? * k),
                Method::Bound1F1 => plain(nuttall::upper_bound_1f1(p.m, p.n, p.a)? * k),
            })
        }
        Params::Toronto(p) => Ok(match method {
            Method::Truncated => with_series(toronto::series_truncated(&p, terms)?, 1.0),
            Method::Adaptive => with_series(toronto::series_adaptive(&p, tol)?, 1.0),
            Method::ClosedHalf => plain(toronto::closed_form_half(p.m, p.n, p.r, p.big_b)?),
            Method::Bound1F1 => plain(toronto::upper_bound_1f1(p.m, p.n, p.r)?),
        }),
    }
}

pub fn oracle(f: Function, pt: &Point, tol: f64) -> Result<f64> {
    match f {
        Function::Nuttall => Ok(oracle_nuttall(pt.m, FnOrder::new(pt.n), pt.x, pt.y, tol)?.value),
        Function::NuttallNorm => {
            let p = NuttallParams::new(pt.m, FnOrder::new(pt.n), pt.x, pt.y)?;
            Ok(oracle_nuttall(pt.m, p.n, pt.x, pt.y, tol)?.value / scale(Function::Nuttall, &p))
        }
        Function::Marcum => Ok(oracle_marcum(pt.m, pt.x, pt.y, tol)?.value),
        Function::Toronto => Ok(oracle_toronto(pt.m, FnOrder::new(pt.n), pt.x, pt.y, tol)?.value),
    }
}

fn scaled(r: BoundReport, k: f64) -> BoundReport {
    BoundReport::new(r.bound_value * k, r.dominated_quantity * k, r.regime_ok)
}

/// Truncation-error bound for the P-term polynomial form.
pub fn truncation_bound(f: Function, pt: &Point, terms: usize) -> Result<BoundReport> {
    match params(f, pt)? {
        Params::Nuttall(p) => Ok(scaled(nuttall::truncation_bound(&p, terms)?, scale(f, &p))),
        Params::Toronto(p) => toronto::truncation_bound(&p, terms),
    }
}

/// Whether the truncation bound is asserted at this point.
pub fn truncation_regime(f: Function, pt: &Point) -> bool {
    match f {
        Function::Toronto => pt.m > pt.n,
        _ => pt.y > 0.0,
    }
}

/// The 1F1 bound against the adaptive series.
pub fn upper_bound(f: Function, pt: &Point) -> Result<BoundReport> {
    match params(f, pt)? {
        Params::Nuttall(p) => Ok(scaled(nuttall::upper_bound_report(&p)?, scale(f, &p))),
        Params::Toronto(p) => toronto::upper_bound_report(&p),
    }
}
