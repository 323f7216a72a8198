//! Curve data for the four figures. The parameter sets are our own choice;
//! each file lists them in its header.

use crate::functions::{self, Function, Method, Point};
use crate::table::{Cell, Format, Table};
use crate::{Failure, FigureId, Finished};
use rayon::prelude::*;
use std::path::Path;

const TERMS: usize = 20;
const SERIES_TOL: f64 = 1e-14;
const ORACLE_TOL: f64 = 1e-13;

struct Spec {
    id: &'static str,
    title: &'static str,
    function: Function,
    /// Name of the fixed continuous argument and of the abscissa.
    fixed: &'static str,
    abscissa: &'static str,
    series: &'static str,
    bound: &'static str,
    rel_error: &'static str,
    /// (m, n, fixed argument)
    curves: &'static [(f64, f64, f64)],
    /// (start, step, count)
    xs: (f64, f64, usize),
}

const F1: Spec = Spec {
    id: "f1",
    title: "normalized Nuttall Q versus b",
    function: Function::NuttallNorm,
    fixed: "a",
    abscissa: "b",
    series: "20-term polynomial form",
    bound: "none",
    rel_error: "|series - oracle| / oracle",
    curves: &[(1.0, 0.0, 1.0), (2.0, 1.0, 2.0), (2.5, 1.5, 3.0)],
    xs: (0.0, 0.25, 25),
};

const F2: Spec = Spec {
    id: "f2",
    title: "1F1 upper bound and normalized Nuttall Q versus a",
    function: Function::NuttallNorm,
    fixed: "b",
    abscissa: "a",
    series: "exact series",
    bound: "1F1 upper bound",
    rel_error: "(bound - series) / series",
    curves: &[(2.0, 1.0, 0.25), (3.0, 1.5, 0.5), (3.0, 2.0, 0.5)],
    xs: (0.5, 0.25, 23),
};

const F3: Spec = Spec {
    id: "f3",
    title: "incomplete Toronto function versus r",
    function: Function::Toronto,
    fixed: "B",
    abscissa: "r",
    series: "20-term polynomial form",
    bound: "closed form at (ceil m, n rounded down to a half-odd integer)",
    rel_error: "|series - oracle| / oracle",
    curves: &[(2.0, 1.0, 3.0), (3.0, 1.5, 2.0), (4.0, 1.0, 3.0)],
    xs: (0.1, 0.1, 30),
};

const F4: Spec = Spec {
    id: "f4",
    title: "1F1 approximation of the incomplete Toronto function versus r",
    function: Function::Toronto,
    fixed: "B",
    abscissa: "r",
    series: "exact series",
    bound: "1F1 approximation",
    rel_error: "(bound - series) / series",
    curves: &[(1.0, 0.5, 5.0), (2.0, 1.0, 5.0)],
    xs: (0.1, 0.1, 20),
};

fn spec(id: FigureId) -> &'static Spec {
    match id {
        FigureId::F1 => &F1,
        FigureId::F2 => &F2,
        FigureId::F3 => &F3,
        FigureId::F4 => &F4,
    }
}

struct Sample {
    series: f64,
    oracle: f64,
    bound: Option<f64>,
    rel_error: f64,
}

fn sample(id: FigureId, pt: &Point) -> qbounds::Result<Sample> {
    let f = spec(id).function;
    let oracle = functions::oracle(f, pt, ORACLE_TOL)?;
    Ok(match id {
        FigureId::F1 | FigureId::F3 => {
            let series = functions::evaluate(f, Method::Truncated, pt, TERMS, SERIES_TOL)?.value;
            let bound = match id {
                FigureId::F3 => {
                    Some(series + functions::truncation_bound(f, pt, TERMS)?.bound_value)
                }
                _ => None,
            };
            Sample {
                series,
                oracle,
                bound,
                rel_error: ((series - oracle) / oracle).abs(),
            }
        }
        FigureId::F2 | FigureId::F4 => {
            let series = functions::evaluate(f, Method::Adaptive, pt, TERMS, SERIES_TOL)?.value;
            let bound = functions::evaluate(f, Method::Bound1F1, pt, TERMS, SERIES_TOL)?.value;
            Sample {
                series,
                oracle,
                bound: Some(bound),
                rel_error: (bound - series) / series,
            }
        }
    })
}

pub fn table(id: FigureId) -> Result<Table, Failure> {
    let s = spec(id);
    let (start, step, count) = s.xs;
    let mut points = Vec::new();
    for (c, &(m, n, fixed)) in s.curves.iter().enumerate() {
        for i in 0..count {
            let x = start + step * i as f64;
            let pt = match s.function {
                // argument order is (a, b) or (r, B); the fixed one is a for f1 and B for f3/f4
                Function::Toronto => Point { m, n, x, y: fixed },
                _ if s.fixed == "a" => Point {
                    m,
                    n,
                    x: fixed,
                    y: x,
                },
                _ => Point { m, n, x, y: fixed },
            };
            points.push((c, x, fixed, pt));
        }
    }
    let samples: Vec<qbounds::Result<Sample>> = points
        .par_iter()
        .map(|(_, _, _, pt)| sample(id, pt))
        .collect();

    let mut t = Table::new(&[
        "curve",
        "m",
        "n",
        s.fixed,
        s.abscissa,
        "series",
        "oracle",
        "bound",
        "rel_error",
    ]);
    t.meta("figure", s.id);
    t.meta("title", s.title);
    t.meta("parameters", "repo-chosen");
    t.meta("series", s.series);
    t.meta(
        "oracle",
        format!("adaptive quadrature, absolute tol {ORACLE_TOL:e}"),
    );
    t.meta("bound", s.bound);
    t.meta("rel_error", s.rel_error);
    for (c, &(m, n, fixed)) in s.curves.iter().enumerate() {
        t.meta(
            &format!("curve{c}"),
            format!("m={m} n={n} {}={fixed}", s.fixed),
        );
    }
    t.meta(
        s.abscissa,
        format!("{start} + {step} * i, i = 0..{}", count - 1),
    );
    for ((c, x, fixed, pt), res) in points.iter().zip(samples) {
        let smp = res?;
        t.push(vec![
            Cell::Int(*c as u64),
            Cell::Num(pt.m),
            Cell::Num(pt.n),
            Cell::Num(*fixed),
            Cell::Num(*x),
            Cell::Num(smp.series),
            Cell::Num(smp.oracle),
            Cell::opt(smp.bound),
            Cell::Num(smp.rel_error),
        ]);
    }
    Ok(t)
}

pub fn write(id: FigureId, output: Option<&Path>, format: Format) -> Result<Finished, Failure> {
    let text = table(id)?.render(format);
    match output {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            Ok(Finished {
                output: String::new(),
                code: 0,
            })
        }
        None => Ok(Finished {
            output: text,
            code: 0,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_approximation_is_tight_below_r_one() {
        let t = table(FigureId::F4).unwrap();
        for row in &t.rows {
            if let (Cell::Num(r), Cell::Num(err)) = (&row[4], &row[8]) {
                if *r < 1.0 {
                    assert!(err.abs() < 1e-6, "r={r}: {err}");
                }
            }
        }
    }

    #[test]
    fn f2_bound_dominates() {
        let t = table(FigureId::F2).unwrap();
        assert!(t
            .rows
            .iter()
            .all(|row| matches!(row[8], Cell::Num(e) if e >= -1e-12)));
    }
}
