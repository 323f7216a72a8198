use crate::functions::{self, Function, Method, Point};
use crate::table::{Cell, Format, Table};
use crate::{BoundKind, BoundsArgs, EvalArgs, Failure, Finished, GridArgs, OrderPair};
use qbounds::{BoundReport, Error};
use rayon::prelude::*;

/// Largest grid accepted by `compare` and `bounds`.
pub const MAX_GRID: usize = 10_000;

/// Slack below which an in-regime bound row counts as a violation.
pub const SLACK_TOL: f64 = 1e-8;

fn required(v: Option<f64>, flag: &str, f: Function) -> Result<f64, Failure> {
    v.ok_or_else(|| Failure::usage(format!("--{flag} is required for {}", f.name())))
}

fn diagnostic(v: f64) -> Cell {
    if v > 0.0 {
        Cell::Text(String::new())
    } else {
        "nonpositive".into()
    }
}

pub fn eval(args: &EvalArgs, format: Format) -> Result<Finished, Failure> {
    let f = args.function;
    let (x_name, y_name) = f.arg_names();
    let (x, y) = match f {
        Function::Toronto => (required(args.r, "r", f)?, required(args.big_b, "B", f)?),
        _ => (required(args.a, "a", f)?, required(args.b, "b", f)?),
    };
    let n = match f {
        Function::Marcum => args.m - 1.0,
        _ => required(args.n, "n", f)?,
    };
    let pt = Point { m: args.m, n, x, y };

    let mut t = Table::new(&[
        "function",
        "method",
        "m",
        "n",
        x_name,
        y_name,
        "terms",
        "tol",
        "value",
        "terms_used",
        "converged",
        "diagnostic",
        "error",
    ]);
    t.meta("command", "eval");
    t.meta("function", f.name());
    t.meta("method", args.method.name());
    let head = vec![
        f.name().into(),
        args.method.name().into(),
        Cell::Num(pt.m),
        Cell::Num(pt.n),
        Cell::Num(pt.x),
        Cell::Num(pt.y),
        Cell::Int(args.terms as u64),
        Cell::Num(args.tol),
    ];
    let (tail, code) = match functions::evaluate(f, args.method, &pt, args.terms, args.tol) {
        Ok(e) => {
            let (used, conv) = match e.series {
                Some(s) => (Cell::Int(s.terms_used as u64), Cell::Bool(s.converged)),
                None => (Cell::Empty, Cell::Empty),
            };
            (
                vec![
                    Cell::Num(e.value),
                    used,
                    conv,
                    diagnostic(e.value),
                    Cell::Empty,
                ],
                0,
            )
        }
        Err(e) => {
            eprintln!("qbounds: {e}");
            let code = Failure::from(e.clone()).code;
            (
                vec![
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Text(e.to_string()),
                ],
                code,
            )
        }
    };
    t.push(head.into_iter().chain(tail).collect());
    Ok(Finished {
        output: t.render(format),
        code,
    })
}

struct GridSpec<'a> {
    function: Function,
    mn: &'a [OrderPair],
    a: &'a [f64],
    b: &'a [f64],
    r: &'a [f64],
    big_b: &'a [f64],
}

fn grid(spec: &GridSpec) -> Result<Vec<Point>, Failure> {
    let f = spec.function;
    let (xs, ys, unused) = match f {
        Function::Toronto => (spec.r, spec.big_b, [("a", spec.a), ("b", spec.b)]),
        _ => (spec.a, spec.b, [("r", spec.r), ("B", spec.big_b)]),
    };
    for (flag, list) in unused {
        if !list.is_empty() {
            return Err(Failure::usage(format!(
                "--{flag} does not apply to {}",
                f.name()
            )));
        }
    }
    let mut orders = Vec::with_capacity(spec.mn.len());
    for pair in spec.mn {
        let n = match (f, pair.n) {
            (Function::Marcum, None) => pair.m - 1.0,
            (Function::Marcum, Some(n)) if n == pair.m - 1.0 => n,
            (Function::Marcum, Some(_)) => {
                return Err(Failure::usage(
                    "marcum orders are given as m alone (n = m - 1)",
                ))
            }
            (_, Some(n)) => n,
            (_, None) => {
                return Err(Failure::usage(format!(
                    "--mn needs m:n pairs for {}",
                    f.name()
                )))
            }
        };
        orders.push((pair.m, n));
    }
    let size = orders.len() * xs.len() * ys.len();
    if size == 0 {
        return Err(Failure::usage("empty grid"));
    }
    if size > MAX_GRID {
        return Err(Failure::usage(format!(
            "grid has {size} points; the limit is {MAX_GRID}"
        )));
    }
    let mut out = Vec::with_capacity(size);
    for &(m, n) in &orders {
        for &x in xs {
            for &y in ys {
                out.push(Point { m, n, x, y });
            }
        }
    }
    Ok(out)
}

fn echo_grid(t: &mut Table, spec: &GridSpec) {
    let list = |v: &[f64]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let (x_name, y_name) = spec.function.arg_names();
    let (xs, ys) = match spec.function {
        Function::Toronto => (spec.r, spec.big_b),
        _ => (spec.a, spec.b),
    };
    let mn = spec
        .mn
        .iter()
        .map(|p| match p.n {
            Some(n) => format!("{}:{}", p.m, n),
            None => p.m.to_string(),
        })
        .collect::<Vec<_>>()
        .join(" ");
    t.meta("mn", mn);
    t.meta(x_name, list(xs));
    t.meta(y_name, list(ys));
}

/// Optional quantity: a precondition failure means "not available here".
fn optional<T>(r: qbounds::Result<T>) -> Result<Option<T>, Failure> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Precondition(_)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn collect<T: Send>(results: Vec<Result<T, Failure>>) -> Result<Vec<T>, Failure> {
    results.into_iter().collect()
}

pub fn compare(
    args: &GridArgs,
    format: Format,
    assert_rel_err: Option<f64>,
) -> Result<Finished, Failure> {
    if let Some(x) = assert_rel_err {
        if !(x > 0.0) || !x.is_finite() {
            return Err(Failure::usage("--assert-rel-err must be a positive number"));
        }
    }
    let f = args.function;
    let spec = GridSpec {
        function: f,
        mn: &args.mn,
        a: &args.a,
        b: &args.b,
        r: &args.r,
        big_b: &args.big_b,
    };
    let points = grid(&spec)?;
    let terms = args.terms;
    let tol = args.tol;
    let rows = collect(
        points
            .par_iter()
            .map(|pt| -> Result<_, Failure> {
                let series = functions::evaluate(f, Method::Truncated, pt, terms, tol)?.value;
                let oracle = functions::oracle(f, pt, tol)?;
                let rel = if oracle != 0.0 {
                    ((series - oracle) / oracle).abs()
                } else {
                    f64::NAN
                };
                let bound = optional(functions::evaluate(f, Method::Bound1F1, pt, terms, tol))?
                    .map(|e| e.value);
                let trunc =
                    optional(functions::truncation_bound(f, pt, terms))?.map(|r| r.bound_value);
                Ok((*pt, series, oracle, rel, bound, trunc))
            })
            .collect(),
    )?;

    let (x_name, y_name) = f.arg_names();
    let mut t = Table::new(&[
        "function",
        "m",
        "n",
        x_name,
        y_name,
        "terms",
        "series_value",
        "oracle_value",
        "rel_error",
        "bound_1f1",
        "trunc_bound",
        "diagnostic",
    ]);
    t.meta("command", "compare");
    t.meta("function", f.name());
    echo_grid(&mut t, &spec);
    t.meta("terms", terms);
    t.meta("oracle_tol", format!("{tol:e}"));
    let mut worst = (f64::NEG_INFINITY, 0usize);
    let mut violations = 0;
    for (i, (pt, series, oracle, rel, bound, trunc)) in rows.iter().enumerate() {
        if rel.is_nan() || *rel > worst.0 {
            worst = (*rel, i);
        }
        if let Some(limit) = assert_rel_err {
            if !(*rel <= limit) {
                violations += 1;
            }
        }
        t.push(vec![
            f.name().into(),
            Cell::Num(pt.m),
            Cell::Num(pt.n),
            Cell::Num(pt.x),
            Cell::Num(pt.y),
            Cell::Int(terms as u64),
            Cell::Num(*series),
            Cell::Num(*oracle),
            Cell::Num(*rel),
            Cell::opt(*bound),
            Cell::opt(*trunc),
            diagnostic(*series),
        ]);
    }
    t.summary("rows", rows.len());
    t.summary("max_rel_error", format!("{:.16e}", worst.0));
    t.summary("max_rel_error_row", worst.1);
    let mut code = 0;
    if let Some(limit) = assert_rel_err {
        t.summary("assert_rel_err", format!("{limit:e}"));
        t.summary("violations", violations);
        if violations > 0 {
            code = 1;
        }
    }
    Ok(Finished {
        output: t.render(format),
        code,
    })
}

/// One bound row; `report` is the precondition message when the bound is unavailable.
struct BoundRow {
    pt: Point,
    terms: Option<usize>,
    regime_ok: bool,
    report: Result<BoundReport, String>,
}

pub fn bounds(args: &BoundsArgs, format: Format) -> Result<Finished, Failure> {
    let f = args.function;
    let spec = GridSpec {
        function: f,
        mn: &args.mn,
        a: &args.a,
        b: &args.b,
        r: &args.r,
        big_b: &args.big_b,
    };
    let points = grid(&spec)?;
    let terms: Vec<usize> = args.terms.iter().flatten().copied().collect();
    let jobs: Vec<(Point, Option<usize>)> = match args.kind {
        BoundKind::Truncation => {
            if terms.is_empty() {
                return Err(Failure::usage("empty terms list"));
            }
            points
                .iter()
                .flat_map(|pt| terms.iter().map(move |&p| (*pt, Some(p))))
                .collect()
        }
        BoundKind::Upper => points.iter().map(|pt| (*pt, None)).collect(),
    };
    if jobs.len() > MAX_GRID {
        return Err(Failure::usage(format!(
            "{} rows requested; the limit is {MAX_GRID}",
            jobs.len()
        )));
    }
    let rows = collect(
        jobs.par_iter()
            .map(|&(pt, p)| -> Result<BoundRow, Failure> {
                let report = match p {
                    Some(p) => functions::truncation_bound(f, &pt, p),
                    None => functions::upper_bound(f, &pt),
                };
                match report {
                    Ok(r) => Ok(BoundRow {
                        pt,
                        terms: p,
                        regime_ok: r.regime_ok,
                        report: Ok(r),
                    }),
                    Err(Error::Precondition(msg)) => {
                        let regime = p.is_some() && functions::truncation_regime(f, &pt);
                        Ok(BoundRow {
                            pt,
                            terms: p,
                            regime_ok: regime,
                            report: Err(msg),
                        })
                    }
                    Err(e) => Err(e.into()),
                }
            })
            .collect(),
    )?;

    let (x_name, y_name) = f.arg_names();
    let kind = match args.kind {
        BoundKind::Truncation => "truncation",
        BoundKind::Upper => "upper_1f1",
    };
    let mut t = Table::new(&[
        "function",
        "kind",
        "m",
        "n",
        x_name,
        y_name,
        "terms",
        "bound_value",
        "dominated_quantity",
        "slack",
        "regime_ok",
        "note",
    ]);
    t.meta("command", "bounds");
    t.meta("function", f.name());
    t.meta("kind", kind);
    echo_grid(&mut t, &spec);
    if args.kind == BoundKind::Truncation {
        t.meta(
            "terms",
            terms
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
    }
    t.meta("slack_tol", format!("{SLACK_TOL:e}"));
    let (mut in_regime, mut violations, mut unavailable) = (0, 0, 0);
    let mut min_slack = f64::INFINITY;
    for row in &rows {
        let (pt, regime) = (&row.pt, row.regime_ok);
        let terms_cell = row.terms.map_or(Cell::Empty, |p| Cell::Int(p as u64));
        let (values, note) = match &row.report {
            Ok(r) => {
                if regime {
                    in_regime += 1;
                    min_slack = min_slack.min(r.slack);
                    if !(r.slack >= -SLACK_TOL) {
                        violations += 1;
                    }
                }
                (
                    [
                        Cell::Num(r.bound_value),
                        Cell::Num(r.dominated_quantity),
                        Cell::Num(r.slack),
                    ],
                    String::new(),
                )
            }
            Err(msg) => {
                unavailable += 1;
                ([Cell::Empty, Cell::Empty, Cell::Empty], msg.clone())
            }
        };
        let mut cells = vec![
            f.name().into(),
            kind.into(),
            Cell::Num(pt.m),
            Cell::Num(pt.n),
            Cell::Num(pt.x),
            Cell::Num(pt.y),
            terms_cell,
        ];
        cells.extend(values);
        cells.push(Cell::Bool(regime));
        cells.push(Cell::Text(note));
        t.push(cells);
    }
    t.summary("rows", rows.len());
    t.summary("in_regime", in_regime);
    t.summary("unavailable", unavailable);
    t.summary("min_slack_in_regime", format!("{min_slack:.16e}"));
    t.summary("violations", violations);
    let code = if violations > 0 { 1 } else { 0 };
    Ok(Finished {
        output: t.render(format),
        code,
    })
}
