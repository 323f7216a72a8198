//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use qbounds::nuttall::{self, NuttallParams};
use qbounds::oracle::golden::{evaluate, generate, parse, GOLDEN_FILE};
use qbounds::oracle::{oracle_marcum, oracle_nuttall, oracle_toronto, Scheme};
use qbounds::special::{bessel_i, gamma, kummer_1f1, lower_inc_gamma, upper_inc_gamma};
use qbounds::toronto::{self, TorontoParams};
use qbounds::{FnOrder, Result};
use std::process::ExitCode;
use std::time::{Duration, Instant};

const ORACLE_TOL: f64 = 1e-13;
const RUNTIME_LIMIT: Duration = Duration::from_secs(10);

const NUTTALL_ORDERS: [(f64, f64); 5] =
    [(1.0, 0.0), (2.0, 1.0), (3.0, 0.5), (1.5, 0.5), (2.5, 1.5)];
const NUTTALL_AB: [f64; 4] = [0.5, 1.0, 2.0, 3.0];
const TORONTO_ORDERS: [(f64, f64); 4] = [(2.0, 1.0), (3.0, 1.5), (2.0, 0.5), (4.0, 1.0)];
const TORONTO_R: [f64; 3] = [0.5, 1.0, 2.0];
const TORONTO_B: [f64; 3] = [1.0, 2.0, 3.0];

struct Outcome {
    pass: bool,
    detail: String,
    notes: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, detail: String) -> Self {
        Outcome {
            pass,
            detail,
            notes: Vec::new(),
        }
    }

    fn note(mut self, s: String) -> Self {
        self.notes.push(s);
        self
    }
}

/// Tracks the largest value seen and where.
struct Worst {
    value: f64,
    at: String,
}

impl Worst {
    fn max() -> Self {
        Worst {
            value: f64::NEG_INFINITY,
            at: String::new(),
        }
    }

    fn min() -> Self {
        Worst {
            value: f64::INFINITY,
            at: String::new(),
        }
    }

    fn raise(&mut self, v: f64, at: impl FnOnce() -> String) {
        if v > self.value || v.is_nan() {
            self.value = v;
            self.at = at();
        }
    }

    fn lower(&mut self, v: f64, at: impl FnOnce() -> String) {
        if v < self.value || v.is_nan() {
            self.value = v;
            self.at = at();
        }
    }
}

fn rel(x: f64, y: f64) -> f64 {
    ((x - y) / y).abs()
}

fn nuttall_grid() -> Vec<NuttallParams> {
    let mut out = Vec::new();
    for &(m, n) in &NUTTALL_ORDERS {
        for a in NUTTALL_AB {
            for b in NUTTALL_AB {
                out.push(NuttallParams::new(m, FnOrder::new(n), a, b).unwrap());
            }
        }
    }
    out
}

fn toronto_grid() -> Vec<TorontoParams> {
    let mut out = Vec::new();
    for &(m, n) in &TORONTO_ORDERS {
        for r in TORONTO_R {
            for b in TORONTO_B {
                out.push(TorontoParams::new(m, FnOrder::new(n), r, b).unwrap());
            }
        }
    }
    out
}

fn nuttall_label(p: &NuttallParams) -> String {
    format!("m={} n={} a={} b={}", p.m, p.n, p.a, p.b)
}

fn toronto_label(p: &TorontoParams) -> String {
    format!("m={} n={} r={} B={}", p.m, p.n, p.r, p.big_b)
}

fn nuttall_series_accuracy() -> Result<Outcome> {
    let start = Instant::now();
    let mut worst = Worst::max();
    let mut worst_partial = Worst::max();
    for p in nuttall_grid() {
        let oracle = oracle_nuttall(p.m, p.n, p.a, p.b, ORACLE_TOL)?.value / p.a.powf(p.n.value());
        let series = nuttall::series_truncated(&p, 20)?.value;
        worst.raise(rel(series, oracle), || nuttall_label(&p));
        let partial = nuttall::series_partial(&p, 20)?.value;
        worst_partial.raise(rel(partial, oracle), || nuttall_label(&p));
    }
    let elapsed = start.elapsed();
    let pass = worst.value < 1e-9 && elapsed < RUNTIME_LIMIT;
    Ok(Outcome::new(
        pass,
        format!(
            "max rel err {:.3e} at {} (limit 1e-9), {:.2?} (limit 10 s)",
            worst.value, worst.at, elapsed
        ),
    )
    .note(format!(
        "unweighted 20-term partial sum: max rel err {:.3e} at {}",
        worst_partial.value, worst_partial.at
    )))
}

fn toronto_series_accuracy() -> Result<Outcome> {
    let start = Instant::now();
    let mut worst = Worst::max();
    let mut worst_partial = Worst::max();
    for p in toronto_grid() {
        let oracle = oracle_toronto(p.m, p.n, p.r, p.big_b, ORACLE_TOL)?.value;
        let series = toronto::series_truncated(&p, 20)?.value;
        worst.raise(rel(series, oracle), || toronto_label(&p));
        let partial = toronto::series_partial(&p, 20)?.value;
        worst_partial.raise(rel(partial, oracle), || toronto_label(&p));
    }
    let elapsed = start.elapsed();
    let pass = worst.value < 1e-4 && elapsed < RUNTIME_LIMIT;
    Ok(Outcome::new(
        pass,
        format!(
            "max rel err {:.3e} at {} (limit 1e-4), {:.2?} (limit 10 s)",
            worst.value, worst.at, elapsed
        ),
    )
    .note(format!(
        "unweighted 20-term partial sum: max rel err {:.3e} at {}",
        worst_partial.value, worst_partial.at
    )))
}

fn toronto_approximation() -> Result<Outcome> {
    let worst_at = |big_b: f64| -> Result<Worst> {
        let mut worst = Worst::max();
        for r in [0.3, 0.5, 0.8] {
            for (m, n) in [(1.0, 0.5), (2.0, 1.0)] {
                let p = TorontoParams::new(m, FnOrder::new(n), r, big_b)?;
                assert!(toronto::approximation_regime(&p));
                let bound = toronto::upper_bound_1f1(m, p.n, r)?;
                let exact = toronto::series_adaptive(&p, 1e-14)?.value;
                worst.raise(rel(bound, exact), || toronto_label(&p));
            }
        }
        Ok(worst)
    };
    let worst = worst_at(2.0)?;
    let mut out = Outcome::new(
        worst.value < 1e-6,
        format!(
            "max rel err {:.3e} at {} (limit 1e-6)",
            worst.value, worst.at
        ),
    );
    for big_b in [5.0, 6.0] {
        let w = worst_at(big_b)?;
        out = out.note(format!(
            "same grid at B={big_b}: max rel err {:.3e}",
            w.value
        ));
    }
    Ok(out)
}

fn nuttall_truncation_dominance() -> Result<Outcome> {
    let mut worst = Worst::min();
    let mut violations = 0;
    let mut total = 0;
    for p in nuttall_grid() {
        for terms in 1..=15 {
            let r = nuttall::truncation_bound(&p, terms)?;
            total += 1;
            if !r.holds(1e-10) {
                violations += 1;
            }
            worst.lower(r.slack, || format!("{} P={terms}", nuttall_label(&p)));
        }
    }
    Ok(Outcome::new(
        violations == 0,
        format!(
            "{violations}/{total} violations, min slack {:.3e} at {} (limit -1e-10)",
            worst.value, worst.at
        ),
    ))
}

fn toronto_truncation_dominance() -> Result<Outcome> {
    let mut worst = Worst::min();
    let mut violations = 0;
    let mut total = 0;
    for p in toronto_grid().into_iter().filter(|p| p.m > p.n.value()) {
        for terms in 1..=15 {
            let r = toronto::truncation_bound(&p, terms)?;
            total += 1;
            if !r.holds(1e-8) {
                violations += 1;
            }
            worst.lower(r.slack, || format!("{} P={terms}", toronto_label(&p)));
        }
    }
    Ok(Outcome::new(
        violations == 0,
        format!(
            "{violations}/{total} violations, min slack {:.3e} at {} (limit -1e-8)",
            worst.value, worst.at
        ),
    ))
}

fn nuttall_upper_bound() -> Result<Outcome> {
    let mut worst_eq = Worst::max();
    let mut worst_slack = Worst::min();
    let mut checked = 0;
    for &(m, n) in &NUTTALL_ORDERS {
        for a in NUTTALL_AB {
            let at_zero = NuttallParams::new(m, FnOrder::new(n), a, 0.0)?;
            let r = nuttall::upper_bound_report(&at_zero)?;
            worst_eq.raise(rel(r.bound_value, r.dominated_quantity), || {
                nuttall_label(&at_zero)
            });
            for b in [0.0, 0.05, 0.1, 0.25, 0.5, 1.0, 2.0, 3.0] {
                let p = NuttallParams::new(m, FnOrder::new(n), a, b)?;
                if !nuttall::bound_regime(&p) {
                    continue;
                }
                checked += 1;
                let r = nuttall::upper_bound_report(&p)?;
                worst_slack.lower(r.slack, || nuttall_label(&p));
            }
        }
    }
    let pass = worst_eq.value < 1e-10 && worst_slack.value >= -1e-10;
    Ok(Outcome::new(
        pass,
        format!(
            "b=0 max rel diff {:.3e} at {} (limit 1e-10); min slack {:.3e} over {checked} in-regime points (limit -1e-10)",
            worst_eq.value, worst_eq.at, worst_slack.value
        ),
    ))
}

fn identity_suite() -> Result<Outcome> {
    let mut marcum = Worst::max();
    for m in [1.0, 1.5, 2.0, 3.0] {
        for a in NUTTALL_AB {
            for b in NUTTALL_AB {
                let series = nuttall::marcum_q(m, a, b, 1e-14)?;
                let oracle = oracle_marcum(m, a, b, ORACLE_TOL)?.value;
                let scale = a.powf(m - 1.0);
                marcum.raise(rel(scale * series, scale * oracle), || {
                    format!("m={m} a={a} b={b}")
                });
            }
        }
    }
    let mut recursion = Worst::max();
    for m in [2.0, 3.0, 4.0] {
        for n in [0.0, 1.0, 2.0] {
            for a in NUTTALL_AB {
                for b in NUTTALL_AB {
                    let p = NuttallParams::new(m, FnOrder::new(n), a, b)?;
                    recursion.raise(nuttall::recursion_residual(&p)?, || nuttall_label(&p));
                }
            }
        }
    }
    let mut itf = Worst::max();
    for m in [1.0, 2.0, 3.0] {
        for r in TORONTO_R {
            for b in TORONTO_R {
                itf.raise(toronto::marcum_residual(m, r, b)?, || {
                    format!("m={m} r={r} B={b}")
                });
            }
        }
    }
    let mut integer = Worst::max();
    for (m, n) in [(1.0, 0.0), (2.0, 1.0), (3.0, 0.0), (3.0, 2.0), (4.0, 1.0)] {
        for a in NUTTALL_AB {
            for b in NUTTALL_AB {
                let p = NuttallParams::new(m, FnOrder::new(n), a, b)?;
                let i = nuttall::integer_series(&p, 20)?.value;
                let g = nuttall::series_truncated(&p, 20)?.value;
                integer.raise(rel(i, g), || nuttall_label(&p));
            }
        }
    }
    let pass =
        marcum.value < 1e-9 && recursion.value < 1e-10 && itf.value < 1e-9 && integer.value < 1e-12;
    Ok(Outcome::new(
        pass,
        format!(
            "marcum {:.2e} (1e-9), recursion {:.2e} (1e-10), toronto-marcum {:.2e} (1e-9), integer series {:.2e} (1e-12)",
            marcum.value, recursion.value, itf.value, integer.value
        ),
    )
    .note(format!("worst recursion residual at {}", recursion.at)))
}

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
}

fn kernel_identities() -> Result<Outcome> {
    let mut complement = Worst::max();
    let mut recurrence = Worst::max();
    for a in linspace(0.1, 20.0, 20) {
        let g = gamma(a)?;
        for x in linspace(0.0, 40.0, 20) {
            let lo = lower_inc_gamma(a, x)?;
            let hi = upper_inc_gamma(a, x)?;
            complement.raise((lo + hi - g).abs() / g, || format!("a={a} x={x}"));
            let lhs = upper_inc_gamma(a + 1.0, x)?;
            let rhs = a * hi + x.powf(a) * (-x).exp();
            recurrence.raise(rel(rhs, lhs), || format!("a={a} x={x}"));
        }
    }
    let mut bessel = Worst::max();
    for x in linspace(0.1, 20.0, 40) {
        let want = (2.0 / (std::f64::consts::PI * x)).sqrt() * x.sinh();
        bessel.raise(rel(bessel_i(FnOrder::new(0.5), x)?, want), || {
            format!("x={x}")
        });
    }
    let mut kummer = Worst::max();
    for a in linspace(0.1, 20.0, 20) {
        for x in linspace(0.0, 40.0, 20) {
            kummer.raise(rel(kummer_1f1(a, a, x)?, x.exp()), || {
                format!("a={a} x={x}")
            });
        }
    }
    let worst = complement
        .value
        .max(recurrence.value)
        .max(bessel.value)
        .max(kummer.value);
    Ok(Outcome::new(
        worst <= 1e-12,
        format!(
            "complement {:.2e}, recurrence {:.2e}, half-order bessel {:.2e}, 1F1(a;a;x) {:.2e} (limit 1e-12)",
            complement.value, recurrence.value, bessel.value, kummer.value
        ),
    ))
}

fn oracle_self_consistency() -> Result<Outcome> {
    let records = parse(GOLDEN_FILE)?;
    let mut worst = Worst::max();
    let mut disagreements = 0;
    for rec in &records {
        let other = evaluate(&rec.point, Scheme::LocalBisection, rec.tol)?;
        let diff = (other.value - rec.value).abs();
        if diff > 2.0 * rec.tol {
            disagreements += 1;
        }
        worst.raise(diff / rec.tol, || format!("{:?}", rec.point));
    }
    let identical = generate()? == GOLDEN_FILE;
    Ok(Outcome::new(
        records.len() == 30 && disagreements == 0 && identical,
        format!(
            "{} entries, {disagreements} scheme disagreements (max |diff|/tol {:.2}, limit 2), regenerated file identical: {identical}",
            records.len(),
            worst.value
        ),
    ))
}

type Criterion = (u32, &'static str, fn() -> Result<Outcome>);

const CRITERIA: [Criterion; 9] = [
    (
        1,
        "nuttall 20-term polynomial vs oracle",
        nuttall_series_accuracy,
    ),
    (
        2,
        "toronto 20-term polynomial vs oracle",
        toronto_series_accuracy,
    ),
    (3, "toronto 1F1 approximation at B=2", toronto_approximation),
    (
        4,
        "nuttall truncation bound dominance",
        nuttall_truncation_dominance,
    ),
    (
        5,
        "toronto truncation bound dominance",
        toronto_truncation_dominance,
    ),
    (
        6,
        "nuttall 1F1 bound equality and dominance",
        nuttall_upper_bound,
    ),
    (7, "identity suite", identity_suite),
    (8, "kernel identities", kernel_identities),
    (9, "oracle self-consistency", oracle_self_consistency),
];

fn main() -> ExitCode {
    let mut failed = 0;
    for (id, name, run) in CRITERIA {
        let outcome = match run() {
            Ok(o) => o,
            Err(e) => Outcome::new(false, format!("error: {e}")),
        };
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        println!("criterion {id} {tag}: {name}: {}", outcome.detail);
        for note in &outcome.notes {
            println!("    note: {note}");
        }
        if !outcome.pass {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        CRITERIA.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
