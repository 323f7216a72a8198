//! Two independent adaptive integrators over finite intervals.
//!
//! * [`Scheme::GlobalKronrod`]: 7/15-point Gauss–Kronrod panels kept in a
//!   priority queue; the panel with the largest error estimate is bisected
//!   until the summed estimate meets the tolerance.
//! * [`Scheme::LocalBisection`]: 10-point Gauss–Legendre compared against
//!   the two half-panel sums, recursing left to right on panels whose local
//!   share of the tolerance is not met.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::sync::OnceLock;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    GlobalKronrod,
    LocalBisection,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct QuadOutcome {
    pub value: f64,
    pub abs_err: f64,
    pub panels: usize,
    pub met: bool,
}

pub(crate) const MAX_PANELS: usize = 20_000;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn kronrod15<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> (f64, f64) {
    let c = 0.5 * (lo + hi);
    let h = 0.5 * (hi - lo);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        k += WGK[j] * s;
        if j % 2 == 1 {
            g += WG[j / 2] * s;
        }
    }
    (k * h, ((k - g) * h).abs())
}

/// Gauss–Legendre nodes and weights on [−1, 1] by Newton iteration.
fn legendre_rule(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        let w = 2.0 / ((1.0 - z * z) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn gl10() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| legendre_rule(10))
}

fn gauss10<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> f64 {
    let (x, w) = gl10();
    let c = 0.5 * (lo + hi);
    let h = 0.5 * (hi - lo);
    h * x
        .iter()
        .zip(w)
        .map(|(&xi, &wi)| wi * f(c + h * xi))
        .sum::<f64>()
}

#[derive(Default)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Splits `[lo, hi]` into equal pieces no longer than `max_len`.
fn initial_breaks(lo: f64, hi: f64, max_len: f64) -> Vec<(f64, f64)> {
    let pieces = ((hi - lo) / max_len).ceil().max(1.0) as usize;
    let h = (hi - lo) / pieces as f64;
    (0..pieces)
        .map(|i| {
            let a = lo + i as f64 * h;
            let b = if i + 1 == pieces {
                hi
            } else {
                lo + (i + 1) as f64 * h
            };
            (a, b)
        })
        .collect()
}

struct Panel {
    lo: f64,
    hi: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.lo.total_cmp(&self.lo))
    }
}

fn global_kronrod<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, tol: f64) -> QuadOutcome {
    let mut heap: BinaryHeap<Panel> = initial_breaks(lo, hi, 1.0)
        .into_iter()
        .map(|(a, b)| {
            let (value, err) = kronrod15(f, a, b);
            Panel {
                lo: a,
                hi: b,
                value,
                err,
            }
        })
        .collect();
    let total_err = |h: &BinaryHeap<Panel>| h.iter().map(|p| p.err).sum::<f64>();
    let mut err = total_err(&heap);
    while err > tol && heap.len() < MAX_PANELS {
        let worst = heap.pop().expect("non-empty panel set");
        let mid = 0.5 * (worst.lo + worst.hi);
        if mid <= worst.lo || mid >= worst.hi {
            heap.push(worst);
            break;
        }
        err -= worst.err;
        for (a, b) in [(worst.lo, mid), (mid, worst.hi)] {
            let (value, e) = kronrod15(f, a, b);
            err += e;
            heap.push(Panel {
                lo: a,
                hi: b,
                value,
                err: e,
            });
        }
        if err <= tol {
            // running sum drifts; confirm against a fresh total
            err = total_err(&heap);
        }
    }
    let mut panels = heap.into_vec();
    panels.sort_by(|p, q| p.lo.total_cmp(&q.lo));
    let mut acc = Neumaier::default();
    for p in &panels {
        acc.add(p.value);
    }
    QuadOutcome {
        value: acc.total(),
        abs_err: err,
        panels: panels.len(),
        met: err <= tol,
    }
}

fn local_bisection<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, tol: f64) -> QuadOutcome {
    let width = hi - lo;
    let mut acc = Neumaier::default();
    let mut err = 0.0;
    let mut panels = 0;
    let mut met = true;
    // stack holds (lo, hi, whole-panel estimate); reversed so the leftmost pops first
    let mut stack: Vec<(f64, f64, f64)> = initial_breaks(lo, hi, 2.0)
        .into_iter()
        .rev()
        .map(|(a, b)| (a, b, gauss10(f, a, b)))
        .collect();
    while let Some((a, b, whole)) = stack.pop() {
        let mid = 0.5 * (a + b);
        let left = gauss10(f, a, mid);
        let right = gauss10(f, mid, b);
        let halves = left + right;
        let e = (whole - halves).abs();
        let local_tol = tol * (b - a) / width;
        let exhausted = panels + stack.len() >= MAX_PANELS || mid <= a || mid >= b;
        if e <= local_tol || exhausted {
            if e > local_tol {
                met = false;
            }
            acc.add(halves);
            err += e;
            panels += 1;
        } else {
            stack.push((mid, b, right));
            stack.push((a, mid, left));
        }
    }
    QuadOutcome {
        value: acc.total(),
        abs_err: err,
        panels,
        met: met && err <= tol,
    }
}

pub(crate) fn integrate<F: Fn(f64) -> f64>(
    scheme: Scheme,
    f: &F,
    lo: f64,
    hi: f64,
    tol: f64,
) -> QuadOutcome {
    if hi <= lo {
        return QuadOutcome {
            value: 0.0,
            abs_err: 0.0,
            panels: 1,
            met: true,
        };
    }
    match scheme {
        Scheme::GlobalKronrod => global_kronrod(f, lo, hi, tol),
        Scheme::LocalBisection => local_bisection(f, lo, hi, tol),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SCHEMES: [Scheme; 2] = [Scheme::GlobalKronrod, Scheme::LocalBisection];

    #[test]
    fn legendre_weights_sum_to_two() {
        let (x, w) = legendre_rule(10);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
        // exact for x^18
        let m: f64 = x.iter().zip(&w).map(|(a, b)| b * a.powi(18)).sum();
        assert!((m - 2.0 / 19.0).abs() < 1e-14);
    }

    #[test]
    fn polynomials_and_exponentials() {
        for s in SCHEMES {
            let r = integrate(s, &|x: f64| x.powi(5), 0.0, 2.0, 1e-13);
            assert!((r.value - 64.0 / 6.0).abs() < 1e-12 && r.met);
            let r = integrate(s, &|x: f64| (-x).exp(), 0.0, 30.0, 1e-14);
            assert!((r.value - (1.0 - (-30f64).exp())).abs() < 1e-14, "{s:?}");
        }
    }

    #[test]
    fn gaussian_bump_far_from_origin() {
        let sqrt2pi = (2.0 * std::f64::consts::PI).sqrt();
        for s in SCHEMES {
            let r = integrate(
                s,
                &|x: f64| (-(x - 17.3).powi(2) / 2.0).exp(),
                0.0,
                45.0,
                1e-13,
            );
            assert!((r.value - sqrt2pi).abs() < 1e-12, "{s:?} {}", r.value);
        }
    }

    #[test]
    fn algebraic_endpoint_singularity() {
        for s in SCHEMES {
            let r = integrate(s, &|x: f64| x.sqrt(), 0.0, 1.0, 1e-12);
            assert!((r.value - 2.0 / 3.0).abs() < 1e-12, "{s:?}");
        }
    }

    #[test]
    fn empty_interval() {
        let r = integrate(Scheme::GlobalKronrod, &|_| 1.0, 2.0, 2.0, 1e-12);
        assert_eq!(r.value, 0.0);
    }
}
