#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod figure;
mod functions;
mod table;

use clap::{Args, Parser, Subcommand};
use functions::{Function, Method};
use std::path::PathBuf;
use std::process::ExitCode;
use table::Format;

/// Nuttall, Marcum and incomplete Toronto functions: series, bounds and oracle comparisons.
#[derive(Debug, Parser)]
#[command(name = "qbounds", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for grid evaluation.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,

    /// Exit with status 1 if any compared row has a larger relative error.
    #[arg(long, global = true)]
    assert_rel_err: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one function at one point.
    Eval(EvalArgs),
    /// Compare the polynomial form against the quadrature oracle over a grid.
    Compare(GridArgs),
    /// Report truncation or 1F1 bounds over a grid.
    Bounds(BoundsArgs),
    /// Write the data behind one of the figures.
    Figure(FigureArgs),
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(value_enum)]
    function: Function,
    #[arg(long)]
    m: f64,
    /// Bessel order (ignored for marcum, where n = m - 1).
    #[arg(long)]
    n: Option<f64>,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
    #[arg(long)]
    r: Option<f64>,
    #[arg(long = "B")]
    big_b: Option<f64>,
    #[arg(long, value_enum, default_value_t = Method::Adaptive)]
    method: Method,
    /// Truncation order P for the polynomial form.
    #[arg(long, default_value_t = 20)]
    terms: usize,
    /// Relative stopping tolerance for the adaptive series.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
}

/// An `m:n` order pair; a bare `m` leaves n unset (required except for marcum).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderPair {
    pub m: f64,
    pub n: Option<f64>,
}

fn parse_order_pair(s: &str) -> Result<OrderPair, String> {
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once(':') {
        Some((m, n)) => Ok(OrderPair {
            m: num(m)?,
            n: Some(num(n)?),
        }),
        None => Ok(OrderPair {
            m: num(s)?,
            n: None,
        }),
    }
}

/// `P`, or an inclusive range `P1..P2`.
fn parse_terms(s: &str) -> Result<Vec<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once("..") {
        Some((lo, hi)) => Ok((num(lo)?..=num(hi)?).collect()),
        None => Ok(vec![num(s)?]),
    }
}

#[derive(Debug, Args)]
struct GridArgs {
    #[arg(value_enum)]
    function: Function,
    /// Order pairs, e.g. `2:1,3:0.5` (marcum takes bare orders `1,2`).
    #[arg(long, value_delimiter = ',', value_parser = parse_order_pair)]
    mn: Vec<OrderPair>,
    #[arg(long, value_delimiter = ',')]
    a: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    b: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    r: Vec<f64>,
    #[arg(long = "B", value_delimiter = ',')]
    big_b: Vec<f64>,
    /// Truncation order P.
    #[arg(long, default_value_t = 20)]
    terms: usize,
    /// Absolute tolerance for the quadrature oracle.
    #[arg(long, default_value_t = 1e-13)]
    tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum BoundKind {
    /// truncation-error bound of the polynomial form
    Truncation,
    /// 1F1 upper bound
    Upper,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    #[arg(value_enum)]
    function: Function,
    #[arg(long, value_enum, default_value_t = BoundKind::Truncation)]
    kind: BoundKind,
    #[arg(long, value_delimiter = ',', value_parser = parse_order_pair)]
    mn: Vec<OrderPair>,
    #[arg(long, value_delimiter = ',')]
    a: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    b: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    r: Vec<f64>,
    #[arg(long = "B", value_delimiter = ',')]
    big_b: Vec<f64>,
    /// Truncation orders: comma list of `P` or `P1..P2` (truncation bounds only).
    #[arg(long, value_delimiter = ',', value_parser = parse_terms, default_value = "1..15")]
    terms: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FigureId {
    F1,
    F2,
    F3,
    F4,
}

#[derive(Debug, Args)]
struct FigureArgs {
    #[arg(value_enum)]
    figure: FigureId,
    /// Output file; standard output if absent.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

/// A command's failure: exit status plus message.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<qbounds::Error> for Failure {
    fn from(e: qbounds::Error) -> Self {
        use qbounds::Error::*;
        let code = match e {
            NonConvergence { .. } | ToleranceNotMet { .. } => 3,
            Domain(_) | Precondition(_) | Overflow(_) => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Output text and exit status of a finished command.
pub struct Finished {
    pub output: String,
    pub code: u8,
}

fn run(cli: Cli) -> Result<Finished, Failure> {
    let format = if cli.json { Format::Json } else { cli.format };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs as usize)
        .build()
        .map_err(|e| Failure::usage(e.to_string()))?;
    match cli.command {
        Command::Eval(args) => commands::eval(&args, format),
        Command::Compare(args) => {
            pool.install(|| commands::compare(&args, format, cli.assert_rel_err))
        }
        Command::Bounds(args) => pool.install(|| commands::bounds(&args, format)),
        Command::Figure(args) => {
            pool.install(|| figure::write(args.figure, args.output.as_deref(), format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(done) => {
            print!("{}", done.output);
            ExitCode::from(done.code)
        }
        Err(f) => {
            eprintln!("qbounds: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
