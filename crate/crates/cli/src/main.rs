//! `dunkl`: evaluate the intertwining kernel and operators, run the
//! verification suites, scan kernel positivity.
//!
//! Exit codes: 0 success, 1 verification failure (or a non-positive scan
//! cell), 2 bad arguments, 3 numerical non-convergence.

mod commands;
mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dunkl_core::QuadSettings;

use report::Format;

#[derive(Debug, Parser)]
#[command(
    name = "dunkl",
    version,
    about = "Trigonometric Dunkl intertwining kernel: evaluation, verification, positivity scans"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format [default: csv for scan, json otherwise].
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(flatten)]
    quad: QuadArgs,
}

/// Quadrature sizes; defaults are those of the library.
#[derive(Debug, Args)]
struct QuadArgs {
    /// Gauss–Jacobi nodes of the inner kernel integrals (real k).
    #[arg(long, global = true, default_value_t = QuadSettings::default().jacobi_nodes)]
    jacobi_nodes: usize,
    /// Tanh-sinh level of the inner kernel integrals (complex k).
    #[arg(long, global = true, default_value_t = QuadSettings::default().inner_level)]
    inner_level: u32,
    /// Tanh-sinh level of the outer integrals of V and ᵗV.
    #[arg(long, global = true, default_value_t = QuadSettings::default().outer_level)]
    outer_level: u32,
    /// Tanh-sinh level of each layer of the duality integrals.
    #[arg(long, global = true, default_value_t = QuadSettings::default().nested_level)]
    nested_level: u32,
    /// Relative error estimate above which a kernel value is rejected.
    #[arg(long, global = true, default_value_t = QuadSettings::default().max_rel_error)]
    max_rel_error: f64,
}

impl QuadArgs {
    fn settings(&self) -> QuadSettings {
        QuadSettings {
            jacobi_nodes: self.jacobi_nodes,
            inner_level: self.inner_level,
            outer_level: self.outer_level,
            nested_level: self.nested_level,
            max_rel_error: self.max_rel_error,
        }
    }
}

/// Multiplicity k = (k₁, k₂), optionally complex.
#[derive(Debug, Args)]
struct KArgs {
    #[arg(long, allow_negative_numbers = true)]
    k1: f64,
    #[arg(long, allow_negative_numbers = true)]
    k2: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    k1_im: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    k2_im: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// the defining z-integral
    Direct,
    /// the assembly from the Jacobi-setting kernels
    Mourou,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The kernel 𝒦(x, y).
    Kernel {
        #[command(flatten)]
        k: KArgs,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, allow_negative_numbers = true)]
        y: f64,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
    },
    /// The Opdam function G_{iλ}(x) (real k).
    Opdam {
        #[arg(long, allow_negative_numbers = true)]
        k1: f64,
        #[arg(long, allow_negative_numbers = true)]
        k2: f64,
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        lambda_im: f64,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// V f(x) for a registered test function.
    ApplyV {
        #[command(flatten)]
        k: KArgs,
        /// one | plane:λ | mono:n | gauss:c:w | bump:a
        #[arg(long)]
        function: String,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// ᵗV g(y) for a compactly supported test function (bump:a).
    ApplyVt {
        #[command(flatten)]
        k: KArgs,
        #[arg(long)]
        function: String,
        #[arg(long, allow_negative_numbers = true)]
        y: f64,
    },
    /// Run a verification suite over the built-in grids.
    Verify {
        /// all | eigen | duality | intertwine | kernel-consistency |
        /// positivity | limits | cherednik | delta | quadrature
        #[arg(long, default_value = "all")]
        suite: String,
        /// Replace the default tolerance of every check.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Evaluate the kernel over a grid and report its minimum.
    Scan {
        /// lo:hi:count [default: 0.3, 0.7, 1.5]
        #[arg(long, allow_hyphen_values = true)]
        k1_range: Option<String>,
        /// lo:hi:count [default: 0.3, 0.7, 1.5]
        #[arg(long, allow_hyphen_values = true)]
        k2_range: Option<String>,
        /// lo:hi:count [default: ±0.6, ±1.3, ±2.4]
        #[arg(long, allow_hyphen_values = true)]
        x_range: Option<String>,
        /// lo:hi:count of y/x, inside (−1, 1) [default: 0, ±0.5, ±0.9, ±0.99, ±0.9999]
        #[arg(long, allow_hyphen_values = true)]
        y_frac_range: Option<String>,
    },
}

/// Exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Failed = 1,
    BadArgs = 2,
    NonConvergence = 3,
}

/// A command failure with the exit status it maps to.
#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl From<dunkl_core::Error> for Failure {
    fn from(e: dunkl_core::Error) -> Self {
        let status = if e.is_numerical() {
            Status::NonConvergence
        } else {
            Status::BadArgs
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                Status::BadArgs as u8
            } else {
                Status::Ok as u8
            });
        }
    };
    match run(&cli) {
        Ok(status) => ExitCode::from(status as u8),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.status as u8)
        }
    }
}

fn run(cli: &Cli) -> Result<Status, Failure> {
    let settings = cli.quad.settings();
    let (report, status) = commands::execute(&cli.command, settings)?;
    let format = cli.format.unwrap_or(match cli.command {
        Command::Scan { .. } => Format::Csv,
        _ => Format::Json,
    });
    let io_fail = |e: io::Error| Failure {
        status: Status::BadArgs,
        message: format!("cannot write report: {e}"),
    };
    match &cli.out {
        Some(path) => {
            let file = File::create(path).map_err(io_fail)?;
            let mut w = BufWriter::new(file);
            report.write(format, &mut w).map_err(io_fail)?;
            w.flush().map_err(io_fail)?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            report.write(format, &mut w).map_err(io_fail)?;
        }
    }
    Ok(status)
}
