//! Command-line front end. [`run`] parses an argument vector, runs one
//! experiment or the verification suite, and returns the process exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 2 | invalid arguments |
//! | 3 | a verification criterion failed |
//! | 4 | the report could not be written |

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{error::ErrorKind, Args, Parser, Subcommand};

use crate::error::{LabError, Result};
use crate::experiments::{self, DEFAULT_HECKE_SIGMAS, DEFAULT_HECKE_TS, DEFAULT_ZETA_SIGMAS, DEFAULT_ZETA_TS};
use crate::report::{write_report, ExperimentReport, Format};
use crate::verify::{verify, Lab};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "pnt-lab", version, about = "Prime counting, Dirichlet series and Gaussian primes at desk scale")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Output {
    /// Report format.
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// pi(x), li(x), psi(x) and theta(x) on a decade grid.
    PntTable {
        #[arg(long, default_value_t = 1e6)]
        xmax: f64,
        #[arg(long, default_value_t = 3)]
        decades: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Mertens' three estimates on a decade grid.
    Mertens {
        #[arg(long, default_value_t = 1e6)]
        xmax: f64,
        #[arg(long, default_value_t = 3)]
        decades: u32,
        #[command(flatten)]
        output: Output,
    },
    /// zeta(s) and the three-four-one functional over a sigma x t grid.
    ZetaCheck {
        /// Prime bound for the Euler-product expansion.
        #[arg(long, default_value_t = 1e6)]
        xmax: f64,
        /// Real part of s; repeat for a grid.
        #[arg(long = "sigma")]
        sigma: Vec<f64>,
        /// Imaginary part of s; repeat for a grid.
        #[arg(long = "t", allow_negative_numbers = true)]
        t: Vec<f64>,
        #[command(flatten)]
        output: Output,
    },
    /// Gaussian prime counts, psi_i and the circle remainder.
    GaussTable {
        #[arg(long, default_value_t = 1e6)]
        xmax: f64,
        #[arg(long, default_value_t = 3)]
        decades: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Continued Xi(h, s) and the Hecke three-four-one functional.
    HeckeTable {
        /// Norm limit of the lattice data.
        #[arg(long, default_value_t = 1e6)]
        xmax: f64,
        /// Largest angular frequency h.
        #[arg(long, default_value_t = 2)]
        hmax: u32,
        /// Real part of s; repeat for a grid.
        #[arg(long = "sigma")]
        sigma: Vec<f64>,
        /// Imaginary part of s; repeat for a grid.
        #[arg(long = "t", allow_negative_numbers = true)]
        t: Vec<f64>,
        #[command(flatten)]
        output: Output,
    },
    /// Angular bin counts of Gaussian primes.
    Equidist {
        #[arg(long, default_value_t = 1e6)]
        xmax: f64,
        #[arg(long, default_value_t = 8)]
        bins: usize,
        /// Largest angular frequency h for the Weyl sums.
        #[arg(long, default_value_t = 3)]
        hmax: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Run the acceptance criteria.
    Verify {
        /// all, rational, gaussian, cli, or a criterion number.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn or_default(values: Vec<f64>, default: &[f64]) -> Vec<f64> {
    if values.is_empty() {
        default.to_vec()
    } else {
        values
    }
}

fn emit(report: Result<ExperimentReport>, output: &Output) -> Result<i32> {
    write_report(&report?, output.format, output.out.as_deref())?;
    Ok(EXIT_OK)
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::PntTable { xmax, decades, output } => emit(experiments::pnt_table(xmax, decades), &output),
        Command::Mertens { xmax, decades, output } => emit(experiments::mertens_table(xmax, decades), &output),
        Command::ZetaCheck { xmax, sigma, t, output } => {
            if !(xmax >= 2.0 && xmax.is_finite()) {
                return Err(LabError::invalid(format!("xmax must be ≥ 2, got {xmax}")));
            }
            let sigma = or_default(sigma, &DEFAULT_ZETA_SIGMAS);
            let t = or_default(t, &DEFAULT_ZETA_TS);
            emit(experiments::zeta_check(&sigma, &t, xmax as u64), &output)
        }
        Command::GaussTable { xmax, decades, output } => emit(experiments::gauss_table(xmax, decades), &output),
        Command::HeckeTable { xmax, hmax, sigma, t, output } => {
            let sigma = or_default(sigma, &DEFAULT_HECKE_SIGMAS);
            let t = or_default(t, &DEFAULT_HECKE_TS);
            emit(experiments::hecke_table(xmax, hmax, &sigma, &t), &output)
        }
        Command::Equidist { xmax, bins, hmax, output } => emit(experiments::equidist(xmax, bins, hmax), &output),
        Command::Verify { suite } => {
            let report = verify(&suite, Lab::shared())?;
            let mut out = std::io::stdout().lock();
            out.write_all(report.render().as_bytes())?;
            out.flush()?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
    }
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(LabError::Io(e)) => {
            eprintln!("pnt-lab: {e}");
            EXIT_IO
        }
        Err(e) => {
            eprintln!("pnt-lab: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(run(["pnt-lab", "--bogus"]), EXIT_USAGE);
        assert_eq!(run(["pnt-lab", "frobnicate"]), EXIT_USAGE);
        assert_eq!(run(["pnt-lab", "pnt-table", "--xmax", "1000", "--decades", "9"]), EXIT_USAGE);
        assert_eq!(run(["pnt-lab", "verify", "--suite", "nope"]), EXIT_USAGE);
        let bad = ["pnt-lab", "pnt-table", "--xmax", "1000", "--out", "/nonexistent-dir/x.csv"];
        assert_eq!(run(bad), EXIT_IO);
    }

    #[test]
    fn repeatable_grid_flags() {
        let cli = Cli::try_parse_from(["pnt-lab", "zeta-check", "--sigma", "1.5", "--sigma", "2", "--t", "-3"]).unwrap();
        match cli.command {
            Command::ZetaCheck { sigma, t, .. } => {
                assert_eq!(sigma, [1.5, 2.0]);
                assert_eq!(t, [-3.0]);
            }
            other => panic!("parsed {other:?}"),
        }
    }
}
