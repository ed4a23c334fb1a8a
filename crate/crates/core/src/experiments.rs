//! The named experiments behind the command-line subcommands. Each returns
//! an [`ExperimentReport`] whose rows follow the order of the input grid.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::dirichlet::{three_four_one, zeta};
use crate::error::{LabError, Result};
use crate::hecke::{HeckeContext, Mode};
use crate::rational::{chebyshev, log_integral, mertens_report, EpsSchedule, Tables};
use crate::report::{format_sig, Cell, ExperimentReport, SIGNIFICANT_DIGITS};
use crate::sieve::build_prime_table;

pub const DEFAULT_ZETA_SIGMAS: [f64; 4] = [1.05, 1.1, 1.5, 2.0];
pub const DEFAULT_ZETA_TS: [f64; 5] = [0.5, 1.0, 5.0, 14.134725, 21.022];
pub const DEFAULT_HECKE_SIGMAS: [f64; 2] = [1.2, 1.5];
pub const DEFAULT_HECKE_TS: [f64; 2] = [0.7, 3.0];

/// `xmax / 10^{D−1}, ..., xmax / 10, xmax`.
pub fn decade_grid(xmax: f64, decades: u32, lo: f64) -> Result<Vec<f64>> {
    if !(1..=15).contains(&decades) {
        return Err(LabError::invalid(format!("decades must be in 1..=15, got {decades}")));
    }
    let grid: Vec<f64> = (0..decades)
        .map(|k| xmax / 10f64.powi((decades - 1 - k) as i32))
        .collect();
    if !(grid[0] >= lo) || !xmax.is_finite() {
        return Err(LabError::invalid(format!(
            "grid for xmax = {xmax} over {decades} decades starts below {lo}"
        )));
    }
    Ok(grid)
}

fn real(v: f64) -> Cell {
    Cell::Real(v)
}

fn table_limit(xmax: f64) -> Result<u64> {
    if !(xmax.is_finite() && xmax >= 2.0) {
        return Err(LabError::invalid(format!("xmax must be a finite value ≥ 2, got {xmax}")));
    }
    Ok(xmax.floor() as u64)
}

/// `π(x)`, `x/ln x`, `li(x)`, `ψ(x)`, `θ(x)` and their ratios.
pub fn pnt_table(xmax: f64, decades: u32) -> Result<ExperimentReport> {
    let grid = decade_grid(xmax, decades, 2.0)?;
    let tables = Tables::new(table_limit(xmax)?)?;
    let mut report = ExperimentReport::new(
        "pnt-table",
        "Chebyshev bounds and the prime number theorem: pi(x) against x/ln x and li(x), psi(x) against x",
        &["x", "pi", "x_over_lnx", "li", "psi", "theta", "pi_lnx_over_x", "psi_over_x", "pi_over_li"],
    )
    .param("xmax", format_sig(xmax, SIGNIFICANT_DIGITS))
    .param("decades", decades);
    for x in grid {
        let c = chebyshev(x, &tables)?;
        let li = log_integral(x, EpsSchedule::default())?;
        report.push(vec![
            real(x),
            Cell::from(c.pi_x),
            real(x / x.ln()),
            real(li),
            real(c.psi),
            real(c.theta),
            real(c.ratio_pi),
            real(c.ratio_psi),
            real(c.pi_x as f64 / li),
        ])?;
    }
    Ok(report)
}

/// Mertens' three estimates and the partial `c₅` sum.
pub fn mertens_table(xmax: f64, decades: u32) -> Result<ExperimentReport> {
    let grid = decade_grid(xmax, decades, 3.0)?;
    let tables = Tables::new(table_limit(xmax)?)?;
    let mut report = ExperimentReport::new(
        "mertens",
        "Mertens' theorems: A = sum ln p/p - ln x, B = sum 1/p - ln ln x, P = ln x prod (1 - 1/p)",
        &["x", "A", "B", "P", "c5_partial"],
    )
    .param("xmax", format_sig(xmax, SIGNIFICANT_DIGITS))
    .param("decades", decades);
    for x in grid {
        let m = mertens_report(x, &tables)?;
        report.push(vec![real(x), real(m.a), real(m.b), real(m.p), real(m.c5_partial)])?;
    }
    Ok(report)
}

fn join(values: &[f64]) -> String {
    let v: Vec<String> = values.iter().map(|&x| format_sig(x, SIGNIFICANT_DIGITS)).collect();
    v.join(";")
}

/// `ζ(σ + it)` and the three-four-one functional over a `σ × t` grid.
pub fn zeta_check(sigmas: &[f64], ts: &[f64], prime_limit: u64) -> Result<ExperimentReport> {
    let table = build_prime_table(prime_limit)?;
    let mut report = ExperimentReport::new(
        "zeta-check",
        "Three-four-one inequality: 3 ln|zeta(s)| + 4 ln|zeta(s+it)| + ln|zeta(s+2it)| >= 0",
        &["sigma", "t", "zeta_re", "zeta_im", "zeta_tail", "log_theta", "log_theta_tail"],
    )
    .param("sigma", join(sigmas))
    .param("t", join(ts))
    .param("primes_upto", prime_limit);
    for &s in sigmas {
        for &t in ts {
            let z = zeta(Complex64::new(s, t), 1e-12)?;
            let f = three_four_one(s, t, &table)?;
            report.push(vec![
                real(s),
                real(t),
                real(z.value.re),
                real(z.value.im),
                real(z.tail_bound),
                real(f.log_theta),
                real(8.0 * f.component_tail),
            ])?;
        }
    }
    Ok(report)
}

/// `π_i`, `ψ_i` and the Gauss circle remainder over a decade grid.
pub fn gauss_table(xmax: f64, decades: u32) -> Result<ExperimentReport> {
    let grid = decade_grid(xmax, decades, 100.0)?;
    let ctx = HeckeContext::new(table_limit(xmax)?)?;
    let mut report = ExperimentReport::new(
        "gauss-table",
        "Prime number theorem for Gaussian integers and the Gauss circle problem",
        &[
            "x",
            "pi_i",
            "pi_i_lnx_over_x",
            "psi_i",
            "psi_i_over_2x",
            "lattice_count",
            "circle_remainder",
            "circle_over_sqrt_x",
        ],
    )
    .param("xmax", format_sig(xmax, SIGNIFICANT_DIGITS))
    .param("decades", decades);
    for x in grid {
        let n = x.floor() as u64;
        let pi_i = ctx.prime_count_i(x)?;
        let psi = ctx.psi_i(x)?;
        let lattice = ctx.lattice_count(n)?;
        let rem = lattice as f64 - n as f64 * PI;
        report.push(vec![
            real(x),
            Cell::from(pi_i),
            real(pi_i as f64 * x.ln() / x),
            real(psi),
            real(psi / (2.0 * x)),
            Cell::from(lattice),
            real(rem),
            real(rem / (n as f64).sqrt()),
        ])?;
    }
    Ok(report)
}

/// Continued `Ξ(h, σ+it)` and the Hecke three-four-one functional.
pub fn hecke_table(xmax: f64, h_max: u32, sigmas: &[f64], ts: &[f64]) -> Result<ExperimentReport> {
    if h_max == 0 {
        return Err(LabError::invalid("hmax must be at least 1"));
    }
    let ctx = HeckeContext::new(table_limit(xmax)?)?;
    let mut report = ExperimentReport::new(
        "hecke-table",
        "Hecke's angular series Xi(h, s) and the three-four-one inequality for Gaussian primes",
        &["h", "sigma", "t", "xi_re", "xi_im", "xi_tail", "functional"],
    )
    .param("xmax", format_sig(xmax, SIGNIFICANT_DIGITS))
    .param("hmax", h_max)
    .param("sigma", join(sigmas))
    .param("t", join(ts));
    for h in 1..=h_max as i32 {
        for &s in sigmas {
            for &t in ts {
                let xi = ctx.xi(h, Complex64::new(s, t), Mode::Continued)?;
                let functional = ctx.three_four_one(h, s, t)?;
                report.push(vec![
                    Cell::Int(h as i64),
                    real(s),
                    real(t),
                    real(xi.value.re),
                    real(xi.value.im),
                    real(xi.tail_bound),
                    real(functional.value),
                ])?;
            }
        }
    }
    Ok(report)
}

/// Angular bin counts of Gaussian primes; the normalized twisted prime sums
/// are reported in the parameter line.
pub fn equidist(xmax: f64, bins: usize, h_max: u32) -> Result<ExperimentReport> {
    let ctx = HeckeContext::new(table_limit(xmax)?)?;
    let r = ctx.equidist_report(xmax, bins, h_max)?;
    let mean = r.counts.iter().sum::<u64>() as f64 / bins as f64;
    let mut report = ExperimentReport::new(
        "equidist",
        "Angular equidistribution of Gaussian primes",
        &["bin", "angle_lo", "angle_hi", "count", "rel_dev"],
    )
    .param("xmax", format_sig(xmax, SIGNIFICANT_DIGITS))
    .param("bins", bins)
    .param("hmax", h_max)
    .param("max_rel_dev", format_sig(r.max_rel_dev, SIGNIFICANT_DIGITS))
    .param("weyl_ratios", join(&r.weyl_ratios));
    let width = 2.0 * PI / bins as f64;
    for (b, &count) in r.counts.iter().enumerate() {
        report.push(vec![
            Cell::Int(b as i64),
            real(b as f64 * width),
            real((b + 1) as f64 * width),
            Cell::from(count),
            real((count as f64 - mean) / mean),
        ])?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decade_grid_is_exact() {
        assert_eq!(decade_grid(1000.0, 3, 2.0).unwrap(), [10.0, 100.0, 1000.0]);
        assert_eq!(decade_grid(1e7, 5, 2.0).unwrap(), [1e3, 1e4, 1e5, 1e6, 1e7]);
        assert!(decade_grid(100.0, 3, 2.0).is_err());
        assert!(decade_grid(100.0, 0, 2.0).is_err());
    }

    #[test]
    fn pnt_table_shape() {
        let r = pnt_table(1000.0, 3).unwrap();
        assert_eq!(r.rows.len(), 3);
        assert!(r.rows.iter().all(|row| row.len() == r.columns.len()));
        assert_eq!(r.rows[0][1], Cell::Int(4));
        assert_eq!(r.rows[2][1], Cell::Int(168));
        assert_eq!(r.to_csv(), pnt_table(1000.0, 3).unwrap().to_csv());
    }

    #[test]
    fn small_tables_run() {
        assert_eq!(mertens_table(1e4, 2).unwrap().rows.len(), 2);
        assert_eq!(zeta_check(&[2.0], &[0.0, 1.0], 10_000).unwrap().rows.len(), 2);
        let g = gauss_table(1e4, 2).unwrap();
        let listed = crate::gaussian::gaussian_primes_upto(1000.0).unwrap().len();
        assert_eq!(g.rows[0][1], Cell::Int(listed as i64));
        assert_eq!(hecke_table(1e4, 2, &[1.5], &[0.7]).unwrap().rows.len(), 2);
        let e = equidist(1e4, 8, 2).unwrap();
        assert_eq!(e.rows.len(), 8);
        assert!(hecke_table(1e4, 0, &[1.5], &[0.7]).is_err());
    }
}
