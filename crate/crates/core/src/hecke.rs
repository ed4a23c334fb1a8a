//! Hecke's angular series on `ℤ[i]`.
//!
//! For an integer `h`,
//!
//! `Ξ(h, z) = Σ_{ω ≠ 0} e^{4ih arg ω} |ω|^{−2z}`,
//!
//! with `Ξ(0, z) = ζ_i(z) = Σ r(n) n^{−z}`. The twist `e^{4ih arg ω}` is
//! invariant under units, so every sum below runs over one quadrant
//! (`re > 0, im ≥ 0`) and is weighted by 4.
//!
//! A [`HeckeContext`] holds the lattice points, the canonical primes and the
//! lattice counts up to a fixed norm limit; all evaluations are truncated at
//! that limit and report a bound on the rest.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::Serialize;

use crate::dirichlet::{
    euler_log_tail, pow_neg, stabilized_dirichlet, step_mellin, zeta_reference, GrowthEnvelope,
    MellinCheck, SeriesEval, EULER_TERM_FLOOR, LOG_DERIV_MIN_RE, MELLIN_MIN_RE,
};
use crate::envelopes;
use crate::error::{LabError, Result};
use crate::gaussian::{
    for_each_quadrant_point, gaussian_primes_from_table, psi_i_from_primes, GaussianInt,
    GaussianPrimeRecord,
};
use crate::numeric::{power_log_tail, ComplexSum, CompensatedSum};
use crate::sieve::build_prime_table;

/// Largest norm limit a context may be built for.
pub const MAX_CONTEXT_LIMIT: u64 = 1 << 25;

/// Smallest real part accepted by continued evaluations.
pub const CONTINUED_MIN_RE: f64 = 0.6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Truncated Dirichlet series, `Re z ≥ 1.1`.
    Direct,
    /// Stabilized series around the mean value, `Re z ≥ 0.6`.
    Continued,
}

#[derive(Debug, Clone, Copy)]
struct QuadPoint {
    norm: u64,
    phase: Complex64,
}

/// Precomputed lattice and prime data for norms up to `limit`.
pub struct HeckeContext {
    limit: u64,
    points: Vec<QuadPoint>,
    primes: Vec<GaussianPrimeRecord>,
    phases: Vec<Complex64>,
    lattice: Vec<u64>,
}

impl HeckeContext {
    pub fn new(limit: u64) -> Result<Self> {
        if !(100..=MAX_CONTEXT_LIMIT).contains(&limit) {
            return Err(LabError::OutOfRange {
                what: "norm limit",
                value: limit as f64,
                lo: 100.0,
                hi: MAX_CONTEXT_LIMIT as f64,
            });
        }
        let len = limit as usize + 1;
        // counting sort of quadrant points by norm
        let mut per_norm = vec![0u32; len];
        for_each_quadrant_point(limit, |_, _, n| per_norm[n as usize] += 1);
        let mut offset = vec![0usize; len + 1];
        let mut lattice = vec![0u64; len];
        for n in 0..len {
            offset[n + 1] = offset[n] + per_norm[n] as usize;
            lattice[n] = 4 * offset[n + 1] as u64;
        }
        let blank = QuadPoint {
            norm: 0,
            phase: Complex64::new(0.0, 0.0),
        };
        let mut points = vec![blank; offset[len]];
        for_each_quadrant_point(limit, |a, b, n| {
            let slot = &mut offset[n as usize];
            points[*slot] = QuadPoint {
                norm: n,
                phase: GaussianInt::raw(a, b).quartic_phase(),
            };
            *slot += 1;
        });
        let table = build_prime_table(limit)?;
        let primes = gaussian_primes_from_table(limit, &table);
        let phases = primes.iter().map(|p| p.rep.quartic_phase()).collect();
        Ok(Self {
            limit,
            points,
            primes,
            phases,
            lattice,
        })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Canonical primes with norm up to the limit, sorted by `(norm, arg)`.
    pub fn primes(&self) -> &[GaussianPrimeRecord] {
        &self.primes
    }

    fn check_x(&self, x: f64, lo: f64) -> Result<u64> {
        if !(x >= lo) || x > self.limit as f64 {
            return Err(LabError::OutOfRange {
                what: "x",
                value: x,
                lo,
                hi: self.limit as f64,
            });
        }
        Ok(x.floor() as u64)
    }

    fn points_upto(&self, n: u64) -> &[QuadPoint] {
        &self.points[..self.points.partition_point(|p| p.norm <= n)]
    }

    fn primes_upto(&self, x: f64) -> usize {
        self.primes.partition_point(|p| p.norm as f64 <= x)
    }

    /// `Σ_{m≤n} r(m)`.
    pub fn lattice_count(&self, n: u64) -> Result<u64> {
        let n = self.check_x(n as f64, 0.0)?;
        Ok(self.lattice[n as usize])
    }

    /// `S_h(x) = Σ_{0 < |ω|² ≤ x} e^{4ih arg ω}`; for `h = 0` the lattice count.
    pub fn weyl_sum(&self, h: i32, x: f64) -> Result<Complex64> {
        let n = self.check_x(x, 1.0)?;
        if h == 0 {
            return Ok(Complex64::new(self.lattice[n as usize] as f64, 0.0));
        }
        let mut acc = ComplexSum::new();
        for p in self.points_upto(n) {
            acc.add(p.phase.powi(h));
        }
        Ok(4.0 * acc.value())
    }

    /// `S_h(n)` for `n = 0..=limit`.
    fn weyl_prefix(&self, h: i32) -> Vec<Complex64> {
        let mut coeff = vec![Complex64::new(0.0, 0.0); self.limit as usize + 1];
        for p in &self.points {
            coeff[p.norm as usize] += 4.0 * p.phase.powi(h);
        }
        let mut acc = ComplexSum::new();
        for c in coeff.iter_mut() {
            acc.add(*c);
            *c = acc.value();
        }
        coeff
    }

    /// `Σ_{n>N} |c(n)| n^{−σ} ≤ Σ_{n>N} r(n) n^{−σ}`, bounded by partial
    /// summation against `Σ_{m≤n} r(m) ≤ πn + C√n`.
    fn lattice_tail(&self, sigma: f64) -> f64 {
        let n = self.limit as f64;
        sigma * PI * power_log_tail(n, sigma, 0)
            + sigma * envelopes::CIRCLE_REMAINDER * power_log_tail(n, sigma + 0.5, 0)
    }

    fn direct(&self, h: i32, z: Complex64) -> Result<SeriesEval> {
        if !(z.re >= LOG_DERIV_MIN_RE) {
            return Err(LabError::domain(format!(
                "direct lattice series needs Re z ≥ {LOG_DERIV_MIN_RE}, got {z}"
            )));
        }
        let mut acc = ComplexSum::new();
        let mut last = (0u64, Complex64::new(0.0, 0.0));
        for p in &self.points {
            if p.norm != last.0 {
                last = (p.norm, pow_neg(p.norm as f64, z));
            }
            let twist = if h == 0 { Complex64::new(1.0, 0.0) } else { p.phase.powi(h) };
            acc.add(twist * last.1);
        }
        Ok(SeriesEval {
            value: 4.0 * acc.value(),
            tail_bound: self.lattice_tail(z.re),
            terms_used: self.limit,
        })
    }

    /// `Ξ(h, z)`.
    ///
    /// `Continued` applies the stabilized series with mean value 0 to the
    /// partial sums `S_h(n)`, certified by `|S_h(n)| ≤ C √n ln n`.
    pub fn xi(&self, h: i32, z: Complex64, mode: Mode) -> Result<SeriesEval> {
        match mode {
            Mode::Direct => self.direct(h, z),
            Mode::Continued => self.xi_continued_with_terms(h, z, self.limit),
        }
    }

    /// Continued `Ξ(h, z)` truncated after `n_terms ≤ limit`.
    pub fn xi_continued_with_terms(&self, h: i32, z: Complex64, n_terms: u64) -> Result<SeriesEval> {
        if h == 0 {
            return Err(LabError::domain("Ξ(0, z) = ζ_i(z) has a pole at z = 1; use zeta_i"));
        }
        self.check_continued(z)?;
        self.check_x(n_terms as f64, 10.0)?;
        let s = self.weyl_prefix(h);
        stabilized_dirichlet(
            |n| s[n as usize],
            0.0,
            z,
            n_terms,
            GrowthEnvelope::sqrt_log(envelopes::WEYL_SUM),
            None,
        )
    }

    fn check_continued(&self, z: Complex64) -> Result<()> {
        if !(z.re >= CONTINUED_MIN_RE) {
            return Err(LabError::domain(format!(
                "continued evaluation needs Re z ≥ {CONTINUED_MIN_RE}, got {z}"
            )));
        }
        Ok(())
    }

    /// `ζ_i(z) = Σ r(n) n^{−z}`.
    ///
    /// `Continued` is `π ζ(z)` plus the stabilized correction over
    /// `Σ_{m≤n} r(m) − nπ`.
    pub fn zeta_i(&self, z: Complex64, mode: Mode) -> Result<SeriesEval> {
        match mode {
            Mode::Direct => self.direct(0, z),
            Mode::Continued => {
                if z == Complex64::new(1.0, 0.0) {
                    return Err(LabError::Pole);
                }
                self.check_continued(z)?;
                let zeta = zeta_reference(z, 1e-13)?;
                stabilized_dirichlet(
                    |n| Complex64::new(self.lattice[n as usize] as f64, 0.0),
                    PI,
                    z,
                    self.limit,
                    GrowthEnvelope::sqrt(envelopes::CIRCLE_REMAINDER),
                    Some(zeta),
                )
            }
        }
    }

    /// `(z, (z − 1) ζ_i(z))` along `zs`, using the continued evaluation.
    pub fn residue_probe(&self, zs: &[Complex64]) -> Result<Vec<(Complex64, Complex64)>> {
        zs.iter()
            .map(|&z| Ok((z, (z - 1.0) * self.zeta_i(z, Mode::Continued)?.value)))
            .collect()
    }

    /// `−Ξ′(h, z)/Ξ(h, z) = ½ Σ_{ω≠0} Λ_i(ω) e^{4ih arg ω} |ω|^{−2z}`,
    /// truncated at the context limit.
    ///
    /// Only prime powers carry weight, so the sum runs over canonical primes
    /// `𝔭` and exponents `ν`: `2 Σ ln|𝔭| e^{4ihν arg 𝔭} N(𝔭)^{−νz}`. The tail
    /// bound uses `Λ_i(ω) ≤ ln|ω|`.
    pub fn xi_log_deriv(&self, h: i32, z: Complex64) -> Result<SeriesEval> {
        if !(z.re >= LOG_DERIV_MIN_RE) {
            return Err(LabError::domain(format!(
                "−Ξ′/Ξ by direct summation needs Re z ≥ {LOG_DERIV_MIN_RE}, got {z}"
            )));
        }
        let mut acc = ComplexSum::new();
        let limit = self.limit as f64;
        for (rec, phase) in self.primes.iter().zip(&self.phases) {
            let w = pow_neg(rec.norm as f64, z) * phase.powi(h);
            let mut wk = w;
            let mut q = rec.norm as f64;
            while q <= limit {
                acc.add(rec.log_abs * wk);
                wk *= w;
                q *= rec.norm as f64;
            }
        }
        let (n, s) = (limit, z.re);
        let tail = 0.25
            * (PI * (s * power_log_tail(n, s, 1) - power_log_tail(n, s, 0))
                + envelopes::CIRCLE_REMAINDER
                    * (s * power_log_tail(n, s + 0.5, 1) - power_log_tail(n, s + 0.5, 0)));
        Ok(SeriesEval {
            value: 2.0 * acc.value(),
            tail_bound: tail,
            terms_used: self.limit,
        })
    }

    /// `ψ_i(x)` from the canonical prime list.
    pub fn psi_i(&self, x: f64) -> Result<f64> {
        self.check_x(x, 1.0)?;
        Ok(psi_i_from_primes(&self.primes, x))
    }

    /// `(z/2) ∫₁^{x_max} ψ_i(x) x^{−z−1} dx`, exact over the steps of `ψ_i`.
    pub fn mellin_integral(&self, z: Complex64, x_max: f64) -> Result<Complex64> {
        self.check_x(x_max, 1.0)?;
        let mut jumps = Vec::new();
        for rec in &self.primes[..self.primes_upto(x_max)] {
            let mut q = rec.norm as f64;
            while q <= x_max {
                jumps.push((q, 4.0 * rec.log_abs));
                q *= rec.norm as f64;
            }
        }
        jumps.sort_by(|a, b| a.0.total_cmp(&b.0));
        Ok(0.5 * step_mellin(jumps, z, x_max))
    }

    /// Compares `−ζ_i′/ζ_i(z)` with the Mellin integral of `ψ_i`, bounding
    /// the integral beyond `x_max` with `ψ_i(x) ≤ 3x`.
    pub fn mellin_check(&self, z: Complex64, x_max: f64) -> Result<MellinCheck> {
        if !(z.re >= MELLIN_MIN_RE) {
            return Err(LabError::domain(format!("Mellin check needs Re z ≥ {MELLIN_MIN_RE}, got {z}")));
        }
        if !(x_max >= 1e3) {
            return Err(LabError::invalid(format!("x_max must be ≥ 1000, got {x_max}")));
        }
        let integral = self.mellin_integral(z, x_max)?;
        let sigma = z.re;
        let integral_tail = 0.5 * z.norm() * envelopes::PSI_I_UPPER_FACTOR * x_max.powf(1.0 - sigma)
            / (sigma - 1.0);
        let series = self.xi_log_deriv(0, z)?;
        Ok(MellinCheck::new(series, integral, integral_tail))
    }

    /// `3 ln|ζ_i(σ)| + 4 ln|Ξ(h, σ+it)| + ln|Ξ(2h, σ+2it)| − 8 ln 4`.
    ///
    /// From the Euler product `Ξ(h, s) = 4 Π_𝔭 (1 − e^{4ih arg 𝔭} N(𝔭)^{−s})^{−1}`,
    /// each `(𝔭, n)` contributes `N(𝔭)^{−nσ}/n · 2(1 + cos φ)²` with
    /// `φ = n(4h arg 𝔭 − t ln N(𝔭))`.
    pub fn three_four_one(&self, h: i32, sigma: f64, t: f64) -> Result<HeckeThreeFourOne> {
        if h == 0 {
            return Err(LabError::invalid("the Hecke three-four-one functional needs h ≠ 0"));
        }
        if !(sigma >= LOG_DERIV_MIN_RE) {
            return Err(LabError::domain(format!(
                "Hecke three-four-one needs σ ≥ {LOG_DERIV_MIN_RE}, got {sigma}"
            )));
        }
        let mut value = CompensatedSum::new();
        let mut comps = [CompensatedSum::new(); 3];
        for rec in &self.primes {
            let ln_norm = (rec.norm as f64).ln();
            let base = 4.0 * h as f64 * rec.arg - t * ln_norm;
            let x = (-sigma * ln_norm).exp();
            let mut xk = x;
            let mut k = 1.0;
            while xk >= EULER_TERM_FLOOR {
                let w = xk / k;
                let c1 = (k * base).cos();
                comps[0].add(w);
                comps[1].add(w * c1);
                comps[2].add(w * (2.0 * k * base).cos());
                value.add(w * 2.0 * (1.0 + c1) * (1.0 + c1));
                xk *= x;
                k += 1.0;
            }
        }
        // at most two canonical primes share a norm
        let component_tail = 2.0 * euler_log_tail(self.limit as f64, sigma)
            + 2.0 * EULER_TERM_FLOOR * self.primes.len() as f64;
        let ln4 = 4f64.ln();
        Ok(HeckeThreeFourOne {
            h,
            sigma,
            t,
            value: value.value(),
            components: [
                ln4 + comps[0].value(),
                ln4 + comps[1].value(),
                ln4 + comps[2].value(),
            ],
            component_tail,
        })
    }

    /// Number of canonical primes with norm `≤ x`.
    pub fn prime_count_i(&self, x: f64) -> Result<u64> {
        self.check_x(x, 2.0)?;
        Ok(self.primes_upto(x) as u64)
    }

    /// Gaussian primes (every associate) with norm `≤ x` and argument,
    /// normalized into `[0, 2π)`, in `[α, β)`.
    pub fn sector_count(&self, q: &SectorQuery) -> Result<u64> {
        self.check_x(q.x, 2.0)?;
        let mut count = 0;
        for rec in &self.primes[..self.primes_upto(q.x)] {
            for k in 0..4 {
                let angle = rec.arg + k as f64 * (PI / 2.0);
                if q.alpha <= angle && angle < q.beta {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// Angular histogram of all Gaussian primes with norm `≤ x` and the
    /// normalized twisted sums `(ln x / x) |Σ_𝔭 e^{4ih arg 𝔭}|`, `h = 1..=h_max`.
    pub fn equidist_report(&self, x: f64, bins: usize, h_max: u32) -> Result<EquidistReport> {
        if bins < 2 {
            return Err(LabError::invalid(format!("need at least 2 bins, got {bins}")));
        }
        self.check_x(x, 100.0)?;
        let primes = &self.primes[..self.primes_upto(x)];
        let phases = &self.phases[..primes.len()];
        let mut counts = vec![0u64; bins];
        let quarter = bins as f64 / 4.0;
        for rec in primes {
            let f = rec.arg / TAU * bins as f64;
            for k in 0..4 {
                let bin = if bins.is_multiple_of(4) {
                    // whole-bin rotation keeps the unit symmetry exact
                    f as usize + k * (bins / 4)
                } else {
                    (f + k as f64 * quarter) as usize
                };
                counts[bin.min(bins - 1)] += 1;
            }
        }
        let mean = counts.iter().sum::<u64>() as f64 / bins as f64;
        let max_rel_dev = counts
            .iter()
            .map(|&c| (c as f64 - mean).abs() / mean)
            .fold(0.0, f64::max);
        let weyl_ratios = (1..=h_max as i32)
            .map(|h| {
                let mut acc = ComplexSum::new();
                for ph in phases {
                    acc.add(ph.powi(h));
                }
                x.ln() / x * acc.value().norm()
            })
            .collect();
        Ok(EquidistReport {
            x,
            bins,
            counts,
            max_rel_dev,
            weyl_ratios,
        })
    }

    /// `4 Σ_{𝔭 canonical, N(𝔭) ≤ x} e^{4ih arg 𝔭} ln|𝔭|`.
    pub fn weighted_prime_sum(&self, h: i32, x: f64) -> Result<Complex64> {
        self.check_x(x, 2.0)?;
        let n = self.primes_upto(x);
        let mut acc = ComplexSum::new();
        for (rec, ph) in self.primes[..n].iter().zip(&self.phases[..n]) {
            acc.add(rec.log_abs * ph.powi(h));
        }
        Ok(4.0 * acc.value())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HeckeThreeFourOne {
    pub h: i32,
    pub sigma: f64,
    pub t: f64,
    /// The functional; nonnegative by construction.
    pub value: f64,
    /// `ln|ζ_i(σ)|`, `ln|Ξ(h, σ+it)|`, `ln|Ξ(2h, σ+2it)|`.
    pub components: [f64; 3],
    /// Bound on what primes beyond the context contribute to each component.
    pub component_tail: f64,
}

/// Norm bound and angular window `0 ≤ α < β ≤ 2π`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SectorQuery {
    pub x: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl SectorQuery {
    pub fn new(x: f64, alpha: f64, beta: f64) -> Result<Self> {
        if !(0.0 <= alpha && alpha < beta && beta <= TAU) {
            return Err(LabError::invalid(format!(
                "sector needs 0 ≤ α < β ≤ 2π, got [{alpha}, {beta})"
            )));
        }
        Ok(Self { x, alpha, beta })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquidistReport {
    pub x: f64,
    pub bins: usize,
    pub counts: Vec<u64>,
    pub max_rel_dev: f64,
    pub weyl_ratios: Vec<f64>,
}
