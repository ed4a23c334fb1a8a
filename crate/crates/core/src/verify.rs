//! The acceptance suite: sixteen numbered criteria, each made of sub-checks
//! that are either exact statements (`Hard`) or empirical envelopes standing
//! in for asymptotic bounds (`Envelope`). Every criterion also carries a
//! wall-clock budget.

use std::fmt::Write as _;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dirichlet::{mellin_check_rational, tauberian_trace, three_four_one};
use crate::envelopes as env;
use crate::error::{LabError, Result};
use crate::experiments::{pnt_table, DEFAULT_ZETA_SIGMAS, DEFAULT_ZETA_TS};
use crate::gaussian::{gaussian_primes_upto, psi_i, r_table};
use crate::hecke::{HeckeContext, Mode, SectorQuery};
use crate::numeric::integrate;
use crate::rational::{
    chebyshev, factorial_identities, floor_bracket, log_integral, mertens_report, summatory, ArithFn,
    EpsSchedule, Tables,
};

/// `pnt-table --xmax 1000` as produced by the reference build.
pub const GOLDEN_PNT_TABLE_1000: &str =
    include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/pnt_table_1000.csv"));

const RATIONAL_LIMIT: u64 = 10_000_000;
const GAUSSIAN_LIMIT: u64 = 1_000_000;

/// Data shared by all criteria, built on first use.
pub struct Lab {
    tables: OnceLock<Tables>,
    hecke: OnceLock<HeckeContext>,
}

impl Lab {
    pub fn new() -> Self {
        Self {
            tables: OnceLock::new(),
            hecke: OnceLock::new(),
        }
    }

    /// A process-wide instance.
    pub fn shared() -> &'static Lab {
        static LAB: OnceLock<Lab> = OnceLock::new();
        LAB.get_or_init(Lab::new)
    }

    pub fn tables(&self) -> &Tables {
        self.tables
            .get_or_init(|| Tables::new(RATIONAL_LIMIT).expect("rational tables fit the memory budget"))
    }

    pub fn hecke(&self) -> &HeckeContext {
        self.hecke
            .get_or_init(|| HeckeContext::new(GAUSSIAN_LIMIT).expect("Gaussian context fits the limit"))
    }
}

impl Default for Lab {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckClass {
    Hard,
    Envelope,
}

#[derive(Debug, Clone)]
pub struct SubCheck {
    pub class: CheckClass,
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Rational,
    Gaussian,
    Cli,
}

pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub suite: Suite,
    pub budget: Duration,
    run: fn(&Lab) -> Result<Vec<SubCheck>>,
}

#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub checks: Vec<SubCheck>,
    pub error: Option<String>,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl CriterionOutcome {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.elapsed <= self.budget && self.checks.iter().all(|c| c.passed)
    }

    /// One line: status, id, title, timing.
    pub fn summary_line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{status} {:>2}  {:<48} {:>7.2}s / {:>3}s",
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs()
        );
        if let Some(e) = &self.error {
            let _ = write!(line, "  error: {e}");
        }
        line
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub outcomes: Vec<CriterionOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(CriterionOutcome::passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::from("criteria\n");
        for o in &self.outcomes {
            out.push_str(&o.summary_line());
            out.push('\n');
        }
        for (class, heading) in [(CheckClass::Hard, "HARD checks"), (CheckClass::Envelope, "ENVELOPE checks")] {
            let _ = writeln!(out, "\n{heading}");
            for o in &self.outcomes {
                for c in o.checks.iter().filter(|c| c.class == class) {
                    let status = if c.passed { "pass" } else { "FAIL" };
                    let _ = writeln!(out, "  {status} [{:>2}] {}: {}", o.id, c.label, c.detail);
                }
            }
        }
        let passed = self.outcomes.iter().filter(|o| o.passed()).count();
        let _ = writeln!(out, "\n{passed}/{} criteria passed", self.outcomes.len());
        out
    }
}

fn hard(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> SubCheck {
    SubCheck {
        class: CheckClass::Hard,
        label: label.into(),
        passed,
        detail: detail.into(),
    }
}

fn envelope(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> SubCheck {
    SubCheck {
        class: CheckClass::Envelope,
        label: label.into(),
        passed,
        detail: detail.into(),
    }
}

fn within(v: f64, window: (f64, f64)) -> bool {
    window.0 <= v && v <= window.1
}

/// `10^{lo}, 10^{lo + 1/steps}, ..., 10^{hi}`.
fn log_grid(lo: i32, hi: i32, steps: i32) -> Vec<f64> {
    (0..=(hi - lo) * steps)
        .map(|k| 10f64.powf(lo as f64 + k as f64 / steps as f64))
        .collect()
}

pub fn criteria() -> Vec<Criterion> {
    let s = Duration::from_secs;
    vec![
        Criterion { id: 1, title: "factorial identity for psi", suite: Suite::Rational, budget: s(5), run: c01 },
        Criterion { id: 2, title: "floor bracket takes values 0 and 1", suite: Suite::Rational, budget: s(1), run: c02 },
        Criterion { id: 3, title: "Chebyshev bounds", suite: Suite::Rational, budget: s(60), run: c03 },
        Criterion { id: 4, title: "Mertens estimates", suite: Suite::Rational, budget: s(60), run: c04 },
        Criterion { id: 5, title: "pi(x) against li(x)", suite: Suite::Rational, budget: s(10), run: c05 },
        Criterion { id: 6, title: "three-four-one inequality for zeta", suite: Suite::Rational, budget: s(30), run: c06 },
        Criterion { id: 7, title: "Mellin identity for psi", suite: Suite::Rational, budget: s(30), run: c07 },
        Criterion { id: 8, title: "Moebius and Liouville sums are o(x)", suite: Suite::Rational, budget: s(10), run: c08 },
        Criterion { id: 9, title: "Gauss circle remainder and r(n)", suite: Suite::Gaussian, budget: s(60), run: c09 },
        Criterion { id: 10, title: "Weyl sums over Z[i]", suite: Suite::Gaussian, budget: s(60), run: c10 },
        Criterion { id: 11, title: "prime number theorem in Z[i]", suite: Suite::Gaussian, budget: s(60), run: c11 },
        Criterion { id: 12, title: "angular equidistribution of Gaussian primes", suite: Suite::Gaussian, budget: s(60), run: c12 },
        Criterion { id: 13, title: "continuation of Xi and zeta_i", suite: Suite::Gaussian, budget: s(30), run: c13 },
        Criterion { id: 14, title: "three-four-one inequality for Xi", suite: Suite::Gaussian, budget: s(30), run: c14 },
        Criterion { id: 15, title: "Tauberian integral converges", suite: Suite::Rational, budget: s(10), run: c15 },
        Criterion { id: 16, title: "pnt-table output is byte-stable", suite: Suite::Cli, budget: s(1), run: c16 },
    ]
}

/// Criteria selected by a suite name: `all`, `rational`, `gaussian`, `cli`,
/// or a single criterion number.
pub fn select(suite: &str) -> Result<Vec<Criterion>> {
    let all = criteria();
    let picked: Vec<Criterion> = match suite {
        "all" => all,
        "rational" => all.into_iter().filter(|c| c.suite == Suite::Rational).collect(),
        "gaussian" => all.into_iter().filter(|c| c.suite == Suite::Gaussian).collect(),
        "cli" => all.into_iter().filter(|c| c.suite == Suite::Cli).collect(),
        other => {
            let id: u8 = other
                .parse()
                .map_err(|_| LabError::invalid(format!("unknown suite '{other}'")))?;
            let picked: Vec<_> = all.into_iter().filter(|c| c.id == id).collect();
            if picked.is_empty() {
                return Err(LabError::invalid(format!("no criterion numbered {id}")));
            }
            picked
        }
    };
    Ok(picked)
}

pub fn run_criterion(c: &Criterion, lab: &Lab) -> CriterionOutcome {
    let start = Instant::now();
    let (checks, error) = match (c.run)(lab) {
        Ok(checks) => (checks, None),
        Err(e) => (Vec::new(), Some(e.to_string())),
    };
    CriterionOutcome {
        id: c.id,
        title: c.title,
        checks,
        error,
        elapsed: start.elapsed(),
        budget: c.budget,
    }
}

pub fn verify(suite: &str, lab: &Lab) -> Result<VerifyReport> {
    let outcomes = select(suite)?.iter().map(|c| run_criterion(c, lab)).collect();
    Ok(VerifyReport { outcomes })
}

fn c01(lab: &Lab) -> Result<Vec<SubCheck>> {
    let t = lab.tables();
    let mut out = Vec::new();
    for x in [1e3, 1e4, 1e5] {
        let f = factorial_identities(x, t)?;
        let rel = (f.lhs_a - f.rhs_a_exact).abs() / f.rhs_a_exact;
        out.push(hard(
            format!("sum Lambda(n) floor(x/n) = ln floor(x)! at x={x:e}"),
            rel <= env::IDENTITY_REL,
            format!("relative error {rel:.2e}"),
        ));
    }
    Ok(out)
}

fn c02(_: &Lab) -> Result<Vec<SubCheck>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut bad = 0u64;
    for _ in 0..1_000_000 {
        let a: f64 = rng.gen_range(0.0..1e6);
        if !matches!(floor_bracket(a), 0 | 1) {
            bad += 1;
        }
    }
    Ok(vec![hard(
        "floor(a) - 2 floor(a/2) in {0,1} for 10^6 seeded samples",
        bad == 0,
        format!("{bad} violations"),
    )])
}

fn c03(lab: &Lab) -> Result<Vec<SubCheck>> {
    let t = lab.tables();
    let mut worst_pi = (f64::INFINITY, f64::NEG_INFINITY);
    let mut worst_psi = worst_pi;
    let mut sandwich = true;
    let mut routes = 0f64;
    for x in log_grid(3, 7, 10) {
        let c = chebyshev(x, t)?;
        worst_pi = (worst_pi.0.min(c.ratio_pi), worst_pi.1.max(c.ratio_pi));
        worst_psi = (worst_psi.0.min(c.ratio_psi), worst_psi.1.max(c.ratio_psi));
        sandwich &= c.theta <= c.psi && c.psi <= c.pi_x as f64 * x.ln();
        routes = routes.max((c.psi - c.psi_by_powers).abs() / c.psi);
    }
    let top = chebyshev(1e7, t)?;
    let dev = (top.ratio_psi - 1.0).abs();
    Ok(vec![
        hard("theta <= psi <= pi(x) ln x on the grid", sandwich, "41 log-spaced points in [1e3, 1e7]"),
        hard("psi by Lambda table equals psi by prime powers", routes <= env::IDENTITY_REL, format!("max relative gap {routes:.2e}")),
        envelope(
            "pi(x) ln x / x in [0.9, 1.3]",
            within(worst_pi.0, env::CHEBYSHEV_PI_RATIO) && within(worst_pi.1, env::CHEBYSHEV_PI_RATIO),
            format!("range [{:.6}, {:.6}]", worst_pi.0, worst_pi.1),
        ),
        envelope(
            "psi(x) / x in [0.8, 1.2]",
            within(worst_psi.0, env::CHEBYSHEV_PSI_RATIO) && within(worst_psi.1, env::CHEBYSHEV_PSI_RATIO),
            format!("range [{:.6}, {:.6}]", worst_psi.0, worst_psi.1),
        ),
        envelope("|psi(1e7)/1e7 - 1| <= 0.01", dev <= env::PSI_AT_1E7_DEVIATION, format!("{dev:.3e}")),
    ])
}

fn c04(lab: &Lab) -> Result<Vec<SubCheck>> {
    let t = lab.tables();
    let mut worst_a = 0f64;
    for x in log_grid(2, 7, 10) {
        worst_a = worst_a.max(mertens_report(x, t)?.a.abs());
    }
    let b: Vec<f64> = [1e5, 1e6, 1e7]
        .iter()
        .map(|&x| mertens_report(x, t).map(|m| m.b))
        .collect::<Result<_>>()?;
    let spread = b.iter().cloned().fold(f64::NEG_INFINITY, f64::max) - b.iter().cloned().fold(f64::INFINITY, f64::min);
    let p = mertens_report(1e7, t)?.p;
    Ok(vec![
        envelope("|A(x)| <= 2 on [1e2, 1e7]", worst_a <= env::MERTENS_A_ABS, format!("max |A| = {worst_a:.6}")),
        envelope(
            "B(1e5), B(1e6), B(1e7) pairwise within 0.01",
            spread <= env::MERTENS_B_SPREAD,
            format!("B = {:.8}, {:.8}, {:.8}", b[0], b[1], b[2]),
        ),
        envelope("P(1e7) in [0.53, 0.60]", within(p, env::MERTENS_P_AT_1E7), format!("P = {p:.8}")),
    ])
}

/// `li(x) = Ei(ln x) = γ + ln y + ∫₀^y (e^u − 1)/u du`, `y = ln x`.
pub fn li_oracle(x: f64) -> f64 {
    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
    let y = x.ln();
    let f = |u: f64| if u == 0.0 { 1.0 } else { u.exp_m1() / u };
    EULER_GAMMA + y.ln() + integrate(f, 0.0, y, 0.0, 1e-15, 500).value
}

fn c05(lab: &Lab) -> Result<Vec<SubCheck>> {
    let t = lab.tables();
    let mut out = Vec::new();
    for x in [1e5, 1e6, 1e7] {
        let li = log_integral(x, EpsSchedule::default())?;
        let oracle = li_oracle(x);
        let rel = (li - oracle).abs() / oracle;
        out.push(hard(
            format!("li({x:e}) matches the exponential-integral quadrature"),
            rel <= env::LI_ORACLE_REL,
            format!("li = {li:.6}, relative gap {rel:.2e}"),
        ));
        let ratio = chebyshev(x, t)?.pi_x as f64 / li;
        out.push(envelope(
            format!("pi/li at {x:e} in [0.995, 1.0005]"),
            within(ratio, env::PI_OVER_LI),
            format!("{ratio:.8}"),
        ));
    }
    Ok(out)
}

fn c06(lab: &Lab) -> Result<Vec<SubCheck>> {
    let primes = &lab.tables().primes;
    let mut worst = f64::INFINITY;
    for &s in &DEFAULT_ZETA_SIGMAS {
        for &t in &DEFAULT_ZETA_TS {
            worst = worst.min(three_four_one(s, t, primes)?.log_theta);
        }
    }
    Ok(vec![hard(
        "3 ln|zeta(s)| + 4 ln|zeta(s+it)| + ln|zeta(s+2it)| >= -1e-9 on the 4x5 grid",
        worst >= -env::NONNEGATIVE_SLACK,
        format!("minimum {worst:.6e}"),
    )])
}

fn c07(lab: &Lab) -> Result<Vec<SubCheck>> {
    let t = lab.tables();
    let mut out = Vec::new();
    for z in [Complex64::new(2.0, 0.0), Complex64::new(1.5, 1.0)] {
        let m = mellin_check_rational(z, 1e6, t)?;
        out.push(hard(
            format!("-zeta'/zeta({z}) against z * int psi(x) x^(-z-1) dx up to 1e6"),
            m.holds(),
            format!("gap {:.3e}, bound {:.3e}", m.gap, m.combined_bound),
        ));
    }
    Ok(out)
}

fn c08(lab: &Lab) -> Result<Vec<SubCheck>> {
    let t = lab.tables();
    let m = summatory(ArithFn::Moebius, 1e6, t)?;
    let l = summatory(ArithFn::Liouville, 1e6, t)?;
    Ok(vec![
        envelope("|M(1e6)| / 1e6 <= 0.01", m.abs() as f64 / 1e6 <= env::SUMMATORY_DENSITY, format!("M = {m}")),
        envelope("|L(1e6)| / 1e6 <= 0.01", l.abs() as f64 / 1e6 <= env::SUMMATORY_DENSITY, format!("L = {l}")),
    ])
}

fn c09(lab: &Lab) -> Result<Vec<SubCheck>> {
    let h = lab.hecke();
    let mut worst = 0f64;
    let mut n = 1000u64;
    while n <= 1_000_000 {
        let rem = h.lattice_count(n)? as f64 - n as f64 * std::f64::consts::PI;
        worst = worst.max(rem.abs() / (n as f64).sqrt());
        n += if n < 10_000 { 1 } else { 97 };
    }
    // 4 (d₁(n) − d₃(n)) by a divisor sieve
    const N: usize = 10_000;
    let mut chi_sum = vec![0i64; N + 1];
    for d in (1..=N).step_by(2) {
        let chi = if d % 4 == 1 { 1 } else { -1 };
        for m in (d..=N).step_by(d) {
            chi_sum[m] += chi;
        }
    }
    let r = r_table(N as u64)?;
    let mismatches = (1..=N).filter(|&n| r[n] as i64 != 4 * chi_sum[n]).count();
    Ok(vec![
        hard("lattice r(n) = 4(d1(n) - d3(n)) for n <= 1e4", mismatches == 0, format!("{mismatches} mismatches")),
        envelope(
            "|sum r(m) - n pi| <= 5 sqrt(n) on [1e3, 1e6]",
            worst <= env::CIRCLE_REMAINDER,
            format!("max ratio {worst:.4}"),
        ),
    ])
}

fn c10(lab: &Lab) -> Result<Vec<SubCheck>> {
    let ctx = lab.hecke();
    let mut worst = 0f64;
    let mut density = 0f64;
    for h in 1..=3 {
        for x in [1e3, 1e4, 1e5, 1e6] {
            let s = ctx.weyl_sum(h, x)?.norm();
            worst = worst.max(s / (x.sqrt() * x.ln()));
        }
        density = density.max(ctx.weyl_sum(h, 1e6)?.norm() / 1e6);
    }
    Ok(vec![
        envelope("|S_h(x)| <= 10 sqrt(x) ln x, h <= 3", worst <= env::WEYL_SUM, format!("max ratio {worst:.4}")),
        envelope("|S_h(1e6)| / 1e6 <= 0.01", density <= env::WEYL_SUM_DENSITY_AT_1E6, format!("max {density:.3e}")),
    ])
}

fn c11(lab: &Lab) -> Result<Vec<SubCheck>> {
    let ctx = lab.hecke();
    let x = 1e6;
    let psi = psi_i(x)?;
    let ratio_psi = psi / (2.0 * x);
    let pi_x = ctx.prime_count_i(x)?;
    let ratio_pi = pi_x as f64 * x.ln() / x;
    let p25 = gaussian_primes_upto(25.0)?.len();
    let p100 = gaussian_primes_upto(100.0)?.len();
    Ok(vec![
        hard("pi_i(25) = 8 and pi_i(100) = 25", p25 == 8 && p100 == 25, format!("{p25}, {p100}")),
        envelope("psi_i(1e6) / 2e6 in [0.93, 1.07]", within(ratio_psi, env::PSI_I_RATIO), format!("{ratio_psi:.6}")),
        envelope("pi_i(1e6) ln(1e6) / 1e6 in [1.0, 1.15]", within(ratio_pi, env::PI_I_RATIO), format!("{ratio_pi:.6} (pi_i = {pi_x})")),
    ])
}

fn c12(lab: &Lab) -> Result<Vec<SubCheck>> {
    let ctx = lab.hecke();
    let r = ctx.equidist_report(1e6, 8, 3)?;
    let full = ctx.sector_count(&SectorQuery::new(1e6, 0.0, std::f64::consts::TAU)?)?;
    let worst = r.weyl_ratios.iter().cloned().fold(0.0, f64::max);
    Ok(vec![
        hard(
            "full-circle sector count equals 4 pi_i(x)",
            full == 4 * ctx.prime_count_i(1e6)?,
            format!("{full}"),
        ),
        envelope("8 sectors within 3% of the mean", r.max_rel_dev <= env::SECTOR_REL_DEV, format!("max deviation {:.4}", r.max_rel_dev)),
        envelope("twisted prime sums <= 0.05 for h <= 3", worst <= env::WEYL_PRIME_RATIO, format!("max {worst:.4e}")),
    ])
}

fn c13(lab: &Lab) -> Result<Vec<SubCheck>> {
    let ctx = lab.hecke();
    let mut out = Vec::new();
    for z in [Complex64::new(1.5, 0.0), Complex64::new(1.2, 2.0), Complex64::new(3.0, 0.0)] {
        let d = ctx.xi(1, z, Mode::Direct)?;
        let c = ctx.xi(1, z, Mode::Continued)?;
        let gap = (d.value - c.value).norm();
        let bound = d.tail_bound + c.tail_bound + env::CONTRACT_SLACK;
        out.push(hard(format!("Xi(1, {z}) direct vs continued"), gap <= bound, format!("gap {gap:.3e}, bound {bound:.3e}")));
        let d = ctx.zeta_i(z, Mode::Direct)?;
        let c = ctx.zeta_i(z, Mode::Continued)?;
        let gap = (d.value - c.value).norm();
        let bound = d.tail_bound + c.tail_bound + env::CONTRACT_SLACK;
        out.push(hard(format!("zeta_i({z}) direct vs continued"), gap <= bound, format!("gap {gap:.3e}, bound {bound:.3e}")));
    }
    let probe = ctx.residue_probe(&[Complex64::new(1.001, 0.0)])?;
    let err = (probe[0].1 - std::f64::consts::PI).norm();
    out.push(envelope("|(z-1) zeta_i(z) - pi| <= 0.05 at z = 1.001", err <= env::RESIDUE_PROBE, format!("{err:.4e}")));
    Ok(out)
}

fn c14(lab: &Lab) -> Result<Vec<SubCheck>> {
    let ctx = lab.hecke();
    let mut worst = f64::INFINITY;
    for h in [1, 2] {
        for s in [1.2, 1.5] {
            for t in [0.7, 3.0] {
                worst = worst.min(ctx.three_four_one(h, s, t)?.value);
            }
        }
    }
    Ok(vec![hard(
        "Hecke three-four-one functional >= -1e-9 on the 2x2x2 grid",
        worst >= -env::NONNEGATIVE_SLACK,
        format!("minimum {worst:.6e}"),
    )])
}

fn c15(lab: &Lab) -> Result<Vec<SubCheck>> {
    let tr = tauberian_trace(&[1e5, 1e6], lab.tables())?;
    let d = (tr[1].1 - tr[0].1).abs();
    Ok(vec![envelope(
        "|T(1e6) - T(1e5)| <= 0.05",
        d <= env::TAUBERIAN_CAUCHY,
        format!("T(1e5) = {:.6}, T(1e6) = {:.6}", tr[0].1, tr[1].1),
    )])
}

fn c16(_: &Lab) -> Result<Vec<SubCheck>> {
    let first = pnt_table(1000.0, 3)?.to_csv();
    let second = pnt_table(1000.0, 3)?.to_csv();
    Ok(vec![
        hard("two runs are byte-identical", first == second, format!("{} bytes", first.len())),
        hard("output equals the golden file", first == GOLDEN_PNT_TABLE_1000, "tests/golden/pnt_table_1000.csv"),
    ])
}
