//! Concrete constants that stand in for asymptotic `O(·)` statements.
//!
//! Every asymptotic bound exercised by the laboratory is turned into an
//! explicit interval or constant here, so the numbers used by the
//! verification suite and by truncation-error bounds can be audited in one
//! place. All of them are empirical envelopes measured at desk scale
//! (`x ≤ 10⁷`); none is a proven constant.
//!
//! | Group | Quantity |
//! |-------|----------|
//! | Chebyshev | `π(x) ln x / x`, `ψ(x) / x` |
//! | Mertens | `Σ ln p / p − ln x`, `Σ 1/p − ln ln x`, `ln x Π(1 − 1/p)` |
//! | Lattice | Gauss circle remainder, Weyl sums |
//! | Hecke | `ψ_i(x) / 2x`, `π_i(x) ln x / x`, angular bins |

// ═══════════════════════════════════════════════════════════════════
// Rational primes
// ═══════════════════════════════════════════════════════════════════

/// Interval for `π(x) ln x / x` on `[10³, 10⁷]`.
pub const CHEBYSHEV_PI_RATIO: (f64, f64) = (0.9, 1.3);

/// Interval for `ψ(x) / x` on `[10³, 10⁷]`.
pub const CHEBYSHEV_PSI_RATIO: (f64, f64) = (0.8, 1.2);

/// `|ψ(10⁷)/10⁷ − 1|` must not exceed this.
pub const PSI_AT_1E7_DEVIATION: f64 = 0.01;

/// `ψ(x)/x` at `x = 10⁶` lies in this window.
pub const PSI_AT_1E6_RATIO: (f64, f64) = (0.99, 1.01);

/// Upper envelope `ψ(x) ≤ PSI_UPPER_FACTOR · x`, used for the tail of the
/// Mellin integral beyond the sieved range.
pub const PSI_UPPER_FACTOR: f64 = 2.0;

/// Bound on `|Σ_{n≤x} Λ(n)(⌊x/n⌋ − 2⌊x/2n⌋) − x ln 2|` in units of `ln x`.
pub const CENTRAL_BINOMIAL_LOG_SLACK: f64 = 40.0;

/// `|Σ_{p≤x} ln p / p − ln x|` on `[10², 10⁷]`.
pub const MERTENS_A_ABS: f64 = 2.0;

/// Pairwise spread allowed between `Σ 1/p − ln ln x` at `10⁵, 10⁶, 10⁷`.
pub const MERTENS_B_SPREAD: f64 = 0.01;

/// Window for `Σ_{p≤10⁶} 1/p − ln ln 10⁶`.
pub const MERTENS_B_AT_1E6: (f64, f64) = (0.25, 0.28);

/// Window for `ln x Π_{p≤x}(1 − 1/p)` at `x = 10⁶`.
pub const MERTENS_P_AT_1E6: (f64, f64) = (0.53, 0.63);

/// Window for `ln x Π_{p≤x}(1 − 1/p)` at `x = 10⁷`.
pub const MERTENS_P_AT_1E7: (f64, f64) = (0.53, 0.60);

/// Window for `π(x) / li(x)` at `x ∈ {10⁵, 10⁶, 10⁷}`.
pub const PI_OVER_LI: (f64, f64) = (0.995, 1.0005);

/// `|li(x) ln x / x − 1|` at `x = 10⁶`.
pub const LI_ASYMPTOTIC_AT_1E6: f64 = 0.09;

/// `|M(x)| / x` and `|L(x)| / x` at `x = 10⁶`.
pub const SUMMATORY_DENSITY: f64 = 0.01;

/// Window for the density of square-free integers at `10⁴, 10⁵, 10⁶`.
pub const SQUAREFREE_DENSITY: (f64, f64) = (0.60, 0.62);

/// `|T(10⁶) − T(10⁵)|` for the Tauberian integral of `(ψ(x) − x)/x²`.
pub const TAUBERIAN_CAUCHY: f64 = 0.05;

// ═══════════════════════════════════════════════════════════════════
// Lattice sums on ℤ[i]
// ═══════════════════════════════════════════════════════════════════

/// `|Σ_{m≤n} r(m) − nπ| ≤ CIRCLE_REMAINDER · √n`.
///
/// Also used as the certified growth of the stabilized `ζ_i` series and
/// in the tail bounds of direct lattice Dirichlet series.
pub const CIRCLE_REMAINDER: f64 = 5.0;

/// `|S_h(x)| ≤ WEYL_SUM · √x ln x` for `h ≠ 0`.
pub const WEYL_SUM: f64 = 10.0;

/// `|S_h(10⁶)| / 10⁶`.
pub const WEYL_SUM_DENSITY_AT_1E6: f64 = 0.01;

/// Upper envelope `ψ_i(x) ≤ PSI_I_UPPER_FACTOR · x` for the Gaussian Mellin tail.
pub const PSI_I_UPPER_FACTOR: f64 = 3.0;

/// `|ψ_i(x) − 4 Σ_𝔭 ln|𝔭|| ≤ PRIME_POWER_CORRECTION · √x ln x`.
pub const PRIME_POWER_CORRECTION: f64 = 8.0;

// ═══════════════════════════════════════════════════════════════════
// Hecke prime number theorem
// ═══════════════════════════════════════════════════════════════════

/// Window for `ψ_i(10⁶) / (2 · 10⁶)`.
pub const PSI_I_RATIO: (f64, f64) = (0.93, 1.07);

/// Window for `π_i(10⁶) ln 10⁶ / 10⁶`.
pub const PI_I_RATIO: (f64, f64) = (1.0, 1.15);

/// `|4 Σ_𝔭 e^{4i arg 𝔭} ln|𝔭|| / x` at `x = 10⁶`.
pub const TWISTED_PRIME_SUM_DENSITY: f64 = 0.05;

/// Maximum relative deviation of angular bin counts from their mean at `10⁶`.
pub const SECTOR_REL_DEV: f64 = 0.03;

/// `(ln x / x) |Σ_𝔭 e^{4ih arg 𝔭}|` for `1 ≤ h ≤ 3` at `10⁶`.
pub const WEYL_PRIME_RATIO: f64 = 0.05;

/// `|(z − 1) ζ_i(z) − π|` at `z = 1.001`.
pub const RESIDUE_PROBE: f64 = 0.05;

// ═══════════════════════════════════════════════════════════════════
// Numerical contracts (not asymptotic, but pinned here as well)
// ═══════════════════════════════════════════════════════════════════

/// Slack allowed below zero for the three-four-one functionals.
pub const NONNEGATIVE_SLACK: f64 = 1e-9;

/// Absolute slack added to every "agree within combined bounds" contract.
pub const CONTRACT_SLACK: f64 = 1e-6;

/// Relative agreement of exact identities evaluated in floating point.
pub const IDENTITY_REL: f64 = 1e-9;

/// Relative agreement of `li(x)` with an independent quadrature.
pub const LI_ORACLE_REL: f64 = 1e-6;
