//! Arithmetic in the Gaussian integers `ℤ[i]`.
//!
//! Primes are classified by the usual rule: `ω` is prime when its norm is a
//! rational prime, or when `ω` is an associate of a rational prime
//! `q ≡ 3 (mod 4)`. Each class of associates has one canonical
//! representative with argument in `[0, π/2)`, i.e. `re > 0, im ≥ 0`.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{LabError, Result};
use crate::numeric::{isqrt, CompensatedSum};
use crate::sieve::{build_prime_table, prime_power, PrimeTable};

/// Largest accepted coordinate magnitude.
pub const COORD_LIMIT: i64 = 1 << 31;

/// `ω = re + im·i` with `|re|, |im| ≤ 2³¹`, so the norm always fits in a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GaussianInt {
    re: i64,
    im: i64,
}

impl GaussianInt {
    pub fn new(re: i64, im: i64) -> Result<Self> {
        if re.abs() > COORD_LIMIT || im.abs() > COORD_LIMIT {
            return Err(LabError::OutOfRange {
                what: "coordinate",
                value: re.abs().max(im.abs()) as f64,
                lo: -(COORD_LIMIT as f64),
                hi: COORD_LIMIT as f64,
            });
        }
        Ok(Self { re, im })
    }

    // callers guarantee the coordinate bound
    pub(crate) const fn raw(re: i64, im: i64) -> Self {
        Self { re, im }
    }

    pub fn re(&self) -> i64 {
        self.re
    }

    pub fn im(&self) -> i64 {
        self.im
    }

    pub fn norm(&self) -> u64 {
        (self.re * self.re) as u64 + (self.im * self.im) as u64
    }

    /// Argument in `(−π, π]`.
    pub fn arg(&self) -> f64 {
        (self.im as f64).atan2(self.re as f64)
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }

    /// `i · ω`.
    pub fn mul_i(&self) -> Self {
        Self::raw(-self.im, self.re)
    }

    /// `ω, iω, −ω, −iω`.
    pub fn associates(&self) -> [Self; 4] {
        let a = *self;
        let b = a.mul_i();
        let c = b.mul_i();
        [a, b, c, c.mul_i()]
    }

    /// `e^{4i arg ω}`, computed as `(ω/|ω|)⁴` so that it is exactly
    /// invariant under multiplication by units.
    pub fn quartic_phase(&self) -> Complex64 {
        let n = self.norm() as f64;
        let w = Complex64::new(self.re as f64, self.im as f64) / n.sqrt();
        let w2 = w * w;
        w2 * w2
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.re, self.im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Classification {
    Zero,
    Unit,
    Prime,
    Composite,
}

/// Deterministic Miller–Rabin for all `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        r
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn classify(w: GaussianInt) -> Classification {
    match w.norm() {
        0 => Classification::Zero,
        1 => Classification::Unit,
        n if is_prime_u64(n) => Classification::Prime,
        _ => {
            let q = if w.re == 0 {
                w.im.unsigned_abs()
            } else if w.im == 0 {
                w.re.unsigned_abs()
            } else {
                return Classification::Composite;
            };
            if q % 4 == 3 && is_prime_u64(q) {
                Classification::Prime
            } else {
                Classification::Composite
            }
        }
    }
}

/// The associate of `w` with `re > 0, im ≥ 0`.
pub fn canonical_rep(w: GaussianInt) -> Result<GaussianInt> {
    if w.is_zero() {
        return Err(LabError::invalid("zero has no canonical associate"));
    }
    let mut v = w;
    while !(v.re > 0 && v.im >= 0) {
        v = v.mul_i();
    }
    Ok(v)
}

fn ceil_sqrt(n: u64) -> u64 {
    let r = isqrt(n);
    if r * r == n {
        r
    } else {
        r + 1
    }
}

fn check_ball_radius(x: f64, lo: f64) -> Result<u64> {
    let hi = (COORD_LIMIT as f64) * (COORD_LIMIT as f64);
    if !(x >= lo) || !(x <= hi) {
        return Err(LabError::OutOfRange {
            what: "x",
            value: x,
            lo,
            hi,
        });
    }
    Ok(x.floor() as u64)
}

/// Stream over `B_x(i) \ {0}` ordered by norm, then by argument.
///
/// Points are produced one norm band at a time, so memory stays at
/// `O(band + √x)` however large `x` is.
pub struct BallIter {
    limit: u64,
    next_lo: u64,
    band: u64,
    buf: Vec<GaussianInt>,
    pos: usize,
}

impl BallIter {
    fn refill(&mut self) -> bool {
        while self.next_lo <= self.limit {
            let lo = self.next_lo;
            let hi = (lo + self.band - 1).min(self.limit);
            self.next_lo = hi + 1;
            self.buf.clear();
            self.pos = 0;
            let r = isqrt(hi) as i64;
            for a in -r..=r {
                let a2 = (a * a) as u64;
                let b_hi = isqrt(hi - a2) as i64;
                let b_lo = ceil_sqrt(lo.saturating_sub(a2)) as i64;
                for b in b_lo..=b_hi {
                    self.buf.push(GaussianInt::raw(a, b));
                    if b != 0 {
                        self.buf.push(GaussianInt::raw(a, -b));
                    }
                }
            }
            self.buf.sort_by(|p, q| {
                p.norm()
                    .cmp(&q.norm())
                    .then_with(|| p.arg().partial_cmp(&q.arg()).unwrap_or(Ordering::Equal))
            });
            if !self.buf.is_empty() {
                return true;
            }
        }
        false
    }
}

impl Iterator for BallIter {
    type Item = GaussianInt;

    fn next(&mut self) -> Option<GaussianInt> {
        if self.pos == self.buf.len() && !self.refill() {
            return None;
        }
        let w = self.buf[self.pos];
        self.pos += 1;
        Some(w)
    }
}

/// Every `ω ≠ 0` with `|ω|² ≤ x`, ordered by `(norm, arg)`.
pub fn enumerate_ball(x: f64) -> Result<BallIter> {
    let limit = check_ball_radius(x, 1.0)?;
    Ok(BallIter {
        limit,
        next_lo: 1,
        band: (1u64 << 14).max(8 * isqrt(limit)),
        buf: Vec::new(),
        pos: 0,
    })
}

/// Calls `f(a, b)` for every `a ≥ 1, b ≥ 0` with `a² + b² ≤ limit`: one
/// point per class of associates.
pub(crate) fn for_each_quadrant_point(limit: u64, mut f: impl FnMut(i64, i64, u64)) {
    let r = isqrt(limit) as i64;
    for a in 1..=r {
        let a2 = (a * a) as u64;
        let b_hi = isqrt(limit - a2) as i64;
        for b in 0..=b_hi {
            f(a, b, a2 + (b * b) as u64);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GaussianPrimeRecord {
    pub rep: GaussianInt,
    pub norm: u64,
    /// In `[0, π/2)`.
    pub arg: f64,
    /// `ln|𝔭| = ½ ln norm`.
    pub log_abs: f64,
}

impl GaussianPrimeRecord {
    fn new(rep: GaussianInt) -> Self {
        let norm = rep.norm();
        Self {
            rep,
            norm,
            arg: rep.arg(),
            log_abs: 0.5 * (norm as f64).ln(),
        }
    }
}

fn by_norm_then_arg(p: &GaussianPrimeRecord, q: &GaussianPrimeRecord) -> Ordering {
    p.norm
        .cmp(&q.norm)
        .then_with(|| p.arg.partial_cmp(&q.arg).unwrap_or(Ordering::Equal))
}

/// Canonical Gaussian primes with norm `≤ x` sorted by `(norm, arg)`.
pub fn gaussian_primes_upto(x: f64) -> Result<Vec<GaussianPrimeRecord>> {
    let limit = check_ball_radius(x, 2.0)?;
    let table = build_prime_table(limit)?;
    Ok(gaussian_primes_from_table(limit, &table))
}

pub(crate) fn gaussian_primes_from_table(limit: u64, table: &PrimeTable) -> Vec<GaussianPrimeRecord> {
    let mut out = Vec::new();
    for_each_quadrant_point(limit, |a, b, n| {
        let inert = b == 0 && a % 4 == 3 && table.is_prime(a as u64);
        if table.is_prime(n) || inert {
            out.push(GaussianPrimeRecord::new(GaussianInt::raw(a, b)));
        }
    });
    out.sort_by(by_norm_then_arg);
    out
}

fn mangoldt_i_given(w: GaussianInt, base: Option<(u64, u32)>) -> f64 {
    match base {
        Some((2, _)) => 0.5 * std::f64::consts::LN_2,
        // both 𝔭 and its conjugate divide ω exactly when p divides re and im
        Some((p, _)) if p % 4 == 1 => {
            let p = p as i64;
            if w.re % p == 0 && w.im % p == 0 {
                0.0
            } else {
                0.5 * (p as f64).ln()
            }
        }
        // the norm of any element is q^{2ν}; q is inert so ω = u·q^ν
        Some((q, _)) => (q as f64).ln(),
        None => 0.0,
    }
}

/// `Λ_i(ω) = ln|𝔭|` when `ω = u·𝔭^ν` for a unit `u` and prime `𝔭`, else 0.
pub fn mangoldt_i(w: GaussianInt) -> Result<f64> {
    if w.is_zero() {
        return Err(LabError::invalid("Λ_i(0) is undefined"));
    }
    Ok(mangoldt_i_given(w, prime_power(w.norm())))
}

/// `base[n] = p` if `n = p^k`, else 0, for `n ≤ limit`.
fn prime_power_bases(limit: u64, table: &PrimeTable) -> Vec<u32> {
    let mut base = vec![0u32; limit as usize + 1];
    for &p in table.primes() {
        let mut q = p;
        loop {
            base[q as usize] = p as u32;
            match q.checked_mul(p) {
                Some(next) if next <= limit => q = next,
                _ => break,
            }
        }
    }
    base
}

/// Largest `x` accepted by the table-driven ψ_i and lattice routines.
pub const MAX_DENSE_LIMIT: u64 = 1 << 32;

fn check_dense(x: f64, lo: f64) -> Result<u64> {
    if !(x >= lo) || !(x <= MAX_DENSE_LIMIT as f64) {
        return Err(LabError::OutOfRange {
            what: "x",
            value: x,
            lo,
            hi: MAX_DENSE_LIMIT as f64,
        });
    }
    Ok(x.floor() as u64)
}

/// `ψ_i(x) = Σ_{ω ∈ B_x(i)} Λ_i(ω)`, summed over the ball.
///
/// `Λ_i` is constant on classes of associates, so each quadrant point is
/// weighted by 4.
pub fn psi_i(x: f64) -> Result<f64> {
    let limit = check_dense(x, 1.0)?;
    if limit < 2 {
        return Ok(0.0);
    }
    let table = build_prime_table(limit)?;
    let base = prime_power_bases(limit, &table);
    let mut acc = CompensatedSum::new();
    for_each_quadrant_point(limit, |a, b, n| {
        let p = base[n as usize];
        if p != 0 {
            let w = GaussianInt::raw(a, b);
            acc.add(mangoldt_i_given(w, Some((p as u64, 0))));
        }
    });
    Ok(4.0 * acc.value())
}

/// `ψ_i(x) = 4 Σ_{𝔭, ν : |𝔭|^{2ν} ≤ x} ln|𝔭|` over canonical primes.
pub fn psi_i_from_primes(primes: &[GaussianPrimeRecord], x: f64) -> f64 {
    let mut acc = CompensatedSum::new();
    for rec in primes.iter().take_while(|r| r.norm as f64 <= x) {
        let mut q = rec.norm as f64;
        while q <= x {
            acc.add(rec.log_abs);
            q *= rec.norm as f64;
        }
    }
    4.0 * acc.value()
}

/// Number of ordered signed pairs `(a, b)` with `a² + b² = n`.
pub fn r_count(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(LabError::invalid("r(n) needs n ≥ 1"));
    }
    let mut count = 0;
    for a in 0..=isqrt(n) {
        let rem = n - a * a;
        let b = isqrt(rem);
        if b * b == rem {
            count += if a == 0 { 1 } else { 2 } * if b == 0 { 1 } else { 2 };
        }
    }
    Ok(count)
}

/// `Σ_{m≤n} r(m) = |B_n(i) \ {0}|`.
pub fn lattice_count(n: u64) -> u64 {
    let r = isqrt(n) as i64;
    let mut count = 0u64;
    for a in -r..=r {
        count += 2 * isqrt(n - (a * a) as u64) + 1;
    }
    count - 1
}

/// `Σ_{m≤n} r(m) − nπ`.
pub fn circle_remainder(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(LabError::invalid("circle remainder needs n ≥ 1"));
    }
    Ok(lattice_count(n) as f64 - n as f64 * std::f64::consts::PI)
}

/// `r(n)` for every `n ≤ limit` (index 0 holds `r(0) = 1`).
pub fn r_table(limit: u64) -> Result<Vec<u32>> {
    let limit = check_dense(limit as f64, 1.0)?;
    let mut r = vec![0u32; limit as usize + 1];
    r[0] = 1;
    for_each_quadrant_point(limit, |_, _, n| r[n as usize] += 4);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(a: i64, b: i64) -> GaussianInt {
        GaussianInt::new(a, b).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(g(1, 1)), Classification::Prime);
        assert_eq!(classify(g(3, 0)), Classification::Prime);
        assert_eq!(classify(g(2, 0)), Classification::Composite);
        assert_eq!(classify(g(5, 0)), Classification::Composite);
        assert_eq!(classify(g(0, -7)), Classification::Prime);
        assert_eq!(classify(g(0, 0)), Classification::Zero);
        assert_eq!(classify(g(0, -1)), Classification::Unit);
        // 2 = −i(1+i)²
        let one_plus_i = Complex64::new(1.0, 1.0);
        assert_eq!(Complex64::new(0.0, -1.0) * one_plus_i * one_plus_i, Complex64::new(2.0, 0.0));
    }

    #[test]
    fn coordinates_are_bounded() {
        assert!(GaussianInt::new(COORD_LIMIT, -COORD_LIMIT).is_ok());
        assert!(GaussianInt::new(COORD_LIMIT + 1, 0).is_err());
        assert_eq!(g(COORD_LIMIT, COORD_LIMIT).norm(), 1u64 << 63);
    }

    #[test]
    fn miller_rabin_matches_trial_division() {
        for n in 0..20_000u64 {
            assert_eq!(is_prime_u64(n), crate::sieve::is_prime_trial(n), "n={n}");
        }
        assert!(is_prime_u64(18_446_744_073_709_551_557));
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_rep(g(-1, 2)).unwrap(), g(2, 1));
        assert_eq!(canonical_rep(g(3, 0)).unwrap(), g(3, 0));
        assert_eq!(canonical_rep(g(-5, 0)).unwrap(), g(5, 0));
        assert!(canonical_rep(g(0, 0)).is_err());
    }

    #[test]
    fn ball_examples() {
        assert_eq!(enumerate_ball(1.0).unwrap().count(), 4);
        assert_eq!(enumerate_ball(2.0).unwrap().count(), 8);
        let four: Vec<_> = enumerate_ball(4.0).unwrap().collect();
        assert_eq!(four.len(), 12);
        assert_eq!(four[0], g(0, -1));
        assert_eq!(four[3], g(-1, 0));
        assert!(enumerate_ball(0.5).is_err());
    }

    #[test]
    fn ball_is_ordered_and_complete_across_bands() {
        let x = 150_000.0;
        let pts: Vec<_> = enumerate_ball(x).unwrap().collect();
        assert_eq!(pts.len() as u64, lattice_count(150_000));
        for w in pts.windows(2) {
            let (p, q) = (w[0], w[1]);
            assert!(p.norm() < q.norm() || (p.norm() == q.norm() && p.arg() < q.arg()));
        }
    }

    #[test]
    fn associate_partition() {
        let x = 10_000.0;
        let ball = enumerate_ball(x).unwrap().count();
        let mut canon = std::collections::HashSet::new();
        for w in enumerate_ball(x).unwrap() {
            canon.insert(canonical_rep(w).unwrap());
        }
        assert_eq!(ball, 4 * canon.len());
        let mut quadrant = 0;
        for_each_quadrant_point(10_000, |_, _, _| quadrant += 1);
        assert_eq!(quadrant, canon.len());
    }

    #[test]
    fn prime_examples() {
        let p25 = gaussian_primes_upto(25.0).unwrap();
        let norms: Vec<u64> = p25.iter().map(|r| r.norm).collect();
        assert_eq!(norms, [2, 5, 5, 9, 13, 13, 17, 17]);
        assert_eq!(gaussian_primes_upto(100.0).unwrap().len(), 25);
        let p2 = gaussian_primes_upto(2.0).unwrap();
        assert_eq!(p2.len(), 1);
        assert_eq!(p2[0].rep, g(1, 1));
        assert!(gaussian_primes_upto(1.0).is_err());
    }

    #[test]
    fn primes_match_classification() {
        let x = 3000u64;
        let listed = gaussian_primes_upto(x as f64).unwrap();
        let mut brute = Vec::new();
        for_each_quadrant_point(x, |a, b, _| {
            if classify(g(a, b)) == Classification::Prime {
                brute.push(g(a, b));
            }
        });
        let mut listed: Vec<_> = listed.iter().map(|r| r.rep).collect();
        listed.sort_by_key(|w| (w.re, w.im));
        brute.sort_by_key(|w| (w.re, w.im));
        assert_eq!(listed, brute);
        for rec in gaussian_primes_upto(x as f64).unwrap() {
            assert!(rec.arg >= 0.0 && rec.arg < std::f64::consts::FRAC_PI_2);
            let a = rec.rep.associates();
            for i in 0..4 {
                for j in 0..i {
                    assert_ne!(a[i], a[j]);
                }
            }
        }
    }

    #[test]
    fn mangoldt_i_examples() {
        let half_ln2 = 0.5 * std::f64::consts::LN_2;
        assert!((mangoldt_i(g(1, 1)).unwrap() - 0.346_574).abs() < 1e-6);
        assert_eq!(mangoldt_i(g(2, 0)).unwrap(), half_ln2);
        assert_eq!(mangoldt_i(g(3, 1)).unwrap(), 0.0);
        assert_eq!(mangoldt_i(g(5, 0)).unwrap(), 0.0);
        assert_eq!(mangoldt_i(g(-3, 4)).unwrap(), 0.5 * 5f64.ln()); // (2+i)²
        assert_eq!(mangoldt_i(g(0, 9)).unwrap(), 3f64.ln());
        assert!(mangoldt_i(g(0, 0)).is_err());
    }

    /// Λ_i by brute force: divide out one prime and check the cofactor is a
    /// unit times a power of the same prime.
    fn mangoldt_i_brute(w: GaussianInt, primes: &[GaussianPrimeRecord]) -> f64 {
        let mul = |x: (i64, i64), y: (i64, i64)| (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0);
        for rec in primes {
            let p = (rec.rep.re, rec.rep.im);
            let mut pw = p;
            loop {
                let n = pw.0 * pw.0 + pw.1 * pw.1;
                if n as u64 > w.norm() {
                    break;
                }
                for u in w.associates() {
                    if (u.re, u.im) == pw {
                        return rec.log_abs;
                    }
                }
                pw = mul(pw, p);
            }
        }
        0.0
    }

    #[test]
    fn mangoldt_i_matches_brute_force() {
        let primes = gaussian_primes_upto(2000.0).unwrap();
        for w in enumerate_ball(2000.0).unwrap() {
            let fast = mangoldt_i(w).unwrap();
            assert!((fast - mangoldt_i_brute(w, &primes)).abs() < 1e-12, "{w}");
        }
    }

    #[test]
    fn psi_i_examples() {
        assert_eq!(psi_i(1.0).unwrap(), 0.0);
        assert!((psi_i(2.0).unwrap() - 1.386_294).abs() < 1e-6);
        assert!((psi_i(4.0).unwrap() - 2.772_589).abs() < 1e-6);
        let by_ball: f64 = enumerate_ball(5000.0).unwrap().map(|w| mangoldt_i(w).unwrap()).sum();
        assert!((psi_i(5000.0).unwrap() - by_ball).abs() < 1e-9);
    }

    #[test]
    fn psi_i_decomposition() {
        let primes = gaussian_primes_upto(100_000.0).unwrap();
        for x in [10.0, 99.5, 1000.0, 65_536.0, 100_000.0] {
            let a = psi_i(x).unwrap();
            let b = psi_i_from_primes(&primes, x);
            assert!((a - b).abs() <= 1e-9 * a.max(1.0), "x={x}: {a} vs {b}");
        }
    }

    #[test]
    fn r_examples() {
        assert_eq!(r_count(5).unwrap(), 8);
        assert_eq!(r_count(3).unwrap(), 0);
        assert_eq!(r_count(25).unwrap(), 12);
        assert!((circle_remainder(5).unwrap() - 4.292_036_732).abs() < 1e-9);
        assert!(r_count(0).is_err());
    }

    fn r_divisor(n: u64) -> i64 {
        let (mut d1, mut d3) = (0i64, 0i64);
        for d in 1..=n {
            if n.is_multiple_of(d) {
                match d % 4 {
                    1 => d1 += 1,
                    3 => d3 += 1,
                    _ => {}
                }
            }
        }
        4 * (d1 - d3)
    }

    #[test]
    fn r_matches_divisor_formula() {
        let table = r_table(10_000).unwrap();
        for n in 1..=10_000u64 {
            assert_eq!(table[n as usize] as i64, r_divisor(n), "n={n}");
            assert_eq!(table[n as usize] as u64, r_count(n).unwrap());
        }
    }

    #[test]
    fn lattice_count_matches_r_table() {
        let limit = 1_000_000u64;
        let table = r_table(limit).unwrap();
        let mut acc = 0u64;
        for n in 1..=limit {
            acc += table[n as usize] as u64;
            if n % 997 == 0 || n == limit {
                assert_eq!(acc, lattice_count(n), "n={n}");
            }
        }
    }

    #[test]
    fn circle_envelope() {
        let mut n = 1000u64;
        while n <= 1_000_000 {
            let rem = circle_remainder(n).unwrap();
            assert!(rem.abs() <= crate::envelopes::CIRCLE_REMAINDER * (n as f64).sqrt(), "n={n}");
            n += 1009;
        }
    }

    proptest! {
        #[test]
        fn canonical_rep_idempotent(a in -100_000i64..100_000, b in -100_000i64..100_000) {
            prop_assume!(a != 0 || b != 0);
            let w = g(a, b);
            let c = canonical_rep(w).unwrap();
            prop_assert_eq!(canonical_rep(c).unwrap(), c);
            prop_assert!(c.re() > 0 && c.im() >= 0);
            prop_assert_eq!(c.norm(), w.norm());
            for u in w.associates() {
                prop_assert_eq!(canonical_rep(u).unwrap(), c);
                prop_assert_eq!(classify(u), classify(w));
                prop_assert_eq!(u.quartic_phase(), w.quartic_phase());
            }
        }

        #[test]
        fn arg_in_half_open_range(a in -1000i64..1000, b in -1000i64..1000) {
            prop_assume!(a != 0 || b != 0);
            let t = g(a, b).arg();
            prop_assert!(t > -std::f64::consts::PI && t <= std::f64::consts::PI);
        }
    }
}
