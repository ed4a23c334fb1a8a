//! Rational-prime substrate: a segmented sieve of Eratosthenes, prime
//! counting, and the classical arithmetic functions Λ, μ and λ.
//!
//! Tables are immutable once built and can be shared freely between threads.

use crate::error::{LabError, Result};
use crate::numeric::isqrt;

/// Largest limit accepted by [`build_prime_table`].
pub const MAX_LIMIT: u64 = 1 << 33;

/// Memory ceiling for a single table, in bytes.
pub const MAX_TABLE_BYTES: u64 = 2 << 30;

/// Default number of integers sieved per segment.
pub const DEFAULT_SEGMENT: usize = 1 << 18;

/// Fixed-size bitset over `0..len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        i < self.len && (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.words[i >> 6] |= 1 << (i & 63);
    }

    pub fn count_ones_upto(&self, n: usize) -> u64 {
        let n = n.min(self.len.saturating_sub(1));
        let full = (n + 1) / 64;
        let mut c: u64 = self.words[..full].iter().map(|w| w.count_ones() as u64).sum();
        let rem = (n + 1) % 64;
        if rem > 0 {
            c += (self.words[full] & ((1u64 << rem) - 1)).count_ones() as u64;
        }
        c
    }
}

/// Primes and primality flags on `[0, limit]`.
#[derive(Debug, Clone)]
pub struct PrimeTable {
    limit: u64,
    is_prime: BitSet,
    primes: Vec<u64>,
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Ascending list of all primes `≤ limit`.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Primality of `n`; `false` beyond the table limit.
    pub fn is_prime(&self, n: u64) -> bool {
        n <= self.limit && self.is_prime.get(n as usize)
    }

    /// Primes `≤ n`.
    pub fn primes_upto(&self, n: u64) -> &[u64] {
        let k = self.primes.partition_point(|&p| p <= n);
        &self.primes[..k]
    }
}

fn small_sieve(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Runs the segmented sieve over `[0, limit]`, calling `visit(start, flags)`
/// for every segment, where `flags[k]` is the primality of `start + k`.
pub fn sieve_segments(limit: u64, segment_len: usize, mut visit: impl FnMut(u64, &[bool])) {
    let segment_len = segment_len.max(64);
    let base = small_sieve(isqrt(limit));
    let mut flags = vec![true; segment_len];
    let mut start = 0u64;
    while start <= limit {
        let end = (start + segment_len as u64 - 1).min(limit);
        let len = (end - start + 1) as usize;
        let seg = &mut flags[..len];
        seg.fill(true);
        for n in start..start.saturating_add(2).min(end + 1) {
            if n < 2 {
                seg[(n - start) as usize] = false;
            }
        }
        for &p in &base {
            if p * p > end {
                break;
            }
            let first = (p * p).max(start.div_ceil(p) * p);
            let mut m = first;
            while m <= end {
                seg[(m - start) as usize] = false;
                m += p;
            }
        }
        visit(start, seg);
        start = end + 1;
    }
}

/// Calls `f(p)` for every prime `p ≤ limit` in ascending order without
/// storing the primes.
pub fn for_each_prime(limit: u64, mut f: impl FnMut(u64)) {
    if limit < 2 {
        return;
    }
    sieve_segments(limit, DEFAULT_SEGMENT, |start, flags| {
        for (k, &is_p) in flags.iter().enumerate() {
            if is_p {
                f(start + k as u64);
            }
        }
    });
}

fn estimate_prime_table_bytes(limit: u64) -> u64 {
    let l = limit as f64;
    let prime_count = if limit < 17 { 8.0 } else { 1.26 * l / l.ln() };
    limit / 8 + (prime_count * 8.0) as u64
}

/// Builds the prime table on `[0, limit]` with the default segment size.
pub fn build_prime_table(limit: u64) -> Result<PrimeTable> {
    build_prime_table_segmented(limit, DEFAULT_SEGMENT)
}

/// Builds the prime table with an explicit segment size. The result does not
/// depend on `segment_len`.
pub fn build_prime_table_segmented(limit: u64, segment_len: usize) -> Result<PrimeTable> {
    if limit < 2 {
        return Err(LabError::invalid(format!("prime table limit must be ≥ 2, got {limit}")));
    }
    if limit > MAX_LIMIT {
        return Err(LabError::OutOfRange {
            what: "limit",
            value: limit as f64,
            lo: 2.0,
            hi: MAX_LIMIT as f64,
        });
    }
    let bytes = estimate_prime_table_bytes(limit);
    if bytes > MAX_TABLE_BYTES {
        return Err(LabError::Resource(format!(
            "prime table up to {limit} needs about {bytes} bytes (ceiling {MAX_TABLE_BYTES})"
        )));
    }
    let mut is_prime = BitSet::new(limit as usize + 1);
    let mut primes = Vec::new();
    sieve_segments(limit, segment_len, |start, flags| {
        for (k, &p) in flags.iter().enumerate() {
            if p {
                let n = start + k as u64;
                is_prime.set(n as usize);
                primes.push(n);
            }
        }
    });
    Ok(PrimeTable {
        limit,
        is_prime,
        primes,
    })
}

/// `π(x) = #{p ≤ x}`.
pub fn prime_count(table: &PrimeTable, x: f64) -> Result<u64> {
    if !(x >= 0.0) || x > table.limit as f64 {
        return Err(LabError::OutOfRange {
            what: "x",
            value: x,
            lo: 0.0,
            hi: table.limit as f64,
        });
    }
    Ok(table.primes_upto(x.floor() as u64).len() as u64)
}

/// Per-`n` values of Λ, μ, λ and the square-free flag on `[1, limit]`.
/// Index 0 is unused and holds zeros.
#[derive(Debug, Clone)]
pub struct ArithFnTable {
    limit: u64,
    mangoldt: Vec<f64>,
    moebius: Vec<i8>,
    liouville: Vec<i8>,
    squarefree: BitSet,
}

impl ArithFnTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn mangoldt(&self, n: u64) -> f64 {
        self.mangoldt[n as usize]
    }

    pub fn moebius(&self, n: u64) -> i8 {
        self.moebius[n as usize]
    }

    pub fn liouville(&self, n: u64) -> i8 {
        self.liouville[n as usize]
    }

    pub fn is_squarefree(&self, n: u64) -> bool {
        self.squarefree.get(n as usize)
    }

    /// `Λ(n)` for `n = 0..=limit`.
    pub fn mangoldt_slice(&self) -> &[f64] {
        &self.mangoldt
    }

    pub fn moebius_slice(&self) -> &[i8] {
        &self.moebius
    }

    pub fn liouville_slice(&self) -> &[i8] {
        &self.liouville
    }

    /// `Q(x)`, the number of square-free `n ≤ x`.
    pub fn squarefree_count(&self, x: u64) -> u64 {
        // index 0 is never set
        self.squarefree.count_ones_upto(x.min(self.limit) as usize)
    }
}

/// Builds Λ by marking prime powers and μ, λ by a linear sieve over smallest
/// prime factors.
pub fn build_arith_table(limit: u64) -> Result<ArithFnTable> {
    if limit < 1 {
        return Err(LabError::invalid("arithmetic table limit must be ≥ 1"));
    }
    if limit > MAX_LIMIT {
        return Err(LabError::OutOfRange {
            what: "limit",
            value: limit as f64,
            lo: 1.0,
            hi: MAX_LIMIT as f64,
        });
    }
    let bytes = limit * 11 + estimate_prime_table_bytes(limit.max(2));
    if bytes > MAX_TABLE_BYTES {
        return Err(LabError::Resource(format!(
            "arithmetic table up to {limit} needs about {bytes} bytes (ceiling {MAX_TABLE_BYTES})"
        )));
    }
    let n = limit as usize;
    let mut moebius = vec![0i8; n + 1];
    let mut liouville = vec![0i8; n + 1];
    let mut composite = BitSet::new(n + 1);
    let mut primes: Vec<usize> = Vec::new();
    moebius[1] = 1;
    liouville[1] = 1;
    for i in 2..=n {
        if !composite.get(i) {
            primes.push(i);
            moebius[i] = -1;
            liouville[i] = -1;
        }
        for &p in &primes {
            let m = match i.checked_mul(p) {
                Some(m) if m <= n => m,
                _ => break,
            };
            composite.set(m);
            liouville[m] = -liouville[i];
            if i % p == 0 {
                moebius[m] = 0;
                break;
            }
            moebius[m] = -moebius[i];
        }
    }
    let mut mangoldt = vec![0.0f64; n + 1];
    for &p in &primes {
        let lp = (p as f64).ln();
        let mut q = p;
        loop {
            mangoldt[q] = lp;
            match q.checked_mul(p) {
                Some(next) if next <= n => q = next,
                _ => break,
            }
        }
    }
    let mut squarefree = BitSet::new(n + 1);
    for (k, &mu) in moebius.iter().enumerate() {
        if mu != 0 {
            squarefree.set(k);
        }
    }
    Ok(ArithFnTable {
        limit,
        mangoldt,
        moebius,
        liouville,
        squarefree,
    })
}

/// Smallest prime factor of `n ≥ 2` by trial division.
pub fn smallest_prime_factor(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

/// Prime factorization by trial division, as ascending `(p, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    while n > 1 {
        let p = smallest_prime_factor(n);
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        out.push((p, e));
    }
    out
}

/// Trial-division primality test.
pub fn is_prime_trial(n: u64) -> bool {
    n >= 2 && smallest_prime_factor(n) == n
}

/// If `n = p^ν` with `ν ≥ 1`, returns `(p, ν)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = smallest_prime_factor(n);
    let mut m = n;
    let mut e = 0;
    while m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}

/// Point query of the Mangoldt function, independent of any table.
pub fn mangoldt(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(LabError::invalid("Λ(0) is undefined"));
    }
    Ok(prime_power(n).map_or(0.0, |(p, _)| (p as f64).ln()))
}
