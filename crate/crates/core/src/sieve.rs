//! Smallest-prime-factor sieve and the prime queries built on it.
//!
//! A [`SieveTable`] is built once and shared read-only by every scan.
//! Everything here is a pure function of its inputs.

use crate::error::{invalid, Result};
use crate::factored::FactoredNatural;

/// Smallest-prime-factor table over `2..=limit`.
#[derive(Debug, Clone)]
pub struct SieveTable {
    limit: u64,
    // spf[i] for i in 0..=limit; entries 0 and 1 are unused (zero).
    spf: Vec<u32>,
    primes: Vec<u64>,
}

/// The product `n (n+1) ... (n+m-1)` of `m` consecutive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntervalProductSpec {
    pub n: u64,
    pub m: u64,
}

impl IntervalProductSpec {
    pub fn new(n: u64, m: u64) -> Result<Self> {
        if n < 2 {
            return invalid(format!("interval start must be >= 2, got {n}"));
        }
        if m < 1 {
            return invalid("interval length must be >= 1");
        }
        Ok(IntervalProductSpec { n, m })
    }

    /// Last factor of the product.
    pub fn last(&self) -> u64 {
        self.n + self.m - 1
    }

    /// Renders the product as `n·(n+1)·…` for reports.
    pub fn display_product(&self) -> String {
        (self.n..=self.last())
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join("·")
    }
}

/// Largest limit accepted by [`build_sieve`]; keeps `spf` in `u32`.
pub const MAX_SIEVE_LIMIT: u64 = 1 << 31;

pub fn build_sieve(limit: u64) -> Result<SieveTable> {
    SieveTable::new(limit)
}

impl SieveTable {
    pub fn new(limit: u64) -> Result<Self> {
        if limit < 2 {
            return invalid(format!("sieve limit must be >= 2, got {limit}"));
        }
        if limit > MAX_SIEVE_LIMIT {
            return invalid(format!("sieve limit {limit} exceeds {MAX_SIEVE_LIMIT}"));
        }
        let len = limit as usize + 1;
        let mut spf = vec![0u32; len];
        let mut primes = Vec::new();
        // Linear sieve: every composite is struck exactly once by its smallest prime.
        for i in 2..len {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u64);
            }
            let si = spf[i] as u64;
            for &p in &primes {
                if p > si || p * i as u64 > limit {
                    break;
                }
                spf[(p * i as u64) as usize] = p as u32;
            }
        }
        Ok(SieveTable { limit, spf, primes })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    fn check_range(&self, n: u64) -> Result<()> {
        if n > self.limit {
            return invalid(format!("{n} exceeds sieve limit {}", self.limit));
        }
        Ok(())
    }

    /// Smallest prime factor of `n`, for `2 <= n <= limit`.
    pub fn smallest_prime_factor(&self, n: u64) -> Result<u64> {
        if n < 2 {
            return invalid(format!("smallest prime factor undefined for {n}"));
        }
        self.check_range(n)?;
        Ok(self.spf[n as usize] as u64)
    }

    pub fn is_prime(&self, n: u64) -> Result<bool> {
        if n < 2 {
            return Ok(false);
        }
        self.check_range(n)?;
        Ok(self.spf[n as usize] as u64 == n)
    }

    /// All primes up to the limit, ascending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Primes `<= bound` (bound clamped to the limit).
    pub fn primes_up_to(&self, bound: u64) -> &[u64] {
        let end = self.primes.partition_point(|&p| p <= bound);
        &self.primes[..end]
    }

    /// Prime factorization of `n`; `factorize(1)` is the empty factorization.
    pub fn factorize(&self, n: u64) -> Result<FactoredNatural> {
        if n == 0 {
            return invalid("cannot factorize 0");
        }
        self.check_range(n)?;
        let mut entries: Vec<(u64, u32)> = Vec::new();
        let mut rest = n;
        while rest > 1 {
            let p = self.spf[rest as usize] as u64;
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            entries.push((p, e));
        }
        Ok(FactoredNatural::from_sorted_unchecked(entries))
    }

    /// Largest prime factor of `n` (returns 1 for `n == 1`).
    pub fn greatest_prime_factor(&self, n: u64) -> Result<u64> {
        if n == 0 {
            return invalid("greatest prime factor undefined for 0");
        }
        self.check_range(n)?;
        let mut rest = n;
        let mut best = 1;
        while rest > 1 {
            let p = self.spf[rest as usize] as u64;
            best = p;
            while rest % p == 0 {
                rest /= p;
            }
        }
        Ok(best)
    }

    /// Table `g[v] = greatest prime factor of v` for `v` in `0..=upto`
    /// (`g[0] = 0`, `g[1] = 1`).
    pub fn greatest_prime_factor_table(&self, upto: u64) -> Result<Vec<u32>> {
        self.check_range(upto)?;
        let len = upto as usize + 1;
        let mut g = vec![0u32; len];
        if len > 1 {
            g[1] = 1;
        }
        for v in 2..len {
            let p = self.spf[v];
            let mut rest = v / p as usize;
            while rest > 1 && rest % p as usize == 0 {
                rest /= p as usize;
            }
            g[v] = p.max(g[rest]);
        }
        Ok(g)
    }
}

/// Exponent of the prime `p` in `n!` by Legendre's formula.
pub fn legendre_valuation(p: u64, n: u64) -> Result<u64> {
    if !is_prime_trial(p) {
        return invalid(format!("{p} is not prime"));
    }
    Ok(legendre_unchecked(p, n))
}

pub(crate) fn legendre_unchecked(p: u64, n: u64) -> u64 {
    let mut total = 0;
    let mut q = n;
    while q > 0 {
        q /= p;
        total += q;
    }
    total
}

fn is_prime_trial(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Largest prime dividing `n (n+1) ... (n+m-1)`.
pub fn greatest_prime_factor_of_interval(spec: IntervalProductSpec, sieve: &SieveTable) -> Result<u64> {
    if spec.n < 2 || spec.m < 1 {
        return invalid(format!("degenerate interval n={} m={}", spec.n, spec.m));
    }
    let last = spec
        .n
        .checked_add(spec.m - 1)
        .ok_or_else(|| crate::Error::InvalidArgument("interval end overflows".into()))?;
    if last > sieve.limit() {
        return invalid(format!(
            "interval {}..={} exceeds sieve limit {}",
            spec.n,
            last,
            sieve.limit()
        ));
    }
    let mut best = 0;
    for v in spec.n..=last {
        best = best.max(sieve.greatest_prime_factor(v)?);
    }
    Ok(best)
}
