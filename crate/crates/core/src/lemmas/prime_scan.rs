//! Falsification scans for "the product of m consecutive integers has a prime
//! divisor greater than c·m".

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::sieve::{IntervalProductSpec, SieveTable};

/// Threshold multiplier `num/den`; thresholds are compared exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multiplier {
    pub num: u64,
    pub den: u64,
}

impl Multiplier {
    pub const THREE_HALVES: Multiplier = Multiplier { num: 3, den: 2 };
    pub const ONE_POINT_EIGHT: Multiplier = Multiplier { num: 9, den: 5 };
    pub const FOUR_POINT_FORTY_TWO: Multiplier = Multiplier { num: 221, den: 50 };

    pub fn value(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `p > (num/den)·m`.
    pub fn exceeded_by(&self, p: u64, m: u64) -> bool {
        (p as u128) * (self.den as u128) > (self.num as u128) * (m as u128)
    }
}

impl fmt::Display for Multiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Region of `(n, m)` pairs and the threshold to test there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanConstraints {
    pub multiplier: Multiplier,
    /// Require `n > n_over_m · m`.
    pub n_over_m: u64,
    pub m_min: u64,
    pub m_max: u64,
    pub n_min: u64,
    pub n_max: u64,
    /// Require `n + m >= sum_min`.
    pub sum_min: u64,
    /// Require `n + m - 1 <= last_max`.
    pub last_max: u64,
}

/// The three prime-divisor statements that get scanned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimeLemma {
    /// `p > 1.5m` for `n > m >= 2`, except 3·4, 8·9, 6·7·8·9·10.
    Hanson,
    /// `p > 1.8m` for `n > m > 2`, `n + m >= 150`.
    Shorey,
    /// `p > 4.42m` for `n > 4m`, `m > 3`, `n + m >= 150`.
    NairShorey,
}

impl PrimeLemma {
    pub fn multiplier(&self) -> Multiplier {
        match self {
            PrimeLemma::Hanson => Multiplier::THREE_HALVES,
            PrimeLemma::Shorey => Multiplier::ONE_POINT_EIGHT,
            PrimeLemma::NairShorey => Multiplier::FOUR_POINT_FORTY_TWO,
        }
    }

    /// Known exceptional `(n, m)` pairs.
    pub fn known_exceptions(&self) -> &'static [(u64, u64)] {
        match self {
            PrimeLemma::Hanson => &[(3, 2), (6, 5), (8, 2)],
            PrimeLemma::Shorey | PrimeLemma::NairShorey => &[],
        }
    }

    /// Constraints for the lemma's hypotheses. `bound` caps `n + m - 1` for
    /// Hanson and `n + m` for the other two.
    pub fn constraints(&self, bound: u64) -> ScanConstraints {
        let multiplier = self.multiplier();
        match self {
            PrimeLemma::Hanson => ScanConstraints {
                multiplier,
                n_over_m: 1,
                m_min: 2,
                m_max: u64::MAX,
                n_min: 3,
                n_max: u64::MAX,
                sum_min: 0,
                last_max: bound,
            },
            PrimeLemma::Shorey => ScanConstraints {
                multiplier,
                n_over_m: 1,
                m_min: 3,
                m_max: u64::MAX,
                n_min: 4,
                n_max: u64::MAX,
                sum_min: 150,
                last_max: bound.saturating_sub(1),
            },
            PrimeLemma::NairShorey => ScanConstraints {
                multiplier,
                n_over_m: 4,
                m_min: 4,
                m_max: u64::MAX,
                n_min: 17,
                n_max: u64::MAX,
                sum_min: 150,
                last_max: bound.saturating_sub(1),
            },
        }
    }
}

impl fmt::Display for PrimeLemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PrimeLemma::Hanson => "hanson",
            PrimeLemma::Shorey => "shorey",
            PrimeLemma::NairShorey => "nair_shorey",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrimeScanResult {
    pub n: u64,
    pub m: u64,
    pub greatest_prime: u64,
    pub threshold: f64,
    pub satisfied: bool,
}

impl PrimeScanResult {
    pub fn spec(&self) -> IntervalProductSpec {
        IntervalProductSpec { n: self.n, m: self.m }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrimeScanSummary {
    pub constraints: ScanConstraints,
    pub checked: u64,
    /// Pairs whose greatest prime factor does not exceed the threshold,
    /// sorted by `(n, m)`.
    pub violations: Vec<PrimeScanResult>,
}

/// Scans every `(n, m)` inside `c` and reports each product whose greatest
/// prime factor is at most `multiplier · m`.
pub fn prime_divisor_scan(c: &ScanConstraints, sieve: &SieveTable) -> Result<PrimeScanSummary> {
    if c.last_max > sieve.limit() {
        return invalid(format!("scan reaches {} beyond sieve limit {}", c.last_max, sieve.limit()));
    }
    if c.m_min == 0 || c.multiplier.den == 0 {
        return invalid("scan needs m_min >= 1 and a nonzero multiplier denominator");
    }
    let n_lo = c.n_min.max(2);
    let n_hi = c.n_max.min(c.last_max);
    if n_lo > n_hi {
        return Ok(PrimeScanSummary { constraints: *c, checked: 0, violations: Vec::new() });
    }
    let gpf = sieve.greatest_prime_factor_table(c.last_max)?;
    let rows: Vec<(u64, Vec<PrimeScanResult>)> = (n_lo..=n_hi)
        .into_par_iter()
        .map(|n| {
            let mut checked = 0u64;
            let mut found = Vec::new();
            // n > n_over_m · m  <=>  m <= (n - 1) / n_over_m
            let m_hi = ((n - 1) / c.n_over_m).min(c.m_max).min(c.last_max + 1 - n);
            let mut running = 0u64;
            for v in n..n + c.m_min.saturating_sub(1) {
                if v > c.last_max {
                    break;
                }
                running = running.max(gpf[v as usize] as u64);
            }
            for m in c.m_min..=m_hi {
                running = running.max(gpf[(n + m - 1) as usize] as u64);
                if n + m < c.sum_min {
                    continue;
                }
                checked += 1;
                if !c.multiplier.exceeded_by(running, m) {
                    found.push(PrimeScanResult {
                        n,
                        m,
                        greatest_prime: running,
                        threshold: c.multiplier.value() * m as f64,
                        satisfied: false,
                    });
                }
            }
            (checked, found)
        })
        .collect();
    let mut summary = PrimeScanSummary { constraints: *c, checked: 0, violations: Vec::new() };
    for (checked, found) in rows {
        summary.checked += checked;
        summary.violations.extend(found);
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sieve::{build_sieve, greatest_prime_factor_of_interval};

    #[test]
    fn hanson_small_range_reproduces_exceptions() {
        let s = build_sieve(2000).unwrap();
        let r = prime_divisor_scan(&PrimeLemma::Hanson.constraints(2000), &s).unwrap();
        let pairs: Vec<(u64, u64)> = r.violations.iter().map(|v| (v.n, v.m)).collect();
        assert_eq!(pairs, PrimeLemma::Hanson.known_exceptions());
    }

    #[test]
    fn nair_shorey_single_point() {
        let s = build_sieve(200).unwrap();
        let mut c = PrimeLemma::NairShorey.constraints(200);
        c.n_min = 150;
        c.n_max = 150;
        c.m_min = 4;
        c.m_max = 4;
        let r = prime_divisor_scan(&c, &s).unwrap();
        assert_eq!(r.checked, 1);
        assert!(r.violations.is_empty());
        let g = greatest_prime_factor_of_interval(IntervalProductSpec::new(150, 4).unwrap(), &s).unwrap();
        assert_eq!(g, 151);
        assert!(Multiplier::FOUR_POINT_FORTY_TWO.exceeded_by(151, 4));
    }

    #[test]
    fn multiplier_is_exact() {
        // 1.5 · 2 = 3: a prime of 3 does not exceed it.
        assert!(!Multiplier::THREE_HALVES.exceeded_by(3, 2));
        assert!(Multiplier::THREE_HALVES.exceeded_by(4, 2));
        // 1.8 · 5 = 9
        assert!(!Multiplier::ONE_POINT_EIGHT.exceeded_by(9, 5));
        // 4.42 · 50 = 221
        assert!(!Multiplier::FOUR_POINT_FORTY_TWO.exceeded_by(221, 50));
        assert!(Multiplier::FOUR_POINT_FORTY_TWO.exceeded_by(222, 50));
    }

    #[test]
    fn running_max_matches_direct_interval_query() {
        let s = build_sieve(400).unwrap();
        let mut c = PrimeLemma::Hanson.constraints(400);
        // Report everything by using an impossible threshold.
        c.multiplier = Multiplier { num: 1000, den: 1 };
        let r = prime_divisor_scan(&c, &s).unwrap();
        assert_eq!(r.checked as usize, r.violations.len());
        for v in r.violations.iter().step_by(37) {
            let direct = greatest_prime_factor_of_interval(v.spec(), &s).unwrap();
            assert_eq!(v.greatest_prime, direct);
        }
    }

    #[test]
    fn rejects_range_beyond_sieve() {
        let s = build_sieve(100).unwrap();
        assert!(prime_divisor_scan(&PrimeLemma::Hanson.constraints(101), &s).is_err());
    }
}
