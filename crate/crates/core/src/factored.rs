//! Exact arithmetic on naturals held as prime-exponent lists.
//!
//! Binomial coefficients are built from Legendre differences, so the
//! magnitudes never have to be materialized to test divisibility. Ordering
//! is decided in the log domain when the enclosing intervals are disjoint
//! and by exact big-natural evaluation otherwise.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{invalid, Result};
use crate::sieve::{legendre_unchecked, SieveTable};

/// Relative rounding tolerance charged to every multiply-accumulate step of
/// [`log_value`].
pub const LOG_TOLERANCE: f64 = 1.0 / (1u64 << 40) as f64;

/// A positive integer as `(prime, exponent)` pairs, primes strictly
/// increasing, exponents at least one. The empty list is 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FactoredNatural {
    entries: Vec<(u64, u32)>,
}

impl FactoredNatural {
    pub fn one() -> Self {
        FactoredNatural { entries: Vec::new() }
    }

    /// Builds from pairs in any order; merges duplicates and drops zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u32)>) -> Self {
        let mut v: Vec<(u64, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        v.sort_unstable_by_key(|&(p, _)| p);
        let mut entries: Vec<(u64, u32)> = Vec::with_capacity(v.len());
        for (p, e) in v {
            match entries.last_mut() {
                Some(last) if last.0 == p => last.1 += e,
                _ => entries.push((p, e)),
            }
        }
        FactoredNatural { entries }
    }

    pub(crate) fn from_sorted_unchecked(entries: Vec<(u64, u32)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|&(_, e)| e > 0));
        FactoredNatural { entries }
    }

    /// `p^e` for a prime `p`.
    pub fn prime_power(p: u64, e: u32) -> Self {
        Self::from_pairs([(p, e)])
    }

    pub fn entries(&self) -> &[(u64, u32)] {
        &self.entries
    }

    pub fn is_one(&self) -> bool {
        self.entries.is_empty()
    }

    /// Exponent of `p` (zero when absent).
    pub fn exponent(&self, p: u64) -> u32 {
        self.entries
            .binary_search_by_key(&p, |&(q, _)| q)
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.entries, &other.entries);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        FactoredNatural { entries: out }
    }

    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return Self::one();
        }
        FactoredNatural {
            entries: self.entries.iter().map(|&(p, e)| (p, e * k)).collect(),
        }
    }

    /// Splits `self / other` into reduced numerator and denominator.
    fn split_quotient(&self, other: &Self) -> (Self, Self) {
        let mut num = Vec::new();
        let mut den = Vec::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.entries, &other.entries);
        while i < a.len() || j < b.len() {
            let pa = a.get(i).map(|x| x.0).unwrap_or(u64::MAX);
            let pb = b.get(j).map(|x| x.0).unwrap_or(u64::MAX);
            match pa.cmp(&pb) {
                Ordering::Less => {
                    num.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    den.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let (ea, eb) = (a[i].1, b[j].1);
                    match ea.cmp(&eb) {
                        Ordering::Greater => num.push((pa, ea - eb)),
                        Ordering::Less => den.push((pa, eb - ea)),
                        Ordering::Equal => {}
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        (FactoredNatural { entries: num }, FactoredNatural { entries: den })
    }
}

impl fmt::Display for FactoredNatural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// Closed interval `[lo, hi]` known to contain the natural log of a value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogInterval {
    pub lo: f64,
    pub hi: f64,
}

impl LogInterval {
    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn overlaps(&self, other: &LogInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

/// Result of [`divide_exact`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Quotient {
    Exact(FactoredNatural),
    /// The divisor holds more of `witness` than the dividend.
    NotDivisible { witness: u64 },
}

impl Quotient {
    pub fn exact(self) -> Option<FactoredNatural> {
        match self {
            Quotient::Exact(q) => Some(q),
            Quotient::NotDivisible { .. } => None,
        }
    }
}

/// `C(n, r)` in factored form. Needs a sieve reaching `n`.
pub fn binomial_factored(n: u64, r: u64, sieve: &SieveTable) -> Result<FactoredNatural> {
    if r > n {
        return invalid(format!("C({n}, {r}) has r > n"));
    }
    if n > sieve.limit() {
        return invalid(format!("C({n}, {r}) needs a sieve up to {n}, have {}", sieve.limit()));
    }
    let s = n - r;
    let mut entries = Vec::new();
    for &p in sieve.primes_up_to(n) {
        let e = if p > n / 2 {
            // p appears once in n! and at most once in each of r!, s!.
            1 - (p <= r) as u64 - (p <= s) as u64
        } else {
            legendre_unchecked(p, n) - legendre_unchecked(p, r) - legendre_unchecked(p, s)
        };
        if e > 0 {
            entries.push((p, e as u32));
        }
    }
    Ok(FactoredNatural::from_sorted_unchecked(entries))
}

/// The central binomial coefficient `C(2k, k)`.
pub fn central_binomial(k: u64, sieve: &SieveTable) -> Result<FactoredNatural> {
    binomial_factored(2 * k, k, sieve)
}

pub fn to_exact(f: &FactoredNatural) -> BigUint {
    f.entries
        .iter()
        .fold(BigUint::one(), |acc, &(p, e)| acc * BigUint::from(p).pow(e))
}

pub fn divide_exact(a: &FactoredNatural, b: &FactoredNatural) -> Quotient {
    let (num, den) = a.split_quotient(b);
    match den.entries.first() {
        None => Quotient::Exact(num),
        Some(&(p, _)) => Quotient::NotDivisible { witness: p },
    }
}

pub fn log_value(f: &FactoredNatural) -> LogInterval {
    let mut sum = 0.0f64;
    let mut err = 0.0f64;
    for &(p, e) in &f.entries {
        let term = e as f64 * (p as f64).ln();
        sum += term;
        // One charge for the product, one for the running sum.
        err += 2.0 * LOG_TOLERANCE * (term.abs() + sum.abs());
    }
    if f.entries.is_empty() {
        return LogInterval { lo: 0.0, hi: 0.0 };
    }
    LogInterval { lo: sum - err, hi: sum + err }
}

pub fn compare(a: &FactoredNatural, b: &FactoredNatural) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    // Common primes cancel; comparing the reduced parts keeps magnitudes small.
    let (num, den) = a.split_quotient(b);
    let (la, lb) = (log_value(&num), log_value(&den));
    if la.hi < lb.lo {
        return Ordering::Less;
    }
    if lb.hi < la.lo {
        return Ordering::Greater;
    }
    to_exact(&num).cmp(&to_exact(&den))
}

/// A positive rational held as coprime factored numerator and denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactRational {
    num: FactoredNatural,
    den: FactoredNatural,
}

impl ExactRational {
    pub fn new(num: &FactoredNatural, den: &FactoredNatural) -> Self {
        let (num, den) = num.split_quotient(den);
        ExactRational { num, den }
    }

    pub fn one() -> Self {
        ExactRational { num: FactoredNatural::one(), den: FactoredNatural::one() }
    }

    pub fn from_natural(n: FactoredNatural) -> Self {
        ExactRational { num: n, den: FactoredNatural::one() }
    }

    /// `num / den` for positive machine integers inside the sieve range.
    pub fn from_ratio(num: u64, den: u64, sieve: &SieveTable) -> Result<Self> {
        if num == 0 || den == 0 {
            return invalid(format!("ratio {num}/{den} is not positive"));
        }
        Ok(Self::new(&sieve.factorize(num)?, &sieve.factorize(den)?))
    }

    pub fn numerator(&self) -> &FactoredNatural {
        &self.num
    }

    pub fn denominator(&self) -> &FactoredNatural {
        &self.den
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num.mul(&other.num), &self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Self {
        Self::new(&self.num.mul(&other.den), &self.den.mul(&other.num))
    }

    pub fn recip(&self) -> Self {
        ExactRational { num: self.den.clone(), den: self.num.clone() }
    }

    pub fn cmp_rational(&self, other: &Self) -> Ordering {
        compare(&self.num.mul(&other.den), &other.num.mul(&self.den))
    }

    pub fn cmp_one(&self) -> Ordering {
        compare(&self.num, &self.den)
    }

    pub fn cmp_natural(&self, n: &FactoredNatural) -> Ordering {
        compare(&self.num, &n.mul(&self.den))
    }

    /// Exact numerator and denominator.
    pub fn to_exact_parts(&self) -> (BigUint, BigUint) {
        (to_exact(&self.num), to_exact(&self.den))
    }

    pub fn to_f64(&self) -> f64 {
        (log_value(&self.num).lo - log_value(&self.den).lo).exp()
    }
}

/// Dense signed exponent vector indexed by prime, for long products and
/// quotients of machine integers.
#[derive(Debug, Clone)]
pub struct ExponentTally<'s> {
    sieve: &'s SieveTable,
    exps: Vec<i64>,
}

impl<'s> ExponentTally<'s> {
    pub fn new(sieve: &'s SieveTable) -> Self {
        ExponentTally { sieve, exps: vec![0; sieve.limit() as usize + 1] }
    }

    /// Multiplies by `n^times` (`times` may be negative).
    pub fn add(&mut self, n: u64, times: i64) -> Result<()> {
        if n == 0 {
            return invalid("zero factor in a product");
        }
        let mut rest = n;
        while rest > 1 {
            let p = self.sieve.smallest_prime_factor(rest)?;
            rest /= p;
            self.exps[p as usize] += times;
        }
        Ok(())
    }

    pub fn mul(&mut self, n: u64) -> Result<()> {
        self.add(n, 1)
    }

    pub fn div(&mut self, n: u64) -> Result<()> {
        self.add(n, -1)
    }

    pub fn to_rational(&self) -> ExactRational {
        let mut num = Vec::new();
        let mut den = Vec::new();
        for (p, &e) in self.exps.iter().enumerate() {
            match e.cmp(&0) {
                Ordering::Greater => num.push((p as u64, e as u32)),
                Ordering::Less => den.push((p as u64, (-e) as u32)),
                Ordering::Equal => {}
            }
        }
        ExactRational {
            num: FactoredNatural::from_sorted_unchecked(num),
            den: FactoredNatural::from_sorted_unchecked(den),
        }
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.to_exact_parts();
        if self.den.is_one() {
            write!(f, "{n}")
        } else {
            write!(f, "{n}/{d}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sieve::build_sieve;

    fn sieve() -> SieveTable {
        build_sieve(1000).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn binomial_examples() {
        let s = sieve();
        assert_eq!(binomial_factored(8, 4, &s).unwrap().entries(), &[(2, 1), (5, 1), (7, 1)]);
        assert!(binomial_factored(17, 0, &s).unwrap().is_one());
        assert_eq!(binomial_factored(10, 5, &s).unwrap().entries(), &[(2, 2), (3, 2), (7, 1)]);
        assert!(binomial_factored(3, 4, &s).is_err());
        assert!(binomial_factored(1001, 3, &s).is_err());
    }

    #[test]
    fn to_exact_examples() {
        assert_eq!(to_exact(&FactoredNatural::one()), big(1));
        assert_eq!(to_exact(&FactoredNatural::from_pairs([(2, 3), (3, 2)])), big(72));
        assert_eq!(to_exact(&FactoredNatural::prime_power(13, 1)), big(13));
    }

    #[test]
    fn divide_examples() {
        let s = sieve();
        let c105 = binomial_factored(10, 5, &s).unwrap();
        let c21 = binomial_factored(2, 1, &s).unwrap();
        let q = divide_exact(&c105, &c21).exact().unwrap();
        assert_eq!(q.entries(), &[(2, 1), (3, 2), (7, 1)]);
        assert_eq!(to_exact(&q), big(126));

        let c84 = binomial_factored(8, 4, &s).unwrap();
        let c42 = binomial_factored(4, 2, &s).unwrap();
        assert_eq!(divide_exact(&c84, &c42), Quotient::NotDivisible { witness: 3 });
        assert_eq!(divide_exact(&c84, &FactoredNatural::one()), Quotient::Exact(c84.clone()));
    }

    #[test]
    fn compare_examples() {
        let s = sieve();
        let f = binomial_factored(100, 37, &s).unwrap();
        assert_eq!(compare(&f, &f), Ordering::Equal);
        let c49 = binomial_factored(100, 49, &s).unwrap();
        let c50 = binomial_factored(100, 50, &s).unwrap();
        assert_eq!(compare(&c49, &c50), Ordering::Less);
        assert_eq!(compare(&c50, &c49), Ordering::Greater);
        let six = binomial_factored(4, 2, &s).unwrap();
        let seventy = binomial_factored(8, 4, &s).unwrap();
        assert_eq!(compare(&six, &seventy), Ordering::Less);
    }

    #[test]
    fn compare_falls_back_on_overlap() {
        // (10^6 - 1)(10^6 + 1) vs (10^6)^2: logs differ by 1e-12, inside the interval width.
        let s = build_sieve(1_000_001).unwrap();
        let a = s.factorize(999_999).unwrap().mul(&s.factorize(1_000_001).unwrap());
        let b = s.factorize(1_000_000).unwrap().pow(2);
        let (na, nb) = a.split_quotient(&b);
        assert!(log_value(&na).overlaps(&log_value(&nb)));
        assert_eq!(compare(&a, &b), Ordering::Less);
        assert_eq!(compare(&b, &a), Ordering::Greater);
    }

    #[test]
    fn log_value_examples() {
        let one = log_value(&FactoredNatural::one());
        assert!(one.contains(0.0) && one.width() <= LOG_TOLERANCE);
        let p = log_value(&FactoredNatural::prime_power(2, 10));
        assert!(p.contains(10.0 * 2f64.ln()));
        assert!((p.lo - 6.931).abs() < 1e-3);
        let s = sieve();
        let c = log_value(&binomial_factored(20, 10, &s).unwrap());
        assert!(c.contains(184756f64.ln()));
        assert!((c.lo - 12.127).abs() < 1e-3);
    }

    #[test]
    fn rational_reduces() {
        let s = sieve();
        let r = ExactRational::from_ratio(90, 70, &s).unwrap();
        assert_eq!(r.to_string(), "9/7");
        assert!(ExactRational::from_ratio(7, 7, &s).unwrap().is_one());
        let half = ExactRational::from_ratio(1, 2, &s).unwrap();
        assert_eq!(r.mul(&half).to_string(), "9/14");
        assert_eq!(r.div(&r), ExactRational::one());
        assert_eq!(half.cmp_one(), Ordering::Less);
        assert!(ExactRational::from_ratio(0, 2, &s).is_err());
    }

    #[test]
    fn tally_matches_rational_products() {
        let s = sieve();
        let mut t = ExponentTally::new(&s);
        let mut r = ExactRational::one();
        for (n, d) in [(12u64, 35u64), (49, 18), (1, 1), (1000, 3)] {
            t.mul(n).unwrap();
            t.div(d).unwrap();
            r = r.mul(&ExactRational::from_ratio(n, d, &s).unwrap());
        }
        assert_eq!(t.to_rational(), r);
        assert_eq!(r.to_string(), "2800/9");
        assert!(t.mul(0).is_err());
        assert!(t.mul(1001).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(FactoredNatural::from_pairs([(3, 2), (2, 3), (2, 1)]).to_string(), "2^4·3^2");
        assert_eq!(FactoredNatural::one().to_string(), "1");
    }
}
