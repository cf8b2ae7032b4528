//! Solver and exhaustive search for `C(2k,k) = C(2a,a)·C(x+2b,b)`, `k = a + b`.
//!
//! For a fixed `(k, a)` the right-hand factor `C(x+2b, b)` is strictly
//! increasing in `x`, so at most one `x` can match the target
//! `T = C(2k,k) / C(2a,a)`. The solver prunes on divisibility first (factored
//! arithmetic), then brackets `x` by doubling and finishes with a binary
//! search in exact big-natural arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::time::Instant;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::factored::{central_binomial, divide_exact, to_exact, ExactRational, Quotient};
use crate::sieve::SieveTable;

/// Which specialization of the equation is searched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `x >= 1`, `a >= 0`.
    Standard,
    /// `x = 0`, `a >= 1`: `C(2k,k) = C(2a,a)·C(2b,b)`.
    Moser,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Standard => "standard",
            Mode::Moser => "moser",
        }
    }

    /// Range of `a` searched for a given `k`.
    pub fn a_range(&self, k: u64) -> std::ops::Range<u64> {
        match self {
            Mode::Standard => 0..k,
            Mode::Moser => 1..k,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Mode::Standard),
            "moser" => Ok(Mode::Moser),
            other => invalid(format!("unknown mode '{other}'")),
        }
    }
}

/// A tuple `(k, a, b, x)` with `k = a + b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EquationInstance {
    pub k: u64,
    pub a: u64,
    pub b: u64,
    pub x: u64,
}

impl EquationInstance {
    pub fn new(k: u64, a: u64, x: u64) -> Result<Self> {
        if k == 0 || a >= k {
            return invalid(format!("need 0 <= a < k, got k={k} a={a}"));
        }
        Ok(EquationInstance { k, a, b: k - a, x })
    }

    /// Member of the solution family `x = a = 1`.
    pub fn is_trivial_family(&self) -> bool {
        self.a == 1 && self.x == 1
    }

    /// Recomputes both sides as big naturals and tests equality.
    pub fn holds_exactly(&self) -> bool {
        let lhs = binomial_big(2 * self.k, self.k);
        let rhs = binomial_big(2 * self.a, self.a) * binomial_big(self.x + 2 * self.b, self.b);
        lhs == rhs
    }
}

impl fmt::Display for EquationInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(k={}, a={}, b={}, x={})", self.k, self.a, self.b, self.x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SolveOutcome {
    /// `C(2a,a)` does not divide `C(2k,k)`; `witness` is a prime where it fails.
    NonIntegralRatio { witness: u64 },
    NoMatchingX,
    Solution { x: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub k_min: u64,
    pub k_max: u64,
    pub mode: Mode,
    pub solutions: Vec<EquationInstance>,
    pub pairs_checked: u64,
    pub non_integral: u64,
    pub no_matching_x: u64,
    pub duration_ms: u64,
}

impl SearchReport {
    /// The solutions expected for this range and mode.
    pub fn expected_solutions(&self) -> Vec<EquationInstance> {
        expected_solutions(self.k_min, self.k_max, self.mode)
    }

    pub fn matches_expected(&self) -> bool {
        self.solutions == self.expected_solutions()
    }
}

/// `{(k, 1, k-1, 1) : 2 <= k}` in standard mode, nothing in Moser mode.
pub fn expected_solutions(k_min: u64, k_max: u64, mode: Mode) -> Vec<EquationInstance> {
    match mode {
        Mode::Standard => (k_min.max(2)..=k_max)
            .map(|k| EquationInstance { k, a: 1, b: k - 1, x: 1 })
            .collect(),
        Mode::Moser => Vec::new(),
    }
}

/// Sieve large enough for every factored binomial a search up to `k_max` needs.
pub fn sieve_for(k_max: u64) -> Result<SieveTable> {
    SieveTable::new((2 * k_max).max(2))
}

/// `C(n, r)` as a big natural by the running product `C(n-r+i, i)`.
pub(crate) fn binomial_big(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 1..=r {
        acc = acc * BigUint::from(n - r + i) / BigUint::from(i);
    }
    acc
}

/// `C(x + 2b, b)` for a big `x`.
fn family_value(x: &BigUint, b: u64) -> BigUint {
    let base = x + BigUint::from(b);
    let mut acc = BigUint::one();
    for i in 1..=b {
        acc = acc * (&base + BigUint::from(i)) / BigUint::from(i);
    }
    acc
}

/// Smallest `x >= start` with `C(x+2b, b) >= target`, and whether it hits exactly.
fn search_x(target: &BigUint, b: u64, start: u64) -> (BigUint, bool) {
    let start = BigUint::from(start);
    let probe = |x: &BigUint| family_value(x, b).cmp(target);
    match probe(&start) {
        Ordering::Equal => return (start, true),
        Ordering::Greater => return (start, false),
        Ordering::Less => {}
    }
    // Invariant: value(lo) < target.
    let mut lo = start.clone();
    let mut step = BigUint::one();
    let mut hi = &start + &step;
    loop {
        match probe(&hi) {
            Ordering::Equal => return (hi, true),
            Ordering::Greater => break,
            Ordering::Less => {
                lo = hi.clone();
                step <<= 1;
                hi = &start + &step;
            }
        }
    }
    // value(lo) < target < value(hi)
    while &hi - &lo > BigUint::one() {
        let mid: BigUint = (&lo + &hi) >> 1;
        match probe(&mid) {
            Ordering::Equal => return (mid, true),
            Ordering::Less => lo = mid,
            Ordering::Greater => hi = mid,
        }
    }
    (hi, false)
}

/// Solves for `x >= 1` given `(k, a)`.
pub fn solve_x(k: u64, a: u64, sieve: &SieveTable) -> Result<SolveOutcome> {
    solve_x_in_mode(k, a, Mode::Standard, sieve)
}

pub fn solve_x_in_mode(k: u64, a: u64, mode: Mode, sieve: &SieveTable) -> Result<SolveOutcome> {
    if k == 0 {
        return invalid("k must be >= 1");
    }
    if a >= k {
        return invalid(format!("a={a} must be < k={k} so that b >= 1"));
    }
    if mode == Mode::Moser && a == 0 {
        return invalid("Moser mode requires a >= 1");
    }
    let b = k - a;
    let target = match divide_exact(&central_binomial(k, sieve)?, &central_binomial(a, sieve)?) {
        Quotient::NotDivisible { witness } => return Ok(SolveOutcome::NonIntegralRatio { witness }),
        Quotient::Exact(t) => to_exact(&t),
    };
    let start = match mode {
        Mode::Standard => 1,
        Mode::Moser => 0,
    };
    let (x, hit) = search_x(&target, b, start);
    if !hit || (mode == Mode::Moser && !x.is_zero()) {
        return Ok(SolveOutcome::NoMatchingX);
    }
    let x = x
        .to_u64()
        .ok_or_else(|| Error::OutOfRange(format!("solution x for k={k} a={a} exceeds u64")))?;
    Ok(SolveOutcome::Solution { x })
}

/// Outcome counts and solutions for a single `k`.
#[derive(Debug, Default)]
struct RowTally {
    solutions: Vec<EquationInstance>,
    pairs: u64,
    non_integral: u64,
    no_matching_x: u64,
}

fn scan_row(k: u64, mode: Mode, sieve: &SieveTable) -> Result<RowTally> {
    let mut tally = RowTally::default();
    for a in mode.a_range(k) {
        tally.pairs += 1;
        match solve_x_in_mode(k, a, mode, sieve)? {
            SolveOutcome::NonIntegralRatio { .. } => tally.non_integral += 1,
            SolveOutcome::NoMatchingX => tally.no_matching_x += 1,
            SolveOutcome::Solution { x } => {
                let inst = EquationInstance { k, a, b: k - a, x };
                if !inst.holds_exactly() {
                    return Err(Error::Inconsistent(format!("solver produced {inst} which fails re-verification")));
                }
                tally.solutions.push(inst);
            }
        }
    }
    Ok(tally)
}

/// Scans every `(k, a)` with `k_min <= k <= k_max`. Rows run in parallel on
/// the current rayon pool; the report does not depend on the worker count.
pub fn exhaustive_search(k_min: u64, k_max: u64, mode: Mode) -> Result<SearchReport> {
    let sieve = sieve_for(k_max)?;
    exhaustive_search_with(k_min, k_max, mode, &sieve)
}

pub fn exhaustive_search_with(k_min: u64, k_max: u64, mode: Mode, sieve: &SieveTable) -> Result<SearchReport> {
    if k_min < 1 || k_min > k_max {
        return invalid(format!("empty or invalid k-range {k_min}..={k_max}"));
    }
    let started = Instant::now();
    let rows: Vec<RowTally> = (k_min..=k_max)
        .into_par_iter()
        .map(|k| scan_row(k, mode, sieve))
        .collect::<Result<_>>()?;
    let mut report = SearchReport {
        k_min,
        k_max,
        mode,
        solutions: Vec::new(),
        pairs_checked: 0,
        non_integral: 0,
        no_matching_x: 0,
        duration_ms: 0,
    };
    for row in rows {
        report.solutions.extend(row.solutions);
        report.pairs_checked += row.pairs;
        report.non_integral += row.non_integral;
        report.no_matching_x += row.no_matching_x;
    }
    report.solutions.sort();
    report.duration_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

/// Direct enumeration with plain big-integer binomials: divide, then walk
/// `x = 1, 2, ...` until `C(x+2b, b)` passes the quotient.
pub fn brute_force_oracle(k_max: u64, mode: Mode) -> Vec<EquationInstance> {
    fn binom(n: u64, r: u64) -> BigUint {
        // n(n-1)...(n-r+1) / r!
        let falling = (n - r + 1..=n).fold(BigUint::one(), |acc, v| acc * v);
        let fact = (1..=r).fold(BigUint::one(), |acc, v| acc * v);
        falling / fact
    }
    let mut found = Vec::new();
    for k in 1..=k_max {
        let lhs = binom(2 * k, k);
        for a in mode.a_range(k) {
            let b = k - a;
            let (t, rem) = lhs.div_rem(&binom(2 * a, a));
            if !rem.is_zero() {
                continue;
            }
            match mode {
                Mode::Moser => {
                    if binom(2 * b, b) == t {
                        found.push(EquationInstance { k, a, b, x: 0 });
                    }
                }
                Mode::Standard => {
                    let mut x = 1;
                    loop {
                        let v = binom(x + 2 * b, b);
                        if v == t {
                            found.push(EquationInstance { k, a, b, x });
                        }
                        if v >= t {
                            break;
                        }
                        x += 1;
                    }
                }
            }
        }
    }
    found
}

/// `C(2k,k) / C(2k-1,k-1)`, which is exactly 2.
pub fn verify_a1_identity(k: u64, sieve: &SieveTable) -> Result<ExactRational> {
    if k < 2 {
        return invalid(format!("a = 1 identity needs k >= 2, got {k}"));
    }
    let num = central_binomial(k, sieve)?;
    let den = crate::factored::binomial_factored(2 * k - 1, k - 1, sieve)?;
    Ok(ExactRational::new(&num, &den))
}

/// Pairs `(n, m)` with `n <= n_max`, `n/2 < m < n` where `C(2m,m)` divides
/// `C(2n,n)`. Erdős's theorem says there are none.
pub fn erdos_divisibility_exceptions(n_max: u64, sieve: &SieveTable) -> Result<Vec<(u64, u64)>> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        let big = central_binomial(n, sieve)?;
        for m in n / 2 + 1..n {
            if let Quotient::Exact(_) = divide_exact(&big, &central_binomial(m, sieve)?) {
                out.push((n, m));
            }
        }
    }
    Ok(out)
}
