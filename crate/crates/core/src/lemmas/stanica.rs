//! Two-sided bound on `C(mn, rn)`:
//!
//! ```text
//! (2π)^-½ · e^(-1/(8n)) · n^-½ · m^(mn+½) / ((m-r)^((m-r)n+½) · r^(rn+½))
//!     < C(mn, rn) <
//! (2π)^-½ · n^-½ · m^(mn+½) / ((m-r)^((m-r)n+½) · r^(rn+½))
//! ```
//!
//! Evaluated in the log domain; the binomial itself comes from its exact
//! factorization.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{guarded_less, BoundCheckRecord, GUARD_BAND};
use crate::error::{invalid, Result};
use crate::factored::{binomial_factored, log_value, to_exact};
use crate::hp::{self, Hp};
use crate::sieve::SieveTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StanicaParams {
    pub m: u64,
    pub n: u64,
    pub r: u64,
}

impl StanicaParams {
    pub fn new(m: u64, n: u64, r: u64) -> Result<Self> {
        if !(m > r && r >= 1 && n >= 1) {
            return invalid(format!("need m > r >= 1 and n >= 1, got m={m} n={n} r={r}"));
        }
        Ok(StanicaParams { m, n, r })
    }
}

impl fmt::Display for StanicaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} n={} r={}", self.m, self.n, self.r)
    }
}

/// ln of the upper bound; the lower bound is this minus `1/(8n)`.
fn ln_upper(p: &StanicaParams) -> f64 {
    let (m, n, r) = (p.m as f64, p.n as f64, p.r as f64);
    let s = m - r;
    -0.5 * (2.0 * PI).ln() - 0.5 * n.ln() + (m * n + 0.5) * m.ln() - (s * n + 0.5) * s.ln() - (r * n + 0.5) * r.ln()
}

fn ln_upper_hp(hp: &mut Hp, p: &StanicaParams) -> astro_float::BigFloat {
    let (m, n, r) = (p.m as i64, p.n as i64, p.r as i64);
    let s = m - r;
    let half = hp.ratio(1, 2);
    let two_pi = hp::mul(&hp.int(2), &hp.pi());
    let mut acc = hp::mul(&half, &hp.ln(&two_pi)).neg();
    acc = hp::sub(&acc, &hp::mul(&half, &hp.ln_int(n as u64)));
    let term = |hp: &mut Hp, base: i64, coeff: i64| {
        let c = hp::add(&hp.int(coeff), &half);
        hp::mul(&c, &hp.ln_int(base as u64))
    };
    let t = term(hp, m, m * n);
    acc = hp::add(&acc, &t);
    let t = term(hp, s, s * n);
    acc = hp::sub(&acc, &t);
    let t = term(hp, r, r * n);
    hp::sub(&acc, &t)
}

/// Checks `lower < C(mn, rn) < upper`; returns the (lower, upper) records.
pub fn stanica_bounds(p: StanicaParams, sieve: &SieveTable) -> Result<(BoundCheckRecord, BoundCheckRecord)> {
    stanica_bounds_with_guard(p, GUARD_BAND, sieve)
}

/// As [`stanica_bounds`] with an explicit relative guard band.
pub fn stanica_bounds_with_guard(
    p: StanicaParams,
    guard: f64,
    sieve: &SieveTable,
) -> Result<(BoundCheckRecord, BoundCheckRecord)> {
    let p = StanicaParams::new(p.m, p.n, p.r)?;
    let top = p.m * p.n;
    let exact = binomial_factored(top, p.r * p.n, sieve)?;
    let li = log_value(&exact);
    let ln_c = 0.5 * (li.lo + li.hi);
    let ln_hi = ln_upper(&p);
    let ln_lo = ln_hi - 1.0 / (8.0 * p.n as f64);

    let hp_ln_c = |hp: &mut Hp| hp.ln_factored(&exact);
    let (lower_holds, lower_re) = guarded_less(ln_lo, ln_c, guard, || {
        let mut hp = Hp::new();
        let up = ln_upper_hp(&mut hp, &p);
        let lo = hp::sub(&up, &hp.ratio(1, 8 * p.n as i64));
        hp::cmp(&lo, &hp_ln_c(&mut hp)) == Ordering::Less
    });
    let (upper_holds, upper_re) = guarded_less(ln_c, ln_hi, guard, || {
        let mut hp = Hp::new();
        let up = ln_upper_hp(&mut hp, &p);
        hp::cmp(&hp_ln_c(&mut hp), &up) == Ordering::Less
    });

    let c_text = to_exact(&exact).to_string();
    let c_f = ln_c.exp();
    let mut lower = BoundCheckRecord::real_less("stanica_lower", p, ln_lo.exp(), c_f, lower_holds, lower_re);
    lower.rhs = c_text.clone();
    let mut upper = BoundCheckRecord::real_less("stanica_upper", p, c_f, ln_hi.exp(), upper_holds, upper_re);
    upper.lhs = c_text;
    Ok((lower, upper))
}

/// Runs the bound on `2 <= m <= m_max`, `1 <= r < m`, `1 <= n <= n_max`.
pub fn stanica_grid(m_max: u64, n_max: u64, sieve: &SieveTable) -> Result<Vec<BoundCheckRecord>> {
    let mut out = Vec::new();
    for m in 2..=m_max {
        for r in 1..m {
            for n in 1..=n_max {
                let (lo, hi) = stanica_bounds(StanicaParams::new(m, n, r)?, sieve)?;
                out.push(lo);
                out.push(hi);
            }
        }
    }
    Ok(out)
}
