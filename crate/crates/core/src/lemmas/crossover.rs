//! Crossover of `(9/5)^x` against `e^(1/4)·sqrt(3πx/2)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{guarded_less, BoundCheckRecord, GUARD_BAND};
use crate::error::{invalid, Result};
use crate::hp::{self, Hp};

fn growth(x: u64) -> f64 {
    1.8f64.powi(x as i32)
}

fn bound(x: u64) -> f64 {
    0.25f64.exp() * (1.5 * PI * x as f64).sqrt()
}

/// `(9/5)^x - e^(1/4)·sqrt(3πx/2)`.
pub fn crossover_difference(x: u64) -> f64 {
    growth(x) - bound(x)
}

fn growth_hp(hp: &Hp, x: u64) -> astro_float::BigFloat {
    hp.powi(&hp.ratio(9, 5), x as usize)
}

fn bound_hp(hp: &mut Hp, x: u64) -> astro_float::BigFloat {
    let quarter = hp.ratio(1, 4);
    let e = hp.exp(&quarter);
    let pi = hp.pi();
    let inner = hp::mul(&hp::mul(&hp.ratio(3, 2), &pi), &hp.int(x as i64));
    hp::mul(&e, &hp.sqrt(&inner))
}

fn difference_hp(hp: &mut Hp, x: u64) -> astro_float::BigFloat {
    let g = growth_hp(hp, x);
    let b = bound_hp(hp, x);
    hp::sub(&g, &b)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossoverSummary {
    pub x_max: u64,
    /// `bound(x) < growth(x)` for `x = 2..=x_max`.
    pub inequality: Vec<BoundCheckRecord>,
    /// `difference(x) < difference(x + 1)` for `x = 2..x_max`.
    pub increasing: Vec<BoundCheckRecord>,
}

impl CrossoverSummary {
    /// The inequality fails at `x = 2`, holds for `3 <= x <= x_max`, and the
    /// difference increases throughout.
    pub fn passes(&self) -> bool {
        let ineq_ok = self.inequality.iter().all(|r| r.holds == (r.params != "x=2"));
        ineq_ok && self.increasing.iter().all(|r| r.holds)
    }
}

pub fn prop215_crossover(x_max: u64) -> Result<CrossoverSummary> {
    crossover_with_guard(x_max, GUARD_BAND)
}

pub(crate) fn crossover_with_guard(x_max: u64, guard: f64) -> Result<CrossoverSummary> {
    if x_max < 3 {
        return invalid(format!("x_max must be >= 3, got {x_max}"));
    }
    let mut inequality = Vec::new();
    for x in 2..=x_max {
        let (lhs, rhs) = (bound(x), growth(x));
        let (holds, re) = guarded_less(lhs.ln(), rhs.ln(), guard, || {
            let mut hp = Hp::new();
            let b = bound_hp(&mut hp, x);
            hp::cmp(&b, &growth_hp(&hp, x)).is_lt()
        });
        inequality.push(BoundCheckRecord::real_less("prop215_inequality", format!("x={x}"), lhs, rhs, holds, re));
    }
    let mut increasing = Vec::new();
    for x in 2..x_max {
        let (lhs, rhs) = (crossover_difference(x), crossover_difference(x + 1));
        // The difference is negative at x = 2; compare on a linear scale.
        let rel = (rhs - lhs) / lhs.abs().max(rhs.abs());
        let (holds, re) = if rel.abs() > guard {
            (rel > 0.0, false)
        } else {
            let mut hp = Hp::new();
            let lo = difference_hp(&mut hp, x);
            let hi = difference_hp(&mut hp, x + 1);
            (hp::cmp(&lo, &hi).is_lt(), true)
        };
        increasing.push(BoundCheckRecord::real_less("prop215_increasing", format!("x={x}"), lhs, rhs, holds, re));
    }
    Ok(CrossoverSummary { x_max, inequality, increasing })
}
