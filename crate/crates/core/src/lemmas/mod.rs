//! Direct numerical checks of the supporting lemmas.
//!
//! Exact checks use factored arithmetic throughout. Real-valued checks run in
//! double precision and re-evaluate in high precision whenever the relative
//! margin is inside [`GUARD_BAND`].

use std::cmp::Ordering;
use std::fmt::Display;

use serde::{Deserialize, Serialize};

use crate::factored::ExactRational;

mod cases;
mod crossover;
mod prime_scan;
mod ratios;
mod stanica;

pub use cases::{
    case_certificates, lemma2345_scan, lemma29_checks, threshold_constant_mismatches, Lemma2345Summary,
    RootCertificate,
};
pub use crossover::{crossover_difference, prop215_crossover, CrossoverSummary};
pub use prime_scan::{prime_divisor_scan, Multiplier, PrimeLemma, PrimeScanResult, PrimeScanSummary, ScanConstraints};
pub use ratios::{
    lemma28_checks, lemma28_sweep, prop21_ratio, prop21_ratio_direct, prop21_ratio_telescoped, prop21_trichotomy,
    three_b_binomial_exceptions,
};
pub use stanica::{stanica_bounds, stanica_bounds_with_guard, stanica_grid, StanicaParams};

/// Relative margin below which a double-precision verdict is not trusted.
pub const GUARD_BAND: f64 = 1e-9;

/// One checked inequality `lhs < rhs` (or `lhs != rhs` for non-equality checks).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCheckRecord {
    pub check: String,
    pub params: String,
    pub lhs: String,
    pub rhs: String,
    /// `rhs - lhs`, approximated in double precision.
    pub margin: f64,
    pub holds: bool,
    /// Decided by high-precision re-evaluation.
    pub rechecked: bool,
}

fn finite(v: f64) -> f64 {
    if v.is_nan() {
        0.0
    } else {
        v.clamp(f64::MIN, f64::MAX)
    }
}

impl BoundCheckRecord {
    /// `lhs < rhs` decided exactly.
    pub fn exact_less(check: &str, params: impl Display, lhs: &ExactRational, rhs: &ExactRational) -> Self {
        BoundCheckRecord {
            check: check.to_string(),
            params: params.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            margin: finite(rhs.to_f64() - lhs.to_f64()),
            holds: lhs.cmp_rational(rhs) == Ordering::Less,
            rechecked: false,
        }
    }

    /// `lhs != rhs` decided exactly.
    pub fn exact_unequal(check: &str, params: impl Display, lhs: &ExactRational, rhs: &ExactRational) -> Self {
        let mut rec = Self::exact_less(check, params, lhs, rhs);
        rec.holds = lhs.cmp_rational(rhs) != Ordering::Equal;
        rec
    }

    pub fn real_less(check: &str, params: impl Display, lhs: f64, rhs: f64, holds: bool, rechecked: bool) -> Self {
        BoundCheckRecord {
            check: check.to_string(),
            params: params.to_string(),
            lhs: format!("{lhs:.12e}"),
            rhs: format!("{rhs:.12e}"),
            margin: finite(rhs - lhs),
            holds,
            rechecked,
        }
    }
}

/// Decides `lhs < rhs` from natural logs in double precision, falling back
/// to `exact` when the relative margin `1 - lhs/rhs` is within `guard`.
pub(crate) fn guarded_less(ln_lhs: f64, ln_rhs: f64, guard: f64, exact: impl FnOnce() -> bool) -> (bool, bool) {
    let rel = -(ln_lhs - ln_rhs).exp_m1();
    if !rel.is_nan() && rel.abs() > guard {
        (rel > 0.0, false)
    } else {
        (exact(), true)
    }
}
