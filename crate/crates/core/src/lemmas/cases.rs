//! Small-parameter case analysis: polynomial root certificates, the `b = 1, 2`
//! cases, and the `a - x in {1, 2, 3}` strict inequalities.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::BoundCheckRecord;
use crate::error::{invalid, Result};
use crate::factored::{binomial_factored, central_binomial, compare, ExactRational, FactoredNatural};
use crate::poly::{exact_sqrt, quadratic_integer_roots, IntPoly};
use crate::sieve::SieveTable;

/// Integer roots of one displayed case equation, with the discriminant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCertificate {
    pub case: String,
    pub polynomial: String,
    pub discriminant: i128,
    pub discriminant_is_square: bool,
    pub roots: Vec<i128>,
    pub expected_roots: Vec<i128>,
    /// Roots must stay below this bound for the case to be excluded.
    pub excluded_from: i128,
}

impl RootCertificate {
    fn build(case: &str, poly: IntPoly, expected: &[i128], excluded_from: i128) -> Result<Self> {
        Ok(RootCertificate {
            case: case.to_string(),
            polynomial: poly.to_string(),
            discriminant: poly.discriminant(),
            discriminant_is_square: exact_sqrt(poly.discriminant()).is_some(),
            roots: quadratic_integer_roots(&poly)?,
            expected_roots: expected.to_vec(),
            excluded_from,
        })
    }

    /// Roots match the expected set and none reaches the excluded range.
    pub fn holds(&self) -> bool {
        self.roots == self.expected_roots && self.roots.iter().all(|&r| r < self.excluded_from)
    }
}

fn k() -> IntPoly {
    IntPoly::linear(1, 0)
}

fn lin(slope: i128, offset: i128) -> IntPoly {
    IntPoly::linear(slope, offset)
}

/// The four polynomial certificates:
/// * `a = 4, x = 3`: `8(2k-1)(2k-3) = 70k(k-3)`, roots `{4}`, excluded for `k >= 8`;
/// * `a = 3, x = 2`: `4(2k-1)(2k-3) = 20k(k-2)`, roots `{-1, 3}`, excluded for `k >= 6`;
/// * `x = 1, a = 2`: `(2k)(2k-1)(2k-2) = 6k·k(k-1)` reduces to `4(2k-1) = 6k`, root `{2}`;
/// * `b = 2, x = 2`: `15k(k-1) = 4(2k-1)(2k-3)`, discriminant 241, no roots.
pub fn case_certificates() -> Result<Vec<RootCertificate>> {
    let c = IntPoly::constant;
    let a4 = c(8) * lin(2, -1) * lin(2, -3) - c(70) * k() * lin(1, -3);
    let a3 = c(4) * lin(2, -1) * lin(2, -3) - c(20) * k() * lin(1, -2);
    let a2 = c(4) * lin(2, -1) - c(6) * k();
    let b2 = c(4) * lin(2, -1) * lin(2, -3) - c(15) * k() * lin(1, -1);
    Ok(vec![
        RootCertificate::build("a=4 x=3 (a-x=1)", a4, &[4], 8)?,
        RootCertificate::build("a=3 x=2 (a-x=1)", a3, &[-1, 3], 6)?,
        RootCertificate::build("x=1 a=2", a2, &[2], 11)?,
        RootCertificate::build("b=2 x=2", b2, &[], i128::MIN)?,
    ])
}

/// Records for the `b = 1` and `b = 2` cases with `x >= 2`, over `3 <= k <= k_max`.
pub fn lemma29_checks(k_max: u64, sieve: &SieveTable) -> Result<Vec<BoundCheckRecord>> {
    if k_max < 3 {
        return invalid(format!("k_max must be >= 3, got {k_max}"));
    }
    let mut out = Vec::new();
    for k in 2..=k_max {
        // b = 1, x = 2: C(2(k-1), k-1)·(x+2) > C(2k, k); larger x only grows the left side.
        let lhs = ExactRational::from_natural(central_binomial(k, sieve)?);
        let rhs = ExactRational::from_natural(central_binomial(k - 1, sieve)?.mul(&FactoredNatural::prime_power(2, 2)));
        out.push(BoundCheckRecord::exact_less("lemma29_b1_x2", format!("k={k}"), &lhs, &rhs));
    }
    for k in 3..=k_max {
        // b = 2, x = 3: C(2(k-2), k-2)·C(7, 2) > C(2k, k).
        let lhs = ExactRational::from_natural(central_binomial(k, sieve)?);
        let rhs = ExactRational::from_natural(central_binomial(k - 2, sieve)?.mul(&binomial_factored(7, 2, sieve)?));
        out.push(BoundCheckRecord::exact_less("lemma29_b2_x3", format!("k={k}"), &lhs, &rhs));
    }
    // b = 2, x >= 3 reduces to (x+4)(x+3)/32 > 1, smallest at x = 3: 42/32 = 21/16.
    let one = ExactRational::one();
    let seven_six = FactoredNatural::from_pairs([(2, 1), (3, 1), (7, 1)]);
    let at_three = ExactRational::new(&seven_six, &FactoredNatural::prime_power(2, 5));
    out.push(BoundCheckRecord::exact_less("lemma29_b2_x3_factor", "x=3", &one, &at_three));
    // b = 2, x = 2: no integer k satisfies 15k(k-1) = 4(2k-1)(2k-3).
    let cert = case_certificates()?.pop().expect("b=2 certificate");
    out.push(BoundCheckRecord {
        check: "lemma29_b2_x2_discriminant".into(),
        params: cert.polynomial.clone(),
        lhs: cert.discriminant.to_string(),
        rhs: "non-square".into(),
        margin: 0.0,
        holds: !cert.discriminant_is_square && cert.roots.is_empty(),
        rechecked: false,
    });
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Lemma2345Summary {
    pub k_max: u64,
    pub checked: u64,
    pub violations: Vec<BoundCheckRecord>,
    pub certificates: Vec<RootCertificate>,
}

/// For `d` in `{1, 2, 3}`, `x = a - d`, `2a <= k <= k_max`:
/// * `a >= 5`: strict `C(2k,k) < C(2a,a)·C(x+2b,b)`, except where
///   `C(2a,a) <= 2^(a+d)` (only `a = 5, d = 3`);
/// * otherwise, and for `a` in `{3, 4}`: non-equality, plus the root
///   certificates for `d = 1`.
///
/// As `k` grows `C(2k,k) / C(x+2b,b)` tends to `2^(a+d)`, so the strict form
/// cannot hold for large `k` once `C(2a,a) <= 2^(a+d)`.
pub fn lemma2345_scan(k_max: u64, sieve: &SieveTable) -> Result<Lemma2345Summary> {
    if k_max < 10 {
        return invalid(format!("k_max must be >= 10, got {k_max}"));
    }
    let mut checked = 0;
    let mut violations = Vec::new();
    for d in 1..=3u64 {
        for a in 3..=k_max / 2 {
            if a <= d {
                continue;
            }
            let c2a = central_binomial(a, sieve)?;
            let strict = a >= 5 && compare(&c2a, &FactoredNatural::prime_power(2, (a + d) as u32)) == Ordering::Greater;
            for kk in 2 * a..=k_max {
                let b = kk - a;
                let x = a - d;
                let rhs = c2a.mul(&binomial_factored(x + 2 * b, b, sieve)?);
                let lhs = central_binomial(kk, sieve)?;
                let ord = compare(&lhs, &rhs);
                let ok = if strict { ord == Ordering::Less } else { ord != Ordering::Equal };
                checked += 1;
                if !ok {
                    let check = if strict { "lemma2345_strict" } else { "lemma2345_unequal" };
                    let (l, r) = (ExactRational::from_natural(lhs), ExactRational::from_natural(rhs));
                    let mut rec = BoundCheckRecord::exact_less(check, format!("d={d} k={kk} a={a} x={x}"), &l, &r);
                    rec.holds = false;
                    violations.push(rec);
                }
            }
        }
    }
    let certificates = case_certificates()?.into_iter().take(2).collect();
    Ok(Lemma2345Summary { k_max, checked, violations, certificates })
}

/// `(a, x)` in `[1, max]²` where `4.42(a - x) >= 2a - x` and
/// `a >= (171/121)x` disagree. In integers: `442(a-x) >= 100(2a-x)` vs `121a >= 171x`.
pub fn threshold_constant_mismatches(max: i64) -> Vec<(i64, i64)> {
    let mut bad = Vec::new();
    for a in 1..=max {
        for x in 1..=max {
            let lhs = 442 * (a - x) >= 100 * (2 * a - x);
            let rhs = 121 * a >= 171 * x;
            if lhs != rhs {
                bad.push((a, x));
            }
        }
    }
    bad
}
