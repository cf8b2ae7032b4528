//! Ratio identities: the telescoping ratio for `x = a` and the `2^b` form of
//! `C(2k,k) / C(2a,a)` used for `a >= k/2`.

use std::cmp::Ordering;

use super::BoundCheckRecord;
use crate::error::{invalid, Error, Result};
use crate::factored::{binomial_factored, central_binomial, compare, ExactRational, ExponentTally, FactoredNatural};
use crate::sieve::SieveTable;

/// `C(2a,a)·C(a+2b,b) / C(2k,k)` with `b = k - a`, straight from the binomials.
pub fn prop21_ratio_direct(k: u64, a: u64, sieve: &SieveTable) -> Result<ExactRational> {
    check_ka(k, a)?;
    let b = k - a;
    let num = central_binomial(a, sieve)?.mul(&binomial_factored(a + 2 * b, b, sieve)?);
    Ok(ExactRational::new(&num, &central_binomial(k, sieve)?))
}

/// The same ratio as the product of the pairs
/// `((2a-j)/(a-j)) · ((k-j)/(2k-j))` for `j = 1..a-1`.
pub fn prop21_ratio_telescoped(k: u64, a: u64, sieve: &SieveTable) -> Result<ExactRational> {
    check_ka(k, a)?;
    let mut t = ExponentTally::new(sieve);
    for j in 1..a {
        t.mul(2 * a - j)?;
        t.div(a - j)?;
        t.mul(k - j)?;
        t.div(2 * k - j)?;
    }
    Ok(t.to_rational())
}

fn check_ka(k: u64, a: u64) -> Result<()> {
    if k == 0 {
        return invalid("k must be >= 1");
    }
    if a > k {
        return invalid(format!("a={a} exceeds k={k}"));
    }
    Ok(())
}

/// Both computation paths, which must agree.
pub fn prop21_ratio(k: u64, a: u64, sieve: &SieveTable) -> Result<ExactRational> {
    let direct = prop21_ratio_direct(k, a, sieve)?;
    let telescoped = prop21_ratio_telescoped(k, a, sieve)?;
    if direct != telescoped {
        return Err(Error::Inconsistent(format!(
            "ratio at k={k} a={a}: direct {direct} vs telescoped {telescoped}"
        )));
    }
    Ok(direct)
}

/// `(k, a)` pairs with `k <= k_max`, `0 <= a < k` where the ratio breaks the
/// pattern "= 1 for a in {0, 1}, > 1 for 1 < a < k".
pub fn prop21_trichotomy(k_max: u64, sieve: &SieveTable) -> Result<Vec<(u64, u64)>> {
    let mut bad = Vec::new();
    for k in 1..=k_max {
        for a in 0..k {
            let expect = if a <= 1 { Ordering::Equal } else { Ordering::Greater };
            if prop21_ratio(k, a, sieve)?.cmp_one() != expect {
                bad.push((k, a));
            }
        }
    }
    Ok(bad)
}

/// For `b = k - a >= 3`, `a >= k/2`:
/// (i) `C(2k,k)/C(2a,a) = 2^b·(2k-1)(2k-3)···(2a+1) / (k(k-1)···(a+1)) < 4^b`,
/// (ii) `4^b < C(3b, b)`.
pub fn lemma28_checks(k: u64, a: u64, sieve: &SieveTable) -> Result<(BoundCheckRecord, BoundCheckRecord)> {
    if a > k || k - a < 3 || 2 * a < k {
        return invalid(format!("need b = k - a >= 3 and a >= k/2, got k={k} a={a}"));
    }
    let b = k - a;
    let quotient = ExactRational::new(&central_binomial(k, sieve)?, &central_binomial(a, sieve)?);
    let mut t = ExponentTally::new(sieve);
    t.add(2, b as i64)?;
    for i in a + 1..=k {
        t.mul(2 * i - 1)?;
        t.div(i)?;
    }
    let product_form = t.to_rational();
    let four_b = ExactRational::from_natural(FactoredNatural::prime_power(2, 2 * b as u32));
    let params = format!("k={k} a={a} b={b}");
    let mut first = BoundCheckRecord::exact_less("lemma28_quotient_below_4b", &params, &quotient, &four_b);
    first.holds &= quotient == product_form;
    let c3b = ExactRational::from_natural(binomial_factored(3 * b, b, sieve)?);
    let second = BoundCheckRecord::exact_less("lemma28_c3b_above_4b", format!("b={b}"), &four_b, &c3b);
    Ok((first, second))
}

/// Failing records of [`lemma28_checks`] for `k <= k_max`, `k/2 <= a <= k-3`.
pub fn lemma28_sweep(k_max: u64, sieve: &SieveTable) -> Result<(u64, Vec<BoundCheckRecord>)> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for k in 6..=k_max {
        for a in k.div_ceil(2)..=k - 3 {
            checked += 1;
            let (first, _) = lemma28_checks(k, a, sieve)?;
            if !first.holds {
                bad.push(first);
            }
        }
    }
    Ok((checked, bad))
}

/// Values of `b` in `[3, b_max]` with `C(3b, b) <= 4^b`.
pub fn three_b_binomial_exceptions(b_max: u64, sieve: &SieveTable) -> Result<Vec<u64>> {
    let mut bad = Vec::new();
    for b in 3..=b_max {
        let four_b = FactoredNatural::prime_power(2, 2 * b as u32);
        if compare(&binomial_factored(3 * b, b, sieve)?, &four_b) != Ordering::Greater {
            bad.push(b);
        }
    }
    Ok(bad)
}
