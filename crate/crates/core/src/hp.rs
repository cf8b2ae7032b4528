// High-precision re-evaluation for real-valued checks whose double-precision
// margin falls inside the guard band.

use std::cmp::Ordering;

use astro_float::{BigFloat, Consts, RoundingMode};

use crate::factored::FactoredNatural;

const PREC: usize = 320;
const RM: RoundingMode = RoundingMode::ToEven;

pub(crate) struct Hp {
    cc: Consts,
}

impl Hp {
    pub(crate) fn new() -> Self {
        Hp { cc: Consts::new().expect("astro-float constants cache") }
    }

    pub(crate) fn int(&self, v: i64) -> BigFloat {
        BigFloat::from_i64(v, PREC)
    }

    pub(crate) fn ratio(&self, num: i64, den: i64) -> BigFloat {
        self.int(num).div(&self.int(den), PREC, RM)
    }

    pub(crate) fn pi(&mut self) -> BigFloat {
        self.cc.pi(PREC, RM)
    }

    pub(crate) fn ln(&mut self, v: &BigFloat) -> BigFloat {
        v.ln(PREC, RM, &mut self.cc)
    }

    pub(crate) fn ln_int(&mut self, v: u64) -> BigFloat {
        let x = BigFloat::from_u64(v, PREC);
        self.ln(&x)
    }

    pub(crate) fn exp(&mut self, v: &BigFloat) -> BigFloat {
        v.exp(PREC, RM, &mut self.cc)
    }

    pub(crate) fn sqrt(&self, v: &BigFloat) -> BigFloat {
        v.sqrt(PREC, RM)
    }

    pub(crate) fn ln_factored(&mut self, f: &FactoredNatural) -> BigFloat {
        let mut acc = self.int(0);
        for &(p, e) in f.entries() {
            let term = self.ln_int(p).mul(&self.int(e as i64), PREC, RM);
            acc = acc.add(&term, PREC, RM);
        }
        acc
    }

    /// `x^n` for a small non-negative integer power.
    pub(crate) fn powi(&self, x: &BigFloat, n: usize) -> BigFloat {
        x.powi(n, PREC, RM)
    }
}

pub(crate) fn add(a: &BigFloat, b: &BigFloat) -> BigFloat {
    a.add(b, PREC, RM)
}

pub(crate) fn sub(a: &BigFloat, b: &BigFloat) -> BigFloat {
    a.sub(b, PREC, RM)
}

pub(crate) fn mul(a: &BigFloat, b: &BigFloat) -> BigFloat {
    a.mul(b, PREC, RM)
}

pub(crate) fn cmp(a: &BigFloat, b: &BigFloat) -> Ordering {
    match a.cmp(b) {
        Some(c) if c < 0 => Ordering::Less,
        Some(0) => Ordering::Equal,
        Some(_) => Ordering::Greater,
        None => panic!("high-precision comparison against NaN"),
    }
}

#[cfg(test)]
pub(crate) fn to_f64(a: &BigFloat) -> f64 {
    let s = format!("{a}");
    s.parse().unwrap_or(f64::NAN)
}
