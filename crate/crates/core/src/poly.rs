//! Integer polynomials of degree at most two and their integer roots.
//!
//! Roots come from an exact discriminant test; nothing here touches floating
//! point. A discriminant that is not a perfect square certifies that a
//! quadratic has no integer (indeed no rational) root.

use std::fmt;
use std::ops::{Mul, Neg, Sub};

use num_integer::Roots;

use crate::error::{invalid, Result};

/// `c0 + c1·k + c2·k²` with integer coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: [i128; 3],
}

impl IntPoly {
    pub fn new(c0: i128, c1: i128, c2: i128) -> Self {
        IntPoly { coeffs: [c0, c1, c2] }
    }

    pub fn constant(c: i128) -> Self {
        Self::new(c, 0, 0)
    }

    /// `slope·k + offset`.
    pub fn linear(slope: i128, offset: i128) -> Self {
        Self::new(offset, slope, 0)
    }

    pub fn coeffs(&self) -> [i128; 3] {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == [0; 3]
    }

    pub fn degree(&self) -> Option<usize> {
        (0..3).rev().find(|&i| self.coeffs[i] != 0)
    }

    pub fn eval(&self, k: i128) -> i128 {
        let [c0, c1, c2] = self.coeffs;
        (c2 * k + c1) * k + c0
    }

    pub fn discriminant(&self) -> i128 {
        let [c0, c1, c2] = self.coeffs;
        c1 * c1 - 4 * c2 * c0
    }

    pub fn scale(&self, s: i128) -> Self {
        let [c0, c1, c2] = self.coeffs;
        Self::new(s * c0, s * c1, s * c2)
    }

    /// Product, failing when the degree would exceed two.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = [0i128; 5];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        if out[3] != 0 || out[4] != 0 {
            return invalid(format!("({self})·({other}) has degree above 2"));
        }
        Ok(Self::new(out[0], out[1], out[2]))
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        let [a0, a1, a2] = self.coeffs;
        let [b0, b1, b2] = rhs.coeffs;
        IntPoly::new(a0 - b0, a1 - b1, a2 - b2)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        self.scale(-1)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    /// Panics when the product has degree above two; use `checked_mul` otherwise.
    fn mul(self, rhs: IntPoly) -> IntPoly {
        self.checked_mul(&rhs).expect("polynomial degree above 2")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for deg in (0..3).rev() {
            let c = self.coeffs[deg];
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mag = c.unsigned_abs();
            let var = match deg {
                0 => "",
                1 => "k",
                _ => "k^2",
            };
            if mag != 1 || deg == 0 {
                out.push_str(&mag.to_string());
            }
            out.push_str(var);
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}

/// Exact integer square root when `v` is a perfect square.
pub fn exact_sqrt(v: i128) -> Option<i128> {
    if v < 0 {
        return None;
    }
    let s = v.sqrt();
    (s * s == v).then_some(s)
}

/// All integer roots of a nonzero polynomial of degree at most two, ascending.
pub fn quadratic_integer_roots(poly: &IntPoly) -> Result<Vec<i128>> {
    let [c0, c1, c2] = poly.coeffs;
    let mut roots = match poly.degree() {
        None => return invalid("the zero polynomial has every integer as a root"),
        Some(0) => Vec::new(),
        Some(1) => {
            if c0 % c1 == 0 {
                vec![-c0 / c1]
            } else {
                Vec::new()
            }
        }
        Some(_) => match exact_sqrt(poly.discriminant()) {
            None => Vec::new(),
            Some(s) => {
                let mut r = Vec::new();
                for num in [-c1 - s, -c1 + s] {
                    if num % (2 * c2) == 0 {
                        r.push(num / (2 * c2));
                    }
                }
                r
            }
        },
    };
    roots.sort_unstable();
    roots.dedup();
    debug_assert!(roots.iter().all(|&k| poly.eval(k) == 0));
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k_minus(c: i128) -> IntPoly {
        IntPoly::linear(1, -c)
    }

    fn two_k_minus(c: i128) -> IntPoly {
        IntPoly::linear(2, -c)
    }

    #[test]
    fn a_equals_four_case() {
        let lhs = IntPoly::constant(8) * two_k_minus(1) * two_k_minus(3);
        let rhs = IntPoly::constant(70) * IntPoly::linear(1, 0) * k_minus(3);
        let p = lhs - rhs;
        assert_eq!(p, IntPoly::new(24, 146, -38));
        assert_eq!(quadratic_integer_roots(&p).unwrap(), vec![4]);
    }

    #[test]
    fn a_equals_three_case() {
        let lhs = IntPoly::constant(4) * two_k_minus(1) * two_k_minus(3);
        let rhs = IntPoly::constant(20) * IntPoly::linear(1, 0) * k_minus(2);
        let p = lhs - rhs;
        assert_eq!(p, IntPoly::new(12, 8, -4));
        assert_eq!(quadratic_integer_roots(&p).unwrap(), vec![-1, 3]);
    }

    #[test]
    fn perfect_square_and_linear() {
        assert_eq!(quadratic_integer_roots(&IntPoly::new(1, -2, 1)).unwrap(), vec![1]);
        assert_eq!(quadratic_integer_roots(&IntPoly::linear(2, -4)).unwrap(), vec![2]);
        assert_eq!(quadratic_integer_roots(&IntPoly::linear(2, -3)).unwrap(), Vec::<i128>::new());
        assert_eq!(quadratic_integer_roots(&IntPoly::constant(5)).unwrap(), Vec::<i128>::new());
        assert!(quadratic_integer_roots(&IntPoly::default()).is_err());
    }

    #[test]
    fn non_square_discriminant() {
        let p = IntPoly::new(12, -17, 1);
        assert_eq!(p.discriminant(), 241);
        assert_eq!(exact_sqrt(241), None);
        assert!(quadratic_integer_roots(&p).unwrap().is_empty());
        // negative discriminant
        assert!(quadratic_integer_roots(&IntPoly::new(1, 0, 1)).unwrap().is_empty());
    }

    #[test]
    fn rational_but_not_integral_root() {
        // 2k^2 - 3k + 1 = (2k - 1)(k - 1)
        assert_eq!(quadratic_integer_roots(&IntPoly::new(1, -3, 2)).unwrap(), vec![1]);
    }

    #[test]
    fn degree_overflow_is_rejected() {
        let k = IntPoly::linear(1, 0);
        assert!(k.checked_mul(&k).unwrap().checked_mul(&k).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(IntPoly::new(24, 146, -38).to_string(), "-38k^2 + 146k + 24");
        assert_eq!(IntPoly::new(12, -17, 1).to_string(), "k^2 - 17k + 12");
        assert_eq!(IntPoly::default().to_string(), "0");
    }

    proptest::proptest! {
        #[test]
        fn roots_match_brute_force(c0 in -400i128..400, c1 in -60i128..60, c2 in -8i128..8) {
            let p = IntPoly::new(c0, c1, c2);
            proptest::prop_assume!(!p.is_zero());
            let roots = quadratic_integer_roots(&p).unwrap();
            // Any integer root divides c0 (or is 0), so |root| <= |c0| unless c0 = 0.
            let bound = c0.abs().max(c1.abs()).max(1) + 1;
            let brute: Vec<i128> = (-bound..=bound).filter(|&k| p.eval(k) == 0).collect();
            if c0 == 0 && p.degree() != Some(0) {
                proptest::prop_assert!(roots.contains(&0));
            }
            proptest::prop_assert_eq!(roots, brute);
        }
    }
}
