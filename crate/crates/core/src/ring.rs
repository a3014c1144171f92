//! Commutative rings used as matrix entries: big integers and dense polynomials over them.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// The operations Bareiss elimination needs from an integral domain.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + Zero + One {
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Exact division; `None` if `other` does not divide `self`.
    fn div_exact(&self, other: &Self) -> Option<Self>;
}

impl Ring for BigInt {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = self.div_rem(other);
        Zero::is_zero(&r).then_some(q)
    }
}

/// Dense polynomial in `t` with big-integer coefficients, lowest degree first.
/// The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Poly::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        Poly { coeffs: c }
    }

    fn lead(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Human form such as `1 + 3t + t^2`.
    pub fn pretty(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{k}"),
            };
            if k == 0 || mag != BigInt::one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&mono);
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.pretty())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::constant(BigInt::one())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, other: Poly) -> Poly {
        Ring::plus(&self, &other)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, other: Poly) -> Poly {
        Ring::times(&self, &other)
    }
}

impl Ring for Poly {
    fn plus(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = BigInt::zero();
        Poly::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&z) + other.coeffs.get(k).unwrap_or(&z))
                .collect(),
        )
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
    fn negated(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        let d = other.degree()?;
        let lead = other.lead()?;
        let mut rem = self.clone();
        let Some(top) = rem.degree() else {
            return Some(Poly::zero());
        };
        if top < d {
            return None;
        }
        let mut q = vec![BigInt::zero(); top - d + 1];
        while let Some(rd) = rem.degree() {
            if rd < d {
                return None;
            }
            let (c, r) = rem.lead().unwrap().div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            let k = rd - d;
            let term = Poly::constant(c.clone()).shift(k);
            rem = rem.minus(&term.times(other));
            q[k] = c;
        }
        Some(Poly::new(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pretty_printing() {
        assert_eq!(Poly::from_i64(&[1, 3, 1]).pretty(), "1 + 3t + t^2");
        assert_eq!(Poly::from_i64(&[1]).pretty(), "1");
        assert_eq!(Poly::from_i64(&[0, -2, 0, 1]).pretty(), "-2t + t^3");
        assert_eq!(Poly::zero().pretty(), "0");
    }

    #[test]
    fn exact_division() {
        let a = Poly::from_i64(&[1, 1]);
        let b = Poly::from_i64(&[2, -3, 0, 5]);
        let p = a.times(&b);
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&b), Some(a));
        assert_eq!(Poly::from_i64(&[1, 0, 1]).div_exact(&Poly::from_i64(&[1, 1])), None);
        assert_eq!(Poly::from_i64(&[3]).div_exact(&Poly::from_i64(&[2])), None);
        assert_eq!(BigInt::from(12).div_exact(&BigInt::from(-4)), Some(BigInt::from(-3)));
    }

    #[test]
    fn evaluation() {
        let p = Poly::from_i64(&[1, 3, 1]);
        assert_eq!(p.eval(&BigInt::one()), BigInt::from(5));
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(11));
    }
}
