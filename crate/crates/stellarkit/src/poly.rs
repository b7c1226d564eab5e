//! Dense univariate polynomials with exact integer coefficients, used for
//! h-polynomials and Hilbert-series numerators.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in one variable `t`. `coeffs[k]` is the coefficient of `t^k`;
/// trailing zeros are trimmed, the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

fn add_checked(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("polynomial coefficient overflow")
}

fn mul_checked(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("polynomial coefficient overflow")
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        IntPolynomial::from_coeffs(vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn t() -> Self {
        IntPolynomial::monomial(1, 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// `t^lo + t^(lo+1) + ... + t^hi`; zero when `lo > hi`.
    pub fn geometric(lo: usize, hi: usize) -> Self {
        if lo > hi {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![0; hi + 1];
        for c in coeffs.iter_mut().take(hi + 1).skip(lo) {
            *c = 1;
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    /// `(1 - t)^k`.
    pub fn one_minus_t_pow(k: usize) -> Self {
        IntPolynomial::from_coeffs(vec![1, -1]).pow(k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn scale(&self, c: i64) -> Self {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|&a| mul_checked(a, c)).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = IntPolynomial::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| add_checked(self.coeff(k), rhs.coeff(k)))
            .collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        self.scale(-1)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = add_checked(coeffs[i + j], mul_checked(a, b));
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (k, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{mag}*t")?,
                (_, 1) => write!(f, "t^{k}")?,
                (_, _) => write!(f, "{mag}*t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = IntPolynomial::from_coeffs(vec![1, 1, 1]);
        let q = IntPolynomial::from_coeffs(vec![1, -1]);
        assert_eq!((&p * &q), IntPolynomial::from_coeffs(vec![1, 0, 0, -1]));
        assert_eq!(
            (&p + &q),
            IntPolynomial::from_coeffs(vec![2, 0, 1])
        );
        assert_eq!(IntPolynomial::one_minus_t_pow(2).coeffs(), &[1, -2, 1]);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn trimming_and_geometric() {
        assert!(IntPolynomial::from_coeffs(vec![0, 0]).is_zero());
        assert_eq!(IntPolynomial::geometric(1, 3).coeffs(), &[0, 1, 1, 1]);
        assert!(IntPolynomial::geometric(2, 1).is_zero());
    }

    #[test]
    fn display() {
        let p = IntPolynomial::from_coeffs(vec![1, 0, -5, 5, 0, -1]);
        assert_eq!(p.to_string(), "1 - 5*t^2 + 5*t^3 - t^5");
        assert_eq!(IntPolynomial::from_coeffs(vec![1, 2, 1]).to_string(), "1 + 2*t + t^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
