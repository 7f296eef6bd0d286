//! Truncated univariate power series over exact rationals: the ring of
//! polynomials modulo `t^(N+1)` for a fixed truncation order `N`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rat;

/// Coefficient list indexed by power; `coeffs.len() == order + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rat>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rat::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &Rat {
        &self.coeffs[i]
    }

    /// `log(1 - t) = -sum_{m>=1} t^m / m`, truncated at the given order.
    pub fn log1m(order: usize) -> Self {
        let mut s = Self::zero(order);
        for m in 1..=order {
            s.coeffs[m] = Rat::new(BigInt::from(-1), BigInt::from(m as u64));
        }
        s
    }

    /// Truncated product; both operands must share the truncation order.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order(), "mismatched truncation orders");
        let order = self.order();
        let mut result = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                if !b.is_zero() {
                    result.coeffs[i + j] += a * b;
                }
            }
        }
        result
    }

    /// Truncated power by binary exponentiation; `s^0 = 1`.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }
}
