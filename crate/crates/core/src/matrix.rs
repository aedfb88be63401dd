use std::fmt;
use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::SequenceParams;

/// A 2×2 matrix over arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a11: BigInt,
    pub a12: BigInt,
    pub a21: BigInt,
    pub a22: BigInt,
}

impl Mat2 {
    pub fn new(
        a11: impl Into<BigInt>,
        a12: impl Into<BigInt>,
        a21: impl Into<BigInt>,
        a22: impl Into<BigInt>,
    ) -> Self {
        Mat2 {
            a11: a11.into(),
            a12: a12.into(),
            a21: a21.into(),
            a22: a22.into(),
        }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    pub fn zero() -> Self {
        Mat2::new(0, 0, 0, 0)
    }

    /// Companion matrix `A = [[3k, 1-k], [1, 0]]`.
    pub fn companion(params: SequenceParams) -> Self {
        Mat2::new(params.trace(), params.one_minus_k(), 1, 0)
    }

    /// `R = [[3, 1-k], [1, 3(1-k)]]`, which maps `A^n` onto the C-sequence.
    pub fn lucas_seed(params: SequenceParams) -> Self {
        let omk = params.one_minus_k();
        Mat2::new(3, omk.clone(), 1, omk * 3)
    }

    pub fn det(&self) -> BigInt {
        &self.a11 * &self.a22 - &self.a12 * &self.a21
    }

    pub fn is_zero(&self) -> bool {
        self.a11.is_zero() && self.a12.is_zero() && self.a21.is_zero() && self.a22.is_zero()
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a11, &self.a12, &self.a21, &self.a22]
    }

    /// `self^n` by left-to-right square-and-multiply; `self^0` is the identity.
    pub fn pow(&self, n: u64) -> Mat2 {
        if n == 0 {
            return Mat2::identity();
        }
        let mut acc = self.clone();
        for bit in (0..63 - n.leading_zeros()).rev() {
            acc = &acc * &acc;
            if (n >> bit) & 1 == 1 {
                acc = &acc * self;
            }
        }
        acc
    }
}

impl Default for Mat2 {
    fn default() -> Self {
        Mat2::identity()
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a11: &self.a11 * &rhs.a11 + &self.a12 * &rhs.a21,
            a12: &self.a11 * &rhs.a12 + &self.a12 * &rhs.a22,
            a21: &self.a21 * &rhs.a11 + &self.a22 * &rhs.a21,
            a22: &self.a21 * &rhs.a12 + &self.a22 * &rhs.a22,
        }
    }
}

impl Sub for &Mat2 {
    type Output = Mat2;

    fn sub(self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a11: &self.a11 - &rhs.a11,
            a12: &self.a12 - &rhs.a12,
            a21: &self.a21 - &rhs.a21,
            a22: &self.a22 - &rhs.a22,
        }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.a11, self.a12, self.a21, self.a22
        )
    }
}
