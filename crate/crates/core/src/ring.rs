//! Sequence parameters and arithmetic in the order `Z[α]`, where `α` is a
//! root of the characteristic polynomial `x² - 3k·x + (k-1)`.
//!
//! Elements are stored as coordinates `u + v·α`. The conjugate root is
//! `β = 3k - α`, so nothing here ever touches a radical or a float.

use std::cell::Cell;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::One;

use crate::{Error, Result};

/// The parameter `k` of the recurrence `X(n) = 3k·X(n-1) + (1-k)·X(n-2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SequenceParams {
    k: u64,
}

impl SequenceParams {
    pub fn new(k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidK);
        }
        Ok(SequenceParams { k })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// `α + β = 3k`.
    pub fn trace(&self) -> BigInt {
        BigInt::from(self.k) * 3u32
    }

    /// `αβ = k - 1`.
    pub fn norm(&self) -> BigInt {
        BigInt::from(self.k) - 1u32
    }

    /// `1 - k`, the coefficient of `X(n-2)` in the recurrence.
    pub fn one_minus_k(&self) -> BigInt {
        BigInt::one() - BigInt::from(self.k)
    }

    /// `trace² - 4·norm = 9k² - 4k + 4`, always positive.
    pub fn discriminant(&self) -> BigInt {
        let t = self.trace();
        &t * &t - self.norm() * 4u32
    }

    pub fn is_degenerate(&self) -> bool {
        self.k == 1
    }

    /// Whether `k ≢ 1 (mod 3)`, the side condition of the gcd theorems.
    pub fn coprimality_hypothesis(&self) -> bool {
        self.k % 3 != 1
    }
}

/// `u + v·α` in `Z[α]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement {
    pub u: BigInt,
    pub v: BigInt,
    pub params: SequenceParams,
}

impl RingElement {
    pub fn new(params: SequenceParams, u: impl Into<BigInt>, v: impl Into<BigInt>) -> Self {
        RingElement {
            u: u.into(),
            v: v.into(),
            params,
        }
    }

    pub fn one(params: SequenceParams) -> Self {
        Self::new(params, 1, 0)
    }

    pub fn alpha(params: SequenceParams) -> Self {
        Self::new(params, 0, 1)
    }

    /// Applies `α ↦ β`: `u + v·β = (u + 3k·v) - v·α`.
    pub fn conj(&self) -> Self {
        RingElement {
            u: &self.u + self.params.trace() * &self.v,
            v: -&self.v,
            params: self.params,
        }
    }

    /// `(u + vα)(u + vβ) = u² + 3k·uv + (k-1)·v²`.
    pub fn norm(&self) -> BigInt {
        let (u, v) = (&self.u, &self.v);
        u * u + self.params.trace() * u * v + self.params.norm() * v * v
    }

    /// `(u + vα) + (u + vβ) = 2u + 3k·v`.
    pub fn trace(&self) -> BigInt {
        &self.u * 2u32 + self.params.trace() * &self.v
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        ring_mul(self, other)
    }

    pub fn pow(&self, n: u64) -> RingElement {
        ring_pow(self, n)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}α", self.u, self.v)
    }
}

impl Mul for &RingElement {
    type Output = RingElement;

    /// Panics on a parameter mismatch; use [`ring_mul`] for the fallible form.
    fn mul(self, rhs: &RingElement) -> RingElement {
        ring_mul(self, rhs).expect("ring elements with different k")
    }
}

fn mul_unchecked(a: &RingElement, b: &RingElement) -> RingElement {
    let vv = &a.v * &b.v;
    let u = &a.u * &b.u - a.params.norm() * &vv;
    let v = &a.u * &b.v + &b.u * &a.v + a.params.trace() * &vv;
    RingElement {
        u,
        v,
        params: a.params,
    }
}

/// Multiplies two elements, reducing `α²` to `3k·α - (k-1)`.
pub fn ring_mul(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    if a.params != b.params {
        return Err(Error::ParamMismatch {
            left: a.params.k,
            right: b.params.k,
        });
    }
    Ok(mul_unchecked(a, b))
}

/// `a^n` by left-to-right binary exponentiation.
pub fn ring_pow(a: &RingElement, n: u64) -> RingElement {
    ring_pow_counted(a, n).0
}

/// Like [`ring_pow`], also returning the number of ring multiplications
/// performed (squarings included).
pub fn ring_pow_counted(a: &RingElement, n: u64) -> (RingElement, u32) {
    if n == 0 {
        return (RingElement::one(a.params), 0);
    }
    let count = Cell::new(0u32);
    let mul = |x: &RingElement, y: &RingElement| {
        count.set(count.get() + 1);
        mul_unchecked(x, y)
    };
    let mut acc = a.clone();
    for bit in (0..63 - n.leading_zeros()).rev() {
        acc = mul(&acc, &acc);
        if (n >> bit) & 1 == 1 {
            acc = mul(&acc, a);
        }
    }
    (acc, count.get())
}

/// Coordinates `(u, v)` of `α^n = u + v·α`.
///
/// Since `β^n = u + v·β` as well, `v = (α^n - β^n)/(α - β) = B(k, n)` and
/// `u = -(k-1)·B(k, n-1)`.
pub fn alpha_power_components(params: SequenceParams, n: u64) -> (BigInt, BigInt) {
    let p = ring_pow(&RingElement::alpha(params), n);
    (p.u, p.v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn p(k: u64) -> SequenceParams {
        SequenceParams::new(k).unwrap()
    }

    fn iterative_b(k: u64, n: u64) -> BigInt {
        let (mut a, mut b) = (BigInt::zero(), BigInt::one());
        for _ in 0..n {
            let next = BigInt::from(3 * k) * &b + (BigInt::one() - BigInt::from(k)) * &a;
            a = std::mem::replace(&mut b, next);
        }
        a
    }

    #[test]
    fn rejects_k_zero() {
        assert_eq!(SequenceParams::new(0), Err(Error::InvalidK));
    }

    #[test]
    fn derived_constants() {
        let q = p(3);
        assert_eq!(q.trace(), BigInt::from(9));
        assert_eq!(q.norm(), BigInt::from(2));
        assert_eq!(q.discriminant(), BigInt::from(81 - 12 + 4));
        assert!(p(1).is_degenerate());
        assert_eq!(p(1).norm(), BigInt::zero());
        for k in 1..200 {
            assert!(p(k).discriminant() > BigInt::zero());
        }
    }

    #[test]
    fn alpha_squared_is_characteristic_equation() {
        let a = RingElement::alpha(p(2));
        assert_eq!(ring_mul(&a, &a).unwrap(), RingElement::new(p(2), -1, 6));
    }

    #[test]
    fn identity_is_neutral() {
        for k in 1..6 {
            let x = RingElement::new(p(k), 17, -4);
            assert_eq!(ring_mul(&RingElement::one(p(k)), &x).unwrap(), x);
        }
    }

    #[test]
    fn alpha_cubed_k2() {
        let a2 = RingElement::new(p(2), -1, 6);
        let a = RingElement::alpha(p(2));
        assert_eq!(ring_mul(&a2, &a).unwrap(), RingElement::new(p(2), -6, 35));
    }

    #[test]
    fn mismatched_params() {
        let a = RingElement::alpha(p(2));
        let b = RingElement::alpha(p(3));
        assert_eq!(
            ring_mul(&a, &b),
            Err(Error::ParamMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn pow_examples() {
        let x = RingElement::new(p(4), 5, 7);
        assert_eq!(ring_pow(&x, 0), RingElement::one(p(4)));
        assert_eq!(
            ring_pow(&RingElement::alpha(p(2)), 3),
            RingElement::new(p(2), -6, 35)
        );
        assert_eq!(ring_pow(&RingElement::alpha(p(3)), 4).v, BigInt::from(693));
    }

    #[test]
    fn components() {
        assert_eq!(
            alpha_power_components(p(7), 1),
            (BigInt::zero(), BigInt::one())
        );
        let (u, v) = alpha_power_components(p(2), 2);
        assert_eq!((u.clone(), v.clone()), (BigInt::from(-1), BigInt::from(6)));
        // α² + β² = (α+β)² - 2αβ = 36 - 2
        assert_eq!(u * 2 + BigInt::from(6) * v, BigInt::from(34));
        assert_eq!(alpha_power_components(p(4), 3).1, BigInt::from(141));
    }

    #[test]
    fn degenerate_k1_has_unit_zeroth_power() {
        let a = RingElement::alpha(p(1));
        assert_eq!(ring_pow(&a, 0), RingElement::one(p(1)));
        assert_eq!(a.norm(), BigInt::zero());
    }

    #[test]
    fn norm_of_alpha_is_k_minus_one() {
        for k in 1..20 {
            assert_eq!(RingElement::alpha(p(k)).norm(), BigInt::from(k - 1));
        }
    }

    #[test]
    fn v_part_matches_recurrence() {
        for k in 1..=12 {
            let mut acc = RingElement::one(p(k));
            let a = RingElement::alpha(p(k));
            for n in 0..=300u64 {
                assert_eq!(acc.v, iterative_b(k, n), "k={k} n={n}");
                acc = &acc * &a;
            }
        }
    }

    #[test]
    fn multiplication_count_is_logarithmic() {
        let a = RingElement::alpha(p(5));
        for n in (0..2000u64).chain([65_535, 65_536, 100_000]) {
            let (_, count) = ring_pow_counted(&a, n);
            let bound = 2 * (64 - n.leading_zeros()) + 2; // 2·⌈log₂(n+1)⌉ + 2
            assert!(count <= bound, "n={n}: {count} > {bound}");
        }
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(
            k in 1u64..50,
            u1 in -1_000_000i64..=1_000_000,
            v1 in -1_000_000i64..=1_000_000,
            u2 in -1_000_000i64..=1_000_000,
            v2 in -1_000_000i64..=1_000_000,
        ) {
            let a = RingElement::new(p(k), u1, v1);
            let b = RingElement::new(p(k), u2, v2);
            prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
        }

        #[test]
        fn conj_times_self_is_rational(k in 1u64..50, u in -10_000i64..10_000, v in -10_000i64..10_000) {
            let a = RingElement::new(p(k), u, v);
            let prod = &a * &a.conj();
            prop_assert!(prod.v.is_zero());
            prop_assert_eq!(prod.u, a.norm());
        }
    }
}
