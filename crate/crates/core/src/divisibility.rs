//! Divisibility and gcd theorems.
//!
//! Four of the five checks carry the side condition `k ≢ 1 (mod 3)`. Cases
//! where it fails are still evaluated; their reports have
//! `hypothesis_met = false` and never count as violations, which is how the
//! sweep demonstrates that the condition is actually needed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::decimal;
use crate::{Error, Result, Seq, SequenceParams, Terms};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdReport {
    pub theorem_name: String,
    pub inputs: BTreeMap<String, u64>,
    #[serde(with = "decimal")]
    pub computed_gcd: BigInt,
    #[serde(with = "decimal")]
    pub expected: BigInt,
    pub hypothesis_met: bool,
    pub holds: bool,
}

impl GcdReport {
    fn new(
        name: impl Into<String>,
        inputs: &[(&str, u64)],
        computed_gcd: BigInt,
        expected: BigInt,
        hypothesis_met: bool,
    ) -> Self {
        GcdReport {
            theorem_name: name.into(),
            inputs: inputs.iter().map(|(n, v)| (n.to_string(), *v)).collect(),
            holds: computed_gcd == expected,
            computed_gcd,
            expected,
            hypothesis_met,
        }
    }

    pub fn is_violation(&self) -> bool {
        self.hypothesis_met && !self.holds
    }

    /// Failed with its hypothesis unmet: evidence that the hypothesis matters.
    pub fn is_counterexample(&self) -> bool {
        !self.hypothesis_met && !self.holds
    }
}

/// `gcd(|a|, |b|)`, with `gcd(0, x) = |x|`.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// `m | n  ⇒  B(m) | B(n)`. Holds for every `k`; no residue condition.
///
/// Reported as `gcd(B(m), B(n))` against `B(m)`, which coincide exactly when
/// the division is exact.
pub fn check_index_divisibility_in(t: &Terms, m: u64, n: u64) -> Result<GcdReport> {
    if m == 0 || n == 0 {
        return Err(Error::domain("index divisibility needs m, n >= 1"));
    }
    if !n.is_multiple_of(m) {
        return Err(Error::domain(format!(
            "index divisibility needs m | n (got m={m}, n={n})"
        )));
    }
    let (bm, bn) = (t.b(m)?, t.b(n)?);
    let mut rep = GcdReport::new(
        "index-divisibility",
        &[("k", t.k()), ("m", m), ("n", n)],
        gcd(bm, bn),
        bm.abs(),
        true,
    );
    rep.holds = (bn % bm).is_zero();
    Ok(rep)
}

pub fn check_index_divisibility(params: SequenceParams, m: u64, n: u64) -> Result<GcdReport> {
    check_index_divisibility_in(&Terms::new(params, m.max(n)), m, n)
}

/// `gcd(1-k, X(n)) = 1`.
pub fn check_coprime_norm_in(t: &Terms, seq: Seq, n: u64) -> Result<GcdReport> {
    if n == 0 {
        return Err(Error::domain("coprime-norm needs n >= 1"));
    }
    let g = gcd(&t.params().one_minus_k(), t.get(seq, n)?);
    Ok(GcdReport::new(
        format!("coprime-norm-{}", seq.suffix()),
        &[("k", t.k()), ("n", n)],
        g,
        BigInt::one(),
        t.params().coprimality_hypothesis(),
    ))
}

pub fn check_coprime_norm(seq: Seq, params: SequenceParams, n: u64) -> Result<GcdReport> {
    check_coprime_norm_in(&Terms::new(params, n), seq, n)
}

/// `gcd(X(n), X(n+1)) = 1`.
pub fn check_consecutive_coprime_in(t: &Terms, seq: Seq, n: u64) -> Result<GcdReport> {
    if n == 0 {
        return Err(Error::domain("consecutive-gcd needs n >= 1"));
    }
    let g = gcd(t.get(seq, n)?, t.get(seq, n + 1)?);
    Ok(GcdReport::new(
        format!("consecutive-gcd-{}", seq.suffix()),
        &[("k", t.k()), ("n", n)],
        g,
        BigInt::one(),
        t.params().coprimality_hypothesis(),
    ))
}

pub fn check_consecutive_coprime(seq: Seq, params: SequenceParams, n: u64) -> Result<GcdReport> {
    check_consecutive_coprime_in(&Terms::new(params, n + 1), seq, n)
}

/// `gcd(B(n), C(n)) = 1`.
pub fn check_b_c_coprime_in(t: &Terms, n: u64) -> Result<GcdReport> {
    let g = gcd(t.b(n)?, t.c(n)?);
    Ok(GcdReport::new(
        "b-c-coprime",
        &[("k", t.k()), ("n", n)],
        g,
        BigInt::one(),
        t.params().coprimality_hypothesis(),
    ))
}

pub fn check_b_c_coprime(params: SequenceParams, n: u64) -> Result<GcdReport> {
    check_b_c_coprime_in(&Terms::new(params, n), n)
}

/// `gcd(B(m), B(n)) = B(gcd(m, n))`.
pub fn check_strong_gcd_in(t: &Terms, m: u64, n: u64) -> Result<GcdReport> {
    if m == 0 || n == 0 {
        return Err(Error::domain("strong gcd needs m, n >= 1"));
    }
    let g = gcd(t.b(m)?, t.b(n)?);
    Ok(GcdReport::new(
        "strong-gcd",
        &[("k", t.k()), ("m", m), ("n", n)],
        g,
        t.b(m.gcd(&n))?.clone(),
        t.params().coprimality_hypothesis(),
    ))
}

pub fn check_strong_gcd(params: SequenceParams, m: u64, n: u64) -> Result<GcdReport> {
    check_strong_gcd_in(&Terms::new(params, m.max(n)), m, n)
}

/// Evaluates `gcd(a, bc)` and `gcd(a, b)·gcd(a, c)`. The two are not equal
/// in general; `(2, 2, 2)` gives `2` against `4`.
pub fn gcd_product_rule(a: i64, b: i64, c: i64) -> (BigInt, BigInt) {
    let (a, b, c) = (BigInt::from(a), BigInt::from(b), BigInt::from(c));
    (gcd(&a, &(&b * &c)), gcd(&a, &b) * gcd(&a, &c))
}
