//! Four independent ways to compute `B(k, n)` and `C(k, n)`.
//!
//! * `Iterative` walks the recurrence from the seeds. It is linear in `n`
//!   (quadratic in bit operations), so it refuses indices above a cap.
//! * `Matrix` reads the terms off `A^n` and `R·A^n`, with
//!   `A = [[3k, 1-k], [1, 0]]` and `R = [[3, 1-k], [1, 3(1-k)]]`.
//! * `Binet` takes the `α`-coordinate of `α^n` in `Z[α]`.
//! * `FastDoubling` carries `(B(n), B(n+1))` through the division-free
//!   doubling step
//!   `B(2n) = 2·B(n)·B(n+1) - 3k·B(n)²`, `B(2n+1) = B(n+1)² + (1-k)·B(n)²`.
//!
//! The non-matrix engines derive `C` from `C(n) = B(n+1) + 3(1-k)·B(n)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::ring::alpha_power_components;
use crate::terms::Seq;
use crate::{Error, Mat2, Result, SequenceParams};

pub const DEFAULT_ITERATIVE_CAP: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Iterative,
    Matrix,
    Binet,
    #[serde(rename = "doubling")]
    FastDoubling,
}

impl Engine {
    pub const ALL: [Engine; 4] = [
        Engine::Iterative,
        Engine::Matrix,
        Engine::Binet,
        Engine::FastDoubling,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Iterative => "iterative",
            Engine::Matrix => "matrix",
            Engine::Binet => "binet",
            Engine::FastDoubling => "doubling",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "iterative" | "iter" => Ok(Engine::Iterative),
            "matrix" => Ok(Engine::Matrix),
            "binet" | "ring" => Ok(Engine::Binet),
            "doubling" | "fast-doubling" | "fastdoubling" => Ok(Engine::FastDoubling),
            other => Err(Error::domain(format!("unknown engine '{other}'"))),
        }
    }
}

/// Engine configuration. Only the iterative engine has a tunable limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Engines {
    pub iterative_cap: u64,
}

impl Default for Engines {
    fn default() -> Self {
        Engines {
            iterative_cap: DEFAULT_ITERATIVE_CAP,
        }
    }
}

impl Engines {
    pub fn with_iterative_cap(iterative_cap: u64) -> Self {
        Engines { iterative_cap }
    }

    pub fn term(&self, params: SequenceParams, seq: Seq, n: u64, engine: Engine) -> Result<BigInt> {
        match seq {
            Seq::B => self.term_b(params, n, engine),
            Seq::C => self.term_c(params, n, engine),
        }
    }

    pub fn term_b(&self, params: SequenceParams, n: u64, engine: Engine) -> Result<BigInt> {
        match engine {
            Engine::Iterative => {
                self.check_cap(n)?;
                Ok(iterate(params, Seq::B, n))
            }
            Engine::Matrix => Ok(Mat2::companion(params).pow(n).a21),
            Engine::Binet => Ok(alpha_power_components(params, n).1),
            Engine::FastDoubling => Ok(doubling_pair(params, n).0),
        }
    }

    pub fn term_c(&self, params: SequenceParams, n: u64, engine: Engine) -> Result<BigInt> {
        match engine {
            Engine::Iterative => {
                self.check_cap(n)?;
                Ok(iterate(params, Seq::C, n))
            }
            Engine::Matrix => {
                let a_n = Mat2::companion(params).pow(n);
                Ok((&Mat2::lucas_seed(params) * &a_n).a21)
            }
            Engine::Binet => {
                // α^n = u + vα gives B(n) = v and B(n+1) = u + 3k·v.
                let (u, v) = alpha_power_components(params, n);
                let b_next = u + params.trace() * &v;
                Ok(c_from_b_pair(params, &v, &b_next))
            }
            Engine::FastDoubling => {
                let (b, b_next) = doubling_pair(params, n);
                Ok(c_from_b_pair(params, &b, &b_next))
            }
        }
    }

    fn check_cap(&self, n: u64) -> Result<()> {
        if n > self.iterative_cap {
            return Err(Error::IterativeCapExceeded {
                n,
                cap: self.iterative_cap,
            });
        }
        Ok(())
    }
}

/// `B(k, n)` with the default engine configuration.
pub fn term_b(params: SequenceParams, n: u64, engine: Engine) -> Result<BigInt> {
    Engines::default().term_b(params, n, engine)
}

/// `C(k, n)` with the default engine configuration.
pub fn term_c(params: SequenceParams, n: u64, engine: Engine) -> Result<BigInt> {
    Engines::default().term_c(params, n, engine)
}

fn c_from_b_pair(params: SequenceParams, b: &BigInt, b_next: &BigInt) -> BigInt {
    b_next + params.one_minus_k() * 3u32 * b
}

/// Walks the recurrence `n` steps from the seeds of `seq`.
pub fn iterate(params: SequenceParams, seq: Seq, n: u64) -> BigInt {
    let trace = params.trace();
    let omk = params.one_minus_k();
    let (mut prev, mut cur) = seq.seeds();
    for _ in 0..n {
        let next = &trace * &cur + &omk * &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    prev
}

/// All terms `X(0), ..., X(max)` of `seq` by iteration.
pub fn iterate_prefix(params: SequenceParams, seq: Seq, max: u64) -> Vec<BigInt> {
    let trace = params.trace();
    let omk = params.one_minus_k();
    let (x0, x1) = seq.seeds();
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(x0);
    if max >= 1 {
        out.push(x1);
    }
    for i in 2..=max as usize {
        let next = &trace * &out[i - 1] + &omk * &out[i - 2];
        out.push(next);
    }
    out
}

/// `(B(n), B(n+1))` by fast doubling over the bits of `n`, high to low.
pub fn doubling_pair(params: SequenceParams, n: u64) -> (BigInt, BigInt) {
    let trace = params.trace();
    let omk = params.one_minus_k();
    let mut b = BigInt::zero();
    let mut b_next = BigInt::one();
    for bit in (0..64 - n.leading_zeros()).rev() {
        let (even, odd) = doubling_step(&trace, &omk, &b, &b_next);
        if (n >> bit) & 1 == 1 {
            let after = &trace * &odd + &omk * &even;
            b = odd;
            b_next = after;
        } else {
            b = even;
            b_next = odd;
        }
    }
    (b, b_next)
}

/// From `(B(n), B(n+1))` to `(B(2n), B(2n+1))`.
fn doubling_step(trace: &BigInt, omk: &BigInt, b: &BigInt, b_next: &BigInt) -> (BigInt, BigInt) {
    let b_sq = b * b;
    let even = b * b_next * 2u32 - trace * &b_sq;
    let odd = b_next * b_next + omk * &b_sq;
    (even, odd)
}

/// `B(k, -n) = -B(k, n) / (k-1)^n`, exact.
///
/// This is the unique continuation of the recurrence to negative indices:
/// it satisfies `B(m-2) = (B(m) - 3k·B(m-1)) / (1-k)` for every `m`.
pub fn term_b_negative(params: SequenceParams, n: u64) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::domain("negative-index terms need n >= 1"));
    }
    if params.is_degenerate() {
        return Err(Error::DegenerateParameter);
    }
    let b = doubling_pair(params, n).0;
    let denom: BigInt = Pow::pow(params.norm(), n);
    Ok(BigRational::new(-b, denom))
}

/// `α^n + β^n`, computed in `Z[α]` as `2u + 3k·v`.
pub fn power_sum(params: SequenceParams, n: u64) -> BigInt {
    let (u, v) = alpha_power_components(params, n);
    u * 2u32 + params.trace() * v
}

/// `A^n` for `n >= 1`.
pub fn matrix_power(params: SequenceParams, n: u64) -> Result<Mat2> {
    if n == 0 {
        return Err(Error::domain("matrix_power needs n >= 1"));
    }
    Ok(Mat2::companion(params).pow(n))
}

/// `R_n = R·A^n` for `n >= 1`.
pub fn r_matrix(params: SequenceParams, n: u64) -> Result<Mat2> {
    let a_n = matrix_power(params, n)?;
    Ok(&Mat2::lucas_seed(params) * &a_n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: u64) -> SequenceParams {
        SequenceParams::new(k).unwrap()
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn all_b(k: u64, n: u64) -> BigInt {
        let vals: Vec<BigInt> = Engine::ALL
            .iter()
            .map(|&e| term_b(p(k), n, e).unwrap())
            .collect();
        assert!(
            vals.windows(2).all(|w| w[0] == w[1]),
            "k={k} n={n}: {vals:?}"
        );
        vals.into_iter().next().unwrap()
    }

    fn all_c(k: u64, n: u64) -> BigInt {
        let vals: Vec<BigInt> = Engine::ALL
            .iter()
            .map(|&e| term_c(p(k), n, e).unwrap())
            .collect();
        assert!(
            vals.windows(2).all(|w| w[0] == w[1]),
            "k={k} n={n}: {vals:?}"
        );
        vals.into_iter().next().unwrap()
    }

    #[test]
    fn b_examples() {
        assert_eq!(all_b(2, 3), big(35));
        assert_eq!(all_b(1, 4), big(27));
        assert_eq!(all_b(4, 5), big(19449));
        assert_eq!(all_b(2, 4), big(204));
    }

    #[test]
    fn c_examples() {
        assert_eq!(all_c(3, 3), big(219));
        assert_eq!(all_c(2, 4), big(577));
        assert_eq!(all_c(1, 5), big(243));
    }

    #[test]
    fn small_indices() {
        for k in 1..6 {
            assert_eq!(all_b(k, 0), big(0));
            assert_eq!(all_b(k, 1), big(1));
            assert_eq!(all_c(k, 0), big(1));
            assert_eq!(all_c(k, 1), big(3));
        }
    }

    #[test]
    fn iterative_cap() {
        let e = Engines::with_iterative_cap(10);
        assert!(e.term_b(p(2), 10, Engine::Iterative).is_ok());
        assert_eq!(
            e.term_b(p(2), 11, Engine::Iterative),
            Err(Error::IterativeCapExceeded { n: 11, cap: 10 })
        );
        assert!(e.term_c(p(2), 11, Engine::Iterative).is_err());
        assert!(e.term_b(p(2), 11, Engine::Matrix).is_ok());
    }

    #[test]
    fn engine_names_roundtrip() {
        for e in Engine::ALL {
            assert_eq!(e.name().parse::<Engine>().unwrap(), e);
        }
        assert!("simd".parse::<Engine>().is_err());
    }

    // Oracle: run the recurrence backwards from (B(1), B(0)) in exact
    // rationals, B(m-2) = (B(m) - 3k·B(m-1)) / (1-k).
    fn backward(k: u64, n: u64) -> BigRational {
        let trace = BigRational::from(big(3 * k as i64));
        let omk = BigRational::from(big(1 - k as i64));
        let (mut hi, mut lo) = (BigRational::one(), BigRational::zero());
        for _ in 0..n {
            let next = (&hi - &trace * &lo) / &omk;
            hi = std::mem::replace(&mut lo, next);
        }
        lo
    }

    #[test]
    fn negative_examples() {
        let r = |a: i64, b: i64| BigRational::new(big(a), big(b));
        assert_eq!(term_b_negative(p(2), 2).unwrap(), r(-6, 1));
        assert_eq!(term_b_negative(p(3), 1).unwrap(), r(-1, 2));
        assert_eq!(term_b_negative(p(3), 2).unwrap(), r(-9, 4));
        assert_eq!(backward(3, 1), r(-1, 2));
        assert_eq!(backward(3, 2), r(-9, 4));
    }

    #[test]
    fn negative_matches_backward_recurrence() {
        for k in 2..=6 {
            for n in 1..=20 {
                assert_eq!(
                    term_b_negative(p(k), n).unwrap(),
                    backward(k, n),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn negative_index_errors() {
        assert_eq!(term_b_negative(p(1), 3), Err(Error::DegenerateParameter));
        assert!(matches!(term_b_negative(p(3), 0), Err(Error::Domain(_))));
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sum(p(2), 0), big(2));
        assert_eq!(power_sum(p(2), 2), big(34));
        assert_eq!(power_sum(p(3), 2), big(77));
        // (3k)³ - 3(k-1)(3k) at k = 3
        assert_eq!(power_sum(p(3), 3), big(729 - 54));
    }

    #[test]
    fn matrix_examples() {
        assert_eq!(matrix_power(p(2), 1).unwrap(), Mat2::new(6, -1, 1, 0));
        assert_eq!(matrix_power(p(2), 2).unwrap(), Mat2::new(35, -6, 6, -1));
        assert_eq!(matrix_power(p(3), 2).unwrap(), Mat2::new(79, -18, 9, -2));
        assert_eq!(r_matrix(p(2), 2).unwrap(), Mat2::new(99, -17, 17, -3));
        assert_eq!(r_matrix(p(3), 2).unwrap(), Mat2::new(219, -50, 25, -6));
        assert!(matrix_power(p(2), 0).is_err());
        assert!(r_matrix(p(2), 0).is_err());
    }

    #[test]
    fn matrix_determinant_is_power_of_norm() {
        for k in 1..=10u64 {
            for n in 1..=100u64 {
                let det = matrix_power(p(k), n).unwrap().det();
                assert_eq!(det, Pow::pow(big(k as i64 - 1), n), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn doubling_formulas_against_iteration() {
        for k in 1..=8 {
            let terms = iterate_prefix(p(k), Seq::B, 1002);
            let trace = p(k).trace();
            let omk = p(k).one_minus_k();
            for n in 1..=500usize {
                let (even, odd) = doubling_step(&trace, &omk, &terms[n], &terms[n + 1]);
                assert_eq!(even, terms[2 * n]);
                assert_eq!(odd, terms[2 * n + 1]);
            }
        }
    }

    #[test]
    fn seed_identity_for_c() {
        // C(n) = 3·B(n) + (1-k)·B(n-1)
        for k in 1..=10 {
            let b = iterate_prefix(p(k), Seq::B, 200);
            let c = iterate_prefix(p(k), Seq::C, 200);
            for n in 1..=200 {
                assert_eq!(c[n], &b[n] * 3 + p(k).one_minus_k() * &b[n - 1]);
            }
        }
    }

    #[test]
    fn classical_balancing_square_property() {
        for n in 0..=30 {
            let b = all_b(2, n);
            let x: BigInt = &b * &b * 8 + 1;
            let root = x.sqrt();
            assert_eq!(&root * &root, x, "n={n}");
        }
    }

    #[test]
    fn digit_count_is_monotone() {
        for k in 1..=8 {
            let digits: Vec<usize> = iterate_prefix(p(k), Seq::B, 400)
                .iter()
                .skip(1)
                .map(|b| b.to_string().len())
                .collect();
            assert!(digits.windows(2).all(|w| w[0] <= w[1]), "k={k}");
        }
    }

    #[test]
    fn iterate_prefix_agrees_with_iterate() {
        let v = iterate_prefix(p(3), Seq::C, 30);
        for (n, x) in v.iter().enumerate() {
            assert_eq!(*x, iterate(p(3), Seq::C, n as u64));
        }
        assert_eq!(iterate_prefix(p(3), Seq::B, 0), vec![big(0)]);
    }
}
