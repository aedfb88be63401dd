use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::engines::iterate_prefix;
use crate::{Error, Result, SequenceParams};

/// Which of the two sequences sharing the recurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Seq {
    /// Generalized Balancing numbers, seeds `0, 1`.
    B,
    /// Generalized Balancing-Lucas numbers, seeds `1, 3`.
    C,
}

impl Seq {
    pub fn seeds(self) -> (BigInt, BigInt) {
        match self {
            Seq::B => (BigInt::zero(), BigInt::one()),
            Seq::C => (BigInt::one(), BigInt::from(3)),
        }
    }

    pub fn suffix(self) -> &'static str {
        match self {
            Seq::B => "b",
            Seq::C => "c",
        }
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Seq::B => "B",
            Seq::C => "C",
        })
    }
}

impl FromStr for Seq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(Seq::B),
            "C" | "c" => Ok(Seq::C),
            other => Err(Error::domain(format!(
                "unknown sequence '{other}' (expected B or C)"
            ))),
        }
    }
}

/// Iteratively precomputed `B(0..=max)`, `C(0..=max)` and `(k-1)^(0..=max)`.
///
/// Identity and gcd evaluators read from here so that they never share a
/// code path with the fast engines they help to check.
#[derive(Debug, Clone)]
pub struct Terms {
    params: SequenceParams,
    b: Vec<BigInt>,
    c: Vec<BigInt>,
    norm_pows: Vec<BigInt>,
}

impl Terms {
    pub fn new(params: SequenceParams, max: u64) -> Self {
        let norm = params.norm();
        let norm_pows = (0..=max).map(|e| Pow::pow(&norm, e)).collect();
        Terms {
            params,
            b: iterate_prefix(params, Seq::B, max),
            c: iterate_prefix(params, Seq::C, max),
            norm_pows,
        }
    }

    pub fn params(&self) -> SequenceParams {
        self.params
    }

    pub fn k(&self) -> u64 {
        self.params.k()
    }

    pub fn max_index(&self) -> u64 {
        self.b.len() as u64 - 1
    }

    fn at<'a>(&self, v: &'a [BigInt], i: u64) -> Result<&'a BigInt> {
        v.get(i as usize).ok_or(Error::IndexOutOfRange {
            index: i,
            max: self.max_index(),
        })
    }

    pub fn b(&self, i: u64) -> Result<&BigInt> {
        self.at(&self.b, i)
    }

    pub fn c(&self, i: u64) -> Result<&BigInt> {
        self.at(&self.c, i)
    }

    pub fn get(&self, seq: Seq, i: u64) -> Result<&BigInt> {
        match seq {
            Seq::B => self.b(i),
            Seq::C => self.c(i),
        }
    }

    /// `(k-1)^e`, with `0^0 = 1`.
    pub fn norm_pow(&self, e: u64) -> Result<&BigInt> {
        self.at(&self.norm_pows, e)
    }

    pub fn b_slice(&self) -> &[BigInt] {
        &self.b
    }

    pub fn c_slice(&self) -> &[BigInt] {
        &self.c
    }
}
