//! Exact arithmetic for the generalized Balancing numbers `B(k, n)` and the
//! generalized Balancing-Lucas numbers `C(k, n)`.
//!
//! Both sequences satisfy `X(n) = 3k·X(n-1) + (1-k)·X(n-2)` with seeds
//! `B(0) = 0, B(1) = 1` and `C(0) = 1, C(1) = 3`. The crate computes terms
//! with four independent engines, checks the classical quadratic identities
//! (Catalan, Cassini, d'Ocagne, Vajda, ...) and the gcd theorems exactly, and
//! ships a command-line front end (`balancing`) for tables, series and sweeps.

pub mod cli;
pub mod divisibility;
pub mod engines;
pub mod errata;
mod error;
pub mod exact;
pub mod genfunc;
pub mod identities;
pub mod matrix;
pub mod ring;
pub mod terms;
pub mod verify;

pub use engines::{power_sum, term_b, term_b_negative, term_c, Engine, Engines};
pub use error::{Error, Result};
pub use exact::Exact;
pub use matrix::Mat2;
pub use ring::{RingElement, SequenceParams};
pub use terms::{Seq, Terms};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
