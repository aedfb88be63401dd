//! Exact two-sided evaluation of the quadratic identities satisfied by `B`
//! and `C`.
//!
//! Each `*_in` evaluator reads terms from a [`Terms`] table (built by the
//! iterative engine) and returns an [`IdentityReport`] with both sides. The
//! unsuffixed functions build a table of the right size first.
//!
//! A few identities are also available in their misprinted form
//! (`*_printed`). Those exist only to demonstrate that the printed form
//! fails; the errata ledger is generated from them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::engines::{matrix_power, power_sum, r_matrix, term_b_negative};
use crate::{Error, Exact, Mat2, Result, Seq, SequenceParams, Terms};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_name: String,
    pub inputs: BTreeMap<String, u64>,
    pub lhs: Exact,
    pub rhs: Exact,
    pub holds: bool,
    pub hypothesis_met: bool,
}

impl IdentityReport {
    pub fn new(name: impl Into<String>, inputs: &[(&str, u64)], lhs: Exact, rhs: Exact) -> Self {
        IdentityReport {
            identity_name: name.into(),
            inputs: inputs.iter().map(|(n, v)| (n.to_string(), *v)).collect(),
            holds: lhs == rhs,
            lhs,
            rhs,
            hypothesis_met: true,
        }
    }

    /// Failed while its hypotheses were met.
    pub fn is_violation(&self) -> bool {
        self.hypothesis_met && !self.holds
    }
}

fn named(base: &str, seq: Seq) -> String {
    format!("{base}-{}", seq.suffix())
}

fn rat(x: BigInt) -> BigRational {
    BigRational::from_integer(x)
}

/// `X(n+r)·X(n-r) - X(n)²` against `-(k-1)^(n-r)·B(r)²` for `B` and
/// `8·(k-1)^(n-r+1)·B(r)²` for `C`.
pub fn catalan_in(t: &Terms, seq: Seq, n: u64, r: u64) -> Result<IdentityReport> {
    if n == 0 {
        return Err(Error::domain("catalan needs n >= 1"));
    }
    if r > n {
        return Err(Error::domain(format!(
            "catalan needs r <= n (got r={r}, n={n})"
        )));
    }
    let x = |i| t.get(seq, i);
    let lhs = x(n + r)? * x(n - r)? - x(n)? * x(n)?;
    let br = t.b(r)?;
    let rhs = match seq {
        Seq::B => -(t.norm_pow(n - r)? * br * br),
        Seq::C => t.norm_pow(n - r + 1)? * br * br * 8u32,
    };
    Ok(IdentityReport::new(
        named("catalan", seq),
        &[("k", t.k()), ("n", n), ("r", r)],
        lhs.into(),
        rhs.into(),
    ))
}

pub fn catalan(seq: Seq, params: SequenceParams, n: u64, r: u64) -> Result<IdentityReport> {
    catalan_in(&Terms::new(params, 2 * n + 1), seq, n, r)
}

/// The C-form with `B(n)` in place of `B(r)` on the right.
pub fn catalan_c_printed(t: &Terms, n: u64, r: u64) -> Result<IdentityReport> {
    let mut rep = catalan_in(t, Seq::C, n, r)?;
    let bn = t.b(n)?;
    let rhs = Exact::from(t.norm_pow(n - r + 1)? * bn * bn * 8u32);
    rep.identity_name = "catalan-c-printed".into();
    rep.holds = rep.lhs == rhs;
    rep.rhs = rhs;
    Ok(rep)
}

/// `B(n)² - B(n-1)·B(n+1) = (k-1)^(n-1)` and
/// `C(n)² - C(n-1)·C(n+1) = -8·(k-1)^n`.
pub fn cassini_in(t: &Terms, seq: Seq, n: u64) -> Result<IdentityReport> {
    if n == 0 {
        return Err(Error::domain("cassini needs n >= 1"));
    }
    let x = |i| t.get(seq, i);
    let lhs = x(n)? * x(n)? - x(n - 1)? * x(n + 1)?;
    let rhs = match seq {
        Seq::B => t.norm_pow(n - 1)?.clone(),
        Seq::C => t.norm_pow(n)? * -8,
    };
    Ok(IdentityReport::new(
        named("cassini", seq),
        &[("k", t.k()), ("n", n)],
        lhs.into(),
        rhs.into(),
    ))
}

pub fn cassini(seq: Seq, params: SequenceParams, n: u64) -> Result<IdentityReport> {
    cassini_in(&Terms::new(params, n + 1), seq, n)
}

/// `X(m)·X(n+1) - X(n)·X(m+1)` against `(k-1)^n·B(m-n)` for `B` and
/// `-8·(k-1)^(n+1)·B(m-n)` for `C`.
pub fn docagne_in(t: &Terms, seq: Seq, m: u64, n: u64) -> Result<IdentityReport> {
    if m < n {
        return Err(Error::domain(format!(
            "d'Ocagne needs m >= n (got m={m}, n={n})"
        )));
    }
    let x = |i| t.get(seq, i);
    let lhs = x(m)? * x(n + 1)? - x(n)? * x(m + 1)?;
    let rhs = match seq {
        Seq::B => t.norm_pow(n)? * t.b(m - n)?,
        Seq::C => t.norm_pow(n + 1)? * t.b(m - n)? * -8,
    };
    Ok(IdentityReport::new(
        named("docagne", seq),
        &[("k", t.k()), ("m", m), ("n", n)],
        lhs.into(),
        rhs.into(),
    ))
}

pub fn docagne(seq: Seq, params: SequenceParams, m: u64, n: u64) -> Result<IdentityReport> {
    docagne_in(&Terms::new(params, m.max(n) + 2), seq, m, n)
}

/// Index arguments of the two Vajda forms.
///
/// The classical statement also lists a free variable named `k` among its
/// indices; it plays no role, and `k` here is always the sequence parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VajdaArgs {
    /// `B(n+i)·B(n+j) - B(n)·B(n+i+j) = (k-1)^n·B(i)·B(j)`.
    Form1 { n: u64, i: u64, j: u64 },
    /// `B(n+l)·B(m-l) - B(n)·B(m) = (k-1)^n·B(m-n-l)·B(l)` for `m > n + l`.
    Form2 { n: u64, m: u64, l: u64 },
}

impl VajdaArgs {
    fn max_index(&self) -> u64 {
        match *self {
            VajdaArgs::Form1 { n, i, j } => n + i + j,
            VajdaArgs::Form2 { n, m, l } => m.max(n + l),
        }
    }
}

pub fn vajda_in(t: &Terms, args: VajdaArgs) -> Result<IdentityReport> {
    vajda_with_sign(t, args, false)
}

pub fn vajda(params: SequenceParams, args: VajdaArgs) -> Result<IdentityReport> {
    vajda_in(&Terms::new(params, args.max_index() + 1), args)
}

/// Form 2 with `(1-k)^n` in place of `(k-1)^n`.
pub fn vajda_form2_printed(t: &Terms, n: u64, m: u64, l: u64) -> Result<IdentityReport> {
    vajda_with_sign(t, VajdaArgs::Form2 { n, m, l }, true)
}

fn vajda_with_sign(t: &Terms, args: VajdaArgs, printed: bool) -> Result<IdentityReport> {
    let b = |i| t.b(i);
    match args {
        VajdaArgs::Form1 { n, i, j } => {
            let lhs = b(n + i)? * b(n + j)? - b(n)? * b(n + i + j)?;
            let rhs = t.norm_pow(n)? * b(i)? * b(j)?;
            Ok(IdentityReport::new(
                "vajda-1",
                &[("k", t.k()), ("n", n), ("i", i), ("j", j)],
                lhs.into(),
                rhs.into(),
            ))
        }
        VajdaArgs::Form2 { n, m, l } => {
            if m <= n + l {
                return Err(Error::domain(format!(
                    "vajda form 2 needs m > n + l (got n={n}, m={m}, l={l})"
                )));
            }
            let lhs = b(n + l)? * b(m - l)? - b(n)? * b(m)?;
            let mut rhs = t.norm_pow(n)? * b(m - n - l)? * b(l)?;
            if printed && n % 2 == 1 {
                rhs = -rhs;
            }
            let name = if printed {
                "vajda-2-printed"
            } else {
                "vajda-2"
            };
            Ok(IdentityReport::new(
                name,
                &[("k", t.k()), ("n", n), ("m", m), ("l", l)],
                lhs.into(),
                rhs.into(),
            ))
        }
    }
}

/// `Σ_{i=0}^{n} X(i)` against `(-(2k+1)·X(n) + (k-1)·X(n-1) + c) / (-2k)`,
/// with `c = 1` for `B` and `c = 4 - 3k` for `C`.
pub fn sum_closed_form_in(t: &Terms, seq: Seq, n: u64) -> Result<IdentityReport> {
    let constant = match seq {
        Seq::B => BigInt::one(),
        Seq::C => BigInt::from(4) - t.params().trace(),
    };
    sum_with_constant(t, seq, n, constant, named("sum", seq))
}

pub fn sum_closed_form(seq: Seq, params: SequenceParams, n: u64) -> Result<IdentityReport> {
    sum_closed_form_in(&Terms::new(params, n), seq, n)
}

/// The C-form with the constant `4(1-k)`.
pub fn sum_c_printed(t: &Terms, n: u64) -> Result<IdentityReport> {
    let constant = t.params().one_minus_k() * 4u32;
    sum_with_constant(t, Seq::C, n, constant, "sum-c-printed".into())
}

fn sum_with_constant(
    t: &Terms,
    seq: Seq,
    n: u64,
    constant: BigInt,
    name: String,
) -> Result<IdentityReport> {
    if n == 0 {
        return Err(Error::domain("sum closed form needs n >= 1"));
    }
    let mut total = BigInt::zero();
    for i in 0..=n {
        total += t.get(seq, i)?;
    }
    let k = BigInt::from(t.k());
    let numer =
        -(&k * 2u32 + 1u32) * t.get(seq, n)? + t.params().norm() * t.get(seq, n - 1)? + constant;
    let rhs = BigRational::new(numer, k * -2);
    Ok(IdentityReport::new(
        name,
        &[("k", t.k()), ("n", n)],
        Exact::Scalar(rat(total)),
        Exact::Scalar(rhs),
    ))
}

/// `B(m+n) = B(m)·B(n+1) + (1-k)·B(m-1)·B(n)`.
pub fn addition_formula_in(t: &Terms, m: u64, n: u64) -> Result<IdentityReport> {
    if m == 0 {
        return Err(Error::domain("addition formula needs m >= 1"));
    }
    let b = |i| t.b(i);
    let lhs = b(m + n)?.clone();
    let rhs = b(m)? * b(n + 1)? + t.params().one_minus_k() * b(m - 1)? * b(n)?;
    Ok(IdentityReport::new(
        "addition",
        &[("k", t.k()), ("m", m), ("n", n)],
        lhs.into(),
        rhs.into(),
    ))
}

pub fn addition_formula(params: SequenceParams, m: u64, n: u64) -> Result<IdentityReport> {
    addition_formula_in(&Terms::new(params, m + n + 1), m, n)
}

/// `(B(2n), B(2n-1))` against
/// `(B(n)·(B(n+1) + (1-k)·B(n-1)), B(n)² + (1-k)·B(n-1)²)`.
pub fn doubling_formulas_in(t: &Terms, n: u64) -> Result<IdentityReport> {
    if n == 0 {
        return Err(Error::domain("doubling formulas need n >= 1"));
    }
    let b = |i| t.b(i);
    let omk = t.params().one_minus_k();
    let even = b(n)? * (b(n + 1)? + &omk * b(n - 1)?);
    let odd = b(n)? * b(n)? + &omk * b(n - 1)? * b(n - 1)?;
    Ok(IdentityReport::new(
        "doubling",
        &[("k", t.k()), ("n", n)],
        Exact::ints([b(2 * n)?.clone(), b(2 * n - 1)?.clone()]),
        Exact::ints([even, odd]),
    ))
}

pub fn doubling_formulas(params: SequenceParams, n: u64) -> Result<IdentityReport> {
    doubling_formulas_in(&Terms::new(params, 2 * n + 1), n)
}

/// `α^n + β^n` from the ring against `B(n+1) - (k-1)·B(n-1)`.
pub fn power_sum_identity_in(t: &Terms, n: u64) -> Result<IdentityReport> {
    if n == 0 {
        return Err(Error::domain("power-sum identity needs n >= 1"));
    }
    let lhs = power_sum(t.params(), n);
    let rhs = t.b(n + 1)? - t.params().norm() * t.b(n - 1)?;
    Ok(IdentityReport::new(
        "power-sum",
        &[("k", t.k()), ("n", n)],
        lhs.into(),
        rhs.into(),
    ))
}

pub fn power_sum_identity(params: SequenceParams, n: u64) -> Result<IdentityReport> {
    power_sum_identity_in(&Terms::new(params, n + 1), n)
}

/// `C(n) = B(n+1) + 3(1-k)·B(n)`.
pub fn c_from_b_in(t: &Terms, n: u64) -> Result<IdentityReport> {
    let lhs = t.c(n)?.clone();
    let rhs = t.b(n + 1)? + t.params().one_minus_k() * t.b(n)? * 3u32;
    Ok(IdentityReport::new(
        "c-from-b",
        &[("k", t.k()), ("n", n)],
        lhs.into(),
        rhs.into(),
    ))
}

pub fn c_from_b(params: SequenceParams, n: u64) -> Result<IdentityReport> {
    c_from_b_in(&Terms::new(params, n + 1), n)
}

/// `A^n = [[B(n+1), (1-k)·B(n)], [B(n), (1-k)·B(n-1)]]`.
pub fn matrix_a_in(t: &Terms, n: u64) -> Result<IdentityReport> {
    let lhs = matrix_power(t.params(), n)?;
    let rhs = shifted_matrix(t, Seq::B, n)?;
    Ok(IdentityReport::new(
        "matrix-a",
        &[("k", t.k()), ("n", n)],
        lhs.into(),
        rhs.into(),
    ))
}

/// `R·A^n = [[C(n+1), (1-k)·C(n)], [C(n), (1-k)·C(n-1)]]`.
pub fn matrix_r_in(t: &Terms, n: u64) -> Result<IdentityReport> {
    let lhs = r_matrix(t.params(), n)?;
    let rhs = shifted_matrix(t, Seq::C, n)?;
    Ok(IdentityReport::new(
        "matrix-r",
        &[("k", t.k()), ("n", n)],
        lhs.into(),
        rhs.into(),
    ))
}

fn shifted_matrix(t: &Terms, seq: Seq, n: u64) -> Result<Mat2> {
    let omk = t.params().one_minus_k();
    let x = |i| t.get(seq, i);
    Ok(Mat2 {
        a11: x(n + 1)?.clone(),
        a12: &omk * x(n)?,
        a21: x(n)?.clone(),
        a22: &omk * x(n - 1)?,
    })
}

/// `det(A^n) = (k-1)^n`.
pub fn matrix_det_in(t: &Terms, n: u64) -> Result<IdentityReport> {
    let lhs = matrix_power(t.params(), n)?.det();
    Ok(IdentityReport::new(
        "matrix-det",
        &[("k", t.k()), ("n", n)],
        lhs.into(),
        t.norm_pow(n)?.clone().into(),
    ))
}

/// `A·R = R·A`.
pub fn ar_commute(params: SequenceParams) -> IdentityReport {
    let a = Mat2::companion(params);
    let r = Mat2::lucas_seed(params);
    IdentityReport::new(
        "ar-commute",
        &[("k", params.k())],
        Exact::Matrix(&a * &r),
        Exact::Matrix(&r * &a),
    )
}

/// `B(k, -n)` from the closed form against the recurrence run backwards
/// from `B(1), B(0)` in exact rationals.
pub fn negative_index_in(t: &Terms, n: u64) -> Result<IdentityReport> {
    let lhs = term_b_negative(t.params(), n)?;
    let trace = rat(t.params().trace());
    let omk = rat(t.params().one_minus_k());
    let (mut hi, mut lo) = (rat(t.b(1)?.clone()), rat(t.b(0)?.clone()));
    for _ in 0..n {
        let next = (&hi - &trace * &lo) / &omk;
        hi = std::mem::replace(&mut lo, next);
    }
    Ok(IdentityReport::new(
        "negative-index",
        &[("k", t.k()), ("n", n)],
        Exact::Scalar(lhs),
        Exact::Scalar(lo),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: u64) -> SequenceParams {
        SequenceParams::new(k).unwrap()
    }

    fn int(x: i64) -> Exact {
        Exact::int(x)
    }

    #[test]
    fn catalan_examples() {
        let r = catalan(Seq::B, p(3), 3, 1).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(-4), int(-4)));
        assert!(r.holds);
        for k in 1..5 {
            let r = catalan(Seq::B, p(k), 4, 0).unwrap();
            assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(0), int(0)));
        }
        let r = catalan(Seq::C, p(2), 2, 1).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(8), int(8)));
        assert!(r.holds);
    }

    #[test]
    fn catalan_domain() {
        assert!(catalan(Seq::B, p(2), 2, 3).is_err());
        assert!(catalan(Seq::B, p(2), 0, 0).is_err());
    }

    #[test]
    fn erratum_catalan_c_with_b_of_n_fails() {
        let t = Terms::new(p(2), 10);
        let printed = catalan_c_printed(&t, 2, 1).unwrap();
        assert!(!printed.holds);
        assert_eq!(printed.rhs, int(8 * 36));
        assert!(catalan_in(&t, Seq::C, 2, 1).unwrap().holds);
    }

    #[test]
    fn cassini_examples() {
        let r = cassini(Seq::B, p(3), 3).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(4), int(4)));
        let r = cassini(Seq::B, p(1), 5).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(0), int(0)));
        let r = cassini(Seq::C, p(2), 1).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(-8), int(-8)));
        assert!(cassini(Seq::C, p(2), 0).is_err());
    }

    #[test]
    fn cassini_is_negated_catalan_at_r1() {
        for k in 1..=8 {
            let t = Terms::new(p(k), 60);
            for n in 1..=25 {
                let cas = cassini_in(&t, Seq::B, n).unwrap();
                let cat = catalan_in(&t, Seq::B, n, 1).unwrap();
                let (Exact::Scalar(a), Exact::Scalar(b)) = (cas.lhs, cat.lhs) else {
                    panic!("scalar sides expected")
                };
                assert_eq!(a, -b);
            }
        }
    }

    #[test]
    fn docagne_examples() {
        let r = docagne(Seq::B, p(2), 3, 2).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(1), int(1)));
        for k in 1..5 {
            let r = docagne(Seq::B, p(k), 4, 4).unwrap();
            assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(0), int(0)));
        }
        let r = docagne(Seq::C, p(3), 2, 1).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(-32), int(-32)));
        assert!(docagne(Seq::B, p(2), 1, 2).is_err());
    }

    #[test]
    fn vajda_examples() {
        let r = vajda(p(3), VajdaArgs::Form1 { n: 1, i: 1, j: 2 }).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(18), int(18)));
        let r = vajda(p(3), VajdaArgs::Form1 { n: 2, i: 0, j: 3 }).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(0), int(0)));
        let r = vajda(p(3), VajdaArgs::Form2 { n: 1, m: 4, l: 1 }).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(18), int(18)));
        assert!(vajda(p(3), VajdaArgs::Form2 { n: 1, m: 2, l: 1 }).is_err());
    }

    #[test]
    fn erratum_vajda_form2_sign_fails_for_odd_n() {
        let t = Terms::new(p(3), 10);
        let printed = vajda_form2_printed(&t, 1, 4, 1).unwrap();
        assert_eq!(printed.lhs, int(18));
        assert_eq!(printed.rhs, int(-18));
        assert!(!printed.holds);
        // Even n hides the sign slip.
        assert!(vajda_form2_printed(&t, 2, 5, 1).unwrap().holds);
    }

    #[test]
    fn sum_examples() {
        let r = sum_closed_form(Seq::B, p(2), 3).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(42), int(42)));
        let r = sum_closed_form(Seq::B, p(1), 4).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(40), int(40)));
        let r = sum_closed_form(Seq::C, p(2), 3).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(120), int(120)));
        assert!(sum_closed_form(Seq::C, p(2), 0).is_err());
    }

    #[test]
    fn erratum_sum_c_constant_fails() {
        let t = Terms::new(p(2), 5);
        let printed = sum_c_printed(&t, 3).unwrap();
        assert!(!printed.holds);
        assert_eq!(
            printed.rhs,
            Exact::Scalar(BigRational::new(BigInt::from(241), BigInt::from(2)))
        );
        assert!(!printed.rhs.is_integral());
    }

    #[test]
    fn sum_rhs_is_integral() {
        for k in 1..=12 {
            let t = Terms::new(p(k), 60);
            for n in 1..=60 {
                for seq in [Seq::B, Seq::C] {
                    let r = sum_closed_form_in(&t, seq, n).unwrap();
                    assert!(r.rhs.is_integral(), "k={k} n={n} {seq}");
                    assert!(r.holds);
                }
            }
        }
    }

    #[test]
    fn addition_examples() {
        let r = addition_formula(p(2), 3, 2).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(1189), int(1189)));
        let r = addition_formula(p(5), 7, 0).unwrap();
        assert!(r.holds);
        let r = addition_formula(p(3), 2, 2).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(693), int(693)));
        assert!(addition_formula(p(3), 0, 2).is_err());
    }

    #[test]
    fn doubling_examples() {
        let r = doubling_formulas(p(2), 2).unwrap();
        assert_eq!(r.lhs, Exact::ints([204, 35]));
        assert!(r.holds);
        let r = doubling_formulas(p(1), 3).unwrap();
        assert_eq!(r.lhs, Exact::ints([243, 81]));
        assert!(r.holds);
        for k in 1..6 {
            let r = doubling_formulas(p(k), 1).unwrap();
            assert_eq!(r.rhs, Exact::ints([3 * k as i64, 1]));
            assert!(r.holds);
        }
    }

    #[test]
    fn power_sum_examples() {
        let r = power_sum_identity(p(2), 2).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(34), int(34)));
        for k in 1..6 {
            let r = power_sum_identity(p(k), 1).unwrap();
            assert_eq!(r.lhs, int(3 * k as i64));
            assert!(r.holds);
        }
        let r = power_sum_identity(p(3), 3).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(675), int(675)));
    }

    #[test]
    fn c_from_b_examples() {
        for k in 1..5 {
            let r = c_from_b(p(k), 0).unwrap();
            assert_eq!(r.lhs, int(1));
            assert!(r.holds);
        }
        let r = c_from_b(p(2), 3).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(99), int(99)));
        let r = c_from_b(p(3), 2).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (int(25), int(25)));
    }

    #[test]
    fn matrix_forms_hold_from_n_equal_one() {
        for k in 1..=6 {
            let t = Terms::new(p(k), 30);
            for n in 1..=25 {
                assert!(matrix_a_in(&t, n).unwrap().holds);
                assert!(matrix_r_in(&t, n).unwrap().holds);
                assert!(matrix_det_in(&t, n).unwrap().holds);
            }
            assert!(ar_commute(p(k)).holds);
        }
    }

    #[test]
    fn negative_index_report() {
        let t = Terms::new(p(3), 2);
        let r = negative_index_in(&t, 2).unwrap();
        assert_eq!(
            r.lhs,
            Exact::Scalar(BigRational::new(BigInt::from(-9), BigInt::from(4)))
        );
        assert!(r.holds);
        assert!(negative_index_in(&Terms::new(p(1), 2), 2).is_err());
    }

    #[test]
    fn out_of_table_is_an_error() {
        let t = Terms::new(p(2), 5);
        assert!(matches!(
            catalan_in(&t, Seq::B, 4, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
    }
}
