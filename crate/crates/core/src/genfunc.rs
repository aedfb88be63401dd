//! Power-series expansion of the generating functions
//! `B(x) = x / (1 - 3kx + (k-1)x²)` and `C(x) = (1 + 3(1-k)x) / (1 - 3kx + (k-1)x²)`.
//!
//! Coefficients come from plain long division, so this module serves as a
//! series-level oracle that shares no code with `engines`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::identities::IdentityReport;
use crate::{Error, Exact, Result, Seq, SequenceParams, Terms};

/// Which numerator to use for the C-series. The printed variant
/// `1 + 3(1+k)x` is wrong already at `x¹` and is kept as a regression probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Variant {
    #[default]
    Corrected,
    Printed,
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "corrected" => Ok(Variant::Corrected),
            "printed" => Ok(Variant::Printed),
            other => Err(Error::domain(format!("unknown variant '{other}'"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Corrected => "corrected",
            Variant::Printed => "printed",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    pub numerator: Vec<BigInt>,
    pub denominator: Vec<BigInt>,
    pub expansion: Vec<BigInt>,
}

impl RationalSeries {
    pub fn new(numerator: Vec<BigInt>, denominator: Vec<BigInt>, terms: usize) -> Result<Self> {
        let expansion = expand(&numerator, &denominator, terms)?;
        Ok(RationalSeries {
            numerator,
            denominator,
            expansion,
        })
    }

    /// `expansion ⊛ denominator`, truncated to the expansion's length.
    /// Equals the (zero-padded) numerator when the expansion is right.
    pub fn convolved(&self) -> Vec<BigInt> {
        convolve(&self.expansion, &self.denominator)
    }
}

/// First `n + 1` coefficients of `numerator / denominator`.
///
/// The denominator's constant term must be `±1` so that every coefficient is
/// an integer.
pub fn expand(numerator: &[BigInt], denominator: &[BigInt], n: usize) -> Result<Vec<BigInt>> {
    let d0 = denominator.first().ok_or(Error::NonUnitConstantTerm)?;
    if !d0.abs().is_one() {
        return Err(Error::NonUnitConstantTerm);
    }
    let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut acc = numerator.get(i).cloned().unwrap_or_default();
        for (j, d) in denominator.iter().enumerate().skip(1).take(i) {
            acc -= d * &out[i - j];
        }
        // d0 is ±1, so dividing is multiplying
        out.push(acc * d0);
    }
    Ok(out)
}

pub fn convolve(series: &[BigInt], poly: &[BigInt]) -> Vec<BigInt> {
    (0..series.len())
        .map(|i| {
            poly.iter()
                .enumerate()
                .take(i + 1)
                .map(|(j, p)| p * &series[i - j])
                .sum()
        })
        .collect()
}

/// `1 - 3kx + (k-1)x²`.
pub fn denominator(params: SequenceParams) -> Vec<BigInt> {
    vec![BigInt::one(), -params.trace(), params.norm()]
}

pub fn numerator(params: SequenceParams, seq: Seq, variant: Variant) -> Vec<BigInt> {
    match (seq, variant) {
        (Seq::B, _) => vec![BigInt::zero(), BigInt::one()],
        (Seq::C, Variant::Corrected) => vec![BigInt::one(), params.one_minus_k() * 3u32],
        (Seq::C, Variant::Printed) => {
            vec![BigInt::one(), (BigInt::from(params.k()) + 1u32) * 3u32]
        }
    }
}

/// Coefficients `c_0..=c_n` of the generating function of `seq`.
pub fn series(params: SequenceParams, seq: Seq, variant: Variant, n: usize) -> Vec<BigInt> {
    expand(&numerator(params, seq, variant), &denominator(params), n)
        .expect("denominator has constant term 1")
}

/// First index `<= n` where the series disagrees with the recurrence terms.
pub fn first_mismatch(t: &Terms, seq: Seq, variant: Variant, n: usize) -> Result<Option<usize>> {
    let coeffs = series(t.params(), seq, variant, n);
    for (i, c) in coeffs.iter().enumerate() {
        if c != t.get(seq, i as u64)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Expands the C-series with the printed `1 + 3(1+k)x` numerator against the
/// recurrence terms `C(0..=n)`. The report fails; the mismatch sits at `n = 1`
/// for every `k >= 1` because `3(1+k) != 3`.
pub fn erratum_probe_c_numerator(params: SequenceParams, n: usize) -> IdentityReport {
    let t = Terms::new(params, n as u64);
    let printed = series(params, Seq::C, Variant::Printed, n);
    let mut rep = IdentityReport::new(
        "genfunc-c-printed",
        &[("k", params.k()), ("N", n as u64)],
        Exact::ints(printed),
        Exact::ints(t.c_slice().iter().cloned()),
    );
    if let Ok(Some(i)) = first_mismatch(&t, Seq::C, Variant::Printed, n) {
        rep.inputs.insert("first_mismatch".into(), i as u64);
    }
    rep
}

/// Series coefficient `n` of `seq` against the iterative term.
pub fn coefficient_report(
    t: &Terms,
    seq: Seq,
    coeffs: &[BigInt],
    n: u64,
) -> Result<IdentityReport> {
    let c = coeffs.get(n as usize).ok_or(Error::IndexOutOfRange {
        index: n,
        max: coeffs.len() as u64 - 1,
    })?;
    Ok(IdentityReport::new(
        format!("genfunc-{}", seq.suffix()),
        &[("k", t.k()), ("n", n)],
        c.clone().into(),
        t.get(seq, n)?.clone().into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: u64) -> SequenceParams {
        SequenceParams::new(k).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn b_series_k2() {
        assert_eq!(
            series(p(2), Seq::B, Variant::Corrected, 4),
            ints(&[0, 1, 6, 35, 204])
        );
    }

    #[test]
    fn c_series_k3() {
        assert_eq!(
            series(p(3), Seq::C, Variant::Corrected, 3),
            ints(&[1, 3, 25, 219])
        );
    }

    #[test]
    fn self_quotient_is_one() {
        let d = ints(&[1, -7, 3, 11]);
        let mut want = ints(&[1]);
        want.extend(ints(&[0; 9]));
        assert_eq!(expand(&d, &d, 9).unwrap(), want);
    }

    #[test]
    fn negative_unit_constant_term() {
        // -1/(-1 + x) = 1/(1 - x) = 1 + x + x² + ...
        let got = expand(&ints(&[-1]), &ints(&[-1, 1]), 4).unwrap();
        assert_eq!(got, ints(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn rejects_non_unit_constant_term() {
        assert_eq!(
            expand(&ints(&[1]), &ints(&[0, 1]), 3),
            Err(Error::NonUnitConstantTerm)
        );
        assert_eq!(
            expand(&ints(&[1]), &ints(&[2, 1]), 3),
            Err(Error::NonUnitConstantTerm)
        );
        assert_eq!(expand(&ints(&[1]), &[], 3), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn printed_numerator_fails_at_one() {
        for k in 1..=10 {
            let rep = erratum_probe_c_numerator(p(k), 10);
            assert!(!rep.holds);
            assert_eq!(rep.inputs["first_mismatch"], 1);
        }
        let Exact::Vector(v) = erratum_probe_c_numerator(p(2), 3).lhs else {
            panic!()
        };
        assert_eq!(v[1], BigInt::from(15).into());
        let t = Terms::new(p(3), 3);
        assert_eq!(
            series(p(3), Seq::C, Variant::Printed, 1)[1],
            BigInt::from(21)
        );
        assert_eq!(
            first_mismatch(&t, Seq::C, Variant::Printed, 3).unwrap(),
            Some(1)
        );
    }

    #[test]
    fn corrected_numerator_has_no_mismatch() {
        let t = Terms::new(p(2), 50);
        assert_eq!(
            first_mismatch(&t, Seq::C, Variant::Corrected, 50).unwrap(),
            None
        );
    }

    #[test]
    fn convolution_reproduces_numerator() {
        for k in 1..=10 {
            for seq in [Seq::B, Seq::C] {
                let s = RationalSeries::new(
                    numerator(p(k), seq, Variant::Corrected),
                    denominator(p(k)),
                    60,
                )
                .unwrap();
                let conv = s.convolved();
                for (i, c) in conv.iter().enumerate() {
                    let want = s.numerator.get(i).cloned().unwrap_or_default();
                    assert_eq!(*c, want, "k={k} {seq} i={i}");
                }
            }
        }
    }

    #[test]
    fn variant_parsing() {
        assert_eq!("printed".parse::<Variant>().unwrap(), Variant::Printed);
        assert!("other".parse::<Variant>().is_err());
    }
}
