//! Exact values carried by reports, and their decimal-string encoding.
//!
//! Every big number crosses the JSON boundary as a decimal string so that
//! consumers never need integer-width assumptions. Rationals use `p/q`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Mat2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Exact {
    Scalar(BigRational),
    Vector(Vec<BigRational>),
    Matrix(Mat2),
}

impl Exact {
    pub fn int(x: impl Into<BigInt>) -> Self {
        Exact::Scalar(BigRational::from_integer(x.into()))
    }

    pub fn ints<I>(xs: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        Exact::Vector(
            xs.into_iter()
                .map(|x| BigRational::from_integer(x.into()))
                .collect(),
        )
    }

    /// True when every component is an integer.
    pub fn is_integral(&self) -> bool {
        match self {
            Exact::Scalar(r) => r.is_integer(),
            Exact::Vector(v) => v.iter().all(|r| r.is_integer()),
            Exact::Matrix(_) => true,
        }
    }
}

impl From<BigInt> for Exact {
    fn from(x: BigInt) -> Self {
        Exact::int(x)
    }
}

impl From<BigRational> for Exact {
    fn from(x: BigRational) -> Self {
        Exact::Scalar(x)
    }
}

impl From<Mat2> for Exact {
    fn from(m: Mat2) -> Self {
        Exact::Matrix(m)
    }
}

pub fn rational_to_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| format!("bad integer '{t}': {e}"))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse(s)?)),
        Some((n, d)) => {
            let d = parse(d)?;
            if d == BigInt::from(0) {
                return Err(format!("zero denominator in '{s}'"));
            }
            Ok(BigRational::new(parse(n)?, d))
        }
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exact::Scalar(r) => f.write_str(&rational_to_string(r)),
            Exact::Vector(v) => {
                let parts: Vec<String> = v.iter().map(rational_to_string).collect();
                write!(f, "({})", parts.join(", "))
            }
            Exact::Matrix(m) => write!(f, "{m}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Repr {
    Scalar(String),
    Matrix([[String; 2]; 2]),
    Vector(Vec<String>),
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let repr = match self {
            Exact::Scalar(r) => Repr::Scalar(rational_to_string(r)),
            Exact::Vector(v) => Repr::Vector(v.iter().map(rational_to_string).collect()),
            Exact::Matrix(m) => Repr::Matrix([
                [m.a11.to_string(), m.a12.to_string()],
                [m.a21.to_string(), m.a22.to_string()],
            ]),
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let int = |s: &str| s.parse::<BigInt>().map_err(D::Error::custom);
        match Repr::deserialize(d)? {
            Repr::Scalar(s) => parse_rational(&s)
                .map(Exact::Scalar)
                .map_err(D::Error::custom),
            Repr::Vector(v) => v
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<Vec<_>, _>>()
                .map(Exact::Vector)
                .map_err(D::Error::custom),
            Repr::Matrix([[a, b], [c, e]]) => Ok(Exact::Matrix(Mat2 {
                a11: int(&a)?,
                a12: int(&b)?,
                a21: int(&c)?,
                a22: int(&e)?,
            })),
        }
    }
}

/// `#[serde(with = "decimal")]` for `BigInt` fields.
pub mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
