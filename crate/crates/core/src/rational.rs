//! Exact rational bounds and their `{num, den}` wire form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Rational = BigRational;

/// `1/w`.
pub fn reciprocal(w: i64) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(w))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders as `p/q`, or `p` when the denominator is one.
pub fn to_text(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[derive(Serialize, Deserialize)]
struct NumDen {
    num: String,
    den: String,
}

pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    NumDen {
        num: r.numer().to_string(),
        den: r.denom().to_string(),
    }
    .serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    use serde::de::Error;
    let NumDen { num, den } = NumDen::deserialize(d)?;
    let num: BigInt = num.parse().map_err(D::Error::custom)?;
    let den: BigInt = den.parse().map_err(D::Error::custom)?;
    if den == BigInt::from(0) {
        return Err(D::Error::custom("zero denominator"));
    }
    Ok(Rational::new(num, den))
}
