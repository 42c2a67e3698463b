//! Exact rational helpers shared by every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serializer};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Canonical text form: `n` for integers, `p/q` otherwise, sign on the numerator.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q, String> {
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| format!("not a rational: {s:?}"))?;
    let d: BigInt = d.parse().map_err(|_| format!("not a rational: {s:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(n, d))
}

pub fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

/// Least common multiple of the denominators.
pub fn denom_lcm<'a>(xs: impl IntoIterator<Item = &'a Q>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub fn to_i64(x: &BigInt) -> Option<i64> {
    i64::try_from(x).ok()
}

pub fn abs_q(x: &Q) -> Q {
    x.abs()
}

pub fn ser_q<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_q(x))
}

pub fn de_q<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
    let s = String::deserialize(d)?;
    parse_q(&s).map_err(serde::de::Error::custom)
}

pub fn ser_q_vec<S: Serializer>(xs: &[Q], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(fmt_q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_and_parse_round_trip() {
        for (n, d) in [(3, 1), (-27, 2), (0, 5), (4, -6)] {
            let x = q(n, d);
            assert_eq!(parse_q(&fmt_q(&x)).unwrap(), x);
        }
        assert_eq!(fmt_q(&q(4, -6)), "-2/3");
        assert_eq!(fmt_q(&q(-70, 1)), "-70");
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }
}
