//! Exact rationals modulo the integers.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::InvariantError;
use crate::cyclo::text::parse_rational;

/// A rational number reduced into `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RatMod1(BigRational);

impl RatMod1 {
    pub fn zero() -> RatMod1 {
        RatMod1(BigRational::zero())
    }

    pub fn new(r: &BigRational) -> RatMod1 {
        RatMod1(r - r.floor())
    }

    pub fn ratio(p: i64, q: i64) -> RatMod1 {
        RatMod1::new(&BigRational::new(p.into(), q.into()))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `n * self`, reduced.
    pub fn times(&self, n: i64) -> RatMod1 {
        RatMod1::new(&(&self.0 * BigRational::from_integer(n.into())))
    }

    /// `n * self` when it is an integer in `[0, n)`.
    pub fn scaled(&self, n: u64) -> Option<BigInt> {
        let v = &self.0 * BigRational::from_integer(n.into());
        v.is_integer().then(|| v.to_integer())
    }

    /// Whether `self = p / q` modulo 1.
    pub fn equals(&self, p: i64, q: i64) -> bool {
        *self == RatMod1::ratio(p, q)
    }
}

impl fmt::Display for RatMod1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for RatMod1 {
    type Err = InvariantError;

    fn from_str(s: &str) -> Result<RatMod1, InvariantError> {
        parse_rational(s)
            .map(|r| RatMod1::new(&r))
            .ok_or_else(|| InvariantError::Parse(s.to_string()))
    }
}

impl Serialize for RatMod1 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RatMod1 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<RatMod1, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

impl Add for &RatMod1 {
    type Output = RatMod1;
    fn add(self, other: &RatMod1) -> RatMod1 {
        RatMod1::new(&(&self.0 + &other.0))
    }
}

impl Sub for &RatMod1 {
    type Output = RatMod1;
    fn sub(self, other: &RatMod1) -> RatMod1 {
        RatMod1::new(&(&self.0 - &other.0))
    }
}

impl Neg for &RatMod1 {
    type Output = RatMod1;
    fn neg(self) -> RatMod1 {
        RatMod1::new(&-&self.0)
    }
}

impl Add for RatMod1 {
    type Output = RatMod1;
    fn add(self, other: RatMod1) -> RatMod1 {
        &self + &other
    }
}

impl Sub for RatMod1 {
    type Output = RatMod1;
    fn sub(self, other: RatMod1) -> RatMod1 {
        &self - &other
    }
}

impl Neg for RatMod1 {
    type Output = RatMod1;
    fn neg(self) -> RatMod1 {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_into_unit_interval() {
        assert_eq!(RatMod1::ratio(-19, 20), RatMod1::ratio(1, 20));
        assert_eq!(RatMod1::ratio(-4, 40).to_string(), "9/10");
        assert_eq!(RatMod1::ratio(3, 1).to_string(), "0");
        assert_eq!(
            RatMod1::ratio(7, 4) + RatMod1::ratio(1, 2),
            RatMod1::ratio(1, 4)
        );
        assert_eq!(-RatMod1::ratio(1, 3), RatMod1::ratio(2, 3));
    }

    #[test]
    fn text_round_trip() {
        for s in ["0", "1/24", "25/48", "119/120"] {
            let r: RatMod1 = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
            let json = serde_json::to_string(&r).unwrap();
            assert_eq!(serde_json::from_str::<RatMod1>(&json).unwrap(), r);
        }
        assert!("x/2".parse::<RatMod1>().is_err());
    }
}
