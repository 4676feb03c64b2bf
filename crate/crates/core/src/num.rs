//! Small exact number types shared across modules.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A sign `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// `(-1)^k`.
    pub fn pow_minus_one(k: u64) -> Sign {
        Sign::from_parity(k % 2 == 1)
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn both() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl std::iter::Product for Sign {
    fn product<I: Iterator<Item = Sign>>(iter: I) -> Sign {
        iter.fold(Sign::Plus, |a, b| a * b)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Sign> {
        match s {
            "+" | "+1" | "1" | "plus" => Ok(Sign::Plus),
            "-" | "-1" | "minus" => Ok(Sign::Minus),
            _ => Err(Error::Parse(format!("not a sign: `{s}`"))),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Sign, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub fn from_twice(twice: i64) -> HalfInt {
        HalfInt(twice)
    }

    pub fn from_int(n: i64) -> HalfInt {
        HalfInt(2 * n)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn abs(self) -> HalfInt {
        HalfInt(self.0.abs())
    }

    pub fn scale(self, k: i64) -> HalfInt {
        HalfInt(self.0 * k)
    }

    pub fn to_ratio(self) -> Ratio<i64> {
        Ratio::new(self.0, 2)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfInt {
    type Err = Error;
    fn from_str(s: &str) -> Result<HalfInt> {
        let r = parse_ratio(s)?;
        let twice = r * Ratio::from_integer(2);
        if !twice.is_integer() {
            return Err(Error::Parse(format!("`{s}` is not a half-integer")));
        }
        Ok(HalfInt(twice.to_integer()))
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<HalfInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses `"p/q"` or `"p"` into a reduced fraction.
pub fn parse_ratio(s: &str) -> Result<Ratio<i64>> {
    let bad = || Error::Parse(format!("not a fraction: `{s}`"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: i64 = n.parse().map_err(|_| bad())?;
    let d: i64 = d.parse().map_err(|_| bad())?;
    if d == 0 {
        return Err(bad());
    }
    Ok(Ratio::new(n, d))
}

pub fn format_ratio(r: &Ratio<i64>) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
