use std::fmt;
use std::ops::Sub;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Element of ℤ+½, stored as the odd integer `2k`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HalfInt(i64);

impl HalfInt {
    /// `-1/2`, the top of the vacuum Maya set.
    pub const MINUS_HALF: HalfInt = HalfInt(-1);
    pub const HALF: HalfInt = HalfInt(1);

    pub fn try_from_twice(twice: i64) -> Result<Self> {
        if twice.rem_euclid(2) == 1 {
            Ok(HalfInt(twice))
        } else {
            Err(Error::NotHalfInteger(twice))
        }
    }

    /// Panics if `twice` is even; meant for literals.
    pub fn from_twice(twice: i64) -> Self {
        Self::try_from_twice(twice).expect("half-integer numerator must be odd")
    }

    /// `n + 1/2`.
    pub fn above(n: i64) -> Self {
        HalfInt(2 * n + 1)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    /// `self + n` for an integer shift.
    pub fn shift(self, n: i64) -> Self {
        HalfInt(self.0 + 2 * n)
    }

    /// `self + 1/2`, an integer.
    pub fn ceil(self) -> i64 {
        (self.0 + 1) / 2
    }

    /// `self - 1/2`, an integer.
    pub fn floor(self) -> i64 {
        (self.0 - 1).div_euclid(2)
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn to_scalar<S: Scalar>(self) -> S {
        S::from_ratio(self.0, 2)
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }
}

impl Sub for HalfInt {
    type Output = i64;

    fn sub(self, rhs: HalfInt) -> i64 {
        (self.0 - rhs.0) / 2
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2", self.0)
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (p, q) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("half-integer '{s}' must look like p/2")))?;
        if q.trim() != "2" {
            return Err(Error::Parse(format!("half-integer '{s}' must have denominator 2")));
        }
        let p: i64 = p
            .trim()
            .trim_start_matches('+')
            .parse()
            .map_err(|_| Error::Parse(format!("bad half-integer '{s}'")))?;
        HalfInt::try_from_twice(p)
    }
}

/// Parses a comma separated list of half-integers such as `-1/2,3/2`.
pub fn parse_points(s: &str) -> Result<Vec<HalfInt>> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(Vec::new());
    }
    s.split(',').map(str::parse).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form() {
        let k: HalfInt = "-3/2".parse().unwrap();
        assert_eq!(k.twice(), -3);
        assert_eq!(k.to_string(), "-3/2");
        assert!("2/2".parse::<HalfInt>().is_err());
        assert!("1/3".parse::<HalfInt>().is_err());
        assert_eq!(parse_points("-1/2,3/2").unwrap().len(), 2);
    }

    #[test]
    fn integer_parts() {
        let k = HalfInt::from_twice(-3);
        assert_eq!(k.floor(), -2);
        assert_eq!(k.ceil(), -1);
        assert_eq!(HalfInt::from_twice(5) - HalfInt::from_twice(-1), 3);
        assert_eq!(HalfInt::above(-1), HalfInt::MINUS_HALF);
    }
}
