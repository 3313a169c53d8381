//! Scalar backends.
//!
//! Every formula in the crate is written once against the [`Scalar`] trait and
//! runs either on Gaussian rationals ([`GaussRat`], exact, no rounding) or on
//! complex doubles ([`C64`]). Float comparisons always go through an explicit
//! tolerance at the call site.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type C64 = num_complex::Complex64;

/// Gaussian rational `a + b i` with `a, b` arbitrary precision rationals.
pub type GaussRat = Complex<BigRational>;

/// Selects the arithmetic backend at run time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NumericMode {
    Exact,
    Float,
}

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// `true` when arithmetic is closed without rounding.
    const EXACT: bool;

    fn from_i64(n: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self;

    fn to_c64(&self) -> C64;

    fn conj(&self) -> Self;

    /// `base^exponent` for a real positive base. Exact backends only succeed for
    /// integral exponents.
    fn real_pow(base: &Self, exponent: &Self) -> Option<Self>;

    /// Textual form: `p/q+r/si` for exact values, `a+bi` for floats.
    fn to_text(&self) -> String;

    fn parse_text(text: &str) -> Result<Self>;

    fn abs_f64(&self) -> f64 {
        self.to_c64().norm()
    }

    fn is_real(&self) -> bool {
        self.to_c64().im == 0.0
    }

    fn scale_i64(&self, k: i64) -> Self {
        self.clone() * Self::from_i64(k)
    }
}

impl Scalar for C64 {
    const EXACT: bool = false;

    fn from_i64(n: i64) -> Self {
        C64::new(n as f64, 0.0)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        C64::new(num as f64 / den as f64, 0.0)
    }

    fn to_c64(&self) -> C64 {
        *self
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn real_pow(base: &Self, exponent: &Self) -> Option<Self> {
        if base.im != 0.0 || base.re <= 0.0 {
            return None;
        }
        Some((exponent * base.re.ln()).exp())
    }

    fn to_text(&self) -> String {
        join_parts(&fmt_f64(self.re), &fmt_f64(self.im.abs()), self.im == 0.0, self.re == 0.0, self.im < 0.0)
    }

    fn parse_text(text: &str) -> Result<Self> {
        let (re, im) = split_complex(text)?;
        Ok(C64::new(parse_real_f64(&re)?, parse_real_f64(&im)?))
    }
}

impl Scalar for GaussRat {
    const EXACT: bool = true;

    fn from_i64(n: i64) -> Self {
        Complex::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(BigRational::new(BigInt::from(num), BigInt::from(den)), BigRational::zero())
    }

    fn to_c64(&self) -> C64 {
        C64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }

    fn real_pow(base: &Self, exponent: &Self) -> Option<Self> {
        if !base.im.is_zero() || !base.re.is_positive() {
            return None;
        }
        if base.re.is_one() {
            return Some(Self::one());
        }
        if !exponent.im.is_zero() || !exponent.re.is_integer() {
            return None;
        }
        let n = exponent.re.to_integer().to_i64()?;
        let p = num_traits::pow::Pow::pow(&base.re, n.unsigned_abs() as u32)
            .to_owned();
        let p = if n < 0 { p.recip() } else { p };
        Some(Complex::new(p, BigRational::zero()))
    }

    fn to_text(&self) -> String {
        join_parts(
            &self.re.to_string(),
            &self.im.abs().to_string(),
            self.im.is_zero(),
            self.re.is_zero(),
            self.im.is_negative(),
        )
    }

    fn parse_text(text: &str) -> Result<Self> {
        let (re, im) = split_complex(text)?;
        Ok(Complex::new(parse_real_exact(&re)?, parse_real_exact(&im)?))
    }

    fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x}")
    }
}

fn join_parts(re: &str, im_abs: &str, im_zero: bool, re_zero: bool, im_neg: bool) -> String {
    if im_zero {
        return re.to_string();
    }
    let sign = if im_neg { "-" } else { "+" };
    if re_zero {
        let lead = if im_neg { "-" } else { "" };
        format!("{lead}{im_abs}i")
    } else {
        format!("{re}{sign}{im_abs}i")
    }
}

/// Splits `a+bi` into real and imaginary texts. The imaginary text is "0" when
/// absent.
fn split_complex(text: &str) -> Result<(String, String)> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty scalar".into()));
    }
    let Some(body) = s.strip_suffix('i') else {
        return Ok((s, "0".into()));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (body[..k].to_string(), body[k..].to_string()),
        None => ("0".to_string(), body.to_string()),
    };
    let im = match im.as_str() {
        "" | "+" => "1".to_string(),
        "-" => "-1".to_string(),
        other => other.trim_start_matches('+').to_string(),
    };
    Ok((re, im))
}

fn parse_real_f64(s: &str) -> Result<f64> {
    if let Some((p, q)) = s.split_once('/') {
        let p: f64 = p.parse().map_err(|_| Error::Parse(format!("bad number '{s}'")))?;
        let q: f64 = q.parse().map_err(|_| Error::Parse(format!("bad number '{s}'")))?;
        if q == 0.0 {
            return Err(Error::Parse(format!("zero denominator in '{s}'")));
        }
        return Ok(p / q);
    }
    s.parse().map_err(|_| Error::Parse(format!("bad number '{s}'")))
}

/// Parses integers, fractions `p/q` and plain decimals `1.25` exactly.
pub fn parse_real_exact(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad exact number '{s}'"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim_start_matches('+').parse().map_err(|_| bad())?;
        let q: BigInt = q.parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    let s = s.trim_start_matches('+');
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches('-'), frac);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let num: BigInt = digits.parse().map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let r = BigRational::new(num, den);
        return Ok(if neg { -r } else { r });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

/// Convenience constructor for exact complex values from small integer data.
pub fn gauss(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> GaussRat {
    Complex::new(
        BigRational::new(re_num.into(), re_den.into()),
        BigRational::new(im_num.into(), im_den.into()),
    )
}

pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
