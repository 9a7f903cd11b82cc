//! Exact arithmetic in the Gaussian rationals `Q(i)`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An element `re + im·i` of `Q(i)`.
///
/// Both parts are `BigRational`, which keeps denominators positive and reduced
/// after every operation.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn from_parts(re: i64, im: i64) -> Self {
        Self::new(
            BigRational::from_integer(re.into()),
            BigRational::from_integer(im.into()),
        )
    }

    pub fn from_rational(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    /// `p/q` as a real Gaussian rational. Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::from_rational(BigRational::new(p.into(), q.into()))
    }

    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self::new(&self.re / &n, -&self.im / &n))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Least common multiple of the denominators of both parts.
    pub fn denom_lcm(&self) -> BigInt {
        self.re.denom().lcm(self.im.denom())
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Huge numerators/denominators: scale by bit length before converting.
    let nb = r.numer().bits() as i64;
    let db = r.denom().bits() as i64;
    let shift = nb - db;
    let scaled = if shift > 0 {
        r / BigRational::from_integer(BigInt::one() << (shift as usize))
    } else {
        r * BigRational::from_integer(BigInt::one() << ((-shift) as usize))
    };
    scaled.to_f64().unwrap_or(0.0) * 2f64.powi(shift as i32)
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::from_rational(&self.re * &rhs.re);
        }
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    /// Panics on division by zero, like the primitive numeric types.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.inv().expect("division by zero in Q(i)");
        self * &inv
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

/// Formats a rational as `p/q`, always with an explicit denominator.
pub fn fmt_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q`, `p`, with an optional leading sign.
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("malformed rational {s:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t.as_str(), "1"),
    };
    let valid_int = |x: &str, allow_sign: bool| {
        let digits = if allow_sign {
            x.strip_prefix(['+', '-']).unwrap_or(x)
        } else {
            x
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num, true) || !valid_int(den, false) {
        return Err(bad());
    }
    let n: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(
            f,
            "{}{}{}i",
            fmt_rational(&self.re),
            sign,
            fmt_rational(&self.im.abs())
        )
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Accepts `p/q`, `p/q+r/s i`, `r/s i`, `i`, `-i`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Self::from_rational(parse_rational(&t)?));
        };
        // Split at the last sign that is not the leading one.
        let split = body
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k)
            .next_back();
        let (re_part, im_part) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let re = if re_part.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(re_part)?
        };
        let im = match im_part {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other)?,
        };
        Ok(Self::new(re, im))
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `BigRational` fields written as `"p/q"` strings.
pub mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Vec<BigRational>`.
pub mod rational_vec_str {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(fmt_rational))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn parses_all_accepted_forms() {
        assert_eq!(g("3"), GaussianRational::from_integer(3));
        assert_eq!(g("-3/6"), GaussianRational::ratio(-1, 2));
        assert_eq!(g("i"), GaussianRational::i());
        assert_eq!(g("-i"), -GaussianRational::i());
        assert_eq!(g("1/2+3/4i"), g("1/2 + 3/4 i"));
        assert_eq!(
            g("1/2-3/4i"),
            GaussianRational::new(
                BigRational::new(1.into(), 2.into()),
                BigRational::new((-3).into(), 4.into())
            )
        );
        assert_eq!(g("2i").im, BigRational::from_integer(2.into()));
        assert_eq!(g("-1-i"), GaussianRational::from_parts(-1, -1));
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "1/", "/2", "1/0", "abc", "1/2/3", "1.5", "1+2", "ii"] {
            assert!(s.parse::<GaussianRational>().is_err(), "{s:?}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["3/1", "-1/2", "0/1+1/1i", "5/7-2/3i"] {
            assert_eq!(g(s).to_string(), s);
        }
    }

    #[test]
    fn field_operations() {
        let a = g("1+2i");
        let b = g("3-i");
        assert_eq!(&a * &b, g("5+5i"));
        assert_eq!(&(&a / &b) * &b, a);
        assert_eq!(a.inv().unwrap() * &a, GaussianRational::one());
        assert!(GaussianRational::zero().inv().is_none());
        assert_eq!(GaussianRational::i().pow(4), GaussianRational::one());
    }
}
