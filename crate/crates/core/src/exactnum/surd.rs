use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::rat::normalize_minus;
use super::{split_components, write_components};
use crate::error::{Error, Result};

/// Element `a + b√2` of the ring ℤ[√2], integer coefficients only.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Surd2 {
    pub a: i64,
    pub b: i64,
}

impl Surd2 {
    pub const ZERO: Surd2 = Surd2::new(0, 0);
    pub const ONE: Surd2 = Surd2::new(1, 0);
    pub const SQRT2: Surd2 = Surd2::new(0, 1);

    pub const fn new(a: i64, b: i64) -> Surd2 {
        Surd2 { a, b }
    }

    pub fn is_rational(self) -> bool {
        self.b == 0
    }

    pub fn conj(self) -> Surd2 {
        Surd2 {
            a: self.a,
            b: -self.b,
        }
    }

    /// Field norm `a² − 2b²`, i.e. `s · conj(s)`.
    pub fn norm(self) -> Result<i64> {
        let a2 = self.a.checked_mul(self.a).ok_or(Error::Overflow)?;
        let b2 = self
            .b
            .checked_mul(self.b)
            .and_then(|x| x.checked_mul(2))
            .ok_or(Error::Overflow)?;
        a2.checked_sub(b2).ok_or(Error::Overflow)
    }

    pub fn checked_add(self, rhs: Surd2) -> Result<Surd2> {
        Ok(Surd2 {
            a: self.a.checked_add(rhs.a).ok_or(Error::Overflow)?,
            b: self.b.checked_add(rhs.b).ok_or(Error::Overflow)?,
        })
    }

    pub fn checked_sub(self, rhs: Surd2) -> Result<Surd2> {
        Ok(Surd2 {
            a: self.a.checked_sub(rhs.a).ok_or(Error::Overflow)?,
            b: self.b.checked_sub(rhs.b).ok_or(Error::Overflow)?,
        })
    }

    pub fn checked_mul(self, rhs: Surd2) -> Result<Surd2> {
        let m = |x: i64, y: i64| x.checked_mul(y).ok_or(Error::Overflow);
        let bb = m(m(self.b, rhs.b)?, 2)?;
        Ok(Surd2 {
            a: m(self.a, rhs.a)?.checked_add(bb).ok_or(Error::Overflow)?,
            b: m(self.a, rhs.b)?
                .checked_add(m(self.b, rhs.a)?)
                .ok_or(Error::Overflow)?,
        })
    }

    pub fn checked_neg(self) -> Result<Surd2> {
        Ok(Surd2 {
            a: self.a.checked_neg().ok_or(Error::Overflow)?,
            b: self.b.checked_neg().ok_or(Error::Overflow)?,
        })
    }

    /// Largest coefficient magnitude, `max(|a|, |b|)`.
    pub fn height(self) -> u64 {
        self.a.unsigned_abs().max(self.b.unsigned_abs())
    }
}

impl From<i64> for Surd2 {
    fn from(a: i64) -> Self {
        Surd2::new(a, 0)
    }
}

fn overflow<T>(r: Result<T>) -> T {
    r.unwrap_or_else(|e| panic!("{e}"))
}

impl Add for Surd2 {
    type Output = Surd2;
    fn add(self, rhs: Surd2) -> Surd2 {
        overflow(self.checked_add(rhs))
    }
}

impl Sub for Surd2 {
    type Output = Surd2;
    fn sub(self, rhs: Surd2) -> Surd2 {
        overflow(self.checked_sub(rhs))
    }
}

impl Mul for Surd2 {
    type Output = Surd2;
    fn mul(self, rhs: Surd2) -> Surd2 {
        overflow(self.checked_mul(rhs))
    }
}

impl Neg for Surd2 {
    type Output = Surd2;
    fn neg(self) -> Surd2 {
        overflow(self.checked_neg())
    }
}

impl fmt::Display for Surd2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let real = (self.a != 0 || self.b == 0).then(|| self.a.to_string());
        let coeff = (self.b != 0).then(|| self.b.unsigned_abs().to_string());
        write_components(f, real, self.b < 0, coeff, "\u{221a}2")
    }
}

impl fmt::Debug for Surd2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Surd2({self})")
    }
}

fn parse_int(text: &str, whole: &str) -> Result<i64> {
    let digits = text.strip_prefix('+').unwrap_or(text);
    if digits.starts_with('+') || text.starts_with("+-") {
        return Err(Error::parse("Z[sqrt2] element", whole));
    }
    digits
        .parse()
        .map_err(|_| Error::parse("Z[sqrt2] element", whole))
}

impl FromStr for Surd2 {
    type Err = Error;

    /// Accepts `√2`, `sqrt2` or `sqrt(2)` as the unit.
    fn from_str(s: &str) -> Result<Surd2> {
        let text = normalize_minus(s);
        if text.is_empty() {
            return Err(Error::parse("Z[sqrt2] element", s));
        }
        let (real, coeff) = split_components(&text, &["\u{221a}2", "sqrt(2)", "sqrt2"]);
        let a = match real {
            Some(t) => parse_int(t, s)?,
            None => 0,
        };
        let b = match coeff {
            Some("") | Some("+") => 1,
            Some("-") => -1,
            Some(t) => parse_int(t, s)?,
            None => 0,
        };
        Ok(Surd2 { a, b })
    }
}
