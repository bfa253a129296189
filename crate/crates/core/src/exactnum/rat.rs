use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Exact rational number in canonical form.
///
/// The denominator is strictly positive and coprime to the numerator, and
/// zero is stored as `0/1`. Every constructor and every operation restores
/// this form, so derived equality and hashing are structural.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rat {
    num: i64,
    den: i64,
}

impl Rat {
    pub const ZERO: Rat = Rat { num: 0, den: 1 };
    pub const ONE: Rat = Rat { num: 1, den: 1 };
    pub const HALF: Rat = Rat { num: 1, den: 2 };

    pub fn new(num: i64, den: i64) -> Result<Rat> {
        Rat::from_wide(num as i128, den as i128)
    }

    pub const fn from_int(n: i64) -> Rat {
        Rat { num: n, den: 1 }
    }

    pub fn num(self) -> i64 {
        self.num
    }

    pub fn den(self) -> i64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn is_integer(self) -> bool {
        self.den == 1
    }

    pub fn signum(self) -> i64 {
        self.num.signum()
    }

    // All arithmetic goes through i128 and is reduced before narrowing back,
    // so an i64 overflow only surfaces when the canonical result itself does
    // not fit.
    fn from_wide(num: i128, den: i128) -> Result<Rat> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        if num == 0 {
            return Ok(Rat::ZERO);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Ok(Rat {
            num: i64::try_from(num).map_err(|_| Error::Overflow)?,
            den: i64::try_from(den).map_err(|_| Error::Overflow)?,
        })
    }

    pub fn checked_add(self, rhs: Rat) -> Result<Rat> {
        let num = self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128;
        Rat::from_wide(num, self.den as i128 * rhs.den as i128)
    }

    pub fn checked_sub(self, rhs: Rat) -> Result<Rat> {
        self.checked_add(rhs.checked_neg()?)
    }

    pub fn checked_mul(self, rhs: Rat) -> Result<Rat> {
        Rat::from_wide(
            self.num as i128 * rhs.num as i128,
            self.den as i128 * rhs.den as i128,
        )
    }

    pub fn checked_div(self, rhs: Rat) -> Result<Rat> {
        Rat::from_wide(
            self.num as i128 * rhs.den as i128,
            self.den as i128 * rhs.num as i128,
        )
    }

    pub fn checked_neg(self) -> Result<Rat> {
        Ok(Rat {
            num: self.num.checked_neg().ok_or(Error::Overflow)?,
            den: self.den,
        })
    }

    pub fn abs(self) -> Rat {
        if self.num < 0 {
            -self
        } else {
            self
        }
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::ZERO
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn overflow<T>(r: Result<T>) -> T {
    r.unwrap_or_else(|e| panic!("{e}"))
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        overflow(self.checked_add(rhs))
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        overflow(self.checked_sub(rhs))
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        overflow(self.checked_mul(rhs))
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        overflow(self.checked_neg())
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Replaces the typographic minus sign with ASCII `-` so either spelling
/// parses.
pub(crate) fn normalize_minus(s: &str) -> String {
    s.trim().replace('\u{2212}', "-")
}

fn parse_int(s: &str, whole: &str) -> Result<i64> {
    let digits = match s.strip_prefix('+') {
        Some(rest) if rest.starts_with(['+', '-']) => return Err(Error::parse("rational", whole)),
        Some(rest) => rest,
        None => s,
    };
    digits
        .parse::<i64>()
        .map_err(|_| Error::parse("rational", whole))
}

impl FromStr for Rat {
    type Err = Error;

    /// Accepts `n` or `n/d` with an optional sign on the numerator.
    fn from_str(s: &str) -> Result<Rat> {
        let text = normalize_minus(s);
        match text.split_once('/') {
            None => Ok(Rat::from_int(parse_int(&text, s)?)),
            Some((n, d)) => {
                let den = parse_int(d, s)?;
                if d.starts_with(['+', '-']) {
                    return Err(Error::parse("rational", s));
                }
                Rat::new(parse_int(n, s)?, den)
            }
        }
    }
}
