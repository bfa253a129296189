use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::rat::normalize_minus;
use super::{split_components, write_components, Rat};
use crate::error::{Error, Result};

/// Gaussian rational `re + im·i`, an element of ℚ[i].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub const ZERO: GaussRat = GaussRat::real(Rat::ZERO);
    pub const ONE: GaussRat = GaussRat::real(Rat::ONE);
    pub const I: GaussRat = GaussRat {
        re: Rat::ZERO,
        im: Rat::ONE,
    };

    pub const fn new(re: Rat, im: Rat) -> GaussRat {
        GaussRat { re, im }
    }

    pub const fn real(re: Rat) -> GaussRat {
        GaussRat { re, im: Rat::ZERO }
    }

    /// Integer shorthand: `GaussRat::int(-1, 1)` is `-1+i`.
    pub const fn int(re: i64, im: i64) -> GaussRat {
        GaussRat {
            re: Rat::from_int(re),
            im: Rat::from_int(im),
        }
    }

    pub fn is_real(self) -> bool {
        self.im.is_zero()
    }

    /// True for `b·i` with `b ≠ 0`.
    pub fn is_pure_imaginary(self) -> bool {
        self.re.is_zero() && !self.im.is_zero()
    }

    pub fn conj(self) -> GaussRat {
        GaussRat {
            re: self.re,
            im: -self.im,
        }
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sqr(self) -> Result<Rat> {
        self.re
            .checked_mul(self.re)?
            .checked_add(self.im.checked_mul(self.im)?)
    }

    pub fn checked_add(self, rhs: GaussRat) -> Result<GaussRat> {
        Ok(GaussRat {
            re: self.re.checked_add(rhs.re)?,
            im: self.im.checked_add(rhs.im)?,
        })
    }

    pub fn checked_sub(self, rhs: GaussRat) -> Result<GaussRat> {
        Ok(GaussRat {
            re: self.re.checked_sub(rhs.re)?,
            im: self.im.checked_sub(rhs.im)?,
        })
    }

    pub fn checked_mul(self, rhs: GaussRat) -> Result<GaussRat> {
        let re = self
            .re
            .checked_mul(rhs.re)?
            .checked_sub(self.im.checked_mul(rhs.im)?)?;
        let im = self
            .re
            .checked_mul(rhs.im)?
            .checked_add(self.im.checked_mul(rhs.re)?)?;
        Ok(GaussRat { re, im })
    }

    pub fn checked_neg(self) -> Result<GaussRat> {
        Ok(GaussRat {
            re: self.re.checked_neg()?,
            im: self.im.checked_neg()?,
        })
    }

    pub fn scale(self, k: Rat) -> Result<GaussRat> {
        Ok(GaussRat {
            re: self.re.checked_mul(k)?,
            im: self.im.checked_mul(k)?,
        })
    }
}

impl From<Rat> for GaussRat {
    fn from(r: Rat) -> Self {
        GaussRat::real(r)
    }
}

fn overflow<T>(r: Result<T>) -> T {
    r.unwrap_or_else(|e| panic!("{e}"))
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: GaussRat) -> GaussRat {
        overflow(self.checked_add(rhs))
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: GaussRat) -> GaussRat {
        overflow(self.checked_sub(rhs))
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: GaussRat) -> GaussRat {
        overflow(self.checked_mul(rhs))
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        overflow(self.checked_neg())
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let real = (!self.re.is_zero() || self.im.is_zero()).then(|| self.re.to_string());
        let coeff = (!self.im.is_zero()).then(|| self.im.abs().to_string());
        write_components(f, real, self.im.signum() < 0, coeff, "i")
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaussRat({self})")
    }
}

fn parse_coeff(text: &str, whole: &str) -> Result<Rat> {
    match text {
        "" | "+" => Ok(Rat::ONE),
        "-" => Ok(-Rat::ONE),
        t => t
            .parse()
            .map_err(|_| Error::parse("gaussian rational", whole)),
    }
}

impl FromStr for GaussRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<GaussRat> {
        let text = normalize_minus(s);
        let err = || Error::parse("gaussian rational", s);
        if text.is_empty() {
            return Err(err());
        }
        let (real, coeff) = split_components(&text, &["i"]);
        let re = match real {
            Some(t) => t.parse::<Rat>().map_err(|_| err())?,
            None => Rat::ZERO,
        };
        let im = match coeff {
            Some(t) => parse_coeff(t, s)?,
            None => Rat::ZERO,
        };
        Ok(GaussRat { re, im })
    }
}
