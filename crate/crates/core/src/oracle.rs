//! The black box: one of the four functions `{0,1} → {0,1}` behind a query
//! counter.
//!
//! Solvers only ever see an [`OracleHandle`]. Every access to the hidden
//! function, whether a bit lookup, an application of the oracle unitary or
//! an evaluation of the classical embedding, goes through a single charging
//! path that increments the counter by exactly one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Truth table `(f(0), f(1))` of a one-bit Boolean function.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct BitFn {
    f0: bool,
    f1: bool,
}

impl BitFn {
    /// All four functions in ascending order `00, 01, 10, 11`.
    pub const ALL: [BitFn; 4] = [
        BitFn::new(false, false),
        BitFn::new(false, true),
        BitFn::new(true, false),
        BitFn::new(true, true),
    ];

    pub const fn new(f0: bool, f1: bool) -> BitFn {
        BitFn { f0, f1 }
    }

    /// Builds from integer bits; anything other than 0 or 1 is rejected.
    pub fn from_bits(f0: u8, f1: u8) -> Result<BitFn> {
        let bit = |b: u8| match b {
            0 => Ok(false),
            1 => Ok(true),
            _ => Err(Error::parse("bit", &b.to_string())),
        };
        Ok(BitFn::new(bit(f0)?, bit(f1)?))
    }

    pub fn eval(self, x: bool) -> bool {
        if x {
            self.f1
        } else {
            self.f0
        }
    }

    pub fn f0(self) -> u8 {
        self.f0 as u8
    }

    pub fn f1(self) -> u8 {
        self.f1 as u8
    }

    pub fn kind(self) -> Classification {
        if self.f0 == self.f1 {
            Classification::Constant
        } else {
            Classification::Balanced
        }
    }
}

impl fmt::Display for BitFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.f0(), self.f1())
    }
}

impl FromStr for BitFn {
    type Err = Error;

    /// Two-character truth table, e.g. `"01"`.
    fn from_str(s: &str) -> Result<BitFn> {
        match s.as_bytes() {
            [a @ (b'0' | b'1'), b @ (b'0' | b'1')] => BitFn::from_bits(a - b'0', b - b'0'),
            _ => Err(Error::parse("oracle", s)),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Classification {
    Constant,
    Balanced,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Constant => "Constant",
            Classification::Balanced => "Balanced",
        })
    }
}

impl FromStr for Classification {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "constant" => Ok(Classification::Constant),
            "balanced" => Ok(Classification::Balanced),
            _ => Err(Error::parse("classification", s)),
        }
    }
}

/// A black-box function with a monotone query counter.
///
/// Not `Clone`: copying a handle would fork its counter. The hidden function
/// is only recoverable by consuming the handle with [`OracleHandle::reveal`].
#[derive(Debug)]
pub struct OracleHandle {
    hidden: BitFn,
    queries: u64,
}

impl OracleHandle {
    pub fn new(f: BitFn) -> OracleHandle {
        OracleHandle {
            hidden: f,
            queries: 0,
        }
    }

    /// One classical query: returns `f(x)`.
    pub fn query(&mut self, x: bool) -> bool {
        self.charge().eval(x)
    }

    pub fn query_count(&self) -> u64 {
        self.queries
    }

    /// Ends the black-box game and hands back the function.
    pub fn reveal(self) -> BitFn {
        self.hidden
    }

    /// The single charging path. Oracle gates and embedding boxes call this
    /// once per application or evaluation.
    pub(crate) fn charge(&mut self) -> BitFn {
        self.queries += 1;
        self.hidden
    }
}

/// Two-query classical baseline: query both inputs and compare.
pub fn classify_baseline(h: &mut OracleHandle) -> Classification {
    baseline_with_witness(h).0
}

/// Baseline that also returns the two observed bits.
pub fn baseline_with_witness(h: &mut OracleHandle) -> (Classification, BitFn) {
    let seen = BitFn::new(h.query(false), h.query(true));
    (seen.kind(), seen)
}
