//! Deterministic classical single-query solvers.
//!
//! The hidden function is embedded into a two-dimensional number system as
//! `C_f(a + b·u) = (−1)^{0⊕f(0)} a + (−1)^{1⊕f(1)} b·u`, where `u` is `i`
//! (over ℚ[i]) or `√2` (over ℤ[√2]). For the four functions this gives
//! `C_00 = conj`, `C_01 = id`, `C_10 = −id`, `C_11 = −conj`.
//!
//! One evaluation of `C_f` on a probe with both components nonzero is one
//! query. Multiplying by a fixed element then separates constant from
//! balanced by whether the product lands on the real (or rational) axis.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{GaussRat, Rat, Surd2};
use crate::oracle::{BitFn, Classification, OracleHandle};

/// Probe `1 + i`.
pub const GAUSS_PROBE: GaussRat = GaussRat::int(1, 1);
/// Multiplier `i − 1`.
pub const GAUSS_MULTIPLIER: GaussRat = GaussRat::int(-1, 1);
/// Probe `1 + √2`.
pub const SURD_PROBE: Surd2 = Surd2::new(1, 1);
/// Multiplier `√2 − 1`.
pub const SURD_MULTIPLIER: Surd2 = Surd2::new(-1, 1);
/// Every ℤ[√2] value the surd solver touches has `|a|, |b| ≤ 3`.
pub const SURD_BOUND: u64 = 3;

fn parity_sign(bit: u8) -> i64 {
    if bit == 0 {
        1
    } else {
        -1
    }
}

/// `C_f` over ℚ[i] for a known function. No query is charged.
pub fn embed_gauss(f: BitFn, z: GaussRat) -> GaussRat {
    let re_sign = Rat::from(parity_sign(f.f0()));
    let im_sign = Rat::from(parity_sign(1 ^ f.f1()));
    GaussRat::new(z.re * re_sign, z.im * im_sign)
}

/// `C_f` over ℤ[√2] for a known function. No query is charged.
pub fn embed_surd(f: BitFn, s: Surd2) -> Surd2 {
    Surd2::new(s.a * parity_sign(f.f0()), s.b * parity_sign(1 ^ f.f1()))
}

/// The embedding as a black box. Each evaluation costs one query.
pub struct CfBox<'h> {
    handle: &'h mut OracleHandle,
}

impl<'h> CfBox<'h> {
    pub fn new(handle: &'h mut OracleHandle) -> Self {
        CfBox { handle }
    }

    pub fn eval(&mut self, z: GaussRat) -> GaussRat {
        embed_gauss(self.handle.charge(), z)
    }

    pub fn eval_surd(&mut self, s: Surd2) -> Surd2 {
        embed_surd(self.handle.charge(), s)
    }

    pub fn queries(&self) -> u64 {
        self.handle.query_count()
    }
}

/// Inputs and output of one ℚ[i] solve.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GaussVerdict {
    pub multiplier: GaussRat,
    pub embedded: GaussRat,
    pub product: GaussRat,
    pub classification: Classification,
}

/// Inputs and output of one ℤ[√2] solve.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SurdVerdict {
    pub probe: Surd2,
    pub multiplier: Surd2,
    pub embedded: Surd2,
    pub product: Surd2,
    pub classification: Classification,
}

impl SurdVerdict {
    pub fn values(&self) -> [Surd2; 4] {
        [self.probe, self.multiplier, self.embedded, self.product]
    }
}

/// Real product means balanced.
pub fn gauss_decision(product: GaussRat) -> Classification {
    if product.is_real() {
        Classification::Balanced
    } else {
        Classification::Constant
    }
}

/// `(i − 1) · C_f(1 + i)`; real means balanced. One query.
pub fn solve_gauss(h: &mut OracleHandle) -> GaussVerdict {
    solve_gauss_with(h, gauss_decision)
}

/// [`solve_gauss`] with a substitute decision rule.
pub fn solve_gauss_with(
    h: &mut OracleHandle,
    decide: fn(GaussRat) -> Classification,
) -> GaussVerdict {
    let embedded = CfBox::new(h).eval(GAUSS_PROBE);
    let product = GAUSS_MULTIPLIER * embedded;
    GaussVerdict {
        multiplier: GAUSS_MULTIPLIER,
        embedded,
        product,
        classification: decide(product),
    }
}

/// Which multiplier the scaled family uses.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum FamilySign {
    /// `a(i − 1)`: real product means balanced.
    Minus,
    /// `a(i + 1)`: real product means constant.
    #[default]
    Plus,
}

impl FamilySign {
    pub fn multiplier(self, a: Rat) -> Result<GaussRat> {
        let base = match self {
            FamilySign::Minus => GaussRat::int(-1, 1),
            FamilySign::Plus => GaussRat::int(1, 1),
        };
        base.scale(a)
    }

    pub fn decide(self, product: GaussRat) -> Classification {
        match (self, product.is_real()) {
            (FamilySign::Minus, true) | (FamilySign::Plus, false) => Classification::Balanced,
            (FamilySign::Minus, false) | (FamilySign::Plus, true) => Classification::Constant,
        }
    }
}

impl std::str::FromStr for FamilySign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minus" | "-" => Ok(FamilySign::Minus),
            "plus" | "+" => Ok(FamilySign::Plus),
            _ => Err(Error::parse("family sign", s)),
        }
    }
}

impl std::fmt::Display for FamilySign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FamilySign::Minus => "minus",
            FamilySign::Plus => "plus",
        })
    }
}

/// `a(i ∓ 1) · C_f(1 + i)` for nonzero rational `a`. One query; `a = 0` is
/// rejected before the oracle is touched.
pub fn solve_gauss_family(h: &mut OracleHandle, a: Rat, sign: FamilySign) -> Result<GaussVerdict> {
    if a.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let multiplier = sign.multiplier(a)?;
    let embedded = CfBox::new(h).eval(GAUSS_PROBE);
    let product = multiplier.checked_mul(embedded)?;
    Ok(GaussVerdict {
        multiplier,
        embedded,
        product,
        classification: sign.decide(product),
    })
}

/// `(√2 − 1) · C_f(1 + √2)`; rational means balanced. One query.
pub fn solve_surd(h: &mut OracleHandle) -> SurdVerdict {
    let embedded = CfBox::new(h).eval_surd(SURD_PROBE);
    let product = SURD_MULTIPLIER * embedded;
    let verdict = SurdVerdict {
        probe: SURD_PROBE,
        multiplier: SURD_MULTIPLIER,
        embedded,
        product,
        classification: if product.is_rational() {
            Classification::Balanced
        } else {
            Classification::Constant
        },
    };
    debug_assert!(
        verdict.values().iter().all(|s| s.height() <= SURD_BOUND),
        "surd solver left the bounded subset: {verdict:?}"
    );
    verdict
}
