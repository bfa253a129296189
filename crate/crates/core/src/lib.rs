//! Deutsch's problem solved three ways under one query budget.
//!
//! * [`quantum`]: the two-qubit circuit `H · U_f · H |01⟩`, simulated exactly.
//! * [`dequant`]: classical single-query solvers that embed the hidden
//!   function into ℚ[i] or ℤ[√2].
//! * [`oracle`]: the black box itself and the two-query classical baseline.
//!
//! All arithmetic is exact ([`exactnum`]); all comparisons are equalities.

pub mod dequant;
mod error;
pub mod exactnum;
pub mod oracle;
pub mod quantum;
pub mod report;
pub mod selftest;

pub use error::{Error, Result};
pub use exactnum::{GaussRat, Rat, Surd2};
pub use oracle::{classify_baseline, BitFn, Classification, OracleHandle};
