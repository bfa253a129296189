//! Exact arithmetic over ℚ, ℚ[i] and ℤ[√2].
//!
//! Nothing in this crate touches floating point. Integers are 64-bit and
//! every operation is overflow-checked: the `checked_*` methods report
//! [`Error::Overflow`](crate::Error::Overflow), the operator impls panic.
//!
//! Text forms are `n/d`, `a+bi` and `a+b√2`, with unit coefficients
//! omitted and signs folded (`1-i`, never `1+-1i`). Parsing also accepts
//! the typographic minus `−`.

mod gauss;
mod rat;
mod surd;

pub use gauss::GaussRat;
pub use rat::Rat;
pub use surd::Surd2;

/// Splits `a+b<unit>` into its real text and unit-coefficient text.
///
/// Returns `(real, coeff)` where either may be absent; a bare sign or an
/// empty coefficient stands for ±1 and is returned as-is.
pub(crate) fn split_components<'a>(
    text: &'a str,
    units: &[&str],
) -> (Option<&'a str>, Option<&'a str>) {
    let Some(body) = units.iter().find_map(|u| text.strip_suffix(u)) else {
        return (Some(text), None);
    };
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    match split {
        Some(i) => (Some(&body[..i]), Some(&body[i..])),
        None => (None, Some(body)),
    }
}

/// Writes `real (+|-) |coeff| unit`, dropping zero parts and unit
/// coefficients. `coeff_abs` is the already-rendered magnitude.
pub(crate) fn write_components(
    f: &mut std::fmt::Formatter<'_>,
    real: Option<String>,
    coeff_negative: bool,
    coeff_abs: Option<String>,
    unit: &str,
) -> std::fmt::Result {
    match (real, coeff_abs) {
        (None, None) => f.write_str("0"),
        (Some(re), None) => f.write_str(&re),
        (re, Some(mag)) => {
            if let Some(re) = &re {
                f.write_str(re)?;
                f.write_str(if coeff_negative { "-" } else { "+" })?;
            } else if coeff_negative {
                f.write_str("-")?;
            }
            if mag != "1" {
                f.write_str(&mag)?;
            }
            f.write_str(unit)
        }
    }
}
