use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactnum::{GaussRat, Rat};

/// Two-qubit state vector over ℚ[i].
///
/// Index `k` (0-based) holds the amplitude of basis state `|k₁k₀⟩` in the
/// order `|00⟩, |01⟩, |10⟩, |11⟩`, i.e. measurement outputs 1 to 4.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct State4 {
    amp: [GaussRat; 4],
}

impl State4 {
    pub const fn new(amp: [GaussRat; 4]) -> State4 {
        State4 { amp }
    }

    pub fn from_rats(amp: [Rat; 4]) -> State4 {
        State4::new(amp.map(GaussRat::real))
    }

    /// Computational basis vector for output `index` (0-based).
    pub fn basis(index: usize) -> State4 {
        let mut amp = [GaussRat::ZERO; 4];
        amp[index] = GaussRat::ONE;
        State4 { amp }
    }

    pub fn amplitudes(&self) -> &[GaussRat; 4] {
        &self.amp
    }

    pub fn amplitude(&self, index: usize) -> GaussRat {
        self.amp[index]
    }

    /// `Σ |amp_k|²`.
    pub fn norm_sqr(&self) -> Result<Rat> {
        self.amp
            .iter()
            .try_fold(Rat::ZERO, |acc, z| acc.checked_add(z.norm_sqr()?))
    }

    pub fn is_real(&self) -> bool {
        self.amp.iter().all(|z| z.is_real())
    }
}

impl fmt::Display for State4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.amp)
    }
}

impl FromStr for State4 {
    type Err = Error;

    fn from_str(s: &str) -> Result<State4> {
        let parts = parse_tuple(s, "state")?;
        let mut amp = [GaussRat::ZERO; 4];
        for (slot, text) in amp.iter_mut().zip(parts) {
            *slot = text.parse()?;
        }
        Ok(State4 { amp })
    }
}

pub(crate) fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    f.write_str("(")?;
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{item}")?;
    }
    f.write_str(")")
}

pub(crate) fn parse_tuple<'a>(s: &'a str, kind: &'static str) -> Result<[&'a str; 4]> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::parse(kind, s))?;
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    parts.try_into().map_err(|_| Error::parse(kind, s))
}

/// 4×4 matrix over ℚ[i], row-major, 0-based indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mat4 {
    rows: [[GaussRat; 4]; 4],
}

impl Mat4 {
    pub const fn new(rows: [[GaussRat; 4]; 4]) -> Mat4 {
        Mat4 { rows }
    }

    pub fn from_rats(rows: [[Rat; 4]; 4]) -> Mat4 {
        Mat4::new(rows.map(|r| r.map(GaussRat::real)))
    }

    pub fn zero() -> Mat4 {
        Mat4::new([[GaussRat::ZERO; 4]; 4])
    }

    pub fn identity() -> Mat4 {
        let mut m = Mat4::zero();
        for k in 0..4 {
            m.rows[k][k] = GaussRat::ONE;
        }
        m
    }

    pub fn entry(&self, row: usize, col: usize) -> GaussRat {
        self.rows[row][col]
    }

    /// Copy with one entry replaced.
    pub fn with_entry(mut self, row: usize, col: usize, value: GaussRat) -> Mat4 {
        self.rows[row][col] = value;
        self
    }

    pub fn rows(&self) -> &[[GaussRat; 4]; 4] {
        &self.rows
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat4 {
        let mut out = Mat4::zero();
        for r in 0..4 {
            for c in 0..4 {
                out.rows[c][r] = self.rows[r][c].conj();
            }
        }
        out
    }

    pub fn checked_mul(&self, rhs: &Mat4) -> Result<Mat4> {
        let mut out = Mat4::zero();
        for r in 0..4 {
            for c in 0..4 {
                out.rows[r][c] = (0..4).try_fold(GaussRat::ZERO, |acc, k| {
                    acc.checked_add(self.rows[r][k].checked_mul(rhs.rows[k][c])?)
                })?;
            }
        }
        Ok(out)
    }

    /// Exact matrix-vector product.
    pub fn apply(&self, v: &State4) -> Result<State4> {
        let mut amp = [GaussRat::ZERO; 4];
        for (r, slot) in amp.iter_mut().enumerate() {
            *slot = (0..4).try_fold(GaussRat::ZERO, |acc, k| {
                acc.checked_add(self.rows[r][k].checked_mul(v.amp[k])?)
            })?;
        }
        Ok(State4 { amp })
    }

    /// `M·M† = I` exactly. A product that overflows is not unitary.
    pub fn is_unitary(&self) -> bool {
        self.checked_mul(&self.adjoint())
            .is_ok_and(|p| p == Mat4::identity())
    }
}

impl fmt::Display for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write_tuple(f, row)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_apply_is_noop() {
        let v = State4::from_rats([Rat::HALF, -Rat::HALF, Rat::new(1, 3).unwrap(), Rat::ZERO]);
        assert_eq!(Mat4::identity().apply(&v).unwrap(), v);
    }

    #[test]
    fn zero_matrix_is_not_unitary() {
        assert!(!Mat4::zero().is_unitary());
        assert!(Mat4::identity().is_unitary());
    }

    #[test]
    fn diagonal_phase_matrix_is_unitary() {
        let m =
            Mat4::identity()
                .with_entry(1, 1, GaussRat::I)
                .with_entry(2, 2, GaussRat::int(-1, 0));
        assert!(m.is_unitary());
        assert_eq!(m.adjoint().entry(1, 1), GaussRat::int(0, -1));
    }

    #[test]
    fn state_text_round_trip() {
        let v = State4::new([
            GaussRat::int(0, 1),
            GaussRat::new(Rat::HALF, -Rat::HALF),
            GaussRat::ZERO,
            GaussRat::int(-1, 0),
        ]);
        assert_eq!(v.to_string(), "(i,1/2-1/2i,0,-1)");
        assert_eq!(v.to_string().parse::<State4>().unwrap(), v);
        assert!("(0,1,0)".parse::<State4>().is_err());
        assert!("0,1,0,0".parse::<State4>().is_err());
    }

    #[test]
    fn basis_norm() {
        for k in 0..4 {
            assert_eq!(State4::basis(k).norm_sqr().unwrap(), Rat::ONE);
        }
    }
}
