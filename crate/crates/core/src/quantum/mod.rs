//! Exact two-qubit simulation of the quantum algorithm for Deutsch's problem.
//!
//! The circuit is `H · U_f · H` applied to `|01⟩`, where `H` is the two-qubit
//! Hadamard with entries `±1/2`. Every amplitude stays in ℚ, so the final
//! distribution is computed exactly and is always a point mass on output 2
//! (constant) or output 4 (balanced).
//!
//! Basis order is `|00⟩, |01⟩, |10⟩, |11⟩`, matching outputs 1 to 4. The
//! first qubit is the query register, the second the target.

mod linalg;

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use linalg::{Mat4, State4};

use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::oracle::{BitFn, Classification, OracleHandle};

/// The oracle unitary `|x⟩|y⟩ ↦ |x⟩|y ⊕ f(x)⟩` for a known function.
///
/// Block diagonal: the upper block is driven by `f(0)`, the lower by `f(1)`,
/// each either `I₂` or the swap.
pub fn oracle_matrix(f: BitFn) -> Mat4 {
    let (a, b) = (Rat::from(f.f0() as i64), Rat::from(f.f1() as i64));
    let (na, nb) = (Rat::ONE - a, Rat::ONE - b);
    let o = Rat::ZERO;
    Mat4::from_rats([[na, a, o, o], [a, na, o, o], [o, o, nb, b], [o, o, b, nb]])
}

/// Two-qubit Hadamard `H ⊗ H`, entries `±1/2`.
pub fn hadamard4() -> Mat4 {
    let (p, m) = (Rat::HALF, -Rat::HALF);
    Mat4::from_rats([[p, p, p, p], [p, m, p, m], [p, p, m, m], [p, m, m, p]])
}

/// `|01⟩`.
pub fn initial_state() -> State4 {
    State4::basis(1)
}

/// The oracle as a black-box gate. Building it is free; each
/// [`apply`](OracleGate::apply) costs one query on the underlying handle.
pub struct OracleGate<'h> {
    handle: &'h mut OracleHandle,
}

impl<'h> OracleGate<'h> {
    pub fn new(handle: &'h mut OracleHandle) -> Self {
        OracleGate { handle }
    }

    pub fn apply(&mut self, v: &State4) -> Result<State4> {
        let f = self.handle.charge();
        oracle_matrix(f).apply(v)
    }

    pub fn queries(&self) -> u64 {
        self.handle.query_count()
    }
}

/// Phase-kickback closed form
/// `½(−1)^{f(0)} (|0⟩ + (−1)^{f(0)⊕f(1)}|1⟩)(|0⟩ − |1⟩)`, expanded.
pub fn kickback_closed_form(f: BitFn) -> State4 {
    let sign = |bit: u8| if bit == 0 { Rat::ONE } else { -Rat::ONE };
    let global = Rat::HALF * sign(f.f0());
    let control = [Rat::ONE, sign(f.f0() ^ f.f1())];
    let target = [Rat::ONE, -Rat::ONE];
    let mut amp = [Rat::ZERO; 4];
    for x in 0..2 {
        for y in 0..2 {
            amp[2 * x + y] = global * control[x] * target[y];
        }
    }
    State4::from_rats(amp)
}

/// Charged form of [`kickback_closed_form`]: one query.
pub fn kickback_state(h: &mut OracleHandle) -> State4 {
    kickback_closed_form(h.charge())
}

/// Exact output distribution `p_k = |amp_k|²` over outputs 1 to 4.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Distribution4 {
    p: [Rat; 4],
}

impl Distribution4 {
    /// Validates `0 ≤ p_k ≤ 1` and `Σ p_k = 1`.
    pub fn new(p: [Rat; 4]) -> Result<Distribution4> {
        if p.iter().any(|&x| x < Rat::ZERO || x > Rat::ONE) {
            return Err(Error::NotNormalized(format!("{p:?}")));
        }
        let total = p.iter().try_fold(Rat::ZERO, |acc, &x| acc.checked_add(x))?;
        if total != Rat::ONE {
            return Err(Error::NotNormalized(total.to_string()));
        }
        Ok(Distribution4 { p })
    }

    pub fn probabilities(&self) -> [Rat; 4] {
        self.p
    }

    /// Probability of output `k`, numbered 1 to 4.
    pub fn output(&self, k: usize) -> Rat {
        self.p[k - 1]
    }

    /// Draws `shots` outcomes (0-based output indices) with an exact integer
    /// threshold table, seeded for reproducibility.
    pub fn sample_counts(&self, seed: u64, shots: u64) -> [u64; 4] {
        let common = self
            .p
            .iter()
            .fold(1i64, |acc, r| num_integer::lcm(acc, r.den()));
        let weights = self.p.map(|r| r.num() * (common / r.den()));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut counts = [0u64; 4];
        for _ in 0..shots {
            let mut draw = rng.gen_range(0..common);
            for (k, &w) in weights.iter().enumerate() {
                if draw < w {
                    counts[k] += 1;
                    break;
                }
                draw -= w;
            }
        }
        counts
    }
}

impl fmt::Display for Distribution4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        linalg::write_tuple(f, &self.p)
    }
}

impl FromStr for Distribution4 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Distribution4> {
        let parts = linalg::parse_tuple(s, "distribution")?;
        let mut p = [Rat::ZERO; 4];
        for (slot, text) in p.iter_mut().zip(parts) {
            *slot = text.parse()?;
        }
        Distribution4::new(p)
    }
}

/// Measures in the computational basis. Rejects states whose squared
/// magnitudes do not sum to exactly one.
pub fn measure(v: &State4) -> Result<Distribution4> {
    let total = v.norm_sqr()?;
    if total != Rat::ONE {
        return Err(Error::NotNormalized(total.to_string()));
    }
    let mut p = [Rat::ZERO; 4];
    for (slot, z) in p.iter_mut().zip(v.amplitudes()) {
        *slot = z.norm_sqr()?;
    }
    Distribution4::new(p)
}

/// Output 2 means constant, output 4 means balanced.
pub fn decide(dist: &Distribution4) -> Result<Classification> {
    if dist.output(2) == Rat::ONE {
        Ok(Classification::Constant)
    } else if dist.output(4) == Rat::ONE {
        Ok(Classification::Balanced)
    } else {
        Err(Error::Indeterminate(format!(
            "neither output 2 nor output 4 is certain in {dist}"
        )))
    }
}

/// Every intermediate value of one circuit run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub initial: State4,
    pub superposed: State4,
    pub queried: State4,
    pub interfered: State4,
    pub distribution: Distribution4,
    pub classification: Classification,
}

/// Runs the five steps with a caller-supplied Hadamard. One oracle query.
pub fn run_circuit(h: &mut OracleHandle, hadamard: &Mat4) -> Result<Trace> {
    let initial = initial_state();
    let superposed = hadamard.apply(&initial)?;
    let queried = OracleGate::new(h).apply(&superposed)?;
    let interfered = hadamard.apply(&queried)?;
    let distribution = measure(&interfered)?;
    let classification = decide(&distribution)?;
    Ok(Trace {
        initial,
        superposed,
        queried,
        interfered,
        distribution,
        classification,
    })
}

/// The quantum algorithm: `|01⟩ → H → U_f → H → measure`. One query.
pub fn run_deutsch(h: &mut OracleHandle) -> Result<(Distribution4, Classification)> {
    let trace = run_circuit(h, &hadamard4())?;
    Ok((trace.distribution, trace.classification))
}
