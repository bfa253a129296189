//! Runtime invariant suite behind `dequant selftest`.
//!
//! Every check is exact. The [`Fixture`] carries the pieces a mutation test
//! wants to swap out: the Hadamard matrix and the ℚ[i] decision rule.

use std::fmt;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dequant::{self, CfBox, FamilySign};
use crate::error::Result;
use crate::exactnum::{GaussRat, Rat, Surd2};
use crate::oracle::{self, BitFn, Classification, OracleHandle};
use crate::quantum::{self, Mat4, State4};
use crate::report::{self, FamilyParams, Method};

/// Seeded generator of small exact values.
pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Sampler {
    /// Numerators in `[-bound, bound]`, denominators in `[1, bound]`.
    pub fn new(seed: u64, bound: i64) -> Sampler {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound,
        }
    }

    pub fn int(&mut self) -> i64 {
        self.rng.gen_range(-self.bound..=self.bound)
    }

    pub fn rat(&mut self) -> Rat {
        let den = self.rng.gen_range(1..=self.bound);
        Rat::new(self.int(), den).expect("nonzero denominator")
    }

    /// Numerator and denominator both drawn from `[-bound, bound] \ {0}`.
    pub fn nonzero_rat(&mut self) -> Rat {
        let mut pick = || loop {
            let x = self.int();
            if x != 0 {
                return x;
            }
        };
        let (n, d) = (pick(), pick());
        Rat::new(n, d).expect("nonzero denominator")
    }

    pub fn gauss(&mut self) -> GaussRat {
        GaussRat::new(self.rat(), self.rat())
    }

    pub fn surd(&mut self) -> Surd2 {
        Surd2::new(self.int(), self.int())
    }

    pub fn bitfn(&mut self) -> BitFn {
        BitFn::ALL[self.rng.gen_range(0..4)]
    }
}

/// What the suite runs against.
#[derive(Clone)]
pub struct Fixture {
    pub hadamard: Mat4,
    pub gauss_rule: fn(GaussRat) -> Classification,
    pub seed: u64,
    /// Sampled values per property check.
    pub samples: usize,
}

impl Default for Fixture {
    fn default() -> Self {
        Fixture {
            hadamard: quantum::hadamard4(),
            gauss_rule: dequant::gauss_decision,
            seed: 0x5eed,
            samples: 200,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS  {} ({} cases)", self.name, self.cases),
            Some(why) => write!(f, "FAIL  {}: {}", self.name, why),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SelfTestReport {
    pub checks: Vec<CheckOutcome>,
}

impl SelfTestReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn find(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SelfTestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.failures().count();
        let total = self.checks.len();
        if failed == 0 {
            write!(f, "{total} checks, all checks passed")
        } else {
            write!(f, "{total} checks, {failed} failed")
        }
    }
}

type CheckResult = std::result::Result<usize, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

type Check = (&'static str, fn(&Fixture) -> CheckResult);

const CHECKS: &[Check] = &[
    ("rational canonical form", check_canonical),
    ("rational ring laws", check_rat_ring),
    ("gaussian ring laws", check_gauss_ring),
    ("surd ring laws", check_surd_ring),
    ("conjugation involutions", check_conj_involution),
    ("gaussian norm is real and nonnegative", check_gauss_norm),
    ("surd norm is rational", check_surd_norm),
    ("text round trip", check_text_round_trip),
    ("baseline matches ground truth at 2 queries", check_baseline),
    ("zero-query strategies fail", check_zero_query),
    ("query counter is monotone", check_counter),
    ("hadamard is unitary and self-inverse", check_hadamard),
    ("oracle matrices are unitary", check_oracle_unitary),
    ("intermediate states", check_intermediate_states),
    ("kickback equivalence", check_kickback),
    ("probability dichotomy", check_dichotomy),
    (
        "normalization and realness along the circuit",
        check_normalization,
    ),
    (
        "quantum agrees with baseline at 1 query",
        check_quantum_agreement,
    ),
    ("embedding closed forms", check_embedding_closed_forms),
    ("embedding linearity", check_embedding_linearity),
    ("gaussian product table", check_gauss_table),
    ("surd product table and bound", check_surd_table),
    ("family agrees with baseline", check_family),
    ("all methods agree", check_all_methods),
];

/// Names of every check, in run order.
pub fn check_names() -> impl Iterator<Item = &'static str> {
    CHECKS.iter().map(|(name, _)| *name)
}

pub fn run_all(fixture: &Fixture) -> SelfTestReport {
    let checks = CHECKS
        .iter()
        .map(|&(name, check)| match check(fixture) {
            Ok(cases) => CheckOutcome {
                name,
                cases,
                failure: None,
            },
            Err(why) => CheckOutcome {
                name,
                cases: 0,
                failure: Some(why),
            },
        })
        .collect();
    SelfTestReport { checks }
}

fn sampler(fx: &Fixture, salt: u64) -> Sampler {
    Sampler::new(fx.seed ^ salt, 50)
}

fn canonical(r: Rat) -> bool {
    r.den() > 0 && r.num().gcd(&r.den()) == 1
}

fn check_canonical(fx: &Fixture) -> CheckResult {
    let mut s = sampler(fx, 1);
    for _ in 0..fx.samples {
        let (x, y) = (s.rat(), s.rat());
        for r in [
            lift(x.checked_add(y))?,
            lift(x.checked_sub(y))?,
            lift(x.checked_mul(y))?,
            lift(x.checked_neg())?,
        ] {
            ensure(canonical(r), || format!("{r:?} from {x:?}, {y:?}"))?;
        }
        let z = lift(GaussRat::new(x, y).checked_mul(GaussRat::new(y, x)))?;
        ensure(canonical(z.re) && canonical(z.im), || format!("{z:?}"))?;
    }
    Ok(fx.samples)
}

macro_rules! ring_laws {
    ($name:ident, $gen:ident, $zero:expr, $one:expr, $salt:expr) => {
        fn $name(fx: &Fixture) -> CheckResult {
            let mut s = sampler(fx, $salt);
            for _ in 0..fx.samples {
                let (x, y, z) = (s.$gen(), s.$gen(), s.$gen());
                let add = |a, b| lift(Integral::add(a, b));
                let mul = |a, b| lift(Integral::mul(a, b));
                let what = || format!("{x:?}, {y:?}, {z:?}");
                ensure(add(add(x, y)?, z)? == add(x, add(y, z)?)?, || {
                    format!("+ assoc: {}", what())
                })?;
                ensure(mul(mul(x, y)?, z)? == mul(x, mul(y, z)?)?, || {
                    format!("* assoc: {}", what())
                })?;
                ensure(add(x, y)? == add(y, x)?, || format!("+ comm: {}", what()))?;
                ensure(mul(x, y)? == mul(y, x)?, || format!("* comm: {}", what()))?;
                ensure(mul(x, add(y, z)?)? == add(mul(x, y)?, mul(x, z)?)?, || {
                    format!("distrib: {}", what())
                })?;
                ensure(add(x, $zero)? == x && mul(x, $one)? == x, || {
                    format!("identity: {}", what())
                })?;
            }
            Ok(fx.samples)
        }
    };
}

/// Checked ring operations shared by the three number types.
trait Integral: Sized + Copy {
    fn add(a: Self, b: Self) -> Result<Self>;
    fn mul(a: Self, b: Self) -> Result<Self>;
}

impl Integral for Rat {
    fn add(a: Self, b: Self) -> Result<Self> {
        a.checked_add(b)
    }
    fn mul(a: Self, b: Self) -> Result<Self> {
        a.checked_mul(b)
    }
}

impl Integral for GaussRat {
    fn add(a: Self, b: Self) -> Result<Self> {
        a.checked_add(b)
    }
    fn mul(a: Self, b: Self) -> Result<Self> {
        a.checked_mul(b)
    }
}

impl Integral for Surd2 {
    fn add(a: Self, b: Self) -> Result<Self> {
        a.checked_add(b)
    }
    fn mul(a: Self, b: Self) -> Result<Self> {
        a.checked_mul(b)
    }
}

ring_laws!(check_rat_ring, rat, Rat::ZERO, Rat::ONE, 2);
ring_laws!(check_gauss_ring, gauss, GaussRat::ZERO, GaussRat::ONE, 3);
ring_laws!(check_surd_ring, surd, Surd2::ZERO, Surd2::ONE, 4);

fn check_conj_involution(fx: &Fixture) -> CheckResult {
    let mut s = sampler(fx, 5);
    for _ in 0..fx.samples {
        let z = s.gauss();
        ensure(z.conj().conj() == z, || format!("{z:?}"))?;
        let w = s.surd();
        ensure(w.conj().conj() == w, || format!("{w:?}"))?;
    }
    Ok(2 * fx.samples)
}

fn check_gauss_norm(fx: &Fixture) -> CheckResult {
    let mut s = sampler(fx, 6);
    for _ in 0..fx.samples {
        let z = s.gauss();
        let n = lift(z.checked_mul(z.conj()))?;
        ensure(n.is_real() && n.re >= Rat::ZERO, || {
            format!("{z:?} * conj = {n:?}")
        })?;
    }
    Ok(fx.samples)
}

fn check_surd_norm(fx: &Fixture) -> CheckResult {
    let mut s = sampler(fx, 7);
    for _ in 0..fx.samples {
        let x = s.surd();
        let n = lift(x.checked_mul(x.conj()))?;
        let expected = lift(x.norm())?;
        ensure(n.is_rational() && n.a == expected, || {
            format!("{x:?} * conj = {n:?}")
        })?;
    }
    Ok(fx.samples)
}

fn check_text_round_trip(fx: &Fixture) -> CheckResult {
    let mut s = sampler(fx, 8);
    for _ in 0..fx.samples {
        let r = s.rat();
        ensure(r.to_string().parse::<Rat>() == Ok(r), || r.to_string())?;
        let z = s.gauss();
        ensure(z.to_string().parse::<GaussRat>() == Ok(z), || z.to_string())?;
        let w = s.surd();
        ensure(w.to_string().parse::<Surd2>() == Ok(w), || w.to_string())?;
    }
    Ok(3 * fx.samples)
}

fn check_baseline(_: &Fixture) -> CheckResult {
    for f in BitFn::ALL {
        let mut h = OracleHandle::new(f);
        let c = oracle::classify_baseline(&mut h);
        ensure(c == f.kind(), || format!("{f}: got {c}"))?;
        ensure(h.query_count() == 2, || {
            format!("{f}: {} queries", h.query_count())
        })?;
    }
    Ok(4)
}

fn check_zero_query(_: &Fixture) -> CheckResult {
    for guess in [Classification::Constant, Classification::Balanced] {
        ensure(BitFn::ALL.iter().any(|f| f.kind() != guess), || {
            format!("always answering {guess} is never wrong")
        })?;
    }
    Ok(2)
}

fn check_counter(fx: &Fixture) -> CheckResult {
    let mut s = sampler(fx, 9);
    let mut h = OracleHandle::new(s.bitfn());
    let mut last = h.query_count();
    for step in 0..fx.samples {
        let cost = match s.rng.gen_range(0..7) {
            0 => {
                h.query(s.rng.gen());
                1
            }
            1 => {
                oracle::classify_baseline(&mut h);
                2
            }
            2 => {
                lift(quantum::run_deutsch(&mut h))?;
                1
            }
            3 => {
                dequant::solve_gauss(&mut h);
                1
            }
            4 => {
                dequant::solve_surd(&mut h);
                1
            }
            5 => {
                quantum::kickback_state(&mut h);
                1
            }
            _ => {
                let _ = h.query_count();
                0
            }
        };
        let now = h.query_count();
        ensure(now == last + cost, || {
            format!("step {step}: {last} -> {now}, expected +{cost}")
        })?;
        last = now;
    }
    Ok(fx.samples)
}

fn check_hadamard(fx: &Fixture) -> CheckResult {
    let h = &fx.hadamard;
    ensure(h.is_unitary(), || "H is not unitary".into())?;
    ensure(lift(h.checked_mul(h))? == Mat4::identity(), || {
        "H*H != I".into()
    })?;
    Ok(2)
}

fn check_oracle_unitary(_: &Fixture) -> CheckResult {
    for f in BitFn::ALL {
        ensure(quantum::oracle_matrix(f).is_unitary(), || {
            format!("U_{f} not unitary")
        })?;
    }
    Ok(4)
}

fn half_shift(bit: u8, sign: i64) -> Rat {
    // sign·(1/2 − bit)
    Rat::from(sign) * (Rat::HALF - Rat::from(bit as i64))
}

fn check_intermediate_states(fx: &Fixture) -> CheckResult {
    for f in BitFn::ALL {
        let t = lift(quantum::run_circuit(
            &mut OracleHandle::new(f),
            &fx.hadamard,
        ))?;
        let h = Rat::HALF;
        let hv = State4::from_rats([h, -h, h, -h]);
        ensure(t.superposed == hv, || format!("{f}: HV = {}", t.superposed))?;
        let (a, b) = (f.f0(), f.f1());
        let queried = State4::from_rats([
            half_shift(a, 1),
            half_shift(a, -1),
            half_shift(b, 1),
            half_shift(b, -1),
        ]);
        ensure(t.queried == queried, || {
            format!("{f}: U_f HV = {}", t.queried)
        })?;
        let (a, b) = (Rat::from(a as i64), Rat::from(b as i64));
        let last = State4::from_rats([Rat::ZERO, Rat::ONE - a - b, Rat::ZERO, b - a]);
        ensure(t.interfered == last, || {
            format!("{f}: H U_f H V = {}", t.interfered)
        })?;
    }
    Ok(12)
}

fn check_kickback(fx: &Fixture) -> CheckResult {
    for f in BitFn::ALL {
        let hv = lift(fx.hadamard.apply(&quantum::initial_state()))?;
        let stepped = lift(quantum::oracle_matrix(f).apply(&hv))?;
        let mut h = OracleHandle::new(f);
        let closed = quantum::kickback_state(&mut h);
        ensure(closed == stepped, || format!("{f}: {closed} vs {stepped}"))?;
        ensure(h.query_count() == 1, || {
            format!("{f}: kickback charged {}", h.query_count())
        })?;
    }
    Ok(4)
}

fn check_dichotomy(fx: &Fixture) -> CheckResult {
    for f in BitFn::ALL {
        let t = lift(quantum::run_circuit(
            &mut OracleHandle::new(f),
            &fx.hadamard,
        ))?;
        let d = t.distribution;
        ensure(d.output(1).is_zero() && d.output(3).is_zero(), || {
            format!("{f}: {d}")
        })?;
        ensure(d.output(2) + d.output(4) == Rat::ONE, || {
            format!("{f}: {d}")
        })?;
        ensure((d.output(2) * d.output(4)).is_zero(), || {
            format!("{f}: {d}")
        })?;
    }
    Ok(4)
}

fn check_normalization(fx: &Fixture) -> CheckResult {
    for f in BitFn::ALL {
        let t = lift(quantum::run_circuit(
            &mut OracleHandle::new(f),
            &fx.hadamard,
        ))?;
        for v in [t.initial, t.superposed, t.queried, t.interfered] {
            ensure(lift(v.norm_sqr())? == Rat::ONE, || {
                format!("{f}: {v} not normalized")
            })?;
            ensure(v.is_real(), || format!("{f}: {v} has an imaginary part"))?;
        }
    }
    Ok(16)
}

fn check_quantum_agreement(fx: &Fixture) -> CheckResult {
    for f in BitFn::ALL {
        let mut h = OracleHandle::new(f);
        let t = lift(quantum::run_circuit(&mut h, &fx.hadamard))?;
        ensure(t.classification == f.kind(), || {
            format!("{f}: got {}", t.classification)
        })?;
        ensure(h.query_count() == 1, || {
            format!("{f}: {} queries", h.query_count())
        })?;
    }
    Ok(4)
}

fn check_embedding_closed_forms(fx: &Fixture) -> CheckResult {
    type ClosedForm = fn(GaussRat) -> GaussRat;
    let maps: [(BitFn, ClosedForm); 4] = [
        (BitFn::ALL[0], |z| z.conj()),
        (BitFn::ALL[1], |z| z),
        (BitFn::ALL[2], |z| -z),
        (BitFn::ALL[3], |z| -z.conj()),
    ];
    let mut s = sampler(fx, 10);
    for _ in 0..fx.samples {
        let z = s.gauss();
        for (f, closed) in maps {
            let mut h = OracleHandle::new(f);
            let got = CfBox::new(&mut h).eval(z);
            ensure(got == closed(z), || format!("C_{f}({z}) = {got}"))?;
            ensure(h.query_count() == 1, || {
                format!("C_{f} charged {}", h.query_count())
            })?;
        }
    }
    Ok(4 * fx.samples)
}

fn check_embedding_linearity(fx: &Fixture) -> CheckResult {
    let mut s = sampler(fx, 11);
    for _ in 0..fx.samples {
        let f = s.bitfn();
        let (z, w, r) = (s.gauss(), s.gauss(), s.rat());
        let sum = dequant::embed_gauss(f, lift(z.checked_add(w))?);
        let split = lift(dequant::embed_gauss(f, z).checked_add(dequant::embed_gauss(f, w)))?;
        ensure(sum == split, || format!("C_{f} not additive at {z}, {w}"))?;
        let scaled = dequant::embed_gauss(f, lift(z.scale(r))?);
        ensure(scaled == lift(dequant::embed_gauss(f, z).scale(r))?, || {
            format!("C_{f} not homogeneous at {z}, {r}")
        })?;
        let (x, y) = (s.surd(), s.surd());
        let sum = dequant::embed_surd(f, lift(x.checked_add(y))?);
        let split = lift(dequant::embed_surd(f, x).checked_add(dequant::embed_surd(f, y)))?;
        ensure(sum == split, || {
            format!("surd C_{f} not additive at {x}, {y}")
        })?;
    }
    Ok(fx.samples)
}

fn check_gauss_table(fx: &Fixture) -> CheckResult {
    let expected = [
        GaussRat::int(0, 2),
        GaussRat::int(-2, 0),
        GaussRat::int(2, 0),
        GaussRat::int(0, -2),
    ];
    for (f, want) in BitFn::ALL.into_iter().zip(expected) {
        let mut h = OracleHandle::new(f);
        let v = dequant::solve_gauss_with(&mut h, fx.gauss_rule);
        ensure(v.product == want, || format!("{f}: product {}", v.product))?;
        ensure(v.classification == f.kind(), || {
            format!("{f}: classified {}", v.classification)
        })?;
        ensure(h.query_count() == 1, || {
            format!("{f}: {} queries", h.query_count())
        })?;
        ensure(v.product.is_real() != v.product.is_pure_imaginary(), || {
            format!("{f}: {} neither real nor imaginary", v.product)
        })?;
    }
    Ok(4)
}

fn check_surd_table(_: &Fixture) -> CheckResult {
    let expected = [
        Surd2::new(-3, 2),
        Surd2::new(1, 0),
        Surd2::new(-1, 0),
        Surd2::new(3, -2),
    ];
    for (f, want) in BitFn::ALL.into_iter().zip(expected) {
        let mut h = OracleHandle::new(f);
        let v = dequant::solve_surd(&mut h);
        ensure(v.product == want, || format!("{f}: product {}", v.product))?;
        ensure(v.classification == f.kind(), || {
            format!("{f}: classified {}", v.classification)
        })?;
        ensure(h.query_count() == 1, || {
            format!("{f}: {} queries", h.query_count())
        })?;
        for x in v.values() {
            ensure(x.height() <= dequant::SURD_BOUND, || {
                format!("{f}: {x} outside bound")
            })?;
        }
    }
    Ok(4)
}

fn check_family(fx: &Fixture) -> CheckResult {
    let mut s = sampler(fx, 12);
    let mut cases = 0;
    for _ in 0..fx.samples {
        let a = s.nonzero_rat();
        for sign in [FamilySign::Minus, FamilySign::Plus] {
            for f in BitFn::ALL {
                let mut h = OracleHandle::new(f);
                let v = lift(dequant::solve_gauss_family(&mut h, a, sign))?;
                let truth = oracle::classify_baseline(&mut OracleHandle::new(f));
                ensure(v.classification == truth, || {
                    format!("a={a} {sign} {f}: {}", v.classification)
                })?;
                ensure(h.query_count() == 1, || {
                    format!("a={a} {sign} {f}: {} queries", h.query_count())
                })?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn check_all_methods(_: &Fixture) -> CheckResult {
    for params in [
        FamilyParams::default(),
        lift(FamilyParams::new(Rat::from(-7), FamilySign::Minus))?,
    ] {
        for f in BitFn::ALL {
            for m in Method::ALL {
                let r = lift(report::run(f, m, params))?;
                ensure(r.classification == f.kind(), || {
                    format!("{f} {m}: {}", r.classification)
                })?;
                let cost = if m == Method::Baseline { 2 } else { 1 };
                ensure(r.queries == cost, || {
                    format!("{f} {m}: {} queries", r.queries)
                })?;
            }
        }
    }
    Ok(40)
}
