//! Exit criteria. Each criterion prints one PASS/FAIL line; the suite fails
//! if any criterion does. Every comparison is exact equality.
//!
//! Run with `cargo test -p dequant-core --test acceptance -- --nocapture`.

use dequant_core::dequant::{self, CfBox, FamilySign, SURD_BOUND};
use dequant_core::oracle::{classify_baseline, BitFn, Classification, OracleHandle};
use dequant_core::quantum::{self, Mat4, State4};
use dequant_core::report::{self, FamilyParams, Method};
use dequant_core::selftest::Sampler;
use dequant_core::{GaussRat, Rat, Surd2};
use num_integer::Integer;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn r(n: i64, d: i64) -> Rat {
    Rat::new(n, d).unwrap()
}

fn bit(b: u8) -> Rat {
    Rat::from(b as i64)
}

// Independent reference circuit: plain rational arrays, permutation-built
// oracle, Hadamard from the parity formula (−1)^{popcount(i∧j)} / 2.

type RatMat = [[Rat; 4]; 4];

fn ref_hadamard() -> RatMat {
    let mut m = [[Rat::ZERO; 4]; 4];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            let sign = if (i & j).count_ones() % 2 == 0 { 1 } else { -1 };
            *x = r(sign, 2);
        }
    }
    m
}

fn ref_oracle(f: BitFn) -> RatMat {
    let mut m = [[Rat::ZERO; 4]; 4];
    for x in 0..2usize {
        for y in 0..2usize {
            let fx = f.eval(x == 1) as usize;
            m[2 * x + (y ^ fx)][2 * x + y] = Rat::ONE;
        }
    }
    m
}

fn ref_mul(a: &RatMat, b: &RatMat) -> RatMat {
    let mut m = [[Rat::ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            m[i][j] = (0..4).fold(Rat::ZERO, |acc, k| acc + a[i][k] * b[k][j]);
        }
    }
    m
}

fn ref_apply(a: &RatMat, v: [Rat; 4]) -> [Rat; 4] {
    let mut out = [Rat::ZERO; 4];
    for i in 0..4 {
        out[i] = (0..4).fold(Rat::ZERO, |acc, k| acc + a[i][k] * v[k]);
    }
    out
}

fn ref_identity() -> RatMat {
    let mut m = [[Rat::ZERO; 4]; 4];
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = Rat::ONE;
    }
    m
}

fn to_mat(m: &RatMat) -> Mat4 {
    Mat4::from_rats(*m)
}

fn criterion_1() -> Outcome {
    for f in BitFn::ALL {
        let mut h = OracleHandle::new(f);
        let (d, c) = quantum::run_deutsch(&mut h).map_err(|e| e.to_string())?;
        let (want, kind) = if f.f0() == f.f1() {
            ([0, 1, 0, 0], Classification::Constant)
        } else {
            ([0, 0, 0, 1], Classification::Balanced)
        };
        check(d.probabilities() == want.map(bit), || format!("{f}: {d}"))?;
        check(c == kind, || format!("{f}: {c}"))?;
        check(d.output(1).is_zero() && d.output(3).is_zero(), || {
            format!("{f}: {d}")
        })?;
    }
    Ok("4 oracles, distributions and classifications exact".into())
}

fn criterion_2() -> Outcome {
    let h = r(1, 2);
    for f in BitFn::ALL {
        let t = quantum::run_circuit(&mut OracleHandle::new(f), &quantum::hadamard4())
            .map_err(|e| e.to_string())?;
        let (a, b) = (bit(f.f0()), bit(f.f1()));
        let hv = [h, -h, h, -h];
        let uhv = [h - a, -h + a, h - b, -h + b];
        let huhv = [Rat::ZERO, Rat::ONE - a - b, Rat::ZERO, b - a];
        // the displayed closed forms agree with the reference circuit
        let v = [Rat::ZERO, Rat::ONE, Rat::ZERO, Rat::ZERO];
        let ref_hv = ref_apply(&ref_hadamard(), v);
        let ref_uhv = ref_apply(&ref_oracle(f), ref_hv);
        let ref_huhv = ref_apply(&ref_hadamard(), ref_uhv);
        check(ref_hv == hv && ref_uhv == uhv && ref_huhv == huhv, || {
            format!("{f}: reference circuit disagrees with closed forms")
        })?;
        check(t.superposed == State4::from_rats(hv), || {
            format!("{f}: HV = {}", t.superposed)
        })?;
        check(t.queried == State4::from_rats(uhv), || {
            format!("{f}: U_f HV = {}", t.queried)
        })?;
        check(t.interfered == State4::from_rats(huhv), || {
            format!("{f}: H U_f H V = {}", t.interfered)
        })?;
    }
    Ok("HV, U_f HV, H U_f H V exact for 4 oracles".into())
}

fn criterion_3() -> Outcome {
    for f in BitFn::ALL {
        let mut h = OracleHandle::new(f);
        let kicked = quantum::kickback_state(&mut h);
        let hv = quantum::hadamard4()
            .apply(&quantum::initial_state())
            .map_err(|e| e.to_string())?;
        let mut h2 = OracleHandle::new(f);
        let stepped = quantum::OracleGate::new(&mut h2)
            .apply(&hv)
            .map_err(|e| e.to_string())?;
        check(kicked == stepped, || format!("{f}: {kicked} vs {stepped}"))?;
        check(h.query_count() == 1 && h2.query_count() == 1, || {
            format!("{f}: query accounting")
        })?;
    }
    Ok("closed form equals U_f H V for 4 oracles".into())
}

fn criterion_4() -> Outcome {
    let h = quantum::hadamard4();
    check(h == to_mat(&ref_hadamard()), || {
        "H differs from parity formula".into()
    })?;
    check(h.is_unitary(), || "H not unitary".into())?;
    check(
        h.checked_mul(&h).map_err(|e| e.to_string())? == Mat4::identity(),
        || "H*H != I".into(),
    )?;
    check(
        ref_mul(&ref_hadamard(), &ref_hadamard()) == ref_identity(),
        || "reference H*H != I".into(),
    )?;
    for f in BitFn::ALL {
        let u = quantum::oracle_matrix(f);
        check(u == to_mat(&ref_oracle(f)), || {
            format!("U_{f} differs from permutation")
        })?;
        check(u.is_unitary(), || format!("U_{f} not unitary"))?;
    }
    Ok("H and 4 oracle matrices unitary, H*H = I".into())
}

fn criterion_5() -> Outcome {
    let table = [
        ("00", GaussRat::int(0, 2)),
        ("01", GaussRat::int(-2, 0)),
        ("10", GaussRat::int(2, 0)),
        ("11", GaussRat::int(0, -2)),
    ];
    for (text, want) in table {
        let f: BitFn = text.parse().unwrap();
        let mut probe = OracleHandle::new(f);
        let product = GaussRat::int(-1, 1) * CfBox::new(&mut probe).eval(GaussRat::int(1, 1));
        check(product == want, || {
            format!("{f}: (i-1)C_f(1+i) = {product}")
        })?;
        let mut h = OracleHandle::new(f);
        let v = dequant::solve_gauss(&mut h);
        check(v.product == want, || {
            format!("{f}: solver product {}", v.product)
        })?;
        check(
            v.classification == classify_baseline(&mut OracleHandle::new(f)),
            || format!("{f}: {}", v.classification),
        )?;
        check(h.query_count() == 1, || {
            format!("{f}: {} queries", h.query_count())
        })?;
    }
    Ok("products 2i, -2, 2, -2i; 4/4 correct at 1 query".into())
}

fn criterion_6() -> Outcome {
    let table = [
        ("00", Surd2::new(-3, 2)),
        ("01", Surd2::new(1, 0)),
        ("10", Surd2::new(-1, 0)),
        ("11", Surd2::new(3, -2)),
    ];
    for (text, want) in table {
        let f: BitFn = text.parse().unwrap();
        let mut h = OracleHandle::new(f);
        let v = dequant::solve_surd(&mut h);
        check(v.product == want, || format!("{f}: product {}", v.product))?;
        check(v.classification == f.kind(), || {
            format!("{f}: {}", v.classification)
        })?;
        check(h.query_count() == 1, || {
            format!("{f}: {} queries", h.query_count())
        })?;
        for s in v.values() {
            check(s.a.abs() <= 3 && s.b.abs() <= 3, || {
                format!("{f}: {s} outside |a|,|b| <= 3")
            })?;
        }
    }
    check(SURD_BOUND == 3, || "bound constant".into())?;
    Ok("products 2√2-3, 1, -1, 3-2√2; bound |a|,|b| <= 3 holds".into())
}

fn criterion_7() -> Outcome {
    let mut sampler = Sampler::new(7, 50);
    let mut checks = 0;
    for _ in 0..100 {
        let a = sampler.nonzero_rat();
        check(a.num().abs() <= 50 && a.den() <= 50, || {
            format!("a = {a} out of range")
        })?;
        for sign in [FamilySign::Minus, FamilySign::Plus] {
            for f in BitFn::ALL {
                let mut h = OracleHandle::new(f);
                let v = dequant::solve_gauss_family(&mut h, a, sign).map_err(|e| e.to_string())?;
                let truth = classify_baseline(&mut OracleHandle::new(f));
                check(v.classification == truth, || {
                    format!("a={a} {sign} {f}: {}", v.classification)
                })?;
                check(h.query_count() == 1, || {
                    format!("a={a} {sign} {f}: {} queries", h.query_count())
                })?;
                checks += 1;
            }
        }
    }
    check(checks >= 800, || format!("only {checks} checks"))?;
    Ok(format!("{checks} exact checks over 100 values of a"))
}

fn criterion_8() -> Outcome {
    for f in BitFn::ALL {
        for m in Method::ALL {
            let rep = report::run(f, m, FamilyParams::default()).map_err(|e| e.to_string())?;
            let want = if m == Method::Baseline { 2 } else { 1 };
            check(rep.queries == want, || {
                format!("{f} {m}: {} queries", rep.queries)
            })?;
        }
        let mut h = OracleHandle::new(f);
        classify_baseline(&mut h);
        check(h.query_count() == 2, || {
            format!("{f}: baseline {}", h.query_count())
        })?;
    }
    Ok("baseline 2 queries; quantum, gauss, family, surd 1 query".into())
}

fn criterion_9() -> Outcome {
    let params = [
        FamilyParams::default(),
        FamilyParams::new(r(-3, 7), FamilySign::Minus).unwrap(),
    ];
    for p in params {
        for f in BitFn::ALL {
            let truth = if f.eval(false) == f.eval(true) {
                Classification::Constant
            } else {
                Classification::Balanced
            };
            for m in Method::ALL {
                let rep = report::run(f, m, p).map_err(|e| e.to_string())?;
                check(rep.classification == truth, || {
                    format!("{f} {m}: {}", rep.classification)
                })?;
            }
        }
    }
    Ok("5 methods agree with ground truth on 4 oracles".into())
}

fn criterion_10() -> Outcome {
    const N: usize = 200;
    let mut s = Sampler::new(10, 50);
    let mut cases = 0;
    for _ in 0..N {
        // ring laws
        let (x, y, z) = (s.rat(), s.rat(), s.rat());
        check(
            (x + y) + z == x + (y + z) && x * (y + z) == x * y + x * z && x * y == y * x,
            || format!("rat laws at {x}, {y}, {z}"),
        )?;
        let (p, q, w) = (s.gauss(), s.gauss(), s.gauss());
        check(
            (p * q) * w == p * (q * w) && p * (q + w) == p * q + p * w && p + q == q + p,
            || format!("gauss laws at {p}, {q}, {w}"),
        )?;
        let (a, b, c) = (s.surd(), s.surd(), s.surd());
        check(
            (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a,
            || format!("surd laws at {a}, {b}, {c}"),
        )?;
        // canonical form
        for v in [x + y, x * y, x - y] {
            check(v.den() > 0 && v.num().gcd(&v.den()) == 1, || {
                format!("{v:?} not canonical")
            })?;
        }
        // involutions
        check(p.conj().conj() == p && a.conj().conj() == a, || {
            format!("involution at {p}, {a}")
        })?;
        // norms
        let n = p * p.conj();
        check(n.im.is_zero() && n.re >= Rat::ZERO, || {
            format!("gauss norm at {p}")
        })?;
        check((a * a.conj()).b == 0, || format!("surd norm at {a}"))?;
        // embedding linearity, every function
        for f in BitFn::ALL {
            check(
                dequant::embed_gauss(f, p + q)
                    == dequant::embed_gauss(f, p) + dequant::embed_gauss(f, q),
                || format!("additivity of C_{f} at {p}, {q}"),
            )?;
            check(
                dequant::embed_gauss(f, p.scale(x).unwrap())
                    == dequant::embed_gauss(f, p).scale(x).unwrap(),
                || format!("homogeneity of C_{f} at {p}, {x}"),
            )?;
        }
        cases += 1;
    }
    check(cases >= N, || format!("{cases} samples"))?;
    Ok(format!("{cases} samples per suite, zero failures"))
}

#[test]
fn acceptance_suite() {
    let criteria: [Criterion; 10] = [
        ("1 quantum correctness", criterion_1),
        ("2 intermediate states", criterion_2),
        ("3 phase kickback equivalence", criterion_3),
        ("4 unitarity", criterion_4),
        ("5 Q[i] product table", criterion_5),
        ("6 Z[sqrt2] product table", criterion_6),
        ("7 scaled family", criterion_7),
        ("8 query counts", criterion_8),
        ("9 method agreement", criterion_9),
        ("10 property suites", criterion_10),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                println!("FAIL  criterion {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
