use dequant_core::dequant::{self, FamilySign};
use dequant_core::oracle::{self, BitFn, OracleHandle};
use dequant_core::quantum;
use dequant_core::{GaussRat, Rat, Surd2};
use num_integer::Integer;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-1000i64..=1000, 1i64..=1000).prop_map(|(n, d)| Rat::new(n, d).unwrap())
}

fn gauss() -> impl Strategy<Value = GaussRat> {
    (rat(), rat()).prop_map(|(re, im)| GaussRat::new(re, im))
}

fn surd() -> impl Strategy<Value = Surd2> {
    (-10_000i64..=10_000, -10_000i64..=10_000).prop_map(|(a, b)| Surd2::new(a, b))
}

fn bitfn() -> impl Strategy<Value = BitFn> {
    (0usize..4).prop_map(|i| BitFn::ALL[i])
}

fn is_canonical(r: Rat) -> bool {
    r.den() > 0 && r.num().gcd(&r.den()) == 1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rat_results_are_canonical(x in rat(), y in rat()) {
        for r in [x + y, x - y, x * y, -x] {
            prop_assert!(is_canonical(r), "{r:?}");
        }
        if !y.is_zero() {
            prop_assert!(is_canonical(x.checked_div(y).unwrap()));
        }
    }

    #[test]
    fn rat_field_laws(x in rat(), y in rat(), z in rat()) {
        prop_assert_eq!((x + y) + z, x + (y + z));
        prop_assert_eq!((x * y) * z, x * (y * z));
        prop_assert_eq!(x * (y + z), x * y + x * z);
        prop_assert_eq!(x + y, y + x);
        prop_assert_eq!(x * y, y * x);
        prop_assert_eq!(x - x, Rat::ZERO);
    }

    #[test]
    fn gauss_ring_laws(x in gauss(), y in gauss(), z in gauss()) {
        prop_assert_eq!((x + y) + z, x + (y + z));
        prop_assert_eq!((x * y) * z, x * (y * z));
        prop_assert_eq!(x * (y + z), x * y + x * z);
        prop_assert_eq!(x * y, y * x);
        prop_assert_eq!((x * y).conj(), x.conj() * y.conj());
    }

    #[test]
    fn surd_ring_laws(x in surd(), y in surd(), z in surd()) {
        prop_assert_eq!((x + y) + z, x + (y + z));
        prop_assert_eq!((x * y) * z, x * (y * z));
        prop_assert_eq!(x * (y + z), x * y + x * z);
        prop_assert_eq!(x * y, y * x);
        prop_assert_eq!((x * y).conj(), x.conj() * y.conj());
    }

    #[test]
    fn norms(z in gauss(), s in surd()) {
        let n = z * z.conj();
        prop_assert!(n.is_real() && n.re >= Rat::ZERO);
        prop_assert_eq!(n.re, z.norm_sqr().unwrap());
        prop_assert_eq!(z.conj().conj(), z);
        let m = s * s.conj();
        prop_assert!(m.is_rational());
        prop_assert_eq!(m.a, s.a * s.a - 2 * s.b * s.b);
        prop_assert_eq!(s.conj().conj(), s);
    }

    #[test]
    fn text_round_trips(x in rat(), z in gauss(), s in surd()) {
        prop_assert_eq!(x.to_string().parse::<Rat>().unwrap(), x);
        prop_assert_eq!(z.to_string().parse::<GaussRat>().unwrap(), z);
        prop_assert_eq!(s.to_string().parse::<Surd2>().unwrap(), s);
    }

    #[test]
    fn embedding_is_linear(f in bitfn(), z in gauss(), w in gauss(), r in rat()) {
        prop_assert_eq!(
            dequant::embed_gauss(f, z + w),
            dequant::embed_gauss(f, z) + dequant::embed_gauss(f, w)
        );
        prop_assert_eq!(
            dequant::embed_gauss(f, z.scale(r).unwrap()),
            dequant::embed_gauss(f, z).scale(r).unwrap()
        );
    }

    #[test]
    fn family_agrees_with_baseline(
        f in bitfn(),
        n in (-50i64..=50).prop_filter("nonzero", |n| *n != 0),
        d in (-50i64..=50).prop_filter("nonzero", |d| *d != 0),
        minus in any::<bool>(),
    ) {
        let a = Rat::new(n, d).unwrap();
        let sign = if minus { FamilySign::Minus } else { FamilySign::Plus };
        let mut h = OracleHandle::new(f);
        let v = dequant::solve_gauss_family(&mut h, a, sign).unwrap();
        prop_assert_eq!(v.classification, oracle::classify_baseline(&mut OracleHandle::new(f)));
        prop_assert_eq!(h.query_count(), 1);
    }

    #[test]
    fn counter_is_monotone(f in bitfn(), ops in prop::collection::vec(0u8..5, 0..40)) {
        let mut h = OracleHandle::new(f);
        let mut expected = 0;
        for op in ops {
            let before = h.query_count();
            match op {
                0 => { h.query(before.is_multiple_of(2)); expected += 1; }
                1 => { oracle::classify_baseline(&mut h); expected += 2; }
                2 => { quantum::run_deutsch(&mut h).unwrap(); expected += 1; }
                3 => { dequant::solve_gauss(&mut h); expected += 1; }
                _ => { dequant::solve_surd(&mut h); expected += 1; }
            }
            prop_assert!(h.query_count() > before);
        }
        prop_assert_eq!(h.query_count(), expected);
    }
}
