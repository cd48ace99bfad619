//! Randomized invariants of the algebra, series, minors and R-matrix.

use std::sync::OnceLock;

use proptest::prelude::*;

use yangian_core::algebra::{tensor_product, Sweep, TensorRing};
use yangian_core::drinfeld::{CartanData, CurrentKind, Currents};
use yangian_core::rtt::ybe_unitarity_check;
use yangian_core::scalar::{format_rational, parse_rational, rat};
use yangian_core::{Algebra, Element, Generator, QuotientMode, Rational, Ring, RttError, VerificationReport, Word, Yangian};

const ORDER: u32 = 4;

fn algebra(n: usize, mode: QuotientMode) -> &'static Algebra {
    static CELLS: [OnceLock<Algebra>; 4] = [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let slot = (n - 2) * 2 + usize::from(mode == QuotientMode::Sl);
    CELLS[slot].get_or_init(|| Algebra::new(n, ORDER, mode).unwrap())
}

fn minors_yangian() -> &'static Yangian {
    static Y: OnceLock<Yangian> = OnceLock::new();
    Y.get_or_init(|| Yangian::new(3, 2, QuotientMode::Gl).unwrap())
}

fn mode() -> impl Strategy<Value = QuotientMode> {
    prop_oneof![Just(QuotientMode::Gl), Just(QuotientMode::Sl)]
}

/// A word on `n` generators of degree at most `budget` (possibly empty).
fn word(n: usize, budget: u32) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=n, 1..=n, 1..=budget.max(1)), 0..4).prop_map(move |raw| {
        let mut deg = 0;
        let mut out = Vec::new();
        for (i, j, k) in raw {
            if deg + k <= budget {
                deg += k;
                out.push(Generator::new(i, j, k));
            }
        }
        Word(out)
    })
}

/// `count` words whose degrees add up to at most `ORDER`, so every
/// product below is computed exactly.
fn words(count: usize) -> impl Strategy<Value = (usize, QuotientMode, Vec<Word>)> {
    (2..=3usize, mode()).prop_flat_map(move |(n, m)| {
        prop::collection::vec(word(n, ORDER), count).prop_map(move |mut ws| {
            // trim from the back until the total fits
            let mut total: u32 = ws.iter().map(Word::degree).sum();
            for w in ws.iter_mut().rev() {
                while total > ORDER && !w.0.is_empty() {
                    total -= w.0.pop().unwrap().mode();
                }
            }
            (n, m, ws)
        })
    })
}

fn element(alg: &Algebra, w: &Word) -> Element {
    alg.normal_order(w).unwrap()
}

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=9).prop_map(|(p, q)| rat(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_round_trip(p in -10_000i64..10_000, q in 1i64..500) {
        let x = rat(p, q);
        prop_assert!(x.denom() > &0.into());
        prop_assert_eq!(gcd(x.numer(), x.denom()), num_bigint::BigInt::from(1));
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn normal_forms_are_normal((n, m, ws) in words(1)) {
        let alg = algebra(n, m);
        let x = element(alg, &ws[0]);
        for (w, c) in x.iter() {
            prop_assert!(w.is_normal(), "{w}");
            prop_assert!(w.degree() <= ORDER);
            prop_assert!(*c != rat(0, 1));
            if m == QuotientMode::Sl {
                prop_assert!(w.symbols().iter().all(|g| (g.row(), g.col()) != (n, n)), "{w}");
            }
        }
    }

    #[test]
    fn rewriting_is_confluent((n, m, ws) in words(1)) {
        let alg = algebra(n, m);
        let cached = element(alg, &ws[0]);
        prop_assert_eq!(&alg.normal_order_by(&ws[0], Sweep::LeftToRight), &cached);
        prop_assert_eq!(&alg.normal_order_by(&ws[0], Sweep::RightToLeft), &cached);
    }

    #[test]
    fn product_is_associative((n, m, ws) in words(3)) {
        let alg = algebra(n, m);
        let [a, b, c] = [0, 1, 2].map(|k| element(alg, &ws[k]));
        prop_assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)));
        // concatenation is the product
        prop_assert_eq!(alg.mul(&a, &b), element(alg, &ws[0].concat(&ws[1])));
    }

    #[test]
    fn jacobi_identity((n, m, ws) in words(3)) {
        let alg = algebra(n, m);
        let [a, b, c] = [0, 1, 2].map(|k| element(alg, &ws[k]));
        let jac = &(&alg.commutator(&a, &alg.commutator(&b, &c)) + &alg.commutator(&b, &alg.commutator(&c, &a)))
            + &alg.commutator(&c, &alg.commutator(&a, &b));
        prop_assert!(jac.is_zero());
    }

    #[test]
    fn tensor_product_is_componentwise((n, m, ws) in words(4)) {
        let alg = algebra(n, m);
        let [a, b, c, d] = [0, 1, 2, 3].map(|k| element(alg, &ws[k]));
        let ring = TensorRing::new(alg);
        let lhs = ring.mul(&tensor_product(&a, &b), &tensor_product(&c, &d));
        prop_assert_eq!(lhs, tensor_product(&alg.mul(&a, &c), &alg.mul(&b, &d)));
    }

    #[test]
    fn series_shifts_compose(a in rational(), b in rational(), i in 1..=3usize, j in 1..=3usize) {
        let y = minors_yangian();
        let s = y.entry(i, j);
        prop_assert_eq!(s.shift(&a).shift(&b), s.shift(&(&a + &b)));
        prop_assert_eq!(s.shift(&a).order(), s.order());
        prop_assert!(s.shift(&a).respects_filtration());
        prop_assert_eq!(&s.negate_variable().negate_variable(), s);
    }

    #[test]
    fn series_inverse(i in 1..=3usize, c in rational()) {
        let y = minors_yangian();
        let alg = y.algebra();
        let s = y.entry(i, i).shift(&c);
        let inv = s.inverse(alg).unwrap();
        let one = yangian_core::AlgebraSeries::one(y.order());
        prop_assert_eq!(&s.mul(alg, &inv), &one);
        prop_assert_eq!(&inv.mul(alg, &s), &one);
    }

    #[test]
    fn minors_are_antisymmetric(rows in Just(vec![1usize, 2, 3]).prop_shuffle(), m in 2..=3usize, lo in 1..=2usize) {
        let y = minors_yangian();
        let rows: Vec<usize> = rows[..m].to_vec();
        let cols: Vec<usize> = (lo..lo + m).filter(|&c| c <= 3).collect();
        prop_assume!(cols.len() == m);
        let mut sorted = rows.clone();
        sorted.sort();
        let inversions = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).filter(|&(a, b)| rows[a] > rows[b]).count();
        let base = y.minor_unreduced(&sorted, &cols).unwrap();
        let want = if inversions % 2 == 0 { base } else { base.neg() };
        prop_assert_eq!(y.minor_unreduced(&rows, &cols).unwrap(), want);
        let mut dup = rows.clone();
        dup[m - 1] = dup[0];
        prop_assert!(y.minor_unreduced(&dup, &cols).unwrap().is_zero());
    }

    #[test]
    fn yang_baxter_at_random_points(n in 2..=3usize, u in rational(), v in rational()) {
        match ybe_unitarity_check(n, &u, &v) {
            Ok(r) => prop_assert!(r.passed(), "{r}"),
            Err(RttError::Pole(_)) => prop_assume!(false),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }

    #[test]
    fn report_status_tracks_residuals(values in prop::collection::vec(-2i64..=2, 0..8)) {
        let mut r = VerificationReport::new("sample");
        for (k, v) in values.iter().enumerate() {
            r.check_zero(&format!("v{k}"), k, &Element::scalar(rat(*v, 1)));
        }
        prop_assert_eq!(r.passed(), values.iter().all(|&v| v == 0));
        prop_assert_eq!(r.residuals.len(), values.iter().filter(|&&v| v != 0).count());
        prop_assert_eq!(r.total_checks(), values.len());
    }
}

fn gcd(a: &num_bigint::BigInt, b: &num_bigint::BigInt) -> num_bigint::BigInt {
    let (mut a, mut b) = (a.clone(), b.clone());
    while b != 0.into() {
        let t = &a % &b;
        a = b;
        b = t;
    }
    if a < 0.into() {
        -a
    } else {
        a
    }
}

#[test]
fn cartan_data_is_symmetric() {
    for n in 2..=6 {
        let c = CartanData::new(n);
        for i in 1..n {
            assert_eq!(c.form(i, i), 2);
            for j in 1..n {
                assert_eq!(c.form(i, j), c.form(j, i));
                if i != j {
                    let want = if i.abs_diff(j) == 1 { 2 } else { 1 };
                    assert_eq!(c.serre_count(i, j), want, "n={n} i={i} j={j}");
                }
            }
        }
    }
}

#[test]
fn current_constant_terms() {
    for n in 2..=4 {
        let y = Yangian::new(n, 2, QuotientMode::Gl).unwrap();
        let cur = Currents::new(&y).unwrap();
        for i in 1..n {
            assert_eq!(*cur.series(CurrentKind::E, i).constant(), rat(0, 1));
            assert_eq!(*cur.series(CurrentKind::F, i).constant(), rat(0, 1));
            assert_eq!(*cur.series(CurrentKind::H, i).constant(), rat(1, 1));
        }
    }
}
