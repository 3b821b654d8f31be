//! Property tests for the algebraic invariants, plus seeded bulk round
//! trips for the decomposition machinery.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use proptest::prelude::*;

use gamma2_core::sample::{random_genus3_word, random_stu_word, random_word, Rng};
use gamma2_core::{
    decompose_gl2, evaluate, intersect_mod2, iota, n3_equal, project_r, rho, stu_eval, stu_to_mcg,
    CurveIndex, Genus, HomClass, Word,
};

fn genus(g: usize) -> Genus {
    Genus::new(g).unwrap()
}

fn class(g: usize, raw: &[i64]) -> HomClass {
    HomClass::from_i64(genus(g), raw).unwrap()
}

prop_compose! {
    fn raw_vector()(g in 2usize..=8)(g in Just(g), v in prop::collection::vec(-60i64..=60, g)) -> (usize, Vec<i64>) {
        (g, v)
    }
}

prop_compose! {
    fn raw_pair()(g in 2usize..=8)(
        g in Just(g),
        u in prop::collection::vec(-60i64..=60, g),
        v in prop::collection::vec(-60i64..=60, g),
        k1 in -4i64..=4,
        k2 in -4i64..=4,
    ) -> (usize, Vec<i64>, Vec<i64>, i64, i64) {
        (g, u, v, k1, k2)
    }
}

proptest! {
    #[test]
    fn canonical_is_idempotent((g, v) in raw_vector()) {
        let once = class(g, &v);
        let coeffs: Vec<i64> = once.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect();
        let twice = class(g, &coeffs);
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn canonical_identifies_relation_shifts((g, u, v, k1, k2) in raw_pair()) {
        // x + y depends only on the classes of x and y
        let shifted_sum: Vec<i64> = u.iter().zip(&v)
            .map(|(a, b)| a + 2 * k1 + b + 2 * k2)
            .collect();
        let plain_sum: Vec<i64> = u.iter().zip(&v).map(|(a, b)| a + b).collect();
        prop_assert_eq!(class(g, &shifted_sum), class(g, &plain_sum));
    }

    #[test]
    fn intersection_form_is_symmetric_and_bilinear((g, u, v, _, _) in raw_pair(), w in prop::collection::vec(-60i64..=60, 8)) {
        let x = class(g, &u);
        let y = class(g, &v);
        prop_assert_eq!(intersect_mod2(&x, &y), intersect_mod2(&y, &x));
        let w: Vec<i64> = w.into_iter().take(g).collect();
        let z = class(g, &w);
        let yz = y.add(&z).unwrap();
        let lhs = intersect_mod2(&x, &yz);
        let rhs = intersect_mod2(&x, &y) ^ intersect_mod2(&x, &z);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn torsion_pairs_to_genus_parity(g in 2usize..=8) {
        let c = HomClass::torsion(genus(g));
        prop_assert_eq!(intersect_mod2(&c, &c), g % 2 == 1);
    }

    #[test]
    fn iota_is_linear_and_kills_its_own_class((g, u, v, _, _) in raw_pair(), pick in any::<u64>()) {
        prop_assume!(g >= 2);
        // an even-size support chosen from the genus range
        let mut rng = Rng::new(pick);
        let size = if g >= 4 && rng.next_u64().is_multiple_of(2) { 4 } else { 2 };
        let mut indices: Vec<usize> = (1..=g).collect();
        for i in (1..indices.len()).rev() {
            let j = (rng.next_u64() as usize) % (i + 1);
            indices.swap(i, j);
        }
        let mut support: Vec<usize> = indices.into_iter().take(size).collect();
        support.sort_unstable();
        let j = CurveIndex::new(support).unwrap();

        let x = class(g, &u);
        let y = class(g, &v);
        let sum = x.add(&y).unwrap();
        prop_assert_eq!(
            iota(&j, &sum).unwrap(),
            iota(&j, &x).unwrap() + iota(&j, &y).unwrap()
        );
        let a_j = j.hom_class(genus(g)).unwrap();
        prop_assert_eq!(iota(&j, &a_j).unwrap(), BigInt::from(0));
    }

    #[test]
    fn mod2_recoverable_from_projection((g, v) in raw_vector()) {
        // the projection plus the parity of the last coordinate pin the
        // whole mod 2 class
        let x = class(g, &v);
        let proj = project_r(&x);
        let last = &x.coeffs()[g - 1];
        let recovered: Vec<bool> = proj
            .iter()
            .map(|p| (p + last).is_odd())
            .chain(std::iter::once(last.is_odd()))
            .collect();
        prop_assert_eq!(recovered, x.mod2());
    }

    #[test]
    fn free_reduce_is_idempotent((seed, g) in (any::<u64>(), 3usize..=8)) {
        let w = random_word(&mut Rng::new(seed), genus(g), 14);
        let once = w.free_reduce();
        prop_assert_eq!(once.free_reduce(), once);
    }

    #[test]
    fn reduction_commutes_with_inverse((seed, g) in (any::<u64>(), 3usize..=8)) {
        let w = random_word(&mut Rng::new(seed), genus(g), 14);
        prop_assert_eq!(w.free_reduce().inverse(), w.inverse().free_reduce());
    }

    #[test]
    fn display_parse_round_trip((seed, g) in (any::<u64>(), 3usize..=8)) {
        let w = random_word(&mut Rng::new(seed), genus(g), 14);
        let again = Word::parse(&w.to_string(), genus(g)).unwrap();
        prop_assert_eq!(w, again);
    }

    #[test]
    fn evaluation_respects_free_reduction((seed, g) in (any::<u64>(), 3usize..=8)) {
        let w = random_word(&mut Rng::new(seed), genus(g), 14);
        prop_assert_eq!(
            evaluate(genus(g), &w).unwrap(),
            evaluate(genus(g), &w.free_reduce()).unwrap()
        );
    }

    #[test]
    fn evaluation_of_products_and_inverses((seed, g) in (any::<u64>(), 3usize..=8)) {
        let gn = genus(g);
        let mut rng = Rng::new(seed);
        let u = random_word(&mut rng, gn, 10);
        let v = random_word(&mut rng, gn, 10);
        let uv = evaluate(gn, &u.concat(&v)).unwrap();
        prop_assert_eq!(uv, evaluate(gn, &u).unwrap().compose(&evaluate(gn, &v).unwrap()));
        let winv = evaluate(gn, &u.concat(&u.inverse())).unwrap();
        prop_assert!(winv.matrix().is_identity());
    }

    #[test]
    fn stu_substitution_is_a_section(seed in any::<u64>()) {
        let w = random_stu_word(&mut Rng::new(seed), 12);
        let word = stu_to_mcg(&w);
        prop_assert_eq!(rho(genus(3), &word).unwrap().0, stu_eval(&w));
    }

    #[test]
    fn decompose_round_trip_random(seed in any::<u64>()) {
        let w = random_stu_word(&mut Rng::new(seed), 16);
        let m = stu_eval(&w);
        let again = decompose_gl2(&m).unwrap();
        prop_assert_eq!(stu_eval(&again), m);
    }

    #[test]
    fn parser_never_panics(text in "[ A-Za-z0-9,;^\\[\\]+-]{0,40}", g in 2usize..=6) {
        // any outcome is fine, crashing is not
        let _ = Word::parse(&text, genus(g));
    }

    #[test]
    fn parser_accepts_only_validating_words(text in "[ AYBT0-9,;^\\[\\]-]{0,24}", g in 3usize..=6) {
        if let Ok(w) = Word::parse(&text, genus(g)) {
            prop_assert!(w.validate(genus(g)).is_ok());
            // whatever parses must evaluate
            let _ = evaluate(genus(g), &w).unwrap();
        }
    }
}

/// The bulk decomposition contract: a thousand random unimodular matrices
/// built from longer generator words all round trip exactly.
#[test]
fn decompose_round_trip_bulk() {
    let mut rng = Rng::new(0x5eed);
    for i in 0..1000 {
        let w = random_stu_word(&mut rng, 40);
        let m = stu_eval(&w);
        let again = decompose_gl2(&m).unwrap();
        assert_eq!(stu_eval(&again), m, "round trip failed at iteration {i}");
        assert!(m.det().abs() == BigInt::from(1));
    }
}

/// Triviality testing agrees with decompose-then-compare.
#[test]
fn triviality_agrees_with_reconstruction() {
    let g3 = genus(3);
    let mut rng = Rng::new(0xabc);
    for _ in 0..300 {
        let w = random_genus3_word(&mut rng, 16);
        let m = rho(g3, &w).unwrap().0;
        let back = stu_to_mcg(&decompose_gl2(&m).unwrap());
        assert!(n3_equal(&w, &back).unwrap());
    }
}
