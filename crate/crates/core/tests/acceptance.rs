//! Acceptance suite. Each test checks one criterion exactly (no tolerances:
//! everything here is integer or GF(2) arithmetic), prints a pass line with
//! its runtime, and asserts the runtime budget.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Signed;

use gamma2_core::sample::{random_genus3_word, random_level2_word, random_word, Rng};
use gamma2_core::{
    catalog, catalog_alt, decompose_gl2, eta, evaluate, f_map, is_level2, level2_decompose,
    level2_member, n3_is_trivial, rank_certificate, rho, stu_eval, stu_to_mcg, CurveIndex,
    GenLetter, Genus, StuLetter, StuWord, Word,
};

fn g(n: usize) -> Genus {
    Genus::new(n).unwrap()
}

fn parse(text: &str, n: usize) -> Word {
    Word::parse(text, g(n)).unwrap()
}

fn stu(letters: &[(StuLetter, i64)]) -> StuWord {
    StuWord::from_letters(letters.to_vec())
}

fn done(name: &str, what: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!("[PASS] {name}: {what} ({elapsed:.2?})");
    assert!(
        elapsed < budget,
        "{name} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

fn subsets_of_size(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            go(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    go(1, n, size, &mut Vec::new(), &mut out);
    out
}

fn slide(i: &[usize], j: &[usize]) -> GenLetter {
    GenLetter::slide(
        CurveIndex::new(i.to_vec()).unwrap(),
        CurveIndex::new(j.to_vec()).unwrap(),
    )
    .unwrap()
}

fn twist(j: &[usize]) -> GenLetter {
    GenLetter::twist(CurveIndex::new(j.to_vec()).unwrap()).unwrap()
}

#[test]
fn a01_genus3_generator_images() {
    use StuLetter::*;
    // warm the code paths so the timed section measures arithmetic only
    let _ = rho(g(3), &parse("A1", 3)).unwrap();
    let start = Instant::now();
    let sts_inv = stu_eval(&stu(&[(S, 1), (T, 1), (S, -1)]));
    let s = stu_eval(&stu(&[(S, 1)]));
    let sus_inv = stu_eval(&stu(&[(S, 1), (U, 1), (S, -1)]));
    assert_eq!(rho(g(3), &parse("A1", 3)).unwrap().0, sts_inv);
    assert_eq!(rho(g(3), &parse("A2", 3)).unwrap().0, s);
    assert_eq!(rho(g(3), &parse("Y", 3)).unwrap().0, sus_inv);
    done(
        "a01",
        "genus 3 images of A1, A2, Y are S T S^-1, S, S U S^-1 exactly",
        start,
        Duration::from_millis(1),
    );
}

#[test]
fn a02_presentation_relations() {
    use StuLetter::*;
    let _ = rho(g(3), &parse("Y", 3)).unwrap();
    let start = Instant::now();
    // matrix level
    assert_eq!(
        stu_eval(&stu(&[(S, 1), (T, 1), (S, 1)])),
        stu_eval(&stu(&[(T, 1), (S, 1), (T, 1)]))
    );
    assert!(stu_eval(&stu(&[(S, 1), (T, 1), (S, 1)].repeat(4))).is_identity());
    assert!(stu_eval(&stu(&[(U, 2)])).is_identity());
    assert!(stu_eval(&stu(&[(U, 1), (S, 1), (U, 1), (S, 1)])).is_identity());
    assert!(stu_eval(&stu(&[(U, 1), (T, 1), (U, 1), (T, 1)])).is_identity());
    // preimages in genus 3, under the projection
    let braid_l = rho(g(3), &parse("A1 A2 A1", 3)).unwrap();
    let braid_r = rho(g(3), &parse("A2 A1 A2", 3)).unwrap();
    assert_eq!(braid_l, braid_r);
    for text in [
        "A1 A2 A1 A1 A2 A1 A1 A2 A1 A1 A2 A1",
        "Y Y",
        "Y A1 Y A1",
        "Y A2 Y A2",
    ] {
        assert!(rho(g(3), &parse(text, 3)).unwrap().is_identity(), "{text}");
    }
    done(
        "a02",
        "presentation relations hold for S, T, U matrices and their genus 3 preimages",
        start,
        Duration::from_millis(10),
    );
}

#[test]
fn a03_twist_squares_factor_into_slide_pairs() {
    let start = Instant::now();
    let mut instances = 0usize;
    for n in 3..=8 {
        for pair in subsets_of_size(n, 2) {
            let (i, j) = (pair[0], pair[1]);
            let lhs = evaluate(g(n), &Word::from_letters(vec![(twist(&[i, j]), 2)])).unwrap();
            let rhs = evaluate(
                g(n),
                &Word::from_letters(vec![
                    (slide(&[j], &[i, j]), 1),
                    (slide(&[i], &[i, j]), -1),
                ]),
            )
            .unwrap();
            assert_eq!(lhs, rhs, "pair ({i},{j}) genus {n}");
            instances += 1;
        }
    }
    for n in 4..=8 {
        for q in subsets_of_size(n, 4) {
            let (i, j, k, l) = (q[0], q[1], q[2], q[3]);
            let lhs = evaluate(g(n), &Word::from_letters(vec![(twist(&q), 2)])).unwrap();
            let rhs = evaluate(
                g(n),
                &Word::from_letters(vec![
                    (slide(&[l], &q), 1),
                    (slide(&[i, j, k], &q), -1),
                ]),
            )
            .unwrap();
            assert_eq!(lhs, rhs, "quad {q:?} genus {n}");
            instances += 1;
        }
    }
    done(
        "a03",
        &format!("twist squares equal slide pair differences ({instances} instances, sizes 2 and 4)"),
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn a04_six_crosscap_slide_factorization() {
    let start = Instant::now();
    let mut instances = 0usize;
    for n in 6..=8 {
        for j_set in subsets_of_size(n, 6) {
            let lhs = evaluate(g(n), &Word::single(slide(&j_set[..5], &j_set))).unwrap();
            let rhs = evaluate(
                g(n),
                &Word::from_letters(vec![
                    (slide(&j_set[0..3], &j_set), 1),
                    (slide(&j_set[3..6], &j_set), -1),
                    (slide(&j_set[5..6], &j_set), 1),
                ]),
            )
            .unwrap();
            assert_eq!(lhs, rhs, "six-set {j_set:?} genus {n}");
            instances += 1;
        }
    }
    assert_eq!(instances, 1 + 7 + 28);
    done(
        "a04",
        "five-crosscap slides factor through three slides along the six-crosscap curve (36 instances)",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn a05_squared_twist_replacement() {
    let start = Instant::now();
    for n in 4..=8 {
        for q in subsets_of_size(n, 4) {
            let (i, j, k, l) = (q[0], q[1], q[2], q[3]);
            let squared = evaluate(g(n), &Word::from_letters(vec![(twist(&q), 2)])).unwrap();
            let pair = evaluate(
                g(n),
                &Word::from_letters(vec![
                    (slide(&[l], &q), 1),
                    (slide(&[i, j, k], &q), -1),
                ]),
            )
            .unwrap();
            assert_eq!(squared, pair, "quad {q:?} genus {n}");
        }
        // the alternative catalog really swaps in those squares
        let alt = catalog_alt(g(n)).unwrap();
        assert_eq!(alt.type1().count(), (n - 1) * (n - 1));
        for entry in alt.type2() {
            let letters = entry.word.letters();
            assert_eq!(letters.len(), 1);
            assert_eq!(letters[0].1, 2);
            assert!(matches!(letters[0].0, GenLetter::Twist(_)));
        }
    }
    let alt4 = catalog_alt(g(4)).unwrap();
    assert_eq!(alt4.type1().count(), 9);
    assert_eq!(alt4.type2().count(), 1);
    done(
        "a05",
        "squared twists replace the three-crosscap slides in the alternative catalog",
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn a06_level2_membership() {
    let start = Instant::now();
    for n in 3..=8 {
        for entry in &catalog(g(n)).unwrap().entries {
            assert!(
                is_level2(g(n), &entry.word).unwrap(),
                "catalog element {} genus {n}",
                entry.word
            );
        }
        for i in 1..n {
            let a_i = Word::single(GenLetter::a(i).unwrap());
            assert!(!is_level2(g(n), &a_i).unwrap(), "A{i} genus {n}");
        }
        if n >= 4 {
            let b = Word::single(GenLetter::b());
            assert!(!is_level2(g(n), &b).unwrap(), "B genus {n}");
        }
    }
    done(
        "a06",
        "every catalog generator is level 2; the twists A_i and B are not",
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn a07_catalog_counts() {
    let start = Instant::now();
    let binom4 = |n: usize| n * (n - 1) * (n - 2) * (n - 3) / 24;
    assert_eq!(catalog(g(3)).unwrap().len(), 4);
    assert_eq!(catalog(g(4)).unwrap().len(), 10);
    for n in 3..=12 {
        let cat = catalog(g(n)).unwrap();
        assert_eq!(cat.type1().count(), (n - 1) * (n - 1), "genus {n}");
        assert_eq!(cat.type2().count(), binom4(n), "genus {n}");
        assert_eq!(cat.len(), (n - 1) * (n - 1) + binom4(n), "genus {n}");
    }
    done(
        "a07",
        "catalog sizes are 4, 10, and (g-1)^2 + C(g,4) up to genus 12",
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn a08_rank_certificates() {
    let start = Instant::now();
    assert_eq!(rank_certificate(g(3)).unwrap().rank, 4);
    assert_eq!(rank_certificate(g(4)).unwrap().rank, 9);
    for n in 5..=8 {
        let cert = rank_certificate(g(n)).unwrap();
        assert_eq!(cert.rank, (n - 1) * (n - 1), "genus {n}");
        assert_eq!(cert.witness.len(), cert.rank);
    }
    done(
        "a08",
        "GF(2) rank certificates: 4, 9, then (g-1)^2 through genus 8",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn a09_genus4_twist_square_on_homology() {
    let start = Instant::now();
    let b = evaluate(g(4), &parse("B", 4)).unwrap();
    assert!(!b.matrix().is_identity());
    assert!(!b.is_identity_on_h1());
    let b2 = evaluate(g(4), &parse("B^2", 4)).unwrap();
    assert!(!b2.matrix().is_identity());
    assert!(b2.is_identity_on_h1());
    // spot check on canonical forms of the basis classes
    for i in 1..=4 {
        let e = gamma2_core::HomClass::basis(g(4), i).unwrap();
        assert_eq!(b2.apply(&e), e);
    }
    done(
        "a09",
        "in genus 4 the four-crosscap twist is nontrivial on homology but its square is trivial",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn a10_word_problem_round_trips() {
    let start = Instant::now();
    let g3 = g(3);
    let mut rng = Rng::new(1001);
    for i in 0..500 {
        let w = random_genus3_word(&mut rng, 30);
        let m = rho(g3, &w).unwrap().0;
        let back = stu_to_mcg(&decompose_gl2(&m).unwrap());
        let product = w.concat(&back.inverse());
        assert!(n3_is_trivial(&product).unwrap(), "word round trip {i}");
    }
    let mut rng = Rng::new(2002);
    for i in 0..500 {
        let w = random_level2_word(&mut rng, g3, 12);
        let m = eta(g3, &w).unwrap().0;
        assert!(level2_member(&m).unwrap());
        let word = level2_decompose(&m).unwrap();
        assert_eq!(eta(g3, &word).unwrap().0, m, "matrix round trip {i}");
    }
    done(
        "a10",
        "500 word and 500 matrix decomposition round trips in genus 3",
        start,
        Duration::from_secs(10),
    );
}

#[test]
fn a11_structural_invariants() {
    let start = Instant::now();
    let one = BigInt::from(1);
    for n in 3..=8 {
        let gn = g(n);
        let mut rng = Rng::new(n as u64 * 31 + 7);
        for i in 0..1000 {
            let w = random_word(&mut rng, gn, 10);
            let act = evaluate(gn, &w).unwrap();
            assert_eq!(act.det().abs(), one, "det word {i} genus {n}");
            assert!(act.fixes_torsion(), "torsion word {i} genus {n}");
            assert!(act.preserves_form_mod2(), "form word {i} genus {n}");
        }
        for entry in &catalog(gn).unwrap().entries {
            let act = evaluate(gn, &entry.word).unwrap();
            assert!(
                act.compose(&act).matrix().is_identity(),
                "involution {} genus {n}",
                entry.word
            );
        }
        for i in 0..200 {
            let u = random_level2_word(&mut rng, gn, 5);
            let v = random_level2_word(&mut rng, gn, 5);
            let fu = f_map(&eta(gn, &u).unwrap()).unwrap();
            let fv = f_map(&eta(gn, &v).unwrap()).unwrap();
            let fuv = f_map(&eta(gn, &u.concat(&v)).unwrap()).unwrap();
            assert_eq!(fuv, fu.add(&fv), "additivity pair {i} genus {n}");
        }
    }
    done(
        "a11",
        "1000 random words per genus 3..8: unit determinant, torsion fixed, form preserved; slides involutive; invariant additive",
        start,
        Duration::from_secs(30),
    );
}
