//! Generator catalogs for the level 2 mapping class group, GF(2) rank
//! certificates for the `(g-1)^2` generator lower bound, and the batch
//! identity verification suite.

use std::fmt;

use crate::action::{evaluate, f_map};
use crate::error::Result;
use crate::gf2;
use crate::homology::{CurveIndex, Genus, HomClass};
use crate::sample::{random_level2_word, random_word, Rng};
use crate::word::{GenLetter, Word};
use crate::{eta, is_level2, rho};
use num_traits::Signed;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogKind {
    /// A slide of one crosscap along a two-crosscap curve: `Y[i;i,j]`.
    Type1,
    /// A slide of a three-crosscap curve along a four-crosscap curve, or its
    /// squared-twist replacement in the alternative catalog.
    Type2,
}

impl fmt::Display for CatalogKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogKind::Type1 => write!(f, "type1"),
            CatalogKind::Type2 => write!(f, "type2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub kind: CatalogKind,
    pub word: Word,
}

/// A generating set for the level 2 mapping class group of `N_g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub genus: Genus,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn type1(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries
            .iter()
            .filter(|e| e.kind == CatalogKind::Type1)
    }

    pub fn type2(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries
            .iter()
            .filter(|e| e.kind == CatalogKind::Type2)
    }
}

fn type1_entries(genus: Genus) -> Vec<CatalogEntry> {
    let g = genus.get();
    let mut out = Vec::with_capacity((g - 1) * (g - 1));
    for i in 1..g {
        for j in 1..=g {
            if j == i {
                continue;
            }
            let letter = GenLetter::slide(
                CurveIndex::singleton(i).unwrap(),
                CurveIndex::pair(i, j).unwrap(),
            )
            .unwrap();
            out.push(CatalogEntry {
                kind: CatalogKind::Type1,
                word: Word::single(letter),
            });
        }
    }
    out
}

fn quads(g: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for i in 1..=g {
        for j in i + 1..=g {
            for k in j + 1..=g {
                for l in k + 1..=g {
                    out.push([i, j, k, l]);
                }
            }
        }
    }
    out
}

/// The level 2 generator catalog: `(g-1)^2` one-crosscap slides and
/// `C(g, 4)` three-crosscap slides. Genus 3 has only the former.
pub fn catalog(genus: Genus) -> Result<Catalog> {
    genus.require(3)?;
    let mut entries = type1_entries(genus);
    for [i, j, k, l] in quads(genus.get()) {
        let letter = GenLetter::slide(
            CurveIndex::new(vec![i, j, k]).unwrap(),
            CurveIndex::new(vec![i, j, k, l]).unwrap(),
        )
        .unwrap();
        entries.push(CatalogEntry {
            kind: CatalogKind::Type2,
            word: Word::single(letter),
        });
    }
    Ok(Catalog { genus, entries })
}

/// The alternative catalog: each three-crosscap slide replaced by the square
/// of the twist about the enclosing four-crosscap curve.
pub fn catalog_alt(genus: Genus) -> Result<Catalog> {
    genus.require(3)?;
    let mut entries = type1_entries(genus);
    for q in quads(genus.get()) {
        let letter = GenLetter::twist(CurveIndex::new(q.to_vec()).unwrap()).unwrap();
        entries.push(CatalogEntry {
            kind: CatalogKind::Type2,
            word: Word::from_letters(vec![(letter, 2)]),
        });
    }
    Ok(Catalog { genus, entries })
}

/// A GF(2) rank certificate for the catalog: the rank of the span of the
/// additive invariants of the catalog images inside the `(g-1) x (g-1)`
/// matrices over `Z_2`, together with the catalog indices of a spanning
/// subset. A rank of `(g-1)^2` certifies that no generating set of the
/// level 2 group can be smaller than that.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankCertificate {
    pub rank: usize,
    pub witness: Vec<usize>,
}

pub fn rank_certificate(genus: Genus) -> Result<RankCertificate> {
    let cat = catalog(genus)?;
    let vectors: Vec<Vec<u64>> = cat
        .entries
        .iter()
        .map(|e| {
            let image = eta(genus, &e.word)?;
            Ok(f_map(&image)?.flatten())
        })
        .collect::<Result<_>>()?;
    let (rank, witness) = gf2::rank_with_witness(&vectors);
    Ok(RankCertificate { rank, witness })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
        }
    }
}

/// The outcome of one identity instance. Failures carry both sides of the
/// comparison, rendered, so a report is actionable on its own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub family: String,
    pub params: String,
    pub status: Status,
    pub witness: Option<(String, String)>,
}

impl VerifyReport {
    fn pass(family: &str, params: String) -> Self {
        VerifyReport {
            family: family.to_string(),
            params,
            status: Status::Pass,
            witness: None,
        }
    }

    fn fail(family: &str, params: String, lhs: String, rhs: String) -> Self {
        VerifyReport {
            family: family.to_string(),
            params,
            status: Status::Fail,
            witness: Some((lhs, rhs)),
        }
    }
}

/// The result of a full suite run. Reports are in canonical order (family,
/// then parameters in generation order), independent of how they were
/// produced; reruns with the same genus and seed are identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub genus: Genus,
    pub seed: u64,
    pub notes: Vec<String>,
    pub reports: Vec<VerifyReport>,
}

impl SuiteReport {
    pub fn failures(&self) -> usize {
        self.reports
            .iter()
            .filter(|r| r.status == Status::Fail)
            .count()
    }

    pub fn all_pass(&self) -> bool {
        self.failures() == 0
    }
}

fn fnv1a(s: &str) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

fn family_rng(seed: u64, family: &str) -> Rng {
    Rng::new(seed ^ fnv1a(family))
}

struct Checker {
    genus: Genus,
    reports: Vec<VerifyReport>,
}

impl Checker {
    fn word_identity(&mut self, family: &str, params: String, lhs: &Word, rhs: &Word) {
        let l = evaluate(self.genus, lhs).expect("suite words are valid");
        let r = evaluate(self.genus, rhs).expect("suite words are valid");
        if l == r {
            self.reports.push(VerifyReport::pass(family, params));
        } else {
            self.reports.push(VerifyReport::fail(
                family,
                params,
                format!("{lhs} =\n{}", l.matrix()),
                format!("{rhs} =\n{}", r.matrix()),
            ));
        }
    }

    fn condition(&mut self, family: &str, params: String, ok: bool, lhs: String, rhs: String) {
        if ok {
            self.reports.push(VerifyReport::pass(family, params));
        } else {
            self.reports
                .push(VerifyReport::fail(family, params, lhs, rhs));
        }
    }
}

fn slide_letter(i: &[usize], j: &[usize]) -> GenLetter {
    GenLetter::slide(
        CurveIndex::new(i.to_vec()).unwrap(),
        CurveIndex::new(j.to_vec()).unwrap(),
    )
    .unwrap()
}

fn twist_letter(j: &[usize]) -> GenLetter {
    GenLetter::twist(CurveIndex::new(j.to_vec()).unwrap()).unwrap()
}

/// Runs every identity family for the given genus. Families that sample use
/// the seed; everything else is exhaustive over its parameter range.
/// Failures are reported, never raised; the report is the product.
pub fn verify_suite(genus: Genus, seed: u64) -> Result<SuiteReport> {
    genus.require(3)?;
    let g = genus.get();
    let mut c = Checker {
        genus,
        reports: Vec::new(),
    };

    // action_invariants: determinant, torsion, and form preservation on
    // random words
    {
        let fam = "action_invariants";
        let mut rng = family_rng(seed, fam);
        for idx in 0..200 {
            let w = random_word(&mut rng, genus, 12);
            let act = evaluate(genus, &w).unwrap();
            let det_ok = act.det().abs() == num_bigint::BigInt::from(1);
            let torsion_ok = act.fixes_torsion();
            let form_ok = act.preserves_form_mod2();
            c.condition(
                fam,
                format!("word_{idx:03}"),
                det_ok && torsion_ok && form_ok,
                format!("word {w}"),
                format!("det_unit={det_ok} fixes_torsion={torsion_ok} form_preserved={form_ok}"),
            );
        }
    }

    // b_homology_order: only in genus 4 does the four-crosscap twist square
    // to the identity on integral homology
    if g == 4 {
        let fam = "b_homology_order";
        let b = evaluate(genus, &Word::single(GenLetter::b())).unwrap();
        c.condition(
            fam,
            "B".into(),
            !b.is_identity_on_h1(),
            "B acts trivially on H1".into(),
            "expected a nontrivial action".into(),
        );
        let b2 = b.compose(&b);
        c.condition(
            fam,
            "B^2".into(),
            b2.is_identity_on_h1(),
            format!("B^2 =\n{}", b2.matrix()),
            "expected the identity on H1".into(),
        );
    }

    // catalog_mod2_trivial: every catalog generator is level 2
    {
        let fam = "catalog_mod2_trivial";
        for entry in &catalog(genus)?.entries {
            let ok = is_level2(genus, &entry.word).unwrap();
            c.condition(
                fam,
                entry.word.to_string(),
                ok,
                format!("mod 2 action of {}", entry.word),
                "expected the identity mod 2".into(),
            );
        }
    }

    // conjugation_transfer: conjugating a three-crosscap slide by the
    // neighbouring twist agrees with conjugating the shifted slide by the
    // connecting slide
    {
        let fam = "conjugation_transfer";
        for i in 2..=g {
            for j in i + 1..=g {
                for k in j + 1..=g {
                    for l in k + 1..=g {
                        let a_prev = GenLetter::a(i - 1).unwrap();
                        let lhs = Word::from_letters(vec![
                            (a_prev.clone(), 1),
                            (slide_letter(&[i, j, k], &[i, j, k, l]), 1),
                            (a_prev, -1),
                        ]);
                        let e = slide_letter(&[i], &[i - 1, i]);
                        let mut shifted = vec![i - 1, j, k];
                        shifted.sort_unstable();
                        let mut shifted_j = vec![i - 1, j, k, l];
                        shifted_j.sort_unstable();
                        let rhs = Word::from_letters(vec![
                            (e.clone(), 1),
                            (slide_letter(&shifted, &shifted_j), 1),
                            (e, -1),
                        ]);
                        c.word_identity(fam, format!("({i},{j},{k},{l})"), &lhs, &rhs);
                    }
                }
            }
        }
    }

    // f_additivity on random level 2 products
    {
        let fam = "f_additivity";
        let mut rng = family_rng(seed, fam);
        for idx in 0..1000 {
            let u = random_level2_word(&mut rng, genus, 5);
            let v = random_level2_word(&mut rng, genus, 5);
            let fu = f_map(&eta(genus, &u).unwrap()).unwrap();
            let fv = f_map(&eta(genus, &v).unwrap()).unwrap();
            let fuv = f_map(&eta(genus, &u.concat(&v)).unwrap()).unwrap();
            c.condition(
                fam,
                format!("pair_{idx:04}"),
                fuv == fu.add(&fv),
                format!("f(uv) =\n{fuv}"),
                format!("f(u) + f(v) =\n{}", fu.add(&fv)),
            );
        }
    }

    // genus3_relations: the defining relations of the genus 3 group, under
    // the projection to GL(2, Z)
    if g == 3 {
        let fam = "genus3_relations";
        let parse = |t: &str| Word::parse(t, genus).unwrap();
        let braid_l = rho(genus, &parse("A1 A2 A1")).unwrap();
        let braid_r = rho(genus, &parse("A2 A1 A2")).unwrap();
        c.condition(
            fam,
            "A1 A2 A1 = A2 A1 A2".into(),
            braid_l == braid_r,
            format!("{}", braid_l.0),
            format!("{}", braid_r.0),
        );
        for (params, base, power) in [
            ("(A1 A2 A1)^4 = 1", "A1 A2 A1", 4),
            ("Y^2 = 1", "Y", 2),
            ("(Y A1)^2 = 1", "Y A1", 2),
            ("(Y A2)^2 = 1", "Y A2", 2),
        ] {
            let image = rho(genus, &parse(base).pow(power)).unwrap();
            c.condition(
                fam,
                params.into(),
                image.is_identity(),
                format!("{}", image.0),
                "identity".into(),
            );
        }
    }

    // rho_free_reduce: free reduction does not change the image
    {
        let fam = "rho_free_reduce";
        let mut rng = family_rng(seed, fam);
        for idx in 0..200 {
            let w = random_word(&mut rng, genus, 12);
            let direct = rho(genus, &w).unwrap();
            let reduced = rho(genus, &w.free_reduce()).unwrap();
            c.condition(
                fam,
                format!("word_{idx:03}"),
                direct == reduced,
                format!("{}", direct.0),
                format!("{}", reduced.0),
            );
        }
    }

    // slide_involution: every catalog slide squares to the identity matrix
    {
        let fam = "slide_involution";
        for entry in &catalog(genus)?.entries {
            let act = evaluate(genus, &entry.word).unwrap();
            let sq = act.compose(&act);
            c.condition(
                fam,
                entry.word.to_string(),
                sq.matrix().is_identity(),
                format!("square of {} =\n{}", entry.word, sq.matrix()),
                "identity".into(),
            );
        }
    }

    // slide_six_factorization: the slide of a five-crosscap curve along a
    // six-crosscap curve factors through three smaller slides
    {
        let fam = "slide_six_factorization";
        for j_set in subsets_of_size(g, 6) {
            let i_set = &j_set[..5];
            let lhs = Word::single(slide_letter(i_set, &j_set));
            let rhs = Word::from_letters(vec![
                (slide_letter(&j_set[0..3], &j_set), 1),
                (slide_letter(&j_set[3..6], &j_set), -1),
                (slide_letter(&j_set[5..6], &j_set), 1),
            ]);
            c.word_identity(fam, format!("{:?}", j_set), &lhs, &rhs);
        }
    }

    // twist_complement_image: the twist about an even curve sends the class
    // of the complement of its largest crosscap to minus that crosscap class
    {
        let fam = "twist_complement_image";
        for size in [2usize, 4, 6] {
            for j_set in subsets_of_size(g, size) {
                let l = *j_set.last().unwrap();
                let i_set = &j_set[..size - 1];
                let act = evaluate(genus, &Word::single(twist_letter(&j_set))).unwrap();
                let a_i = CurveIndex::new(i_set.to_vec())
                    .unwrap()
                    .hom_class(genus)
                    .unwrap();
                let image = act.apply(&a_i);
                let expected = HomClass::basis(genus, l).unwrap().neg();
                c.condition(
                    fam,
                    format!("{:?}", j_set),
                    image == expected,
                    format!("{image}"),
                    format!("{expected}"),
                );
            }
        }
    }

    // twist_square_pair / twist_square_quad: the square of a twist about an
    // even curve is a difference of two slides along it
    {
        let fam = "twist_square_pair";
        for i in 1..=g {
            for j in i + 1..=g {
                let lhs = Word::from_letters(vec![(twist_letter(&[i, j]), 2)]);
                let rhs = Word::from_letters(vec![
                    (slide_letter(&[j], &[i, j]), 1),
                    (slide_letter(&[i], &[i, j]), -1),
                ]);
                c.word_identity(fam, format!("({i},{j})"), &lhs, &rhs);
            }
        }
    }
    {
        let fam = "twist_square_quad";
        for [i, j, k, l] in quads(g) {
            let lhs = Word::from_letters(vec![(twist_letter(&[i, j, k, l]), 2)]);
            let rhs = Word::from_letters(vec![
                (slide_letter(&[l], &[i, j, k, l]), 1),
                (slide_letter(&[i, j, k], &[i, j, k, l]), -1),
            ]);
            c.word_identity(fam, format!("({i},{j},{k},{l})"), &lhs, &rhs);
        }
    }

    let notes = vec![
        "identity families compare actions on integral homology; for genus >= 4 equal shadows do not decide equality in the mapping class group".to_string(),
        "the rank certificate is a lower bound on generator counts; no upper bound minimality computation is performed".to_string(),
    ];

    Ok(SuiteReport {
        genus,
        seed,
        notes,
        reports: c.reports,
    })
}

fn subsets_of_size(g: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn go(start: usize, g: usize, size: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        let needed = size - current.len();
        for i in start..=g.saturating_sub(needed - 1) {
            current.push(i);
            go(i + 1, g, size, current, out);
            current.pop();
        }
    }
    go(1, g, size, &mut current, &mut out);
    out
}
