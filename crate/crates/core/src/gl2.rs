//! `GL(2, Z)` machinery for genus 3.
//!
//! `SL(2, Z)` is generated by `S = [[1,1],[0,1]]` and `T = [[1,0],[-1,1]]`,
//! and `GL(2, Z)` by adjoining `U = [[-1,0],[0,1]]`. In genus 3 the homology
//! representation is an isomorphism onto `GL(2, Z)`, with inverse determined
//! by `S -> A2`, `T -> A2^-1 A1 A2`, `U -> A2^-1 Y A2`; composing matrix
//! decomposition with that substitution solves the word problem. On the
//! level 2 congruence subgroup the four slide generators suffice, and
//! [`level2_decompose`] realizes any level 2 matrix as a word in them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};
use crate::homology::{CurveIndex, Genus};
use crate::matrix::IntMatrix;
use crate::word::{GenLetter, Word};
use crate::{action, rho};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StuLetter {
    S,
    T,
    U,
}

impl fmt::Display for StuLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StuLetter::S => write!(f, "S"),
            StuLetter::T => write!(f, "T"),
            StuLetter::U => write!(f, "U"),
        }
    }
}

/// A word over `{S, T, U}` with integer exponents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StuWord {
    letters: Vec<(StuLetter, i64)>,
}

impl StuWord {
    pub fn empty() -> Self {
        StuWord::default()
    }

    pub fn from_letters(letters: Vec<(StuLetter, i64)>) -> Self {
        StuWord {
            letters: letters.into_iter().filter(|(_, e)| *e != 0).collect(),
        }
    }

    #[inline]
    pub fn letters(&self) -> &[(StuLetter, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn push(&mut self, l: StuLetter, e: i64) {
        if e != 0 {
            self.letters.push((l, e));
        }
    }

    /// Merges adjacent equal letters and applies `U^2 = I`, so `U` survives
    /// only with exponent 1 after reduction.
    pub fn free_reduce(&self) -> StuWord {
        let mut out: Vec<(StuLetter, i64)> = Vec::with_capacity(self.letters.len());
        for &(l, e) in &self.letters {
            let mut e = e;
            if l == StuLetter::U {
                e = e.rem_euclid(2);
            }
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some((top, te)) if *top == l => {
                    *te = te.checked_add(e).expect("exponent overflow");
                    if l == StuLetter::U {
                        *te = te.rem_euclid(2);
                    }
                    if *te == 0 {
                        out.pop();
                    }
                }
                _ => out.push((l, e)),
            }
        }
        StuWord { letters: out }
    }
}

impl fmt::Display for StuWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return Ok(());
        }
        for (k, (l, e)) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if *e == 1 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{l}^{e}")?;
            }
        }
        Ok(())
    }
}

fn mat2(a: i64, b: i64, c: i64, d: i64) -> IntMatrix {
    IntMatrix::from_i64_rows(&[&[a, b], &[c, d]])
}

/// `S^e = [[1, e], [0, 1]]`.
fn s_power(e: i64) -> IntMatrix {
    mat2(1, e, 0, 1)
}

/// `T^e = [[1, 0], [-e, 1]]`.
fn t_power(e: i64) -> IntMatrix {
    mat2(1, 0, -e, 1)
}

fn u_matrix() -> IntMatrix {
    mat2(-1, 0, 0, 1)
}

/// Evaluates a word over `{S, T, U}` as a `2 x 2` integer matrix, multiplied
/// in written order.
pub fn stu_eval(w: &StuWord) -> IntMatrix {
    let mut acc = IntMatrix::identity(2);
    for &(l, e) in w.letters() {
        let m = match l {
            StuLetter::S => s_power(e),
            StuLetter::T => t_power(e),
            StuLetter::U => {
                if e.rem_euclid(2) == 0 {
                    IntMatrix::identity(2)
                } else {
                    u_matrix()
                }
            }
        };
        acc = acc.mul(&m);
    }
    acc
}

fn require_2x2(m: &IntMatrix) -> Result<()> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::BadShape {
            expected: 2,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(())
}

fn det2(m: &IntMatrix) -> BigInt {
    m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0)
}

fn to_i64(q: BigInt) -> Result<i64> {
    i64::try_from(&q).map_err(|_| Error::ExponentOverflow)
}

/// Nearest-integer quotient of `a / b` (ties rounded toward zero).
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if (&r * 2u8).abs() > b.abs() {
        if (r < BigInt::zero()) == (b < &BigInt::zero()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Expresses a matrix with determinant `+-1` as a word over `{S, T, U}`.
///
/// Continued-fraction descent on the first column: whichever of the two
/// entries is larger in absolute value is reduced by a nearest-integer
/// multiple of the other, via a left multiplication by a power of `S` or
/// `T`; the rotation `STS` handles a vanishing corner. The word length is
/// logarithmic in the largest entry. Words are not canonical; the contract
/// is `stu_eval(decompose_gl2(M)) = M` exactly.
pub fn decompose_gl2(m: &IntMatrix) -> Result<StuWord> {
    require_2x2(m)?;
    let det = det2(m);
    if !det.abs().is_one() {
        return Err(Error::NotUnimodular {
            det: det.to_string(),
        });
    }
    let mut n = m.clone();
    let trailing_u = det == BigInt::from(-1);
    if trailing_u {
        // M = (M U) U and det(M U) = 1
        n = n.mul(&u_matrix());
    }

    // Left operations applied to n, in application order.
    enum Op {
        S(i64),
        T(i64),
        Rot, // STS = [[0,1],[-1,0]]
    }
    let mut ops: Vec<Op> = Vec::new();
    let apply_s = |n: &mut IntMatrix, k: &BigInt| {
        // row0 += k * row1
        let r0 = (n.get(0, 0) + k * n.get(1, 0), n.get(0, 1) + k * n.get(1, 1));
        n.set(0, 0, r0.0);
        n.set(0, 1, r0.1);
    };
    let apply_t = |n: &mut IntMatrix, k: &BigInt| {
        // row1 -= k * row0
        let r1 = (n.get(1, 0) - k * n.get(0, 0), n.get(1, 1) - k * n.get(0, 1));
        n.set(1, 0, r1.0);
        n.set(1, 1, r1.1);
    };
    let apply_rot = |n: &mut IntMatrix| {
        // rows (r0, r1) -> (r1, -r0)
        let r0 = (n.get(0, 0).clone(), n.get(0, 1).clone());
        let r1 = (n.get(1, 0).clone(), n.get(1, 1).clone());
        n.set(0, 0, r1.0);
        n.set(0, 1, r1.1);
        n.set(1, 0, -r0.0);
        n.set(1, 1, -r0.1);
    };

    loop {
        let a = n.get(0, 0).clone();
        let c = n.get(1, 0).clone();
        if c.is_zero() {
            break;
        }
        if a.is_zero() {
            apply_rot(&mut n);
            ops.push(Op::Rot);
            continue;
        }
        if a.abs() >= c.abs() {
            let q = round_div(&a, &c);
            debug_assert!(!q.is_zero());
            apply_s(&mut n, &(-&q));
            ops.push(Op::S(to_i64(-&q)?));
        } else {
            let q = round_div(&c, &a);
            debug_assert!(!q.is_zero());
            apply_t(&mut n, &q);
            ops.push(Op::T(to_i64(q)?));
        }
    }

    // n is now [[a, b], [0, d]] with a d = 1.
    let a = n.get(0, 0).clone();
    let b = n.get(0, 1).clone();
    debug_assert!(a.abs().is_one());
    let mut word = StuWord::empty();
    // (ops_k ... ops_1) n0 = n  =>  n0 = ops_1^-1 ... ops_k^-1 n
    for op in &ops {
        match op {
            Op::S(k) => word.push(StuLetter::S, -k),
            Op::T(k) => word.push(StuLetter::T, -k),
            Op::Rot => {
                // (STS)^-1 = S^-1 T^-1 S^-1
                word.push(StuLetter::S, -1);
                word.push(StuLetter::T, -1);
                word.push(StuLetter::S, -1);
            }
        }
    }
    if a.is_one() {
        // [[1, b], [0, 1]] = S^b
        word.push(StuLetter::S, to_i64(b)?);
    } else {
        // [[-1, b], [0, -1]] = (STS)^2 S^-b
        word.push(StuLetter::S, 1);
        word.push(StuLetter::T, 1);
        word.push(StuLetter::S, 2);
        word.push(StuLetter::T, 1);
        word.push(StuLetter::S, 1);
        word.push(StuLetter::S, to_i64(-b)?);
    }
    if trailing_u {
        word.push(StuLetter::U, 1);
    }
    Ok(word.free_reduce())
}

/// The substitution `S -> A2`, `T -> A2^-1 A1 A2`, `U -> A2^-1 Y A2`,
/// extended letterwise and freely reduced. Its image under the homology
/// representation recovers `stu_eval`.
pub fn stu_to_mcg(w: &StuWord) -> Word {
    let a1 = GenLetter::a(1).unwrap();
    let a2 = GenLetter::a(2).unwrap();
    let y = GenLetter::y();
    let mut letters: Vec<(GenLetter, i64)> = Vec::new();
    for &(l, e) in w.letters() {
        match l {
            StuLetter::S => letters.push((a2.clone(), e)),
            StuLetter::T => {
                letters.push((a2.clone(), -1));
                letters.push((a1.clone(), e));
                letters.push((a2.clone(), 1));
            }
            StuLetter::U => {
                if e.rem_euclid(2) == 1 {
                    letters.push((a2.clone(), -1));
                    letters.push((y.clone(), 1));
                    letters.push((a2.clone(), 1));
                }
            }
        }
    }
    Word::from_letters(letters).free_reduce()
}

fn genus3() -> Genus {
    Genus::new(3).unwrap()
}

/// Decides triviality of a genus 3 word in the mapping class group: the
/// homology representation is faithful there, so a word is trivial exactly
/// when its image in `GL(2, Z)` is the identity.
pub fn n3_is_trivial(w: &Word) -> Result<bool> {
    w.validate(genus3())?;
    Ok(rho(genus3(), w)?.is_identity())
}

/// Decides equality of two genus 3 words via triviality of `w1 w2^-1`.
pub fn n3_equal(w1: &Word, w2: &Word) -> Result<bool> {
    n3_is_trivial(&w1.concat(&w2.inverse()))
}

/// True when the matrix lies in the level 2 congruence subgroup: determinant
/// `+-1` and congruent to the identity mod 2.
pub fn level2_member(m: &IntMatrix) -> Result<bool> {
    require_2x2(m)?;
    let det = det2(m);
    if !det.abs().is_one() {
        return Err(Error::NotUnimodular {
            det: det.to_string(),
        });
    }
    Ok(m.mod2().is_identity())
}

/// The four level 2 generators for genus 3, in catalog order, with their
/// images in `GL(2, Z)`:
///
/// ```text
/// Y[1;1,2] -> [[-1, 2], [ 0,  1]]      Y[1;1,3] -> [[-1, 0], [0,  1]]
/// Y[2;1,2] -> [[ 1, 0], [ 2, -1]]      Y[2;2,3] -> [[ 1, 0], [0, -1]]
/// ```
fn genus3_generators() -> Vec<(GenLetter, IntMatrix)> {
    let pairs = [
        (vec![1], vec![1, 2]),
        (vec![1], vec![1, 3]),
        (vec![2], vec![1, 2]),
        (vec![2], vec![2, 3]),
    ];
    pairs
        .into_iter()
        .map(|(i, j)| {
            let i = CurveIndex::new(i).unwrap();
            let j = CurveIndex::new(j).unwrap();
            let image = action::slide_action(genus3(), &i, &j)
                .unwrap()
                .project_r()
                .0;
            (GenLetter::slide(i, j).unwrap(), image)
        })
        .collect()
}

/// Expresses a level 2 matrix as a word in the four genus 3 slide
/// generators, with `eta(result) = M` exactly.
///
/// Descent: with `M = I mod 2` the corner entries have opposite parities, so
/// a nearest-integer reduction by an even multiple (a left multiplication by
/// `S^2k` or `T^2k`, both products of two generators) strictly shrinks the
/// larger of the two first-column entries until the matrix is an upper
/// triangular level 2 matrix, which is a signed power of `S^2`. Termination
/// needs no backtracking.
pub fn level2_decompose(m: &IntMatrix) -> Result<Word> {
    require_2x2(m)?;
    if !level2_member(m)? {
        return Err(Error::NotLevelTwo);
    }
    let gens = genus3_generators();
    // direct hit: a single generator
    for (letter, image) in &gens {
        if m == image {
            return Ok(Word::single(letter.clone()));
        }
    }
    let y12 = || gens[0].0.clone();
    let y13 = || gens[1].0.clone();
    let y212 = || gens[2].0.clone();
    let y223 = || gens[3].0.clone();

    // word builders for the level 2 building blocks
    let s2_power = |k: i64| -> Vec<(GenLetter, i64)> {
        // S^2 = Y[1;1,2] Y[1;1,3]
        let mut out = Vec::new();
        if k > 0 {
            for _ in 0..k {
                out.push((y12(), 1));
                out.push((y13(), 1));
            }
        } else {
            for _ in 0..(-k) {
                out.push((y13(), 1));
                out.push((y12(), 1));
            }
        }
        out
    };
    let t2_power = |k: i64| -> Vec<(GenLetter, i64)> {
        // T^2 = Y[2;2,3] Y[2;1,2]
        let mut out = Vec::new();
        if k > 0 {
            for _ in 0..k {
                out.push((y223(), 1));
                out.push((y212(), 1));
            }
        } else {
            for _ in 0..(-k) {
                out.push((y212(), 1));
                out.push((y223(), 1));
            }
        }
        out
    };

    let mut n = m.clone();
    let trailing = if det2(&n) == BigInt::from(-1) {
        // M = (M G4) G4 with G4 = eta(Y[2;2,3]) its own inverse
        n = n.mul(&gens[3].1);
        Some(y223())
    } else {
        None
    };

    enum Op {
        S2(i64),
        T2(i64),
    }
    let mut ops = Vec::new();
    let two = BigInt::from(2);
    loop {
        let a = n.get(0, 0).clone();
        let c = n.get(1, 0).clone();
        if c.is_zero() {
            break;
        }
        debug_assert!(a.is_odd() && c.is_even());
        if c.abs() > a.abs() {
            // row1 -= 2k * row0, i.e. left multiply by T^{2k}
            let k = round_div(&c, &(&a * &two));
            let shift = &two * &k;
            n.set(1, 0, &c - &shift * &a);
            let new11 = n.get(1, 1) - &shift * n.get(0, 1);
            n.set(1, 1, new11);
            ops.push(Op::T2(to_i64(k)?));
        } else {
            // row0 -= 2k * row1, i.e. left multiply by S^{-2k}
            let k = round_div(&a, &(&c * &two));
            let shift = &two * &k;
            n.set(0, 0, &a - &shift * &c);
            let new01 = n.get(0, 1) - &shift * n.get(1, 1);
            n.set(0, 1, new01);
            ops.push(Op::S2(to_i64(-k)?));
        }
    }

    // n = [[a, b], [0, d]] with a = d = +-1 and b even
    let a = n.get(0, 0).clone();
    let d = n.get(1, 1).clone();
    debug_assert!(a.abs().is_one() && d.abs().is_one());
    let shear = n.get(0, 1).clone();
    let half_shear = to_i64(&shear / &two)?;

    let mut letters: Vec<(GenLetter, i64)> = Vec::new();
    // n_final = L_k ... L_1 n0  =>  n0 = L_1^-1 ... L_k^-1 n_final
    for op in &ops {
        match op {
            Op::S2(k) => letters.extend(s2_power(-k)),
            Op::T2(k) => letters.extend(t2_power(-k)),
        }
    }
    if a == BigInt::from(-1) {
        // -I = Y[1;1,3] Y[2;2,3], and [[-1, s],[0,-1]] = -I * S^{-s}
        letters.push((y13(), 1));
        letters.push((y223(), 1));
        letters.extend(s2_power(-half_shear));
    } else {
        letters.extend(s2_power(half_shear));
    }
    if let Some(g4) = trailing {
        letters.push((g4, 1));
    }
    let word = Word::from_letters(letters).free_reduce();
    debug_assert_eq!(&crate::eta(genus3(), &word).unwrap().0, m);
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stu(letters: &[(StuLetter, i64)]) -> StuWord {
        StuWord::from_letters(letters.to_vec())
    }

    #[test]
    fn generator_matrices() {
        use StuLetter::*;
        assert_eq!(stu_eval(&stu(&[(S, 1)])), mat2(1, 1, 0, 1));
        assert_eq!(stu_eval(&stu(&[(T, 1)])), mat2(1, 0, -1, 1));
        assert_eq!(stu_eval(&stu(&[(U, 1)])), mat2(-1, 0, 0, 1));
    }

    #[test]
    fn presentation_relations_hold() {
        use StuLetter::*;
        let sts = stu(&[(S, 1), (T, 1), (S, 1)]);
        let tst = stu(&[(T, 1), (S, 1), (T, 1)]);
        assert_eq!(stu_eval(&sts), stu_eval(&tst));
        let sts4 = stu(&[(S, 1), (T, 1), (S, 1)].repeat(4));
        assert!(stu_eval(&sts4).is_identity());
        assert!(stu_eval(&stu(&[(U, 2)])).is_identity());
        let us2 = stu(&[(U, 1), (S, 1), (U, 1), (S, 1)]);
        assert!(stu_eval(&us2).is_identity());
        let ut2 = stu(&[(U, 1), (T, 1), (U, 1), (T, 1)]);
        assert!(stu_eval(&ut2).is_identity());
    }

    #[test]
    fn determinant_tracks_u_parity() {
        use StuLetter::*;
        let w = stu(&[(S, 3), (U, 1), (T, -2)]);
        assert_eq!(det2(&stu_eval(&w)), BigInt::from(-1));
        let w = stu(&[(S, 3), (U, 1), (T, -2), (U, 1)]);
        assert_eq!(det2(&stu_eval(&w)), BigInt::from(1));
    }

    #[test]
    fn decompose_round_trips_basic_matrices() {
        let cases = [
            IntMatrix::identity(2),
            mat2(1, 1, 0, 1),
            mat2(-1, 2, 0, 1),
            mat2(0, 1, -1, 0),
            mat2(-1, 0, 0, -1),
            mat2(1, 0, 0, -1),
            mat2(7, 3, 2, 1),
            mat2(-5, 19, 4, -15),
        ];
        for m in cases {
            let w = decompose_gl2(&m).unwrap();
            assert_eq!(stu_eval(&w), m, "round trip failed for\n{m}");
        }
        assert!(decompose_gl2(&IntMatrix::identity(2)).unwrap().is_empty());
    }

    #[test]
    fn decompose_rejects_non_unimodular() {
        assert!(matches!(
            decompose_gl2(&mat2(2, 0, 0, 1)),
            Err(Error::NotUnimodular { .. })
        ));
    }

    #[test]
    fn shear_exponents_beyond_i64_error_out() {
        // [[1, 2^70], [0, 1]] is unimodular and level 2 but its word needs
        // an exponent no i64 can hold; both decompositions must refuse
        // rather than wrap
        let huge = BigInt::from(1u128 << 70);
        let m = IntMatrix::from_rows(vec![
            vec![BigInt::from(1), huge],
            vec![BigInt::from(0), BigInt::from(1)],
        ])
        .unwrap();
        assert_eq!(decompose_gl2(&m).unwrap_err(), Error::ExponentOverflow);
        assert_eq!(level2_decompose(&m).unwrap_err(), Error::ExponentOverflow);
    }

    #[test]
    fn substitution_is_a_section_of_rho() {
        use StuLetter::*;
        let g3 = genus3();
        for w in [
            stu(&[(S, 1)]),
            stu(&[(T, 1)]),
            stu(&[(U, 1)]),
            stu(&[(S, 2), (T, -1), (U, 1), (S, -3)]),
        ] {
            let word = stu_to_mcg(&w);
            assert_eq!(rho(g3, &word).unwrap().0, stu_eval(&w), "failed for {w}");
        }
        assert_eq!(stu_to_mcg(&stu(&[(S, 1)])).to_string(), "A2");
        assert_eq!(stu_to_mcg(&stu(&[(U, 1)])).to_string(), "A2^-1 Y A2");
        assert!(stu_to_mcg(&StuWord::empty()).is_empty());
    }

    #[test]
    fn genus3_word_problem_examples() {
        let g3 = genus3();
        let braid = Word::parse("A1 A2 A1 A2^-1 A1^-1 A2^-1", g3).unwrap();
        assert!(n3_is_trivial(&braid).unwrap());
        let ya1_sq = Word::parse("Y A1 Y A1", g3).unwrap();
        assert!(n3_is_trivial(&ya1_sq).unwrap());
        assert!(!n3_is_trivial(&Word::parse("A1", g3).unwrap()).unwrap());
        let lhs = Word::parse("A1 A2 A1", g3).unwrap();
        let rhs = Word::parse("A2 A1 A2", g3).unwrap();
        assert!(n3_equal(&lhs, &rhs).unwrap());
        assert!(!n3_equal(&lhs, &Word::parse("A1", g3).unwrap()).unwrap());
    }

    #[test]
    fn level2_membership_examples() {
        assert!(level2_member(&IntMatrix::identity(2)).unwrap());
        assert!(!level2_member(&mat2(1, 1, 0, 1)).unwrap());
        assert!(level2_member(&mat2(-1, 2, 0, 1)).unwrap());
        assert!(level2_member(&mat2(1, 0, 2, 1)).unwrap());
        assert!(matches!(
            level2_member(&mat2(2, 0, 0, 2)),
            Err(Error::NotUnimodular { .. })
        ));
    }

    #[test]
    fn level2_decompose_examples() {
        assert!(level2_decompose(&IntMatrix::identity(2)).unwrap().is_empty());
        let w = level2_decompose(&mat2(-1, 2, 0, 1)).unwrap();
        assert_eq!(w.to_string(), "Y");
        let w = level2_decompose(&mat2(1, 0, 2, 1)).unwrap();
        assert_eq!(crate::eta(genus3(), &w).unwrap().0, mat2(1, 0, 2, 1));
        assert!(matches!(
            level2_decompose(&mat2(1, 1, 0, 1)),
            Err(Error::NotLevelTwo)
        ));
    }

    #[test]
    fn level2_decompose_handles_moderate_entries() {
        // even powers of S and T stay in the congruence subgroup; this walk
        // produces entries around 10^6
        use StuLetter::*;
        let w = stu(&[(S, 24), (T, 18), (S, -30), (T, 40), (S, 2), (T, -2)]);
        let m = stu_eval(&w);
        assert!(m.entry_abs_max() > BigInt::from(100_000));
        assert!(level2_member(&m).unwrap());
        let word = level2_decompose(&m).unwrap();
        assert_eq!(crate::eta(genus3(), &word).unwrap().0, m);
    }
}
