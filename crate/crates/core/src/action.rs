//! The homology representation: generator letters acting on `H_1(N_g; Z)` as
//! exact integer matrices, the projection to the free quotient, the mod 2
//! action, the level 2 membership test, and the additive invariant of level 2
//! matrices.
//!
//! Conventions. A word `x_1 x_2 ... x_n` acts as the composition with `x_n`
//! applied first, and matrices multiply in written order against column
//! vectors. Twists act as transvections `x -> x + iota_J(x) a_J` and slides
//! as the involutions `x -> x - 2 s iota_J(x) a_I` with `s = iota_J(a_I)`.
//! The sign convention of `iota` (alternating along the sorted support) is
//! pinned by the genus 3 images: the twist on `{2,3}` must project to
//! `[[1,1],[0,1]]` on the free quotient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::homology::{CurveIndex, Genus, HomClass};
use crate::matrix::{F2Matrix, IntMatrix};
use crate::word::{GenLetter, Word};

/// The action of a mapping class on `H_1(N_g; Z)`, as the `g x g` integer
/// matrix whose columns are the images of the crosscap core classes.
///
/// Every action produced here fixes the all-ones vector exactly (the lift of
/// the order 2 class) and has determinant `+-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomAction {
    genus: Genus,
    mat: IntMatrix,
}

impl HomAction {
    pub fn identity(genus: Genus) -> Self {
        HomAction {
            genus,
            mat: IntMatrix::identity(genus.get()),
        }
    }

    #[inline]
    pub fn genus(&self) -> Genus {
        self.genus
    }

    #[inline]
    pub fn matrix(&self) -> &IntMatrix {
        &self.mat
    }

    /// Matrix product `self * other`: `other` acts first.
    pub fn compose(&self, other: &HomAction) -> HomAction {
        debug_assert_eq!(self.genus, other.genus);
        HomAction {
            genus: self.genus,
            mat: self.mat.mul(&other.mat),
        }
    }

    /// Applies the action to a homology class and recanonicalizes.
    pub fn apply(&self, x: &HomClass) -> HomClass {
        let raw = self.mat.mul_vec(x.coeffs());
        HomClass::canonical(self.genus, raw).unwrap()
    }

    /// True when the action is the identity of `H_1(N_g; Z)`: every column
    /// may differ from the corresponding unit vector only by a multiple of
    /// the defining relation `(2, ..., 2)`.
    pub fn is_identity_on_h1(&self) -> bool {
        let g = self.genus.get();
        (0..g).all(|j| {
            let diff0 = self.mat.get(0, j) - BigInt::from((j == 0) as u8);
            if diff0.is_odd() {
                return false;
            }
            (0..g).all(|i| {
                let diff = self.mat.get(i, j) - BigInt::from((i == j) as u8);
                diff == diff0
            })
        })
    }

    /// True when the matrix fixes the all-ones vector exactly.
    pub fn fixes_torsion(&self) -> bool {
        let g = self.genus.get();
        let ones = vec![BigInt::one(); g];
        self.mat.mul_vec(&ones) == ones
    }

    pub fn det(&self) -> BigInt {
        self.mat.det()
    }

    /// The induced action on `H_1(N_g; Z_2) = Z_2^g`.
    pub fn mod2(&self) -> F2Matrix {
        self.mat.mod2()
    }

    /// True when the mod 2 matrix preserves the intersection form on the
    /// crosscap basis, i.e. `M^T M = I` over `Z_2`.
    pub fn preserves_form_mod2(&self) -> bool {
        let m = self.mod2();
        m.transpose().mul(&m).is_identity()
    }

    /// Projection to the free quotient: the `(g-1) x (g-1)` matrix of the
    /// induced automorphism in the basis given by the images of
    /// `c_1, ..., c_{g-1}`.
    pub fn project_r(&self) -> RMatrix {
        let g = self.genus.get();
        let mut out = IntMatrix::zero(g - 1, g - 1);
        for i in 0..g - 1 {
            for j in 0..g - 1 {
                out.set(i, j, self.mat.get(i, j) - self.mat.get(g - 1, j));
            }
        }
        RMatrix(out)
    }
}

/// The image of an action in `Aut(R_g) = GL(g-1, Z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMatrix(pub IntMatrix);

impl RMatrix {
    pub fn identity(n: usize) -> Self {
        RMatrix(IntMatrix::identity(n))
    }

    #[inline]
    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    /// True when the matrix is congruent to the identity mod 2.
    pub fn is_level2(&self) -> bool {
        self.0.mod2().is_identity()
    }
}

/// The indicator column of a support set, as integers.
fn support_column(genus: Genus, ix: &CurveIndex) -> Vec<BigInt> {
    (1..=genus.get())
        .map(|k| BigInt::from(ix.contains(k) as u8))
        .collect()
}

/// Left-multiplies the accumulator by the e-th power of a letter, as a
/// rank 1 update. Twist powers scale the transvection (the functional kills
/// the twisting class); even slide powers vanish (slides are involutions).
fn apply_letter(mat: &mut IntMatrix, genus: Genus, letter: &GenLetter, e: i64) -> Result<()> {
    match letter {
        GenLetter::Twist(j) => {
            let signs = j.iota_signs(genus)?;
            let col = support_column(genus, j);
            mat.rank1_update(&col, &signs, &BigInt::from(e));
        }
        GenLetter::Slide(i, j) => {
            if e % 2 == 0 {
                return Ok(());
            }
            let signs = j.iota_signs(genus)?;
            let col = support_column(genus, i);
            let s = crate::homology::iota_apply(&signs, &col);
            debug_assert!(s.abs().is_one());
            mat.rank1_update(&col, &signs, &(BigInt::from(-2) * s));
        }
    }
    Ok(())
}

/// The transvection `x -> x + iota_J(x) a_J` attached to a two-sided curve.
pub fn twist_action(genus: Genus, j: &CurveIndex) -> Result<HomAction> {
    twist_power(genus, j, 1)
}

/// Closed form for integer powers of a twist.
pub fn twist_power(genus: Genus, j: &CurveIndex, e: i64) -> Result<HomAction> {
    letter_action(genus, &GenLetter::twist(j.clone())?, e)
}

/// The involution `x -> x - 2 s iota_J(x) a_I`, `s = iota_J(a_I)`, attached
/// to sliding the one-sided curve with support `I` along the two-sided curve
/// with support `J`.
pub fn slide_action(genus: Genus, i: &CurveIndex, j: &CurveIndex) -> Result<HomAction> {
    // The letter constructor carries the structural checks, so errors name
    // the failed condition even when the caller bypassed it.
    letter_action(genus, &GenLetter::slide(i.clone(), j.clone())?, 1)
}

/// The action of a single letter with an integer exponent, in closed form.
pub fn letter_action(genus: Genus, letter: &GenLetter, e: i64) -> Result<HomAction> {
    letter.validate(genus)?;
    let mut act = HomAction::identity(genus);
    apply_letter(&mut act.mat, genus, letter, e)?;
    Ok(act)
}

/// Evaluates a word: letter actions multiplied in written order, so the
/// rightmost letter acts first. The empty word is the identity.
pub fn evaluate(genus: Genus, w: &Word) -> Result<HomAction> {
    let mut act = HomAction::identity(genus);
    // Work right to left, left-multiplying each letter as a rank 1 update
    // instead of a full matrix product.
    for (l, e) in w.letters().iter().rev() {
        l.validate(genus)?;
        apply_letter(&mut act.mat, genus, l, *e)?;
    }
    Ok(act)
}

/// The composite `project_r . evaluate`: the image in `GL(g-1, Z)`.
pub fn rho(genus: Genus, w: &Word) -> Result<RMatrix> {
    Ok(evaluate(genus, w)?.project_r())
}

/// True when the word acts trivially on `H_1(N_g; Z_2)`, i.e. lies in the
/// level 2 subgroup.
pub fn is_level2(genus: Genus, w: &Word) -> Result<bool> {
    Ok(evaluate(genus, w)?.mod2().is_identity())
}

/// The restriction of `rho` to the level 2 subgroup. Rejects words that are
/// not level 2; on its domain the image is congruent to the identity mod 2.
pub fn eta(genus: Genus, w: &Word) -> Result<RMatrix> {
    let act = evaluate(genus, w)?;
    if !act.mod2().is_identity() {
        return Err(Error::WordNotLevelTwo);
    }
    let r = act.project_r();
    debug_assert!(r.is_level2());
    Ok(r)
}

/// The additive invariant of a level 2 matrix: write `X = I + 2A` and return
/// `A mod 2`. Satisfies `f(XY) = f(X) + f(Y)`.
pub fn f_map(x: &RMatrix) -> Result<F2Matrix> {
    let m = x.matrix();
    if !x.is_level2() {
        return Err(Error::NotLevelTwo);
    }
    let n = m.rows();
    let mut out = F2Matrix::zero(n, n);
    let two = BigInt::from(2);
    for i in 0..n {
        for j in 0..n {
            let diff = m.get(i, j) - BigInt::from((i == j) as u8);
            let (half, rem) = diff.div_rem(&two);
            debug_assert!(rem.is_zero());
            if half.is_odd() {
                out.set(i, j, true);
            }
        }
    }
    Ok(out)
}
