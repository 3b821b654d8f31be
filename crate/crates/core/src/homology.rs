//! Exact arithmetic in the first integral homology of a closed nonorientable
//! surface of genus `g`.
//!
//! The group is presented as `Z^g` modulo the rank 1 subgroup generated by
//! `(2, 2, ..., 2)`, with basis classes `c_1, ..., c_g` given by the crosscap
//! core curves. The sum `c = c_1 + ... + c_g` is the unique class of order 2.
//! Every class is stored in a fixed canonical form: the representative whose
//! first coordinate lies in `{0, 1}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// Genus of a closed nonorientable surface. Always at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Genus(usize);

impl Genus {
    pub fn new(g: usize) -> Result<Self> {
        if g < 2 {
            return Err(Error::GenusTooSmall { min: 2, got: g });
        }
        Ok(Genus(g))
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }

    /// Checks a stronger lower bound required by some operations.
    pub fn require(self, min: usize) -> Result<Self> {
        if self.0 < min {
            return Err(Error::GenusTooSmall { min, got: self.0 });
        }
        Ok(self)
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A nonempty, strictly increasing set of 1-based crosscap indices.
///
/// Indexes one of the standard curves: the curve with support `I` is
/// two-sided exactly when `|I|` is even, and its homology class is the sum
/// of the `c_i` over `I`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurveIndex {
    indices: Vec<usize>,
}

impl CurveIndex {
    /// Builds an index set, requiring 1-based strictly increasing entries.
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::EmptyIndexSet);
        }
        if indices[0] == 0 || indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::UnsortedIndices(indices));
        }
        Ok(CurveIndex { indices })
    }

    pub fn singleton(i: usize) -> Result<Self> {
        Self::new(vec![i])
    }

    /// The pair `{i, j}` in sorted order; `i` and `j` must differ.
    pub fn pair(i: usize, j: usize) -> Result<Self> {
        if i < j {
            Self::new(vec![i, j])
        } else {
            Self::new(vec![j, i])
        }
    }

    #[inline]
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn max_index(&self) -> usize {
        *self.indices.last().unwrap()
    }

    /// Two-sided iff the support has even size.
    #[inline]
    pub fn is_two_sided(&self) -> bool {
        self.indices.len().is_multiple_of(2)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// True when every index of `self` also lies in `other`.
    pub fn is_subset_of(&self, other: &CurveIndex) -> bool {
        self.indices.iter().all(|&i| other.contains(i))
    }

    pub fn check_genus(&self, genus: Genus) -> Result<()> {
        let m = self.max_index();
        if m > genus.get() {
            return Err(Error::IndexOutOfRange {
                index: m,
                genus: genus.get(),
            });
        }
        Ok(())
    }

    /// The homology class of the curve: the sum of `c_i` over the support.
    pub fn hom_class(&self, genus: Genus) -> Result<HomClass> {
        self.check_genus(genus)?;
        let mut raw = vec![BigInt::zero(); genus.get()];
        for &i in &self.indices {
            raw[i - 1] = BigInt::one();
        }
        HomClass::canonical(genus, raw)
    }

    /// Signs of the integral intersection functional attached to this set:
    /// the r-th smallest index carries sign `(-1)^r`, all other coordinates 0.
    /// Only well defined on the quotient when the support is even.
    pub fn iota_signs(&self, genus: Genus) -> Result<Vec<i8>> {
        if !self.indices.len().is_multiple_of(2) {
            return Err(Error::OddFunctionalSupport {
                size: self.indices.len(),
            });
        }
        self.check_genus(genus)?;
        let mut signs = vec![0i8; genus.get()];
        for (r, &i) in self.indices.iter().enumerate() {
            // r is 0-based here, so position 1 gets -1.
            signs[i - 1] = if r % 2 == 0 { -1 } else { 1 };
        }
        Ok(signs)
    }
}

impl fmt::Display for CurveIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in &self.indices {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        Ok(())
    }
}

/// An element of `H_1(N_g; Z) = Z^g / <(2, ..., 2)>` in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomClass {
    genus: Genus,
    coeffs: Vec<BigInt>,
}

impl HomClass {
    /// Canonicalizes a raw coefficient vector: subtracts the unique integer
    /// multiple of `(2, ..., 2)` that puts the first coordinate in `{0, 1}`.
    pub fn canonical(genus: Genus, raw: Vec<BigInt>) -> Result<Self> {
        let g = genus.get();
        if raw.len() != g {
            return Err(Error::DimensionMismatch {
                expected: g,
                got: raw.len(),
            });
        }
        let mut coeffs = raw;
        let two = BigInt::from(2);
        // the even part of the first coordinate is the shift to remove
        let shift = &coeffs[0] - coeffs[0].mod_floor(&two);
        if !shift.is_zero() {
            for c in &mut coeffs {
                *c -= &shift;
            }
        }
        debug_assert!(coeffs[0] >= BigInt::zero() && coeffs[0] <= BigInt::one());
        Ok(HomClass { genus, coeffs })
    }

    pub fn from_i64(genus: Genus, raw: &[i64]) -> Result<Self> {
        Self::canonical(genus, raw.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(genus: Genus) -> Self {
        HomClass {
            genus,
            coeffs: vec![BigInt::zero(); genus.get()],
        }
    }

    /// The basis class `c_i` (1-based).
    pub fn basis(genus: Genus, i: usize) -> Result<Self> {
        if i == 0 || i > genus.get() {
            return Err(Error::IndexOutOfRange {
                index: i,
                genus: genus.get(),
            });
        }
        let mut coeffs = vec![BigInt::zero(); genus.get()];
        coeffs[i - 1] = BigInt::one();
        Ok(HomClass { genus, coeffs })
    }

    /// The order 2 class `c = c_1 + ... + c_g`.
    pub fn torsion(genus: Genus) -> Self {
        HomClass {
            genus,
            coeffs: vec![BigInt::one(); genus.get()],
        }
    }

    #[inline]
    pub fn genus(&self) -> Genus {
        self.genus
    }

    #[inline]
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &HomClass) -> Result<HomClass> {
        if self.genus != other.genus {
            return Err(Error::DimensionMismatch {
                expected: self.genus.get(),
                got: other.genus.get(),
            });
        }
        let raw = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        HomClass::canonical(self.genus, raw)
    }

    pub fn neg(&self) -> HomClass {
        let raw = self.coeffs.iter().map(|a| -a).collect();
        HomClass::canonical(self.genus, raw).unwrap()
    }

    /// Coordinatewise reduction to `H_1(N_g; Z_2) = Z_2^g`. Well defined
    /// because the defining relation `(2, ..., 2)` vanishes mod 2.
    pub fn mod2(&self) -> Vec<bool> {
        self.coeffs.iter().map(|c| c.is_odd()).collect()
    }
}

impl fmt::Display for HomClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The `Z_2`-valued intersection form, `sum x_i y_i mod 2` on the crosscap
/// core basis. Symmetric and well defined on the quotient.
pub fn intersect_mod2(x: &HomClass, y: &HomClass) -> bool {
    debug_assert_eq!(x.genus, y.genus);
    x.coeffs
        .iter()
        .zip(&y.coeffs)
        .filter(|(a, b)| a.is_odd() && b.is_odd())
        .count()
        % 2
        == 1
}

/// The integral intersection functional of an even index set `J` applied to
/// `x`: the alternating sum of the coordinates of `x` along the sorted
/// elements of `J`. Even support makes it kill `(2, ..., 2)`, so it descends
/// to the quotient; odd support is rejected.
pub fn iota(j: &CurveIndex, x: &HomClass) -> Result<BigInt> {
    let signs = j.iota_signs(x.genus)?;
    Ok(iota_apply(&signs, &x.coeffs))
}

pub(crate) fn iota_apply(signs: &[i8], coords: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for (s, c) in signs.iter().zip(coords) {
        match s {
            1 => acc += c,
            -1 => acc -= c,
            _ => {}
        }
    }
    acc
}

/// Projection to the free quotient `R_g`: substitutes
/// `c_g = -(c_1 + ... + c_{g-1})`, killing the torsion class. Returns the
/// coordinates in the basis given by the images of `c_1, ..., c_{g-1}`.
pub fn project_r(x: &HomClass) -> Vec<BigInt> {
    let g = x.genus.get();
    let last = &x.coeffs[g - 1];
    x.coeffs[..g - 1].iter().map(|c| c - last).collect()
}
