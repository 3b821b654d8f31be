//! Formal words over the generator alphabet.
//!
//! Letters are kept in a normalized form: the shorthand generators are
//! resolved at construction (`A_i` is the twist on `{i, i+1}`, `B` the twist
//! on `{1,2,3,4}`, the bare `Y` the slide of `{1}` along `{1,2}`), so equal
//! mapping classes written with different sugar reduce against each other.
//!
//! Words are formal: equality of words is not equality in the mapping class
//! group. Only homology shadows of words are ever compared, except in genus 3
//! where the representation is faithful.

use std::fmt;

use crate::error::{Error, Result};
use crate::homology::{iota_apply, CurveIndex, Genus};
use num_bigint::BigInt;
use num_traits::One;

/// A generator letter: a Dehn twist about a two-sided standard curve, or a
/// crosscap slide of a one-sided standard curve along a two-sided one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GenLetter {
    /// `Twist(J)`: requires even `|J|`.
    Twist(CurveIndex),
    /// `Slide(I, J)`: requires `I ⊂ J`, `|I|` odd, `|J|` even, and the
    /// intersection functional of `J` evaluating to `±1` on the class of `I`.
    Slide(CurveIndex, CurveIndex),
}

impl GenLetter {
    pub fn twist(j: CurveIndex) -> Result<Self> {
        if !j.is_two_sided() {
            return Err(Error::OddSupport {
                support: j.to_string(),
                size: j.len(),
            });
        }
        Ok(GenLetter::Twist(j))
    }

    pub fn slide(i: CurveIndex, j: CurveIndex) -> Result<Self> {
        let fail = |reason: &str| Error::SlideConfig {
            i: i.to_string(),
            j: j.to_string(),
            reason: reason.to_string(),
        };
        if i.len().is_multiple_of(2) {
            return Err(fail("the slid curve must be one-sided (odd support)"));
        }
        if !j.is_two_sided() {
            return Err(fail("the sliding path must be two-sided (even support)"));
        }
        if !i.is_subset_of(&j) {
            return Err(fail("the slid support must be contained in the path support"));
        }
        // The closed-form action is an involution exactly when the
        // intersection functional takes value +-1 on the slid class.
        let big = Genus::new(j.max_index().max(2)).unwrap();
        let signs = j.iota_signs(big).unwrap();
        let mut coords = vec![BigInt::from(0); big.get()];
        for &k in i.indices() {
            coords[k - 1] = BigInt::one();
        }
        let pairing = iota_apply(&signs, &coords);
        if !(&pairing * &pairing).is_one() {
            return Err(fail("the curves do not intersect homologically once"));
        }
        Ok(GenLetter::Slide(i, j))
    }

    /// `A_i`: the twist on `{i, i+1}`.
    pub fn a(i: usize) -> Result<Self> {
        if i == 0 {
            return Err(Error::UnsortedIndices(vec![0]));
        }
        Self::twist(CurveIndex::pair(i, i + 1)?)
    }

    /// `B`: the twist on `{1, 2, 3, 4}`.
    pub fn b() -> Self {
        Self::twist(CurveIndex::new(vec![1, 2, 3, 4]).unwrap()).unwrap()
    }

    /// `Y`: the slide of `{1}` along `{1, 2}`.
    pub fn y() -> Self {
        Self::slide(
            CurveIndex::singleton(1).unwrap(),
            CurveIndex::new(vec![1, 2]).unwrap(),
        )
        .unwrap()
    }

    /// Checks range constraints against a genus: every index must fit, and
    /// the four-crosscap twist needs genus at least 4.
    pub fn validate(&self, genus: Genus) -> Result<()> {
        match self {
            GenLetter::Twist(j) => {
                if j.indices() == [1, 2, 3, 4] && genus.get() < 4 {
                    return Err(Error::LetterGenus {
                        letter: self.to_string(),
                        min: 4,
                        got: genus.get(),
                    });
                }
                j.check_genus(genus)
            }
            GenLetter::Slide(i, j) => {
                i.check_genus(genus)?;
                j.check_genus(genus)
            }
        }
    }
}

/// A formal word: a sequence of letters with nonzero integer exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<(GenLetter, i64)>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    /// Builds a word, dropping zero exponents but not merging neighbours.
    pub fn from_letters(letters: Vec<(GenLetter, i64)>) -> Self {
        Word {
            letters: letters.into_iter().filter(|(_, e)| *e != 0).collect(),
        }
    }

    pub fn single(letter: GenLetter) -> Self {
        Word {
            letters: vec![(letter, 1)],
        }
    }

    #[inline]
    pub fn letters(&self) -> &[(GenLetter, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of (letter, exponent) syllables.
    pub fn syllable_len(&self) -> usize {
        self.letters.len()
    }

    pub fn validate(&self, genus: Genus) -> Result<()> {
        for (l, _) in &self.letters {
            l.validate(genus)?;
        }
        Ok(())
    }

    /// Merges adjacent equal letters and drops zero exponents until stable.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<(GenLetter, i64)> = Vec::with_capacity(self.letters.len());
        for (l, e) in &self.letters {
            if *e == 0 {
                continue;
            }
            match out.last_mut() {
                Some((top, te)) if top == l => {
                    *te = te.checked_add(*e).expect("exponent overflow");
                    if *te == 0 {
                        out.pop();
                    }
                }
                _ => out.push((l.clone(), *e)),
            }
        }
        Word { letters: out }
    }

    /// The reversed word with negated exponents, freely reduced.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|(l, e)| (l.clone(), -e))
                .collect(),
        }
        .free_reduce()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Word { letters }
    }

    /// `h w h^{-1}`, freely reduced.
    pub fn conjugate(h: &Word, w: &Word) -> Word {
        h.concat(w).concat(&h.inverse()).free_reduce()
    }

    pub fn pow(&self, e: i64) -> Word {
        if e == 0 {
            return Word::empty();
        }
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..e.unsigned_abs() {
            out = out.concat(&base);
        }
        out.free_reduce()
    }

    /// Parses the word grammar and validates every letter against `genus`.
    ///
    /// ```text
    /// word    := e | term (ws term)*
    /// term    := letter ("^" int)?
    /// letter  := "A" int | "B" | "Y" | "T[" intlist "]" | "Y[" intlist ";" intlist "]"
    /// intlist := int ("," int)*
    /// ```
    ///
    /// Bracketed index lists must be strictly increasing. The bare `Y` is
    /// shorthand for `Y[1;1,2]`.
    pub fn parse(text: &str, genus: Genus) -> Result<Word> {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
            genus,
        }
        .word()
    }
}

impl fmt::Display for GenLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenLetter::Twist(j) => {
                let ix = j.indices();
                if ix.len() == 2 && ix[1] == ix[0] + 1 {
                    write!(f, "A{}", ix[0])
                } else if ix == [1, 2, 3, 4] {
                    write!(f, "B")
                } else {
                    write!(f, "T[{j}]")
                }
            }
            GenLetter::Slide(i, j) => {
                if i.indices() == [1] && j.indices() == [1, 2] {
                    write!(f, "Y")
                } else {
                    write!(f, "Y[{i};{j}]")
                }
            }
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
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

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    genus: Genus,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn skip_ws(&mut self) -> bool {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
        self.pos > start
    }

    fn word(mut self) -> Result<Word> {
        let mut letters = Vec::new();
        self.skip_ws();
        if self.peek().is_none() {
            return Ok(Word::empty());
        }
        loop {
            letters.push(self.term()?);
            let had_ws = self.skip_ws();
            match self.peek() {
                None => break,
                Some(_) if had_ws => {}
                Some(b) => {
                    return self.err(format!(
                        "expected whitespace between terms, found '{}'",
                        b as char
                    ))
                }
            }
        }
        let word = Word::from_letters(letters);
        word.validate(self.genus)?;
        Ok(word)
    }

    fn term(&mut self) -> Result<(GenLetter, i64)> {
        let letter = self.letter()?;
        let exponent = if self.peek() == Some(b'^') {
            self.bump();
            self.signed_int()?
        } else {
            1
        };
        Ok((letter, exponent))
    }

    fn letter(&mut self) -> Result<GenLetter> {
        let at = self.pos;
        match self.bump() {
            Some(b'A') => {
                let i = self.unsigned_int()?;
                GenLetter::a(i).map_err(|e| self.constraint(at, e))
            }
            Some(b'B') => Ok(GenLetter::b()),
            Some(b'T') => {
                self.expect(b'[')?;
                let j = self.index_set()?;
                self.expect(b']')?;
                GenLetter::twist(j).map_err(|e| self.constraint(at, e))
            }
            Some(b'Y') => {
                if self.peek() == Some(b'[') {
                    self.bump();
                    let i = self.index_set()?;
                    self.expect(b';')?;
                    let j = self.index_set()?;
                    self.expect(b']')?;
                    GenLetter::slide(i, j).map_err(|e| self.constraint(at, e))
                } else {
                    Ok(GenLetter::y())
                }
            }
            Some(b) => self.err(format!("expected a letter, found '{}'", b as char)),
            None => self.err("expected a letter, found end of input"),
        }
    }

    fn constraint(&self, at: usize, e: Error) -> Error {
        Error::Parse {
            position: at,
            message: e.to_string(),
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected '{}'", b as char))
        }
    }

    fn index_set(&mut self) -> Result<CurveIndex> {
        let at = self.pos;
        let mut ix = vec![self.unsigned_int()?];
        while self.peek() == Some(b',') {
            self.bump();
            ix.push(self.unsigned_int()?);
        }
        CurveIndex::new(ix).map_err(|e| self.constraint(at, e))
    }

    fn unsigned_int(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected an integer");
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse {
                position: start,
                message: "integer out of range".into(),
            })
    }

    fn signed_int(&mut self) -> Result<i64> {
        let start = self.pos;
        if matches!(self.peek(), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start || (self.pos == start + 1 && !self.bytes[start].is_ascii_digit()) {
            return self.err("expected an integer");
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse {
                position: start,
                message: "integer out of range".into(),
            })
    }
}
