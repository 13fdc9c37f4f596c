//! Braid words in the Artin generators `σ_i`.
//!
//! No normal form is kept. Equality of braids is decided through the Artin
//! action on the free group, which is faithful.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::freegroup::{push_reduced, FreeEndo, FreeWord, Letter};
use crate::{Error, Result};

/// A word in `σ_1, …, σ_{strands-1}` and their inverses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::ZeroStrands);
        }
        if let Some(l) = letters.iter().find(|l| l.index() == 0 || l.index() >= strands) {
            return Err(Error::CrossingOutOfRange { index: l.index(), strands });
        }
        Ok(BraidWord { strands, letters })
    }

    /// Signed crossing indices: `[1, 2, -3]` is `σ₁σ₂σ₃⁻¹`.
    pub fn from_signed(strands: usize, raw: &[i64]) -> Result<Self> {
        let letters =
            raw.iter().map(|&v| Letter::from_signed(v).ok_or(Error::ZeroLetter)).collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    /// # Panics
    ///
    /// If `strands` is zero.
    pub fn identity(strands: usize) -> Self {
        assert!(strands > 0, "strand count must be positive");
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.signed()).collect()
    }

    /// Word concatenation; no cancellation is performed.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    #[must_use]
    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        BraidWord { strands: self.strands, letters }
    }

    /// Repeats the word `m` times; negative `m` repeats the inverse.
    #[must_use]
    pub fn power(&self, m: i64) -> BraidWord {
        let base = if m < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * m.unsigned_abs() as usize);
        for _ in 0..m.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// The same letters read on more strands.
    pub fn include(&self, strands: usize) -> Result<BraidWord> {
        if strands < self.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: strands });
        }
        Ok(BraidWord { strands, letters: self.letters.clone() })
    }

    /// `A_{ij} = σ_{j-1}⋯σ_{i+1} σ_i² σ_{i+1}⁻¹⋯σ_{j-1}⁻¹` on `strands` strands.
    pub fn pure_gen(i: usize, j: usize, strands: usize) -> Result<BraidWord> {
        if !(1 <= i && i < j && j <= strands) {
            return Err(Error::PureGenerator { i, j, strands });
        }
        let mut letters = Vec::with_capacity(2 * (j - i));
        letters.extend((i + 1..j).rev().map(|k| Letter::pos(k as u32)));
        letters.push(Letter::pos(i as u32));
        letters.push(Letter::pos(i as u32));
        letters.extend((i + 1..j).map(|k| Letter::neg(k as u32)));
        Ok(BraidWord { strands, letters })
    }

    /// Strand permutation, composed left to right.
    pub fn perm(&self) -> Permutation {
        // at[p] = strand currently in position p
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            at.swap(l.index() - 1, l.index());
        }
        let mut images = alloc::vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            images[strand] = pos;
        }
        Permutation { images }
    }

    pub fn fixes_last_strand(&self) -> bool {
        let n = self.strands;
        self.perm().apply(n) == n
    }

    /// The Artin action on `F_strands`: `σ_i` sends `x_i ↦ x_i x_{i+1} x_i⁻¹`,
    /// `x_{i+1} ↦ x_i`; letters act left to right.
    pub fn artin(&self) -> FreeEndo {
        let rank = self.strands;
        let images = (1..=rank as u32).map(|k| artin_image(rank, &self.letters, k)).collect();
        FreeEndo::new(images).expect("images have matching rank")
    }

    /// Semantic equality via the (faithful) Artin action.
    pub fn braid_eq(&self, other: &BraidWord) -> Result<bool> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        let rank = self.strands;
        Ok((1..=rank as u32).all(|k| artin_image(rank, &self.letters, k) == artin_image(rank, &other.letters, k)))
    }
}

/// Image of `x_k` under the Artin action of `letters`.
fn artin_image(rank: usize, letters: &[Letter], k: u32) -> FreeWord {
    let mut word = alloc::vec![Letter::pos(k)];
    let mut next = Vec::new();
    for l in letters {
        let i = l.index() as u32;
        next.clear();
        for &x in &word {
            let sub: &[Letter] = match (x.index() as u32 == i, x.index() as u32 == i + 1, l.is_inverse()) {
                (true, _, false) => &[Letter::pos(i), Letter::pos(i + 1), Letter::neg(i)],
                (_, true, false) => &[Letter::pos(i)],
                (true, _, true) => &[Letter::pos(i + 1)],
                (_, true, true) => &[Letter::neg(i + 1), Letter::pos(i), Letter::pos(i + 1)],
                _ => {
                    push_reduced(&mut next, x);
                    continue;
                }
            };
            if x.is_inverse() {
                for &s in sub.iter().rev() {
                    push_reduced(&mut next, s.inverse());
                }
            } else {
                for &s in sub {
                    push_reduced(&mut next, s);
                }
            }
        }
        core::mem::swap(&mut word, &mut next);
    }
    FreeWord::from_reduced(rank, word)
}

/// Panics on strand mismatch; use [`BraidWord::concat`] for the checked form.
impl Mul for &BraidWord {
    type Output = BraidWord;

    fn mul(self, rhs: &BraidWord) -> BraidWord {
        self.concat(rhs).expect("strand mismatch in braid product")
    }
}

/// Printed as signed crossing indices, `e` for the empty word.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l.signed())?;
        }
        Ok(())
    }
}

/// A bijection of `{1, …, n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From 1-based images; `None` unless the list is a bijection.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in images {
            if i == 0 || i > n || core::mem::replace(&mut seen[i - 1], true) {
                return None;
            }
        }
        Some(Permutation { images: images.iter().map(|i| i - 1).collect() })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// Diagrammatic: `self` first, then `then`.
    pub fn compose(&self, then: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&i| then.images[i]).collect() }
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().enumerate().filter(|(i, &j)| *i == j).map(|(i, _)| i + 1)
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}->{}", i + 1, j + 1)?;
        }
        Ok(())
    }
}
