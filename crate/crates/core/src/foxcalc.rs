//! The integral group ring `ℤ[F_n]`, Fox derivatives, and raw Reidemeister traces.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::freegroup::{FreeEndo, FreeWord};
use crate::{Error, Result};

/// A finite integer combination of reduced words. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupRingElem {
    rank: usize,
    terms: BTreeMap<FreeWord, BigInt>,
}

impl GroupRingElem {
    pub fn zero(rank: usize) -> Self {
        GroupRingElem { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::term(FreeWord::identity(rank), BigInt::one())
    }

    pub fn term(word: FreeWord, coefficient: BigInt) -> Self {
        let mut out = Self::zero(word.rank());
        out.add_term(word, coefficient);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (FreeWord, BigInt)>>(rank: usize, terms: I) -> Result<Self> {
        let mut out = Self::zero(rank);
        for (w, c) in terms {
            check_rank(rank, w.rank())?;
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub(crate) fn add_term(&mut self, word: FreeWord, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Terms in shortlex order of their words.
    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &FreeWord) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &GroupRingElem) -> Result<GroupRingElem> {
        check_rank(self.rank, other.rank)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GroupRingElem) -> Result<GroupRingElem> {
        self.add(&other.negate())
    }

    #[must_use]
    pub fn negate(&self) -> GroupRingElem {
        let terms = self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect();
        GroupRingElem { rank: self.rank, terms }
    }

    /// `w · self`.
    pub fn left_mul(&self, w: &FreeWord) -> Result<GroupRingElem> {
        check_rank(self.rank, w.rank())?;
        let mut out = Self::zero(self.rank);
        for (v, c) in &self.terms {
            out.add_term(w * v, c.clone());
        }
        Ok(out)
    }

    /// `self · w`.
    pub fn right_mul(&self, w: &FreeWord) -> Result<GroupRingElem> {
        check_rank(self.rank, w.rank())?;
        let mut out = Self::zero(self.rank);
        for (v, c) in &self.terms {
            out.add_term(v * w, c.clone());
        }
        Ok(out)
    }

    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }
}

fn check_rank(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::RankMismatch { left, right })
    }
}

/// Terms as `+2*[x1 x2^-1]`, unit coefficients as `+[w]`, the empty word as `[e]`.
impl fmt::Display for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write_term(f, c, w)?;
        }
        Ok(())
    }
}

pub(crate) fn write_term(f: &mut fmt::Formatter<'_>, c: &BigInt, w: &FreeWord) -> fmt::Result {
    f.write_str(if c.is_negative() { "-" } else { "+" })?;
    let magnitude = c.abs();
    if !magnitude.is_one() {
        write!(f, "{magnitude}*")?;
    }
    write!(f, "[{w}]")
}

/// Fox derivative `∂w/∂x_j`.
///
/// Walking the reduced word left to right, a letter `x_j` contributes its
/// prefix and a letter `x_j⁻¹` contributes minus the prefix including itself.
pub fn fox(w: &FreeWord, j: usize) -> Result<GroupRingElem> {
    let rank = w.rank();
    if j == 0 || j > rank {
        return Err(Error::GeneratorOutOfRange { index: j, rank });
    }
    let letters = w.letters();
    let mut out = GroupRingElem::zero(rank);
    for (k, l) in letters.iter().enumerate().filter(|(_, l)| l.index() == j) {
        if l.is_inverse() {
            out.add_term(FreeWord::from_reduced(rank, letters[..=k].to_vec()), -BigInt::one());
        } else {
            out.add_term(FreeWord::from_reduced(rank, letters[..k].to_vec()), BigInt::one());
        }
    }
    Ok(out)
}

/// Diagonal of the Fox Jacobian: entry `i` is `∂e(x_i)/∂x_i`.
pub fn jacobian_diagonal(e: &FreeEndo) -> Vec<GroupRingElem> {
    e.images().iter().enumerate().map(|(i, w)| fox(w, i + 1).expect("index within rank")).collect()
}

/// `1 − Σ_i ∂e(x_i)/∂x_i`, before any twisted-conjugacy merging.
pub fn raw_trace(e: &FreeEndo) -> GroupRingElem {
    let mut out = GroupRingElem::one(e.rank());
    for d in jacobian_diagonal(e) {
        for (w, c) in d.terms {
            out.add_term(w, -c);
        }
    }
    out
}
