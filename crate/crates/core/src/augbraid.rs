//! The subgroup `B^n_{n+1} ⊂ B_{n+1}` of braids fixing the last strand, in
//! the semidirect normal form `ι₁(b)·φ(u)` with `b ∈ B_n` and `u ∈ F_n`.
//!
//! `ι₁` is the inclusion that adds an untouched strand on the right, and
//! `φ` sends `x_i` to the pure braid `A_{i,n+1}`. Conjugation by `ι₁(b)`
//! acts on `φ(F_n)` through the Artin action of `b⁻¹`:
//! `ι₁(b)·φ(u)·ι₁(b)⁻¹ = φ(artin(b⁻¹)(u))`.

use alloc::vec::Vec;
use core::fmt;

use crate::braid::BraidWord;
use crate::freegroup::{FreeWord, Letter};
use crate::nielsen::{Bounds, Certificate, Decision, TwistContext};
use crate::{Error, Result};

/// `ι₁(base)·φ(tail)`; `tail` has rank `base.strands()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AugBraid {
    base: BraidWord,
    tail: FreeWord,
}

impl AugBraid {
    pub fn new(base: BraidWord, tail: FreeWord) -> Result<Self> {
        if base.strands() != tail.rank() {
            return Err(Error::RankMismatch { left: base.strands(), right: tail.rank() });
        }
        Ok(AugBraid { base, tail })
    }

    pub fn identity(n: usize) -> Self {
        AugBraid { base: BraidWord::identity(n), tail: FreeWord::identity(n) }
    }

    pub fn base(&self) -> &BraidWord {
        &self.base
    }

    pub fn tail(&self) -> &FreeWord {
        &self.tail
    }

    /// Number of punctures `n`; the realized braid has `n + 1` strands.
    pub fn punctures(&self) -> usize {
        self.base.strands()
    }

    /// The braid `ι₁(base)·φ(tail)` on `n + 1` strands.
    pub fn to_word(&self) -> BraidWord {
        &section_word(&self.base) * &phi_word(&self.tail)
    }

    /// Product in `B^n_{n+1}`.
    pub fn compose(&self, other: &AugBraid) -> Result<AugBraid> {
        if self.punctures() != other.punctures() {
            return Err(Error::RankMismatch { left: self.punctures(), right: other.punctures() });
        }
        let moved = act(&other.base.inverse(), &self.tail)?;
        Ok(AugBraid { base: &self.base * &other.base, tail: &moved * &other.tail })
    }

    #[must_use]
    pub fn inverse(&self) -> AugBraid {
        // (ι(b)φ(u))⁻¹ = ι(b⁻¹)·φ(act(b, u⁻¹))
        let tail = act(&self.base, &self.tail.inverse()).expect("same rank");
        AugBraid { base: self.base.inverse(), tail }
    }

    /// Splits a braid on `n + 1` strands that fixes its last strand.
    pub fn from_word(w: &BraidWord) -> Result<AugBraid> {
        let n = w.strands().checked_sub(1).filter(|&n| n > 0).ok_or(Error::ZeroRank)?;
        let base = delete_last_strand(w)?;
        let pure = &section_word(&base).inverse() * w;
        let last = FreeWord::generator(n + 1, n + 1)?;
        let image = pure.artin().image(n + 1).expect("index within rank").clone();
        let c = last.conjugator(&image)?.ok_or(Error::Internal("last generator image is not a conjugate of itself"))?;
        // Filling the last puncture turns c into the tail.
        let tail = FreeWord::reduce(n, c.letters().iter().copied().filter(|l| l.index() != n + 1))?;
        if !phi_word(&tail).braid_eq(&pure)? {
            return Err(Error::Internal("recovered tail does not realize the pure part"));
        }
        Ok(AugBraid { base, tail })
    }

    pub fn aug_eq(&self, other: &AugBraid) -> Result<bool> {
        if self.punctures() != other.punctures() {
            return Err(Error::RankMismatch { left: self.punctures(), right: other.punctures() });
        }
        Ok(self.tail == other.tail && self.base.braid_eq(&other.base)?)
    }

    /// `φ(α)·self·φ(α)⁻¹`.
    pub fn conjugate_by_tail(&self, alpha: &FreeWord) -> Result<AugBraid> {
        let ctx = TwistContext::new(self.base.artin(), &Bounds::default());
        Ok(AugBraid { base: self.base.clone(), tail: ctx.twisted_conjugate(alpha, &self.tail)? })
    }

    /// Conjugacy by elements of `φ(F_n)`. A `Yes(α)` means
    /// `φ(α)·self·φ(α)⁻¹ = other`.
    pub fn u_equiv(&self, other: &AugBraid, bounds: &Bounds) -> Result<Decision> {
        if self.punctures() != other.punctures() {
            return Err(Error::RankMismatch { left: self.punctures(), right: other.punctures() });
        }
        if !self.base.braid_eq(&other.base)? {
            return Ok(Decision::No(Certificate::BaseMismatch));
        }
        TwistContext::new(self.base.artin(), bounds).twisted_conj(&self.tail, &other.tail)
    }
}

/// Pair form `(<braid> ; <free word>)`.
impl fmt::Display for AugBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} ; {})", self.base, self.tail)
    }
}

/// `φ(u)`: each `x_i^{±1}` becomes `A_{i,n+1}^{±1}`.
pub fn phi_word(u: &FreeWord) -> BraidWord {
    let n = u.rank();
    let mut letters = Vec::new();
    for l in u.letters() {
        let a = BraidWord::pure_gen(l.index(), n + 1, n + 1).expect("generator index within rank");
        let a = if l.is_inverse() { a.inverse() } else { a };
        letters.extend_from_slice(a.letters());
    }
    BraidWord::new(n + 1, letters).expect("pure generators fit on n + 1 strands")
}

/// `ι₁(b)`: the same crossings with a new rightmost strand.
pub fn section_word(b: &BraidWord) -> BraidWord {
    b.include(b.strands() + 1).expect("one more strand")
}

/// The conjugation action of `b` on `F_n ≅ φ(F_n)`:
/// `ι₁(b)·φ(u)·ι₁(b)⁻¹ = φ(act(b, u))`.
pub fn act(b: &BraidWord, u: &FreeWord) -> Result<FreeWord> {
    b.inverse().artin().apply(u)
}

/// Forgets the last strand, renumbering crossings. Fails unless that strand
/// returns to its starting position.
pub fn delete_last_strand(w: &BraidWord) -> Result<BraidWord> {
    let total = w.strands();
    let n = total.checked_sub(1).filter(|&n| n > 0).ok_or(Error::ZeroRank)?;
    let mut pos = total;
    let mut letters = Vec::new();
    for &l in w.letters() {
        let i = l.index();
        if i == pos {
            pos = i + 1;
        } else if i + 1 == pos {
            pos = i;
        } else if i > pos {
            letters.push(Letter::new((i - 1) as u32, l.is_inverse()));
        } else {
            letters.push(l);
        }
    }
    if pos != total {
        return Err(Error::LastStrandMoved);
    }
    BraidWord::new(n, letters)
}
