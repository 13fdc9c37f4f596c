//! Free groups of finite rank and their endomorphisms.
//!
//! Words are stored freely reduced as sequences of [`Letter`]s. Every
//! operation returns a new value; nothing is mutated in place once built.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Mul;

use crate::{Error, Result};

/// A generator `x_i` or its inverse. Generators are numbered from 1.
///
/// The derived order (index ascending, positive before negative) is the
/// enumeration order used everywhere words are sorted or searched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    index: u32,
    inverse: bool,
}

impl Letter {
    pub const fn new(index: u32, inverse: bool) -> Self {
        Letter { index, inverse }
    }

    pub const fn pos(index: u32) -> Self {
        Letter::new(index, false)
    }

    pub const fn neg(index: u32) -> Self {
        Letter::new(index, true)
    }

    /// `3` is `x3`, `-3` is `x3^-1`; zero has no letter.
    pub fn from_signed(value: i64) -> Option<Self> {
        let index = u32::try_from(value.unsigned_abs()).ok()?;
        (index != 0).then_some(Letter::new(index, value < 0))
    }

    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn signed(self) -> i64 {
        self.sign() * i64::from(self.index)
    }

    #[must_use]
    pub fn inverse(self) -> Self {
        Letter::new(self.index, !self.inverse)
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.inverse != other.inverse
    }
}

/// Appends `letter` to a reduced buffer, cancelling against the tail.
pub(crate) fn push_reduced(buf: &mut Vec<Letter>, letter: Letter) {
    if buf.last().is_some_and(|&last| last.cancels(letter)) {
        buf.pop();
    } else {
        buf.push(letter);
    }
}

pub(crate) fn extend_reduced(buf: &mut Vec<Letter>, letters: &[Letter]) {
    for &l in letters {
        push_reduced(buf, l);
    }
}

pub(crate) fn extend_inverse_reduced(buf: &mut Vec<Letter>, letters: &[Letter]) {
    for &l in letters.iter().rev() {
        push_reduced(buf, l.inverse());
    }
}

fn check_rank(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::RankMismatch { left, right })
    }
}

/// A freely reduced word in the free group `F_rank`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<Letter>,
}

impl FreeWord {
    /// The empty word.
    ///
    /// # Panics
    ///
    /// If `rank` is zero.
    pub fn identity(rank: usize) -> Self {
        assert!(rank > 0, "free group rank must be positive");
        FreeWord { rank, letters: Vec::new() }
    }

    pub fn generator(rank: usize, index: usize) -> Result<Self> {
        let index = u32::try_from(index).map_err(|_| Error::GeneratorOutOfRange { index, rank })?;
        Self::reduce(rank, [Letter::pos(index)])
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(rank: usize, raw: I) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let mut letters = Vec::new();
        for l in raw {
            if l.index == 0 || l.index() > rank {
                return Err(Error::GeneratorOutOfRange { index: l.index(), rank });
            }
            push_reduced(&mut letters, l);
        }
        Ok(FreeWord { rank, letters })
    }

    /// Builds a word from signed generator indices, e.g. `[1, -2]` is `x1 x2^-1`.
    pub fn from_signed(rank: usize, raw: &[i64]) -> Result<Self> {
        let letters =
            raw.iter().map(|&v| Letter::from_signed(v).ok_or(Error::ZeroLetter)).collect::<Result<Vec<_>>>()?;
        Self::reduce(rank, letters)
    }

    /// `letters` must already be reduced and in range.
    pub(crate) fn from_reduced(rank: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.windows(2).all(|w| !w[0].cancels(w[1])));
        debug_assert!(letters.iter().all(|l| l.index >= 1 && l.index() <= rank));
        FreeWord { rank, letters }
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.signed()).collect()
    }

    pub fn concat(&self, other: &FreeWord) -> Result<FreeWord> {
        check_rank(self.rank, other.rank)?;
        let mut letters = self.letters.clone();
        extend_reduced(&mut letters, &other.letters);
        Ok(FreeWord { rank: self.rank, letters })
    }

    #[must_use]
    pub fn inverse(&self) -> FreeWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        FreeWord { rank: self.rank, letters }
    }

    /// `self^k`; negative exponents use the inverse.
    #[must_use]
    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::new();
        for _ in 0..k.unsigned_abs() {
            extend_reduced(&mut letters, &base.letters);
        }
        FreeWord { rank: self.rank, letters }
    }

    /// Splits `self = conj · core · conj⁻¹` with `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (FreeWord, FreeWord) {
        let l = &self.letters;
        let (mut i, mut j) = (0, l.len());
        while j - i >= 2 && l[i].cancels(l[j - 1]) {
            i += 1;
            j -= 1;
        }
        (FreeWord::from_reduced(self.rank, l[i..j].to_vec()), FreeWord::from_reduced(self.rank, l[..i].to_vec()))
    }

    /// Returns `c` with `target = c · self · c⁻¹`, or `None` when the two
    /// words are not conjugate.
    pub fn conjugator(&self, target: &FreeWord) -> Result<Option<FreeWord>> {
        check_rank(self.rank, target.rank)?;
        let (core1, a1) = self.cyclic_reduce();
        let (core2, a2) = target.cyclic_reduce();
        if core1.len() != core2.len() {
            return Ok(None);
        }
        let k = core1.len();
        // core2 = core1[s..] core1[..s] = p⁻¹ core1 p with p = core1[..s].
        let shift = (0..k.max(1))
            .find(|&s| k == 0 || core1.letters[s..].iter().chain(&core1.letters[..s]).eq(core2.letters.iter()));
        let Some(s) = shift else {
            return Ok(None);
        };
        let p = FreeWord::from_reduced(self.rank, core1.letters[..s.min(k)].to_vec());
        let c = &(&a2 * &p.inverse()) * &a1.inverse();
        if &(&c * self) * &c.inverse() != *target {
            return Err(Error::Internal("conjugator witness failed substitution"));
        }
        Ok(Some(c))
    }

    /// Exponent sum of each generator.
    pub fn abelianize(&self) -> AbelianVector {
        let mut v = vec![0i64; self.rank];
        for l in &self.letters {
            v[l.index() - 1] += l.sign();
        }
        AbelianVector(v)
    }

    /// Reinterprets the word in a free group of rank `rank >= self.rank()`.
    pub fn embed(&self, rank: usize) -> Result<FreeWord> {
        if rank < self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: rank });
        }
        Ok(FreeWord { rank, letters: self.letters.clone() })
    }
}

/// Panics on rank mismatch; use [`FreeWord::concat`] for the checked form.
impl Mul for &FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: &FreeWord) -> FreeWord {
        self.concat(rhs).expect("rank mismatch in free word product")
    }
}

/// Shortlex: rank, then length, then letters in enumeration order.
impl Ord for FreeWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then(self.letters.len().cmp(&other.letters.len()))
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for FreeWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}", l.index)?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// Exponent-sum vector of a word, one entry per generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianVector(pub Vec<i64>);

impl AbelianVector {
    pub fn zero(rank: usize) -> Self {
        AbelianVector(vec![0; rank])
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    #[must_use]
    pub fn add(&self, other: &AbelianVector) -> AbelianVector {
        AbelianVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Square integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix { n, entries: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Zero-based entry.
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        self.entries[row * self.n + col] = value;
    }

    pub fn column(&self, col: usize) -> Vec<i64> {
        (0..self.n).map(|r| self.get(r, col)).collect()
    }

    pub fn mul_vec(&self, v: &AbelianVector) -> AbelianVector {
        AbelianVector((0..self.n).map(|r| (0..self.n).map(|c| self.get(r, c) * v.0[c]).sum()).collect())
    }

    #[must_use]
    pub fn minus_identity(&self) -> IntMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m.set(i, i, m.get(i, i) - 1);
        }
        m
    }
}

/// An endomorphism of `F_rank`, given by the images of the generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeEndo {
    rank: usize,
    images: Vec<FreeWord>,
}

impl FreeEndo {
    pub fn new(images: Vec<FreeWord>) -> Result<Self> {
        let rank = images.len();
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        for w in &images {
            check_rank(rank, w.rank)?;
        }
        Ok(FreeEndo { rank, images })
    }

    /// # Panics
    ///
    /// If `rank` is zero.
    pub fn identity(rank: usize) -> Self {
        assert!(rank > 0, "free group rank must be positive");
        let images = (1..=rank as u32).map(|i| FreeWord::from_reduced(rank, vec![Letter::pos(i)])).collect();
        FreeEndo { rank, images }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Image of `x_index` (1-based).
    pub fn image(&self, index: usize) -> Option<&FreeWord> {
        index.checked_sub(1).and_then(|i| self.images.get(i))
    }

    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        check_rank(self.rank, w.rank)?;
        Ok(self.apply_letters(&w.letters))
    }

    pub(crate) fn apply_letters(&self, letters: &[Letter]) -> FreeWord {
        let mut out = Vec::new();
        for &l in letters {
            let image = &self.images[l.index() - 1].letters;
            if l.inverse {
                extend_inverse_reduced(&mut out, image);
            } else {
                extend_reduced(&mut out, image);
            }
        }
        FreeWord { rank: self.rank, letters: out }
    }

    /// Diagrammatic composition: `self` acts first, then `then`.
    pub fn compose(&self, then: &FreeEndo) -> Result<FreeEndo> {
        check_rank(self.rank, then.rank)?;
        let images = self.images.iter().map(|w| then.apply_letters(&w.letters)).collect();
        Ok(FreeEndo { rank: self.rank, images })
    }

    #[must_use]
    pub fn power(&self, m: u32) -> FreeEndo {
        let mut acc = FreeEndo::identity(self.rank);
        for _ in 0..m {
            acc = acc.compose(self).expect("same rank");
        }
        acc
    }

    /// Abelianized action; column `j` is the exponent vector of the image of `x_{j+1}`.
    pub fn matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.rank);
        for (j, w) in self.images.iter().enumerate() {
            for (i, &e) in w.abelianize().0.iter().enumerate() {
                m.set(i, j, e);
            }
        }
        m
    }

    pub fn endo_eq(&self, other: &FreeEndo) -> Result<bool> {
        check_rank(self.rank, other.rank)?;
        Ok(self.images == other.images)
    }
}

impl fmt::Display for FreeEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "x{} -> {}", i + 1, w)?;
        }
        Ok(())
    }
}
