//! Twisted conjugacy, Reidemeister classes and degenerate classes.
//!
//! Twisted conjugacy `v = θ(α)·u·α⁻¹` is only semi-decided: a differing
//! abelian invariant proves `No`, a bounded shortlex search over `α` finds
//! `Yes` witnesses, and everything else is `Unknown`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::braid::BraidWord;
use crate::foxcalc::{raw_trace, write_term, GroupRingElem};
use crate::freegroup::{extend_inverse_reduced, extend_reduced, FreeEndo, FreeWord, IntMatrix, Letter};
use crate::lattice::Lattice;
use crate::{Error, Result};

/// Search limits shared by the whole pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bounds {
    /// Longest conjugator `α` tried by the witness search.
    pub radius: usize,
    /// Largest `|k|` tried for `λ·x_i^k` in degeneracy tests.
    pub k_max: u32,
    /// Longest accepted input braid word.
    pub max_braid_len: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { radius: 5, k_max: 6, max_braid_len: 128 }
    }
}

impl Bounds {
    pub fn check_braid(&self, b: &BraidWord) -> Result<()> {
        if b.len() > self.max_braid_len {
            return Err(Error::WordTooLong { len: b.len(), limit: self.max_braid_len });
        }
        Ok(())
    }
}

/// Canonical representative of an abelianized word modulo the image of `M − I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianLabel(pub Vec<i64>);

impl fmt::Display for AbelianLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Why a `No` holds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Certificate {
    /// The two words have different abelian labels.
    Abelian { left: AbelianLabel, right: AbelianLabel },
    /// The braid components differ.
    BaseMismatch,
    /// Every alternative was refuted; empty when there were none to try.
    Exhaustive(Vec<Certificate>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Decision {
    Yes(FreeWord),
    No(Certificate),
    /// The search ball of this radius held no witness.
    Unknown {
        radius: usize,
    },
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Decision::No(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Decision::Unknown { .. })
    }

    pub fn witness(&self) -> Option<&FreeWord> {
        match self {
            Decision::Yes(w) => Some(w),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Decision::Yes(_) => "yes",
            Decision::No(_) => "no",
            Decision::Unknown { .. } => "unknown",
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Abelian { left, right } => write!(f, "abelian labels {left} vs {right}"),
            Certificate::BaseMismatch => f.write_str("braid components differ"),
            Certificate::Exhaustive(v) if v.is_empty() => f.write_str("no candidates"),
            Certificate::Exhaustive(v) => write!(f, "all {} candidates refuted", v.len()),
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decision::Yes(w) => write!(f, "yes (witness {w})"),
            Decision::No(c) => write!(f, "no ({c})"),
            Decision::Unknown { radius } => write!(f, "unknown (no witness within radius {radius})"),
        }
    }
}

/// A twist `θ` together with its abelianization and search bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistContext {
    theta: FreeEndo,
    matrix: IntMatrix,
    lattice: Lattice,
    radius: usize,
    k_max: u32,
}

impl TwistContext {
    pub fn new(theta: FreeEndo, bounds: &Bounds) -> Self {
        let matrix = theta.matrix();
        let shifted = matrix.minus_identity();
        let n = theta.rank();
        let lattice = Lattice::span(n, (0..n).map(|j| shifted.column(j)).collect());
        TwistContext { theta, matrix, lattice, radius: bounds.radius, k_max: bounds.k_max }
    }

    pub fn theta(&self) -> &FreeEndo {
        &self.theta
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.theta.rank()
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn k_max(&self) -> u32 {
        self.k_max
    }

    fn check_rank(&self, w: &FreeWord) -> Result<()> {
        if w.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch { left: self.rank(), right: w.rank() })
        }
    }

    pub fn abelian_invariant(&self, w: &FreeWord) -> Result<AbelianLabel> {
        self.check_rank(w)?;
        Ok(AbelianLabel(self.lattice.reduce(w.abelianize().as_slice())))
    }

    /// `θ(α)·u·α⁻¹`.
    pub fn twisted_conjugate(&self, alpha: &FreeWord, u: &FreeWord) -> Result<FreeWord> {
        self.check_rank(alpha)?;
        self.check_rank(u)?;
        let mut buf = self.theta.apply_letters(alpha.letters()).letters().to_vec();
        extend_reduced(&mut buf, u.letters());
        extend_inverse_reduced(&mut buf, alpha.letters());
        Ok(FreeWord::from_reduced(self.rank(), buf))
    }

    /// Decides whether `v = θ(α)·u·α⁻¹` for some `α`. A `Yes` carries the
    /// shortlex-first witness of minimal length.
    pub fn twisted_conj(&self, u: &FreeWord, v: &FreeWord) -> Result<Decision> {
        let left = self.abelian_invariant(u)?;
        let right = self.abelian_invariant(v)?;
        if left != right {
            return Ok(Decision::No(Certificate::Abelian { left, right }));
        }
        let mut buf = Vec::new();
        let found = self.search_ball(|alpha, theta_alpha| {
            buf.clear();
            buf.extend_from_slice(theta_alpha);
            extend_reduced(&mut buf, u.letters());
            extend_inverse_reduced(&mut buf, alpha);
            if buf == v.letters() {
                ControlFlow::Break(alpha.to_vec())
            } else {
                ControlFlow::Continue(())
            }
        });
        match found {
            Some(alpha) => {
                let alpha = FreeWord::from_reduced(self.rank(), alpha);
                if self.twisted_conjugate(&alpha, u)? != *v {
                    return Err(Error::Internal("twisted conjugacy witness failed substitution"));
                }
                Ok(Decision::Yes(alpha))
            }
            None => Ok(Decision::Unknown { radius: self.radius }),
        }
    }

    /// Shortlex-least word `θ(α)·w·α⁻¹` over the search ball.
    pub fn shortest_in_ball(&self, w: &FreeWord) -> Result<FreeWord> {
        self.check_rank(w)?;
        let mut best = w.letters().to_vec();
        let mut buf = Vec::new();
        let _: Option<()> = self.search_ball(|alpha, theta_alpha| {
            buf.clear();
            buf.extend_from_slice(theta_alpha);
            extend_reduced(&mut buf, w.letters());
            extend_inverse_reduced(&mut buf, alpha);
            if buf.len() < best.len() || (buf.len() == best.len() && buf < best) {
                core::mem::swap(&mut best, &mut buf);
            }
            ControlFlow::Continue(())
        });
        Ok(FreeWord::from_reduced(self.rank(), best))
    }

    /// Visits every reduced `α` with `|α| ≤ radius` in shortlex order,
    /// passing `α` and the reduced `θ(α)`.
    fn search_ball<T>(&self, mut visit: impl FnMut(&[Letter], &[Letter]) -> ControlFlow<T>) -> Option<T> {
        let n = self.rank() as u32;
        let alphabet: Vec<Letter> = (1..=n).flat_map(|i| [Letter::pos(i), Letter::neg(i)]).collect();
        let images: Vec<Vec<Letter>> = alphabet
            .iter()
            .map(|&l| {
                let mut buf = Vec::new();
                let image = self.theta.images()[l.index() - 1].letters();
                if l.is_inverse() {
                    extend_inverse_reduced(&mut buf, image);
                } else {
                    extend_reduced(&mut buf, image);
                }
                buf
            })
            .collect();
        let mut alpha = Vec::with_capacity(self.radius);
        let mut stack = vec![Vec::new()];
        for depth in 0..=self.radius {
            if let ControlFlow::Break(t) = walk(depth, &alphabet, &images, &mut alpha, &mut stack, &mut visit) {
                return Some(t);
            }
        }
        None
    }

    /// Merges a raw trace into Reidemeister classes.
    ///
    /// Each term is first shortened within the search ball, then compared
    /// with the representatives of the classes built so far. Pairs that
    /// stay `Unknown` are recorded and left unmerged.
    pub fn merge(&self, raw: &GroupRingElem) -> Result<ReidemeisterTrace> {
        if raw.rank() != self.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: raw.rank() });
        }
        self.merge_terms(raw.terms())
    }

    /// [`TwistContext::merge`] over terms in caller-chosen order.
    pub fn merge_terms<'a, I>(&self, terms: I) -> Result<ReidemeisterTrace>
    where
        I: IntoIterator<Item = (&'a FreeWord, &'a BigInt)>,
    {
        struct Class {
            rep: FreeWord,
            coefficient: BigInt,
        }
        let mut classes: Vec<Class> = Vec::new();
        let mut unresolved = Vec::new();
        for (w, c) in terms {
            let short = self.shortest_in_ball(w)?;
            let mut home = None;
            let mut unknown = Vec::new();
            for (k, class) in classes.iter().enumerate() {
                match self.twisted_conj(&short, &class.rep)? {
                    Decision::Yes(_) => {
                        home = Some(k);
                        break;
                    }
                    Decision::Unknown { .. } => unknown.push(class.rep.clone()),
                    Decision::No(_) => {}
                }
            }
            match home {
                Some(k) => {
                    let class = &mut classes[k];
                    class.coefficient += c;
                    if short < class.rep {
                        class.rep = short;
                    }
                }
                None => {
                    unresolved.extend(unknown.into_iter().map(|r| (short.clone(), r)));
                    classes.push(Class { rep: short, coefficient: c.clone() });
                }
            }
        }
        let mut summands: Vec<Summand> = classes
            .into_iter()
            .filter(|c| !c.coefficient.is_zero())
            .map(|c| Summand { coefficient: c.coefficient, representative: c.rep })
            .collect();
        summands
            .sort_by(|a, b| b.coefficient.cmp(&a.coefficient).then_with(|| a.representative.cmp(&b.representative)));
        Ok(ReidemeisterTrace { context: self.clone(), summands, unresolved })
    }

    /// Whether `gamma` is twisted conjugate to some `λ_i·x_i^k` with `|k| ≤ k_max`.
    pub fn is_degenerate(&self, gamma: &FreeWord, families: &[DegenerateFamily]) -> Result<Decision> {
        self.check_rank(gamma)?;
        let mut refuted = Vec::new();
        let mut unknown = None;
        for family in families {
            let x = FreeWord::generator(self.rank(), family.index)?;
            let exponents = core::iter::once(0i64).chain((1..=i64::from(self.k_max)).flat_map(|k| [k, -k]));
            for k in exponents {
                let candidate = &family.lambda * &x.pow(k);
                match self.twisted_conj(&candidate, gamma)? {
                    yes @ Decision::Yes(_) => return Ok(yes),
                    Decision::No(c) => refuted.push(c),
                    u @ Decision::Unknown { .. } => unknown = Some(u),
                }
            }
        }
        Ok(unknown.unwrap_or(Decision::No(Certificate::Exhaustive(refuted))))
    }
}

fn walk<T>(
    remaining: usize,
    alphabet: &[Letter],
    images: &[Vec<Letter>],
    alpha: &mut Vec<Letter>,
    stack: &mut Vec<Vec<Letter>>,
    visit: &mut impl FnMut(&[Letter], &[Letter]) -> ControlFlow<T>,
) -> ControlFlow<T> {
    if remaining == 0 {
        return visit(alpha, stack.last().expect("stack holds θ(ε)"));
    }
    for (k, &l) in alphabet.iter().enumerate() {
        if alpha.last().is_some_and(|&last| last.cancels(l)) {
            continue;
        }
        let mut next = stack.last().expect("stack holds θ(ε)").clone();
        extend_reduced(&mut next, &images[k]);
        alpha.push(l);
        stack.push(next);
        let flow = walk(remaining - 1, alphabet, images, alpha, stack, visit);
        stack.pop();
        alpha.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Summand {
    pub coefficient: BigInt,
    pub representative: FreeWord,
}

/// A trace merged into classes: summands sorted by coefficient (descending),
/// then representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReidemeisterTrace {
    pub context: TwistContext,
    pub summands: Vec<Summand>,
    /// Pairs of representatives whose comparison stayed `Unknown`.
    pub unresolved: Vec<(FreeWord, FreeWord)>,
}

impl ReidemeisterTrace {
    pub fn is_resolved(&self) -> bool {
        self.unresolved.is_empty()
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.summands.iter().map(|s| &s.coefficient).sum()
    }
}

impl fmt::Display for ReidemeisterTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        for (k, s) in self.summands.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write_term(f, &s.coefficient, &s.representative)?;
        }
        Ok(())
    }
}

/// A puncture `x_index` fixed up to conjugacy: `θ(x_index) = λ·x_index·λ⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegenerateFamily {
    pub index: usize,
    pub lambda: FreeWord,
}

/// Every generator whose image under `theta` is conjugate to itself.
pub fn degenerate_families_of(theta: &FreeEndo) -> Result<Vec<DegenerateFamily>> {
    let mut out = Vec::new();
    for (i, image) in theta.images().iter().enumerate() {
        let x = FreeWord::generator(theta.rank(), i + 1)?;
        if let Some(lambda) = x.conjugator(image)? {
            out.push(DegenerateFamily { index: i + 1, lambda });
        }
    }
    Ok(out)
}

/// Degenerate families of `f_π^m` for the strands fixed by `β^m`.
pub fn degenerate_families(beta: &BraidWord, m: u32) -> Result<Vec<DegenerateFamily>> {
    let theta = beta.artin().power(m);
    let perm = beta.power(i64::from(m)).perm();
    let mut out = Vec::new();
    for i in perm.fixed_points() {
        let x = FreeWord::generator(theta.rank(), i)?;
        let image = theta.image(i).expect("index within rank");
        match x.conjugator(image)? {
            Some(lambda) => out.push(DegenerateFamily { index: i, lambda }),
            None => return Err(Error::Internal("fixed strand image is not a conjugate of its generator")),
        }
    }
    Ok(out)
}

/// Twist context for `f_π^m`.
pub fn twist_context(beta: &BraidWord, m: u32, bounds: &Bounds) -> Result<TwistContext> {
    if m < 1 {
        return Err(Error::BadIterate(m));
    }
    bounds.check_braid(beta)?;
    Ok(TwistContext::new(beta.artin().power(m), bounds))
}

/// The merged trace `[1] − [Tr J(f_π^m)]`.
pub fn reidemeister_trace(beta: &BraidWord, m: u32, bounds: &Bounds) -> Result<ReidemeisterTrace> {
    let ctx = twist_context(beta, m, bounds)?;
    ctx.merge(&raw_trace(ctx.theta()))
}

/// One Reidemeister class with its degeneracy verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialClass {
    pub coefficient: BigInt,
    pub representative: FreeWord,
    pub label: AbelianLabel,
    pub degeneracy: Decision,
}

/// Annotates every summand of `trace` with its degeneracy.
pub fn classify(trace: &ReidemeisterTrace, families: &[DegenerateFamily]) -> Result<Vec<EssentialClass>> {
    let ctx = &trace.context;
    trace
        .summands
        .iter()
        .map(|s| {
            Ok(EssentialClass {
                coefficient: s.coefficient.clone(),
                representative: s.representative.clone(),
                label: ctx.abelian_invariant(&s.representative)?,
                degeneracy: ctx.is_degenerate(&s.representative, families)?,
            })
        })
        .collect()
}

/// Essential classes of `f_π^m`, each annotated with its degeneracy.
pub fn essential_nondegenerate(beta: &BraidWord, m: u32, bounds: &Bounds) -> Result<Vec<EssentialClass>> {
    let trace = reidemeister_trace(beta, m, bounds)?;
    classify(&trace, &degenerate_families(beta, m)?)
}
