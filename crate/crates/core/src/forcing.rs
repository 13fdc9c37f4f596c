//! Braids `(m, U)`-forced by a braid `β`.
//!
//! The forced set is `{ ι₁(β^m)·φ(γ) }` where `γ` runs over representatives
//! of the essential, non-degenerate Reidemeister classes of `f_π^m`.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::augbraid::AugBraid;
use crate::braid::BraidWord;
use crate::foxcalc::raw_trace;
use crate::freegroup::{FreeEndo, FreeWord};
use crate::nielsen::{classify, degenerate_families_of, Bounds, Certificate, Decision, EssentialClass, TwistContext};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ForcingOptions {
    pub bounds: Bounds,
    /// Homeomorphisms fix `∂D²` pointwise: drop the class of the trivial word.
    pub boundary_fixed: bool,
    /// Also report classes whose degeneracy stayed `Unknown`.
    pub permissive: bool,
}

/// Classes of a twist and the tails that survive filtering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedTails {
    pub classes: Vec<EssentialClass>,
    /// Indices into `classes`, in class order.
    pub forced: Vec<usize>,
    /// Classes dropped because they contain the trivial word.
    pub boundary_removed: Vec<usize>,
    pub unresolved: Vec<(FreeWord, FreeWord)>,
    /// False whenever an `Unknown` touched merging or filtering.
    pub exact: bool,
}

/// Filters the classes of `theta` down to the forced tails.
pub fn forced_tails(theta: &FreeEndo, options: &ForcingOptions) -> Result<ForcedTails> {
    let ctx = TwistContext::new(theta.clone(), &options.bounds);
    let trace = ctx.merge(&raw_trace(theta))?;
    let families = degenerate_families_of(theta)?;
    let classes = classify(&trace, &families)?;
    let mut exact = trace.is_resolved();
    let mut forced = Vec::new();
    let mut boundary_removed = Vec::new();
    let trivial = FreeWord::identity(theta.rank());
    for (k, class) in classes.iter().enumerate() {
        match class.degeneracy {
            Decision::Yes(_) => continue,
            Decision::Unknown { .. } => {
                exact = false;
                if !options.permissive {
                    continue;
                }
            }
            Decision::No(_) => {}
        }
        if options.boundary_fixed {
            match ctx.twisted_conj(&class.representative, &trivial)? {
                Decision::Yes(_) => {
                    boundary_removed.push(k);
                    continue;
                }
                Decision::Unknown { .. } => exact = false,
                Decision::No(_) => {}
            }
        }
        forced.push(k);
    }
    Ok(ForcedTails { classes, forced, boundary_removed, unresolved: trace.unresolved, exact })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedBraid {
    pub braid: AugBraid,
    pub coefficient: BigInt,
    pub degeneracy: Decision,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingReport {
    pub beta: BraidWord,
    pub m: u32,
    pub options: ForcingOptions,
    pub classes: Vec<EssentialClass>,
    pub forced: Vec<ForcedBraid>,
    pub boundary_removed: Vec<usize>,
    pub unresolved: Vec<(FreeWord, FreeWord)>,
    pub exact: bool,
}

impl ForcingReport {
    /// `β^m` as a word.
    pub fn base(&self) -> BraidWord {
        self.beta.power(i64::from(self.m))
    }
}

/// The braids `(m, U)`-forced by `beta`.
pub fn forced_set(beta: &BraidWord, m: u32, options: &ForcingOptions) -> Result<ForcingReport> {
    if m < 1 {
        return Err(Error::BadIterate(m));
    }
    options.bounds.check_braid(beta)?;
    let theta = beta.artin().power(m);
    let tails = forced_tails(&theta, options)?;
    let base = beta.power(i64::from(m));
    let forced = tails
        .forced
        .iter()
        .map(|&k| {
            let class = &tails.classes[k];
            Ok(ForcedBraid {
                braid: AugBraid::new(base.clone(), class.representative.clone())?,
                coefficient: class.coefficient.clone(),
                degeneracy: class.degeneracy.clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ForcingReport {
        beta: beta.clone(),
        m,
        options: *options,
        classes: tails.classes,
        forced,
        boundary_removed: tails.boundary_removed,
        unresolved: tails.unresolved,
        exact: tails.exact,
    })
}

/// Whether `candidate` is `(m, U)`-forced by `beta`. A `Yes(α)` means
/// `φ(α)·candidate·φ(α)⁻¹` is one of the reported forced braids.
pub fn is_forced(candidate: &AugBraid, beta: &BraidWord, m: u32, options: &ForcingOptions) -> Result<Decision> {
    if candidate.punctures() != beta.strands() {
        return Err(Error::StrandMismatch { left: candidate.punctures() + 1, right: beta.strands() + 1 });
    }
    let options = ForcingOptions { permissive: false, ..*options };
    let report = forced_set(beta, m, &options)?;
    if !candidate.base().braid_eq(&report.base())? {
        return Ok(Decision::No(Certificate::BaseMismatch));
    }
    let mut refuted = Vec::new();
    let mut unknown = None;
    for f in &report.forced {
        match candidate.u_equiv(&f.braid, &options.bounds)? {
            yes @ Decision::Yes(_) => return Ok(yes),
            Decision::No(c) => refuted.push(c),
            u @ Decision::Unknown { .. } => unknown = Some(u),
        }
    }
    if let Some(u) = unknown {
        return Ok(u);
    }
    if !report.exact {
        return Ok(Decision::Unknown { radius: options.bounds.radius });
    }
    Ok(Decision::No(Certificate::Exhaustive(refuted)))
}
