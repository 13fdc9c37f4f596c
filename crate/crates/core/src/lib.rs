//! Exact symbolic toolkit for braids forced by a disk homeomorphism.
//!
//! Given a braid `β ∈ B_n` and an iterate `m`, the pipeline computes the
//! Artin action `f_π` of `β` on the free group `F_n = π₁(D² ∖ Q)`, its
//! Reidemeister trace via Fox calculus, merges the trace into twisted
//! conjugacy classes, drops degenerate classes, and realizes each surviving
//! class `γ` as the braid `ι₁(β^m)·φ(γ)` in `B^n_{n+1}`.
//!
//! Modules, bottom-up:
//!
//! * [`freegroup`]: reduced words, endomorphisms, conjugacy, abelianization.
//! * [`braid`]: braid words, permutations, pure generators, the Artin action.
//! * [`foxcalc`]: the integral group ring, Fox derivatives, raw traces.
//! * [`nielsen`]: twisted conjugacy (semi-decided), class merging, degeneracy.
//! * [`augbraid`]: the semidirect normal form of `B^n_{n+1}` and `∼_U`.
//! * [`forcing`]: the forced-braid pipeline.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod augbraid;
pub mod braid;
mod error;
pub mod forcing;
pub mod foxcalc;
pub mod freegroup;
mod lattice;
pub mod nielsen;

pub use augbraid::AugBraid;
pub use braid::{BraidWord, Permutation};
pub use error::Error;
pub use forcing::{ForcingOptions, ForcingReport};
pub use foxcalc::GroupRingElem;
pub use freegroup::{AbelianVector, FreeEndo, FreeWord, IntMatrix, Letter};
pub use nielsen::{AbelianLabel, Bounds, Certificate, Decision, ReidemeisterTrace, TwistContext};

pub type Result<T, E = Error> = core::result::Result<T, E>;
