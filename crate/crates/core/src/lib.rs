//! Finite model checking for bounded posets with an antitone involution,
//! involutive directoids, effect algebras and Dedekind-MacNeille
//! completions.
//!
//! Everything here is `no_std` with `alloc`; file formats and the command
//! line live in the `pomlab` crate.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod directoid;
pub mod dm;
pub mod effect;
pub mod enumerate;
pub mod fixtures;
pub mod forbidden;
pub mod poset;
pub mod subset;
pub mod term;
pub mod verdict;

pub use directoid::{
    assigned_directoids, AssignmentMode, AssignmentPolicy, Chooser, DirectoidClass,
    InvolutiveDirectoid,
};
pub use effect::EffectAlgebra;
pub use forbidden::{find_b6_witness, B6Witness};
pub use poset::{BoundedInvolutivePoset, PosetProperty};
pub use subset::{Element, Subset};
pub use verdict::{Verdict, Witness};
