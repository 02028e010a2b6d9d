//! Exact arithmetic for braid groups and the finite groups around them.
//!
//! Everything in this crate is pure and allocation-only: permutations of small
//! degree, the braid group word problem via Garside left-canonical form,
//! integer Smith normal form, finitely presented groups with coset
//! enumeration and Reidemeister–Schreier rewriting, exhaustive enumeration of
//! homomorphisms into symmetric groups, the free product of three groups of
//! order two, and the central-extension arithmetic of `1 → ⟨Δ²⟩ → B_n → B_n/⟨Δ²⟩ → 1`.
//!
//! IO, reporting and the command line live in the `outbraid` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod braid;
pub mod central_ext;
mod error;
pub mod fpgroup;
pub mod freeprod;
pub mod hom_enum;
pub mod intlinalg;
pub mod perm;

pub use braid::{BraidWord, GarsideForm, StrandPairMatrix};
pub use error::{Error, Result};
pub use fpgroup::{CosetTable, GroupHom, Presentation};
pub use freeprod::FpWord;
pub use intlinalg::{AbelianDescriptor, IntMatrix};
pub use perm::{Perm, PermTuple};
