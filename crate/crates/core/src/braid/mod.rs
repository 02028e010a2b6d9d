//! The braid group `B_n` on generators `σ₁, …, σ_{n−1}`.
//!
//! Words are free (no simplification on construction); equality in the group
//! goes through [`GarsideForm`].

mod garside;
mod linking;
mod word;

pub use garside::{normal_form, GarsideForm};
pub use linking::{linking_numbers, StrandPairMatrix};
pub use word::{pure_braid_generator, substitute, zeta, BraidWord};

use crate::error::Result;
use crate::perm::Perm;

/// `true` iff `u = v` in `B_n`.
pub fn equals(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(crate::Error::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    Ok(normal_form(u) == normal_form(v))
}

/// `true` iff `w` is trivial in `B_n`.
pub fn is_trivial(w: &BraidWord) -> bool {
    normal_form(w).is_identity()
}

/// Image under `B_n → S_n`, `σ_i ↦ (i, i+1)`.
pub fn permutation_of(w: &BraidWord) -> Perm {
    w.permutation()
}

/// Sum of letter signs: the image in `B_n^ab ≅ Z`.
pub fn exponent_sum(w: &BraidWord) -> i64 {
    w.exponent_sum()
}
