//! The concrete homomorphisms used throughout: standard projections, the three
//! surjections `B₄ → S₄` up to conjugacy, and the maps relating four and three
//! strands. All are returned unverified.

use alloc::vec::Vec;

use super::hom::{BraidGroup, GroupHom, SymmetricGroup};
use super::Presentation;
use crate::braid::BraidWord;
use crate::error::Result;
use crate::perm::{Perm, PermTuple};

fn transpositions(n: usize) -> Vec<Perm> {
    (1..n)
        .map(|i| Perm::transposition(n, i, i + 1).expect("adjacent points"))
        .collect()
}

/// `π_n: B_n → S_n`, `σ_i ↦ (i i+1)`.
pub fn standard_projection(n: usize) -> Result<GroupHom<SymmetricGroup>> {
    GroupHom::new(Presentation::braid(n)?, SymmetricGroup { degree: n }, transpositions(n))
}

/// `γ_n: Γ_{0,[n]} → S_n`, `σ̄_i ↦ (i i+1)`, on the sphere presentation.
pub fn sphere_projection(n: usize) -> Result<GroupHom<SymmetricGroup>> {
    GroupHom::new(Presentation::mcg_sphere(n)?, SymmetricGroup { degree: n }, transpositions(n))
}

/// Generator images of `ε₁, ε₂, ε₃: B₄ → S₄` in cycle notation.
pub const EPSILON_CYCLES: [[&str; 3]; 3] = [
    ["(1 2)", "(2 3)", "(3 4)"],
    ["(1 2 3 4)", "(2 1 3 4)", "(1 2 3 4)"],
    ["(1 2 3 4)", "(2 1 3 4)", "(4 3 2 1)"],
];

/// `ε_k` for `k ∈ {1, 2, 3}` as a permutation tuple.
pub fn epsilon_tuple(k: usize) -> Result<PermTuple> {
    if !(1..=3).contains(&k) {
        return Err(crate::error::Error::IndexOutOfRange(alloc::format!(
            "epsilon index {k} not in 1..=3"
        )));
    }
    PermTuple::parse(&EPSILON_CYCLES[k - 1], 4)
}

pub fn epsilon(k: usize) -> Result<GroupHom<SymmetricGroup>> {
    GroupHom::to_symmetric(Presentation::braid(4)?, &epsilon_tuple(k)?)
}

/// `β₄₃: B₄ → B₃`, `σ₁, σ₃ ↦ σ₁`, `σ₂ ↦ σ₂`.
pub fn beta43() -> Result<GroupHom<BraidGroup>> {
    let imgs = [1, 2, 1]
        .iter()
        .map(|&k| BraidWord::generator(3, k))
        .collect::<Result<Vec<_>>>()?;
    GroupHom::new(Presentation::braid(4)?, BraidGroup { strands: 3 }, imgs)
}

/// `s₄₃: S₄ → S₃` on the Coxeter presentation, `(12), (34) ↦ (12)`, `(23) ↦ (23)`.
pub fn s43() -> Result<GroupHom<SymmetricGroup>> {
    let t = PermTuple::parse(&["(1 2)", "(2 3)", "(1 2)"], 3)?;
    GroupHom::to_symmetric(Presentation::coxeter_symmetric(4)?, &t)
}

/// `s₄₃∘π₄: B₄ → S₃`.
pub fn composite43() -> Result<GroupHom<SymmetricGroup>> {
    let t = PermTuple::parse(&["(1 2)", "(2 3)", "(1 2)"], 3)?;
    GroupHom::to_symmetric(Presentation::braid(4)?, &t)
}
