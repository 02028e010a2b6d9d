//! Finitely presented groups: presentations, homomorphisms checked against an
//! injected equality oracle, coset enumeration and Reidemeister–Schreier.

mod hom;
pub mod named;
mod reidemeister;
mod todd_coxeter;

pub use hom::{
    coset_table_from_quotient, verify_homomorphism, BraidGroup, GroupHom, SymmetricGroup,
    TargetGroup,
};
pub use reidemeister::{reidemeister_schreier, reidemeister_schreier_with, SchreierRewrite, TreePolicy};
pub use todd_coxeter::{todd_coxeter, CosetTable, Subgroup};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::intlinalg::{cokernel, AbelianDescriptor, IntMatrix};

/// A word in signed 1-based generator indices.
pub type Word = Vec<i32>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let k = generators.len();
        for r in &relators {
            if let Some(&bad) = r.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize > k) {
                return Err(Error::BadRelator {
                    letter: bad,
                    generators: k,
                });
            }
        }
        Ok(Presentation {
            generators,
            relators,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// The same presentation with one more relator.
    pub fn with_relator(&self, r: Word) -> Result<Self> {
        let mut relators = self.relators.clone();
        relators.push(r);
        Presentation::new(self.generators.clone(), relators)
    }

    /// Relator exponent vectors as columns of a `generators × relators` matrix.
    pub fn exponent_matrix(&self) -> IntMatrix {
        let k = self.generators.len();
        let cols: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|r| {
                let mut v = alloc::vec![0i64; k];
                for &l in r {
                    v[l.unsigned_abs() as usize - 1] += l.signum() as i64;
                }
                v
            })
            .collect();
        IntMatrix::from_columns(&cols, k).expect("relator vectors have the generator count")
    }

    pub fn abelianization(&self) -> AbelianDescriptor {
        cokernel(&self.exponent_matrix())
    }

    /// Relators of the two braid families.
    pub fn braid(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadStrandCount(n));
        }
        let gens = (1..n).map(|i| format!("s{i}")).collect();
        Presentation::new(gens, braid_relators(n))
    }

    /// Braid relators plus `σ₁⋯σ_{n−2}σ_{n−1}²σ_{n−2}⋯σ₁` and `(σ₁⋯σ_{n−1})^n`.
    pub fn mcg_sphere(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::BadStrandCount(n));
        }
        let m = n as i32;
        let mut rels = braid_relators(n);
        let mut r1: Word = (1..m - 1).collect();
        r1.push(m - 1);
        r1.push(m - 1);
        r1.extend((1..m - 1).rev());
        rels.push(r1);
        let block: Word = (1..m).collect();
        rels.push(block.repeat(n));
        let gens = (1..n).map(|i| format!("s{i}")).collect();
        Presentation::new(gens, rels)
    }

    /// Coxeter presentation of `S_n`: `s_i²`, braid and far-commutation relators.
    pub fn coxeter_symmetric(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadStrandCount(n));
        }
        let mut rels: Vec<Word> = (1..n as i32).map(|i| alloc::vec![i, i]).collect();
        rels.extend(braid_relators(n));
        let gens = (1..n).map(|i| format!("s{i}")).collect();
        Presentation::new(gens, rels)
    }

    /// `⟨t₁, …, t_k | t_i²⟩`.
    pub fn free_product_z2(k: usize) -> Self {
        let gens = (1..=k).map(|i| format!("t{i}")).collect();
        let rels = (1..=k as i32).map(|i| alloc::vec![i, i]).collect();
        Presentation::new(gens, rels).expect("letters in range")
    }
}

fn braid_relators(n: usize) -> Vec<Word> {
    let m = n as i32;
    let mut rels = Vec::new();
    for i in 1..m - 1 {
        rels.push(alloc::vec![i, i + 1, i, -(i + 1), -i, -(i + 1)]);
    }
    for i in 1..m {
        for j in i + 2..m {
            rels.push(alloc::vec![i, j, -i, -j]);
        }
    }
    rels
}

pub fn braid_presentation(n: usize) -> Result<Presentation> {
    Presentation::braid(n)
}

pub fn mcg_sphere_presentation(n: usize) -> Result<Presentation> {
    Presentation::mcg_sphere(n)
}

pub fn abelianization(p: &Presentation) -> AbelianDescriptor {
    p.abelianization()
}

/// Formal inverse of a word.
pub fn invert_word(w: &[i32]) -> Word {
    w.iter().rev().map(|&l| -l).collect()
}

/// Free reduction of a word.
pub fn free_reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}
