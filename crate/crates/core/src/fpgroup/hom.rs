use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use super::todd_coxeter::{CosetTable, Subgroup};
use super::Presentation;
use crate::braid::{is_trivial, BraidWord};
use crate::error::{Error, Result};
use crate::perm::{Perm, PermTuple};

/// A target group together with its equality oracle.
pub trait TargetGroup {
    type Elem: Clone;

    fn identity(&self) -> Self::Elem;
    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;
    fn is_identity(&self, a: &Self::Elem) -> Result<bool>;
}

/// `S_m` acting on `{1, …, m}`; products left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetricGroup {
    pub degree: usize,
}

impl TargetGroup for SymmetricGroup {
    type Elem = Perm;

    fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    fn multiply(&self, a: &Perm, b: &Perm) -> Perm {
        a.then(b)
    }

    fn inverse(&self, a: &Perm) -> Perm {
        a.inverse()
    }

    fn is_identity(&self, a: &Perm) -> Result<bool> {
        Ok(a.is_identity())
    }
}

/// `B_n` with free words as elements and Garside triviality as the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BraidGroup {
    pub strands: usize,
}

impl TargetGroup for BraidGroup {
    type Elem = BraidWord;

    fn identity(&self) -> BraidWord {
        BraidWord::identity(self.strands).expect("valid strand count")
    }

    fn multiply(&self, a: &BraidWord, b: &BraidWord) -> BraidWord {
        a.concat(b)
    }

    fn inverse(&self, a: &BraidWord) -> BraidWord {
        a.inverse()
    }

    fn is_identity(&self, a: &BraidWord) -> Result<bool> {
        if a.strands() != self.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: a.strands(),
            });
        }
        Ok(is_trivial(a))
    }
}

/// An assignment of generator images; `verified` is set only once every
/// relator has been checked to map to the identity.
#[derive(Clone, Debug)]
pub struct GroupHom<T: TargetGroup> {
    source: Presentation,
    target: T,
    images: Vec<T::Elem>,
    verified: bool,
}

impl<T: TargetGroup> GroupHom<T> {
    pub fn new(source: Presentation, target: T, images: Vec<T::Elem>) -> Result<Self> {
        if images.len() != source.num_generators() {
            return Err(Error::ImageCount {
                expected: source.num_generators(),
                got: images.len(),
            });
        }
        Ok(GroupHom {
            source,
            target,
            images,
            verified: false,
        })
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &T {
        &self.target
    }

    pub fn images(&self) -> &[T::Elem] {
        &self.images
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    /// Image of a source word.
    pub fn evaluate(&self, w: &[i32]) -> T::Elem {
        let mut acc = self.target.identity();
        for &l in w {
            let g = &self.images[l.unsigned_abs() as usize - 1];
            acc = if l > 0 {
                self.target.multiply(&acc, g)
            } else {
                self.target.multiply(&acc, &self.target.inverse(g))
            };
        }
        acc
    }

    /// Checks every relator and records the outcome.
    pub fn verify(&mut self) -> Result<bool> {
        for r in self.source.relators() {
            let img = self.evaluate(r);
            if !self.target.is_identity(&img)? {
                self.verified = false;
                return Ok(false);
            }
        }
        self.verified = true;
        Ok(true)
    }
}

impl GroupHom<SymmetricGroup> {
    /// A homomorphism into `S_m` given by a permutation tuple.
    pub fn to_symmetric(source: Presentation, images: &PermTuple) -> Result<Self> {
        let degree = images.degree();
        GroupHom::new(source, SymmetricGroup { degree }, images.entries().to_vec())
    }

    pub fn tuple(&self) -> PermTuple {
        PermTuple::new(self.images.clone()).expect("images share the target degree")
    }

    /// `true` iff `w` lies in the kernel.
    pub fn kernel_contains(&self, w: &[i32]) -> bool {
        self.evaluate(w).is_identity()
    }
}

/// `true` iff every relator of the source maps to the identity.
pub fn verify_homomorphism<T: TargetGroup>(h: &mut GroupHom<T>) -> Result<bool> {
    h.verify()
}

/// Coset table of `ker(q)`: cosets are the elements of the image, and each
/// generator acts by right multiplication with its image.
pub fn coset_table_from_quotient(
    p: &Presentation,
    q: &GroupHom<SymmetricGroup>,
) -> Result<CosetTable> {
    if !q.is_verified() {
        return Err(Error::NotVerified);
    }
    if q.source() != p {
        return Err(Error::SourceMismatch);
    }
    let k = p.num_generators();
    let inverses: Vec<Perm> = q.images().iter().map(Perm::inverse).collect();
    let mut index: BTreeMap<Perm, usize> = BTreeMap::new();
    let mut elems: Vec<Perm> = Vec::new();
    let mut queue = VecDeque::new();
    let id = Perm::identity(q.target().degree);
    index.insert(id.clone(), 0);
    elems.push(id);
    queue.push_back(0usize);
    let mut rows: Vec<Vec<usize>> = Vec::new();
    while let Some(c) = queue.pop_front() {
        let mut row = alloc::vec![0usize; 2 * k];
        for g in 0..k {
            for (col, img) in [(2 * g, &q.images()[g]), (2 * g + 1, &inverses[g])] {
                let y = elems[c].then(img);
                let next = elems.len();
                let d = *index.entry(y.clone()).or_insert_with(|| {
                    elems.push(y);
                    queue.push_back(next);
                    next
                });
                row[col] = d;
            }
        }
        if rows.len() <= c {
            rows.resize(c + 1, Vec::new());
        }
        rows[c] = row;
    }
    CosetTable::from_rows(k, rows, Subgroup::Kernel)
}
