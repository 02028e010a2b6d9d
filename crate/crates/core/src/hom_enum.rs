//! Exhaustive enumeration of homomorphisms from a finite presentation into
//! `S_m`, classified up to simultaneous conjugation.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fpgroup::{GroupHom, Presentation, SymmetricGroup, Word};
use crate::perm::{conjugacy_class_reps, factorial, AllPerms, Perm, PermTuple};

/// Largest target degree; degree 6 additionally needs [`EnumOptions::allow_degree_six`].
pub const MAX_DEGREE: usize = 6;

#[derive(Clone, Copy, Debug, Default)]
pub struct EnumOptions {
    pub surjective_only: bool,
    pub allow_degree_six: bool,
    /// Maximum number of relator evaluations.
    pub budget: Option<u64>,
}

impl EnumOptions {
    pub fn surjective() -> Self {
        EnumOptions {
            surjective_only: true,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomClass {
    /// Fixed point of [`PermTuple::canonical_under_conjugation`].
    pub representative: PermTuple,
    pub orbit_size: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomClassification {
    pub degree: usize,
    pub classes: Vec<HomClass>,
    /// Number of homomorphisms (sum of the orbit sizes).
    pub total: u64,
    /// Relator evaluations spent.
    pub relator_checks: u64,
}

impl HomClassification {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Every homomorphism in every class.
    pub fn all_tuples(&self) -> Vec<PermTuple> {
        self.classes
            .iter()
            .flat_map(|c| conjugation_orbit(&c.representative))
            .collect()
    }

    pub fn contains_class_of(&self, t: &PermTuple) -> Result<bool> {
        let canon = t.canonical_under_conjugation()?;
        Ok(self.classes.iter().any(|c| c.representative == canon))
    }
}

/// All simultaneous conjugates of `t`.
pub fn conjugation_orbit(t: &PermTuple) -> BTreeSet<PermTuple> {
    AllPerms::new(t.degree()).map(|g| t.conjugate_by(&g)).collect()
}

struct Search<'a> {
    perms: Vec<Perm>,
    reps: Vec<Perm>,
    // relators whose highest generator is index g
    checks_at: Vec<Vec<&'a Word>>,
    checks: u64,
    budget: Option<u64>,
    found: Vec<Vec<Perm>>,
}

impl Search<'_> {
    fn holds(&mut self, assigned: &[Perm], r: &Word) -> Result<bool> {
        self.checks += 1;
        if let Some(b) = self.budget {
            if self.checks > b {
                return Err(Error::BudgetExceeded { budget: b });
            }
        }
        let m = assigned[0].degree();
        let mut acc = Perm::identity(m);
        for &l in r {
            let g = &assigned[l.unsigned_abs() as usize - 1];
            acc = if l > 0 { acc.then(g) } else { acc.then(&g.inverse()) };
        }
        Ok(acc.is_identity())
    }

    fn extend(&mut self, assigned: &mut Vec<Perm>, k: usize) -> Result<()> {
        let g = assigned.len();
        if g == k {
            self.found.push(assigned.clone());
            return Ok(());
        }
        let candidates = if g == 0 {
            self.reps.clone()
        } else {
            self.perms.clone()
        };
        for c in candidates {
            assigned.push(c);
            let mut ok = true;
            for r in self.checks_at[g].clone() {
                if !self.holds(assigned, r)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                self.extend(assigned, k)?;
            }
            assigned.pop();
        }
        Ok(())
    }
}

/// Every homomorphism `p → S_m`, grouped by conjugacy class.
///
/// The first generator ranges over cycle-type representatives only; the
/// others range over all of `S_m`, pruned by each relator as soon as all of
/// its generators are assigned.
pub fn enumerate_homs(p: &Presentation, m: usize, opts: EnumOptions) -> Result<HomClassification> {
    if m > MAX_DEGREE || (m == MAX_DEGREE && !opts.allow_degree_six) {
        return Err(Error::DegreeTooLarge {
            degree: m,
            max: if opts.allow_degree_six { MAX_DEGREE } else { MAX_DEGREE - 1 },
        });
    }
    if m == 0 {
        return Err(Error::Precondition("target degree must be positive".into()));
    }
    let k = p.num_generators();
    if k == 0 {
        return Err(Error::Precondition("presentation has no generators".into()));
    }
    let mut checks_at: Vec<Vec<&Word>> = alloc::vec![Vec::new(); k];
    for r in p.relators() {
        if let Some(top) = r.iter().map(|l| l.unsigned_abs() as usize).max() {
            checks_at[top - 1].push(r);
        }
    }
    let mut search = Search {
        perms: AllPerms::new(m).collect(),
        reps: conjugacy_class_reps(m),
        checks_at,
        checks: 0,
        budget: opts.budget,
        found: Vec::new(),
    };
    search.extend(&mut Vec::with_capacity(k), k)?;

    let full = factorial(m);
    let mut classes: BTreeMap<PermTuple, u64> = BTreeMap::new();
    for imgs in core::mem::take(&mut search.found) {
        let t = PermTuple::new(imgs)?;
        if opts.surjective_only && t.closure_order() != full {
            continue;
        }
        let canon = t.canonical_under_conjugation()?;
        if let alloc::collections::btree_map::Entry::Vacant(e) = classes.entry(canon) {
            let orbit = full / e.key().centralizer_order()?;
            e.insert(orbit);
        }
    }
    let classes: Vec<HomClass> = classes
        .into_iter()
        .map(|(representative, orbit_size)| HomClass {
            representative,
            orbit_size,
        })
        .collect();
    Ok(HomClassification {
        degree: m,
        total: classes.iter().map(|c| c.orbit_size).sum(),
        classes,
        relator_checks: search.checks,
    })
}

/// `true` iff `w` evaluates to the identity under `h`.
pub fn kernel_contains(h: &GroupHom<SymmetricGroup>, w: &[i32]) -> Result<bool> {
    if !h.is_verified() {
        return Err(Error::NotVerified);
    }
    Ok(h.kernel_contains(w))
}

/// Subgroup of `Im f × Im g` generated by the paired generator images.
pub fn paired_closure(f: &[Perm], g: &[Perm]) -> BTreeSet<(Perm, Perm)> {
    let start = (Perm::identity(f[0].degree()), Perm::identity(g[0].degree()));
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some((a, b)) = queue.pop_front() {
        for (x, y) in f.iter().zip(g) {
            let next = (a.then(x), b.then(y));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// `ker f = ker g`, decided by whether the paired closure is the graph of a
/// bijection `Im f → Im g`.
pub fn kernels_equal(f: &GroupHom<SymmetricGroup>, g: &GroupHom<SymmetricGroup>) -> Result<bool> {
    if !f.is_verified() || !g.is_verified() {
        return Err(Error::NotVerified);
    }
    if f.source() != g.source() {
        return Err(Error::SourceMismatch);
    }
    if f.images().is_empty() {
        return Ok(true);
    }
    let graph = paired_closure(f.images(), g.images());
    let left: BTreeSet<&Perm> = graph.iter().map(|(a, _)| a).collect();
    let right: BTreeSet<&Perm> = graph.iter().map(|(_, b)| b).collect();
    Ok(left.len() == graph.len() && right.len() == graph.len())
}

/// The map `⟨gens⟩ → ⟨images⟩` sending `gens[i] ↦ images[i]`, if it is a
/// well-defined homomorphism.
pub fn induced_map(gens: &[Perm], images: &[Perm]) -> Result<Option<BTreeMap<Perm, Perm>>> {
    if gens.len() != images.len() || gens.is_empty() {
        return Err(Error::ImageCount {
            expected: gens.len(),
            got: images.len(),
        });
    }
    let graph = paired_closure(gens, images);
    let mut map = BTreeMap::new();
    for (a, b) in graph {
        if map.insert(a, b).is_some() {
            return Ok(None);
        }
    }
    Ok(Some(map))
}

/// Verified homomorphism from a presentation given by a permutation tuple.
pub fn verified_hom(p: &Presentation, t: &PermTuple) -> Result<GroupHom<SymmetricGroup>> {
    let mut h = GroupHom::to_symmetric(p.clone(), t)?;
    if !h.verify()? {
        return Err(Error::Precondition(alloc::format!(
            "images {} do not satisfy the relators",
            crate::perm::tuple_to_string(t)
        )));
    }
    Ok(h)
}
