//! HLT coset enumeration with lookahead.
//!
//! Column `2g` holds the action of generator `g` (0-based) and `2g + 1` the
//! action of its inverse. Completed tables are renumbered breadth-first from
//! coset 0, scanning columns in order, so identical inputs give identical tables.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use super::{Presentation, Word};
use crate::error::{Error, Result};
use crate::perm::Perm;

const NONE: usize = usize::MAX;

/// How the subgroup of a table was specified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subgroup {
    /// Generated by these words.
    Words(Vec<Word>),
    /// Kernel of a homomorphism onto a finite group.
    Kernel,
}

/// A closed coset table; coset 0 is the subgroup itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    generators: usize,
    rows: Vec<Vec<usize>>,
    subgroup: Subgroup,
}

fn column(letter: i32) -> usize {
    let g = letter.unsigned_abs() as usize - 1;
    if letter > 0 {
        2 * g
    } else {
        2 * g + 1
    }
}

impl CosetTable {
    /// Builds a table from complete rows, rejecting undefined or out-of-range entries.
    pub fn from_rows(generators: usize, rows: Vec<Vec<usize>>, subgroup: Subgroup) -> Result<Self> {
        let n = rows.len();
        for r in &rows {
            if r.len() != 2 * generators || r.iter().any(|&d| d >= n) {
                return Err(Error::TableNotClosed);
            }
        }
        let t = CosetTable {
            generators,
            rows,
            subgroup,
        };
        if !t.is_closed() {
            return Err(Error::TableNotClosed);
        }
        Ok(t)
    }

    /// Number of cosets, i.e. the index.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn num_generators(&self) -> usize {
        self.generators
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// Raw entry by column index.
    pub fn entry(&self, coset: usize, col: usize) -> usize {
        self.rows[coset][col]
    }

    /// Coset reached from `coset` by one signed letter.
    pub fn act(&self, coset: usize, letter: i32) -> usize {
        self.rows[coset][column(letter)]
    }

    pub fn trace(&self, coset: usize, w: &[i32]) -> usize {
        w.iter().fold(coset, |c, &l| self.act(c, l))
    }

    /// Every entry defined, and each generator column inverse to its partner.
    pub fn is_closed(&self) -> bool {
        let n = self.rows.len();
        self.rows.iter().enumerate().all(|(c, r)| {
            r.len() == 2 * self.generators
                && (0..self.generators).all(|g| {
                    let d = r[2 * g];
                    d < n && self.rows[d][2 * g + 1] == c
                })
        })
    }

    /// Each relator traces each coset back to itself, and the subgroup
    /// generators (if given as words) fix coset 0.
    pub fn is_consistent_with(&self, p: &Presentation) -> bool {
        if p.num_generators() != self.generators || !self.is_closed() {
            return false;
        }
        let relators_ok = (0..self.len()).all(|c| p.relators().iter().all(|r| self.trace(c, r) == c));
        let subgroup_ok = match &self.subgroup {
            Subgroup::Words(ws) => ws.iter().all(|w| self.trace(0, w) == 0),
            Subgroup::Kernel => true,
        };
        relators_ok && subgroup_ok
    }

    /// Action of each generator as a permutation of the cosets `1..=N`.
    pub fn permutations(&self) -> Result<Vec<Perm>> {
        (0..self.generators)
            .map(|g| {
                let imgs: Vec<usize> = self.rows.iter().map(|r| r[2 * g] + 1).collect();
                Perm::from_images(&imgs)
            })
            .collect()
    }
}

struct Enumerator<'a> {
    ncols: usize,
    table: Vec<usize>,
    parent: Vec<usize>,
    live: usize,
    max: usize,
    relators: &'a [Word],
}

enum Scan {
    Done,
    NeedSpace,
}

impl<'a> Enumerator<'a> {
    fn new(generators: usize, relators: &'a [Word], max: usize) -> Self {
        let ncols = 2 * generators;
        Enumerator {
            ncols,
            table: alloc::vec![NONE; ncols],
            parent: alloc::vec![0],
            live: 1,
            max,
            relators,
        }
    }

    fn get(&self, c: usize, col: usize) -> usize {
        self.table[c * self.ncols + col]
    }

    fn put(&mut self, c: usize, col: usize, d: usize) {
        self.table[c * self.ncols + col] = d;
    }

    fn count(&self) -> usize {
        self.parent.len()
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, col: usize) -> bool {
        if self.live >= self.max {
            return false;
        }
        let d = self.count();
        self.table.extend(core::iter::repeat_n(NONE, self.ncols));
        self.parent.push(d);
        self.live += 1;
        self.put(c, col, d);
        self.put(d, col ^ 1, c);
        true
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = c;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra == rb {
            return;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        self.live -= 1;
        queue.push(hi);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let dead = queue[i];
            i += 1;
            for col in 0..self.ncols {
                let d = self.get(dead, col);
                if d == NONE {
                    continue;
                }
                self.put(dead, col, NONE);
                if self.get(d, col ^ 1) == dead {
                    self.put(d, col ^ 1, NONE);
                }
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let m_col = self.get(mu, col);
                if m_col != NONE {
                    self.merge(nu, m_col, &mut queue);
                } else {
                    let n_inv = self.get(nu, col ^ 1);
                    if n_inv != NONE {
                        self.merge(mu, n_inv, &mut queue);
                    } else {
                        self.put(mu, col, nu);
                        self.put(nu, col ^ 1, mu);
                    }
                }
            }
        }
    }

    /// Scans `w` at coset `c`, defining new cosets when `fill` is set.
    fn scan(&mut self, c: usize, w: &[i32], fill: bool) -> Scan {
        if w.is_empty() {
            return Scan::Done;
        }
        let mut f = c;
        let mut i = 0usize;
        let mut b = c;
        let mut j = w.len() as isize - 1;
        loop {
            while (i as isize) <= j {
                let next = self.get(f, column(w[i]));
                if next == NONE {
                    break;
                }
                f = next;
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Scan::Done;
            }
            while j >= i as isize {
                let next = self.get(b, column(w[j as usize]) ^ 1);
                if next == NONE {
                    break;
                }
                b = next;
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Scan::Done;
            }
            if j == i as isize {
                let col = column(w[i]);
                self.put(f, col, b);
                self.put(b, col ^ 1, f);
                return Scan::Done;
            }
            if !fill {
                return Scan::Done;
            }
            if !self.define(f, column(w[i])) {
                return Scan::NeedSpace;
            }
        }
    }

    fn lookahead(&mut self) {
        let mut c = 0;
        while c < self.count() {
            let rels = self.relators;
            for rel in rels {
                if !self.alive(c) {
                    break;
                }
                self.scan(c, rel, false);
            }
            c += 1;
        }
    }

    /// Scan with fill, falling back to one lookahead pass when out of space.
    fn scan_fill(&mut self, c: usize, w: &[i32]) -> Result<()> {
        loop {
            if !self.alive(c) {
                return Ok(());
            }
            match self.scan(c, w, true) {
                Scan::Done => return Ok(()),
                Scan::NeedSpace => {
                    self.lookahead();
                    if self.live >= self.max {
                        return Err(Error::CosetLimit { limit: self.max });
                    }
                }
            }
        }
    }

    fn run(&mut self, subgroup: &[Word]) -> Result<()> {
        for w in subgroup {
            self.scan_fill(0, w)?;
        }
        let mut c = 0;
        while c < self.count() {
            let rels = self.relators;
            for rel in rels {
                if !self.alive(c) {
                    break;
                }
                self.scan_fill(c, rel)?;
            }
            for col in 0..self.ncols {
                if !self.alive(c) {
                    break;
                }
                if self.get(c, col) == NONE && !self.define(c, col) {
                    self.lookahead();
                    if !self.alive(c) {
                        break;
                    }
                    if self.get(c, col) == NONE && !self.define(c, col) {
                        return Err(Error::CosetLimit { limit: self.max });
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }

    /// Live cosets renumbered breadth-first from coset 0.
    fn standardize(mut self, generators: usize) -> Result<Vec<Vec<usize>>> {
        let mut new_id = alloc::vec![NONE; self.count()];
        let mut order = Vec::new();
        let start = self.rep(0);
        new_id[start] = 0;
        order.push(start);
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for col in 0..self.ncols {
                let d = self.get(c, col);
                if d == NONE {
                    return Err(Error::TableNotClosed);
                }
                let d = self.rep(d);
                if new_id[d] == NONE {
                    new_id[d] = order.len();
                    order.push(d);
                    queue.push_back(d);
                }
            }
        }
        let mut rows = Vec::with_capacity(order.len());
        for &c in &order {
            let mut row = Vec::with_capacity(2 * generators);
            for col in 0..self.ncols {
                let d = self.get(c, col);
                let d = self.rep(d);
                row.push(new_id[d]);
            }
            rows.push(row);
        }
        Ok(rows)
    }
}

/// Enumerates the cosets of `⟨subgroup⟩` in the group presented by `p`.
///
/// Fails with [`Error::CosetLimit`] when more than `max_cosets` live cosets
/// would be needed even after lookahead.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Word], max_cosets: usize) -> Result<CosetTable> {
    for w in subgroup {
        if let Some(&bad) = w
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize > p.num_generators())
        {
            return Err(Error::BadRelator {
                letter: bad,
                generators: p.num_generators(),
            });
        }
    }
    let k = p.num_generators();
    let mut e = Enumerator::new(k, p.relators(), max_cosets.max(1));
    e.run(subgroup)?;
    let rows = e.standardize(k)?;
    let t = CosetTable::from_rows(k, rows, Subgroup::Words(subgroup.to_vec()))?;
    debug_assert!(t.is_consistent_with(p));
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::pure_braid_generator;
    use crate::fpgroup::braid_presentation;
    use alloc::vec;

    #[test]
    fn symmetric_group_mod_klein_four() {
        let s4 = Presentation::coxeter_symmetric(4).unwrap();
        // (12)(34) = s1 s3, (13)(24) = s2 s1 s3 s2
        let v4 = vec![vec![1, 3], vec![2, 1, 3, 2]];
        let t = todd_coxeter(&s4, &v4, 60).unwrap();
        assert_eq!(t.len(), 6);
        assert!(t.is_consistent_with(&s4));
        let whole = todd_coxeter(&s4, &[], 240).unwrap();
        assert_eq!(whole.len(), 24);
    }

    #[test]
    fn free_product_diagonal_subgroup() {
        let fp = Presentation::free_product_z2(3);
        let words = vec![vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2], vec![1, 3, 2]];
        let t = todd_coxeter(&fp, &words, 40).unwrap();
        assert_eq!(t.len(), 4);
        assert!(t.is_consistent_with(&fp));
    }

    #[test]
    fn pure_braid_index() {
        let b4 = braid_presentation(4).unwrap();
        let mut words = Vec::new();
        for j in 2..=4 {
            for i in 1..j {
                words.push(pure_braid_generator(4, i, j).unwrap().letters().to_vec());
            }
        }
        let t = todd_coxeter(&b4, &words, 240).unwrap();
        assert_eq!(t.len(), 24);
        assert!(t.is_consistent_with(&b4));
    }

    #[test]
    fn limit_is_reported() {
        let s4 = Presentation::coxeter_symmetric(4).unwrap();
        assert_eq!(
            todd_coxeter(&s4, &[], 5),
            Err(Error::CosetLimit { limit: 5 })
        );
    }

    #[test]
    fn cyclic_group() {
        let p = Presentation::new(vec!["a".into()], vec![vec![1; 7]]).unwrap();
        let t = todd_coxeter(&p, &[], 10).unwrap();
        assert_eq!(t.len(), 7);
        let perms = t.permutations().unwrap();
        assert_eq!(perms[0].order(), 7);
    }

    #[test]
    fn deterministic() {
        let s4 = Presentation::coxeter_symmetric(4).unwrap();
        let a = todd_coxeter(&s4, &[vec![1]], 100).unwrap();
        let b = todd_coxeter(&s4, &[vec![1]], 100).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 12);
    }
}
