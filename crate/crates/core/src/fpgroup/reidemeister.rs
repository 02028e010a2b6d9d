//! Reidemeister–Schreier rewriting from a closed coset table.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::vec::Vec;

use super::todd_coxeter::CosetTable;
use super::{invert_word, Presentation, Word};
use crate::error::{Error, Result};

/// Order in which the spanning tree of the coset graph is grown. Both scan
/// generator columns in the order `g₁, g₁⁻¹, g₂, …`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TreePolicy {
    #[default]
    BreadthFirst,
    DepthFirst,
}

/// A subgroup presentation together with the Schreier generators expressed
/// as words in the parent group.
#[derive(Clone, Debug)]
pub struct SchreierRewrite {
    pub presentation: Presentation,
    /// `rep(c) · g · rep(c·g)⁻¹` for each Schreier generator, in the parent's letters.
    pub generator_words: Vec<Word>,
    /// `(coset, generator)` labels, 0-based.
    pub labels: Vec<(usize, usize)>,
    /// Coset representatives along the tree.
    pub transversal: Vec<Word>,
}

pub fn reidemeister_schreier(p: &Presentation, t: &CosetTable) -> Result<Presentation> {
    Ok(reidemeister_schreier_with(p, t, TreePolicy::BreadthFirst)?.presentation)
}

pub fn reidemeister_schreier_with(
    p: &Presentation,
    t: &CosetTable,
    policy: TreePolicy,
) -> Result<SchreierRewrite> {
    if !t.is_closed() || t.num_generators() != p.num_generators() {
        return Err(Error::TableNotClosed);
    }
    let n = t.len();
    let k = p.num_generators();

    // parent[d] = (c, col) with c·letter(col) = d
    let mut parent: Vec<Option<(usize, usize)>> = alloc::vec![None; n];
    let mut visited = alloc::vec![false; n];
    let mut transversal: Vec<Word> = alloc::vec![Word::new(); n];
    visited[0] = true;
    match policy {
        TreePolicy::BreadthFirst => {
            let mut queue = VecDeque::from([0usize]);
            while let Some(c) = queue.pop_front() {
                for col in 0..2 * k {
                    let d = t.entry(c, col);
                    if !visited[d] {
                        visited[d] = true;
                        parent[d] = Some((c, col));
                        let mut w = transversal[c].clone();
                        w.push(letter(col));
                        transversal[d] = w;
                        queue.push_back(d);
                    }
                }
            }
        }
        TreePolicy::DepthFirst => {
            // explicit stack of (coset, next column)
            let mut stack = alloc::vec![(0usize, 0usize)];
            while let Some(&mut (c, ref mut col)) = stack.last_mut() {
                if *col == 2 * k {
                    stack.pop();
                    continue;
                }
                let this = *col;
                *col += 1;
                let d = t.entry(c, this);
                if !visited[d] {
                    visited[d] = true;
                    parent[d] = Some((c, this));
                    let mut w = transversal[c].clone();
                    w.push(letter(this));
                    transversal[d] = w;
                    stack.push((d, 0));
                }
            }
        }
    }

    let is_tree = |c: usize, g: usize| -> bool {
        let d = t.entry(c, 2 * g);
        parent[d] == Some((c, 2 * g)) || parent[c] == Some((d, 2 * g + 1))
    };

    let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut labels = Vec::new();
    let mut generator_words = Vec::new();
    for c in 0..n {
        for g in 0..k {
            if is_tree(c, g) {
                continue;
            }
            index.insert((c, g), labels.len());
            labels.push((c, g));
            let d = t.entry(c, 2 * g);
            let mut w = transversal[c].clone();
            w.push(g as i32 + 1);
            w.extend(invert_word(&transversal[d]));
            generator_words.push(w);
        }
    }

    let mut relators = Vec::with_capacity(n * p.relators().len());
    for c in 0..n {
        for r in p.relators() {
            let mut cur = c;
            let mut out = Word::new();
            for &l in r {
                let g = l.unsigned_abs() as usize - 1;
                if l > 0 {
                    if let Some(&s) = index.get(&(cur, g)) {
                        out.push(s as i32 + 1);
                    }
                    cur = t.entry(cur, 2 * g);
                } else {
                    let prev = t.entry(cur, 2 * g + 1);
                    if let Some(&s) = index.get(&(prev, g)) {
                        out.push(-(s as i32 + 1));
                    }
                    cur = prev;
                }
            }
            debug_assert_eq!(cur, c, "relator does not close in the table");
            relators.push(out);
        }
    }

    let names = labels
        .iter()
        .map(|&(c, g)| format!("{}_{}", p.generators()[g], c + 1))
        .collect();
    Ok(SchreierRewrite {
        presentation: Presentation::new(names, relators)?,
        generator_words,
        labels,
        transversal,
    })
}

fn letter(col: usize) -> i32 {
    let g = (col / 2) as i32 + 1;
    if col.is_multiple_of(2) {
        g
    } else {
        -g
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::todd_coxeter;
    use crate::intlinalg::AbelianDescriptor;
    use alloc::vec;

    #[test]
    fn index_two_in_cyclic_of_order_two() {
        let p = Presentation::free_product_z2(1);
        let t = todd_coxeter(&p, &[], 10).unwrap();
        assert_eq!(t.len(), 2);
        let sub = reidemeister_schreier(&p, &t).unwrap();
        assert_eq!(sub.num_generators(), 1);
        assert!(sub.abelianization().is_trivial());
    }

    #[test]
    fn free_product_kernel_counts() {
        let p = Presentation::free_product_z2(3);
        let words = vec![vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2], vec![1, 3, 2]];
        let t = todd_coxeter(&p, &words, 40).unwrap();
        for policy in [TreePolicy::BreadthFirst, TreePolicy::DepthFirst] {
            let rw = reidemeister_schreier_with(&p, &t, policy).unwrap();
            // Schreier count 3·4 − (4 − 1)
            assert_eq!(rw.presentation.num_generators(), 9);
            assert_eq!(rw.presentation.relators().len(), 12);
            assert_eq!(
                rw.presentation.abelianization(),
                AbelianDescriptor::from_parts(3, &[]).unwrap()
            );
            for w in &rw.generator_words {
                assert_eq!(t.trace(0, w), 0);
            }
            for (c, w) in rw.transversal.iter().enumerate() {
                assert_eq!(t.trace(0, w), c);
            }
        }
    }
}
