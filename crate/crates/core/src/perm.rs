//! Permutations of small degree in one-line notation.
//!
//! Products are read left to right: `p.then(&q)` applies `p` first, so
//! `(p.then(&q))(x) = q(p(x))`. Points are 1-based at the API surface.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest degree accepted by the exhaustive conjugation routines.
pub const MAX_CANONICAL_DEGREE: usize = 8;

/// A permutation of `{1, …, m}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    // 0-based images
    img: Vec<u8>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= u8::MAX as usize, "degree {degree} too large");
        Perm {
            img: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation from 1-based one-line images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let m = images.len();
        if m > u8::MAX as usize {
            return Err(Error::DegreeTooLarge {
                degree: m,
                max: u8::MAX as usize,
            });
        }
        let mut seen = alloc::vec![false; m];
        let mut img = Vec::with_capacity(m);
        for &x in images {
            if x == 0 || x > m {
                return Err(Error::PointOutOfRange { point: x, degree: m });
            }
            if seen[x - 1] {
                return Err(Error::RepeatedPoint { point: x });
            }
            seen[x - 1] = true;
            img.push((x - 1) as u8);
        }
        Ok(Perm { img })
    }

    pub(crate) fn from_zero_based(img: Vec<u8>) -> Self {
        debug_assert!({
            let mut s = img.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v as usize)
        });
        Perm { img }
    }

    /// The transposition `(i j)` in degree `degree`.
    pub fn transposition(degree: usize, i: usize, j: usize) -> Result<Self> {
        for p in [i, j] {
            if p == 0 || p > degree {
                return Err(Error::PointOutOfRange { point: p, degree });
            }
        }
        if i == j {
            return Err(Error::RepeatedPoint { point: i });
        }
        let mut p = Perm::identity(degree);
        p.img.swap(i - 1, j - 1);
        Ok(p)
    }

    /// Parses cycle notation such as `"(1 2)(3 4)"`. The empty string (or `"()"`)
    /// is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        if degree > u8::MAX as usize {
            return Err(Error::DegreeTooLarge {
                degree,
                max: u8::MAX as usize,
            });
        }
        let mut p = Perm::identity(degree);
        let mut moved = alloc::vec![false; degree];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::Parse(alloc::format!("expected '(' in {text:?}")));
            };
            let Some(close) = body.find(')') else {
                return Err(Error::Parse(alloc::format!("unclosed cycle in {text:?}")));
            };
            let mut cycle = Vec::new();
            for tok in body[..close].split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let x: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(alloc::format!("bad point {tok:?}")))?;
                if x == 0 || x > degree {
                    return Err(Error::PointOutOfRange { point: x, degree });
                }
                if moved[x - 1] {
                    return Err(Error::RepeatedPoint { point: x });
                }
                moved[x - 1] = true;
                cycle.push(x - 1);
            }
            for k in 0..cycle.len() {
                p.img[cycle[k]] = cycle[(k + 1) % cycle.len()] as u8;
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.img[x - 1] as usize + 1
    }

    /// 1-based one-line images.
    pub fn images(&self) -> Vec<usize> {
        self.img.iter().map(|&v| v as usize + 1).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.img
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// Left-to-right product: `self` first, then `other`.
    ///
    /// Panics on a degree mismatch; see [`compose`] for the checked form.
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            img: self.img.iter().map(|&x| other.img[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = alloc::vec![0u8; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            img[v as usize] = i as u8;
        }
        Perm { img }
    }

    /// `g⁻¹ · self · g`, i.e. `self` with its points relabelled by `g`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.inverse().then(self).then(g)
    }

    pub fn pow(&self, k: i64) -> Perm {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Perm::identity(self.degree());
        for _ in 0..k.unsigned_abs() {
            acc = acc.then(&base);
        }
        acc
    }

    /// Extends to degree `degree` by fixing the new points.
    pub fn extend(&self, degree: usize) -> Perm {
        assert!(degree >= self.degree() && degree <= u8::MAX as usize);
        let mut img = self.img.clone();
        img.extend(self.degree() as u8..degree as u8);
        Perm { img }
    }

    /// Number of pairs `x < y` with `p(x) > p(y)`.
    pub fn inversions(&self) -> usize {
        let n = self.img.len();
        let mut c = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.img[i] > self.img[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// Nontrivial cycles, each starting at its smallest point (1-based).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.img.len();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.img[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.img[x] as usize;
            }
            out.push(cyc);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// Matrix of the induced action on `Z^m / Z·(1,…,1)` in the basis
    /// `e₁−e_m, …, e_{m−1}−e_m`; column `j` is the image of the `j`-th basis vector.
    pub fn matrix_mod_diagonal(&self) -> Vec<Vec<i64>> {
        let m = self.degree();
        let k = m.saturating_sub(1);
        let mut mat = alloc::vec![alloc::vec![0i64; k]; k];
        let last = self.img[m - 1] as usize;
        for j in 0..k {
            // g(e_j − e_m) = e_{g(j)} − e_{g(m)}, and e_m ≡ 0 in these coordinates
            // after subtracting: e_a − e_b = (e_a − e_m) − (e_b − e_m).
            let a = self.img[j] as usize;
            if a < k {
                mat[a][j] += 1;
            }
            if last < k {
                mat[last][j] -= 1;
            }
        }
        mat
    }
}

/// Checked left-to-right product `p` then `q`.
pub fn compose(p: &Perm, q: &Perm) -> Result<Perm> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch {
            left: p.degree(),
            right: q.degree(),
        });
    }
    Ok(p.then(q))
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{}", self)
    }
}

/// An ordered tuple of permutations of a common degree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PermTuple {
    entries: Vec<Perm>,
}

impl PermTuple {
    pub fn new(entries: Vec<Perm>) -> Result<Self> {
        let Some(first) = entries.first() else {
            return Err(Error::EmptyTuple);
        };
        let m = first.degree();
        if let Some(bad) = entries.iter().find(|p| p.degree() != m) {
            return Err(Error::DegreeMismatch {
                left: m,
                right: bad.degree(),
            });
        }
        Ok(PermTuple { entries })
    }

    /// Parses one cycle-notation string per entry.
    pub fn parse(cycles: &[&str], degree: usize) -> Result<Self> {
        let entries = cycles
            .iter()
            .map(|c| Perm::parse_cycles(c, degree))
            .collect::<Result<Vec<_>>>()?;
        PermTuple::new(entries)
    }

    pub fn entries(&self) -> &[Perm] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Perm> {
        self.entries
    }

    pub fn degree(&self) -> usize {
        self.entries[0].degree()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn conjugate_by(&self, g: &Perm) -> PermTuple {
        let ginv = g.inverse();
        PermTuple {
            entries: self.entries.iter().map(|p| ginv.then(p).then(g)).collect(),
        }
    }

    /// Lexicographically least simultaneous conjugate over all of `S_m`.
    pub fn canonical_under_conjugation(&self) -> Result<PermTuple> {
        let m = self.degree();
        if m > MAX_CANONICAL_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree: m,
                max: MAX_CANONICAL_DEGREE,
            });
        }
        let mut best: Option<PermTuple> = None;
        for g in AllPerms::new(m) {
            let c = self.conjugate_by(&g);
            if best.as_ref().is_none_or(|b| c < *b) {
                best = Some(c);
            }
        }
        Ok(best.expect("S_m is nonempty"))
    }

    /// Number of `g ∈ S_m` fixing the tuple under simultaneous conjugation.
    pub fn centralizer_order(&self) -> Result<u64> {
        let m = self.degree();
        if m > MAX_CANONICAL_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree: m,
                max: MAX_CANONICAL_DEGREE,
            });
        }
        Ok(AllPerms::new(m)
            .filter(|g| self.conjugate_by(g) == *self)
            .count() as u64)
    }

    /// Order of the generated subgroup.
    pub fn closure_order(&self) -> u64 {
        closure(&self.entries).len() as u64
    }
}

/// Breadth-first closure of the subgroup generated by `gens`.
///
/// `gens` must be nonempty and of uniform degree.
pub fn closure(gens: &[Perm]) -> BTreeSet<Perm> {
    let id = Perm::identity(gens[0].degree());
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn factorial(m: usize) -> u64 {
    (1..=m as u64).product()
}

/// One representative per cycle type of `S_m`, as consecutive cycles
/// `(1 … a)(a+1 … a+b)…` for each partition `a ≥ b ≥ …` of `m`.
pub fn conjugacy_class_reps(m: usize) -> Vec<Perm> {
    fn partitions(m: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if m == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=m.min(max)).rev() {
            cur.push(part);
            partitions(m - part, part, cur, out);
            cur.pop();
        }
    }
    let mut parts = Vec::new();
    partitions(m, m, &mut Vec::new(), &mut parts);
    parts
        .into_iter()
        .map(|shape| {
            let mut img: Vec<u8> = (0..m as u8).collect();
            let mut start = 0;
            for len in shape {
                for k in 0..len {
                    img[start + k] = (start + (k + 1) % len) as u8;
                }
                start += len;
            }
            Perm::from_zero_based(img)
        })
        .collect()
}

/// All permutations of degree `m` in lexicographic order of one-line images.
pub struct AllPerms {
    next: Option<Vec<u8>>,
}

impl AllPerms {
    pub fn new(m: usize) -> Self {
        assert!(m <= u8::MAX as usize);
        AllPerms {
            next: Some((0..m as u8).collect()),
        }
    }
}

impl Iterator for AllPerms {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        let cur = self.next.take()?;
        let mut a = cur.clone();
        // next lexicographic permutation
        if let Some(i) = (0..a.len().saturating_sub(1)).rev().find(|&i| a[i] < a[i + 1]) {
            let j = (i + 1..a.len()).rev().find(|&j| a[j] > a[i]).unwrap();
            a.swap(i, j);
            a[i + 1..].reverse();
            self.next = Some(a);
        }
        Some(Perm::from_zero_based(cur))
    }
}

/// Renders a tuple as `[(1 2), (2 3)]`.
pub fn tuple_to_string(t: &PermTuple) -> String {
    let mut s = String::from("[");
    for (i, p) in t.entries().iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        s.push_str(&alloc::format!("{p}"));
    }
    s.push(']');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(s: &str, m: usize) -> Perm {
        Perm::parse_cycles(s, m).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("(1 2)", 4).images(), vec![2, 1, 3, 4]);
        assert!(p("", 4).is_identity());
        assert!(p("()", 4).is_identity());
        assert_eq!(p("(1 2 3 4)", 4).images(), vec![2, 3, 4, 1]);
        assert_eq!(p("(1 2)(3 4)", 4).images(), vec![2, 1, 4, 3]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Perm::parse_cycles("(1 2", 4),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            Perm::parse_cycles("1 2", 4),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            Perm::parse_cycles("(1 x)", 4),
            Err(Error::Parse(_))
        ));
        assert_eq!(
            Perm::parse_cycles("(1 2)(2 3)", 4),
            Err(Error::RepeatedPoint { point: 2 })
        );
        assert_eq!(
            Perm::parse_cycles("(1 5)", 4),
            Err(Error::PointOutOfRange { point: 5, degree: 4 })
        );
    }

    #[test]
    fn compose_left_to_right() {
        let c = compose(&p("(1 2)", 3), &p("(2 3)", 3)).unwrap();
        assert_eq!(c, p("(1 3 2)", 3));
        let q = p("(1 3 4)", 4);
        assert!(compose(&q, &q.inverse()).unwrap().is_identity());
        assert_eq!(
            compose(&p("", 3), &p("", 4)),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn epsilon_two_images_braid() {
        let a = p("(1 2 3 4)", 4);
        let b = p("(2 1 3 4)", 4);
        assert_eq!(a.then(&b).then(&a), b.then(&a).then(&b));
    }

    #[test]
    fn display_round_trip() {
        let q = p("(1 3)(2 4 5)", 5);
        assert_eq!(alloc::format!("{q}"), "(1 3)(2 4 5)");
        assert_eq!(Perm::parse_cycles(&alloc::format!("{q}"), 5).unwrap(), q);
        assert_eq!(alloc::format!("{}", Perm::identity(3)), "()");
    }

    #[test]
    fn canonical_examples() {
        let t1 = PermTuple::parse(&["(1 3)", "(3 2)"], 4).unwrap();
        let t2 = PermTuple::parse(&["(1 2)", "(2 3)"], 4).unwrap();
        // brute-force oracle: the two conjugation orbits share an element
        let orbit = |t: &PermTuple| -> BTreeSet<PermTuple> {
            AllPerms::new(4).map(|g| t.conjugate_by(&g)).collect()
        };
        assert_eq!(orbit(&t1).len(), 24);
        assert!(orbit(&t1).contains(&t2));
        assert_eq!(
            t1.canonical_under_conjugation().unwrap(),
            t2.canonical_under_conjugation().unwrap()
        );

        let ids = PermTuple::parse(&["", ""], 4).unwrap();
        assert_eq!(ids.canonical_under_conjugation().unwrap(), ids);

        let single = PermTuple::parse(&["(3 4)"], 4).unwrap();
        let transpositions: Vec<Perm> = AllPerms::new(4)
            .filter(|g| g.cycles().len() == 1 && g.cycles()[0].len() == 2)
            .collect();
        assert_eq!(transpositions.len(), 6);
        let min = transpositions.iter().min().unwrap();
        assert_eq!(single.canonical_under_conjugation().unwrap().entries()[0], *min);
        // one-line 1 2 4 3 precedes 2 1 3 4
        assert_eq!(*min, p("(3 4)", 4));
    }

    #[test]
    fn canonical_rejects_large_degree() {
        let t = PermTuple::new(vec![Perm::identity(9)]).unwrap();
        assert!(matches!(
            t.canonical_under_conjugation(),
            Err(Error::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn tuple_invariants() {
        assert_eq!(PermTuple::new(vec![]), Err(Error::EmptyTuple));
        assert!(PermTuple::new(vec![Perm::identity(3), Perm::identity(4)]).is_err());
    }

    #[test]
    fn closure_examples() {
        let s4 = PermTuple::parse(&["(1 2)", "(2 3)", "(3 4)"], 4).unwrap();
        assert_eq!(s4.closure_order(), 24);
        let v4 = PermTuple::parse(&["(1 2)(3 4)", "(1 3)(2 4)"], 4).unwrap();
        assert_eq!(v4.closure_order(), 4);
        let one = PermTuple::parse(&[""], 4).unwrap();
        assert_eq!(one.closure_order(), 1);
    }

    #[test]
    fn class_reps_count_partitions() {
        let counts: Vec<usize> = (1..=7).map(|m| conjugacy_class_reps(m).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(AllPerms::new(5).count(), 120);
    }

    #[test]
    fn matrix_mod_diagonal_is_a_representation() {
        let all: Vec<Perm> = AllPerms::new(4).collect();
        let mul = |a: &Vec<Vec<i64>>, b: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
            let k = a.len();
            (0..k)
                .map(|i| (0..k).map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum()).collect())
                .collect()
        };
        for g in &all {
            for h in &all {
                // acting first by g then by h is M(h)·M(g)
                assert_eq!(
                    g.then(h).matrix_mod_diagonal(),
                    mul(&h.matrix_mod_diagonal(), &g.matrix_mod_diagonal())
                );
            }
        }
    }
}
