//! Garside left-canonical form `Δ^k · s₁ ⋯ s_r` with permutation-braid factors.
//!
//! A simple element is stored as the permutation sending each starting
//! position to the end position of the same strand (product read left to
//! right). The strands starting at `i, i+1` cross iff `p(i) > p(i+1)`, which
//! gives the starting set; the finishing set is the same test on `p⁻¹`.

use alloc::vec::Vec;
use core::fmt;

use super::word::BraidWord;
use crate::perm::Perm;

/// Canonical representative of an element of `B_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GarsideForm {
    strands: usize,
    infimum: i64,
    factors: Vec<Perm>,
}

impl GarsideForm {
    pub fn identity(strands: usize) -> Self {
        GarsideForm {
            strands,
            infimum: 0,
            factors: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Power of the half twist `Δ`.
    pub fn infimum(&self) -> i64 {
        self.infimum
    }

    pub fn factors(&self) -> &[Perm] {
        &self.factors
    }

    /// Canonical length `r`.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// Right multiplication by `σ_i^{±1}`.
    pub fn mul_letter(&mut self, letter: i32) {
        let n = self.strands;
        let i = letter.unsigned_abs() as usize - 1;
        if letter > 0 {
            let mut t = Perm::identity(n);
            swap_points(&mut t, i);
            self.push_simple(t);
        } else {
            // σ_i⁻¹ = Δ⁻¹ · (Δσ_i⁻¹), and x·Δ⁻¹ = Δ⁻¹·τ(x) with τ(x) = ΔxΔ⁻¹
            self.infimum -= 1;
            for f in &mut self.factors {
                *f = flip(f);
            }
            let mut b = half_twist(n);
            // Δσ_i⁻¹: drop the last crossing σ_i from Δ
            swap_values(&mut b, i);
            self.push_simple(b);
        }
    }

    /// Right multiplication by a simple element.
    fn push_simple(&mut self, s: Perm) {
        if s.is_identity() {
            return;
        }
        self.factors.push(s);
        // one right-to-left sweep restores left-weightedness
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (left, right) = self.factors.split_at_mut(j);
            if !left_weight(&mut left[j - 1], &mut right[0]) {
                break;
            }
            j -= 1;
        }
        let delta_len = self.strands * (self.strands - 1) / 2;
        let leading = self
            .factors
            .iter()
            .take_while(|f| f.inversions() == delta_len)
            .count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.infimum += leading as i64;
        }
        while self.factors.last().is_some_and(Perm::is_identity) {
            self.factors.pop();
        }
    }

    /// Re-expands the form into a braid word (`Δ` as its positive half-twist word).
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = BraidWord::new(n, simple_word(&half_twist(n))).expect("valid strands");
        let mut w = delta.pow(self.infimum);
        for f in &self.factors {
            w.push(&BraidWord::new(n, simple_word(f)).expect("valid strands"));
        }
        w
    }
}

impl fmt::Debug for GarsideForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.infimum)?;
        for s in &self.factors {
            write!(f, " · {s}")?;
        }
        Ok(())
    }
}

impl fmt::Display for GarsideForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Left-canonical form of `w`.
pub fn normal_form(w: &BraidWord) -> GarsideForm {
    let mut g = GarsideForm::identity(w.strands());
    for &k in w.letters() {
        g.mul_letter(k);
    }
    g
}

fn half_twist(n: usize) -> Perm {
    Perm::from_zero_based((0..n as u8).rev().collect())
}

// p ↦ p·σ_i on the right: the strands ending at i, i+1 swap end positions
fn swap_values(p: &mut Perm, i: usize) {
    let img = p.raw();
    let a = img.iter().position(|&v| v as usize == i).unwrap();
    let b = img.iter().position(|&v| v as usize == i + 1).unwrap();
    let mut v = img.to_vec();
    v.swap(a, b);
    *p = Perm::from_zero_based(v);
}

// p ↦ σ_i·p on the left
fn swap_points(p: &mut Perm, i: usize) {
    let mut v = p.raw().to_vec();
    v.swap(i, i + 1);
    *p = Perm::from_zero_based(v);
}

// conjugation by Δ: σ_i ↦ σ_{n−i}
fn flip(p: &Perm) -> Perm {
    let n = p.degree() as u8;
    let img = p.raw();
    Perm::from_zero_based((0..n).map(|x| n - 1 - img[(n - 1 - x) as usize]).collect())
}

fn starts_with(p: &Perm, i: usize) -> bool {
    let img = p.raw();
    img[i] > img[i + 1]
}

fn ends_with(p: &Perm, i: usize) -> bool {
    let img = p.raw();
    let a = img.iter().position(|&v| v as usize == i).unwrap();
    let b = img.iter().position(|&v| v as usize == i + 1).unwrap();
    a > b
}

/// Moves crossings from the front of `b` to the back of `a` until the pair is
/// left-weighted. Returns whether anything moved.
fn left_weight(a: &mut Perm, b: &mut Perm) -> bool {
    let n = a.degree();
    let mut changed = false;
    loop {
        let Some(i) = (0..n - 1).find(|&i| starts_with(b, i) && !ends_with(a, i)) else {
            return changed;
        };
        swap_values(a, i);
        swap_points(b, i);
        changed = true;
    }
}

/// A positive word for a simple element: bubble sort on the crossing order.
fn simple_word(p: &Perm) -> Vec<i32> {
    let mut s = p.clone();
    let mut out = Vec::new();
    while let Some(i) = (0..s.degree() - 1).find(|&i| starts_with(&s, i)) {
        out.push(i as i32 + 1);
        swap_points(&mut s, i);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::zeta;
    use alloc::vec;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn braid_relation() {
        assert_eq!(normal_form(&w(3, "1 2 1")), normal_form(&w(3, "2 1 2")));
        assert_ne!(normal_form(&w(3, "1 2")), normal_form(&w(3, "2 1")));
    }

    #[test]
    fn trivial_cancellation() {
        let g = normal_form(&w(3, "1 -1"));
        assert_eq!(g.infimum(), 0);
        assert!(g.factors().is_empty());
        assert!(normal_form(&w(5, "-2 -4 4 3 -3 2")).is_identity());
    }

    /// Greedy factorisation of a positive word into simple elements, grown
    /// letter by letter while the inversion count keeps increasing.
    fn greedy_simple_factors(n: usize, letters: &[i32]) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur = Perm::identity(n);
        for &k in letters {
            let t = Perm::transposition(n, k as usize, k as usize + 1).unwrap();
            let next = cur.then(&t);
            if next.inversions() == cur.inversions() + 1 {
                cur = next;
            } else {
                out.push(cur);
                cur = t;
            }
        }
        out.push(cur);
        out
    }

    #[test]
    fn full_twist_three_strands() {
        let z = zeta(3, 3).unwrap();
        let greedy = greedy_simple_factors(3, z.letters());
        let delta = Perm::parse_cycles("(1 3)", 3).unwrap();
        assert_eq!(greedy, vec![delta.clone(), delta]);
        let g = normal_form(&z);
        assert_eq!(g.infimum(), 2);
        assert!(g.factors().is_empty());
    }

    #[test]
    fn negative_powers_of_delta() {
        let g = normal_form(&zeta(4, 4).unwrap().inverse());
        assert_eq!(g.infimum(), -2);
        assert!(g.factors().is_empty());
        let g = normal_form(&w(3, "-1"));
        assert_eq!(g.infimum(), -1);
        assert_eq!(g.canonical_length(), 1);
    }

    #[test]
    fn to_word_round_trip() {
        for s in ["1 2 -1 -2 2 2", "-1 -1 2", "1 3 2 -3", "-2 -1 -3 -2"] {
            let u = w(4, s);
            let g = normal_form(&u);
            assert_eq!(normal_form(&g.to_word()), g);
        }
    }

    #[test]
    fn forms_are_left_weighted() {
        let g = normal_form(&w(4, "1 2 3 -1 2 2 -3 1 3 2 1 -2"));
        for pair in g.factors().windows(2) {
            for i in 0..3 {
                if starts_with(&pair[1], i) {
                    assert!(ends_with(&pair[0], i));
                }
            }
        }
        assert!(g.factors().iter().all(|f| !f.is_identity() && f.inversions() != 6));
    }
}
