//! The free product `⟨t₁, t₂, t₃ | t_i²⟩` of three groups of order two.
//!
//! Elements are reduced words with no two equal adjacent letters. The
//! abelianization is `(Z/2)³`; the subgroup pulled back from the diagonal
//! `{000, 111}` has index 4.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::fpgroup::{GroupHom, Presentation, SymmetricGroup, TargetGroup, Word};
use crate::perm::Perm;

/// Largest bound accepted by [`torsion_scan`].
pub const MAX_SCAN_LENGTH: usize = 15;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct FpWord {
    letters: Vec<u8>,
}

impl FpWord {
    pub fn identity() -> Self {
        FpWord::default()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &FpWord) -> FpWord {
        let mut out = self.letters.clone();
        for &l in &other.letters {
            if out.last() == Some(&l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FpWord { letters: out }
    }

    /// Every letter is an involution, so the inverse is the reversal.
    pub fn inverse(&self) -> FpWord {
        FpWord {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Strips matching first and last letters, i.e. conjugates by them.
    pub fn cyclic_reduction(&self) -> FpWord {
        let mut lo = 0;
        let mut hi = self.letters.len();
        while hi - lo >= 2 && self.letters[lo] == self.letters[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        FpWord {
            letters: self.letters[lo..hi].to_vec(),
        }
    }

    /// As a word in the signed indices of [`Presentation::free_product_z2`].
    pub fn to_word(&self) -> Word {
        self.letters.iter().map(|&l| l as i32).collect()
    }
}

impl fmt::Display for FpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            write!(f, "t{l}")?;
        }
        Ok(())
    }
}

/// Cancels adjacent equal letters until none remain.
pub fn fp_normalize(letters: &[u8]) -> Result<FpWord> {
    if let Some(&bad) = letters.iter().find(|&&l| !(1..=3).contains(&l)) {
        return Err(Error::Parse(alloc::format!("free product letter {bad} not in 1..=3")));
    }
    Ok(FpWord::identity().mul(&FpWord {
        letters: letters.to_vec(),
    }))
}

/// Image in `(Z/2)³`: parity of each letter.
pub fn fp_ab(w: &FpWord) -> [u8; 3] {
    let mut v = [0u8; 3];
    for &l in &w.letters {
        v[l as usize - 1] ^= 1;
    }
    v
}

/// Membership in the preimage of the diagonal `{(0,0,0), (1,1,1)}`.
pub fn is_in_pi04(w: &FpWord) -> bool {
    let v = fp_ab(w);
    v == [0, 0, 0] || v == [1, 1, 1]
}

/// The four words used as generators of the diagonal preimage.
pub fn pi04_subgroup_words() -> Vec<Word> {
    alloc::vec![
        alloc::vec![1, 2, 3],
        alloc::vec![2, 3, 1],
        alloc::vec![3, 1, 2],
        alloc::vec![1, 3, 2],
    ]
}

/// `t₁, t₂, t₃ ↦ (12)(34), (13)(24), (14)(23)`: the quotient by the
/// diagonal, realized as the regular action of the Klein four group.
pub fn klein_quotient() -> GroupHom<SymmetricGroup> {
    let imgs = ["(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"]
        .iter()
        .map(|c| Perm::parse_cycles(c, 4).expect("valid cycles"))
        .collect();
    GroupHom::new(
        Presentation::free_product_z2(3),
        SymmetricGroup { degree: 4 },
        imgs,
    )
    .expect("three images")
}

/// The free product as a homomorphism target; reduced words are canonical.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeProductZ2;

impl TargetGroup for FreeProductZ2 {
    type Elem = FpWord;

    fn identity(&self) -> FpWord {
        FpWord::identity()
    }

    fn multiply(&self, a: &FpWord, b: &FpWord) -> FpWord {
        a.mul(b)
    }

    fn inverse(&self, a: &FpWord) -> FpWord {
        a.inverse()
    }

    fn is_identity(&self, a: &FpWord) -> Result<bool> {
        Ok(a.is_empty())
    }
}

/// All reduced words of length at most `maxlen`, shortest first.
pub fn reduced_words(maxlen: usize) -> Vec<FpWord> {
    let mut out = alloc::vec![FpWord::identity()];
    let mut layer = alloc::vec![FpWord::identity()];
    for _ in 0..maxlen {
        let mut next = Vec::with_capacity(layer.len() * 3);
        for w in &layer {
            for l in 1..=3u8 {
                if w.letters.last() != Some(&l) {
                    let mut letters = w.letters.clone();
                    letters.push(l);
                    next.push(FpWord { letters });
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[derive(Clone, Debug)]
pub struct TorsionScan {
    pub maxlen: usize,
    pub words_scanned: usize,
    pub involutions: Vec<FpWord>,
    /// Cyclic-reduction letters observed over all involutions.
    pub labels: BTreeSet<u8>,
    /// Involutions whose cyclic reduction is not a single letter.
    pub anomalies: Vec<FpWord>,
    /// Every involution has odd length and reads the same reversed.
    pub all_odd_palindromes: bool,
}

impl TorsionScan {
    pub fn class_count(&self) -> usize {
        self.labels.len()
    }
}

/// Class label of an involution: the single letter its cyclic reduction leaves.
pub fn involution_label(w: &FpWord) -> Option<u8> {
    let c = w.cyclic_reduction();
    (c.len() == 1).then(|| c.letters[0])
}

pub fn is_involution(w: &FpWord) -> bool {
    !w.is_empty() && w.mul(w).is_empty()
}

/// Finds every nontrivial `w` of length `≤ maxlen` with `w² = 1` and records
/// the letter its cyclic reduction leaves.
pub fn torsion_scan(maxlen: usize) -> Result<TorsionScan> {
    if maxlen > MAX_SCAN_LENGTH {
        return Err(Error::Precondition(alloc::format!(
            "scan length {maxlen} exceeds {MAX_SCAN_LENGTH}"
        )));
    }
    let words = reduced_words(maxlen);
    let mut scan = TorsionScan {
        maxlen,
        words_scanned: words.len(),
        involutions: Vec::new(),
        labels: BTreeSet::new(),
        anomalies: Vec::new(),
        all_odd_palindromes: true,
    };
    for w in words {
        if !is_involution(&w) {
            continue;
        }
        match involution_label(&w) {
            Some(l) => {
                scan.labels.insert(l);
            }
            None => scan.anomalies.push(w.clone()),
        }
        if w.len() % 2 == 0 || w.inverse() != w {
            scan.all_odd_palindromes = false;
        }
        scan.involutions.push(w);
    }
    Ok(scan)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[u8]) -> FpWord {
        fp_normalize(s).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert!(w(&[1, 1]).is_empty());
        assert!(w(&[1, 2, 2, 1]).is_empty());
        assert_eq!(w(&[1, 2, 1]).letters(), &[1, 2, 1]);
        assert!(fp_normalize(&[1, 4]).is_err());
        assert!(fp_normalize(&[0]).is_err());
    }

    #[test]
    fn abelian_images() {
        assert_eq!(fp_ab(&w(&[1, 2])), [1, 1, 0]);
        assert_eq!(fp_ab(&FpWord::identity()), [0, 0, 0]);
        assert_eq!(fp_ab(&w(&[1, 2, 3])), [1, 1, 1]);
        assert!(is_in_pi04(&w(&[1, 2, 3])));
        assert!(!is_in_pi04(&w(&[1, 2])));
        assert!(is_in_pi04(&FpWord::identity()));
    }

    #[test]
    fn involution_examples() {
        let x = w(&[1, 2, 1]);
        assert!(is_involution(&x));
        assert_eq!(involution_label(&x), Some(2));
        let y = w(&[1, 2]);
        // bounded power check: (t1 t2)^2 stays reduced of length 4
        assert_eq!(y.mul(&y).len(), 4);
        assert!(!is_involution(&y));
        assert!(!is_involution(&FpWord::identity()));
    }

    #[test]
    fn scan_counts() {
        let s = torsion_scan(3).unwrap();
        // 1 + 3 + 6 + 12 words
        assert_eq!(s.words_scanned, 22);
        // t1,t2,t3 and the six t_a t_b t_a
        assert_eq!(s.involutions.len(), 9);
        assert_eq!(s.class_count(), 3);
        assert!(s.anomalies.is_empty());
        assert!(torsion_scan(16).is_err());
    }

    #[test]
    fn klein_quotient_is_well_defined() {
        let mut q = klein_quotient();
        assert!(q.verify().unwrap());
        for sw in pi04_subgroup_words() {
            assert!(q.kernel_contains(&sw));
        }
    }
}
