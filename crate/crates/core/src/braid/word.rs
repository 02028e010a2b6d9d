use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// A free word in `σ₁^{±1}, …, σ_{n−1}^{±1}`; letter `k` stands for `σ_{|k|}^{sign k}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        check_strands(strands)?;
        if let Some(&bad) = letters
            .iter()
            .find(|&&k| k == 0 || k.unsigned_abs() as usize >= strands)
        {
            return Err(Error::BadLetter {
                letter: bad,
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses whitespace-separated signed integers, e.g. `"1 2 -3"`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::Parse(alloc::format!("bad braid letter {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }

    pub fn identity(strands: usize) -> Result<Self> {
        BraidWord::new(strands, Vec::new())
    }

    /// The single letter `σ_i^{±1}`.
    pub fn generator(strands: usize, letter: i32) -> Result<Self> {
        BraidWord::new(strands, alloc::vec![letter])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Formal inverse: reversed word with negated letters.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&k| -k).collect(),
        }
    }

    /// Concatenation. Panics if strand counts differ.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands, "strand mismatch");
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn push(&mut self, other: &BraidWord) {
        assert_eq!(self.strands, other.strands, "strand mismatch");
        self.letters.extend_from_slice(&other.letters);
    }

    /// `self^k` as a free word; negative `k` repeats the inverse.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn permutation(&self) -> Perm {
        // position -> strand currently there
        let mut at: Vec<u8> = (0..self.strands as u8).collect();
        for &k in &self.letters {
            let i = k.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut img = alloc::vec![0u8; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            img[strand as usize] = pos as u8;
        }
        Perm::from_zero_based(img)
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&k| k.signum() as i64).sum()
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }
}

impl Mul for &BraidWord {
    type Output = BraidWord;

    fn mul(self, rhs: &BraidWord) -> BraidWord {
        self.concat(rhs)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

pub(crate) fn check_strands(strands: usize) -> Result<()> {
    if !(2..=u8::MAX as usize).contains(&strands) {
        return Err(Error::BadStrandCount(strands));
    }
    Ok(())
}

/// `ζ_i = (σ₁⋯σ_{i−1})^i` inside `B_n`; empty for `i = 1`. `ζ_n` is the full twist.
pub fn zeta(n: usize, i: usize) -> Result<BraidWord> {
    check_strands(n)?;
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange(alloc::format!(
            "zeta index {i} not in 1..={n}"
        )));
    }
    let block: Vec<i32> = (1..i as i32).collect();
    let letters = block.repeat(i);
    Ok(BraidWord { strands: n, letters })
}

/// `x_ij = σ_{j−1}⋯σ_{i+1} σ_i² σ_{i+1}⁻¹⋯σ_{j−1}⁻¹`.
pub fn pure_braid_generator(n: usize, i: usize, j: usize) -> Result<BraidWord> {
    check_strands(n)?;
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::IndexOutOfRange(alloc::format!(
            "pure braid generator needs 1 <= i < j <= n, got ({i}, {j}) with n = {n}"
        )));
    }
    let mut letters: Vec<i32> = ((i + 1) as i32..j as i32).rev().collect();
    letters.push(i as i32);
    letters.push(i as i32);
    letters.extend(((i + 1) as i32..j as i32).map(|k| -k));
    Ok(BraidWord { strands: n, letters })
}

/// Free substitution `σ_i ↦ images[i−1]`, `σ_i⁻¹ ↦ images[i−1]⁻¹`. No reduction.
pub fn substitute(w: &BraidWord, images: &[BraidWord]) -> Result<BraidWord> {
    if images.len() != w.strands() - 1 {
        return Err(Error::ImageCount {
            expected: w.strands() - 1,
            got: images.len(),
        });
    }
    let target = images[0].strands();
    if let Some(bad) = images.iter().find(|b| b.strands() != target) {
        return Err(Error::StrandMismatch {
            left: target,
            right: bad.strands(),
        });
    }
    let inverses: Vec<BraidWord> = images.iter().map(BraidWord::inverse).collect();
    let mut letters = Vec::new();
    for &k in w.letters() {
        let idx = k.unsigned_abs() as usize - 1;
        let img = if k > 0 { &images[idx] } else { &inverses[idx] };
        letters.extend_from_slice(img.letters());
    }
    Ok(BraidWord {
        strands: target,
        letters,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn construction_errors() {
        assert_eq!(
            BraidWord::new(3, vec![1, 3]),
            Err(Error::BadLetter {
                letter: 3,
                strands: 3
            })
        );
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert_eq!(BraidWord::new(1, vec![]), Err(Error::BadStrandCount(1)));
        assert!(BraidWord::parse(4, "1 x").is_err());
        assert_eq!(BraidWord::parse(4, "1 2 -3").unwrap().letters(), &[1, 2, -3]);
    }

    #[test]
    fn zeta_words() {
        assert!(zeta(5, 1).unwrap().is_empty());
        assert_eq!(zeta(3, 3).unwrap().letters(), &[1, 2, 1, 2, 1, 2]);
        assert_eq!(zeta(4, 2).unwrap().letters(), &[1, 1]);
        assert!(zeta(4, 0).is_err());
        assert!(zeta(4, 5).is_err());
    }

    #[test]
    fn pure_generators() {
        assert_eq!(pure_braid_generator(3, 1, 2).unwrap().letters(), &[1, 1]);
        assert_eq!(pure_braid_generator(3, 1, 3).unwrap().letters(), &[2, 1, 1, -2]);
        assert_eq!(
            pure_braid_generator(5, 2, 5).unwrap().letters(),
            &[4, 3, 2, 2, -3, -4]
        );
        assert!(pure_braid_generator(4, 2, 2).is_err());
        assert!(pure_braid_generator(4, 0, 2).is_err());
        assert!(pure_braid_generator(4, 2, 5).is_err());
        for n in 2..7 {
            for j in 2..=n {
                for i in 1..j {
                    assert!(pure_braid_generator(n, i, j).unwrap().is_pure());
                }
            }
        }
    }

    #[test]
    fn permutation_image() {
        let s2 = BraidWord::generator(4, 2).unwrap();
        assert_eq!(s2.permutation(), Perm::parse_cycles("(2 3)", 4).unwrap());
        assert!(zeta(4, 4).unwrap().permutation().is_identity());
        // σ1σ2 sends strand 1 to position 3
        let w = BraidWord::parse(3, "1 2").unwrap();
        assert_eq!(w.permutation().apply(1), 3);
        assert_eq!(
            w.permutation(),
            BraidWord::parse(3, "1")
                .unwrap()
                .permutation()
                .then(&BraidWord::parse(3, "2").unwrap().permutation())
        );
    }

    #[test]
    fn exponent_sums() {
        for n in 2..8 {
            assert_eq!(zeta(n, n).unwrap().exponent_sum(), (n * (n - 1)) as i64);
        }
        assert_eq!(BraidWord::parse(3, "1 -1").unwrap().exponent_sum(), 0);
        assert_eq!(pure_braid_generator(5, 1, 4).unwrap().exponent_sum(), 2);
    }

    #[test]
    fn substitution() {
        let beta: Vec<BraidWord> = ["1", "2", "1"]
            .iter()
            .map(|s| BraidWord::parse(3, s).unwrap())
            .collect();
        let s3 = BraidWord::generator(4, 3).unwrap();
        assert_eq!(substitute(&s3, &beta).unwrap().letters(), &[1]);
        let inv = BraidWord::generator(4, -3).unwrap();
        assert_eq!(substitute(&inv, &beta).unwrap().letters(), &[-1]);

        let ident: Vec<BraidWord> = (1..4).map(|i| BraidWord::generator(4, i).unwrap()).collect();
        let w = BraidWord::parse(4, "1 -2 3 3 -1").unwrap();
        assert_eq!(substitute(&w, &ident).unwrap(), w);

        assert!(matches!(
            substitute(&w, &beta[..2]),
            Err(Error::ImageCount { .. })
        ));
        let mixed = vec![
            BraidWord::generator(3, 1).unwrap(),
            BraidWord::generator(4, 1).unwrap(),
            BraidWord::generator(3, 1).unwrap(),
        ];
        assert!(matches!(
            substitute(&w, &mixed),
            Err(Error::StrandMismatch { .. })
        ));
    }

    #[test]
    fn pow_and_inverse() {
        let w = BraidWord::parse(3, "1 -2").unwrap();
        assert_eq!(w.pow(2).letters(), &[1, -2, 1, -2]);
        assert_eq!(w.pow(-1).letters(), &[2, -1]);
        assert!(w.pow(0).is_empty());
        assert_eq!(alloc::format!("{w}"), "1 -2");
    }
}
