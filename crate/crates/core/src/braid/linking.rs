use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

use super::word::BraidWord;
use crate::error::{Error, Result};

/// Integer data `e_ij`, `1 ≤ i < j ≤ n`: coordinates of a pure braid in `P_n^ab`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StrandPairMatrix {
    n: usize,
    // row-major upper triangle
    entries: Vec<i64>,
}

impl StrandPairMatrix {
    pub fn zero(n: usize) -> Self {
        StrandPairMatrix {
            n,
            entries: alloc::vec![0; n * (n - 1) / 2],
        }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    fn index(&self, i: usize, j: usize) -> usize {
        assert!(1 <= i && i < j && j <= self.n, "pair ({i}, {j}) out of range");
        // pairs (1,2),(1,3),…,(1,n),(2,3),…
        (i - 1) * (2 * self.n - i) / 2 + (j - i - 1)
    }

    /// `e_ij`; the pair is unordered.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.entries[self.index(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        let k = self.index(i, j);
        self.entries[k] = v;
    }

    /// Entries in the order `(1,2), (1,3), …, (1,n), (2,3), …, (n−1,n)`.
    pub fn as_vector(&self) -> &[i64] {
        &self.entries
    }

    pub fn pairs(n: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..n {
            for j in i + 1..=n {
                out.push((i, j));
            }
        }
        out
    }
}

impl Add for &StrandPairMatrix {
    type Output = StrandPairMatrix;

    fn add(self, rhs: &StrandPairMatrix) -> StrandPairMatrix {
        assert_eq!(self.n, rhs.n);
        StrandPairMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl fmt::Display for StrandPairMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j) in StrandPairMatrix::pairs(self.n) {
            let v = self.get(i, j);
            if v == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{v}·x{i}{j}")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Half the signed crossing count between each pair of strands of a pure word.
///
/// `σ_k^{±1}` contributes `±1` to the pair of strands currently at positions
/// `k, k+1`; strands are labelled by their starting positions.
pub fn linking_numbers(w: &BraidWord) -> Result<StrandPairMatrix> {
    if !w.is_pure() {
        return Err(Error::NotPure);
    }
    let n = w.strands();
    let mut at: Vec<usize> = (1..=n).collect();
    let mut twice = StrandPairMatrix::zero(n);
    for &k in w.letters() {
        let p = k.unsigned_abs() as usize - 1;
        let (a, b) = (at[p], at[p + 1]);
        twice.set(a, b, twice.get(a, b) + k.signum() as i64);
        at.swap(p, p + 1);
    }
    let mut out = StrandPairMatrix::zero(n);
    for (i, j) in StrandPairMatrix::pairs(n) {
        let v = twice.get(i, j);
        debug_assert!(v % 2 == 0, "pure braids cross each pair an even number of times");
        out.set(i, j, v / 2);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{pure_braid_generator, zeta};

    #[test]
    fn rejects_non_pure() {
        assert_eq!(
            linking_numbers(&BraidWord::parse(3, "1").unwrap()),
            Err(Error::NotPure)
        );
    }

    #[test]
    fn indexing() {
        let mut m = StrandPairMatrix::zero(4);
        let pairs = StrandPairMatrix::pairs(4);
        assert_eq!(pairs.len(), 6);
        for (k, &(i, j)) in pairs.iter().enumerate() {
            m.set(j, i, k as i64);
        }
        assert_eq!(m.as_vector(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn generators_are_indicators() {
        for n in 2..7 {
            for (k, l) in StrandPairMatrix::pairs(n) {
                let m = linking_numbers(&pure_braid_generator(n, k, l).unwrap()).unwrap();
                for (i, j) in StrandPairMatrix::pairs(n) {
                    assert_eq!(m.get(i, j), i64::from((i, j) == (k, l)));
                }
            }
        }
    }

    #[test]
    fn full_twist_links_every_pair_once() {
        let m = linking_numbers(&zeta(4, 4).unwrap()).unwrap();
        assert!(m.as_vector().iter().all(|&v| v == 1));
        assert_eq!(alloc::format!("{}", StrandPairMatrix::zero(3)), "0");
    }
}
