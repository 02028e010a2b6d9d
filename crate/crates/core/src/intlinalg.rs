//! Arbitrary-precision integer matrices: Smith normal form, cokernels, kernels.
//!
//! Orientation is fixed: a matrix with `rows × cols` is the map `Z^cols → Z^rows`
//! whose columns are the images of the standard generators. A presentation's
//! relator exponent vectors are therefore stored as columns.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: alloc::vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = IntMatrix::zeros(k, k);
        for i in 0..k {
            m.data[i * k + i] = BigInt::one();
        }
        m
    }

    /// Builds from rows. `cols` is needed so that a matrix with no rows still
    /// has a width.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Result<Self> {
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DegreeMismatch {
                    left: cols,
                    right: r.len(),
                });
            }
            for (j, &v) in r.iter().enumerate() {
                m.data[i * cols + j] = BigInt::from(v);
            }
        }
        Ok(m)
    }

    /// Builds from column vectors of length `rows`.
    pub fn from_columns(columns: &[Vec<i64>], rows: usize) -> Result<Self> {
        let mut m = IntMatrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DegreeMismatch {
                    left: rows,
                    right: c.len(),
                });
            }
            for (i, &v) in c.iter().enumerate() {
                m.data[i * m.cols + j] = BigInt::from(v);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, x.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &x[j]).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Diagonal with nonnegative entries forming a divisibility chain, zeros last.
    pub fn is_smith_diagonal(&self) -> bool {
        let mut prev: Option<&BigInt> = None;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if i != j && !v.is_zero() {
                    return false;
                }
            }
        }
        for k in 0..self.rows.min(self.cols) {
            let d = self.get(k, k);
            if d.is_negative() {
                return false;
            }
            if let Some(p) = prev {
                if p.is_zero() {
                    if !d.is_zero() {
                        return false;
                    }
                } else if !(d % p).is_zero() {
                    return false;
                }
            }
            prev = Some(d);
        }
        true
    }

    /// Integer determinant by cofactor-free Bareiss elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a.get(k, k).is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !a.get(r, k).is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, r);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    // row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = q * &self.data[src * self.cols + j];
            self.data[dst * self.cols + j] += v;
        }
    }

    // col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = q * &self.data[i * self.cols + src];
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -core::mem::take(&mut self.data[r * self.cols + j]);
            self.data[r * self.cols + j] = v;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// `D = U·A·V` with `U`, `V` unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        (0..self.d.rows.min(self.d.cols))
            .take_while(|&k| !self.d.get(k, k).is_zero())
            .count()
    }

    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank()).map(|k| self.d.get(k, k).clone()).collect()
    }
}

/// Smith normal form; `U` and `V` accumulate the elementary operations applied.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (r, c) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);

    for t in 0..r.min(c) {
        loop {
            // smallest nonzero entry of the trailing block
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    let x = d.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    if pivot.is_none_or(|(pi, pj)| x.abs() < d.get(pi, pj).abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return SmithForm { d, u, v };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = d.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..r {
                let q = d.get(i, t) / &p;
                if !q.is_zero() {
                    let nq = -q;
                    d.add_row(i, t, &nq);
                    u.add_row(i, t, &nq);
                }
                if !d.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..c {
                let q = d.get(t, j) / &p;
                if !q.is_zero() {
                    let nq = -q;
                    d.add_col(j, t, &nq);
                    v.add_col(j, t, &nq);
                }
                if !d.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility of the trailing block by the pivot
            let bad_row = (t + 1..r).find(|&i| (t + 1..c).any(|j| !(d.get(i, j) % &p).is_zero()));
            if let Some(i) = bad_row {
                let one = BigInt::one();
                d.add_row(t, i, &one);
                u.add_row(t, i, &one);
                continue;
            }
            break;
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { d, u, v }
}

/// A finitely generated abelian group `Z^r ⊕ Z/d₁ ⊕ ⋯ ⊕ Z/d_k`, `d₁ | d₂ | ⋯`, `d_i ≥ 2`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct AbelianDescriptor {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianDescriptor {
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Result<Self> {
        for w in torsion.windows(2) {
            if !(&w[1] % &w[0]).is_zero() {
                return Err(Error::Precondition(alloc::format!(
                    "invariant factors {} and {} do not divide",
                    w[0],
                    w[1]
                )));
            }
        }
        if let Some(t) = torsion.iter().find(|t| **t < BigInt::from(2)) {
            return Err(Error::Precondition(alloc::format!(
                "invariant factor {t} is below 2"
            )));
        }
        Ok(AbelianDescriptor { free_rank, torsion })
    }

    /// Convenience constructor for small invariant factors.
    pub fn from_parts(free_rank: usize, torsion: &[u64]) -> Result<Self> {
        AbelianDescriptor::new(free_rank, torsion.iter().map(|&t| BigInt::from(t)).collect())
    }

    pub fn trivial() -> Self {
        AbelianDescriptor {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn torsion_u64(&self) -> Option<Vec<u64>> {
        self.torsion.iter().map(ToPrimitive::to_u64).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut first = true;
        if self.free_rank > 0 {
            first = false;
            if self.free_rank == 1 {
                f.write_str("Z")?;
            } else {
                write!(f, "Z^{}", self.free_rank)?;
            }
        }
        for t in &self.torsion {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "Z/{t}")?;
        }
        Ok(())
    }
}

/// `Z^rows / (column span of A)`.
pub fn cokernel(a: &IntMatrix) -> AbelianDescriptor {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    let torsion = snf
        .invariant_factors()
        .into_iter()
        .filter(|d| !d.is_one())
        .collect();
    AbelianDescriptor {
        free_rank: a.rows - rank,
        torsion,
    }
}

/// A `Z`-basis of `{x ∈ Z^cols : A·x = 0}`.
pub fn kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    (snf.rank()..a.cols).map(|j| snf.v.column(j)).collect()
}

pub fn rank(a: &IntMatrix) -> usize {
    smith_normal_form(a).rank()
}
