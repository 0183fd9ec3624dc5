//! Dense matrices over the rationals with exact elimination.
//!
//! Rank, kernel, determinant and inverse are all computed by exact
//! Gauss-Jordan elimination, so subspace membership and singularity tests
//! are decisions, not estimates.

use crate::rat::Rat;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    // row-major
    entries: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        RatMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        assert!(!rows.is_empty(), "from_rows needs at least one row");
        let nrows = rows.len();
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let entries = rows.into_iter().flatten().collect();
        RatMatrix { rows: nrows, cols, entries }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<Rat>]) -> Self {
        assert!(!cols.is_empty(), "from_cols needs at least one column");
        let rows = cols[0].len();
        assert!(cols.iter().all(|c| c.len() == rows), "ragged columns");
        Self::from_fn(rows, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.entries[r * self.cols + c]
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<Rat> {
        (0..self.cols).map(|c| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        RatMatrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = Rat::zero();
            for k in 0..self.cols {
                if !self.at(r, k).is_zero() && !other.at(k, c).is_zero() {
                    acc += self.at(r, k) * other.at(k, c);
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for c in 0..self.cols {
                    if !self.at(r, c).is_zero() && !v[c].is_zero() {
                        acc += self.at(r, c) * &v[c];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + other.at(r, c))
    }

    pub fn scale(&self, s: &Rat) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |r, c| self.at(r, c) * s)
    }

    pub fn trace(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        let mut t = Rat::zero();
        for i in 0..self.rows {
            t += self.at(i, i);
        }
        t
    }

    /// Reduced row echelon form; returns the reduced matrix and the pivot
    /// column indices.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(sel) = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, sel);
            let inv = m.at(pivot_row, col).clone();
            for c in col..m.cols {
                let v = m.at(pivot_row, c).clone() / &inv;
                *m.at_mut(pivot_row, c) = v;
            }
            for r in 0..m.rows {
                if r != pivot_row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for c in col..m.cols {
                        let v = m.at(r, c) - &(m.at(pivot_row, c) * &factor);
                        *m.at_mut(r, c) = v;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space {x : Mx = 0}, as columns.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut x = vec![Rat::zero(); self.cols];
            x[free] = Rat::one();
            for (col, p) in pivot_set.iter().enumerate() {
                if let Some(row) = p {
                    x[col] = -r.at(*row, free).clone();
                }
            }
            basis.push(x);
        }
        basis
    }

    pub fn det(&self) -> Result<Rat, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Rat::one();
        for col in 0..n {
            let Some(sel) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return Ok(Rat::zero());
            };
            if sel != col {
                m.swap_rows(col, sel);
                det = -det;
            }
            let pivot = m.at(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col) / &pivot;
                for c in col..n {
                    let v = m.at(r, c) - &(m.at(col, c) * &factor);
                    *m.at_mut(r, c) = v;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<RatMatrix, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        // Augment with the identity and reduce.
        let mut aug = RatMatrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.at(r, c).clone()
            } else if c - n == r {
                Rat::one()
            } else {
                Rat::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(MatrixError::Singular);
        }
        aug = red;
        Ok(RatMatrix::from_fn(n, n, |r, c| aug.at(r, c + n).clone()))
    }

    /// Solves Mx = b exactly; `None` when inconsistent. For full-column-rank
    /// M the solution is unique.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, b.len());
        let aug = RatMatrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column: inconsistent
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = red.at(row, self.cols).clone();
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_i};

    fn m2(a: i64, b: i64, c: i64, d: i64) -> RatMatrix {
        RatMatrix::from_rows(vec![vec![rat_i(a), rat_i(b)], vec![rat_i(c), rat_i(d)]])
    }

    #[test]
    fn rank_and_kernel() {
        let m = RatMatrix::from_rows(vec![
            vec![rat_i(1), rat_i(2), rat_i(3)],
            vec![rat_i(2), rat_i(4), rat_i(6)],
        ]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|e| e.is_zero()));
        }
    }

    #[test]
    fn det_and_inverse() {
        let m = m2(1, 2, 3, 4);
        assert_eq!(m.det().unwrap(), rat_i(-2));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(2));
        assert_eq!(*inv.at(0, 0), rat_i(-2));
        assert_eq!(*inv.at(0, 1), rat_i(1));
        assert_eq!(*inv.at(1, 0), rat(3, 2));
        assert_eq!(*inv.at(1, 1), rat(-1, 2));
    }

    #[test]
    fn singular_inverse_fails() {
        let m = m2(1, 2, 2, 4);
        assert_eq!(m.det().unwrap(), rat_i(0));
        assert!(matches!(m.inverse(), Err(MatrixError::Singular)));
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = RatMatrix::from_cols(&[vec![rat_i(1), rat_i(0)], vec![rat_i(1), rat_i(1)]]);
        let x = m.solve(&[rat_i(3), rat_i(2)]).unwrap();
        assert_eq!(x, vec![rat_i(1), rat_i(2)]);
        let tall = RatMatrix::from_cols(&[vec![rat_i(1), rat_i(0), rat_i(0)]]);
        assert!(tall.solve(&[rat_i(0), rat_i(1), rat_i(0)]).is_none());
    }
}
