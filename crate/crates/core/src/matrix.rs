//! Dense matrices over exact rationals.
//!
//! Sizes here never exceed a dozen rows, so everything is plain Gaussian
//! elimination with exact pivots. Kernel bases come out of the reduced
//! echelon form in free-column order, which keeps every downstream
//! computation deterministic.

use std::fmt;

use crate::error::Error;
use crate::rational::Rational;

pub type Vector = Vec<Rational>;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vector]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |v| v.len());
        Matrix::from_fn(r, c, |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * s)
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| -self.get(i, j))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + &(a * b);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc += &(a * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, row * m.cols + j);
                }
            }
            let inv = m.get(row, col).recip();
            for j in col..m.cols {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for j in col..m.cols {
                        let v = m.get(r, j) - &(&factor * m.get(row, j));
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                for j in 0..n {
                    m.data.swap(p * n + j, col * n + j);
                }
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            let inv = pivot.recip();
            for r in col + 1..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col) * &inv;
                for j in col..n {
                    let v = m.get(r, j) - &(&factor * m.get(col, j));
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Matrix, Error> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::SingularMatrix);
        }
        Ok(Matrix::from_fn(n, n, |i, j| red.get(i, j + n).clone()))
    }

    /// Basis of the right kernel, one vector per free column in ascending
    /// column order.
    pub fn kernel(&self) -> Vec<Vector> {
        let (red, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_iter = pivots.iter().peekable();
        let mut pivot_rows = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            pivot_rows[c] = Some(r);
        }
        for col in 0..self.cols {
            if pivot_iter.peek() == Some(&&col) {
                pivot_iter.next();
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[col] = Rational::one();
            for (c, row) in pivot_rows.iter().enumerate() {
                if let Some(r) = row {
                    v[c] = -red.get(*r, col);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `self * x = b`, if the system is consistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vector> {
        assert_eq!(self.rows, b.len());
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = red.get(r, self.cols).clone();
        }
        Some(x)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

pub fn vec_add(a: &[Rational], b: &[Rational]) -> Vector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rational], b: &[Rational]) -> Vector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rational], s: &Rational) -> Vector {
    a.iter().map(|x| x * s).collect()
}

pub fn vec_neg(a: &[Rational]) -> Vector {
    a.iter().map(|x| -x).collect()
}

pub fn vec_is_zero(a: &[Rational]) -> bool {
    a.iter().all(Rational::is_zero)
}

pub fn zero_vec(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn basis_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn inverse_identity_and_involution() {
        let id = Matrix::identity(3);
        assert_eq!(id.inverse().unwrap(), id);
        let swap = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.inverse().unwrap(), swap);
    }

    #[test]
    fn inverse_diagonal_checked_by_multiplication() {
        // Oracle: multiply back to the identity.
        let a = Matrix::from_rows(vec![
            vec![rat(2), rat(0)],
            vec![rat(0), frac(1, 2)],
        ]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert_eq!(inv.get(0, 0), &frac(1, 2));
        assert_eq!(inv.get(1, 1), &rat(2));
    }

    #[test]
    fn singular_matrix_rejected() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert!(matches!(a.inverse(), Err(Error::SingularMatrix)));
    }

    #[test]
    fn kernel_cases() {
        let z = Matrix::zero(2, 2);
        assert_eq!(z.kernel().len(), 2);
        assert!(Matrix::identity(2).kernel().is_empty());

        let a = m(&[&[1, 1], &[1, 1]]);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        // The kernel vector must actually be annihilated and be proportional
        // to (1, -1).
        assert!(vec_is_zero(&a.mul_vec(&k[0])));
        assert_eq!(k[0][0], -&k[0][1]);
    }

    #[test]
    fn rank_cases() {
        assert_eq!(Matrix::identity(4).rank(), 4);
        assert_eq!(Matrix::zero(3, 3).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn rank_plus_nullity() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(a.rank() + a.kernel().len(), a.cols());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[0, 1]]);
        let x = a.solve(&[rat(3), rat(1)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![rat(3), rat(1)]);

        let b = m(&[&[1, 1], &[1, 1]]);
        assert!(b.solve(&[rat(0), rat(1)]).is_none());
    }

    #[test]
    fn det_matches_elimination() {
        assert_eq!(m(&[&[2, 1], &[1, 1]]).det(), rat(1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det(), rat(0));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det(), rat(-1));
    }
}
