//! Dense matrices over the exact rings, fraction-free (Bareiss) echelon
//! forms over domains, and Gauss-Jordan inversion over fields.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{Domain, Field, FractionDomain, FractionField, Ring};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Like `from_rows`, but keeps the column count when there are no rows.
    pub fn from_rows_sized(rows: Vec<Vec<T>>, cols: usize) -> Self {
        assert!(rows.iter().all(|x| x.len() == cols), "ragged rows");
        Matrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn identity(n: usize, template: &T) -> Self {
        let mut m = Matrix::filled(n, n, template.zero_like());
        for i in 0..n {
            m[(i, i)] = template.one_like();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U: Ring>(&self, f: impl Fn(&T) -> Result<U>) -> Result<Matrix<U>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rows selected by index, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Matrix::from_rows(idx.iter().map(|&i| self.row(i).to_vec()).collect())
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let zero = self.data.first().or(other.data.first()).map(|x| x.zero_like());
        let Some(zero) = zero else {
            return Matrix { rows: self.rows, cols: other.cols, data: Vec::new() };
        };
        let mut out = Matrix::filled(self.rows, other.cols, zero);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].plus(&a.times(b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Matrix<T> {
        self.map(|x| x.times(c))
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|j| format!("{:?}", self.data[i * self.cols + j])).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Fraction-free row echelon form, computed in place.
///
/// Returns the pivot columns in order. After `k` pivots every entry below
/// the pivot rows is a `(k+1)`-minor of the input, so each division by the
/// previous pivot is exact.
pub fn bareiss_echelon<R: Domain>(m: &mut Matrix<R>) -> Result<Vec<usize>> {
    let mut pivots = Vec::new();
    let Some(first) = m.data.first() else {
        return Ok(pivots);
    };
    let mut prev = first.one_like();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        m.swap_rows(p, r);
        let pivot = m[(r, c)].clone();
        for i in r + 1..m.rows {
            let factor = m[(i, c)].clone();
            for j in c + 1..m.cols {
                let v = pivot.times(&m[(i, j)]).minus(&factor.times(&m[(r, j)]));
                m[(i, j)] = if prev.is_one() {
                    v
                } else {
                    v.div_exact(&prev)
                        .ok_or_else(|| Error::Internal("inexact fraction-free division".into()))?
                };
            }
            m[(i, c)] = pivot.zero_like();
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

pub fn rank<R: Domain>(m: &Matrix<R>) -> Result<usize> {
    let mut work = m.clone();
    Ok(bareiss_echelon(&mut work)?.len())
}

/// Determinant by fraction-free elimination.
pub fn determinant<R: Domain>(m: &Matrix<R>) -> Result<R> {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    if m.rows == 0 {
        return Err(Error::Internal("empty determinant".into()));
    }
    let mut work = m.clone();
    let mut sign_flips = 0usize;
    let mut prev = work[(0, 0)].one_like();
    let n = m.rows;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !work[(i, k)].is_zero()) else {
            return Ok(work[(0, 0)].zero_like());
        };
        if p != k {
            work.swap_rows(p, k);
            sign_flips += 1;
        }
        let pivot = work[(k, k)].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = pivot.times(&work[(i, j)]).minus(&work[(i, k)].times(&work[(k, j)]));
                work[(i, j)] = v
                    .div_exact(&prev)
                    .ok_or_else(|| Error::Internal("inexact fraction-free division".into()))?;
            }
        }
        prev = pivot;
    }
    let det = work[(n - 1, n - 1)].clone();
    Ok(if sign_flips % 2 == 1 { det.negated() } else { det })
}

/// Inverse of a square matrix over a field, or `None` if singular.
pub fn invert<K: Field>(m: &Matrix<K>) -> Option<Matrix<K>> {
    assert_eq!(m.rows, m.cols, "inverse of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return Some(m.clone());
    }
    let mut a = m.clone();
    let mut inv = Matrix::identity(n, &m[(0, 0)]);
    for c in 0..n {
        let p = (c..n).find(|&i| !a[(i, c)].is_zero())?;
        a.swap_rows(p, c);
        inv.swap_rows(p, c);
        let piv_inv = a[(c, c)].inv()?;
        for j in 0..n {
            a[(c, j)] = a[(c, j)].times(&piv_inv);
            inv[(c, j)] = inv[(c, j)].times(&piv_inv);
        }
        for i in 0..n {
            if i == c || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in 0..n {
                a[(i, j)] = a[(i, j)].minus(&f.times(&a[(c, j)]));
                inv[(i, j)] = inv[(i, j)].minus(&f.times(&inv[(c, j)]));
            }
        }
    }
    Some(inv)
}

/// Multiplies every row by the product of its entries' denominators,
/// giving a matrix over the base domain with the same row space.
pub fn clear_denominators<K: FractionField>(m: &Matrix<K>) -> Matrix<K::Base> {
    let rows = (0..m.rows)
        .map(|i| {
            let row = m.row(i);
            let mut scale = row[0].numer().one_like();
            for x in row {
                let d = x.denom();
                if !d.is_one() {
                    scale = scale.times(&d);
                }
            }
            let scale_f = scale.to_frac();
            row.iter().map(|x| x.times(&scale_f).numer()).collect()
        })
        .collect();
    Matrix::from_rows(rows)
}
