//! Small dense matrices over a scalar field.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{parse_scalar, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S> {
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> Matrix<S> {
    /// Builds a matrix from rows of equal length.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::BadShape {
                expected: cols,
                rows: rows.len(),
                cols: bad.len(),
            });
        }
        Ok(Matrix { rows })
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            rows: (0..n)
                .map(|i| (0..n).map(|j| if i == j { S::one() } else { S::zero() }).collect())
                .collect(),
        }
    }

    pub fn diagonal(values: &[S]) -> Self {
        let mut m = Self::identity(values.len());
        for (i, v) in values.iter().enumerate() {
            m.rows[i][i] = v.clone();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.rows[i][j]
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<S>> {
        &mut self.rows
    }

    pub fn transpose(&self) -> Self {
        let (n, m) = (self.nrows(), self.ncols());
        Matrix {
            rows: (0..m)
                .map(|j| (0..n).map(|i| self.rows[i][j].clone()).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ncols() != other.nrows() {
            return Err(Error::BadShape {
                expected: self.ncols(),
                rows: other.nrows(),
                cols: other.ncols(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                (0..other.ncols())
                    .map(|j| {
                        row.iter()
                            .zip(&other.rows)
                            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b[j].clone())
                    })
                    .collect()
            })
            .collect();
        Ok(Matrix { rows })
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    pub(crate) fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        let n = self.nrows();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !self.rows[i][j].close_to(&self.rows[j][i]))
    }

    /// True when every off-diagonal entry is zero.
    pub fn is_diagonal(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, v)| i == j || v.close_to(&S::zero()))
        })
    }

    pub fn diag(&self) -> Vec<S> {
        (0..self.nrows().min(self.ncols()))
            .map(|i| self.rows[i][i].clone())
            .collect()
    }

    /// Determinant by elimination with row swaps.
    pub fn determinant(&self) -> Result<S> {
        if !self.is_square() {
            return Err(Error::BadShape {
                expected: self.nrows(),
                rows: self.nrows(),
                cols: self.ncols(),
            });
        }
        let mut a = self.rows.clone();
        let n = a.len();
        let mut det = S::one();
        for col in 0..n {
            let Some(pivot) = pivot_row(&a, col, col) else {
                return Ok(S::zero());
            };
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            let p = a[col][col].clone();
            det = det * p.clone();
            for r in col + 1..n {
                let factor = a[r][col].clone() / p.clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = a[col][c].clone();
                    a[r][c] = a[r][c].clone() - factor.clone() * v;
                }
            }
        }
        Ok(det)
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::BadShape {
                expected: self.nrows(),
                rows: self.nrows(),
                cols: self.ncols(),
            });
        }
        let n = self.nrows();
        let mut a = self.rows.clone();
        let mut inv = Self::identity(n).rows;
        for col in 0..n {
            let pivot = pivot_row(&a, col, col).ok_or(Error::Singular)?;
            a.swap(pivot, col);
            inv.swap(pivot, col);
            let p = a[col][col].clone();
            for c in 0..n {
                a[col][c] = a[col][c].clone() / p.clone();
                inv[col][c] = inv[col][c].clone() / p.clone();
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..n {
                    let (x, y) = (a[col][c].clone(), inv[col][c].clone());
                    a[r][c] = a[r][c].clone() - factor.clone() * x;
                    inv[r][c] = inv[r][c].clone() - factor.clone() * y;
                }
            }
        }
        Ok(Matrix { rows: inv })
    }

    /// Reads the Gram file layout: `n`, then `n` rows of `n` literals
    /// (`a`, `a/b` or decimals), whitespace separated.
    pub fn parse_square(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Format("missing dimension line".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::Format(format!("bad dimension line `{header}`")))?;
        let rows = lines
            .map(|line| {
                line.split_whitespace()
                    .map(parse_scalar::<S>)
                    .collect::<Result<Vec<S>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::BadShape {
                expected: n,
                rows: rows.len(),
                cols: rows.iter().map(Vec::len).find(|&l| l != n).unwrap_or(n),
            });
        }
        Matrix::from_rows(rows)
    }
}

/// Prefers the largest magnitude for floats; any nonzero entry for rationals.
fn pivot_row<S: Scalar>(a: &[Vec<S>], col: usize, from: usize) -> Option<usize> {
    let candidates = (from..a.len()).filter(|&r| !a[r][col].is_zero());
    if S::is_exact() {
        candidates.into_iter().next()
    } else {
        candidates.max_by(|&x, &y| {
            a[x][col]
                .abs()
                .partial_cmp(&a[y][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
    }
}

impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
