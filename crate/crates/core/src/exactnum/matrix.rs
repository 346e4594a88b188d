use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::elim;
use super::{clear_denominators, Rational};
use crate::Error;

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from row vectors. An empty list gives a `0 x cols`
    /// matrix, so callers with no rows must pass the width explicitly.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let count = rows.len();
        let mut entries = Vec::with_capacity(count * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Self::new(count, cols, entries)
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self, Error> {
        let t = Self::from_rows(rows, columns.to_vec())?;
        Ok(t.transpose())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| super::rat(v)).collect())
            .collect();
        Self::from_rows(cols, rows).expect("ragged integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows).map(|i| super::dot(self.row(i), v)).collect())
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &Self) -> Result<Self, Error> {
        if self.cols != below.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: below.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(below.entries.iter().cloned());
        Self::new(self.rows + below.rows, self.cols, entries)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// True for `c * I` with `c != 0`.
    pub fn is_nonzero_scalar(&self) -> bool {
        if self.rows != self.cols || self.rows == 0 {
            return false;
        }
        let c = self.get(0, 0);
        if c.is_zero() {
            return false;
        }
        (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e == c
                } else {
                    e.is_zero()
                }
            })
        })
    }

    /// True iff `self = c * other` for some nonzero rational `c`.
    pub fn proportional_to(&self, other: &Self) -> bool {
        if self.rows != other.rows || self.cols != other.cols {
            return false;
        }
        let Some(k) = self.entries.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        if other.entries[k].is_zero() {
            return false;
        }
        let c = &self.entries[k] / &other.entries[k];
        self.entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| *a == &c * b)
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| clear_denominators(self.row(i)))
            .collect()
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        elim::forward(self.integer_rows(), self.cols).pivots.len()
    }

    /// Reduced row echelon form together with its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let red = elim::gauss_jordan(self.integer_rows(), self.cols);
        let mut out = Self::zeros(self.rows, self.cols);
        for (i, row) in red.rows.iter().enumerate().take(red.pivots.len()) {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    out.set(i, j, Rational::new(v.clone(), red.scale.clone()));
                }
            }
        }
        (out, red.pivots)
    }

    /// Basis of the right null space, read off the reduced row echelon form:
    /// one vector per free column `f`, with a 1 in position `f`.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let red = elim::gauss_jordan(self.integer_rows(), self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &red.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &p) in red.rows.iter().zip(&red.pivots) {
                    if !row[f].is_zero() {
                        v[p] = Rational::new(-row[f].clone(), red.scale.clone());
                    }
                }
                v
            })
            .collect()
    }

    pub fn determinant(&self) -> Result<Rational, Error> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        if self.rows == 0 {
            return Ok(Rational::one());
        }
        let denominators = (0..self.rows).fold(Rational::one(), |acc, i| {
            let lcm = self.row(i).iter().fold(BigInt::one(), |l, v| {
                num_integer::Integer::lcm(&l, v.denom())
            });
            acc * Rational::from_integer(lcm)
        });
        let red = elim::forward(self.integer_rows(), self.cols);
        if red.pivots.len() < self.rows {
            return Ok(Rational::zero());
        }
        let det = Rational::from_integer(red.scale) / denominators;
        Ok(if red.odd_swaps { -det } else { det })
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, red.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
