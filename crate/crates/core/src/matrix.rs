//! Small dense matrices over exact rationals.
//!
//! Rows and columns are addressed 1-based, like vertices.

use std::fmt;
use std::ops::{Mul, Sub};

use num_traits::{ToPrimitive, Zero};

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    /// Builds a matrix from a function of the 1-based position.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 1..=rows {
            for c in 1..=cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        Self::from_fn(values.len(), values.len(), |r, c| {
            if r == c {
                values[r - 1].clone()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn offset(&self, row: usize, col: usize) -> usize {
        assert!(
            (1..=self.rows).contains(&row) && (1..=self.cols).contains(&col),
            "position ({row}, {col}) outside a {}x{} matrix",
            self.rows,
            self.cols
        );
        (row - 1) * self.cols + (col - 1)
    }

    /// Entry at 1-based `(row, col)`. Panics when out of bounds.
    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.data[self.offset(row, col)]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        let at = self.offset(row, col);
        self.data[at] = value;
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn row_sum(&self, row: usize) -> Rational {
        (1..=self.cols).map(|c| self.get(row, c)).sum()
    }

    pub fn col_sum(&self, col: usize) -> Rational {
        (1..=self.rows).map(|r| self.get(r, col)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (1..=self.rows)
                .all(|r| (r + 1..=self.cols).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Row-major copy as floats.
    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (1..=self.rows)
            .map(|r| {
                (1..=self.cols)
                    .map(|c| self.get(r, c).to_f64().unwrap_or(f64::NAN))
                    .collect()
            })
            .collect()
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            (1..=self.cols)
                .map(|k| self.get(r, k) * rhs.get(k, c))
                .sum()
        })
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - rhs.get(r, c))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.rows {
            let row: Vec<String> = (1..=self.cols)
                .map(|c| self.get(r, c).to_string())
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn product_and_transpose() {
        let a = Matrix::from_fn(2, 3, |r, c| q((r * 10 + c) as i64));
        let at = a.transpose();
        assert_eq!(at.rows(), 3);
        assert_eq!(at.get(3, 2), &q(23));
        let g = &a * &at;
        assert!(g.is_symmetric());
        assert_eq!(g.get(1, 1), &q(11 * 11 + 12 * 12 + 13 * 13));
    }

    #[test]
    fn sums() {
        let a = Matrix::from_fn(2, 2, |r, c| q((r + c) as i64));
        assert_eq!(a.row_sum(1), q(5));
        assert_eq!(a.col_sum(2), q(7));
        assert!((&a - &a).is_zero());
    }

    #[test]
    #[should_panic]
    fn zero_based_access_panics() {
        Matrix::zeros(1, 1).get(0, 0);
    }
}
