//! Subspace tracking by reduced row echelon form.
//!
//! A [`SpanBasis`] holds a basis of a subspace of n x n matrices, stored as
//! vectors in S^(n^2) (row-major) and kept in reduced echelon form with
//! strictly increasing pivots. RREF is canonical for a fixed coordinate
//! order, so two spans are equal as subspaces iff their `SpanBasis` values
//! compare equal.

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Debug)]
struct Row<S> {
    pivot: usize,
    vec: Vec<S>,
}

#[derive(Clone, PartialEq, Debug)]
pub struct SpanBasis<S> {
    matrix_dim: usize,
    rows: Vec<Row<S>>,
}

impl<S: Scalar> SpanBasis<S> {
    /// Empty span of n x n matrices.
    pub fn new(matrix_dim: usize) -> Self {
        SpanBasis {
            matrix_dim,
            rows: Vec::new(),
        }
    }

    pub fn matrix_dim(&self) -> usize {
        self.matrix_dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.matrix_dim * self.matrix_dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [S]) {
        for row in &self.rows {
            let c = v[row.pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(&row.vec) {
                if !r.is_zero() {
                    *x = x.clone() - c.clone() * r.clone();
                }
            }
        }
    }

    /// Add a matrix to the span. Returns true iff the rank grew.
    pub fn insert(&mut self, m: &ExactMatrix<S>) -> Result<bool> {
        if m.dim() != self.matrix_dim {
            return Err(Error::DimensionMismatch {
                left: self.matrix_dim,
                right: m.dim(),
            });
        }
        let mut v: Vec<S> = m.as_slice().to_vec();
        self.reduce(&mut v);
        let pivot = match v.iter().position(|x| !x.is_zero()) {
            Some(p) => p,
            None => return Ok(false),
        };
        let inv = v[pivot].clone();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.clone() / inv.clone();
            }
        }
        // Eliminate the new pivot column from existing rows to stay reduced.
        for row in &mut self.rows {
            let c = row.vec[pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (r, x) in row.vec.iter_mut().zip(&v) {
                if !x.is_zero() {
                    *r = r.clone() - c.clone() * x.clone();
                }
            }
        }
        let at = self.rows.partition_point(|row| row.pivot < pivot);
        self.rows.insert(at, Row { pivot, vec: v });
        Ok(true)
    }

    /// Exact membership test: is the matrix in the span?
    pub fn membership(&self, m: &ExactMatrix<S>) -> Result<bool> {
        if m.dim() != self.matrix_dim {
            return Err(Error::DimensionMismatch {
                left: self.matrix_dim,
                right: m.dim(),
            });
        }
        let mut v: Vec<S> = m.as_slice().to_vec();
        self.reduce(&mut v);
        Ok(v.iter().all(|x| x.is_zero()))
    }

    /// The reduced basis, reshaped back into matrices, pivots ascending.
    pub fn basis(&self) -> Vec<ExactMatrix<S>> {
        let n = self.matrix_dim;
        self.rows
            .iter()
            .map(|row| ExactMatrix::from_fn(n, |i, j| row.vec[i * n + j].clone()))
            .collect()
    }

    /// True iff both spans describe the same subspace.
    pub fn same_span(&self, other: &Self) -> bool {
        self == other
    }
}
