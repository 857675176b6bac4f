//! Dense square matrices over an exact scalar.
//!
//! Storage is row-major; the flat slice doubles as the vectorization used by
//! [`crate::span::SpanBasis`], so "matrix as vector in S^(n^2)" is literally
//! the storage order.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct ExactMatrix<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: Scalar> ExactMatrix<S> {
    pub fn zero(n: usize) -> Self {
        ExactMatrix {
            n,
            data: vec![S::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        ExactMatrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    row: i,
                    cols: row.len(),
                });
            }
        }
        Ok(ExactMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at 0-based (i, j).
    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.n + j] = v;
    }

    /// Row-major vectorization; this is the coordinate order every span uses.
    pub fn as_slice(&self) -> &[S] {
        &self.data
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(ExactMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(ExactMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        ExactMatrix {
            n: self.n,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        ExactMatrix {
            n: self.n,
            data: self.data.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).clone() + a.clone() * b.clone();
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Commutator [self, other] = self*other - other*self.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> S {
        let mut t = S::zero();
        for i in 0..self.n {
            t = t + self.get(i, i).clone();
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_skew_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in i..self.n {
                if self.get(i, j).clone() + self.get(j, i).clone() != S::zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Exact determinant by fraction-preserving Gaussian elimination.
    pub fn determinant(&self) -> S {
        let n = self.n;
        if n == 0 {
            return S::one();
        }
        let mut m = self.clone();
        let mut det = S::one();
        for c in 0..n {
            let pivot_row = match (c..n).find(|&r| !m.get(r, c).is_zero()) {
                Some(r) => r,
                None => return S::zero(),
            };
            if pivot_row != c {
                for j in 0..n {
                    let a = m.get(c, j).clone();
                    let b = m.get(pivot_row, j).clone();
                    m.set(c, j, b);
                    m.set(pivot_row, j, a);
                }
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = det * pivot.clone();
            for r in (c + 1)..n {
                if m.get(r, c).is_zero() {
                    continue;
                }
                let f = m.get(r, c).clone() / pivot.clone();
                for j in c..n {
                    let v = m.get(r, j).clone() - f.clone() * m.get(c, j).clone();
                    m.set(r, j, v);
                }
            }
        }
        det
    }
}

impl<S: Scalar> fmt::Debug for ExactMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            write!(f, "  [")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Display for ExactMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                writeln!(f)?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}
