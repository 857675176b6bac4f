//! Generator sets and the iterated-bracket closure.
//!
//! A bilinear system `x' = (sum_k u_k(t) C_k) x` on a matrix group is
//! controllable exactly when the smallest Lie algebra containing its
//! generators `C_k` is the group's whole Lie algebra. [`lie_closure`]
//! computes that smallest algebra as an exact span; [`larc_controllable`]
//! compares its rank against the target dimension. Everything is
//! tolerance-free: scalars are exact rationals or Gaussian rationals.

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::scalar::Scalar;
use crate::span::SpanBasis;

/// Which structured family a generator set was built from. Backends that
/// need structure (graph, cycle) check this before interpreting matrices.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisKind {
    /// Subset of the standard skew-symmetric basis of so(n): each generator
    /// is exactly some `omega(n, i, j)`.
    StandardSon,
    /// Subset of the six-element commuting-pair split basis of so(4).
    So4Split,
    /// Subset of the eight-element Cartan-style basis of sl(3, C).
    Sl3Cartan,
    /// Symmetric couplings of a formation system on N agents, one per
    /// coupled agent pair.
    FormationCouplings,
    /// Arbitrary square matrices; only the rank backend applies.
    Raw,
}

impl BasisKind {
    pub fn name(self) -> &'static str {
        match self {
            BasisKind::StandardSon => "standard_son",
            BasisKind::So4Split => "so4_split",
            BasisKind::Sl3Cartan => "sl3_cartan",
            BasisKind::FormationCouplings => "formation",
            BasisKind::Raw => "raw",
        }
    }
}

/// A labeled generator matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Generator<S: Scalar> {
    label: String,
    matrix: ExactMatrix<S>,
}

impl<S: Scalar> Generator<S> {
    pub fn new(label: impl Into<String>, matrix: ExactMatrix<S>) -> Self {
        Generator {
            label: label.into(),
            matrix,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn matrix(&self) -> &ExactMatrix<S> {
        &self.matrix
    }
}

/// An ordered, uniquely labeled set of generators sharing one matrix
/// dimension.
#[derive(Clone, PartialEq, Debug)]
pub struct GeneratorSet<S: Scalar> {
    matrix_dim: usize,
    kind: BasisKind,
    gens: Vec<Generator<S>>,
}

impl<S: Scalar> GeneratorSet<S> {
    /// Generators with no structural interpretation; only the rank backend
    /// will accept them.
    pub fn raw(matrix_dim: usize, gens: Vec<Generator<S>>) -> Result<Self> {
        Self::with_kind(matrix_dim, BasisKind::Raw, gens)
    }

    pub(crate) fn with_kind(
        matrix_dim: usize,
        kind: BasisKind,
        gens: Vec<Generator<S>>,
    ) -> Result<Self> {
        for g in &gens {
            if g.matrix.dim() != matrix_dim {
                return Err(Error::DimensionMismatch {
                    left: matrix_dim,
                    right: g.matrix.dim(),
                });
            }
        }
        for (k, g) in gens.iter().enumerate() {
            if gens[..k].iter().any(|h| h.label == g.label) {
                return Err(Error::DuplicateGenerator {
                    label: g.label.clone(),
                });
            }
        }
        Ok(GeneratorSet {
            matrix_dim,
            kind,
            gens,
        })
    }

    pub fn matrix_dim(&self) -> usize {
        self.matrix_dim
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator<S>] {
        &self.gens
    }

    pub fn labels(&self) -> Vec<&str> {
        self.gens.iter().map(|g| g.label.as_str()).collect()
    }

    pub fn matrices(&self) -> impl Iterator<Item = &ExactMatrix<S>> {
        self.gens.iter().map(|g| &g.matrix)
    }

    /// The sub-set picked out by `indices` (positions into this set), in the
    /// order given, keeping the basis kind.
    pub fn subset(&self, indices: &[usize]) -> Result<Self> {
        let mut gens = Vec::with_capacity(indices.len());
        for &k in indices {
            let g = self.gens.get(k).ok_or(Error::VertexOutOfRange {
                v: k,
                n: self.gens.len(),
            })?;
            gens.push(g.clone());
        }
        Self::with_kind(self.matrix_dim, self.kind, gens)
    }

    /// Subset selected by the bits of `mask` (bit k picks generator k).
    pub fn subset_by_mask(&self, mask: u64) -> Result<Self> {
        let indices: Vec<usize> = (0..self.gens.len())
            .filter(|k| mask >> k & 1 == 1)
            .collect();
        self.subset(&indices)
    }
}

/// The smallest Lie algebra containing the generators, as an exact reduced
/// span. Terminates because every augmenting round strictly increases rank,
/// which the ambient dimension bounds.
///
/// Errors on an empty generator set: the empty system spans the zero
/// algebra, and callers deciding controllability should use
/// [`larc_controllable`], which handles that case explicitly.
pub fn lie_closure<S: Scalar>(gens: &GeneratorSet<S>) -> Result<SpanBasis<S>> {
    if gens.is_empty() {
        return Err(Error::EmptyGeneratorSet);
    }
    let mut span = SpanBasis::new(gens.matrix_dim());
    let mut elems: Vec<ExactMatrix<S>> = Vec::new();
    for m in gens.matrices() {
        if span.insert(m)? {
            elems.push(m.clone());
        }
    }
    // Each round brackets every pair that touches an element added in the
    // previous round; `lo` marks where that new block starts.
    let mut lo = 0;
    loop {
        let hi = elems.len();
        if lo == hi {
            break;
        }
        for i in 0..hi {
            for j in i.max(lo).max(i + 1)..hi {
                let b = elems[i].commutator(&elems[j])?;
                if !b.is_zero() && span.insert(&b)? {
                    elems.push(b);
                }
            }
        }
        lo = hi;
    }
    Ok(span)
}

/// Rank of the generated Lie algebra; 0 for an empty set.
pub fn lie_rank<S: Scalar>(gens: &GeneratorSet<S>) -> Result<usize> {
    if gens.is_empty() {
        Ok(0)
    } else {
        Ok(lie_closure(gens)?.rank())
    }
}

/// The rank test: controllable exactly when the generated Lie algebra has
/// the target dimension `full_dim`.
///
/// An empty generator set generates the zero algebra, so it is controllable
/// precisely when `full_dim` is 0 (the one-point group SO(1) is the only
/// such case in practice).
pub fn larc_controllable<S: Scalar>(gens: &GeneratorSet<S>, full_dim: usize) -> Result<bool> {
    let ambient = gens.matrix_dim() * gens.matrix_dim();
    if full_dim > ambient {
        return Err(Error::FullDimOutOfRange { full_dim, ambient });
    }
    Ok(lie_rank(gens)? == full_dim)
}
