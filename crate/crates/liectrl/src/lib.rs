//! Exact decision procedures for controllability of bilinear systems that
//! evolve on matrix Lie groups.
//!
//! See the crate README for the full tour. The short version: a control
//! system `x' = (sum_k u_k(t) C_k) x` on a matrix group is controllable
//! exactly when the generators `C_k` produce the whole Lie algebra under
//! iterated commutators. This crate decides that three independent ways --
//! an exact rank computation over the rationals, a permutation-product
//! criterion, and a graph-connectivity criterion -- and cross-checks them
//! against each other.

pub mod analysis;
pub mod decomp;
pub mod error;
pub mod forest;
pub mod graph;
pub mod lie;
pub mod matrix;
pub mod perm;
pub mod scalar;
pub mod son;
pub mod span;
pub mod sweep;

pub use analysis::{analyze, builtin_examples, parse_spec, AnalysisReport, Backend, SystemSpec};
pub use error::{Error, Result};
pub use lie::{larc_controllable, lie_closure, lie_rank, Generator, GeneratorSet};
pub use matrix::ExactMatrix;
pub use perm::{OrbitPartition, Permutation, TranspositionSequence};
pub use scalar::{frac, gauss, rat, GaussianRational, Rational, Scalar};
pub use span::SpanBasis;

/// Square matrix with exact rational entries.
pub type RationalMatrix = ExactMatrix<Rational>;
/// Square matrix with exact complex-rational (Gaussian rational) entries.
pub type GaussianMatrix = ExactMatrix<GaussianRational>;
