//! The standard skew-symmetric basis of so(n) and the controllability
//! backends for systems built from it.
//!
//! A basis element `omega(n, i, j)` has +1 at (i,j) and -1 at (j,i). Three
//! equivalent tests decide controllability of a system generated by such
//! elements:
//!
//! * rank: the Lie closure spans all of so(n) (`lie::larc_controllable`);
//! * graph: the graph with an edge per generator is connected
//!   ([`graph_controllable`]);
//! * cycle: some subset of generators, composed as transpositions in some
//!   order, is an n-cycle ([`cycle_controllable`]).
//!
//! The bridges between them are spanning trees (minimal cycle witnesses,
//! [`enumerate_cycle_witnesses`]) and spanning forests (the controllable
//! submanifold of an uncontrollable system, [`forest_to_submanifold`]).

use crate::error::{Error, Result};
use crate::forest::{
    edge_sequence_cycle, enumerate_spanning_trees, spanning_forest, spanning_tree_count, tree_cycle,
};
use crate::graph::{to_dot, ClosureTrace, Edge, SimpleGraph};
use crate::lie::{lie_closure, BasisKind, Generator, GeneratorSet};
use crate::matrix::ExactMatrix;
use crate::perm::{OrbitPartition, Permutation};
use crate::scalar::Scalar;
use crate::span::SpanBasis;
use num::BigInt;
use std::collections::BTreeMap;
use std::collections::BTreeSet;

/// Dimension of so(n).
pub fn son_dim(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Index (i, j) of a standard basis element, always with i < j.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct BasisIndex {
    i: usize,
    j: usize,
}

impl BasisIndex {
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self> {
        if i >= 1 && i < j && j <= n {
            Ok(BasisIndex { i, j })
        } else {
            Err(Error::InvalidBasisIndex { n, i, j })
        }
    }

    pub(crate) fn from_ordered(i: usize, j: usize) -> Self {
        debug_assert!(i >= 1 && i < j);
        BasisIndex { i, j }
    }

    pub fn i(self) -> usize {
        self.i
    }

    pub fn j(self) -> usize {
        self.j
    }

    pub fn edge(self) -> Edge {
        (self.i, self.j)
    }

    /// Canonical generator label: "w13" while both indices are single
    /// digits, "w9_12" beyond.
    pub fn label(self) -> String {
        if self.j <= 9 {
            format!("w{}{}", self.i, self.j)
        } else {
            format!("w{}_{}", self.i, self.j)
        }
    }
}

/// The standard basis element with +1 at (i, j) and -1 at (j, i).
pub fn omega<S: Scalar>(n: usize, i: usize, j: usize) -> Result<ExactMatrix<S>> {
    let idx = BasisIndex::new(n, i, j)?;
    Ok(omega_of(n, idx))
}

fn omega_of<S: Scalar>(n: usize, idx: BasisIndex) -> ExactMatrix<S> {
    ExactMatrix::from_fn(n, |r, c| {
        if (r + 1, c + 1) == (idx.i, idx.j) {
            S::one()
        } else if (r + 1, c + 1) == (idx.j, idx.i) {
            -S::one()
        } else {
            S::zero()
        }
    })
}

/// All n(n-1)/2 standard indices in lexicographic order.
pub fn standard_basis(n: usize) -> Vec<BasisIndex> {
    let mut out = Vec::with_capacity(son_dim(n));
    for i in 1..=n {
        for j in (i + 1)..=n {
            out.push(BasisIndex { i, j });
        }
    }
    out
}

/// Sign of a structure constant.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor<S: Scalar>(self) -> S {
        match self {
            Sign::Plus => S::one(),
            Sign::Minus => -S::one(),
        }
    }
}

/// Structure constants of the standard basis without matrix arithmetic:
/// the bracket of two standard elements is zero (None) when their index
/// pairs coincide or are disjoint, and otherwise plus or minus a single
/// standard element determined by Kronecker deltas over the shared index.
pub fn bracket_index(p: BasisIndex, q: BasisIndex) -> Option<(Sign, BasisIndex)> {
    let (i, j, k, l) = (p.i, p.j, q.i, q.j);
    // the four delta terms of [w_ij, w_kl]; pairs are raw (possibly
    // reversed or degenerate) and get normalized below
    let terms = [
        (j == k, (i, l)),
        (i == l, (j, k)),
        (j == l, (k, i)),
        (i == k, (l, j)),
    ];
    let mut acc: BTreeMap<(usize, usize), i32> = BTreeMap::new();
    for (fires, (a, b)) in terms {
        if !fires || a == b {
            continue;
        }
        let (pair, unit) = if a < b { ((a, b), 1) } else { ((b, a), -1) };
        *acc.entry(pair).or_insert(0) += unit;
    }
    acc.retain(|_, v| *v != 0);
    debug_assert!(
        acc.len() <= 1,
        "bracket of standard elements is a single element"
    );
    acc.into_iter().next().map(|((a, b), v)| {
        debug_assert!(v == 1 || v == -1);
        let sign = if v > 0 { Sign::Plus } else { Sign::Minus };
        (sign, BasisIndex::from_ordered(a, b))
    })
}

/// Recognize a matrix that is exactly a standard basis element.
pub fn as_standard_index<S: Scalar>(m: &ExactMatrix<S>) -> Option<BasisIndex> {
    let n = m.dim();
    let mut found: Option<BasisIndex> = None;
    for r in 0..n {
        for c in 0..n {
            let v = m.get(r, c);
            if *v == S::zero() {
                continue;
            }
            if r < c && *v == S::one() && found.is_none() {
                found = Some(BasisIndex::from_ordered(r + 1, c + 1));
            } else if r > c && *v == -S::one() {
                match found {
                    Some(idx) if idx.edge() == (c + 1, r + 1) => {}
                    _ => return None,
                }
            } else {
                return None;
            }
        }
    }
    found
}

impl<S: Scalar> GeneratorSet<S> {
    /// Generators drawn from the standard basis of so(n), one per index,
    /// labeled canonically.
    pub fn standard_son(n: usize, indices: &[BasisIndex]) -> Result<Self> {
        let gens = indices
            .iter()
            .map(|&idx| {
                BasisIndex::new(n, idx.i, idx.j)?;
                Ok(Generator::new(idx.label(), omega_of(n, idx)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::with_kind(n, BasisKind::StandardSon, gens)
    }
}

/// The index of each generator of a standard-basis set, in generator order.
pub fn standard_indices<S: Scalar>(gens: &GeneratorSet<S>) -> Result<Vec<BasisIndex>> {
    if gens.kind() != BasisKind::StandardSon {
        return Err(Error::WrongBasisKind {
            expected: "standard_son".into(),
            found: gens.kind().name().into(),
        });
    }
    gens.generators()
        .iter()
        .map(|g| {
            as_standard_index(g.matrix()).ok_or_else(|| Error::WrongBasisKind {
                expected: "standard_son".into(),
                found: format!("generator '{}' is not a standard basis element", g.label()),
            })
        })
        .collect()
}

/// The graph with one edge (i, j) per generator `omega(n, i, j)`.
pub fn tau<S: Scalar>(gens: &GeneratorSet<S>) -> Result<SimpleGraph> {
    let indices = standard_indices(gens)?;
    SimpleGraph::from_edges(gens.matrix_dim(), indices.iter().map(|b| b.edge()))
}

/// The generator set whose graph is `g`: one standard element per edge, in
/// lexicographic edge order.
pub fn tau_inverse<S: Scalar>(g: &SimpleGraph) -> Result<GeneratorSet<S>> {
    let indices: Vec<BasisIndex> = g
        .edges()
        .map(|(a, b)| BasisIndex::from_ordered(a, b))
        .collect();
    GeneratorSet::standard_son(g.vertex_count(), &indices)
}

/// Connectivity backend: controllable exactly when the generator graph is
/// connected.
pub fn graph_controllable<S: Scalar>(gens: &GeneratorSet<S>) -> Result<bool> {
    Ok(tau(gens)?.is_connected())
}

/// The product of the generators as transpositions, in generator order.
pub fn iota_of_generators<S: Scalar>(gens: &GeneratorSet<S>) -> Result<Permutation> {
    let indices = standard_indices(gens)?;
    let edges: Vec<Edge> = indices.iter().map(|b| b.edge()).collect();
    edge_sequence_cycle(gens.matrix_dim(), &edges)
}

/// Cross-check bridging the rank and graph backends: the Lie closure of the
/// generators must span exactly the standard elements of the triangular
/// closure of the generator graph. Always true; exercised as a property.
pub fn closure_matches_graph_span<S: Scalar>(gens: &GeneratorSet<S>) -> Result<bool> {
    let trace = tau(gens)?.triangular_closure();
    let n = gens.matrix_dim();
    let mut graph_side = SpanBasis::<S>::new(n);
    for (a, b) in trace.closure().edges() {
        graph_side.insert(&omega_of(n, BasisIndex::from_ordered(a, b)))?;
    }
    if gens.is_empty() {
        return Ok(graph_side.rank() == 0);
    }
    let lie_side = lie_closure(gens)?;
    Ok(lie_side.same_span(&graph_side))
}

/// A subset of generators witnessing the cycle criterion: composing its
/// transpositions in the recorded order yields a single cycle through all
/// n points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleWitness {
    /// Labels of the witnessing generators, in composition order.
    pub labels: Vec<String>,
    /// The edge sequence composed (rightmost acts first).
    pub ordering: Vec<Edge>,
    /// The resulting n-cycle.
    pub cycle: Permutation,
}

fn witness_from_edges<S: Scalar>(
    gens: &GeneratorSet<S>,
    edges: &[Edge],
    cycle: Permutation,
) -> Result<CycleWitness> {
    let by_edge: BTreeMap<Edge, String> = standard_indices(gens)?
        .iter()
        .zip(gens.generators())
        .map(|(idx, g)| (idx.edge(), g.label().to_string()))
        .collect();
    let labels = edges
        .iter()
        .map(|e| {
            by_edge
                .get(e)
                .cloned()
                .ok_or_else(|| Error::WrongBasisKind {
                    expected: "standard_son".into(),
                    found: format!("edge ({}, {}) has no generator", e.0, e.1),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CycleWitness {
        labels,
        ordering: edges.to_vec(),
        cycle,
    })
}

/// Cycle backend: controllable exactly when some subset of the generators,
/// composed as transpositions in some order, is an n-cycle.
///
/// The search does not try orderings: a subset can reach an n-cycle exactly
/// when its edges contain a spanning tree, and every ordering of a spanning
/// tree's edges works. The returned witness is the lexicographically first
/// spanning tree of the generator graph in lexicographic edge order (size
/// exactly n-1), or None when uncontrollable.
pub fn cycle_controllable<S: Scalar>(
    gens: &GeneratorSet<S>,
) -> Result<(bool, Option<CycleWitness>)> {
    let graph = tau(gens)?;
    if !graph.is_connected() {
        return Ok((false, None));
    }
    let forest = spanning_forest(&graph);
    debug_assert_eq!(forest.trees().len(), 1);
    let edges = forest.edges();
    let cycle = tree_cycle_allowing_single_vertex(gens.matrix_dim(), &edges)?;
    debug_assert!(cycle.is_full_cycle());
    Ok((true, Some(witness_from_edges(gens, &edges, cycle)?)))
}

fn tree_cycle_allowing_single_vertex(n: usize, edges: &[Edge]) -> Result<Permutation> {
    if edges.is_empty() && n == 1 {
        // S_1: the identity is the full cycle through the single point
        return Ok(Permutation::identity(1));
    }
    tree_cycle(n, edges)
}

/// Ordering-search variant of [`cycle_controllable`], for validation at
/// tiny sizes: subsets are tried by increasing size, then lexicographically
/// by generator position, and every ordering of each subset is composed.
/// Exponential; intended for cross-checking the tree-based search only.
pub fn cycle_controllable_bruteforce<S: Scalar>(
    gens: &GeneratorSet<S>,
) -> Result<(bool, Option<CycleWitness>)> {
    let n = gens.matrix_dim();
    let indices = standard_indices(gens)?;
    let edges: Vec<Edge> = indices.iter().map(|b| b.edge()).collect();
    if n == 1 {
        let cycle = Permutation::identity(1);
        return Ok((true, Some(witness_from_edges(gens, &[], cycle)?)));
    }
    for size in 1..=edges.len() {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let subset: Vec<Edge> = combo.iter().map(|&k| edges[k]).collect();
            if let Some((ordering, cycle)) = first_cycle_ordering(n, &subset)? {
                return Ok((true, Some(witness_from_edges(gens, &ordering, cycle)?)));
            }
            if !next_combination(&mut combo, edges.len()) {
                break;
            }
        }
    }
    Ok((false, None))
}

/// Advance a strictly increasing index combination over 0..m to its
/// lexicographic successor; false when exhausted.
fn next_combination(combo: &mut [usize], m: usize) -> bool {
    let size = combo.len();
    let mut pos = size;
    while pos > 0 {
        pos -= 1;
        if combo[pos] != m - size + pos {
            combo[pos] += 1;
            for t in (pos + 1)..size {
                combo[t] = combo[t - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn first_cycle_ordering(n: usize, subset: &[Edge]) -> Result<Option<(Vec<Edge>, Permutation)>> {
    fn permute(
        n: usize,
        remaining: &mut Vec<Edge>,
        prefix: &mut Vec<Edge>,
    ) -> Result<Option<(Vec<Edge>, Permutation)>> {
        if remaining.is_empty() {
            let p = edge_sequence_cycle(n, prefix)?;
            if p.is_full_cycle() {
                return Ok(Some((prefix.clone(), p)));
            }
            return Ok(None);
        }
        for k in 0..remaining.len() {
            let e = remaining.remove(k);
            prefix.push(e);
            let hit = permute(n, remaining, prefix)?;
            prefix.pop();
            remaining.insert(k, e);
            if hit.is_some() {
                return Ok(hit);
            }
        }
        Ok(None)
    }
    permute(n, &mut subset.to_vec(), &mut Vec::new())
}

/// All minimal witnessing subsets: exactly the spanning trees of the
/// generator graph, each returned as a witness in lexicographic edge order.
/// Empty when the graph is disconnected. `cap` bounds the enumeration.
pub fn enumerate_cycle_witnesses<S: Scalar>(
    gens: &GeneratorSet<S>,
    cap: usize,
) -> Result<Vec<CycleWitness>> {
    let graph = tau(gens)?;
    let trees = enumerate_spanning_trees(&graph, cap)?;
    trees
        .into_iter()
        .map(|edges| {
            let cycle = tree_cycle_allowing_single_vertex(gens.matrix_dim(), &edges)?;
            witness_from_edges(gens, &edges, cycle)
        })
        .collect()
}

/// Exact number of minimal witnessing subsets (spanning trees of the
/// generator graph), by the matrix-tree determinant — no enumeration.
pub fn cycle_witness_count<S: Scalar>(gens: &GeneratorSet<S>) -> Result<BigInt> {
    let graph = tau(gens)?;
    if graph.vertex_count() == 1 {
        return Ok(BigInt::from(1));
    }
    Ok(spanning_tree_count(&graph))
}

/// The orbit partition describing the controllable submanifold: orbits of
/// the permutation composed from a spanning forest of the generator graph.
/// Equals the graph's connected components.
pub fn submanifold_orbits<S: Scalar>(gens: &GeneratorSet<S>) -> Result<OrbitPartition> {
    Ok(forest_to_submanifold(gens)?.orbits)
}

/// A minimal generating subset and the controllable-submanifold structure
/// it induces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubmanifoldDecomposition {
    /// Labels of the forest generators (a minimal subset with the same Lie
    /// closure), in lexicographic edge order.
    pub forest_labels: Vec<String>,
    /// The forest edges in the composed order.
    pub forest_edges: Vec<Edge>,
    /// The composed permutation of the forest.
    pub permutation: Permutation,
    /// Its orbit partition; nontrivial blocks are the submanifold factors.
    pub orbits: OrbitPartition,
    /// Sum over blocks of |O|(|O|-1)/2: the dimension of the direct sum of
    /// the blocks' skew algebras. Must equal the Lie-closure rank.
    pub dim: usize,
}

/// Compute a canonical minimal generating subset (the lexicographically
/// first spanning forest of the generator graph) and the submanifold
/// decomposition it induces: the Lie closure is the direct sum over
/// nontrivial orbits O of the skew algebras on the points of O.
pub fn forest_to_submanifold<S: Scalar>(
    gens: &GeneratorSet<S>,
) -> Result<SubmanifoldDecomposition> {
    let n = gens.matrix_dim();
    let graph = tau(gens)?;
    let forest = spanning_forest(&graph);
    let edges = forest.edges();
    let permutation = edge_sequence_cycle(n, &edges)?;
    let orbits = permutation.orbit_partition();
    let dim = orbits.submanifold_dim();
    let witness = witness_from_edges(gens, &edges, permutation.clone())?;
    Ok(SubmanifoldDecomposition {
        forest_labels: witness.labels,
        forest_edges: edges,
        permutation,
        orbits,
        dim,
    })
}

/// Lower bound on inputs: a controllable standard-basis system has at least
/// n-1 generators (so at least n-2 controls beside a drift term). Vacuously
/// true for uncontrollable systems.
pub fn min_inputs_check<S: Scalar>(gens: &GeneratorSet<S>) -> Result<bool> {
    Ok(!graph_controllable(gens)? || gens.len() + 1 >= gens.matrix_dim())
}

/// The index-level closure chain: round m+1 adds the index of every nonzero
/// bracket of two round-m elements. Mirrors, set for set, the triangular
/// closure chain of the generator graph.
pub fn index_closure_chain(indices: &[BasisIndex]) -> Vec<BTreeSet<Edge>> {
    let mut cur: BTreeSet<Edge> = indices.iter().map(|b| b.edge()).collect();
    let mut chain = vec![cur.clone()];
    loop {
        let mut next = cur.clone();
        for &(a, b) in &cur {
            for &(c, d) in &cur {
                if let Some((_, idx)) = bracket_index(
                    BasisIndex::from_ordered(a, b),
                    BasisIndex::from_ordered(c, d),
                ) {
                    next.insert(idx.edge());
                }
            }
        }
        if next == cur {
            break;
        }
        chain.push(next.clone());
        cur = next;
    }
    chain
}

/// DOT rendering of the generator graph, with closure-added edges marked
/// when a trace is supplied.
pub fn emit_dot<S: Scalar>(
    name: &str,
    gens: &GeneratorSet<S>,
    trace: Option<&ClosureTrace>,
) -> Result<String> {
    let graph = tau(gens)?;
    Ok(to_dot(name, &graph, trace, None))
}
