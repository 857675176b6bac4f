//! Spanning forests, spanning-tree enumeration and counting, and the
//! tree-to-cycle construction.
//!
//! A set of edges that forms a tree on the k+1 vertices it touches yields,
//! under composing its edges as transpositions in any order, a single
//! (k+1)-cycle on exactly those vertices. Spanning trees of a connected
//! interaction graph are therefore precisely the minimal witnesses for the
//! full-cycle criterion.

use crate::error::{Error, Result};
use crate::graph::{Edge, SimpleGraph};
use crate::matrix::ExactMatrix;
use crate::perm::{Permutation, TranspositionSequence};
use crate::scalar::{rat, Rational};
use num::{BigInt, ToPrimitive, Zero};
use std::collections::BTreeSet;

/// True when the graph has no cycle (every component is a tree).
pub fn is_forest(g: &SimpleGraph) -> bool {
    g.edge_count() + g.components().len() == g.vertex_count()
}

/// True when the edges form a tree on the vertex set they touch.
pub fn is_tree_on_support(edges: &[Edge]) -> bool {
    let support: BTreeSet<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    if support.is_empty() {
        return false;
    }
    if edges.len() + 1 != support.len() {
        return false;
    }
    let n = *support.iter().max().unwrap();
    match SimpleGraph::from_edges(n, edges.iter().copied()) {
        Ok(g) => {
            g.edge_count() == edges.len() // no duplicate edges
                && g.components().iter().filter(|c| c.len() > 1).count() == 1
        }
        Err(_) => false,
    }
}

/// A spanning forest: one spanning tree per connected component of the
/// parent graph (singleton components give zero-edge trees), jointly
/// covering every vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpanningForest {
    n: usize,
    trees: Vec<ForestTree>,
}

/// One tree of a spanning forest: its (sorted) vertices and its edges,
/// always satisfying `edges.len() + 1 == vertices.len()`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ForestTree {
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
}

impl SpanningForest {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Trees ordered by minimum vertex.
    pub fn trees(&self) -> &[ForestTree] {
        &self.trees
    }

    /// All forest edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut all: Vec<Edge> = self.trees.iter().flat_map(|t| t.edges.clone()).collect();
        all.sort_unstable();
        all
    }

    pub fn as_graph(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.n, self.edges()).expect("forest edges came from a valid graph")
    }
}

/// Lexicographically first spanning forest (Kruskal on sorted edges): one
/// spanning tree per connected component.
pub fn spanning_forest(g: &SimpleGraph) -> SpanningForest {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut chosen: Vec<Edge> = Vec::new();
    for (a, b) in g.edges() {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
            chosen.push((a, b));
        }
    }
    let trees = g
        .components()
        .into_iter()
        .map(|vertices| {
            let members: BTreeSet<usize> = vertices.iter().copied().collect();
            let edges: Vec<Edge> = chosen
                .iter()
                .copied()
                .filter(|(a, _)| members.contains(a))
                .collect();
            debug_assert_eq!(edges.len() + 1, vertices.len());
            ForestTree { vertices, edges }
        })
        .collect();
    SpanningForest { n, trees }
}

/// Product of the edges as transpositions, in the order given, inside the
/// symmetric group on {1..n}. The rightmost (last) edge acts first.
pub fn edge_sequence_cycle(n: usize, edges: &[Edge]) -> Result<Permutation> {
    TranspositionSequence::new(n, edges.to_vec()).map(|s| s.product())
}

/// Compose the edges of a tree (in the order given) and return the resulting
/// cycle. Errors with `NotATree` when the edges do not form a tree on their
/// support.
pub fn tree_cycle(n: usize, edges: &[Edge]) -> Result<Permutation> {
    if !is_tree_on_support(edges) {
        return Err(Error::NotATree {
            reason: format!("{} edges do not form a tree on their support", edges.len()),
        });
    }
    edge_sequence_cycle(n, edges)
}

/// If the permutation has exactly one nontrivial cycle, the sorted points of
/// that cycle.
pub fn single_cycle_support(p: &Permutation) -> Option<Vec<usize>> {
    let cycles = p.cycles();
    if cycles.len() == 1 {
        let mut pts = cycles.into_iter().next().unwrap();
        pts.sort_unstable();
        Some(pts)
    } else {
        None
    }
}

/// All spanning trees of a connected graph, each as a lexicographically
/// sorted edge list, enumerated in lexicographic order of edge lists.
/// Disconnected graphs have none. Stops with `TooLarge` when more than
/// `cap` trees exist.
pub fn enumerate_spanning_trees(g: &SimpleGraph, cap: usize) -> Result<Vec<Vec<Edge>>> {
    let n = g.vertex_count();
    if !g.is_connected() {
        return Ok(Vec::new());
    }
    if n <= 1 {
        return Ok(vec![Vec::new()]);
    }
    let all: Vec<Edge> = g.edges().collect();
    let need = n - 1;
    let mut found: Vec<Vec<Edge>> = Vec::new();
    let mut chosen: Vec<Edge> = Vec::new();

    fn connected_with(n: usize, edges: &[Edge], from: usize, all: &[Edge]) -> bool {
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut comps = n;
        for &(a, b) in edges.iter().chain(&all[from..]) {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
                comps -= 1;
            }
        }
        comps == 1
    }

    fn recurse(
        n: usize,
        all: &[Edge],
        from: usize,
        need: usize,
        chosen: &mut Vec<Edge>,
        found: &mut Vec<Vec<Edge>>,
        cap: usize,
    ) -> Result<()> {
        if chosen.len() == need {
            // need = n-1 edges forming a tree on their support forces the
            // support to be all n vertices
            if is_tree_on_support(chosen) {
                if found.len() == cap {
                    return Err(Error::TooLarge {
                        what: "spanning-tree enumeration".into(),
                        count: format!("more than {cap}"),
                    });
                }
                found.push(chosen.clone());
            }
            return Ok(());
        }
        if all.len() - from < need - chosen.len() {
            return Ok(());
        }
        // prune: the chosen edges plus every remaining candidate must still
        // be able to connect the graph
        if !connected_with(n, chosen, from, all) {
            return Ok(());
        }
        for i in from..all.len() {
            chosen.push(all[i]);
            recurse(n, all, i + 1, need, chosen, found, cap)?;
            chosen.pop();
        }
        Ok(())
    }

    recurse(n, &all, 0, need, &mut chosen, &mut found, cap)?;
    Ok(found)
}

/// Exact number of spanning trees via the matrix-tree theorem: the
/// determinant of the Laplacian with the first row and column removed.
/// Returns 0 for a disconnected graph and 1 for a single vertex.
pub fn spanning_tree_count(g: &SimpleGraph) -> BigInt {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return BigInt::zero();
    }
    if n == 1 {
        return BigInt::from(1);
    }
    // reduced Laplacian on vertices 2..n
    let reduced = ExactMatrix::<Rational>::from_fn(n - 1, |r, c| {
        let (i, j) = (r + 2, c + 2);
        if i == j {
            rat(g.neighbors(i).len() as i64)
        } else if g.has_edge(i, j) {
            rat(-1)
        } else {
            rat(0)
        }
    });
    let det = reduced.determinant();
    debug_assert!(det.is_integer());
    det.to_integer()
}

/// `spanning_tree_count` as usize, erroring with `TooLarge` when it exceeds
/// `cap`.
pub fn spanning_tree_count_capped(g: &SimpleGraph, cap: usize) -> Result<usize> {
    let count = spanning_tree_count(g);
    match count.to_usize() {
        Some(c) if c <= cap => Ok(c),
        _ => Err(Error::TooLarge {
            what: "spanning-tree enumeration".into(),
            count: count.to_string(),
        }),
    }
}
