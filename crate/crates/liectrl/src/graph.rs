//! Simple undirected graphs on {1..n} and the triangular closure.
//!
//! The closure repeatedly adds an edge between any two vertices with a
//! common neighbor. It mirrors, step for step, how iterated brackets of
//! standard skew generators populate the Lie algebra, so the per-step trace
//! is kept and can be rendered to DOT with the added edges annotated by the
//! step that produced them.

use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt::Write as _;

pub type Edge = (usize, usize);

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut g = Self::new(n);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for i in 1..=n {
            for j in (i + 1)..=n {
                g.edges.insert((i, j));
            }
        }
        g
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        for &v in &[a, b] {
            if v < 1 || v > self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
        }
        if a == b {
            return Err(Error::SelfLoop { v: a });
        }
        self.edges.insert((a.min(b), a.max(b)));
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Edges in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    pub fn neighbors(&self, v: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.insert(b);
            } else if b == v {
                out.insert(a);
            }
        }
        out
    }

    /// Connected components, each sorted, ordered by minimum vertex.
    /// Isolated vertices are singleton components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                let (lo, hi) = (ra.min(rb), ra.max(rb));
                parent[hi] = lo;
            }
        }
        let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for v in 1..=self.n {
            let r = find(&mut parent, v);
            by_root.entry(r).or_default().push(v);
        }
        by_root.into_values().collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Triangular closure with its full per-step trace.
    pub fn triangular_closure(&self) -> ClosureTrace {
        let mut chain = vec![self.clone()];
        let mut added = Vec::new();
        loop {
            let cur = chain.last().unwrap();
            let mut step: Vec<Edge> = Vec::new();
            for i in 1..=self.n {
                let ni = cur.neighbors(i);
                for j in (i + 1)..=self.n {
                    if cur.has_edge(i, j) {
                        continue;
                    }
                    if ni.iter().any(|&k| k != j && cur.has_edge(k, j)) {
                        step.push((i, j));
                    }
                }
            }
            if step.is_empty() {
                break;
            }
            let mut next = cur.clone();
            for &(a, b) in &step {
                next.edges.insert((a, b));
            }
            chain.push(next);
            added.push(step);
        }
        ClosureTrace { chain, added }
    }
}

/// The chain G^0 subset G^1 subset ... up to stabilization, plus the edges
/// each step added. `chain.len() == added.len() + 1`; a graph that is
/// already closed has a trace of length 1 with no added edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosureTrace {
    chain: Vec<SimpleGraph>,
    added: Vec<Vec<Edge>>,
}

impl ClosureTrace {
    pub fn chain(&self) -> &[SimpleGraph] {
        &self.chain
    }

    pub fn added(&self) -> &[Vec<Edge>] {
        &self.added
    }

    /// Number of closure rounds until stabilization.
    pub fn steps(&self) -> usize {
        self.added.len()
    }

    pub fn closure(&self) -> &SimpleGraph {
        self.chain.last().unwrap()
    }

    /// The step (1-based) at which an edge first appeared, or 0 for a base
    /// edge, or None if the edge is not in the closure.
    pub fn step_of(&self, a: usize, b: usize) -> Option<usize> {
        if self.chain[0].has_edge(a, b) {
            return Some(0);
        }
        for (k, step) in self.added.iter().enumerate() {
            if step.contains(&(a.min(b), a.max(b))) {
                return Some(k + 1);
            }
        }
        None
    }
}

/// Render a graph and (optionally) its closure trace as Graphviz DOT.
///
/// Output is deterministic: vertices first in ascending order, base edges in
/// lexicographic order painted black, then closure-added edges in
/// lexicographic order painted red and labeled with the step that added
/// them. `labels` overrides the default names v1..vn.
pub fn to_dot(
    name: &str,
    base: &SimpleGraph,
    trace: Option<&ClosureTrace>,
    labels: Option<&[String]>,
) -> String {
    let n = base.vertex_count();
    let label = |v: usize| -> String {
        match labels {
            Some(ls) if v <= ls.len() => ls[v - 1].clone(),
            _ => format!("v{v}"),
        }
    };
    let mut out = String::new();
    writeln!(out, "graph \"{name}\" {{").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in 1..=n {
        writeln!(out, "  {};", label(v)).unwrap();
    }
    for (a, b) in base.edges() {
        writeln!(out, "  {} -- {};", label(a), label(b)).unwrap();
    }
    if let Some(trace) = trace {
        let mut closure_edges: Vec<(Edge, usize)> = Vec::new();
        for (k, step) in trace.added().iter().enumerate() {
            for &e in step {
                closure_edges.push((e, k + 1));
            }
        }
        closure_edges.sort();
        for ((a, b), step) in closure_edges {
            writeln!(
                out,
                "  {} -- {} [color=red, label=\"{step}\"];",
                label(a),
                label(b)
            )
            .unwrap();
        }
    }
    writeln!(out, "}}").unwrap();
    out
}
