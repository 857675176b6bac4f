//! Symmetric pairwise couplings of a formation of agents and the graded
//! algebra they generate.
//!
//! The coupling between agents i and j is the symmetric matrix
//! `A_ij = E_ii + E_jj - E_ij - E_ji` (a graph-Laplacian summand). Brackets
//! of couplings produce the skew triangle matrices
//! `B_ijk = -(W_ij + W_jk + W_ki)` where `W_pq = E_pq - E_qp`, and the
//! generated algebra is graded: brackets of two couplings land in the span
//! of the triangles, brackets of a triangle with a coupling land back in
//! the span of the couplings.
//!
//! The structural facts exposed here, each checkable exactly:
//!
//! 1. `[A_ij, A_jk] = B_ijk`
//! 2. `[B_ijk, A_ij] = 2 (A_ik - A_jk)`
//! 3. `[B_ijk, A_il] = -A_ij + A_jl + A_ik - A_kl`
//! 4. `[B_ijk, B_ijl] = B_ikl + B_jkl`
//! 5. `[B_ijk, B_ilm] = B_jlm + B_kml`
//!
//! (indices pairwise distinct in each). A coupling set reaches the full
//! algebra exactly when its coupling graph is connected, which the rank
//! backend confirms against [`formation_full_rank`] — a computed quantity,
//! never a constant.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::lie::{lie_rank, BasisKind, Generator, GeneratorSet};
use crate::matrix::ExactMatrix;
use crate::scalar::{rat, Rational};
use crate::span::SpanBasis;

fn check_agent(agents: usize, v: usize) -> Result<()> {
    if v < 1 || v > agents {
        return Err(Error::VertexOutOfRange { v, n: agents });
    }
    Ok(())
}

/// The symmetric coupling matrix `A_ij` (order of i and j is immaterial).
pub fn coupling_matrix(agents: usize, i: usize, j: usize) -> Result<ExactMatrix<Rational>> {
    check_agent(agents, i)?;
    check_agent(agents, j)?;
    if i == j {
        return Err(Error::SelfLoop { v: i });
    }
    let mut m = ExactMatrix::zero(agents);
    m.set(i - 1, i - 1, rat(1));
    m.set(j - 1, j - 1, rat(1));
    m.set(i - 1, j - 1, rat(-1));
    m.set(j - 1, i - 1, rat(-1));
    Ok(m)
}

/// The skew triangle matrix `B_ijk`: minus the signed loop i -> j -> k -> i.
/// Invariant under cyclic rotation of (i, j, k), negated by a swap.
pub fn triangle_matrix(
    agents: usize,
    i: usize,
    j: usize,
    k: usize,
) -> Result<ExactMatrix<Rational>> {
    for &v in &[i, j, k] {
        check_agent(agents, v)?;
    }
    if i == j || j == k || i == k {
        return Err(Error::SelfLoop {
            v: if i == j { i } else { k },
        });
    }
    let mut m: ExactMatrix<Rational> = ExactMatrix::zero(agents);
    for (a, b) in [(i, j), (j, k), (k, i)] {
        let down = m.get(a - 1, b - 1).clone() - rat(1);
        m.set(a - 1, b - 1, down);
        let up = m.get(b - 1, a - 1).clone() + rat(1);
        m.set(b - 1, a - 1, up);
    }
    Ok(m)
}

fn coupling_label(i: usize, j: usize) -> String {
    if j <= 9 {
        format!("A{i}{j}")
    } else {
        format!("A{i}_{j}")
    }
}

impl GeneratorSet<Rational> {
    /// Coupling generators for a formation on `agents` agents, one per
    /// listed agent pair (1-based, order within a pair immaterial).
    pub fn formation(agents: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if agents < 2 {
            return Err(Error::spec(
                "agents",
                format!("a formation needs at least 2 agents, got {agents}"),
            ));
        }
        let gens = edges
            .iter()
            .map(|&(a, b)| {
                let (i, j) = (a.min(b), a.max(b));
                Ok(Generator::new(
                    coupling_label(i, j),
                    coupling_matrix(agents, i, j)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::with_kind(agents, BasisKind::FormationCouplings, gens)
    }
}

/// Recover the coupled agent pairs of a set, in generator order.
pub fn coupling_edges(gens: &GeneratorSet<Rational>) -> Result<Vec<(usize, usize)>> {
    if gens.kind() != BasisKind::FormationCouplings {
        return Err(Error::WrongBasisKind {
            expected: "formation_couplings".into(),
            found: gens.kind().name().into(),
        });
    }
    let agents = gens.matrix_dim();
    gens.generators()
        .iter()
        .map(|g| {
            let mismatch = || Error::WrongBasisKind {
                expected: "formation_couplings".into(),
                found: format!(
                    "generator '{}' does not match its coupling matrix",
                    g.label()
                ),
            };
            let pair = parse_coupling_label(g.label()).ok_or_else(mismatch)?;
            if coupling_matrix(agents, pair.0, pair.1).map_err(|_| mismatch())? != *g.matrix() {
                return Err(mismatch());
            }
            Ok(pair)
        })
        .collect()
}

fn parse_coupling_label(label: &str) -> Option<(usize, usize)> {
    let body = label.strip_prefix('A')?;
    if let Some((a, b)) = body.split_once('_') {
        Some((a.parse().ok()?, b.parse().ok()?))
    } else if body.len() == 2 && body.is_ascii() {
        let i = body[..1].parse().ok()?;
        let j = body[1..].parse().ok()?;
        Some((i, j))
    } else {
        None
    }
}

/// The coupling graph: one vertex per agent, one edge per coupling.
pub fn formation_graph(gens: &GeneratorSet<Rational>) -> Result<SimpleGraph> {
    let edges = coupling_edges(gens)?;
    SimpleGraph::from_edges(gens.matrix_dim(), edges)
}

/// Graph-backend verdict: the formation is controllable exactly when its
/// coupling graph is connected.
pub fn formation_controllable(gens: &GeneratorSet<Rational>) -> Result<bool> {
    Ok(formation_graph(gens)?.is_connected())
}

/// Rank of the algebra generated by the complete coupling set, computed by
/// bracket closure (`C(agents, 2) + C(agents - 1, 2)` in closed form, but
/// this function derives it from the matrices).
pub fn formation_full_rank(agents: usize) -> Result<usize> {
    lie_rank(&all_couplings(agents)?)
}

fn all_couplings(agents: usize) -> Result<GeneratorSet<Rational>> {
    let mut edges = Vec::new();
    for i in 1..=agents {
        for j in i + 1..=agents {
            edges.push((i, j));
        }
    }
    GeneratorSet::formation(agents, &edges)
}

/// Rank-backend verdict: does the closure of this coupling set reach the
/// rank of the complete coupling algebra on the same agents?
pub fn formation_rank_matches(gens: &GeneratorSet<Rational>) -> Result<bool> {
    coupling_edges(gens)?; // validates kind and matrices
    Ok(lie_rank(gens)? == formation_full_rank(gens.matrix_dim())?)
}

/// Outcome of checking the five structural identities on a given number of
/// agents. Identities that need more distinct indices than there are agents
/// are vacuous there; `complete` records whether every form was exercised.
#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize)]
pub struct FormationRelationReport {
    pub agents: usize,
    /// Whether all five identity forms had at least one instance.
    pub complete: bool,
    /// Number of individual instances checked.
    pub checked: usize,
    pub all_hold: bool,
    /// Human-readable descriptions of failing instances, if any.
    pub failures: Vec<String>,
}

/// Check the five bracket identities over every tuple of pairwise distinct
/// indices. Identities 1-2 need 3 indices, 3-4 need 4, and 5 needs 5.
pub fn verify_formation_relations(agents: usize) -> Result<FormationRelationReport> {
    if agents < 2 {
        return Err(Error::spec(
            "agents",
            format!("a formation needs at least 2 agents, got {agents}"),
        ));
    }
    let a = |i, j| coupling_matrix(agents, i, j).expect("distinct in-range indices");
    let b = |i, j, k| triangle_matrix(agents, i, j, k).expect("distinct in-range indices");
    let mut checked = 0usize;
    let mut failures = Vec::new();

    for (i, j, k) in distinct_triples(agents) {
        checked += 2;
        // [A_ij, A_jk] = B_ijk
        if a(i, j).commutator(&a(j, k)).expect("same dim") != b(i, j, k) {
            failures.push(format!("identity 1 at (i, j, k) = ({i}, {j}, {k})"));
        }
        // [B_ijk, A_ij] = 2 (A_ik - A_jk)
        let rhs = a(i, k).sub(&a(j, k)).expect("same dim").scale(&rat(2));
        if b(i, j, k).commutator(&a(i, j)).expect("same dim") != rhs {
            failures.push(format!("identity 2 at (i, j, k) = ({i}, {j}, {k})"));
        }
    }
    for (i, j, k, l) in distinct_quads(agents) {
        checked += 2;
        // [B_ijk, A_il] = -A_ij + A_jl + A_ik - A_kl
        let rhs = a(i, j)
            .neg()
            .add(&a(j, l))
            .and_then(|s| s.add(&a(i, k)))
            .and_then(|s| s.sub(&a(k, l)))
            .expect("same dim");
        if b(i, j, k).commutator(&a(i, l)).expect("same dim") != rhs {
            failures.push(format!("identity 3 at (i, j, k, l) = ({i}, {j}, {k}, {l})"));
        }
        // [B_ijk, B_ijl] = B_ikl + B_jkl
        let rhs = b(i, k, l).add(&b(j, k, l)).expect("same dim");
        if b(i, j, k).commutator(&b(i, j, l)).expect("same dim") != rhs {
            failures.push(format!("identity 4 at (i, j, k, l) = ({i}, {j}, {k}, {l})"));
        }
    }
    let mut saw_quint = false;
    for (i, j, k, l, m) in distinct_quints(agents) {
        saw_quint = true;
        checked += 1;
        // [B_ijk, B_ilm] = B_jlm + B_kml
        let rhs = b(j, l, m).add(&b(k, m, l)).expect("same dim");
        if b(i, j, k).commutator(&b(i, l, m)).expect("same dim") != rhs {
            failures.push(format!(
                "identity 5 at (i, j, k, l, m) = ({i}, {j}, {k}, {l}, {m})"
            ));
        }
    }

    Ok(FormationRelationReport {
        agents,
        complete: agents >= 5 && saw_quint,
        checked,
        all_hold: failures.is_empty(),
        failures,
    })
}

fn distinct_triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    let r = move || 1..=n;
    r().flat_map(move |i| r().flat_map(move |j| r().map(move |k| (i, j, k))))
        .filter(|&(i, j, k)| i != j && j != k && i != k)
}

fn distinct_quads(n: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    let r = move || 1..=n;
    distinct_triples(n)
        .flat_map(move |(i, j, k)| r().map(move |l| (i, j, k, l)))
        .filter(|&(i, j, k, l)| l != i && l != j && l != k)
}

fn distinct_quints(n: usize) -> impl Iterator<Item = (usize, usize, usize, usize, usize)> {
    let r = move || 1..=n;
    distinct_quads(n)
        .flat_map(move |(i, j, k, l)| r().map(move |m| (i, j, k, l, m)))
        .filter(|&(i, j, k, l, m)| m != i && m != j && m != k && m != l)
}

/// Span dimensions of the two grades and whether the grading closes.
#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize)]
pub struct FormationGrading {
    /// Dimension of the span of all couplings A_ij.
    pub coupling_dim: usize,
    /// Dimension of the span of all triangles B_ijk.
    pub triangle_dim: usize,
    /// [A, A] and [B, B] inside span B, [B, A] inside span A — for every pair.
    pub graded: bool,
}

/// Verify the grading by brute force: every bracket of grade representatives
/// is tested for membership in the span of the expected grade.
pub fn verify_formation_grading(agents: usize) -> Result<FormationGrading> {
    if agents < 2 {
        return Err(Error::spec(
            "agents",
            format!("a formation needs at least 2 agents, got {agents}"),
        ));
    }
    let mut apairs = Vec::new();
    for i in 1..=agents {
        for j in i + 1..=agents {
            apairs.push((i, j));
        }
    }
    let mut triples = Vec::new();
    for i in 1..=agents {
        for j in i + 1..=agents {
            for k in j + 1..=agents {
                triples.push((i, j, k));
            }
        }
    }
    let mut a_span = SpanBasis::new(agents);
    let a_mats: Vec<ExactMatrix<Rational>> = apairs
        .iter()
        .map(|&(i, j)| coupling_matrix(agents, i, j))
        .collect::<Result<_>>()?;
    for m in &a_mats {
        a_span.insert(m)?;
    }
    let mut b_span = SpanBasis::new(agents);
    let b_mats: Vec<ExactMatrix<Rational>> = triples
        .iter()
        .map(|&(i, j, k)| triangle_matrix(agents, i, j, k))
        .collect::<Result<_>>()?;
    for m in &b_mats {
        b_span.insert(m)?;
    }

    let mut graded = true;
    for p in &a_mats {
        for q in &a_mats {
            graded &= b_span.membership(&p.commutator(q)?)?;
        }
    }
    for p in &b_mats {
        for q in &a_mats {
            graded &= a_span.membership(&p.commutator(q)?)?;
        }
        for q in &b_mats {
            graded &= b_span.membership(&p.commutator(q)?)?;
        }
    }

    Ok(FormationGrading {
        coupling_dim: a_span.rank(),
        triangle_dim: b_span.rank(),
        graded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coupling_and_triangle_shapes() {
        let a = coupling_matrix(4, 1, 3).unwrap();
        assert_eq!(*a.get(0, 0), rat(1));
        assert_eq!(*a.get(2, 2), rat(1));
        assert_eq!(*a.get(0, 2), rat(-1));
        assert_eq!(*a.get(2, 0), rat(-1));
        assert_eq!(*a.get(1, 1), rat(0));
        assert_eq!(a, coupling_matrix(4, 3, 1).unwrap());
        assert_eq!(a, a.transpose());

        let b = triangle_matrix(4, 1, 2, 3).unwrap();
        assert!(b.is_skew_symmetric());
        assert_eq!(*b.get(0, 1), rat(-1));
        assert_eq!(*b.get(1, 2), rat(-1));
        assert_eq!(*b.get(2, 0), rat(-1));
        // cyclic invariance, swap antisymmetry
        assert_eq!(b, triangle_matrix(4, 2, 3, 1).unwrap());
        assert_eq!(b.neg(), triangle_matrix(4, 2, 1, 3).unwrap());

        assert!(coupling_matrix(4, 2, 2).is_err());
        assert!(coupling_matrix(4, 1, 5).is_err());
        assert!(triangle_matrix(4, 1, 2, 2).is_err());
    }

    #[test]
    fn five_identities_hold_on_five_agents() {
        let report = verify_formation_relations(5).unwrap();
        assert!(report.all_hold, "failures: {:?}", report.failures);
        assert!(report.complete);
        // 2 forms on 60 ordered triples, 2 on 120 quads, 1 on 120 quints
        assert_eq!(report.checked, 2 * 60 + 2 * 120 + 120);
        // on 4 agents the five-index identity is vacuous
        let small = verify_formation_relations(4).unwrap();
        assert!(small.all_hold);
        assert!(!small.complete);
    }

    #[test]
    fn grading_dims_on_five_agents() {
        let grading = verify_formation_grading(5).unwrap();
        assert_eq!(grading.coupling_dim, 10);
        assert_eq!(grading.triangle_dim, 6);
        assert!(grading.graded);
        // the generated algebra is exactly the two grades together
        assert_eq!(
            formation_full_rank(5).unwrap(),
            grading.coupling_dim + grading.triangle_dim
        );
    }

    #[test]
    fn connectivity_matches_rank_for_small_formations() {
        // exhaustive on 4 agents (64 subsets); the 5-agent sweep (1024)
        // lives in the acceptance suite
        let mut apairs = Vec::new();
        for i in 1..=4usize {
            for j in i + 1..=4 {
                apairs.push((i, j));
            }
        }
        let full = all_couplings(4).unwrap();
        for mask in 0u64..1 << apairs.len() {
            let sub = full.subset_by_mask(mask).unwrap();
            assert_eq!(
                formation_controllable(&sub).unwrap(),
                formation_rank_matches(&sub).unwrap(),
                "mask {mask:#b}"
            );
        }
    }

    #[test]
    fn edges_round_trip_and_kind_is_enforced() {
        let gens = GeneratorSet::formation(5, &[(2, 1), (3, 5)]).unwrap();
        assert_eq!(coupling_edges(&gens).unwrap(), vec![(1, 2), (3, 5)]);
        assert_eq!(gens.labels(), vec!["A12", "A35"]);
        let graph = formation_graph(&gens).unwrap();
        assert_eq!(graph.vertex_count(), 5);
        assert!(!graph.is_connected());

        assert!(GeneratorSet::formation(1, &[]).is_err());
        assert!(GeneratorSet::formation(5, &[(1, 1)]).is_err());
        assert!(GeneratorSet::formation(5, &[(1, 2), (2, 1)]).is_err()); // duplicate

        let raw = GeneratorSet::raw(
            5,
            vec![Generator::new("A12", coupling_matrix(5, 1, 2).unwrap())],
        )
        .unwrap();
        assert!(matches!(
            coupling_edges(&raw),
            Err(Error::WrongBasisKind { .. })
        ));
    }

    #[test]
    fn path_formation_is_controllable() {
        let path = GeneratorSet::formation(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert!(formation_controllable(&path).unwrap());
        assert!(formation_rank_matches(&path).unwrap());
        assert_eq!(lie_rank(&path).unwrap(), 16);
    }
}
