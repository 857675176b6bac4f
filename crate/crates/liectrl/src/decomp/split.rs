//! The split basis of so(4): six half-integer matrices forming two
//! commuting copies of so(3).
//!
//! With w_ij the standard basis elements of so(4),
//!
//! ```text
//! A1 = (w23 + w14)/2   B1 = (w13 + w24)/2
//! A2 = (w13 - w24)/2   B2 = (w14 - w23)/2
//! A3 = (w12 + w34)/2   B3 = (w12 - w34)/2
//! ```
//!
//! satisfy [A_i, A_j] = A_k and [B_i, B_j] = B_k cyclically while every
//! [A_i, B_j] vanishes. A system drawn from this basis is controllable
//! exactly when each of the two triangle graphs (one per copy) is
//! connected, which needs at least two A's and two B's — hence at least
//! four controls.

use crate::decomp::DecompComponent;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::lie::{BasisKind, Generator, GeneratorSet};
use crate::matrix::ExactMatrix;
use crate::scalar::{frac, Rational};
use crate::son::omega;

/// The six members of the split basis.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum SplitGen {
    A1,
    A2,
    A3,
    B1,
    B2,
    B3,
}

pub const SPLIT_BASIS: [SplitGen; 6] = [
    SplitGen::A1,
    SplitGen::A2,
    SplitGen::A3,
    SplitGen::B1,
    SplitGen::B2,
    SplitGen::B3,
];

impl SplitGen {
    pub fn label(self) -> &'static str {
        match self {
            SplitGen::A1 => "A1",
            SplitGen::A2 => "A2",
            SplitGen::A3 => "A3",
            SplitGen::B1 => "B1",
            SplitGen::B2 => "B2",
            SplitGen::B3 => "B3",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        SPLIT_BASIS
            .iter()
            .copied()
            .find(|g| g.label() == text)
            .ok_or_else(|| {
                Error::spec(
                    "generators",
                    format!("'{text}' is not a split-basis member (A1..A3, B1..B3)"),
                )
            })
    }

    /// True for the A-copy, false for the B-copy.
    pub fn is_a(self) -> bool {
        matches!(self, SplitGen::A1 | SplitGen::A2 | SplitGen::A3)
    }

    /// 1-based position within its copy.
    pub fn slot(self) -> usize {
        match self {
            SplitGen::A1 | SplitGen::B1 => 1,
            SplitGen::A2 | SplitGen::B2 => 2,
            SplitGen::A3 | SplitGen::B3 => 3,
        }
    }
}

/// The matrix of a split-basis member (entries are halves).
pub fn split_matrix(g: SplitGen) -> ExactMatrix<Rational> {
    let w = |i, j| omega::<Rational>(4, i, j).expect("indices are static and valid");
    let half = frac(1, 2);
    let combo = |p: ExactMatrix<Rational>, q: ExactMatrix<Rational>, minus: bool| {
        let sum = if minus {
            p.sub(&q).expect("same dimension")
        } else {
            p.add(&q).expect("same dimension")
        };
        sum.scale(&half)
    };
    match g {
        SplitGen::A1 => combo(w(2, 3), w(1, 4), false),
        SplitGen::A2 => combo(w(1, 3), w(2, 4), true),
        SplitGen::A3 => combo(w(1, 2), w(3, 4), false),
        SplitGen::B1 => combo(w(1, 3), w(2, 4), false),
        SplitGen::B2 => combo(w(1, 4), w(2, 3), true),
        SplitGen::B3 => combo(w(1, 2), w(3, 4), true),
    }
}

impl GeneratorSet<Rational> {
    /// Generators drawn from the split basis of so(4).
    pub fn so4_split(members: &[SplitGen]) -> Result<Self> {
        let gens = members
            .iter()
            .map(|&g| Generator::new(g.label(), split_matrix(g)))
            .collect();
        Self::with_kind(4, BasisKind::So4Split, gens)
    }
}

/// Recover the split-basis members of a set, in generator order.
pub fn split_members(gens: &GeneratorSet<Rational>) -> Result<Vec<SplitGen>> {
    if gens.kind() != BasisKind::So4Split {
        return Err(Error::WrongBasisKind {
            expected: "so4_split".into(),
            found: gens.kind().name().into(),
        });
    }
    gens.generators()
        .iter()
        .map(|g| {
            let member = SplitGen::parse(g.label())?;
            if *g.matrix() != split_matrix(member) {
                return Err(Error::WrongBasisKind {
                    expected: "so4_split".into(),
                    found: format!("generator '{}' does not match its split matrix", g.label()),
                });
            }
            Ok(member)
        })
        .collect()
}

/// Check the whole bracket table of the split basis exactly: cyclic
/// so(3) relations within each copy, zero across copies, zero on the
/// diagonal — all 36 ordered pairs.
pub fn verify_split_relations() -> bool {
    let eps = |i: usize, j: usize| -> Option<(Rational, usize)> {
        // [e_i, e_j] = eps_ijk e_k in a cyclic so(3) triple
        match (i, j) {
            (1, 2) => Some((Rational::from_integer(1.into()), 3)),
            (2, 3) => Some((Rational::from_integer(1.into()), 1)),
            (3, 1) => Some((Rational::from_integer(1.into()), 2)),
            (2, 1) => Some((Rational::from_integer((-1).into()), 3)),
            (3, 2) => Some((Rational::from_integer((-1).into()), 1)),
            (1, 3) => Some((Rational::from_integer((-1).into()), 2)),
            _ => None,
        }
    };
    let member = |a: bool, slot: usize| {
        SPLIT_BASIS
            .iter()
            .copied()
            .find(|g| g.is_a() == a && g.slot() == slot)
            .expect("slot in 1..=3")
    };
    for &p in &SPLIT_BASIS {
        for &q in &SPLIT_BASIS {
            let got = split_matrix(p)
                .commutator(&split_matrix(q))
                .expect("same dimension");
            let expected = if p.is_a() != q.is_a() {
                ExactMatrix::zero(4)
            } else {
                match eps(p.slot(), q.slot()) {
                    None => ExactMatrix::zero(4),
                    Some((c, k)) => split_matrix(member(p.is_a(), k)).scale(&c),
                }
            };
            if got != expected {
                return false;
            }
        }
    }
    true
}

/// The two-triangle graph of a split-basis set: vertices 1..3 carry the
/// A-copy (A_i is the edge between triangle corners i and i+1, cyclically),
/// vertices 4..6 likewise carry the B-copy.
pub fn split_graph(gens: &GeneratorSet<Rational>) -> Result<SimpleGraph> {
    let members = split_members(gens)?;
    SimpleGraph::from_edges(6, members.iter().map(|&m| split_edge(m)))
}

fn split_edge(m: SplitGen) -> (usize, usize) {
    let offset = if m.is_a() { 0 } else { 3 };
    let (a, b) = match m.slot() {
        1 => (1, 2),
        2 => (2, 3),
        _ => (1, 3),
    };
    (a + offset, b + offset)
}

/// Vertex labels for DOT output of [`split_graph`].
pub fn split_vertex_labels() -> Vec<String> {
    ["v1", "v2", "v3", "w1", "w2", "w3"]
        .iter()
        .map(|s| s.to_string())
        .collect()
}

/// The declared decomposition so(4) = (A-copy) + (B-copy) for
/// [`crate::decomp::non_intertwining_controllable`].
pub fn split_decomposition(gens: &GeneratorSet<Rational>) -> Result<Vec<DecompComponent>> {
    let members = split_members(gens)?;
    let mut a = DecompComponent {
        name: "A-copy".into(),
        vertex_count: 3,
        edges: Vec::new(),
    };
    let mut b = DecompComponent {
        name: "B-copy".into(),
        vertex_count: 3,
        edges: Vec::new(),
    };
    for (pos, &m) in members.iter().enumerate() {
        let (x, y) = split_edge(m);
        if m.is_a() {
            a.edges.push((pos, (x, y)));
        } else {
            b.edges.push((pos, (x - 3, y - 3)));
        }
    }
    Ok(vec![a, b])
}

/// Split-basis controllability: each copy's triangle graph is connected.
/// Equivalent to the rank test at full dimension 6.
pub fn split_controllable(gens: &GeneratorSet<Rational>) -> Result<bool> {
    let members = split_members(gens)?;
    for a_copy in [true, false] {
        let edges: Vec<(usize, usize)> = members
            .iter()
            .filter(|m| m.is_a() == a_copy)
            .map(|&m| {
                let (x, y) = split_edge(m);
                if a_copy {
                    (x, y)
                } else {
                    (x - 3, y - 3)
                }
            })
            .collect();
        if !SimpleGraph::from_edges(3, edges)?.is_connected() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::non_intertwining_controllable;
    use crate::lie::larc_controllable;
    use crate::scalar::rat;

    #[test]
    fn relation_table_holds_exactly() {
        assert!(verify_split_relations());
    }

    #[test]
    fn sample_relations() {
        let m = split_matrix;
        let [a1, a2, a3] = [m(SplitGen::A1), m(SplitGen::A2), m(SplitGen::A3)];
        let [b1, b2, b3] = [m(SplitGen::B1), m(SplitGen::B2), m(SplitGen::B3)];
        assert_eq!(a1.commutator(&a2).unwrap(), a3);
        assert_eq!(b2.commutator(&b3).unwrap(), b1);
        assert_eq!(a2.commutator(&a1).unwrap(), a3.neg());
        assert!(a2.commutator(&b3).unwrap().is_zero());
        assert!(a1.commutator(&a1).unwrap().is_zero());
        // entries are genuine halves
        assert_eq!(*a1.get(1, 2), frac(1, 2));
        assert_eq!(*a1.get(0, 3), frac(1, 2));
        assert_eq!(*a1.get(3, 0), frac(-1, 2));
        assert_eq!(*a1.get(0, 0), rat(0));
    }

    #[test]
    fn split_members_round_trip_and_reject_foreign_sets() {
        let gens = GeneratorSet::so4_split(&[SplitGen::A1, SplitGen::B2, SplitGen::B3]).unwrap();
        assert_eq!(
            split_members(&gens).unwrap(),
            vec![SplitGen::A1, SplitGen::B2, SplitGen::B3]
        );
        let raw =
            GeneratorSet::raw(4, vec![Generator::new("A1", split_matrix(SplitGen::A1))]).unwrap();
        assert!(matches!(
            split_members(&raw),
            Err(Error::WrongBasisKind { .. })
        ));
    }

    #[test]
    fn controllable_needs_two_from_each_copy() {
        use SplitGen::*;
        let yes = GeneratorSet::so4_split(&[A1, A2, B1, B2]).unwrap();
        assert!(split_controllable(&yes).unwrap());
        assert!(larc_controllable(&yes, 6).unwrap());
        // one whole copy missing
        let no = GeneratorSet::so4_split(&[A1, A2, A3]).unwrap();
        assert!(!split_controllable(&no).unwrap());
        assert!(!larc_controllable(&no, 6).unwrap());
        // three generators can never do it
        let no = GeneratorSet::so4_split(&[A1, A2, B1]).unwrap();
        assert!(!split_controllable(&no).unwrap());
    }

    #[test]
    fn exhaustive_agreement_with_rank_test() {
        for mask in 0u64..64 {
            let members: Vec<SplitGen> = (0..6)
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| SPLIT_BASIS[k])
                .collect();
            let gens = GeneratorSet::so4_split(&members).unwrap();
            let by_graph = split_controllable(&gens).unwrap();
            let by_rank = larc_controllable(&gens, 6).unwrap();
            assert_eq!(by_graph, by_rank, "members {members:?}");
            // count rule: connected triangles need two edges each
            let na = members.iter().filter(|m| m.is_a()).count();
            let nb = members.len() - na;
            assert_eq!(by_graph, na >= 2 && nb >= 2, "members {members:?}");
        }
    }

    #[test]
    fn decomposition_reduces_to_split_test() {
        use SplitGen::*;
        for members in [
            vec![A1, A2, B1, B2],
            vec![A1, A2, A3],
            vec![A1, B1],
            vec![A1, A3, B2, B3],
            vec![],
        ] {
            let gens = GeneratorSet::so4_split(&members).unwrap();
            let comps = split_decomposition(&gens).unwrap();
            assert_eq!(
                non_intertwining_controllable(&gens, &comps).unwrap(),
                split_controllable(&gens).unwrap(),
                "members {members:?}"
            );
        }
    }

    #[test]
    fn split_graph_places_copies_on_disjoint_triangles() {
        use SplitGen::*;
        let gens = GeneratorSet::so4_split(&[A1, A3, B2]).unwrap();
        let graph = split_graph(&gens).unwrap();
        let edges: Vec<(usize, usize)> = graph.edges().collect();
        assert_eq!(edges, vec![(1, 2), (1, 3), (5, 6)]);
    }
}
