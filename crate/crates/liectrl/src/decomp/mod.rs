//! Decomposition-based controllability tests.
//!
//! When the target Lie algebra splits as a direct sum of subalgebras whose
//! cross-brackets vanish (a non-intertwining decomposition), the system is
//! controllable exactly when every summand's generator graph is connected.
//! [`non_intertwining_controllable`] implements that reduction after
//! verifying the vanishing cross-brackets — a nonzero cross-bracket is an
//! error in the declared decomposition, never a silent verdict.
//!
//! The submodules instantiate it: [`split`] for the two-copies-of-so(3)
//! split of so(4), [`sl3`] for the Cartan-style basis of sl(3, C) with its
//! paired-permutation cycle test, and [`formation`] for the symmetric
//! couplings of a formation system.

pub mod formation;
pub mod sl3;
pub mod split;

use crate::error::{Error, Result};
use crate::graph::{Edge, SimpleGraph};
use crate::lie::GeneratorSet;
use crate::scalar::Scalar;

/// One summand of a declared non-intertwining decomposition: a named
/// component graph plus the generators (by position in the set) that map
/// onto its edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecompComponent {
    pub name: String,
    pub vertex_count: usize,
    /// (generator position, edge of this component's graph).
    pub edges: Vec<(usize, Edge)>,
}

impl DecompComponent {
    pub fn graph(&self) -> Result<SimpleGraph> {
        SimpleGraph::from_edges(self.vertex_count, self.edges.iter().map(|&(_, e)| e))
    }
}

/// Decide controllability through a declared decomposition: connected
/// summand graphs in conjunction. Every generator must belong to exactly
/// one component, and generators of different components must commute
/// exactly; a nonzero cross-bracket yields [`Error::ComponentsInteract`].
pub fn non_intertwining_controllable<S: Scalar>(
    gens: &GeneratorSet<S>,
    components: &[DecompComponent],
) -> Result<bool> {
    let mut owner: Vec<Option<usize>> = vec![None; gens.len()];
    for (c, comp) in components.iter().enumerate() {
        for &(pos, _) in &comp.edges {
            let slot = owner.get_mut(pos).ok_or_else(|| {
                Error::spec(
                    "components",
                    format!("generator position {pos} out of range"),
                )
            })?;
            if slot.is_some() {
                return Err(Error::spec(
                    "components",
                    format!("generator position {pos} assigned to two components"),
                ));
            }
            *slot = Some(c);
        }
    }
    if let Some(pos) = owner.iter().position(|o| o.is_none()) {
        return Err(Error::spec(
            "components",
            format!("generator position {pos} not assigned to any component"),
        ));
    }
    let gs = gens.generators();
    for p in 0..gs.len() {
        for q in (p + 1)..gs.len() {
            if owner[p] != owner[q] && !gs[p].matrix().commutator(gs[q].matrix())?.is_zero() {
                return Err(Error::ComponentsInteract {
                    left: gs[p].label().to_string(),
                    right: gs[q].label().to_string(),
                });
            }
        }
    }
    for comp in components {
        if !comp.graph()?.is_connected() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::BasisKind;
    use crate::scalar::Rational;
    use crate::son::{graph_controllable, standard_indices, BasisIndex};

    fn son_set(n: usize, pairs: &[(usize, usize)]) -> GeneratorSet<Rational> {
        let indices: Vec<BasisIndex> = pairs
            .iter()
            .map(|&(i, j)| BasisIndex::new(n, i, j).unwrap())
            .collect();
        GeneratorSet::standard_son(n, &indices).unwrap()
    }

    fn single_component<S: Scalar>(gens: &GeneratorSet<S>) -> DecompComponent {
        assert_eq!(gens.kind(), BasisKind::StandardSon);
        let edges = standard_indices(gens)
            .unwrap()
            .iter()
            .enumerate()
            .map(|(pos, idx)| (pos, idx.edge()))
            .collect();
        DecompComponent {
            name: "so(n)".into(),
            vertex_count: gens.matrix_dim(),
            edges,
        }
    }

    #[test]
    fn single_summand_reduces_to_graph_connectivity() {
        for pairs in [
            &[(1, 2), (2, 3), (3, 4)][..],
            &[(1, 2), (3, 4)][..],
            &[(1, 2), (1, 3), (1, 4)][..],
        ] {
            let gens = son_set(4, pairs);
            let comp = single_component(&gens);
            assert_eq!(
                non_intertwining_controllable(&gens, &[comp]).unwrap(),
                graph_controllable(&gens).unwrap()
            );
        }
    }

    #[test]
    fn interacting_components_error_instead_of_verdict() {
        // w12 and w23 do not commute, so splitting them into different
        // summands is an invalid decomposition
        let gens = son_set(3, &[(1, 2), (2, 3)]);
        let comps = [
            DecompComponent {
                name: "left".into(),
                vertex_count: 3,
                edges: vec![(0, (1, 2))],
            },
            DecompComponent {
                name: "right".into(),
                vertex_count: 3,
                edges: vec![(1, (1, 2))],
            },
        ];
        let err = non_intertwining_controllable(&gens, &comps).unwrap_err();
        assert!(matches!(
            err,
            Error::ComponentsInteract { left, right } if left == "w12" && right == "w23"
        ));
    }

    #[test]
    fn commuting_summands_combine_verdicts() {
        // {1,2} and {3,4} blocks commute; each graph is a single edge on
        // its own two vertices, so both summands are connected
        let gens = son_set(4, &[(1, 2), (3, 4)]);
        let comps = [
            DecompComponent {
                name: "left".into(),
                vertex_count: 2,
                edges: vec![(0, (1, 2))],
            },
            DecompComponent {
                name: "right".into(),
                vertex_count: 2,
                edges: vec![(1, (1, 2))],
            },
        ];
        assert!(non_intertwining_controllable(&gens, &comps).unwrap());
        // drop one edge: its summand becomes disconnected
        let gens = son_set(4, &[(1, 2)]);
        let comps = [
            DecompComponent {
                name: "left".into(),
                vertex_count: 2,
                edges: vec![(0, (1, 2))],
            },
            DecompComponent {
                name: "right".into(),
                vertex_count: 2,
                edges: vec![],
            },
        ];
        assert!(!non_intertwining_controllable(&gens, &comps).unwrap());
    }

    #[test]
    fn unassigned_and_doubly_assigned_generators_are_rejected() {
        let gens = son_set(4, &[(1, 2), (3, 4)]);
        let missing = [DecompComponent {
            name: "left".into(),
            vertex_count: 2,
            edges: vec![(0, (1, 2))],
        }];
        assert!(non_intertwining_controllable(&gens, &missing).is_err());
        let doubled = [
            DecompComponent {
                name: "left".into(),
                vertex_count: 2,
                edges: vec![(0, (1, 2)), (1, (1, 2))],
            },
            DecompComponent {
                name: "right".into(),
                vertex_count: 2,
                edges: vec![(1, (1, 2))],
            },
        ];
        assert!(non_intertwining_controllable(&gens, &doubled).is_err());
    }
}
