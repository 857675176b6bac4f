//! Property-based tests: algebraic laws that must hold for every input, not
//! just the worked examples. Matrix laws run over exact rationals, so an
//! equality here is an identity, not a tolerance check.

use liectrl::graph::SimpleGraph;
use liectrl::perm::{Permutation, TranspositionSequence};
use liectrl::scalar::frac;
use liectrl::son::{standard_basis, standard_indices, tau, tau_inverse};
use liectrl::{GeneratorSet, Rational, RationalMatrix, SpanBasis};
use proptest::prelude::*;

/// Random n x n matrix with small rational entries.
fn matrix(n: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec((-4i64..=4, 1i64..=3), n * n).prop_map(move |cells| {
        RationalMatrix::from_fn(n, |i, j| {
            let (num, den) = cells[i * n + j];
            frac(num, den)
        })
    })
}

/// Random permutation of {1, .., n} via shuffled images.
fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).expect("shuffle keeps images valid"))
}

/// Random simple graph on n vertices as a subset of all possible edges.
fn graph(n: usize) -> impl Strategy<Value = SimpleGraph> {
    let all: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    prop::sample::subsequence(all.clone(), 0..=all.len())
        .prop_map(move |edges| SimpleGraph::from_edges(n, edges).expect("edges are in range"))
}

/// Random labelled tree on n vertices: attach each vertex to an earlier one.
fn tree_edges(n: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec(0.0f64..1.0, n.saturating_sub(1)).prop_map(move |picks| {
        picks
            .iter()
            .enumerate()
            .map(|(k, t)| {
                let v = k + 2; // vertices 2..=n in order
                let parent = 1 + ((t * (v - 1) as f64) as usize).min(v - 2);
                (parent, v)
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jacobi_identity_holds(
        n in 2usize..=4,
        seed in prop::collection::vec((-4i64..=4, 1i64..=3), 48),
    ) {
        let pick = |offset: usize| {
            RationalMatrix::from_fn(n, |i, j| {
                let (num, den) = seed[offset + i * n + j];
                frac(num, den)
            })
        };
        let (a, b, c) = (pick(0), pick(16), pick(32));
        let ab_c = a.commutator(&b).unwrap().commutator(&c).unwrap();
        let bc_a = b.commutator(&c).unwrap().commutator(&a).unwrap();
        let ca_b = c.commutator(&a).unwrap().commutator(&b).unwrap();
        let total = ab_c.add(&bc_a).unwrap().add(&ca_b).unwrap();
        prop_assert!(total.is_zero());
    }

    #[test]
    fn bracket_is_antisymmetric_and_additive(
        (a, b, c) in (2usize..=4).prop_flat_map(|n| (matrix(n), matrix(n), matrix(n))),
    ) {
        let ab = a.commutator(&b).unwrap();
        let ba = b.commutator(&a).unwrap();
        prop_assert!(ab.add(&ba).unwrap().is_zero());
        let left = a.add(&b).unwrap().commutator(&c).unwrap();
        let right = a.commutator(&c).unwrap().add(&b.commutator(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn composition_is_associative_and_acts_right_to_left(
        (a, b, c) in (1usize..=7).prop_flat_map(|n| (permutation(n), permutation(n), permutation(n))),
    ) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let ab = a.compose(&b).unwrap();
        for x in 1..=a.degree() {
            prop_assert_eq!(ab.apply(x).unwrap(), a.apply(b.apply(x).unwrap()).unwrap());
        }
        let e = Permutation::identity(a.degree());
        prop_assert_eq!(a.compose(&a.inverse()).unwrap(), e);
    }

    #[test]
    fn cycle_notation_round_trips(p in (1usize..=8).prop_flat_map(permutation)) {
        let text = p.to_string();
        let back = Permutation::parse(p.degree(), &text).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn reversed_transposition_sequence_inverts_the_product(
        (n, pairs) in (2usize..=6).prop_flat_map(|n| {
            let all: Vec<(usize, usize)> = (1..=n)
                .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
                .collect();
            let len = all.len();
            (Just(n), prop::collection::vec(prop::sample::select(all), 0..=2 * len))
        }),
    ) {
        let forward = TranspositionSequence::new(n, pairs.clone()).unwrap().product();
        let mut rev = pairs;
        rev.reverse();
        let backward = TranspositionSequence::new(n, rev).unwrap().product();
        prop_assert!(forward.compose(&backward).unwrap().is_identity());
    }

    #[test]
    fn triangular_closure_is_monotone_idempotent_and_component_preserving(
        g in (2usize..=6).prop_flat_map(graph),
    ) {
        let trace = g.triangular_closure();
        let closed = trace.closure();
        // contains the original edges
        for (a, b) in g.edges() {
            prop_assert!(closed.has_edge(a, b));
        }
        // idempotent
        let again = closed.triangular_closure();
        prop_assert_eq!(again.steps(), 0);
        prop_assert_eq!(again.closure(), closed);
        // connectivity structure is untouched
        prop_assert_eq!(closed.components(), g.components());
        // every component becomes a clique, so the closure is determined
        // by the component partition alone
        for block in closed.components() {
            for (ai, &a) in block.iter().enumerate() {
                for &b in &block[ai + 1..] {
                    prop_assert!(closed.has_edge(a, b));
                }
            }
        }
    }

    #[test]
    fn closure_is_monotone_in_the_edge_set(
        (g, extra) in (3usize..=6).prop_flat_map(|n| (graph(n), graph(n))),
    ) {
        let mut bigger = g.clone();
        for (a, b) in extra.edges() {
            bigger.add_edge(a, b).unwrap();
        }
        let small = g.triangular_closure();
        let large = bigger.triangular_closure();
        for (a, b) in small.closure().edges() {
            prop_assert!(large.closure().has_edge(a, b));
        }
    }

    #[test]
    fn generator_graph_round_trips(
        (n, subset) in (2usize..=5).prop_flat_map(|n| {
            let count = standard_basis(n).len();
            (Just(n), prop::sample::subsequence((0..count).collect::<Vec<_>>(), 0..=count))
        }),
    ) {
        let all = standard_basis(n);
        let chosen: Vec<_> = subset.iter().map(|&k| all[k]).collect();
        let gens: GeneratorSet<Rational> = GeneratorSet::standard_son(n, &chosen).unwrap();
        let back: GeneratorSet<Rational> = tau_inverse(&tau(&gens).unwrap()).unwrap();
        prop_assert_eq!(
            standard_indices(&back).unwrap(),
            standard_indices(&gens).unwrap()
        );
    }

    #[test]
    fn span_membership_closes_over_linear_combinations(
        (n, mats, c1, c2) in (2usize..=3).prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(matrix(n), 1..=4),
                -3i64..=3,
                -3i64..=3,
            )
        }),
    ) {
        let mut span = SpanBasis::new(n);
        for m in &mats {
            span.insert(m).unwrap();
            prop_assert!(span.membership(m).unwrap());
        }
        prop_assert!(span.rank() <= n * n);
        // rank never counts a dependent vector twice
        let mut again = SpanBasis::new(n);
        for m in mats.iter().chain(mats.iter()) {
            again.insert(m).unwrap();
        }
        prop_assert_eq!(again.rank(), span.rank());
        // any linear combination of inserted matrices is a member
        let combo = mats[0]
            .scale(&frac(c1, 1))
            .add(&mats[mats.len() - 1].scale(&frac(c2, 1)))
            .unwrap();
        prop_assert!(span.membership(&combo).unwrap());
    }

    #[test]
    fn every_ordering_of_a_tree_composes_to_a_full_cycle(
        (n, edges) in (2usize..=7).prop_flat_map(|n| {
            (Just(n), tree_edges(n).prop_shuffle())
        }),
    ) {
        let product = TranspositionSequence::new(n, edges).unwrap().product();
        prop_assert!(product.is_full_cycle());
        let orbit = product.orbit_partition();
        prop_assert_eq!(orbit.blocks().len(), 1);
        prop_assert_eq!(orbit.submanifold_dim(), n * (n - 1) / 2);
    }
}
