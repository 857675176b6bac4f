//! Exhaustive subset sweeps: run every backend on every subset of a
//! generator family and cross-check the verdicts.
//!
//! Sweeps are the empirical arbiter of the library: each one confirms (or
//! surfaces a counterexample to) an equivalence between a fast structural
//! test and the authoritative rank computation. All subset computations are
//! pure, so they fan out across a worker pool; results are merged back in
//! subset-mask order, making every report deterministic.
//!
//! Subset counts grow as 2^k in the number of generators, so each sweep
//! refuses oversized inputs unless `allow_large` is passed.

use crate::decomp::formation::{coupling_edges, formation_controllable, formation_full_rank};
use crate::decomp::sl3::{sl3_cycle_controllable, SL3_BASIS};
use crate::decomp::split::{split_controllable, SPLIT_BASIS};
use crate::error::{Error, Result};
use crate::graph::Edge;
use crate::lie::{lie_rank, GeneratorSet};
use crate::scalar::Rational;
use crate::son::{
    cycle_controllable, graph_controllable, son_dim, standard_basis, submanifold_orbits,
};
use rayon::prelude::*;
use serde::Serialize;

/// Environment variable overriding the sweep worker count.
pub const THREADS_ENV: &str = "LIECTRL_THREADS";

fn thread_count_from(value: Option<&str>) -> Result<Option<usize>> {
    match value {
        None => Ok(None),
        Some(raw) => {
            let raw = raw.trim();
            if raw.is_empty() {
                return Ok(None);
            }
            match raw.parse::<usize>() {
                Ok(0) | Err(_) => Err(Error::spec(
                    THREADS_ENV,
                    format!("expected a positive integer worker count, got '{raw}'"),
                )),
                Ok(k) => Ok(Some(k)),
            }
        }
    }
}

/// A worker pool sized by `LIECTRL_THREADS` (library default when unset).
pub fn worker_pool() -> Result<rayon::ThreadPool> {
    let env = std::env::var(THREADS_ENV).ok();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = thread_count_from(env.as_deref())? {
        builder = builder.num_threads(k);
    }
    builder
        .build()
        .map_err(|e| Error::spec(THREADS_ENV, format!("worker pool construction failed: {e}")))
}

fn check_mask_width(generators: usize, what: &str) -> Result<()> {
    if generators >= 64 {
        return Err(Error::TooLarge {
            what: what.to_string(),
            count: format!("2^{generators}"),
        });
    }
    Ok(())
}

fn sweep_masks<R, F>(generators: usize, row: F) -> Result<Vec<R>>
where
    R: Send,
    F: Fn(u64) -> Result<R> + Send + Sync,
{
    let pool = worker_pool()?;
    pool.install(|| (0u64..1 << generators).into_par_iter().map(row).collect())
}

/// One subset of a standard so(n) generator family, with every backend's
/// answer on it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SonRow {
    /// Bit k set means generator k of the family is in the subset.
    pub mask: u64,
    pub labels: Vec<String>,
    pub larc: bool,
    pub graph: bool,
    pub cycle: bool,
    pub lie_rank: usize,
    pub submanifold_dim: usize,
}

impl SonRow {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn backends_agree(&self) -> bool {
        self.larc == self.graph && self.graph == self.cycle
    }
}

/// Result of sweeping every subset of the full standard basis of so(n).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SonSweep {
    pub n: usize,
    pub full_dim: usize,
    pub rows: Vec<SonRow>,
    pub controllable_count: usize,
    pub min_controllable_size: Option<usize>,
    /// Masks where the three backends disagree (empty on any sound run).
    pub backend_disagreements: Vec<u64>,
    /// Masks where the orbit dimension formula misses the closure rank.
    pub submanifold_mismatches: Vec<u64>,
}

impl SonSweep {
    pub fn all_agree(&self) -> bool {
        self.backend_disagreements.is_empty() && self.submanifold_mismatches.is_empty()
    }
}

/// Run all three backends on every subset of the standard basis of so(n).
/// Refuses n > 6 without `allow_large` (the subset count is 2^(n(n-1)/2)).
pub fn sweep_son(n: usize, allow_large: bool) -> Result<SonSweep> {
    if n < 1 {
        return Err(Error::spec("n", "sweep needs n >= 1".to_string()));
    }
    let dim = son_dim(n);
    check_mask_width(dim, "standard-basis subset sweep")?;
    if n > 6 && !allow_large {
        return Err(Error::TooLarge {
            what: "standard-basis subset sweep".to_string(),
            count: format!("2^{dim}"),
        });
    }
    let full: GeneratorSet<Rational> = GeneratorSet::standard_son(n, &standard_basis(n))?;
    let full_dim = dim;
    let rows = sweep_masks(dim, |mask| {
        let sub = full.subset_by_mask(mask)?;
        let rank = lie_rank(&sub)?;
        let (cycle, _witness) = cycle_controllable(&sub)?;
        Ok(SonRow {
            mask,
            labels: sub.labels().iter().map(|s| s.to_string()).collect(),
            larc: rank == full_dim,
            graph: graph_controllable(&sub)?,
            cycle,
            lie_rank: rank,
            submanifold_dim: submanifold_orbits(&sub)?.submanifold_dim(),
        })
    })?;
    let controllable_count = rows.iter().filter(|r| r.larc).count();
    let min_controllable_size = rows.iter().filter(|r| r.larc).map(|r| r.size()).min();
    let backend_disagreements = rows
        .iter()
        .filter(|r| !r.backends_agree())
        .map(|r| r.mask)
        .collect();
    let submanifold_mismatches = rows
        .iter()
        .filter(|r| r.submanifold_dim != r.lie_rank)
        .map(|r| r.mask)
        .collect();
    Ok(SonSweep {
        n,
        full_dim,
        rows,
        controllable_count,
        min_controllable_size,
        backend_disagreements,
        submanifold_mismatches,
    })
}

/// One subset of the so(4) split basis with both verdicts on it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SplitRow {
    pub mask: u64,
    pub labels: Vec<String>,
    pub split: bool,
    pub larc: bool,
    pub lie_rank: usize,
}

/// Result of sweeping all 64 subsets of the split basis of so(4).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SplitSweep {
    pub rows: Vec<SplitRow>,
    pub controllable_count: usize,
    pub min_controllable_size: Option<usize>,
    pub disagreements: Vec<u64>,
}

impl SplitSweep {
    pub fn all_agree(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Compare the two-triangle connectivity test against the rank test (full
/// dimension 6) on every subset of the split basis.
pub fn sweep_split() -> Result<SplitSweep> {
    let full = GeneratorSet::so4_split(&SPLIT_BASIS)?;
    let rows = sweep_masks(SPLIT_BASIS.len(), |mask| {
        let sub = full.subset_by_mask(mask)?;
        let rank = lie_rank(&sub)?;
        Ok(SplitRow {
            mask,
            labels: sub.labels().iter().map(|s| s.to_string()).collect(),
            split: split_controllable(&sub)?,
            larc: rank == 6,
            lie_rank: rank,
        })
    })?;
    let controllable_count = rows.iter().filter(|r| r.larc).count();
    let min_controllable_size = rows.iter().filter(|r| r.larc).map(|r| r.labels.len()).min();
    let disagreements = rows
        .iter()
        .filter(|r| r.split != r.larc)
        .map(|r| r.mask)
        .collect();
    Ok(SplitSweep {
        rows,
        controllable_count,
        min_controllable_size,
        disagreements,
    })
}

/// One subset of the sl(3, C) basis with both verdicts on it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Sl3Row {
    pub mask: u64,
    pub labels: Vec<String>,
    pub cycle: bool,
    pub larc: bool,
    pub lie_rank: usize,
}

/// Result of sweeping all 256 subsets of the sl(3, C) basis. The cycle
/// criterion is necessary but not sufficient, so `counterexamples` lists
/// the subsets where it overshoots the rank verdict — they are reported,
/// never reconciled away.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Sl3Sweep {
    pub rows: Vec<Sl3Row>,
    pub controllable_count: usize,
    pub counterexamples: Vec<Sl3Row>,
}

/// Compare the letter-counting cycle criterion against the complex rank
/// test (full dimension 8) on every subset of the sl(3, C) basis.
pub fn sweep_sl3() -> Result<Sl3Sweep> {
    let full = GeneratorSet::sl3_cartan(&SL3_BASIS)?;
    let rows = sweep_masks(SL3_BASIS.len(), |mask| {
        let sub = full.subset_by_mask(mask)?;
        let rank = lie_rank(&sub)?;
        Ok(Sl3Row {
            mask,
            labels: sub.labels().iter().map(|s| s.to_string()).collect(),
            cycle: sl3_cycle_controllable(&sub)?,
            larc: rank == 8,
            lie_rank: rank,
        })
    })?;
    let controllable_count = rows.iter().filter(|r| r.larc).count();
    let counterexamples = rows.iter().filter(|r| r.cycle != r.larc).cloned().collect();
    Ok(Sl3Sweep {
        rows,
        controllable_count,
        counterexamples,
    })
}

/// One coupling subset of a formation with both verdicts on it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FormationRow {
    pub mask: u64,
    pub edges: Vec<Edge>,
    pub connected: bool,
    pub rank_matches: bool,
    pub lie_rank: usize,
}

/// Result of sweeping every coupling subset of a formation.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FormationSweep {
    pub agents: usize,
    /// Rank of the complete coupling algebra, computed by closure.
    pub full_rank: usize,
    pub rows: Vec<FormationRow>,
    pub controllable_count: usize,
    pub min_controllable_size: Option<usize>,
    pub disagreements: Vec<u64>,
}

impl FormationSweep {
    pub fn all_agree(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Compare coupling-graph connectivity against rank equality with the
/// complete coupling algebra, over every subset of the agent pairs.
/// Refuses more than 5 agents without `allow_large`.
pub fn sweep_formation(agents: usize, allow_large: bool) -> Result<FormationSweep> {
    let mut pairs = Vec::new();
    for i in 1..=agents {
        for j in i + 1..=agents {
            pairs.push((i, j));
        }
    }
    check_mask_width(pairs.len(), "formation coupling sweep")?;
    if agents > 5 && !allow_large {
        return Err(Error::TooLarge {
            what: "formation coupling sweep".to_string(),
            count: format!("2^{}", pairs.len()),
        });
    }
    let full = GeneratorSet::formation(agents, &pairs)?;
    let full_rank = formation_full_rank(agents)?;
    let rows = sweep_masks(pairs.len(), |mask| {
        let sub = full.subset_by_mask(mask)?;
        let rank = lie_rank(&sub)?;
        Ok(FormationRow {
            mask,
            edges: coupling_edges(&sub)?,
            connected: formation_controllable(&sub)?,
            rank_matches: rank == full_rank,
            lie_rank: rank,
        })
    })?;
    let controllable_count = rows.iter().filter(|r| r.connected).count();
    let min_controllable_size = rows
        .iter()
        .filter(|r| r.connected)
        .map(|r| r.edges.len())
        .min();
    let disagreements = rows
        .iter()
        .filter(|r| r.connected != r.rank_matches)
        .map(|r| r.mask)
        .collect();
    Ok(FormationSweep {
        agents,
        full_rank,
        rows,
        controllable_count,
        min_controllable_size,
        disagreements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thread_env_parsing() {
        assert_eq!(thread_count_from(None).unwrap(), None);
        assert_eq!(thread_count_from(Some("")).unwrap(), None);
        assert_eq!(thread_count_from(Some(" 4 ")).unwrap(), Some(4));
        assert!(thread_count_from(Some("0")).is_err());
        assert!(thread_count_from(Some("many")).is_err());
    }

    #[test]
    fn small_son_sweeps_are_sound_with_known_counts() {
        let two = sweep_son(2, false).unwrap();
        assert_eq!(two.rows.len(), 2);
        assert_eq!(two.controllable_count, 1);
        assert_eq!(two.min_controllable_size, Some(1));
        assert!(two.all_agree());

        let three = sweep_son(3, false).unwrap();
        assert_eq!(three.rows.len(), 8);
        assert_eq!(three.controllable_count, 4);
        assert_eq!(three.min_controllable_size, Some(2));
        assert!(three.all_agree());

        let four = sweep_son(4, false).unwrap();
        assert_eq!(four.rows.len(), 64);
        assert_eq!(four.controllable_count, 38);
        assert_eq!(four.min_controllable_size, Some(3));
        assert!(four.all_agree());
    }

    #[test]
    fn rows_come_back_in_mask_order() {
        let sweep = sweep_son(3, false).unwrap();
        for (k, row) in sweep.rows.iter().enumerate() {
            assert_eq!(row.mask, k as u64);
        }
        assert_eq!(sweep.rows[0].labels, Vec::<String>::new());
        assert_eq!(sweep.rows.last().unwrap().labels, vec!["w12", "w13", "w23"]);
    }

    #[test]
    fn oversized_sweeps_are_refused() {
        assert!(matches!(sweep_son(7, false), Err(Error::TooLarge { .. })));
        assert!(matches!(
            sweep_formation(6, false),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(sweep_son(0, false), Err(Error::Spec { .. })));
    }

    #[test]
    fn split_sweep_counts() {
        let sweep = sweep_split().unwrap();
        assert_eq!(sweep.rows.len(), 64);
        assert!(sweep.all_agree());
        // two of three edges per triangle, independently: (3 + 1)^2
        assert_eq!(sweep.controllable_count, 16);
        assert_eq!(sweep.min_controllable_size, Some(4));
    }

    #[test]
    fn sl3_sweep_surfaces_the_sufficiency_gap() {
        let sweep = sweep_sl3().unwrap();
        assert_eq!(sweep.rows.len(), 256);
        assert_eq!(sweep.counterexamples.len(), 28);
        for cx in &sweep.counterexamples {
            // every counterexample passes the cycle test yet misses full rank
            assert!(cx.cycle && !cx.larc, "labels {:?}", cx.labels);
            assert!(cx.labels.iter().any(|l| l == "X3"));
            assert!(cx.labels.iter().any(|l| l == "Y3"));
        }
    }

    #[test]
    fn tiny_formation_sweep() {
        let sweep = sweep_formation(3, false).unwrap();
        assert_eq!(sweep.rows.len(), 8);
        assert_eq!(sweep.full_rank, 4);
        assert!(sweep.all_agree());
        // any two of the three couplings connect three agents
        assert_eq!(sweep.controllable_count, 4);
        assert_eq!(sweep.min_controllable_size, Some(2));
    }
}
