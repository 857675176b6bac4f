//! System specifications, the analysis pipeline, and built-in examples.
//!
//! A [`SystemSpec`] names a bilinear control system by its generator family
//! (standard so(n) basis elements, the so(4) split basis, the sl(3, C)
//! Cartan-style basis, formation couplings, or raw rational matrices) plus
//! analysis options. [`analyze`] runs every applicable backend — the exact
//! rank computation, the permutation-cycle test, and the graph-connectivity
//! test — cross-checks their verdicts, and returns an [`AnalysisReport`]
//! that serializes to versioned JSON.
//!
//! Specs parse from JSON with [`parse_spec`]; diagnostics name the offending
//! field. Reports are deterministic for a fixed spec apart from the timing
//! field: every list is canonically ordered.

use crate::decomp::formation::{formation_controllable, formation_full_rank, formation_graph};
use crate::decomp::sl3::{realified, sl3_cycle_controllable, Sl3Gen};
use crate::decomp::split::{split_controllable, split_graph, SplitGen};
use crate::error::{Error, Result};
use crate::graph::Edge;
use crate::lie::{lie_rank, Generator, GeneratorSet};
use crate::matrix::ExactMatrix;
use crate::scalar::{GaussianRational, Rational};
use crate::son::{
    cycle_controllable, cycle_witness_count, enumerate_cycle_witnesses, son_dim,
    submanifold_orbits, tau, BasisIndex,
};
use num::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::time::Instant;

/// Version stamped into every report.
pub const SCHEMA_VERSION: u32 = 1;

/// Largest matrix dimension [`analyze`] accepts.
pub const MAX_ANALYSIS_DIM: usize = 12;

/// One of the three decision procedures.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// Exact Lie-closure rank against the full dimension.
    Larc,
    /// Permutation-product criterion (n-cycle / paired 3-cycles).
    Cycle,
    /// Graph-connectivity criterion.
    Graph,
}

impl Backend {
    pub const ALL: [Backend; 3] = [Backend::Larc, Backend::Cycle, Backend::Graph];

    pub fn name(self) -> &'static str {
        match self {
            Backend::Larc => "larc",
            Backend::Cycle => "cycle",
            Backend::Graph => "graph",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "larc" => Ok(Backend::Larc),
            "cycle" => Ok(Backend::Cycle),
            "graph" => Ok(Backend::Graph),
            other => Err(Error::spec(
                "backends",
                format!("unknown backend '{other}' (expected larc, cycle, or graph)"),
            )),
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A raw generator: a label and an n x n matrix of rational entries written
/// as strings ("3", "-1", "2/5").
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawGenerator {
    pub label: String,
    pub rows: Vec<Vec<String>>,
}

/// The generator family of a system, tagged by kind.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SystemKind {
    /// Standard basis elements of so(n), one per (i, j) pair with i < j.
    SoStandard {
        n: usize,
        generators: Vec<(usize, usize)>,
    },
    /// Members of the split basis of so(4): "A1".."A3", "B1".."B3".
    So4Split { generators: Vec<String> },
    /// Members of the Cartan-style basis of sl(3, C): "H1", "H2",
    /// "X1".."X3", "Y1".."Y3".
    Sl3Cartan { generators: Vec<String> },
    /// Formation couplings, one per agent pair.
    Formation {
        agents: usize,
        edges: Vec<(usize, usize)>,
    },
    /// Raw rational matrices. `full_dim` defaults to n(n-1)/2, in which
    /// case every generator must be skew-symmetric.
    Raw {
        n: usize,
        generators: Vec<RawGenerator>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        full_dim: Option<usize>,
    },
}

impl SystemKind {
    /// The JSON tag of this kind.
    pub fn tag(&self) -> &'static str {
        match self {
            SystemKind::SoStandard { .. } => "so_standard",
            SystemKind::So4Split { .. } => "so4_split",
            SystemKind::Sl3Cartan { .. } => "sl3_cartan",
            SystemKind::Formation { .. } => "formation",
            SystemKind::Raw { .. } => "raw",
        }
    }

    /// The backends that make sense for this kind.
    pub fn applicable_backends(&self) -> &'static [Backend] {
        match self {
            SystemKind::SoStandard { .. } => &Backend::ALL,
            SystemKind::So4Split { .. } => &[Backend::Larc, Backend::Graph],
            SystemKind::Sl3Cartan { .. } => &[Backend::Larc, Backend::Cycle],
            SystemKind::Formation { .. } => &[Backend::Larc, Backend::Graph],
            SystemKind::Raw { .. } => &[Backend::Larc],
        }
    }
}

/// Per-analysis options; every field has a default.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AnalysisOptions {
    /// Backends to run; empty means every applicable one.
    pub backends: Vec<Backend>,
    /// Record the triangular-closure steps of the generator graph.
    pub trace_closure: bool,
    /// Cap on enumerated witnesses; the exact count is always reported.
    pub max_witnesses: usize,
    /// For sl(3, C): run the rank backend over the realified generators
    /// together with their imaginary multiples (full dimension 16) instead
    /// of over complex scalars (full dimension 8).
    pub sl3_over_reals: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            backends: Vec::new(),
            trace_closure: false,
            max_witnesses: 16,
            sl3_over_reals: false,
        }
    }
}

/// A named system plus analysis options.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemSpec {
    pub name: String,
    pub system: SystemKind,
    #[serde(default)]
    pub options: AnalysisOptions,
}

/// Parse and validate a JSON system specification.
pub fn parse_spec(text: &str) -> Result<SystemSpec> {
    let spec: SystemSpec = serde_json::from_str(text)?;
    validate_spec(&spec)?;
    Ok(spec)
}

/// Validate a spec without running any backend: builds the generator set so
/// every index, label, and matrix check fires, and checks the options.
pub fn validate_spec(spec: &SystemSpec) -> Result<()> {
    match &spec.system {
        SystemKind::SoStandard { n, generators } => {
            build_son(*n, generators)?;
        }
        SystemKind::So4Split { generators } => {
            build_split(generators)?;
        }
        SystemKind::Sl3Cartan { generators } => {
            build_sl3(generators)?;
        }
        SystemKind::Formation { agents, edges } => {
            build_formation(*agents, edges)?;
        }
        SystemKind::Raw {
            n,
            generators,
            full_dim,
        } => {
            build_raw(*n, generators, *full_dim)?;
        }
    }
    let applicable = spec.system.applicable_backends();
    if !spec.options.backends.is_empty()
        && !spec.options.backends.iter().any(|b| applicable.contains(b))
    {
        return Err(Error::spec(
            "options.backends",
            format!(
                "none of the requested backends applies to kind '{}'",
                spec.system.tag()
            ),
        ));
    }
    Ok(())
}

fn field_err(field: &'static str, e: Error) -> Error {
    match e {
        Error::Spec { .. } => e,
        other => Error::spec(field, other.to_string()),
    }
}

fn check_dim_cap(field: &'static str, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::spec(
            field,
            "matrix dimension must be at least 1".to_string(),
        ));
    }
    if n > MAX_ANALYSIS_DIM {
        return Err(Error::spec(
            field,
            format!("matrix dimension {n} exceeds the analysis cap {MAX_ANALYSIS_DIM}"),
        ));
    }
    Ok(())
}

fn build_son(n: usize, pairs: &[(usize, usize)]) -> Result<GeneratorSet<Rational>> {
    check_dim_cap("system.n", n)?;
    let indices = pairs
        .iter()
        .map(|&(i, j)| BasisIndex::new(n, i, j))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| field_err("system.generators", e))?;
    GeneratorSet::standard_son(n, &indices).map_err(|e| field_err("system.generators", e))
}

fn build_split(labels: &[String]) -> Result<GeneratorSet<Rational>> {
    let members = labels
        .iter()
        .map(|l| SplitGen::parse(l))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| field_err("system.generators", e))?;
    GeneratorSet::so4_split(&members).map_err(|e| field_err("system.generators", e))
}

fn build_sl3(labels: &[String]) -> Result<GeneratorSet<GaussianRational>> {
    let members = labels
        .iter()
        .map(|l| Sl3Gen::parse(l))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| field_err("system.generators", e))?;
    GeneratorSet::sl3_cartan(&members).map_err(|e| field_err("system.generators", e))
}

fn build_formation(agents: usize, edges: &[(usize, usize)]) -> Result<GeneratorSet<Rational>> {
    check_dim_cap("system.agents", agents)?;
    GeneratorSet::formation(agents, edges).map_err(|e| field_err("system.edges", e))
}

fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || {
        Error::spec(
            "system.generators",
            format!("'{text}' is not a rational number (expected e.g. \"3\", \"-1\", \"2/5\")"),
        )
    };
    let t = text.trim();
    if let Some((num, den)) = t.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den == BigInt::ZERO {
            return Err(bad());
        }
        Ok(Rational::new(num, den))
    } else {
        let n: BigInt = t.parse().map_err(|_| bad())?;
        Ok(Rational::from_integer(n))
    }
}

fn build_raw(
    n: usize,
    generators: &[RawGenerator],
    full_dim: Option<usize>,
) -> Result<(GeneratorSet<Rational>, usize)> {
    check_dim_cap("system.n", n)?;
    let mut gens = Vec::with_capacity(generators.len());
    for raw in generators {
        if raw.rows.len() != n || raw.rows.iter().any(|r| r.len() != n) {
            return Err(Error::spec(
                "system.generators",
                format!("generator '{}' is not an {n} x {n} matrix", raw.label),
            ));
        }
        let mut m: ExactMatrix<Rational> = ExactMatrix::zero(n);
        for (i, row) in raw.rows.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                m.set(i, j, parse_rational(cell)?);
            }
        }
        gens.push(Generator::new(raw.label.clone(), m));
    }
    let gens = GeneratorSet::raw(n, gens).map_err(|e| field_err("system.generators", e))?;
    let full_dim = match full_dim {
        Some(d) => {
            if d > n * n {
                return Err(Error::spec(
                    "system.full_dim",
                    format!("full_dim {d} exceeds the ambient dimension {}", n * n),
                ));
            }
            d
        }
        None => {
            // defaulting to dim so(n) is only honest for skew generators
            for g in gens.generators() {
                if !g.matrix().is_skew_symmetric() {
                    return Err(field_err(
                        "system.generators",
                        Error::NotSkewSymmetric {
                            label: g.label().to_string(),
                        },
                    ));
                }
            }
            son_dim(n)
        }
    };
    Ok((gens, full_dim))
}

/// Per-backend verdicts; None when a backend did not run.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct BackendVerdicts {
    pub larc: Option<bool>,
    pub cycle: Option<bool>,
    pub graph: Option<bool>,
}

impl BackendVerdicts {
    fn ran(&self) -> Vec<(Backend, bool)> {
        [
            (Backend::Larc, self.larc),
            (Backend::Cycle, self.cycle),
            (Backend::Graph, self.graph),
        ]
        .into_iter()
        .filter_map(|(b, v)| v.map(|v| (b, v)))
        .collect()
    }
}

/// Outcome of comparing all backend verdicts that ran.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CrossCheck {
    Agree,
    Mismatch { detail: String },
}

impl CrossCheck {
    pub fn is_mismatch(&self) -> bool {
        matches!(self, CrossCheck::Mismatch { .. })
    }
}

/// A minimal witnessing subset for the cycle backend.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WitnessReport {
    /// Generator labels of the subset, in composed order.
    pub labels: Vec<String>,
    /// The index pairs in composed order.
    pub ordering: Vec<Edge>,
    /// Cycle notation of the composed permutation.
    pub cycle: String,
}

/// Orbit partition of the controllable submanifold.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OrbitReport {
    pub blocks: Vec<Vec<usize>>,
    /// Sum over blocks of |O|(|O|-1)/2; equals the Lie rank.
    pub dim: usize,
}

/// Everything [`analyze`] learned about one system.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub name: String,
    pub system_kind: String,
    pub matrix_dim: usize,
    pub generators: Vec<String>,
    /// Dimension the rank is compared against.
    pub full_dim: usize,
    pub backends: BackendVerdicts,
    /// Exact Lie-closure rank, when the rank backend ran.
    pub lie_rank: Option<usize>,
    /// The authoritative verdict: the rank backend's when it ran, otherwise
    /// the agreed structural verdict.
    pub verdict: Option<bool>,
    pub cross_check: CrossCheck,
    /// Minimal witnessing subsets (cycle backend), possibly truncated.
    pub witnesses: Vec<WitnessReport>,
    /// Exact number of minimal witnesses, as a decimal string.
    pub witness_count: Option<String>,
    pub witnesses_truncated: bool,
    pub orbits: Option<OrbitReport>,
    pub components: Option<Vec<Vec<usize>>>,
    /// Edges added per triangular-closure step (with trace_closure).
    pub closure_steps: Option<Vec<Vec<Edge>>>,
    pub notes: Vec<String>,
    pub timing_ms: u64,
}

struct ReportBuilder {
    report: AnalysisReport,
    started: Instant,
}

impl ReportBuilder {
    fn new(spec: &SystemSpec, matrix_dim: usize, generators: Vec<String>, full_dim: usize) -> Self {
        ReportBuilder {
            report: AnalysisReport {
                schema_version: SCHEMA_VERSION,
                name: spec.name.clone(),
                system_kind: spec.system.tag().to_string(),
                matrix_dim,
                generators,
                full_dim,
                backends: BackendVerdicts::default(),
                lie_rank: None,
                verdict: None,
                cross_check: CrossCheck::Agree,
                witnesses: Vec::new(),
                witness_count: None,
                witnesses_truncated: false,
                orbits: None,
                components: None,
                closure_steps: None,
                notes: Vec::new(),
                timing_ms: 0,
            },
            started: Instant::now(),
        }
    }

    fn finish(mut self) -> AnalysisReport {
        let ran = self.report.backends.ran();
        self.report.cross_check = if ran.windows(2).all(|w| w[0].1 == w[1].1) {
            CrossCheck::Agree
        } else {
            let detail = ran
                .iter()
                .map(|(b, v)| format!("{b}={v}"))
                .collect::<Vec<_>>()
                .join(", ");
            CrossCheck::Mismatch { detail }
        };
        self.report.verdict = self
            .report
            .backends
            .larc
            .or_else(|| ran.first().map(|&(_, v)| v));
        self.report.timing_ms = self.started.elapsed().as_millis() as u64;
        self.report
    }
}

/// Which backends to run: the requested ones filtered to applicability
/// (skips noted), or all applicable ones when none were requested.
fn select_backends(spec: &SystemSpec, notes: &mut Vec<String>) -> Result<Vec<Backend>> {
    let applicable = spec.system.applicable_backends();
    if spec.options.backends.is_empty() {
        return Ok(applicable.to_vec());
    }
    let mut chosen = Vec::new();
    for &b in &spec.options.backends {
        if applicable.contains(&b) {
            if !chosen.contains(&b) {
                chosen.push(b);
            }
        } else {
            notes.push(format!(
                "backend '{b}' does not apply to kind '{}'; skipped",
                spec.system.tag()
            ));
        }
    }
    if chosen.is_empty() {
        return Err(Error::spec(
            "options.backends",
            format!(
                "none of the requested backends applies to kind '{}'",
                spec.system.tag()
            ),
        ));
    }
    Ok(chosen)
}

/// Run every selected backend on the system and cross-check the verdicts.
pub fn analyze(spec: &SystemSpec) -> Result<AnalysisReport> {
    let mut notes = Vec::new();
    let backends = select_backends(spec, &mut notes)?;
    let run = |b: Backend| backends.contains(&b);

    let mut builder = match &spec.system {
        SystemKind::SoStandard { n, generators } => {
            let gens = build_son(*n, generators)?;
            let full_dim = son_dim(*n);
            let mut b = ReportBuilder::new(spec, *n, owned_labels(&gens), full_dim);
            if run(Backend::Larc) {
                let rank = lie_rank(&gens)?;
                b.report.lie_rank = Some(rank);
                b.report.backends.larc = Some(rank == full_dim);
            }
            if run(Backend::Cycle) {
                let (verdict, witness) = cycle_controllable(&gens)?;
                b.report.backends.cycle = Some(verdict);
                if verdict {
                    let count = cycle_witness_count(&gens)?;
                    if count <= BigInt::from(spec.options.max_witnesses) {
                        b.report.witnesses =
                            enumerate_cycle_witnesses(&gens, spec.options.max_witnesses)?
                                .into_iter()
                                .map(witness_report)
                                .collect();
                    } else {
                        b.report.witnesses = witness.map(witness_report).into_iter().collect();
                        b.report.witnesses_truncated = true;
                    }
                    b.report.witness_count = Some(count.to_string());
                }
            }
            if run(Backend::Graph) {
                let graph = tau(&gens)?;
                b.report.backends.graph = Some(graph.is_connected());
                b.report.components = Some(graph.components());
                let orbits = submanifold_orbits(&gens)?;
                b.report.orbits = Some(OrbitReport {
                    blocks: orbits.blocks().to_vec(),
                    dim: orbits.submanifold_dim(),
                });
                if spec.options.trace_closure {
                    b.report.closure_steps = Some(graph.triangular_closure().added().to_vec());
                }
            }
            b
        }
        SystemKind::So4Split { generators } => {
            let gens = build_split(generators)?;
            let mut b = ReportBuilder::new(spec, 4, owned_labels(&gens), 6);
            if run(Backend::Larc) {
                let rank = lie_rank(&gens)?;
                b.report.lie_rank = Some(rank);
                b.report.backends.larc = Some(rank == 6);
            }
            if run(Backend::Graph) {
                b.report.backends.graph = Some(split_controllable(&gens)?);
                b.report.components = Some(split_graph(&gens)?.components());
            }
            if spec.options.trace_closure {
                b.report
                    .notes
                    .push("closure tracing applies to standard so(n) systems only; skipped".into());
            }
            b
        }
        SystemKind::Sl3Cartan { generators } => {
            let gens = build_sl3(generators)?;
            let full_dim = if spec.options.sl3_over_reals { 16 } else { 8 };
            let mut b = ReportBuilder::new(spec, 3, owned_labels(&gens), full_dim);
            if run(Backend::Larc) {
                let rank = if spec.options.sl3_over_reals {
                    b.report.notes.push(
                        "rank computed over the realified generators with imaginary multiples"
                            .into(),
                    );
                    lie_rank(&realified(&gens, true)?)?
                } else {
                    lie_rank(&gens)?
                };
                b.report.lie_rank = Some(rank);
                b.report.backends.larc = Some(rank == full_dim);
            }
            if run(Backend::Cycle) {
                b.report.backends.cycle = Some(sl3_cycle_controllable(&gens)?);
            }
            b
        }
        SystemKind::Formation { agents, edges } => {
            let gens = build_formation(*agents, edges)?;
            let full_dim = formation_full_rank(*agents)?;
            let mut b = ReportBuilder::new(spec, *agents, owned_labels(&gens), full_dim);
            if run(Backend::Larc) {
                let rank = lie_rank(&gens)?;
                b.report.lie_rank = Some(rank);
                b.report.backends.larc = Some(rank == full_dim);
            }
            if run(Backend::Graph) {
                b.report.backends.graph = Some(formation_controllable(&gens)?);
                b.report.components = Some(formation_graph(&gens)?.components());
            }
            b
        }
        SystemKind::Raw {
            n,
            generators,
            full_dim,
        } => {
            let (gens, full_dim) = build_raw(*n, generators, *full_dim)?;
            let mut b = ReportBuilder::new(spec, *n, owned_labels(&gens), full_dim);
            // only the rank backend applies, and select_backends guarantees
            // it was chosen
            let rank = lie_rank(&gens)?;
            b.report.lie_rank = Some(rank);
            b.report.backends.larc = Some(rank == full_dim);
            b
        }
    };

    builder.report.notes.append(&mut notes);
    builder.report.notes.sort();
    Ok(builder.finish())
}

fn owned_labels<S: crate::scalar::Scalar>(gens: &GeneratorSet<S>) -> Vec<String> {
    gens.labels().iter().map(|s| s.to_string()).collect()
}

fn witness_report(w: crate::son::CycleWitness) -> WitnessReport {
    WitnessReport {
        cycle: w.cycle.to_string(),
        labels: w.labels,
        ordering: w.ordering,
    }
}

/// DOT rendering of the system's generator graph, for the kinds that have
/// one: standard so(n) families (closure-added edges marked when the spec
/// traces the closure), the so(4) split basis, and formations. None for
/// kinds without a graph form. Output is deterministic for a fixed spec.
pub fn emit_dot_for(spec: &SystemSpec) -> Result<Option<String>> {
    match &spec.system {
        SystemKind::SoStandard { n, generators } => {
            let gens = build_son(*n, generators)?;
            let trace = tau(&gens)?.triangular_closure();
            let trace = spec.options.trace_closure.then_some(&trace);
            Ok(Some(crate::son::emit_dot(&spec.name, &gens, trace)?))
        }
        SystemKind::So4Split { generators } => {
            let gens = build_split(generators)?;
            let labels = crate::decomp::split::split_vertex_labels();
            Ok(Some(crate::graph::to_dot(
                &spec.name,
                &split_graph(&gens)?,
                None,
                Some(&labels),
            )))
        }
        SystemKind::Formation { agents, edges } => {
            let gens = build_formation(*agents, edges)?;
            Ok(Some(crate::graph::to_dot(
                &spec.name,
                &formation_graph(&gens)?,
                None,
                None,
            )))
        }
        SystemKind::Sl3Cartan { .. } | SystemKind::Raw { .. } => Ok(None),
    }
}

/// The built-in example specs: classic systems exercising every kind and
/// both verdicts, including one that demonstrates a cycle/rank mismatch.
pub fn builtin_examples() -> Vec<SystemSpec> {
    fn son(name: &str, n: usize, pairs: &[(usize, usize)]) -> SystemSpec {
        SystemSpec {
            name: name.to_string(),
            system: SystemKind::SoStandard {
                n,
                generators: pairs.to_vec(),
            },
            options: AnalysisOptions {
                trace_closure: true,
                ..AnalysisOptions::default()
            },
        }
    }
    let labels = |ls: &[&str]| ls.iter().map(|s| s.to_string()).collect::<Vec<_>>();

    let mut specs = vec![
        son("so5-path", 5, &[(1, 2), (2, 3), (3, 4), (4, 5)]),
        son("so5-two-blocks", 5, &[(1, 2), (2, 3), (4, 5)]),
        son("so4-triangle-tail", 4, &[(1, 2), (2, 3), (1, 3), (3, 4)]),
        son("so5-path4", 5, &[(1, 2), (2, 3), (3, 4)]),
        son("so6-pair-a", 6, &[(1, 2), (2, 3), (4, 5), (4, 6)]),
        son("so6-pair-b", 6, &[(1, 3), (2, 3), (4, 6), (5, 6)]),
        son(
            "so6-forest",
            6,
            &[(1, 2), (1, 4), (2, 3), (2, 4), (3, 4), (5, 6)],
        ),
    ];
    specs.push(SystemSpec {
        name: "son-two-input".to_string(),
        system: two_input_raw(6),
        options: AnalysisOptions::default(),
    });
    specs.push(SystemSpec {
        name: "so4-split-four".to_string(),
        system: SystemKind::So4Split {
            generators: labels(&["A1", "A2", "B1", "B2"]),
        },
        options: AnalysisOptions::default(),
    });
    specs.push(SystemSpec {
        name: "sl3c-cartan-pairs".to_string(),
        system: SystemKind::Sl3Cartan {
            generators: labels(&["X1", "Y1", "X2", "Y2"]),
        },
        options: AnalysisOptions::default(),
    });
    specs.push(SystemSpec {
        name: "sl3c-cycle-gap".to_string(),
        system: SystemKind::Sl3Cartan {
            generators: labels(&["X3", "Y3"]),
        },
        options: AnalysisOptions::default(),
    });
    specs.push(SystemSpec {
        name: "formation-path-5".to_string(),
        system: SystemKind::Formation {
            agents: 5,
            edges: vec![(1, 2), (2, 3), (3, 4), (4, 5)],
        },
        options: AnalysisOptions::default(),
    });
    specs
}

/// The two-generator system on so(n): one basis element plus the sum of all
/// superdiagonal elements, as a raw spec.
pub fn two_input_raw(n: usize) -> SystemKind {
    let first: ExactMatrix<Rational> =
        crate::son::omega(n, 1, 2).expect("n >= 2 gives a valid (1, 2) index");
    let mut sum: ExactMatrix<Rational> = ExactMatrix::zero(n);
    for i in 1..n {
        let next = crate::son::omega(n, i, i + 1).expect("valid superdiagonal index");
        sum = sum.add(&next).expect("same dimension");
    }
    let rows = |m: &ExactMatrix<Rational>| -> Vec<Vec<String>> {
        (0..n)
            .map(|i| (0..n).map(|j| m.get(i, j).to_string()).collect())
            .collect()
    };
    SystemKind::Raw {
        n,
        generators: vec![
            RawGenerator {
                label: "C1".to_string(),
                rows: rows(&first),
            },
            RawGenerator {
                label: "C2".to_string(),
                rows: rows(&sum),
            },
        ],
        full_dim: None,
    }
}
