//! Command-line front end for the controllability library.
//!
//! One binary, four subcommands:
//!
//! - `analyze`: run the decision backends on one system (a JSON spec file or
//!   a built-in example) and report verdicts, witnesses, and orbits.
//! - `sweep`: exhaustively compare backends over every generator subset of a
//!   family, in parallel.
//! - `verify-relations`: recheck the exact bracket tables the structural
//!   tests rest on.
//! - `examples`: list, dump, or run the built-in example systems.
//!
//! Exit codes for `analyze`: 0 = controllable, 1 = uncontrollable,
//! 2 = spec or I/O error, 3 = backends disagreed. The other subcommands use
//! 0 = clean, 2 = spec or I/O error, 3 = a cross-check failed. The sl(3, C)
//! sweep is special: its cycle criterion is necessary but not sufficient, so
//! counterexamples to sufficiency are reported as findings with exit 0; only
//! a violation of necessity exits 3.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use liectrl::analysis::{
    analyze, builtin_examples, emit_dot_for, parse_spec, AnalysisReport, Backend, CrossCheck,
    SystemSpec,
};
use liectrl::decomp::formation::{verify_formation_grading, verify_formation_relations};
use liectrl::decomp::split::verify_split_relations;
use liectrl::sweep::{sweep_formation, sweep_sl3, sweep_son, sweep_split};

const EXIT_UNCONTROLLABLE: u8 = 1;
const EXIT_SPEC_ERROR: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(
    name = "liectrl",
    version,
    about = "Decide controllability of bilinear systems on matrix Lie groups",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one system and report verdicts, witnesses, and orbits
    Analyze(AnalyzeArgs),
    /// Compare backends over every generator subset of a family
    Sweep(SweepArgs),
    /// Recheck the exact bracket tables behind the structural tests
    VerifyRelations(VerifyArgs),
    /// List, dump, or run the built-in example systems
    Examples(ExamplesArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// JSON system specification file
    #[arg(
        long,
        value_name = "PATH",
        conflicts_with = "example",
        required_unless_present = "example"
    )]
    spec: Option<PathBuf>,
    /// Analyze a built-in example by name (see `liectrl examples`)
    #[arg(long, value_name = "NAME")]
    example: Option<String>,
    /// Backends to run, comma separated (larc, cycle, graph); default: all applicable
    #[arg(long, value_name = "LIST", value_delimiter = ',')]
    backends: Vec<String>,
    /// Write the JSON report to this path ("-" for stdout)
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Write a DOT rendering of the generator graph into this directory
    #[arg(long, value_name = "DIR")]
    dot: Option<PathBuf>,
    /// Record which closure step added each edge (and mark them in DOT)
    #[arg(long)]
    trace_closure: bool,
    /// Cap on enumerated minimal witnesses (the exact count is always reported)
    #[arg(long, value_name = "K")]
    max_witnesses: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepKind {
    /// Subsets of the standard basis of so(n) (needs --sweep-n)
    Son,
    /// Subsets of the so(4) split basis
    Split,
    /// Subsets of the sl(3, C) Cartan-style basis
    Sl3c,
    /// Subsets of the formation couplings (needs --agents)
    Formation,
}

#[derive(Args)]
struct SweepArgs {
    /// Matrix dimension n for the standard so(n) sweep
    #[arg(long, value_name = "N")]
    sweep_n: Option<usize>,
    /// Generator family to sweep
    #[arg(long, value_enum, default_value_t = SweepKind::Son)]
    kind: SweepKind,
    /// Agent count for formation sweeps
    #[arg(long, value_name = "N")]
    agents: Option<usize>,
    /// Lift the default size caps (n > 6, agents > 5)
    #[arg(long)]
    allow_large: bool,
    /// Write the full sweep data as JSON to this path ("-" for stdout)
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Formation size for the bracket-identity and grading checks
    #[arg(long, value_name = "N", default_value_t = 5)]
    agents: usize,
    /// Write the verification results as JSON to this path ("-" for stdout)
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct ExamplesArgs {
    /// List example names with one-line summaries (the default action)
    #[arg(long)]
    list: bool,
    /// Analyze every example and print one line per result
    #[arg(long)]
    run: bool,
    /// Write each example spec as a JSON file into this directory
    #[arg(long, value_name = "DIR")]
    dump: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::VerifyRelations(args) => cmd_verify(args),
        Command::Examples(args) => cmd_examples(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_SPEC_ERROR)
        }
    }
}

type CmdResult = Result<u8, String>;

fn stringify(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Write text to a path, with "-" meaning stdout.
fn write_output(path: &Path, text: &str) -> Result<(), String> {
    if path.as_os_str() == "-" {
        print!("{text}");
        if !text.ends_with('\n') {
            println!();
        }
        return Ok(());
    }
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)
            .map_err(|e| format!("cannot create {}: {e}", parent.display()))?;
    }
    fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn to_json_pretty<T: serde::Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value).map_err(stringify)
}

/// File-system-safe version of a system name.
fn safe_file_stem(name: &str) -> String {
    let cleaned: String = name
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' || c == '_' {
                c
            } else {
                '_'
            }
        })
        .collect();
    if cleaned.is_empty() {
        "system".to_string()
    } else {
        cleaned
    }
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

fn load_spec(args: &AnalyzeArgs) -> Result<SystemSpec, String> {
    if let Some(name) = &args.example {
        return builtin_examples()
            .into_iter()
            .find(|s| &s.name == name)
            .ok_or_else(|| {
                format!("no built-in example named '{name}' (run `liectrl examples` for the list)")
            });
    }
    let path = args.spec.as_ref().expect("clap enforces spec xor example");
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_spec(&text).map_err(stringify)
}

fn cmd_analyze(args: AnalyzeArgs) -> CmdResult {
    let mut spec = load_spec(&args)?;
    if !args.backends.is_empty() {
        spec.options.backends = args
            .backends
            .iter()
            .map(|t| Backend::parse(t))
            .collect::<liectrl::Result<Vec<_>>>()
            .map_err(stringify)?;
    }
    if args.trace_closure {
        spec.options.trace_closure = true;
    }
    if let Some(k) = args.max_witnesses {
        spec.options.max_witnesses = k;
    }

    let report = analyze(&spec).map_err(stringify)?;
    print!("{}", render_report(&report));

    if let Some(path) = &args.json {
        write_output(path, &to_json_pretty(&report)?)?;
        if path.as_os_str() != "-" {
            println!("wrote {}", path.display());
        }
    }
    if let Some(dir) = &args.dot {
        match emit_dot_for(&spec).map_err(stringify)? {
            Some(text) => {
                let path = dir.join(format!("{}.dot", safe_file_stem(&spec.name)));
                write_output(&path, &text)?;
                println!("wrote {}", path.display());
            }
            None => eprintln!(
                "note: kind '{}' has no generator graph; no DOT written",
                report.system_kind
            ),
        }
    }

    if report.cross_check.is_mismatch() {
        return Ok(EXIT_MISMATCH);
    }
    match report.verdict {
        Some(true) => Ok(0),
        _ => Ok(EXIT_UNCONTROLLABLE),
    }
}

fn fmt_blocks(blocks: &[Vec<usize>]) -> String {
    blocks
        .iter()
        .map(|b| {
            let inner = b
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            format!("{{{inner}}}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_report(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let w = &mut out;
    writeln!(
        w,
        "system {} (kind {}, matrix dim {})",
        r.name, r.system_kind, r.matrix_dim
    )
    .unwrap();
    writeln!(
        w,
        "  generators ({}): {}",
        r.generators.len(),
        if r.generators.is_empty() {
            "(none)".to_string()
        } else {
            r.generators.join(" ")
        }
    )
    .unwrap();
    writeln!(w, "  full dimension   {}", r.full_dim).unwrap();
    if let Some(rank) = r.lie_rank {
        writeln!(w, "  lie rank         {rank}").unwrap();
    }
    let verdicts: Vec<String> = [
        ("larc", r.backends.larc),
        ("cycle", r.backends.cycle),
        ("graph", r.backends.graph),
    ]
    .into_iter()
    .filter_map(|(name, v)| v.map(|v| format!("{name}={}", if v { "yes" } else { "no" })))
    .collect();
    writeln!(w, "  backends         {}", verdicts.join(" ")).unwrap();
    match &r.cross_check {
        CrossCheck::Agree => writeln!(w, "  cross-check      agree").unwrap(),
        CrossCheck::Mismatch { detail } => {
            writeln!(w, "  cross-check      MISMATCH ({detail})").unwrap()
        }
    }
    let verdict = match r.verdict {
        Some(true) => "CONTROLLABLE",
        Some(false) => "UNCONTROLLABLE",
        None => "UNDETERMINED",
    };
    writeln!(w, "  verdict          {verdict}").unwrap();
    if let Some(count) = &r.witness_count {
        let shown = r.witnesses.len();
        let suffix = if r.witnesses_truncated {
            format!(" (showing {shown})")
        } else {
            String::new()
        };
        writeln!(w, "  witnesses        {count} minimal{suffix}").unwrap();
        for witness in &r.witnesses {
            writeln!(w, "    {} -> {}", witness.labels.join(" "), witness.cycle).unwrap();
        }
    }
    if let Some(orbits) = &r.orbits {
        writeln!(
            w,
            "  orbits           {} (submanifold dimension {})",
            fmt_blocks(&orbits.blocks),
            orbits.dim
        )
        .unwrap();
    }
    if let Some(components) = &r.components {
        writeln!(w, "  components       {}", fmt_blocks(components)).unwrap();
    }
    if let Some(steps) = &r.closure_steps {
        if steps.is_empty() {
            writeln!(w, "  closure          already closed").unwrap();
        }
        for (k, step) in steps.iter().enumerate() {
            let edges = step
                .iter()
                .map(|(a, b)| format!("({a},{b})"))
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(w, "  closure step {}   adds {edges}", k + 1).unwrap();
        }
    }
    for note in &r.notes {
        writeln!(w, "  note             {note}").unwrap();
    }
    writeln!(w, "  elapsed          {} ms", r.timing_ms).unwrap();
    out
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

fn cmd_sweep(args: SweepArgs) -> CmdResult {
    match args.kind {
        SweepKind::Son => {
            let n = args
                .sweep_n
                .ok_or("--sweep-n <N> is required for the standard so(n) sweep")?;
            let sweep = sweep_son(n, args.allow_large).map_err(stringify)?;
            println!(
                "swept {} subsets of the standard basis of so({})",
                sweep.rows.len(),
                sweep.n
            );
            println!(
                "  controllable     {} (minimum size {})",
                sweep.controllable_count,
                sweep
                    .min_controllable_size
                    .map_or("n/a".to_string(), |s| s.to_string())
            );
            println!(
                "  backend check    {}",
                if sweep.backend_disagreements.is_empty() {
                    "all three backends agree on every subset".to_string()
                } else {
                    format!("DISAGREEMENTS on masks {:?}", sweep.backend_disagreements)
                }
            );
            println!(
                "  dimension check  {}",
                if sweep.submanifold_mismatches.is_empty() {
                    "orbit dimension equals closure rank on every subset".to_string()
                } else {
                    format!("MISMATCHES on masks {:?}", sweep.submanifold_mismatches)
                }
            );
            if let Some(path) = &args.json {
                write_output(path, &to_json_pretty(&sweep)?)?;
            }
            Ok(if sweep.all_agree() { 0 } else { EXIT_MISMATCH })
        }
        SweepKind::Split => {
            let sweep = sweep_split().map_err(stringify)?;
            println!(
                "swept {} subsets of the so(4) split basis",
                sweep.rows.len()
            );
            println!(
                "  controllable     {} (minimum size {})",
                sweep.controllable_count,
                sweep
                    .min_controllable_size
                    .map_or("n/a".to_string(), |s| s.to_string())
            );
            println!(
                "  backend check    {}",
                if sweep.disagreements.is_empty() {
                    "two-triangle test matches the rank test on every subset".to_string()
                } else {
                    format!("DISAGREEMENTS on masks {:?}", sweep.disagreements)
                }
            );
            if let Some(path) = &args.json {
                write_output(path, &to_json_pretty(&sweep)?)?;
            }
            Ok(if sweep.all_agree() { 0 } else { EXIT_MISMATCH })
        }
        SweepKind::Sl3c => {
            let sweep = sweep_sl3().map_err(stringify)?;
            println!(
                "swept {} subsets of the sl(3, C) basis; {} controllable by rank",
                sweep.rows.len(),
                sweep.controllable_count
            );
            // the cycle criterion must never reject a controllable subset
            let necessity_violations: Vec<_> = sweep
                .counterexamples
                .iter()
                .filter(|r| r.larc && !r.cycle)
                .collect();
            if !necessity_violations.is_empty() {
                for row in &necessity_violations {
                    println!(
                        "  NECESSITY VIOLATION: {{{}}} controllable but fails the cycle criterion",
                        row.labels.join(", ")
                    );
                }
                return Ok(EXIT_MISMATCH);
            }
            println!(
                "  cycle criterion  necessary on every subset; {} counterexamples to sufficiency",
                sweep.counterexamples.len()
            );
            for row in &sweep.counterexamples {
                println!(
                    "    {{{}}} passes the cycle criterion but has rank {} < 8",
                    row.labels.join(", "),
                    row.lie_rank
                );
            }
            if let Some(path) = &args.json {
                write_output(path, &to_json_pretty(&sweep)?)?;
            }
            Ok(0)
        }
        SweepKind::Formation => {
            let agents = args
                .agents
                .ok_or("--agents <N> is required for formation sweeps")?;
            let sweep = sweep_formation(agents, args.allow_large).map_err(stringify)?;
            println!(
                "swept {} coupling subsets of the {}-agent formation (full rank {})",
                sweep.rows.len(),
                sweep.agents,
                sweep.full_rank
            );
            println!(
                "  controllable     {} (minimum size {})",
                sweep.controllable_count,
                sweep
                    .min_controllable_size
                    .map_or("n/a".to_string(), |s| s.to_string())
            );
            println!(
                "  backend check    {}",
                if sweep.disagreements.is_empty() {
                    "connectivity matches rank equality on every subset".to_string()
                } else {
                    format!("DISAGREEMENTS on masks {:?}", sweep.disagreements)
                }
            );
            if let Some(path) = &args.json {
                write_output(path, &to_json_pretty(&sweep)?)?;
            }
            Ok(if sweep.all_agree() { 0 } else { EXIT_MISMATCH })
        }
    }
}

// ---------------------------------------------------------------------------
// verify-relations
// ---------------------------------------------------------------------------

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let split_ok = verify_split_relations();
    println!(
        "so(4) split-basis bracket table    {}",
        if split_ok { "holds exactly" } else { "FAILED" }
    );

    let relations = verify_formation_relations(args.agents).map_err(stringify)?;
    println!(
        "formation bracket identities       {} ({} instances on {} agents{})",
        if relations.all_hold {
            "hold exactly"
        } else {
            "FAILED"
        },
        relations.checked,
        relations.agents,
        if relations.complete {
            ""
        } else {
            "; some identity forms need more agents"
        }
    );
    for failure in &relations.failures {
        println!("    {failure}");
    }

    let grading = verify_formation_grading(args.agents).map_err(stringify)?;
    println!(
        "formation bracket grading          {} (coupling span {}, triangle span {})",
        if grading.graded {
            "holds exactly"
        } else {
            "FAILED"
        },
        grading.coupling_dim,
        grading.triangle_dim
    );

    if let Some(path) = &args.json {
        let payload = serde_json::json!({
            "split_table_holds": split_ok,
            "formation_relations": relations,
            "formation_grading": grading,
        });
        write_output(path, &to_json_pretty(&payload)?)?;
    }

    if split_ok && relations.all_hold && grading.graded {
        Ok(0)
    } else {
        Ok(EXIT_MISMATCH)
    }
}

// ---------------------------------------------------------------------------
// examples
// ---------------------------------------------------------------------------

/// Built-in examples whose backends are expected to disagree: demonstrations
/// of a criterion gap, not soundness failures.
fn expected_mismatch(name: &str) -> bool {
    name == "sl3c-cycle-gap"
}

fn cmd_examples(args: ExamplesArgs) -> CmdResult {
    let specs = builtin_examples();
    let list = args.list || (!args.run && args.dump.is_none());

    if list {
        println!("built-in examples:");
        for spec in &specs {
            println!(
                "  {:18} kind {}, {} generators{}",
                spec.name,
                spec.system.tag(),
                generator_count(spec),
                if expected_mismatch(&spec.name) {
                    " (demonstrates the cycle-criterion gap; analyze exits 3)"
                } else {
                    ""
                }
            );
        }
    }

    if let Some(dir) = &args.dump {
        for spec in &specs {
            let path = dir.join(format!("{}.json", safe_file_stem(&spec.name)));
            write_output(&path, &to_json_pretty(spec)?)?;
            println!("wrote {}", path.display());
        }
    }

    if args.run {
        let mut unexpected = Vec::new();
        for spec in &specs {
            let report = analyze(spec).map_err(|e| format!("{}: {e}", spec.name))?;
            let mismatch = report.cross_check.is_mismatch();
            let status = match (&report.verdict, mismatch) {
                (_, true) => "MISMATCH",
                (Some(true), _) => "controllable",
                (Some(false), _) => "uncontrollable",
                (None, _) => "undetermined",
            };
            let rank = report
                .lie_rank
                .map_or(String::new(), |r| format!(", rank {r}/{}", report.full_dim));
            println!("  {:18} {status}{rank}", spec.name);
            if mismatch != expected_mismatch(&spec.name) {
                unexpected.push(spec.name.clone());
            }
        }
        if !unexpected.is_empty() {
            println!(
                "unexpected cross-check outcome for: {}",
                unexpected.join(", ")
            );
            return Ok(EXIT_MISMATCH);
        }
    }

    Ok(0)
}

fn generator_count(spec: &SystemSpec) -> usize {
    use liectrl::analysis::SystemKind::*;
    match &spec.system {
        SoStandard { generators, .. } => generators.len(),
        So4Split { generators } => generators.len(),
        Sl3Cartan { generators } => generators.len(),
        Formation { edges, .. } => edges.len(),
        Raw { generators, .. } => generators.len(),
    }
}
