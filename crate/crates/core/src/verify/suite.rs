//! Suite orchestration: exhaustive scans over graph corpora, the
//! conjecture counterexample search, and sharpness-witness search.
//!
//! All scans are instance-parallel. Workers own their solver state;
//! records are merged and sorted at the end, so report content does not
//! depend on the degree of parallelism.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{edge_pairs, graph_from_edge_mask, mask_is_connected, MAX_ENUM_VERTICES};
use crate::error::{Error, Result};
use crate::graph::{structure, Graph};
use crate::graph6::{read_graph6_file, write_graph6};
use crate::ops::{
    contract_edge, contract_vertex, delete_edge, delete_vertex, odot_vertex, OperationDescriptor,
};
use crate::solver::{dominated_chromatic_number_with, dominated_coloring_with_at_most};
use crate::verify::checks::{
    check_corollary_edge, check_corollary_vertex, check_edge_contraction_mode, check_edge_deletion,
    check_odot, check_odot_ratio, check_path_cycle_formula, check_subdivision,
    check_vertex_contraction, check_vertex_deletion, check_wheel_equality, check_wheel_gap,
    CheckContext, CheckOutput, ContractionBounds,
};
use crate::verify::{SkipRecord, TheoremId, VerificationRecord};

/// Where the graphs under test come from.
#[derive(Clone, Debug)]
pub enum GraphSource {
    /// All labeled connected graphs on 1..=n_max vertices.
    Enumerate { n_max: usize },
    /// An explicit list (single-graph CLI runs).
    List(Vec<Graph>),
    /// A graph6 file, one record per line.
    File(PathBuf),
}

impl Serialize for GraphSource {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        match self {
            GraphSource::Enumerate { n_max } => {
                let mut st = s.serialize_struct("GraphSource", 2)?;
                st.serialize_field("kind", "enumerate")?;
                st.serialize_field("n_max", n_max)?;
                st.end()
            }
            GraphSource::List(graphs) => {
                let g6: Vec<String> = graphs
                    .iter()
                    .map(|g| write_graph6(g).unwrap_or_default())
                    .collect();
                let mut st = s.serialize_struct("GraphSource", 2)?;
                st.serialize_field("kind", "list")?;
                st.serialize_field("graphs", &g6)?;
                st.end()
            }
            GraphSource::File(path) => {
                let mut st = s.serialize_struct("GraphSource", 2)?;
                st.serialize_field("kind", "file")?;
                st.serialize_field("path", &path.display().to_string())?;
                st.end()
            }
        }
    }
}

/// How much of the evidence lands in the report body. Summary counts are
/// complete either way; `All` additionally lists every passing record and
/// every skip, which is the right default for single-instance runs but
/// unwieldy for whole-corpus scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Emission {
    All,
    ViolationsOnly,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    pub theorems: Vec<TheoremId>,
    pub source: GraphSource,
    /// Subdivision parameter range, inclusive.
    pub k_range: (usize, usize),
    /// Order cap on subdivided graphs.
    pub cap_vertices: usize,
    /// n range for the family-indexed checks (wheel gap, ratio growth,
    /// path/cycle closed forms), inclusive.
    pub family_range: (usize, usize),
    /// 0 = use the default rayon pool.
    pub workers: usize,
    pub emit: Emission,
    pub solver_max_vertices: usize,
    pub oracle_budget: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            theorems: TheoremId::PER_GRAPH.to_vec(),
            source: GraphSource::Enumerate { n_max: 6 },
            k_range: (2, 5),
            cap_vertices: 20,
            family_range: (4, 12),
            workers: 0,
            emit: Emission::ViolationsOnly,
            solver_max_vertices: crate::solver::SolverLimits::default().max_vertices,
            oracle_budget: crate::oracle::ORACLE_MAX_VERTICES,
        }
    }
}

impl SuiteConfig {
    fn context(&self) -> CheckContext {
        CheckContext {
            limits: crate::solver::SolverLimits::with_max_vertices(self.solver_max_vertices),
            oracle_budget: self.oracle_budget,
        }
    }
}

/// Per-theorem tallies.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct TheoremCounts {
    pub checked: u64,
    pub violations: u64,
    pub tight: u64,
    pub skipped: u64,
}

#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct Summary {
    pub checked: u64,
    pub violations: u64,
    pub tight: u64,
    pub skipped: u64,
    pub conjecture_counterexamples: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub version: String,
    pub config: SuiteConfig,
    pub summary: Summary,
    pub per_theorem: std::collections::BTreeMap<TheoremId, TheoremCounts>,
    pub records: Vec<VerificationRecord>,
    pub skips: Vec<SkipRecord>,
    pub elapsed_ms: f64,
}

impl SuiteReport {
    pub fn has_findings(&self) -> bool {
        self.summary.violations > 0 || self.summary.conjecture_counterexamples > 0
    }
}

#[derive(Clone, Copy, Default)]
struct Selection {
    edge_deletion: bool,
    vertex_deletion: bool,
    wheel_equality: bool,
    wheel_gap: bool,
    edge_contraction: bool,
    conjecture: bool,
    corollary_edge: bool,
    vertex_contraction: bool,
    corollary_vertex: bool,
    odot: bool,
    odot_ratio: bool,
    sub_frac: bool,
    sub_dfrac: bool,
    path_cycle: bool,
}

impl Selection {
    fn from_ids(ids: &[TheoremId]) -> Selection {
        let set: BTreeSet<TheoremId> = ids.iter().copied().collect();
        Selection {
            edge_deletion: set.contains(&TheoremId::EdgeDeletion),
            vertex_deletion: set.contains(&TheoremId::VertexDeletion),
            wheel_equality: set.contains(&TheoremId::WheelEquality),
            wheel_gap: set.contains(&TheoremId::WheelGap),
            edge_contraction: set.contains(&TheoremId::EdgeContraction),
            conjecture: set.contains(&TheoremId::ContractionConjecture),
            corollary_edge: set.contains(&TheoremId::CorollaryEdge),
            vertex_contraction: set.contains(&TheoremId::VertexContraction),
            corollary_vertex: set.contains(&TheoremId::CorollaryVertex),
            odot: set.contains(&TheoremId::Odot),
            odot_ratio: set.contains(&TheoremId::OdotRatio),
            sub_frac: set.contains(&TheoremId::SubdivisionFrac),
            sub_dfrac: set.contains(&TheoremId::SubdivisionDfrac),
            path_cycle: set.contains(&TheoremId::PathCycleFormula),
        }
    }

    fn any_per_graph(&self) -> bool {
        self.edge_deletion
            || self.vertex_deletion
            || self.wheel_equality
            || self.edge_contraction
            || self.conjecture
            || self.corollary_edge
            || self.vertex_contraction
            || self.corollary_vertex
            || self.odot
            || self.sub_frac
            || self.sub_dfrac
    }
}

fn per_graph_checks(
    ctx: &CheckContext,
    sel: &Selection,
    g: &Graph,
    k_range: (usize, usize),
    cap_vertices: usize,
) -> Result<CheckOutput> {
    let mut out = CheckOutput::default();
    if sel.edge_deletion {
        out.merge(check_edge_deletion(ctx, g)?);
    }
    if sel.vertex_deletion {
        out.merge(check_vertex_deletion(ctx, g)?);
    }
    if sel.wheel_equality {
        out.merge(check_wheel_equality(ctx, g)?);
    }
    if sel.edge_contraction || sel.conjecture {
        let mode = match (sel.edge_contraction, sel.conjecture) {
            (true, true) => ContractionBounds::Both,
            (true, false) => ContractionBounds::TheoremOnly,
            _ => ContractionBounds::ConjectureOnly,
        };
        out.merge(check_edge_contraction_mode(ctx, g, mode)?);
    }
    if sel.corollary_edge {
        out.merge(check_corollary_edge(ctx, g)?);
    }
    if sel.vertex_contraction {
        out.merge(check_vertex_contraction(ctx, g)?);
    }
    if sel.corollary_vertex {
        out.merge(check_corollary_vertex(ctx, g)?);
    }
    if sel.odot {
        out.merge(check_odot(ctx, g)?);
    }
    if sel.sub_frac || sel.sub_dfrac {
        for k in k_range.0..=k_range.1 {
            out.merge(check_subdivision(
                ctx,
                g,
                k,
                cap_vertices,
                sel.sub_frac,
                sel.sub_dfrac,
            )?);
        }
    }
    Ok(out)
}

fn with_pool<T: Send>(workers: usize, f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    if workers == 0 {
        f()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Argument(format!("cannot build worker pool: {e}")))?;
        pool.install(f)
    }
}

/// Runs every enumerated/listed graph through the selected per-graph
/// checks in parallel, merging outputs.
fn scan_source(
    ctx: &CheckContext,
    sel: &Selection,
    cfg: &SuiteConfig,
) -> Result<(CheckOutput, u64)> {
    let mut merged = CheckOutput::default();
    let mut scanned = 0u64;
    match &cfg.source {
        GraphSource::Enumerate { n_max } => {
            if *n_max < 1 || *n_max > MAX_ENUM_VERTICES {
                return Err(Error::budget(format!(
                    "enumeration supports 1..={MAX_ENUM_VERTICES} vertices, got {n_max}"
                )));
            }
            for n in 1..=*n_max {
                let pairs = edge_pairs(n);
                let masks = 1u64 << pairs.len();
                let results: Vec<Option<Result<CheckOutput>>> = (0..masks)
                    .into_par_iter()
                    .map(|mask| {
                        if !mask_is_connected(n, &pairs, mask) {
                            return None;
                        }
                        let g = graph_from_edge_mask(n, &pairs, mask);
                        Some(per_graph_checks(
                            ctx,
                            sel,
                            &g,
                            cfg.k_range,
                            cfg.cap_vertices,
                        ))
                    })
                    .collect();
                for r in results.into_iter().flatten() {
                    scanned += 1;
                    merged.merge(r?);
                }
            }
        }
        GraphSource::List(graphs) => {
            let results: Vec<Result<CheckOutput>> = graphs
                .par_iter()
                .map(|g| per_graph_checks(ctx, sel, g, cfg.k_range, cfg.cap_vertices))
                .collect();
            for r in results {
                scanned += 1;
                merged.merge(r?);
            }
        }
        GraphSource::File(path) => {
            let graphs = read_graph6_file(path)?;
            let results: Vec<Result<CheckOutput>> = graphs
                .par_iter()
                .map(|g| per_graph_checks(ctx, sel, g, cfg.k_range, cfg.cap_vertices))
                .collect();
            for r in results {
                scanned += 1;
                merged.merge(r?);
            }
        }
    }
    Ok((merged, scanned))
}

/// Attribution of one record's bounds to theorem tallies. Edge
/// contraction records may carry both the theorem bounds and the
/// conjectured bound; the latter is tallied under the conjecture id.
fn tally(per: &mut std::collections::BTreeMap<TheoremId, TheoremCounts>, rec: &VerificationRecord) {
    let is_conjecture_bound = |name: &str| name == "conjecture_lower";
    let mut groups: Vec<(TheoremId, Vec<&crate::verify::BoundCheck>)> = Vec::new();
    if rec.theorem == TheoremId::EdgeContraction || rec.theorem == TheoremId::ContractionConjecture
    {
        let theorem_bounds: Vec<_> = rec
            .bounds
            .iter()
            .filter(|b| !is_conjecture_bound(&b.name))
            .collect();
        let conj_bounds: Vec<_> = rec
            .bounds
            .iter()
            .filter(|b| is_conjecture_bound(&b.name))
            .collect();
        if !theorem_bounds.is_empty() {
            groups.push((TheoremId::EdgeContraction, theorem_bounds));
        }
        if !conj_bounds.is_empty() {
            groups.push((TheoremId::ContractionConjecture, conj_bounds));
        }
    } else {
        groups.push((rec.theorem, rec.bounds.iter().collect()));
    }
    for (id, bounds) in groups {
        let counts = per.entry(id).or_default();
        counts.checked += 1;
        if bounds.iter().any(|b| !b.holds) {
            counts.violations += 1;
        }
        if bounds.iter().any(|b| b.tight()) {
            counts.tight += 1;
        }
    }
}

/// Runs the configured verification suite and assembles a deterministic
/// report: records are sorted by graph6 string, then theorem, then
/// operation, so the body is invariant to the worker count.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let start = Instant::now();
    let ctx = cfg.context();
    let sel = Selection::from_ids(&cfg.theorems);

    let mut output = CheckOutput::default();
    if sel.any_per_graph() {
        let (scanned_output, _) = with_pool(cfg.workers, || scan_source(&ctx, &sel, cfg))?;
        output.merge(scanned_output);
    }
    if sel.wheel_gap {
        output.merge(check_wheel_gap(
            &ctx,
            cfg.family_range.0,
            cfg.family_range.1,
        )?);
    }
    if sel.odot_ratio {
        output.merge(check_odot_ratio(
            &ctx,
            cfg.family_range.0,
            cfg.family_range.1,
        )?);
    }
    if sel.path_cycle {
        output.merge(check_path_cycle_formula(
            &ctx,
            cfg.family_range.0,
            cfg.family_range.1,
        )?);
    }

    output
        .records
        .sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    output
        .skips
        .sort_by(|a, b| (a.sort_key(), a.reason as u8).cmp(&(b.sort_key(), b.reason as u8)));

    let mut per_theorem = std::collections::BTreeMap::new();
    for id in &cfg.theorems {
        per_theorem
            .entry(*id)
            .or_insert_with(TheoremCounts::default);
    }
    for rec in &output.records {
        tally(&mut per_theorem, rec);
    }
    for skip in &output.skips {
        per_theorem.entry(skip.theorem).or_default().skipped += 1;
    }

    let mut summary = Summary::default();
    for counts in per_theorem.values() {
        summary.checked += counts.checked;
        summary.violations += counts.violations;
        summary.tight += counts.tight;
        summary.skipped += counts.skipped;
    }
    summary.conjecture_counterexamples = per_theorem
        .get(&TheoremId::ContractionConjecture)
        .map(|c| c.violations)
        .unwrap_or(0);

    let (records, skips) = match cfg.emit {
        Emission::All => (output.records, output.skips),
        Emission::ViolationsOnly => (
            output
                .records
                .into_iter()
                .filter(|r| r.violated())
                .collect(),
            Vec::new(),
        ),
    };

    Ok(SuiteReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: cfg.clone(),
        summary,
        per_theorem,
        records,
        skips,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Outcome of a conjecture counterexample search.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub n_max: usize,
    pub graphs_scanned: u64,
    pub instances_checked: u64,
    pub counterexamples: Vec<VerificationRecord>,
    pub elapsed_ms: f64,
}

/// Scans every labeled connected graph on 3..=n_max vertices for an edge
/// whose contraction drops the dominated chromatic number by two or more.
/// Every counterexample is double-confirmed by the brute-force oracle
/// before it is reported; an empty list means no counterexample exists at
/// this scale.
pub fn search_conjecture(n_max: usize) -> Result<ConjectureReport> {
    search_conjecture_with(n_max, 0, &CheckContext::default())
}

pub fn search_conjecture_with(
    n_max: usize,
    workers: usize,
    ctx: &CheckContext,
) -> Result<ConjectureReport> {
    if n_max < 3 {
        return Err(Error::argument("conjecture search requires n_max >= 3"));
    }
    if n_max > MAX_ENUM_VERTICES {
        return Err(Error::budget(format!(
            "conjecture search limited to n_max <= {MAX_ENUM_VERTICES}"
        )));
    }
    let start = Instant::now();
    let ctx = *ctx;
    let (mut all, scanned) = with_pool(workers, move || {
        let mut merged = CheckOutput::default();
        let mut scanned = 0u64;
        for n in 3..=n_max {
            let pairs = edge_pairs(n);
            let masks = 1u64 << pairs.len();
            let results: Vec<Option<Result<CheckOutput>>> = (0..masks)
                .into_par_iter()
                .map(|mask| {
                    if !mask_is_connected(n, &pairs, mask) {
                        return None;
                    }
                    let g = graph_from_edge_mask(n, &pairs, mask);
                    Some(check_edge_contraction_mode(
                        &ctx,
                        &g,
                        ContractionBounds::ConjectureOnly,
                    ))
                })
                .collect();
            for r in results.into_iter().flatten() {
                scanned += 1;
                merged.merge(r?);
            }
        }
        Ok((merged, scanned))
    })?;
    all.records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    let instances = all.records.len() as u64;
    let counterexamples: Vec<VerificationRecord> =
        all.records.into_iter().filter(|r| r.violated()).collect();
    Ok(ConjectureReport {
        n_max,
        graphs_scanned: scanned,
        instances_checked: instances,
        counterexamples,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Which side of a two-sided bound a sharpness search targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSide {
    Lower,
    Upper,
}

impl std::str::FromStr for BoundSide {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lower" => Ok(BoundSide::Lower),
            "upper" => Ok(BoundSide::Upper),
            _ => Err(Error::argument(format!(
                "bound side must be lower or upper, got {s}"
            ))),
        }
    }
}

/// An instance achieving equality in a theorem bound.
#[derive(Clone, Debug, Serialize)]
pub struct SharpnessWitness {
    pub graph: String,
    pub n: usize,
    pub operation: OperationDescriptor,
    pub quantities: std::collections::BTreeMap<String, i64>,
}

/// χ_dom(g) == target, decided with two feasibility probes instead of a
/// full iterative-deepening solve.
fn chidom_equals(ctx: &CheckContext, g: &Graph, target: i64) -> Result<bool> {
    if target < 1 || target > g.n() as i64 {
        return Ok(false);
    }
    let t = target as usize;
    if dominated_coloring_with_at_most(g, t, ctx.limits)?.is_none() {
        return Ok(false);
    }
    if t == 1 {
        return Ok(true);
    }
    Ok(dominated_coloring_with_at_most(g, t - 1, ctx.limits)?.is_none())
}

fn witness(
    g6: &str,
    n: usize,
    op: OperationDescriptor,
    base: usize,
    target: i64,
    deg: Option<usize>,
) -> SharpnessWitness {
    let mut quantities = std::collections::BTreeMap::new();
    quantities.insert("chidom_g".to_string(), base as i64);
    quantities.insert("chidom_result".to_string(), target);
    if let Some(d) = deg {
        quantities.insert("deg_v".to_string(), d as i64);
    }
    SharpnessWitness {
        graph: g6.to_string(),
        n,
        operation: op,
        quantities,
    }
}

fn graph_witnesses(
    ctx: &CheckContext,
    theorem: TheoremId,
    side: BoundSide,
    g: &Graph,
) -> Result<Vec<SharpnessWitness>> {
    let mut found = Vec::new();
    if g.n() < 2 || !g.is_connected() {
        return Ok(found);
    }
    let g6 = write_graph6(g)?;
    let base = dominated_chromatic_number_with(g, ctx.limits)?.value;
    let s = structure(g);
    match theorem {
        TheoremId::EdgeDeletion => {
            let target = match side {
                BoundSide::Lower => base as i64 - 1,
                BoundSide::Upper => base as i64 + 2,
            };
            for (u, v) in g.edges() {
                if s.is_bridge(u, v) {
                    continue;
                }
                let h = delete_edge(g, u, v)?;
                if chidom_equals(ctx, &h, target)? {
                    found.push(witness(
                        &g6,
                        g.n(),
                        OperationDescriptor::DeleteEdge { edge: (u, v) },
                        base,
                        target,
                        None,
                    ));
                }
            }
        }
        TheoremId::VertexDeletion => {
            for v in g.vertices() {
                if s.is_cut_vertex(v) {
                    continue;
                }
                let r = delete_vertex(g, v)?;
                if r.graph.isolated_vertex().is_some() {
                    continue;
                }
                let deg = g.degree(v);
                let target = match side {
                    BoundSide::Lower => base as i64 - 1,
                    BoundSide::Upper => base as i64 + deg as i64 - 1,
                };
                if chidom_equals(ctx, &r.graph, target)? {
                    found.push(witness(
                        &g6,
                        g.n(),
                        OperationDescriptor::DeleteVertex { vertex: v },
                        base,
                        target,
                        Some(deg),
                    ));
                }
            }
        }
        TheoremId::EdgeContraction => {
            let target = match side {
                BoundSide::Lower => base as i64 - 2,
                BoundSide::Upper => base as i64 + 1,
            };
            for (u, v) in g.edges() {
                let r = contract_edge(g, u, v)?;
                if r.graph.n() < 2 {
                    continue;
                }
                if chidom_equals(ctx, &r.graph, target)? {
                    found.push(witness(
                        &g6,
                        g.n(),
                        OperationDescriptor::ContractEdge { edge: (u, v) },
                        base,
                        target,
                        None,
                    ));
                }
            }
        }
        TheoremId::VertexContraction => {
            for v in g.vertices() {
                let r = contract_vertex(g, v)?;
                if r.graph.n() < 2 {
                    continue;
                }
                let deg = g.degree(v);
                let target = match side {
                    BoundSide::Lower => base as i64 - 1,
                    BoundSide::Upper => base as i64 + deg as i64 - 1,
                };
                if chidom_equals(ctx, &r.graph, target)? {
                    found.push(witness(
                        &g6,
                        g.n(),
                        OperationDescriptor::ContractVertex { vertex: v },
                        base,
                        target,
                        Some(deg),
                    ));
                }
            }
        }
        TheoremId::Odot => {
            for v in g.vertices() {
                let h = odot_vertex(g, v)?;
                if h.isolated_vertex().is_some() {
                    continue;
                }
                let deg = g.degree(v);
                let target = match side {
                    BoundSide::Lower => base as i64 - deg as i64 + 1,
                    BoundSide::Upper => base as i64 + 1,
                };
                if chidom_equals(ctx, &h, target)? {
                    found.push(witness(
                        &g6,
                        g.n(),
                        OperationDescriptor::OdotVertex { vertex: v },
                        base,
                        target,
                        Some(deg),
                    ));
                }
            }
        }
        other => {
            return Err(Error::argument(format!(
                "sharpness search is not defined for theorem {other}"
            )))
        }
    }
    Ok(found)
}

/// Finds every instance within the enumeration budget achieving equality
/// in the requested bound, smallest graphs first, in enumeration order.
/// An empty result is itself a finding: no witness exists at this scale.
pub fn find_sharpness_witnesses(
    theorem: TheoremId,
    side: BoundSide,
    n_max: usize,
) -> Result<Vec<SharpnessWitness>> {
    find_sharpness_witnesses_with(theorem, side, n_max, 0, &CheckContext::default())
}

pub fn find_sharpness_witnesses_with(
    theorem: TheoremId,
    side: BoundSide,
    n_max: usize,
    workers: usize,
    ctx: &CheckContext,
) -> Result<Vec<SharpnessWitness>> {
    if !matches!(
        theorem,
        TheoremId::EdgeDeletion
            | TheoremId::VertexDeletion
            | TheoremId::EdgeContraction
            | TheoremId::VertexContraction
            | TheoremId::Odot
    ) {
        return Err(Error::argument(format!(
            "sharpness search is not defined for theorem {theorem}"
        )));
    }
    if !(2..=MAX_ENUM_VERTICES).contains(&n_max) {
        return Err(Error::budget(format!(
            "sharpness search supports 2..={MAX_ENUM_VERTICES} vertices, got {n_max}"
        )));
    }
    let ctx = *ctx;
    with_pool(workers, move || {
        let mut all = Vec::new();
        for n in 2..=n_max {
            let pairs = edge_pairs(n);
            let masks = 1u64 << pairs.len();
            // ordered collect keeps enumeration order within each n
            let results: Vec<Result<Vec<SharpnessWitness>>> = (0..masks)
                .into_par_iter()
                .filter_map(|mask| {
                    if !mask_is_connected(n, &pairs, mask) {
                        return None;
                    }
                    let g = graph_from_edge_mask(n, &pairs, mask);
                    Some(graph_witnesses(&ctx, theorem, side, &g))
                })
                .collect();
            for r in results {
                all.extend(r?);
            }
        }
        Ok(all)
    })
}
