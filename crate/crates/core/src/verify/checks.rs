//! Per-theorem instance checkers. Each produces records with every bound
//! evaluated, and explicit skip entries for pairs the theorem does not
//! cover (bridges, cut vertices, degenerate results, budget caps).
//!
//! A failed bound is reported, never fatal: it is re-confirmed by the
//! brute-force oracle whenever the graphs fit the oracle budget, and the
//! record then carries the solver certificates.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::formulas::{formula_cycle, formula_path};
use crate::graph::{make_family, structure, FamilySpec, Graph};
use crate::graph6::write_graph6;
use crate::ops::{
    contract_edge, contract_vertex, delete_edge, delete_vertex, odot_vertex, subdivide,
    OperationDescriptor,
};
use crate::oracle::oracle_dominated_chromatic_with_budget;
use crate::solver::{
    chromatic_number_with, dominated_chromatic_number_with, total_dominator_chromatic_number_with,
    SolverLimits,
};
use crate::verify::{SkipReason, SkipRecord, TheoremId, VerificationRecord};

/// Shared knobs for the checkers.
#[derive(Clone, Copy, Debug)]
pub struct CheckContext {
    pub limits: SolverLimits,
    pub oracle_budget: usize,
}

impl Default for CheckContext {
    fn default() -> Self {
        CheckContext {
            limits: SolverLimits::default(),
            oracle_budget: crate::oracle::ORACLE_MAX_VERTICES,
        }
    }
}

impl CheckContext {
    fn chidom(&self, g: &Graph) -> Result<usize> {
        Ok(dominated_chromatic_number_with(g, self.limits)?.value)
    }

    /// Base solve for a whole-graph check; a solver budget overflow
    /// becomes a skip (inner Err carries the detail) instead of aborting
    /// the suite.
    fn chidom_or_budget(&self, g: &Graph) -> Result<std::result::Result<usize, String>> {
        match dominated_chromatic_number_with(g, self.limits) {
            Ok(r) => Ok(Ok(r.value)),
            Err(crate::error::Error::Budget(msg)) => Ok(Err(msg)),
            Err(e) => Err(e),
        }
    }
}

/// Records plus skips from one checker invocation.
#[derive(Clone, Debug, Default)]
pub struct CheckOutput {
    pub records: Vec<VerificationRecord>,
    pub skips: Vec<SkipRecord>,
}

impl CheckOutput {
    fn skip(
        &mut self,
        theorem: TheoremId,
        graph: &str,
        operation: Option<OperationDescriptor>,
        reason: SkipReason,
        detail: Option<String>,
    ) {
        self.skips.push(SkipRecord {
            theorem,
            graph: graph.to_string(),
            operation,
            reason,
            detail,
        });
    }

    pub fn merge(&mut self, other: CheckOutput) {
        self.records.extend(other.records);
        self.skips.extend(other.skips);
    }
}

/// On a violated record: recompute the dominated chromatic numbers with
/// the oracle where the graphs fit its budget, and attach the solver
/// certificates so the finding can be re-checked from the record alone.
fn confirm_violation(
    ctx: &CheckContext,
    rec: &mut VerificationRecord,
    graphs: &[(&str, &Graph, usize)],
) -> Result<()> {
    if !rec.violated() {
        return Ok(());
    }
    let mut checked_any = false;
    let mut all_match = true;
    let mut certs = BTreeMap::new();
    for &(name, g, solver_value) in graphs {
        if g.n() <= ctx.oracle_budget {
            let o = oracle_dominated_chromatic_with_budget(g, ctx.oracle_budget)?;
            rec.quantity(&format!("{name}_oracle"), o as i64);
            checked_any = true;
            all_match &= o == solver_value;
        }
        let cert = dominated_chromatic_number_with(g, ctx.limits)?.certificate;
        certs.insert(name.to_string(), serde_json::to_value(&cert)?);
    }
    rec.oracle_confirmed = if checked_any { Some(all_match) } else { None };
    rec.certificates = Some(certs);
    Ok(())
}

/// Edge removal bounds: χ_dom(G) - 1 <= χ_dom(G-e) <= χ_dom(G) + 2 for
/// every non-bridge edge of a connected graph.
pub fn check_edge_deletion(ctx: &CheckContext, g: &Graph) -> Result<CheckOutput> {
    let mut out = CheckOutput::default();
    let g6 = write_graph6(g)?;
    if g.n() < 2 {
        out.skip(
            TheoremId::EdgeDeletion,
            &g6,
            None,
            SkipReason::DegenerateSize,
            None,
        );
        return Ok(out);
    }
    let s = structure(g);
    if !s.connected {
        out.skip(
            TheoremId::EdgeDeletion,
            &g6,
            None,
            SkipReason::Disconnected,
            None,
        );
        return Ok(out);
    }
    let base = match ctx.chidom_or_budget(g)? {
        Ok(v) => v,
        Err(msg) => {
            out.skip(
                TheoremId::EdgeDeletion,
                &g6,
                None,
                SkipReason::Budget,
                Some(msg),
            );
            return Ok(out);
        }
    };
    for (u, v) in g.edges() {
        let op = OperationDescriptor::DeleteEdge { edge: (u, v) };
        if s.is_bridge(u, v) {
            out.skip(
                TheoremId::EdgeDeletion,
                &g6,
                Some(op),
                SkipReason::Bridge,
                None,
            );
            continue;
        }
        let h = delete_edge(g, u, v)?;
        let after = ctx.chidom(&h)?;
        let mut rec = VerificationRecord::new(TheoremId::EdgeDeletion, g6.clone(), Some(op));
        rec.quantity("chidom_g", base as i64)
            .quantity("chidom_result", after as i64)
            .bound("lower", base as i64 - 1, after as i64)
            .bound("upper", after as i64, base as i64 + 2);
        confirm_violation(
            ctx,
            &mut rec,
            &[("chidom_g", g, base), ("chidom_result", &h, after)],
        )?;
        out.records.push(rec);
    }
    Ok(out)
}

/// Vertex removal bounds: χ_dom(G) - 1 <= χ_dom(G-v) <= χ_dom(G) + deg v - 1
/// for every non-cut vertex whose removal leaves no isolated vertex.
pub fn check_vertex_deletion(ctx: &CheckContext, g: &Graph) -> Result<CheckOutput> {
    let mut out = CheckOutput::default();
    let g6 = write_graph6(g)?;
    if g.n() < 2 {
        out.skip(
            TheoremId::VertexDeletion,
            &g6,
            None,
            SkipReason::DegenerateSize,
            None,
        );
        return Ok(out);
    }
    let s = structure(g);
    if !s.connected {
        out.skip(
            TheoremId::VertexDeletion,
            &g6,
            None,
            SkipReason::Disconnected,
            None,
        );
        return Ok(out);
    }
    let base = match ctx.chidom_or_budget(g)? {
        Ok(v) => v,
        Err(msg) => {
            out.skip(
                TheoremId::VertexDeletion,
                &g6,
                None,
                SkipReason::Budget,
                Some(msg),
            );
            return Ok(out);
        }
    };
    for v in g.vertices() {
        let op = OperationDescriptor::DeleteVertex { vertex: v };
        if s.is_cut_vertex(v) {
            out.skip(
                TheoremId::VertexDeletion,
                &g6,
                Some(op),
                SkipReason::CutVertex,
                None,
            );
            continue;
        }
        let r = delete_vertex(g, v)?;
        if r.graph.isolated_vertex().is_some() {
            out.skip(
                TheoremId::VertexDeletion,
                &g6,
                Some(op),
                SkipReason::IsolatedVertexResult,
                None,
            );
            continue;
        }
        let after = ctx.chidom(&r.graph)?;
        let deg = g.degree(v);
        let mut rec = VerificationRecord::new(TheoremId::VertexDeletion, g6.clone(), Some(op));
        rec.quantity("chidom_g", base as i64)
            .quantity("chidom_result", after as i64)
            .quantity("deg_v", deg as i64)
            .bound("lower", base as i64 - 1, after as i64)
            .bound("upper", after as i64, base as i64 + deg as i64 - 1);
        confirm_violation(
            ctx,
            &mut rec,
            &[("chidom_g", g, base), ("chidom_result", &r.graph, after)],
        )?;
        out.records.push(rec);
    }
    Ok(out)
}

/// When Δ(G) = |V| - 1 all three numbers coincide: χ_dom = χ_d^t = χ.
/// Self-selecting: graphs without a universal vertex produce no record.
pub fn check_wheel_equality(ctx: &CheckContext, g: &Graph) -> Result<CheckOutput> {
    let mut out = CheckOutput::default();
    if g.n() < 2 || g.max_degree() != g.n() - 1 {
        return Ok(out);
    }
    let g6 = write_graph6(g)?;
    let dom = match ctx.chidom_or_budget(g)? {
        Ok(v) => v,
        Err(msg) => {
            out.skip(
                TheoremId::WheelEquality,
                &g6,
                None,
                SkipReason::Budget,
                Some(msg),
            );
            return Ok(out);
        }
    };
    let chi = chromatic_number_with(g, ctx.limits)?.value;
    let td = total_dominator_chromatic_number_with(g, ctx.limits)?.value;
    let mut rec = VerificationRecord::new(TheoremId::WheelEquality, g6, None);
    rec.quantity("chi", chi as i64)
        .quantity("chidom", dom as i64)
        .quantity("chidt", td as i64)
        .quantity("delta", g.max_degree() as i64)
        .quantity("n", g.n() as i64)
        .bound("chidom_le_chidt", dom as i64, td as i64)
        .bound("chidt_le_chidom", td as i64, dom as i64)
        .bound("chidom_le_chi", dom as i64, chi as i64)
        .bound("chi_le_chidom", chi as i64, dom as i64);
    confirm_violation(ctx, &mut rec, &[("chidom", g, dom)])?;
    out.records.push(rec);
    Ok(out)
}

/// The wheel-versus-rim gap |χ_dom(W_n) - χ_dom(C_n)| grows without
/// bound; operationalized as strict growth against the value four rims
/// back (the closed forms step every fourth n).
pub fn check_wheel_gap(ctx: &CheckContext, lo: usize, hi: usize) -> Result<CheckOutput> {
    let mut out = CheckOutput::default();
    let lo = lo.max(4);
    let mut gaps: BTreeMap<usize, i64> = BTreeMap::new();
    for n in lo..=hi {
        let wheel = make_family(FamilySpec::Wheel(n))?;
        let cycle = make_family(FamilySpec::Cycle(n))?;
        let dom_w = ctx.chidom(&wheel)?;
        let dom_c = ctx.chidom(&cycle)?;
        let gap = dom_c as i64 - dom_w as i64;
        gaps.insert(n, gap);
        let mut rec = VerificationRecord::new(TheoremId::WheelGap, write_graph6(&wheel)?, None);
        rec.quantity("n", n as i64)
            .quantity("chidom_wheel", dom_w as i64)
            .quantity("chidom_cycle", dom_c as i64)
            .quantity("gap", gap);
        if let Some(&prev) = gaps.get(&(n.wrapping_sub(4))) {
            rec.quantity("gap_prev", prev);
            rec.bound("gap_increases", prev + 1, gap);
        }
        confirm_violation(
            ctx,
            &mut rec,
            &[
                ("chidom_wheel", &wheel, dom_w),
                ("chidom_cycle", &cycle, dom_c),
            ],
        )?;
        out.records.push(rec);
    }
    Ok(out)
}

/// Which bounds an edge-contraction scan records.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum ContractionBounds {
    TheoremOnly,
    ConjectureOnly,
    Both,
}

/// Edge contraction: Theorem bounds χ_dom(G) - 2 <= χ_dom(G/e) <=
/// χ_dom(G) + 1 plus the conjectured sharper lower bound
/// χ_dom(G) - 1 <= χ_dom(G/e), tracked as a separate flag so
/// counterexamples to the conjecture surface as first-class findings.
pub fn check_edge_contraction(ctx: &CheckContext, g: &Graph) -> Result<CheckOutput> {
    check_edge_contraction_mode(ctx, g, ContractionBounds::Both)
}

pub(crate) fn check_edge_contraction_mode(
    ctx: &CheckContext,
    g: &Graph,
    mode: ContractionBounds,
) -> Result<CheckOutput> {
    let theorem = match mode {
        ContractionBounds::ConjectureOnly => TheoremId::ContractionConjecture,
        _ => TheoremId::EdgeContraction,
    };
    let mut out = CheckOutput::default();
    let g6 = write_graph6(g)?;
    if g.n() < 2 {
        out.skip(theorem, &g6, None, SkipReason::DegenerateSize, None);
        return Ok(out);
    }
    if !g.is_connected() {
        out.skip(theorem, &g6, None, SkipReason::Disconnected, None);
        return Ok(out);
    }
    let base = match ctx.chidom_or_budget(g)? {
        Ok(v) => v,
        Err(msg) => {
            out.skip(theorem, &g6, None, SkipReason::Budget, Some(msg));
            return Ok(out);
        }
    };
    for (u, v) in g.edges() {
        let op = OperationDescriptor::ContractEdge { edge: (u, v) };
        let r = contract_edge(g, u, v)?;
        if r.graph.n() < 2 {
            out.skip(theorem, &g6, Some(op), SkipReason::DegenerateSize, None);
            continue;
        }
        let after = ctx.chidom(&r.graph)?;
        let mut rec = VerificationRecord::new(theorem, g6.clone(), Some(op));
        rec.quantity("chidom_g", base as i64)
            .quantity("chidom_result", after as i64);
        if mode != ContractionBounds::ConjectureOnly {
            rec.bound("lower", base as i64 - 2, after as i64).bound(
                "upper",
                after as i64,
                base as i64 + 1,
            );
        }
        if mode != ContractionBounds::TheoremOnly {
            rec.bound("conjecture_lower", base as i64 - 1, after as i64);
        }
        confirm_violation(
            ctx,
            &mut rec,
            &[("chidom_g", g, base), ("chidom_result", &r.graph, after)],
        )?;
        out.records.push(rec);
    }
    Ok(out)
}

/// Vertex contraction: χ_dom(G) - 1 <= χ_dom(G/v) <= χ_dom(G) + deg v - 1,
/// degree measured in G.
pub fn check_vertex_contraction(ctx: &CheckContext, g: &Graph) -> Result<CheckOutput> {
    let mut out = CheckOutput::default();
    let g6 = write_graph6(g)?;
    if g.n() < 2 {
        out.skip(
            TheoremId::VertexContraction,
            &g6,
            None,
            SkipReason::DegenerateSize,
            None,
        );
        return Ok(out);
    }
    if !g.is_connected() {
        out.skip(
            TheoremId::VertexContraction,
            &g6,
            None,
            SkipReason::Disconnected,
            None,
        );
        return Ok(out);
    }
    let base = match ctx.chidom_or_budget(g)? {
        Ok(v) => v,
        Err(msg) => {
            out.skip(
                TheoremId::VertexContraction,
                &g6,
                None,
                SkipReason::Budget,
                Some(msg),
            );
            return Ok(out);
        }
    };
    for v in g.vertices() {
        let op = OperationDescriptor::ContractVertex { vertex: v };
        let r = contract_vertex(g, v)?;
        if r.graph.n() < 2 {
            out.skip(
                TheoremId::VertexContraction,
                &g6,
                Some(op),
                SkipReason::DegenerateSize,
                None,
            );
            continue;
        }
        let after = ctx.chidom(&r.graph)?;
        let deg = g.degree(v);
        let mut rec = VerificationRecord::new(TheoremId::VertexContraction, g6.clone(), Some(op));
        rec.quantity("chidom_g", base as i64)
            .quantity("chidom_result", after as i64)
            .quantity("deg_v", deg as i64)
            .bound("lower", base as i64 - 1, after as i64)
            .bound("upper", after as i64, base as i64 + deg as i64 - 1);
        confirm_violation(
            ctx,
            &mut rec,
            &[("chidom_g", g, base), ("chidom_result", &r.graph, after)],
        )?;
        out.records.push(rec);
    }
    Ok(out)
}

/// Neighborhood edge clearing: χ_dom(G) - deg v + 1 <= χ_dom(G ⊙ v) <=
/// χ_dom(G) + 1. On complete inputs the record also carries the
/// χ_dom(G) / χ_dom(G ⊙ v) ratio backing the unbounded-ratio corollary.
pub fn check_odot(ctx: &CheckContext, g: &Graph) -> Result<CheckOutput> {
    let mut out = CheckOutput::default();
    let g6 = write_graph6(g)?;
    if g.n() < 2 {
        out.skip(TheoremId::Odot, &g6, None, SkipReason::DegenerateSize, None);
        return Ok(out);
    }
    if !g.is_connected() {
        out.skip(TheoremId::Odot, &g6, None, SkipReason::Disconnected, None);
        return Ok(out);
    }
    let base = match ctx.chidom_or_budget(g)? {
        Ok(v) => v,
        Err(msg) => {
            out.skip(TheoremId::Odot, &g6, None, SkipReason::Budget, Some(msg));
            return Ok(out);
        }
    };
    let complete = g.edge_count() == g.n() * (g.n() - 1) / 2;
    for v in g.vertices() {
        let op = OperationDescriptor::OdotVertex { vertex: v };
        let h = odot_vertex(g, v)?;
        if h.isolated_vertex().is_some() {
            out.skip(
                TheoremId::Odot,
                &g6,
                Some(op),
                SkipReason::IsolatedVertexResult,
                None,
            );
            continue;
        }
        let after = ctx.chidom(&h)?;
        let deg = g.degree(v);
        let mut rec = VerificationRecord::new(TheoremId::Odot, g6.clone(), Some(op));
        rec.quantity("chidom_g", base as i64)
            .quantity("chidom_result", after as i64)
            .quantity("deg_v", deg as i64)
            .bound("lower", base as i64 - deg as i64 + 1, after as i64)
            .bound("upper", after as i64, base as i64 + 1);
        if complete {
            rec.quantity("ratio_num", base as i64)
                .quantity("ratio_den", after as i64);
        }
        confirm_violation(
            ctx,
            &mut rec,
            &[("chidom_g", g, base), ("chidom_result", &h, after)],
        )?;
        out.records.push(rec);
    }
    Ok(out)
}

/// The ratio χ_dom(K_n) / χ_dom(K_n ⊙ v) grows without bound;
/// operationalized as strict growth in n over complete graphs, compared
/// by cross-multiplication in exact integers.
pub fn check_odot_ratio(ctx: &CheckContext, lo: usize, hi: usize) -> Result<CheckOutput> {
    let mut out = CheckOutput::default();
    let lo = lo.max(3);
    let mut prev: Option<(i64, i64)> = None;
    for n in lo..=hi {
        let kn = make_family(FamilySpec::Complete(n))?;
        let h = odot_vertex(&kn, 0)?;
        let num = ctx.chidom(&kn)? as i64;
        let den = ctx.chidom(&h)? as i64;
        let mut rec = VerificationRecord::new(
            TheoremId::OdotRatio,
            write_graph6(&kn)?,
            Some(OperationDescriptor::OdotVertex { vertex: 0 }),
        );
        rec.quantity("n", n as i64)
            .quantity("ratio_num", num)
            .quantity("ratio_den", den);
        if let Some((pn, pd)) = prev {
            // ratio(n) > ratio(n-1)  <=>  num * pd > pn * den
            rec.bound("ratio_increases", pn * den + 1, num * pd);
        }
        prev = Some((num, den));
        confirm_violation(
            ctx,
            &mut rec,
            &[
                ("chidom_g", &kn, num as usize),
                ("chidom_result", &h, den as usize),
            ],
        )?;
        out.records.push(rec);
    }
    Ok(out)
}

/// Corollary sandwich from the edge bounds, in doubled integers:
/// χ_dom(G-e) + χ_dom(G/e) - 3 <= 2 χ_dom(G) <= χ_dom(G-e) + χ_dom(G/e) + 3.
pub fn check_corollary_edge(ctx: &CheckContext, g: &Graph) -> Result<CheckOutput> {
    let mut out = CheckOutput::default();
    let g6 = write_graph6(g)?;
    if g.n() < 2 {
        out.skip(
            TheoremId::CorollaryEdge,
            &g6,
            None,
            SkipReason::DegenerateSize,
            None,
        );
        return Ok(out);
    }
    let s = structure(g);
    if !s.connected {
        out.skip(
            TheoremId::CorollaryEdge,
            &g6,
            None,
            SkipReason::Disconnected,
            None,
        );
        return Ok(out);
    }
    let base = match ctx.chidom_or_budget(g)? {
        Ok(v) => v as i64,
        Err(msg) => {
            out.skip(
                TheoremId::CorollaryEdge,
                &g6,
                None,
                SkipReason::Budget,
                Some(msg),
            );
            return Ok(out);
        }
    };
    for (u, v) in g.edges() {
        let op = OperationDescriptor::DeleteEdge { edge: (u, v) };
        if s.is_bridge(u, v) {
            out.skip(
                TheoremId::CorollaryEdge,
                &g6,
                Some(op),
                SkipReason::Bridge,
                None,
            );
            continue;
        }
        let minus = ctx.chidom(&delete_edge(g, u, v)?)? as i64;
        let contracted = contract_edge(g, u, v)?;
        if contracted.graph.n() < 2 {
            out.skip(
                TheoremId::CorollaryEdge,
                &g6,
                Some(op),
                SkipReason::DegenerateSize,
                None,
            );
            continue;
        }
        let slash = ctx.chidom(&contracted.graph)? as i64;
        let mut rec = VerificationRecord::new(TheoremId::CorollaryEdge, g6.clone(), Some(op));
        rec.quantity("chidom_g", base)
            .quantity("chidom_minus_e", minus)
            .quantity("chidom_slash_e", slash)
            .bound("lower", minus + slash - 3, 2 * base)
            .bound("upper", 2 * base, minus + slash + 3);
        confirm_violation(ctx, &mut rec, &[("chidom_g", g, base as usize)])?;
        out.records.push(rec);
    }
    Ok(out)
}

/// Corollary sandwich from the vertex bounds, in doubled integers:
/// χ_dom(G/v) + χ_dom(G-v) - 2 deg v + 2 <= 2 χ_dom(G)
/// <= χ_dom(G/v) + χ_dom(G-v) + 2, per non-cut vertex.
pub fn check_corollary_vertex(ctx: &CheckContext, g: &Graph) -> Result<CheckOutput> {
    let mut out = CheckOutput::default();
    let g6 = write_graph6(g)?;
    if g.n() < 2 {
        out.skip(
            TheoremId::CorollaryVertex,
            &g6,
            None,
            SkipReason::DegenerateSize,
            None,
        );
        return Ok(out);
    }
    let s = structure(g);
    if !s.connected {
        out.skip(
            TheoremId::CorollaryVertex,
            &g6,
            None,
            SkipReason::Disconnected,
            None,
        );
        return Ok(out);
    }
    let base = match ctx.chidom_or_budget(g)? {
        Ok(v) => v as i64,
        Err(msg) => {
            out.skip(
                TheoremId::CorollaryVertex,
                &g6,
                None,
                SkipReason::Budget,
                Some(msg),
            );
            return Ok(out);
        }
    };
    for v in g.vertices() {
        let op = OperationDescriptor::DeleteVertex { vertex: v };
        if s.is_cut_vertex(v) {
            out.skip(
                TheoremId::CorollaryVertex,
                &g6,
                Some(op),
                SkipReason::CutVertex,
                None,
            );
            continue;
        }
        let removed = delete_vertex(g, v)?;
        if removed.graph.isolated_vertex().is_some() {
            out.skip(
                TheoremId::CorollaryVertex,
                &g6,
                Some(op),
                SkipReason::IsolatedVertexResult,
                None,
            );
            continue;
        }
        let contracted = contract_vertex(g, v)?;
        if contracted.graph.n() < 2 {
            out.skip(
                TheoremId::CorollaryVertex,
                &g6,
                Some(op),
                SkipReason::DegenerateSize,
                None,
            );
            continue;
        }
        let minus = ctx.chidom(&removed.graph)? as i64;
        let slash = ctx.chidom(&contracted.graph)? as i64;
        let deg = g.degree(v) as i64;
        let mut rec = VerificationRecord::new(TheoremId::CorollaryVertex, g6.clone(), Some(op));
        rec.quantity("chidom_g", base)
            .quantity("chidom_minus_v", minus)
            .quantity("chidom_slash_v", slash)
            .quantity("deg_v", deg)
            .bound("lower", slash + minus - 2 * deg + 2, 2 * base)
            .bound("upper", 2 * base, slash + minus + 2);
        confirm_violation(ctx, &mut rec, &[("chidom_g", g, base as usize)])?;
        out.records.push(rec);
    }
    Ok(out)
}

/// Subdivision bounds. For k >= 2 the path-anchored sandwich
/// χ_dom(P_{k+1}) <= χ_dom(G^{1/k}) <= (m-1) χ_dom(P_k) + χ_dom(P_{k+1});
/// for k >= 3 additionally the degree-anchored bounds around
/// 2 + Δ(G) χ_dom(P_{k-1}) - 1. Instances whose subdivided order exceeds
/// `cap_vertices` are skipped with a budget reason.
pub fn check_subdivision(
    ctx: &CheckContext,
    g: &Graph,
    k: usize,
    cap_vertices: usize,
    include_frac: bool,
    include_dfrac: bool,
) -> Result<CheckOutput> {
    let mut out = CheckOutput::default();
    let g6 = write_graph6(g)?;
    let op = OperationDescriptor::Subdivide { k };
    if k < 2 {
        out.skip(
            TheoremId::SubdivisionFrac,
            &g6,
            Some(op),
            SkipReason::FormulaDomain,
            Some("subdivision bounds require k >= 2".into()),
        );
        return Ok(out);
    }
    if g.n() < 2 || g.edge_count() < 1 {
        out.skip(
            TheoremId::SubdivisionFrac,
            &g6,
            Some(op),
            SkipReason::DegenerateSize,
            None,
        );
        return Ok(out);
    }
    if !g.is_connected() {
        out.skip(
            TheoremId::SubdivisionFrac,
            &g6,
            Some(op),
            SkipReason::Disconnected,
            None,
        );
        return Ok(out);
    }
    let n = g.n();
    let m = g.edge_count();
    let total = n + (k - 1) * m;
    if total > cap_vertices {
        let detail = Some(format!(
            "subdivided order {total} exceeds cap {cap_vertices}"
        ));
        if include_frac {
            out.skip(
                TheoremId::SubdivisionFrac,
                &g6,
                Some(op),
                SkipReason::Budget,
                detail.clone(),
            );
        }
        if include_dfrac && k >= 3 {
            out.skip(
                TheoremId::SubdivisionDfrac,
                &g6,
                Some(op),
                SkipReason::Budget,
                detail,
            );
        }
        return Ok(out);
    }
    let (h, _) = subdivide(g, k)?;
    let after = ctx.chidom(&h)?;
    let p_k = formula_path(k)? as i64;
    let p_k1 = formula_path(k + 1)? as i64;

    if include_frac {
        let mut rec = VerificationRecord::new(TheoremId::SubdivisionFrac, g6.clone(), Some(op));
        rec.quantity("n", n as i64)
            .quantity("m", m as i64)
            .quantity("k", k as i64)
            .quantity("chidom_sub", after as i64)
            .quantity("chidom_path_k", p_k)
            .quantity("chidom_path_k_plus_1", p_k1)
            .bound("lower", p_k1, after as i64)
            .bound("upper", after as i64, (m as i64 - 1) * p_k + p_k1);
        confirm_violation(ctx, &mut rec, &[("chidom_sub", &h, after)])?;
        out.records.push(rec);
    }

    if include_dfrac {
        if k < 3 {
            out.skip(
                TheoremId::SubdivisionDfrac,
                &g6,
                Some(op),
                SkipReason::FormulaDomain,
                Some("path value for k - 1 is undefined at k = 2".into()),
            );
        } else {
            let delta = g.max_degree() as i64;
            let p_km1 = formula_path(k - 1)? as i64;
            let base = 2 + delta * p_km1 - 1;
            let mut rec =
                VerificationRecord::new(TheoremId::SubdivisionDfrac, g6.clone(), Some(op));
            rec.quantity("n", n as i64)
                .quantity("m", m as i64)
                .quantity("k", k as i64)
                .quantity("delta", delta)
                .quantity("chidom_sub", after as i64)
                .quantity("chidom_path_k_minus_1", p_km1)
                .quantity("chidom_path_k", p_k)
                .bound("lower", base, after as i64)
                .bound("upper", after as i64, base + (m as i64 - delta) * p_k);
            confirm_violation(ctx, &mut rec, &[("chidom_sub", &h, after)])?;
            out.records.push(rec);
        }
    }
    Ok(out)
}

/// Closed forms against the solver for paths and cycles. The cycle form
/// starts at n = 4; at n = 3 it would give 2 while the triangle forces 3,
/// so that instance is logged as a formula-domain skip carrying both
/// numbers.
pub fn check_path_cycle_formula(ctx: &CheckContext, lo: usize, hi: usize) -> Result<CheckOutput> {
    let mut out = CheckOutput::default();
    for n in lo..=hi {
        if n >= 2 {
            let p = make_family(FamilySpec::Path(n))?;
            let solver = ctx.chidom(&p)?;
            let formula = formula_path(n)?;
            let mut rec =
                VerificationRecord::new(TheoremId::PathCycleFormula, write_graph6(&p)?, None);
            rec.quantity("n", n as i64)
                .quantity("family_is_cycle", 0)
                .quantity("formula", formula as i64)
                .quantity("solver", solver as i64)
                .bound("formula_le_solver", formula as i64, solver as i64)
                .bound("solver_le_formula", solver as i64, formula as i64);
            confirm_violation(ctx, &mut rec, &[("solver", &p, solver)])?;
            out.records.push(rec);
        }
        if n == 3 {
            let c3 = make_family(FamilySpec::Cycle(3))?;
            let solver = ctx.chidom(&c3)?;
            out.skip(
                TheoremId::PathCycleFormula,
                &write_graph6(&c3)?,
                None,
                SkipReason::FormulaDomain,
                Some(format!(
                    "cycle closed form would give 2 at n = 3, but chi_dom(C_3) = {solver}"
                )),
            );
        }
        if n >= 4 {
            let c = make_family(FamilySpec::Cycle(n))?;
            let solver = ctx.chidom(&c)?;
            let formula = formula_cycle(n)?;
            let mut rec =
                VerificationRecord::new(TheoremId::PathCycleFormula, write_graph6(&c)?, None);
            rec.quantity("n", n as i64)
                .quantity("family_is_cycle", 1)
                .quantity("formula", formula as i64)
                .quantity("solver", solver as i64)
                .bound("formula_le_solver", formula as i64, solver as i64)
                .bound("solver_le_formula", solver as i64, formula as i64);
            confirm_violation(ctx, &mut rec, &[("solver", &c, solver)])?;
            out.records.push(rec);
        }
    }
    Ok(out)
}
