//! Exact branch-and-bound solvers for χ, χ_dom and χ_d^t.
//!
//! All three share one skeleton: iterative deepening on the color budget
//! k, branching on vertices in descending-degree order (ties by id), with
//! canonical color symmetry breaking (a vertex may open at most one new
//! color). The dominated search additionally maintains, per color class,
//! the set of vertices whose neighborhood still contains the whole
//! partial class; adding a vertex to a class can only shrink that set, so
//! an empty candidate set dooms every extension of the branch and is
//! pruned immediately. The TD search prunes on per-vertex witness
//! feasibility under the same monotonicity argument.

use std::time::Instant;

use serde::Serialize;

use crate::coloring::{
    find_dominators, find_td_witnesses, Coloring, DominatedColoringCertificate,
    TotalDominatorCertificate,
};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Size guards for the exact solvers. The search state packs
/// neighborhoods into single machine words, so the ceiling is 64; the
/// default stays well below that to keep runtimes desk-scale.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SolverLimits {
    pub max_vertices: usize,
}

impl Default for SolverLimits {
    fn default() -> Self {
        SolverLimits { max_vertices: 40 }
    }
}

impl SolverLimits {
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        SolverLimits { max_vertices }
    }
}

/// Search effort counters for one solve call.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub decisions: u64,
    pub elapsed_ms: f64,
}

/// An optimum value plus the certificate proving it and the effort spent.
#[derive(Clone, Debug, Serialize)]
pub struct SolveResult<C> {
    pub value: usize,
    pub certificate: C,
    pub stats: SearchStats,
}

struct Kernel {
    n: usize,
    all: u64,
    nbr: Vec<u64>,
    order: Vec<usize>,
    nodes: u64,
    decisions: u64,
}

impl Kernel {
    fn new(g: &Graph) -> Kernel {
        let n = g.n();
        debug_assert!(n <= 64);
        let mut nbr = vec![0u64; n];
        for (v, mask) in nbr.iter_mut().enumerate() {
            for u in g.neighbors(v) {
                *mask |= 1 << u;
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(nbr[v].count_ones()), v));
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Kernel {
            n,
            all,
            nbr,
            order,
            nodes: 0,
            decisions: 0,
        }
    }

    /// Greedy clique on the branch order; a lower bound for all three
    /// numbers since every coloring here is proper.
    fn greedy_clique(&self) -> usize {
        let mut clique = 0u64;
        let mut size = 0usize;
        for &v in &self.order {
            if clique & !self.nbr[v] == 0 {
                clique |= 1 << v;
                size += 1;
            }
        }
        size
    }

    fn search_plain(
        &mut self,
        k: usize,
        depth: usize,
        used: usize,
        state: &mut PlainState,
    ) -> bool {
        self.nodes += 1;
        if depth == self.n {
            return true;
        }
        let v = self.order[depth];
        let limit = (used + 1).min(k);
        for c in 1..=limit {
            self.decisions += 1;
            if state.members[c] & self.nbr[v] != 0 {
                continue;
            }
            state.members[c] |= 1 << v;
            state.color[v] = c;
            if self.search_plain(k, depth + 1, used.max(c), state) {
                return true;
            }
            state.members[c] &= !(1 << v);
            state.color[v] = 0;
        }
        false
    }

    fn search_dominated(
        &mut self,
        k: usize,
        depth: usize,
        used: usize,
        state: &mut DomState,
    ) -> bool {
        self.nodes += 1;
        if depth == self.n {
            return true;
        }
        let v = self.order[depth];
        let limit = (used + 1).min(k);
        for c in 1..=limit {
            self.decisions += 1;
            if state.members[c] & self.nbr[v] != 0 {
                continue;
            }
            let cand = if state.members[c] == 0 {
                self.nbr[v]
            } else {
                state.cands[c] & self.nbr[v]
            };
            if cand == 0 {
                continue;
            }
            let saved = state.cands[c];
            state.members[c] |= 1 << v;
            state.cands[c] = cand;
            state.color[v] = c;
            if self.search_dominated(k, depth + 1, used.max(c), state) {
                return true;
            }
            state.members[c] &= !(1 << v);
            state.cands[c] = saved;
            state.color[v] = 0;
        }
        false
    }

    /// Every vertex must keep a witness class reachable: either some
    /// nonempty class already inside its neighborhood, or an empty color
    /// slot plus an uncolored neighbor that could fill it. Any completion
    /// of a valid TD-coloring satisfies this at every prefix, so pruning
    /// on its failure is sound; at the leaf (no uncolored vertices) the
    /// test is exactly the TD condition.
    fn td_feasible(&self, k: usize, used: usize, colored: u64, state: &TdState) -> bool {
        let uncolored = self.all & !colored;
        'vertex: for w in 0..self.n {
            if used < k && self.nbr[w] & uncolored != 0 {
                continue;
            }
            for c in 1..=used {
                if state.members[c] != 0 && state.members[c] & !self.nbr[w] == 0 {
                    continue 'vertex;
                }
            }
            return false;
        }
        true
    }

    fn search_td(
        &mut self,
        k: usize,
        depth: usize,
        used: usize,
        colored: u64,
        state: &mut TdState,
    ) -> bool {
        self.nodes += 1;
        if !self.td_feasible(k, used, colored, state) {
            return false;
        }
        if depth == self.n {
            return true;
        }
        let v = self.order[depth];
        let limit = (used + 1).min(k);
        for c in 1..=limit {
            self.decisions += 1;
            if state.members[c] & self.nbr[v] != 0 {
                continue;
            }
            state.members[c] |= 1 << v;
            state.color[v] = c;
            if self.search_td(k, depth + 1, used.max(c), colored | (1 << v), state) {
                return true;
            }
            state.members[c] &= !(1 << v);
            state.color[v] = 0;
        }
        false
    }
}

struct PlainState {
    color: Vec<usize>,
    members: Vec<u64>,
}

struct DomState {
    color: Vec<usize>,
    members: Vec<u64>,
    cands: Vec<u64>,
}

struct TdState {
    color: Vec<usize>,
    members: Vec<u64>,
}

fn check_size(g: &Graph, limits: SolverLimits) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::argument("cannot solve the empty graph"));
    }
    let cap = limits.max_vertices.min(64);
    if g.n() > cap {
        return Err(Error::budget(format!(
            "solver limited to {cap} vertices, instance has {}",
            g.n()
        )));
    }
    Ok(())
}

fn check_isolate_free(g: &Graph) -> Result<()> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::domain(format!(
            "vertex {v} is isolated; no class containing it can be dominated"
        )));
    }
    Ok(())
}

fn stats(kernel: &Kernel, start: Instant) -> SearchStats {
    SearchStats {
        nodes: kernel.nodes,
        decisions: kernel.decisions,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// Exact chromatic number with a proper-coloring certificate.
pub fn chromatic_number(g: &Graph) -> Result<SolveResult<Coloring>> {
    chromatic_number_with(g, SolverLimits::default())
}

pub fn chromatic_number_with(g: &Graph, limits: SolverLimits) -> Result<SolveResult<Coloring>> {
    check_size(g, limits)?;
    let start = Instant::now();
    let mut kernel = Kernel::new(g);
    let lb = kernel.greedy_clique().max(1);
    for k in lb..=g.n() {
        let mut state = PlainState {
            color: vec![0; g.n()],
            members: vec![0; k + 1],
        };
        if kernel.search_plain(k, 0, 0, &mut state) {
            let coloring = Coloring::new(state.color)?;
            debug_assert_eq!(coloring.k(), k);
            return Ok(SolveResult {
                value: coloring.k(),
                certificate: coloring,
                stats: stats(&kernel, start),
            });
        }
    }
    unreachable!("every graph admits the all-distinct coloring")
}

/// Exact dominated chromatic number with a checked certificate.
pub fn dominated_chromatic_number(g: &Graph) -> Result<SolveResult<DominatedColoringCertificate>> {
    dominated_chromatic_number_with(g, SolverLimits::default())
}

pub fn dominated_chromatic_number_with(
    g: &Graph,
    limits: SolverLimits,
) -> Result<SolveResult<DominatedColoringCertificate>> {
    check_size(g, limits)?;
    check_isolate_free(g)?;
    let start = Instant::now();
    let mut kernel = Kernel::new(g);
    let lb = dominated_lower_bound(&kernel, g);
    for k in lb..=g.n() {
        if let Some(cert) = dominated_level(&mut kernel, g, k)? {
            debug_assert_eq!(cert.coloring.k(), k);
            return Ok(SolveResult {
                value: cert.coloring.k(),
                certificate: cert,
                stats: stats(&kernel, start),
            });
        }
    }
    unreachable!("singleton classes give a dominated coloring of any isolate-free graph")
}

/// A dominated coloring using at most `k` colors, if one exists. Cheaper
/// than a full solve when only a feasibility answer is needed.
pub fn dominated_coloring_with_at_most(
    g: &Graph,
    k: usize,
    limits: SolverLimits,
) -> Result<Option<DominatedColoringCertificate>> {
    check_size(g, limits)?;
    check_isolate_free(g)?;
    if k == 0 {
        return Ok(None);
    }
    let mut kernel = Kernel::new(g);
    dominated_level(&mut kernel, g, k.min(g.n()))
}

fn dominated_lower_bound(kernel: &Kernel, g: &Graph) -> usize {
    // any dominated class sits inside some open neighborhood, so no
    // class exceeds Δ vertices
    let max_deg = g.max_degree().max(1);
    let capacity = g.n().div_ceil(max_deg);
    let two = if g.n() >= 2 { 2 } else { 1 };
    kernel.greedy_clique().max(capacity).max(two)
}

fn dominated_level(
    kernel: &mut Kernel,
    g: &Graph,
    k: usize,
) -> Result<Option<DominatedColoringCertificate>> {
    let mut state = DomState {
        color: vec![0; g.n()],
        members: vec![0; k + 1],
        cands: vec![0; k + 1],
    };
    if !kernel.search_dominated(k, 0, 0, &mut state) {
        return Ok(None);
    }
    let coloring = Coloring::new(state.color)?;
    let dominators = find_dominators(g, &coloring)?
        .expect("search returned a coloring that fails the dominated check");
    Ok(Some(DominatedColoringCertificate {
        coloring,
        dominators,
    }))
}

/// Exact total dominator chromatic number with a checked certificate.
pub fn total_dominator_chromatic_number(
    g: &Graph,
) -> Result<SolveResult<TotalDominatorCertificate>> {
    total_dominator_chromatic_number_with(g, SolverLimits::default())
}

pub fn total_dominator_chromatic_number_with(
    g: &Graph,
    limits: SolverLimits,
) -> Result<SolveResult<TotalDominatorCertificate>> {
    check_size(g, limits)?;
    check_isolate_free(g)?;
    let start = Instant::now();
    let mut kernel = Kernel::new(g);
    let lb = kernel.greedy_clique().max(2);
    for k in lb..=g.n() {
        let mut state = TdState {
            color: vec![0; g.n()],
            members: vec![0; k + 1],
        };
        if kernel.search_td(k, 0, 0, 0, &mut state) {
            let coloring = Coloring::new(state.color)?;
            debug_assert_eq!(coloring.k(), k);
            let witnesses = find_td_witnesses(g, &coloring)?
                .expect("search returned a coloring that fails the TD check");
            return Ok(SolveResult {
                value: coloring.k(),
                certificate: TotalDominatorCertificate {
                    coloring,
                    witnesses,
                },
                stats: stats(&kernel, start),
            });
        }
    }
    unreachable!("singleton classes give a TD-coloring of any isolate-free graph")
}
