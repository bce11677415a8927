//! Independent brute-force oracle for the dominated chromatic number.
//!
//! Structurally different from the branch-and-bound path: for each k it
//! enumerates every canonical assignment of at most k colors (restricted
//! growth strings, i.e. set partitions) with no search pruning at all,
//! and filters with the definition checker. Exponential and proud of it;
//! the budget guard keeps it honest.

use crate::coloring::{is_dominated_coloring, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default ceiling for the oracle (Bell(8) = 4140 partitions per pass).
pub const ORACLE_MAX_VERTICES: usize = 8;

/// Least k admitting a dominated coloring, by exhaustive enumeration.
pub fn oracle_dominated_chromatic(g: &Graph) -> Result<usize> {
    oracle_dominated_chromatic_with_budget(g, ORACLE_MAX_VERTICES)
}

/// Same, with an explicit vertex budget (enumeration is Bell-number
/// sized; anything much past 10 vertices is off the table).
pub fn oracle_dominated_chromatic_with_budget(g: &Graph, max_vertices: usize) -> Result<usize> {
    let n = g.n();
    if n == 0 {
        return Err(Error::argument("cannot solve the empty graph"));
    }
    if n > max_vertices {
        return Err(Error::budget(format!(
            "oracle limited to {max_vertices} vertices, instance has {n}"
        )));
    }
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::domain(format!(
            "vertex {v} is isolated; no class containing it can be dominated"
        )));
    }
    for k in 1..=n {
        if enumerate_assignments(g, k, &mut vec![0; n], 0, 0)? {
            return Ok(k);
        }
    }
    unreachable!("singleton classes are always feasible on isolate-free graphs")
}

fn enumerate_assignments(
    g: &Graph,
    kmax: usize,
    colors: &mut Vec<usize>,
    v: usize,
    used: usize,
) -> Result<bool> {
    if v == g.n() {
        let c = Coloring::new(colors.clone())?;
        return is_dominated_coloring(g, &c);
    }
    for c in 1..=(used + 1).min(kmax) {
        colors[v] = c;
        if enumerate_assignments(g, kmax, colors, v + 1, used.max(c))? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilySpec};

    #[test]
    fn oracle_anchor_values() {
        let c6 = make_family(FamilySpec::Cycle(6)).unwrap();
        assert_eq!(oracle_dominated_chromatic(&c6).unwrap(), 4);
        let c8 = make_family(FamilySpec::Cycle(8)).unwrap();
        assert_eq!(oracle_dominated_chromatic(&c8).unwrap(), 4);
        let k3 = make_family(FamilySpec::Complete(3)).unwrap();
        assert_eq!(oracle_dominated_chromatic(&k3).unwrap(), 3);
    }

    #[test]
    fn budget_guard() {
        let p9 = make_family(FamilySpec::Path(9)).unwrap();
        assert!(matches!(
            oracle_dominated_chromatic(&p9),
            Err(Error::Budget(_))
        ));
        assert_eq!(oracle_dominated_chromatic_with_budget(&p9, 9).unwrap(), 5);
    }

    #[test]
    fn matches_solver_exhaustively_small() {
        for n in 2..=5 {
            for g in crate::enumerate::enumerate_connected_graphs(n).unwrap() {
                let solver = crate::solver::dominated_chromatic_number(&g).unwrap().value;
                let oracle = oracle_dominated_chromatic(&g).unwrap();
                assert_eq!(solver, oracle, "disagreement on {g:?}");
            }
        }
    }
}
