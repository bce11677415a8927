//! Exact computation of the dominated chromatic number (plus χ and the
//! total dominator chromatic number) with verifiable certificates, the
//! graph operations the bounds quantify over, and exhaustive verification
//! harnesses over small-graph corpora.

pub mod coloring;
pub mod enumerate;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod ops;
pub mod oracle;
pub mod solver;
pub mod verify;

pub use coloring::{
    canonicalize, find_dominators, find_td_witnesses, is_dominated_coloring, is_proper,
    is_total_dominator_coloring, Coloring, DominatedColoringCertificate, TotalDominatorCertificate,
};
pub use enumerate::{enumerate_connected_graphs, MAX_ENUM_VERTICES};
pub use error::{Error, Result};
pub use formulas::{formula_complete, formula_cycle, formula_path, formula_star, formula_wheel};
pub use graph::{make_family, star_on, structure, FamilySpec, Graph, StructureReport};
pub use graph6::{parse_graph6, read_graph6_file, write_graph6};
pub use ops::{
    apply, contract_edge, contract_vertex, delete_edge, delete_vertex, odot_vertex, subdivide,
    Applied, OpResult, OperationDescriptor, SubdivisionLabeling,
};
pub use oracle::{
    oracle_dominated_chromatic, oracle_dominated_chromatic_with_budget, ORACLE_MAX_VERTICES,
};
pub use solver::{
    chromatic_number, chromatic_number_with, dominated_chromatic_number,
    dominated_chromatic_number_with, dominated_coloring_with_at_most,
    total_dominator_chromatic_number, total_dominator_chromatic_number_with, SearchStats,
    SolveResult, SolverLimits,
};
