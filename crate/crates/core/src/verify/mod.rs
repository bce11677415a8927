//! Verification records, suite reports, and the theorem vocabulary.

mod checks;
mod suite;

pub use checks::{
    check_corollary_edge, check_corollary_vertex, check_edge_contraction, check_edge_deletion,
    check_odot, check_odot_ratio, check_path_cycle_formula, check_subdivision,
    check_vertex_contraction, check_vertex_deletion, check_wheel_equality, check_wheel_gap,
    CheckContext, CheckOutput,
};
pub use suite::{
    find_sharpness_witnesses, find_sharpness_witnesses_with, run_suite, search_conjecture,
    search_conjecture_with, BoundSide, ConjectureReport, Emission, GraphSource, SharpnessWitness,
    SuiteConfig, SuiteReport, Summary, TheoremCounts,
};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize, Serializer};

use crate::ops::OperationDescriptor;

/// One id per displayed bound, identity, corollary or conjecture.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Deserialize)]
#[serde(try_from = "String")]
pub enum TheoremId {
    EdgeDeletion,
    VertexDeletion,
    WheelEquality,
    WheelGap,
    EdgeContraction,
    ContractionConjecture,
    CorollaryEdge,
    VertexContraction,
    CorollaryVertex,
    Odot,
    OdotRatio,
    SubdivisionFrac,
    SubdivisionDfrac,
    PathCycleFormula,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::EdgeDeletion,
        TheoremId::VertexDeletion,
        TheoremId::WheelEquality,
        TheoremId::WheelGap,
        TheoremId::EdgeContraction,
        TheoremId::ContractionConjecture,
        TheoremId::CorollaryEdge,
        TheoremId::VertexContraction,
        TheoremId::CorollaryVertex,
        TheoremId::Odot,
        TheoremId::OdotRatio,
        TheoremId::SubdivisionFrac,
        TheoremId::SubdivisionDfrac,
        TheoremId::PathCycleFormula,
    ];

    /// The per-graph checks that run over an enumerated or file corpus.
    pub const PER_GRAPH: [TheoremId; 9] = [
        TheoremId::EdgeDeletion,
        TheoremId::VertexDeletion,
        TheoremId::WheelEquality,
        TheoremId::EdgeContraction,
        TheoremId::ContractionConjecture,
        TheoremId::CorollaryEdge,
        TheoremId::VertexContraction,
        TheoremId::CorollaryVertex,
        TheoremId::Odot,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::EdgeDeletion => "edge_deletion",
            TheoremId::VertexDeletion => "vertex_deletion",
            TheoremId::WheelEquality => "wheel_equality",
            TheoremId::WheelGap => "wheel_gap",
            TheoremId::EdgeContraction => "edge_contraction",
            TheoremId::ContractionConjecture => "contraction_conjecture",
            TheoremId::CorollaryEdge => "corollary_edge",
            TheoremId::VertexContraction => "vertex_contraction",
            TheoremId::CorollaryVertex => "corollary_vertex",
            TheoremId::Odot => "odot",
            TheoremId::OdotRatio => "odot_ratio",
            TheoremId::SubdivisionFrac => "subdivision_frac",
            TheoremId::SubdivisionDfrac => "subdivision_dfrac",
            TheoremId::PathCycleFormula => "path_cycle_formula",
        }
    }
}

impl std::str::FromStr for TheoremId {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| crate::error::Error::Argument(format!("unknown theorem id: {s}")))
    }
}

impl TryFrom<String> for TheoremId {
    type Error = crate::error::Error;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One inequality check: `holds` is recomputed as `lhs <= rhs`.
#[derive(Clone, Debug, Serialize)]
pub struct BoundCheck {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

impl BoundCheck {
    pub fn new(name: &str, lhs: i64, rhs: i64) -> BoundCheck {
        BoundCheck {
            name: name.to_string(),
            lhs,
            rhs,
            holds: lhs <= rhs,
        }
    }

    pub fn tight(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// One checked theorem instance: graph, operation, measured quantities,
/// and every bound with its outcome. Violated records also carry the
/// serialized certificates backing the quantities, plus an oracle
/// confirmation when the instance fits the oracle budget.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationRecord {
    pub theorem: TheoremId,
    pub graph: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub operation: Option<OperationDescriptor>,
    pub quantities: BTreeMap<String, i64>,
    pub bounds: Vec<BoundCheck>,
    pub tight: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_confirmed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificates: Option<BTreeMap<String, serde_json::Value>>,
}

impl VerificationRecord {
    pub fn new(theorem: TheoremId, graph: String, operation: Option<OperationDescriptor>) -> Self {
        VerificationRecord {
            theorem,
            graph,
            operation,
            quantities: BTreeMap::new(),
            bounds: Vec::new(),
            tight: Vec::new(),
            oracle_confirmed: None,
            certificates: None,
        }
    }

    pub fn quantity(&mut self, name: &str, value: i64) -> &mut Self {
        self.quantities.insert(name.to_string(), value);
        self
    }

    pub fn bound(&mut self, name: &str, lhs: i64, rhs: i64) -> &mut Self {
        let b = BoundCheck::new(name, lhs, rhs);
        if b.tight() {
            self.tight.push(b.name.clone());
        }
        self.bounds.push(b);
        self
    }

    pub fn violated(&self) -> bool {
        self.bounds.iter().any(|b| !b.holds)
    }

    pub fn violated_bounds(&self) -> impl Iterator<Item = &BoundCheck> {
        self.bounds.iter().filter(|b| !b.holds)
    }

    /// Deterministic report order: graph6 string, then theorem, then
    /// operation.
    pub fn sort_key(&self) -> (String, &'static str, String) {
        (
            self.graph.clone(),
            self.theorem.as_str(),
            self.operation
                .as_ref()
                .map(|o| serde_json::to_string(o).unwrap_or_default())
                .unwrap_or_default(),
        )
    }
}

/// Why a (graph, operation) pair was not checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SkipReason {
    Bridge,
    CutVertex,
    IsolatedVertexResult,
    DegenerateSize,
    Budget,
    FormulaDomain,
    Disconnected,
}

/// Skips are first-class: every skipped pair is recorded with a reason.
#[derive(Clone, Debug, Serialize)]
pub struct SkipRecord {
    pub theorem: TheoremId,
    pub graph: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub operation: Option<OperationDescriptor>,
    pub reason: SkipReason,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl SkipRecord {
    pub fn sort_key(&self) -> (String, &'static str, String) {
        (
            self.graph.clone(),
            self.theorem.as_str(),
            self.operation
                .as_ref()
                .map(|o| serde_json::to_string(o).unwrap_or_default())
                .unwrap_or_default(),
        )
    }
}
