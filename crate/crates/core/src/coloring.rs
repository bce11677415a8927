//! Colorings, the dominated / total-dominator validity checkers, and the
//! certificate types the solvers hand back.
//!
//! Domination is read against the open neighborhood: class D is dominated
//! by w iff D ⊆ N(w); w itself never dominates a class it belongs to,
//! since w ∉ N(w). That convention is the one consistent with all the
//! anchor values the verification suites pin down.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex coloring with colors 1..=k, kept in first-occurrence
/// canonical form: scanning vertices 0,1,2,... each new color is the
/// smallest unused one, and every color up to k is used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    assignment: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Builds a coloring from any total assignment of positive colors,
    /// canonicalizing it. Rejects zero colors.
    pub fn new(raw: Vec<usize>) -> Result<Coloring> {
        if raw.contains(&0) {
            return Err(Error::argument("colors are 1-based; found 0"));
        }
        let assignment = canonicalize(&raw);
        let k = assignment.iter().copied().max().unwrap_or(0);
        Ok(Coloring { assignment, k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Members of color class `color` (1-based), ascending.
    pub fn class_members(&self, color: usize) -> Vec<usize> {
        self.assignment
            .iter()
            .enumerate()
            .filter_map(|(v, &c)| if c == color { Some(v) } else { None })
            .collect()
    }
}

/// First-occurrence relabeling: the color of vertex 0 becomes 1, the next
/// distinct color becomes 2, and so on. Idempotent.
pub fn canonicalize(raw: &[usize]) -> Vec<usize> {
    let mut remap: Vec<(usize, usize)> = Vec::new();
    let mut next = 0usize;
    raw.iter()
        .map(|&c| {
            if let Some(&(_, t)) = remap.iter().find(|&&(from, _)| from == c) {
                t
            } else {
                next += 1;
                remap.push((c, next));
                next
            }
        })
        .collect()
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Coloring", 2)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("colors", &self.assignment)?;
        st.end()
    }
}

fn check_total(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.n() {
        return Err(Error::argument(format!(
            "assignment covers {} vertices but the graph has {}",
            c.len(),
            g.n()
        )));
    }
    Ok(())
}

/// True iff no edge is monochromatic.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    check_total(g, c)?;
    for (u, v) in g.edges() {
        if c.color(u) == c.color(v) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// If the coloring is proper and every class has a dominator, returns one
/// dominator per class (the smallest vertex id whose neighborhood
/// contains the whole class). The checker is deliberately naive — it
/// walks the definition — so it stays independent of the search kernel.
pub fn find_dominators(g: &Graph, c: &Coloring) -> Result<Option<Vec<usize>>> {
    check_total(g, c)?;
    if !is_proper(g, c)? {
        return Ok(None);
    }
    let mut dominators = Vec::with_capacity(c.k());
    for color in 1..=c.k() {
        let members = c.class_members(color);
        let found = g
            .vertices()
            .find(|&w| members.iter().all(|&m| g.has_edge(w, m)));
        match found {
            Some(w) => dominators.push(w),
            None => return Ok(None),
        }
    }
    Ok(Some(dominators))
}

/// True iff the coloring is proper and every color class lies inside
/// some vertex's open neighborhood.
pub fn is_dominated_coloring(g: &Graph, c: &Coloring) -> Result<bool> {
    Ok(find_dominators(g, c)?.is_some())
}

/// If the coloring is a total dominator coloring, returns for each vertex
/// the (smallest) color whose class sits entirely inside that vertex's
/// neighborhood. Errors on graphs with isolated vertices.
pub fn find_td_witnesses(g: &Graph, c: &Coloring) -> Result<Option<Vec<usize>>> {
    check_total(g, c)?;
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::domain(format!(
            "total dominator coloring undefined: vertex {v} is isolated"
        )));
    }
    if !is_proper(g, c)? {
        return Ok(None);
    }
    let classes: Vec<Vec<usize>> = (1..=c.k()).map(|col| c.class_members(col)).collect();
    let mut witnesses = Vec::with_capacity(g.n());
    for v in g.vertices() {
        let found = (1..=c.k()).find(|&col| {
            let members = &classes[col - 1];
            !members.is_empty() && members.iter().all(|&m| g.has_edge(v, m))
        });
        match found {
            Some(col) => witnesses.push(col),
            None => return Ok(None),
        }
    }
    Ok(Some(witnesses))
}

/// True iff proper and every vertex is adjacent to all of some class.
pub fn is_total_dominator_coloring(g: &Graph, c: &Coloring) -> Result<bool> {
    Ok(find_td_witnesses(g, c)?.is_some())
}

/// A dominated coloring together with one dominator per class: the
/// checkable proof object behind a dominated-chromatic-number result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominatedColoringCertificate {
    pub coloring: Coloring,
    /// `dominators[i]` dominates color class i+1.
    pub dominators: Vec<usize>,
}

impl DominatedColoringCertificate {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        check_total(g, &self.coloring)?;
        if !is_proper(g, &self.coloring)? {
            return Err(Error::Certificate("coloring is not proper".into()));
        }
        if self.dominators.len() != self.coloring.k() {
            return Err(Error::Certificate(format!(
                "{} dominators for {} classes",
                self.dominators.len(),
                self.coloring.k()
            )));
        }
        for (i, &w) in self.dominators.iter().enumerate() {
            g.check_vertex(w)?;
            let members = self.coloring.class_members(i + 1);
            for m in members {
                if !g.has_edge(w, m) {
                    return Err(Error::Certificate(format!(
                        "vertex {w} does not dominate class {}: {m} not adjacent",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

impl Serialize for DominatedColoringCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DominatedColoringCertificate", 3)?;
        st.serialize_field("k", &self.coloring.k())?;
        st.serialize_field("colors", self.coloring.assignment())?;
        st.serialize_field("dominators", &self.dominators)?;
        st.end()
    }
}

/// A TD-coloring with, per vertex, a color class fully adjacent to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalDominatorCertificate {
    pub coloring: Coloring,
    /// `witnesses[v]` is a color (1-based) whose class is inside N(v).
    pub witnesses: Vec<usize>,
}

impl TotalDominatorCertificate {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        check_total(g, &self.coloring)?;
        if !is_proper(g, &self.coloring)? {
            return Err(Error::Certificate("coloring is not proper".into()));
        }
        if self.witnesses.len() != g.n() {
            return Err(Error::Certificate(
                "one witness class per vertex required".into(),
            ));
        }
        for v in g.vertices() {
            let col = self.witnesses[v];
            if col == 0 || col > self.coloring.k() {
                return Err(Error::Certificate(format!(
                    "witness color {col} for vertex {v} out of range"
                )));
            }
            let members = self.coloring.class_members(col);
            if members.is_empty() {
                return Err(Error::Certificate(format!("witness class {col} is empty")));
            }
            for m in members {
                if !g.has_edge(v, m) {
                    return Err(Error::Certificate(format!(
                        "class {col} is not inside N({v}): {m} not adjacent"
                    )));
                }
            }
        }
        Ok(())
    }
}

impl Serialize for TotalDominatorCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("TotalDominatorCertificate", 3)?;
        st.serialize_field("k", &self.coloring.k())?;
        st.serialize_field("colors", self.coloring.assignment())?;
        st.serialize_field("witnesses", &self.witnesses)?;
        st.end()
    }
}
