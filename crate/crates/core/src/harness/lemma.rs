//! The induced-path lemmas: under their axiom hypotheses, an induced `u,v`-path
//! lies inside `R(u,v)`, and so do certain neighbours of its inner vertices.

use std::fmt;
use std::str::FromStr;

use crate::axioms::{check_axiom, AxiomId};
use crate::bitset::VertexSet;
use crate::graph::{Graph, Vertex};
use crate::tollwalk::toll_transit;

use super::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathLemma {
    Easy1,
    Easy,
    EasyDh,
}

impl PathLemma {
    pub const ALL: [PathLemma; 3] = [PathLemma::Easy1, PathLemma::Easy, PathLemma::EasyDh];

    pub fn name(self) -> &'static str {
        match self {
            PathLemma::Easy1 => "easy1",
            PathLemma::Easy => "easy",
            PathLemma::EasyDh => "easydh",
        }
    }

    pub fn hypotheses(self) -> &'static [AxiomId] {
        use AxiomId::*;
        match self {
            PathLemma::Easy1 => &[J2, JC, TW2],
            PathLemma::Easy => &[J2, J4, J4p, TW1p],
            PathLemma::EasyDh => &[J2, J4, Dh1, TW1p],
        }
    }
}

impl fmt::Display for PathLemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PathLemma {
    type Err = HarnessError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PathLemma::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| HarnessError::UnknownLemma(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaViolation {
    pub path: Vec<Vertex>,
    /// The vertex missing from `T(u,v)`.
    pub missing: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub lemma: PathLemma,
    /// Set when a hypothesis fails; the lemma is then not evaluated.
    pub precondition_violation: Option<String>,
    pub paths_checked: usize,
    pub violations: Vec<LemmaViolation>,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.precondition_violation.is_none() && self.violations.is_empty()
    }
}

/// Every induced path with at least two vertices, each listed once from its
/// smaller end.
pub fn induced_paths(g: &Graph) -> Vec<Vec<Vertex>> {
    fn grow(g: &Graph, path: &mut Vec<Vertex>, blocked: VertexSet, out: &mut Vec<Vec<Vertex>>) {
        let last = *path.last().unwrap();
        if path.len() >= 2 && path[0] < last {
            out.push(path.clone());
        }
        let next_blocked = blocked.union(&g.closed_neighborhood(last));
        for w in g.neighbors(last).difference(&blocked).iter() {
            if !path.contains(&w) {
                path.push(w);
                grow(g, path, next_blocked, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in g.vertices() {
        grow(g, &mut vec![s], VertexSet::empty(), &mut out);
    }
    out
}

/// Checks the lemma's conclusion for `T` on a connected graph.
///
/// The second claim is checked under both readings of which vertex must avoid
/// the neighbourhoods of `u` and `v`: `z` itself, or the inner vertex it hangs
/// off. Both are consequences of the walk definition.
pub fn induced_path_lemma_check(g: &Graph, lemma: PathLemma) -> Result<LemmaReport, HarnessError> {
    let t = toll_transit(g)?;
    let mut report = LemmaReport { lemma, precondition_violation: None, paths_checked: 0, violations: Vec::new() };
    for &a in lemma.hypotheses() {
        let v = check_axiom(&t, a);
        if !v.satisfied() {
            report.precondition_violation = Some(v.to_string());
            return Ok(report);
        }
    }
    for p in induced_paths(g) {
        let (u, v) = (p[0], p[p.len() - 1]);
        let tuv = t.get(u, v);
        let ends = g.closed_neighborhood(u).union(&g.closed_neighborhood(v));
        let mut must: VertexSet = p.iter().copied().collect();
        for &x in &p[1..p.len() - 1] {
            for z in g.neighbors(x).iter() {
                if z != u && z != v && (!ends.contains(z) || !ends.contains(x)) {
                    must.insert(z);
                }
            }
        }
        for missing in must.difference(&tuv).iter() {
            report.violations.push(LemmaViolation { path: p.clone(), missing });
        }
        report.paths_checked += 1;
    }
    Ok(report)
}
