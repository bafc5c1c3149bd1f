//! Theorem ids, per-graph checks and corpus sweeps.

use std::fmt;
use std::str::FromStr;

use crate::axioms::{check_axiom, AxiomId};
use crate::classes::{classify, ClassReport, GraphClass};
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::par::Exec;
use crate::tollwalk::toll_transit;
use crate::transit::TransitFunction;

use super::enumerate::{corpus_up_to, GraphSource};
use super::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    ThmJcChordal,
    LemTrTrianglefree,
    ThmJcTrTree,
    CorB1pAtfree,
    ThmPtPtolemaic,
    ThmDhDh1Dh,
    PropChordalTwc,
    PropJcImpliesB2,
    PropAtfreeJ4pB2p,
    PropAtfreeTwa,
    PropDhB2Twc,
    CharChordal,
    CharTree,
    CharAtfree,
    CharPtolemaic,
    CharDh,
}

/// What a theorem relates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// `T` satisfies every listed axiom iff `G` is in the class.
    Iff(&'static [AxiomId], GraphClass),
    /// Class membership implies every listed axiom.
    ClassImplies(GraphClass, &'static [AxiomId]),
    /// The first axiom list implies the second.
    AxiomsImply(&'static [AxiomId], &'static [AxiomId]),
}

use AxiomId::*;

const CHAR_CHORDAL: &[AxiomId] = &[B2, J2, JC, TW1, TW2, TWC];
const CHAR_TREE: &[AxiomId] = &[B2, Tr, JC, TW1, TW2, TWC];
const CHAR_ATFREE: &[AxiomId] = &[B1p, B2p, J2, J4, J4p, TW1p, TWA];
const CHAR_PTOLEMAIC: &[AxiomId] = &[B2, J2, JC, TW1, TW2, TWC, Pt];
const CHAR_DH: &[AxiomId] = &[B2, J2, J4, Dh, Dh1, TW1p, TWC];

impl TheoremId {
    pub const ALL: [TheoremId; 16] = [
        TheoremId::ThmJcChordal,
        TheoremId::LemTrTrianglefree,
        TheoremId::ThmJcTrTree,
        TheoremId::CorB1pAtfree,
        TheoremId::ThmPtPtolemaic,
        TheoremId::ThmDhDh1Dh,
        TheoremId::PropChordalTwc,
        TheoremId::PropJcImpliesB2,
        TheoremId::PropAtfreeJ4pB2p,
        TheoremId::PropAtfreeTwa,
        TheoremId::PropDhB2Twc,
        TheoremId::CharChordal,
        TheoremId::CharTree,
        TheoremId::CharAtfree,
        TheoremId::CharPtolemaic,
        TheoremId::CharDh,
    ];

    pub fn name(self) -> &'static str {
        use TheoremId::*;
        match self {
            ThmJcChordal => "thm-jc-chordal",
            LemTrTrianglefree => "lem-tr-trianglefree",
            ThmJcTrTree => "thm-jc-tr-tree",
            CorB1pAtfree => "cor-b1p-atfree",
            ThmPtPtolemaic => "thm-pt-ptolemaic",
            ThmDhDh1Dh => "thm-dh-dh1-dh",
            PropChordalTwc => "prop-chordal-twc",
            PropJcImpliesB2 => "prop-jc-implies-b2",
            PropAtfreeJ4pB2p => "prop-atfree-j4p-b2p",
            PropAtfreeTwa => "prop-atfree-twa",
            PropDhB2Twc => "prop-dh-b2-twc",
            CharChordal => "char-chordal",
            CharTree => "char-tree",
            CharAtfree => "char-atfree",
            CharPtolemaic => "char-ptolemaic",
            CharDh => "char-dh",
        }
    }

    pub fn shape(self) -> Shape {
        use GraphClass as C;
        use TheoremId::*;
        match self {
            ThmJcChordal => Shape::Iff(&[JC], C::Chordal),
            LemTrTrianglefree => Shape::Iff(&[Tr], C::TriangleFree),
            ThmJcTrTree => Shape::Iff(&[JC, Tr], C::Tree),
            CorB1pAtfree => Shape::Iff(&[B1p], C::AtFree),
            ThmPtPtolemaic => Shape::Iff(&[JC, Pt], C::Ptolemaic),
            ThmDhDh1Dh => Shape::Iff(&[Dh, Dh1], C::DistanceHereditary),
            PropChordalTwc => Shape::ClassImplies(C::Chordal, &[TWC]),
            PropJcImpliesB2 => Shape::AxiomsImply(&[JC], &[B2]),
            PropAtfreeJ4pB2p => Shape::ClassImplies(C::AtFree, &[J4p, B2p]),
            PropAtfreeTwa => Shape::ClassImplies(C::AtFree, &[TWA]),
            PropDhB2Twc => Shape::ClassImplies(C::DistanceHereditary, &[B2, TWC]),
            CharChordal => Shape::Iff(CHAR_CHORDAL, C::Chordal),
            CharTree => Shape::Iff(CHAR_TREE, C::Tree),
            CharAtfree => Shape::Iff(CHAR_ATFREE, C::AtFree),
            CharPtolemaic => Shape::Iff(CHAR_PTOLEMAIC, C::Ptolemaic),
            CharDh => Shape::Iff(CHAR_DH, C::DistanceHereditary),
        }
    }

    pub fn is_implication(self) -> bool {
        !matches!(self.shape(), Shape::Iff(..))
    }

    pub fn is_characterization(self) -> bool {
        self.name().starts_with("char-")
    }

    /// Axiom list and class of a characterization id.
    pub fn characterization(self) -> Option<(&'static [AxiomId], GraphClass)> {
        match (self.is_characterization(), self.shape()) {
            (true, Shape::Iff(ax, c)) => Some((ax, c)),
            _ => None,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = HarnessError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| HarnessError::UnknownTheorem(s.to_string()))
    }
}

/// One theorem evaluated on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCheck {
    pub id: TheoremId,
    /// Axiom side for iff-theorems; the hypothesis for implications.
    pub left: bool,
    /// Class side for iff-theorems; for implications the conclusion, which
    /// is only evaluated when the hypothesis holds.
    pub right: Option<bool>,
    pub agree: bool,
    /// First axiom violation or class certificate when the sides differ.
    pub witness: Option<String>,
}

/// First failing axiom of `ids` on `t`, rendered.
fn first_violation(t: &TransitFunction, ids: &[AxiomId]) -> Option<String> {
    ids.iter().map(|&a| check_axiom(t, a)).find(|v| !v.satisfied()).map(|v| v.to_string())
}

fn class_witness(r: &ClassReport) -> Option<String> {
    r.certificate.as_ref().map(|c| format!("{}: {c}", r.class))
}

pub fn verify_theorem(id: TheoremId, g: &Graph) -> Result<TheoremCheck, HarnessError> {
    let t = toll_transit(g)?;
    verify_theorem_on(id, g, &t)
}

/// [`verify_theorem`] with `T` precomputed.
pub fn verify_theorem_on(id: TheoremId, g: &Graph, t: &TransitFunction) -> Result<TheoremCheck, HarnessError> {
    let check = match id.shape() {
        Shape::Iff(axioms, class) => {
            let violation = first_violation(t, axioms);
            let left = violation.is_none();
            let report = classify(g, class)?;
            let right = report.member;
            let witness = (left != right).then(|| violation.or_else(|| class_witness(&report))).flatten();
            TheoremCheck { id, left, right: Some(right), agree: left == right, witness }
        }
        Shape::ClassImplies(class, concl) => {
            let report = classify(g, class)?;
            let (right, witness) = if report.member {
                let v = first_violation(t, concl);
                (Some(v.is_none()), v)
            } else {
                (None, None)
            };
            TheoremCheck { id, left: report.member, right, agree: right != Some(false), witness }
        }
        Shape::AxiomsImply(hyp, concl) => {
            let left = first_violation(t, hyp).is_none();
            let (right, witness) = if left {
                let v = first_violation(t, concl);
                (Some(v.is_none()), v)
            } else {
                (None, None)
            };
            TheoremCheck { id, left, right, agree: right != Some(false), witness }
        }
    };
    Ok(check)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    /// graph6 form of the graph.
    pub graph: String,
    pub left: bool,
    pub right: Option<bool>,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub id: TheoremId,
    pub graphs_checked: usize,
    /// Graphs on which the left side held. For implications this is the
    /// number of graphs that actually exercised the conclusion.
    pub left_true: usize,
    pub disagreements: Vec<Disagreement>,
}

impl EquivalenceReport {
    pub fn holds(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Runs several theorems over the same graphs, computing each `T` once.
/// Reports come back in the order of `ids`; graph order is preserved.
pub fn sweep_graphs(ids: &[TheoremId], graphs: &[Graph], exec: Exec) -> Result<Vec<EquivalenceReport>, HarnessError> {
    let per_graph: Vec<Result<Vec<TheoremCheck>, HarnessError>> = exec.map(graphs, |g| {
        let t = toll_transit(g)?;
        ids.iter().map(|&id| verify_theorem_on(id, g, &t)).collect()
    });
    let mut reports: Vec<EquivalenceReport> = ids
        .iter()
        .map(|&id| EquivalenceReport { id, graphs_checked: 0, left_true: 0, disagreements: Vec::new() })
        .collect();
    for (g, checks) in graphs.iter().zip(per_graph) {
        for (rep, c) in reports.iter_mut().zip(checks?) {
            rep.graphs_checked += 1;
            rep.left_true += c.left as usize;
            if !c.agree {
                rep.disagreements.push(Disagreement {
                    graph: to_graph6(g).unwrap_or_else(|_| format!("{g:?}")),
                    left: c.left,
                    right: c.right,
                    witness: c.witness,
                });
            }
        }
    }
    Ok(reports)
}

/// [`sweep_graphs`] over every connected graph with at most `max_n` vertices.
pub fn sweep(id: TheoremId, max_n: usize, source: GraphSource<'_>, exec: Exec) -> Result<EquivalenceReport, HarnessError> {
    if max_n < 2 {
        return Err(HarnessError::Contract(format!("sweep needs max_n >= 2, got {max_n}")));
    }
    let graphs = corpus_up_to(max_n, source, exec)?;
    Ok(sweep_graphs(&[id], &graphs, exec)?.pop().expect("one report"))
}
