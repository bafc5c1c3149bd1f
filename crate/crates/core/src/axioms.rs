//! Betweenness axioms on transit functions, decided by brute force.
//!
//! Each axiom is a universally quantified statement over a fixed tuple of
//! variables. Tuples are enumerated lexicographically in the axiom's own
//! variable order, so the reported witness is the least violating tuple.
//! `R(a,b) = {a,b}` is read as a set equality, so it holds for `a = b`.
//!
//! Distinctness per axiom, where it goes beyond what the body forces:
//! - `J0`, `JC`: `u,x,y,v` pairwise distinct (stated).
//! - `TW3`, `TWC`, `TWA`: `u,v,x` pairwise distinct (stated).
//! - `J2`: `u != v` (stated). `tr`: `u != v` as well, since without it any
//!   edge `ux` is a violation with `v = u`.
//! - `TW1`: `u != x` and `y != v`; `x = y` is allowed.
//! - `pt`, `dh`: all five variables pairwise distinct. Read literally, `z = x`
//!   makes every edge (for `pt`) or every induced P3 (for `dh`) a violation.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Vertex;
use crate::par::Exec;
use crate::transit::TransitFunction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown axiom id {0:?}")]
pub struct UnknownAxiom(pub String);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    B1,
    B1p,
    B2,
    B2p,
    J0,
    J2,
    J3,
    J4,
    J4p,
    JC,
    Tr,
    TW1,
    TW1p,
    TW2,
    TW3,
    TWC,
    TWA,
    Dh,
    Dh1,
    Pt,
    SP,
}

impl AxiomId {
    pub const ALL: [AxiomId; 21] = [
        AxiomId::B1,
        AxiomId::B1p,
        AxiomId::B2,
        AxiomId::B2p,
        AxiomId::J0,
        AxiomId::J2,
        AxiomId::J3,
        AxiomId::J4,
        AxiomId::J4p,
        AxiomId::JC,
        AxiomId::Tr,
        AxiomId::TW1,
        AxiomId::TW1p,
        AxiomId::TW2,
        AxiomId::TW3,
        AxiomId::TWC,
        AxiomId::TWA,
        AxiomId::Dh,
        AxiomId::Dh1,
        AxiomId::Pt,
        AxiomId::SP,
    ];

    pub fn name(self) -> &'static str {
        use AxiomId::*;
        match self {
            B1 => "b1",
            B1p => "b1p",
            B2 => "b2",
            B2p => "b2p",
            J0 => "J0",
            J2 => "J2",
            J3 => "J3",
            J4 => "J4",
            J4p => "J4p",
            JC => "JC",
            Tr => "tr",
            TW1 => "TW1",
            TW1p => "TW1p",
            TW2 => "TW2",
            TW3 => "TW3",
            TWC => "TWC",
            TWA => "TWA",
            Dh => "dh",
            Dh1 => "dh1",
            Pt => "pt",
            SP => "SP",
        }
    }

    /// Universally quantified variables, in witness order.
    pub fn variables(self) -> &'static [&'static str] {
        use AxiomId::*;
        match self {
            B1 | B1p | B2 | B2p | J2 | Tr | TW3 | TWC | TWA => &["u", "v", "x"],
            J3 | J4 | J4p => &["u", "v", "x", "y"],
            J0 | JC | Dh1 => &["u", "x", "y", "v"],
            TW1 => &["u", "v", "x", "y", "z"],
            TW1p => &["u", "v", "x", "w", "y", "z"],
            TW2 => &["u", "v", "x", "z"],
            Pt | Dh => &["u", "x", "y", "v", "z"],
            SP => &["x", "y"],
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = UnknownAxiom;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AxiomId::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| UnknownAxiom(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AxiomVerdict {
    pub axiom: AxiomId,
    /// Least violating tuple, in the order of [`AxiomId::variables`].
    pub witness: Option<Vec<Vertex>>,
}

impl AxiomVerdict {
    pub fn satisfied(&self) -> bool {
        self.witness.is_none()
    }

    pub fn named_witness(&self) -> Option<Vec<(&'static str, Vertex)>> {
        self.witness
            .as_ref()
            .map(|w| self.axiom.variables().iter().copied().zip(w.iter().copied()).collect())
    }
}

impl fmt::Display for AxiomVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.named_witness() {
            None => write!(f, "{}: satisfied", self.axiom),
            Some(w) => {
                write!(f, "{}: violated at", self.axiom)?;
                for (name, v) in w {
                    write!(f, " {name}={v}")?;
                }
                Ok(())
            }
        }
    }
}

fn distinct(xs: &[Vertex]) -> bool {
    xs.iter().enumerate().all(|(i, a)| xs[i + 1..].iter().all(|b| a != b))
}

/// Evaluates one instance: `true` when the premise fails or the conclusion
/// holds. `t` must have the axiom's arity.
pub fn holds_at(r: &TransitFunction, id: AxiomId, t: &[Vertex]) -> bool {
    use AxiomId::*;
    assert_eq!(t.len(), id.variables().len(), "arity of {id}");
    let p = |a: Vertex, b: Vertex| r.is_pair(a, b);
    let c = |a: Vertex, x: Vertex, b: Vertex| r.contains(a, x, b);
    match id {
        B1 => {
            let (u, v, x) = (t[0], t[1], t[2]);
            !(c(u, x, v) && x != v) || !c(x, v, u)
        }
        B1p => {
            let (u, v, x) = (t[0], t[1], t[2]);
            !(c(u, x, v) && v != x && !p(v, x)) || !c(u, v, x)
        }
        B2 => {
            let (u, v, x) = (t[0], t[1], t[2]);
            !c(u, x, v) || r.get(u, x).is_subset(&r.get(u, v))
        }
        B2p => {
            let (u, v, x) = (t[0], t[1], t[2]);
            !(c(u, x, v) && !p(u, x)) || r.get(x, v).is_subset(&r.get(u, v))
        }
        J0 => {
            let (u, x, y, v) = (t[0], t[1], t[2], t[3]);
            !(distinct(t) && c(u, x, y) && c(x, y, v)) || c(u, x, v)
        }
        J2 => {
            let (u, v, x) = (t[0], t[1], t[2]);
            !(p(u, x) && p(x, v) && u != v && !p(u, v)) || c(u, x, v)
        }
        J3 => {
            let (u, v, x, y) = (t[0], t[1], t[2], t[3]);
            !(c(u, x, y) && c(x, y, v) && x != y && !p(u, v)) || c(u, x, v)
        }
        J4 => {
            let (u, v, x, y) = (t[0], t[1], t[2], t[3]);
            !(c(u, x, y) && c(x, y, v) && x != y && p(u, x) && p(y, v) && !p(u, v)) || c(u, x, v)
        }
        J4p => {
            let (u, v, x, y) = (t[0], t[1], t[2], t[3]);
            !(c(u, x, y) && c(x, y, v) && !p(u, x) && !p(y, v) && !p(x, y) && !p(u, v))
                || c(u, x, v)
        }
        JC => {
            let (u, x, y, v) = (t[0], t[1], t[2], t[3]);
            !(distinct(t) && c(u, x, y) && c(x, y, v) && p(x, y)) || c(u, x, v)
        }
        Tr => {
            let (u, v, x) = (t[0], t[1], t[2]);
            !(u != v && p(u, x) && p(x, v)) || c(u, x, v)
        }
        TW1 => {
            let (u, v, x, y, z) = (t[0], t[1], t[2], t[3], t[4]);
            !(c(u, x, v)
                && c(u, y, v)
                && u != x
                && y != v
                && p(x, z)
                && p(z, y)
                && !p(x, v)
                && !p(u, y))
                || c(u, z, v)
        }
        TW1p => {
            let (u, v, x, w, y, z) = (t[0], t[1], t[2], t[3], t[4], t[5]);
            !(c(u, x, v)
                && c(u, y, v)
                && x != u
                && y != v
                && !p(x, v)
                && !p(u, y)
                && p(x, z)
                && p(z, w)
                && p(w, y)
                && !p(u, w))
                || c(u, z, v)
        }
        TW2 => {
            let (u, v, x, z) = (t[0], t[1], t[2], t[3]);
            !(c(u, x, v) && !p(u, x) && !p(x, v) && p(x, z)) || c(u, z, v)
        }
        TW3 | TWC => {
            let (u, v, x) = (t[0], t[1], t[2]);
            if !(distinct(t) && c(u, x, v)) {
                return true;
            }
            r.get(x, v).iter().any(|v1| {
                v1 != x && p(x, v1) && !p(u, v1) && (id == TW3 || !c(v1, x, v))
            })
        }
        TWA => {
            let (u, v, x) = (t[0], t[1], t[2]);
            if !(distinct(t) && c(u, x, v)) {
                return true;
            }
            let rxv = r.get(x, v);
            rxv.intersection(&r.get(u, v)).iter().any(|x1| {
                x1 != x && p(x, x1) && !p(u, x1) && r.get(x1, v).is_proper_subset(&rxv)
            })
        }
        Pt => {
            let (u, x, y, v, z) = (t[0], t[1], t[2], t[3], t[4]);
            !(distinct(t) && c(u, x, y) && c(u, z, y) && c(x, y, v) && c(x, z, v) && p(x, y))
                || (!p(x, z) && !p(y, z))
        }
        Dh => {
            let (u, x, y, v, z) = (t[0], t[1], t[2], t[3], t[4]);
            let both = r.get(u, y).intersection(&r.get(x, v));
            !(distinct(t)
                && both.contains(x)
                && both.contains(y)
                && both.contains(z)
                && !p(u, v)
                && p(x, y)
                && x != y
                && p(u, z)
                && p(v, z))
                || !p(x, z)
                || !p(y, z)
        }
        Dh1 => {
            let (u, x, y, v) = (t[0], t[1], t[2], t[3]);
            !(c(u, x, y) && c(x, y, v) && p(x, y) && x != y && !p(u, x) && !p(y, v)) || c(u, x, v)
        }
        SP => {
            let (x, y) = (t[0], t[1]);
            p(x, y) || r.get(x, y) == r.universe()
        }
    }
}

/// Least violating tuple whose first variable is `first`.
fn search_from(r: &TransitFunction, id: AxiomId, first: Vertex) -> Option<Vec<Vertex>> {
    let k = id.variables().len();
    let n = r.n();
    let mut t = vec![0; k];
    t[0] = first;
    if k == 1 {
        return (!holds_at(r, id, &t)).then_some(t);
    }
    loop {
        if !holds_at(r, id, &t) {
            return Some(t);
        }
        // odometer over positions 1..k
        let mut i = k - 1;
        loop {
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
            if i == 1 {
                return None;
            }
            i -= 1;
        }
    }
}

pub fn check_axiom(r: &TransitFunction, id: AxiomId) -> AxiomVerdict {
    check_axiom_with(r, id, Exec::Sequential)
}

/// Same result as [`check_axiom`]; `exec` only splits the work over the first
/// variable.
pub fn check_axiom_with(r: &TransitFunction, id: AxiomId, exec: Exec) -> AxiomVerdict {
    let firsts: Vec<Vertex> = (0..r.n()).collect();
    let witness = exec.find_first(&firsts, |&a| search_from(r, id, a));
    AxiomVerdict { axiom: id, witness }
}

pub fn check_axioms(r: &TransitFunction, ids: &[AxiomId]) -> Vec<AxiomVerdict> {
    ids.iter().map(|&id| check_axiom(r, id)).collect()
}

pub fn check_axioms_with(r: &TransitFunction, ids: &[AxiomId], exec: Exec) -> Vec<AxiomVerdict> {
    exec.map(ids, |&id| check_axiom(r, id))
}

/// Convenience: do all of `ids` hold?
pub fn satisfies_all(r: &TransitFunction, ids: &[AxiomId]) -> bool {
    ids.iter().all(|&id| check_axiom(r, id).satisfied())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, PatternName};
    use crate::tollwalk::toll_transit;

    fn t_of(p: PatternName) -> TransitFunction {
        toll_transit(&catalog(p)).unwrap()
    }

    #[test]
    fn names_parse() {
        for a in AxiomId::ALL {
            assert_eq!(a.name().parse::<AxiomId>().unwrap(), a);
        }
        assert!("ba".parse::<AxiomId>().is_err());
    }

    #[test]
    fn c4_violates_jc_at_consecutive_vertices() {
        let v = check_axiom(&t_of(PatternName::C4), AxiomId::JC);
        assert_eq!(v.witness, Some(vec![0, 1, 2, 3]));
        assert!(!holds_at(&t_of(PatternName::C4), AxiomId::JC, &[0, 1, 2, 3]));
    }

    #[test]
    fn c6_violates_twc() {
        assert!(!check_axiom(&t_of(PatternName::Cycle(6)), AxiomId::TWC).satisfied());
    }

    #[test]
    fn path4_satisfies_jc_and_tr() {
        let r = t_of(PatternName::Path(4));
        let vs = check_axioms(&r, &[AxiomId::JC, AxiomId::Tr]);
        assert!(vs.iter().all(AxiomVerdict::satisfied));
        assert!(check_axioms(&r, &[]).is_empty());
    }

    #[test]
    fn triangle_violates_tr() {
        assert!(!check_axiom(&t_of(PatternName::Complete(3)), AxiomId::Tr).satisfied());
    }

    #[test]
    fn parallel_matches_sequential() {
        let r = t_of(PatternName::Cycle(7));
        for id in AxiomId::ALL {
            assert_eq!(check_axiom(&r, id), check_axiom_with(&r, id, Exec::Parallel), "{id}");
        }
    }

    #[test]
    fn witnesses_reproduce() {
        for p in [PatternName::House, PatternName::Cycle(6), PatternName::Fan3, PatternName::Domino] {
            let r = t_of(p);
            for id in AxiomId::ALL {
                if let Some(w) = check_axiom(&r, id).witness {
                    assert!(!holds_at(&r, id, &w), "{p} {id}");
                }
            }
        }
    }
}
