//! Transit functions on `{0, ..., n-1}`.
//!
//! A transit function maps every unordered pair `{a,b}` (including `a = b`) to
//! a set with (t1) `a ∈ R(a,b)`, (t2) `R(a,b) = R(b,a)` and (t3) `R(a,a) = {a}`.
//!
//! File format: a first line `n`, then any number of lines `a b : c1 ... ck`.
//! Unlisted pairs default to `{a,b}`; `#` starts a comment line.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransitError {
    #[error("(t1) fails at pair ({a},{b}): R = {set}")]
    T1 { a: Vertex, b: Vertex, set: VertexSet },
    #[error("(t3) fails at {a}: R({a},{a}) = {set}")]
    T3 { a: Vertex, set: VertexSet },
    #[error("conflicting entries for pair ({a},{b})")]
    Conflict { a: Vertex, b: Vertex },
    #[error("no entry for pair ({a},{b}) and default pairs disabled")]
    Missing { a: Vertex, b: Vertex },
    #[error("element {v} out of range for universe of size {n}")]
    OutOfRange { v: usize, n: usize },
    #[error("universe of size {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TransitFunction {
    n: usize,
    rows: Vec<Vec<VertexSet>>,
}

impl std::fmt::Debug for TransitFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TransitFunction({})", self.to_text().replace('\n', "; "))
    }
}

impl TransitFunction {
    /// Validates and builds a transit function. With `default_pairs`, pairs
    /// without an entry get `{a,b}`; otherwise every off-diagonal pair needs
    /// one. Diagonal entries may be omitted (t3 fixes them).
    pub fn new<I>(n: usize, entries: I, default_pairs: bool) -> Result<Self, TransitError>
    where
        I: IntoIterator<Item = ((Vertex, Vertex), VertexSet)>,
    {
        if n > MAX_VERTICES {
            return Err(TransitError::TooLarge(n));
        }
        let mut given: BTreeMap<(Vertex, Vertex), VertexSet> = BTreeMap::new();
        for ((a, b), set) in entries {
            for v in [a, b].into_iter().chain(set.iter()) {
                if v >= n {
                    return Err(TransitError::OutOfRange { v, n });
                }
            }
            let key = (a.min(b), a.max(b));
            if let Some(prev) = given.insert(key, set) {
                if prev != set {
                    return Err(TransitError::Conflict { a: key.0, b: key.1 });
                }
            }
        }
        let mut rows = vec![vec![VertexSet::empty(); n]; n];
        for a in 0..n {
            for b in a..n {
                let set = match given.get(&(a, b)) {
                    Some(s) => *s,
                    None if a == b => VertexSet::singleton(a),
                    None if default_pairs => VertexSet::pair(a, b),
                    None => return Err(TransitError::Missing { a, b }),
                };
                rows[a][b] = set;
                rows[b][a] = set;
            }
        }
        let r = TransitFunction { n, rows };
        r.validate()?;
        Ok(r)
    }

    /// Builds from a full `n x n` table already known to be a transit function.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<VertexSet>>) -> Self {
        let r = TransitFunction { n: rows.len(), rows };
        debug_assert!(r.validate().is_ok());
        r
    }

    /// Checks (t1)-(t3) on the stored table.
    pub fn validate(&self) -> Result<(), TransitError> {
        for a in 0..self.n {
            let s = self.rows[a][a];
            if s != VertexSet::singleton(a) {
                return Err(TransitError::T3 { a, set: s });
            }
            for b in a + 1..self.n {
                let s = self.rows[a][b];
                if self.rows[b][a] != s {
                    return Err(TransitError::Conflict { a, b });
                }
                if !s.contains(a) || !s.contains(b) {
                    return Err(TransitError::T1 { a, b, set: s });
                }
                if !s.is_subset(&VertexSet::full(self.n)) {
                    return Err(TransitError::OutOfRange {
                        v: s.difference(&VertexSet::full(self.n)).first().unwrap(),
                        n: self.n,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn universe(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn get(&self, a: Vertex, b: Vertex) -> VertexSet {
        self.rows[a][b]
    }

    #[inline]
    pub fn contains(&self, a: Vertex, x: Vertex, b: Vertex) -> bool {
        self.rows[a][b].contains(x)
    }

    /// `R(a,b) = {a,b}`; true for `a = b` as a set equality.
    #[inline]
    pub fn is_pair(&self, a: Vertex, b: Vertex) -> bool {
        self.rows[a][b] == VertexSet::pair(a, b)
    }

    /// `G_R`: `ab` is an edge iff `a != b` and `R(a,b) = {a,b}`.
    pub fn underlying_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.is_pair(a, b) {
                    edges.push((a, b));
                }
            }
        }
        Graph::from_edges(self.n, edges).expect("pairs are distinct and in range")
    }

    /// Entries differing from the default `{a,b}`, each pair once with
    /// `a <= b`, in lexicographic order.
    pub fn non_default_entries(&self) -> Vec<((Vertex, Vertex), VertexSet)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !self.is_pair(a, b) {
                    out.push(((a, b), self.rows[a][b]));
                }
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for ((a, b), s) in self.non_default_entries() {
            out.push_str(&format!("{a} {b} :"));
            for c in s.iter() {
                out.push_str(&format!(" {c}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, TransitError> {
        let perr = |line: usize, msg: String| TransitError::Parse { line, msg };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or_else(|| perr(1, "missing header".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| perr(hline, format!("header must be the universe size, got {header:?}")))?;
        let mut entries = Vec::new();
        let mut seen = BTreeMap::new();
        for (lineno, line) in lines {
            let (lhs, rhs) = line
                .split_once(':')
                .ok_or_else(|| perr(lineno, "expected \"a b : c1 ... ck\"".into()))?;
            let parse_ids = |s: &str| -> Result<Vec<usize>, TransitError> {
                s.split_whitespace()
                    .map(|t| t.parse().map_err(|_| perr(lineno, format!("invalid element {t:?}"))))
                    .collect()
            };
            let ab = parse_ids(lhs)?;
            if ab.len() != 2 {
                return Err(perr(lineno, "pair must name exactly two elements".into()));
            }
            let set: Vec<usize> = parse_ids(rhs)?;
            if let Some(&v) = ab.iter().chain(set.iter()).find(|&&v| v >= n) {
                return Err(perr(lineno, format!("element {v} out of range for n = {n}")));
            }
            let key = (ab[0].min(ab[1]), ab[0].max(ab[1]));
            if seen.insert(key, lineno).is_some() {
                return Err(perr(lineno, format!("pair ({},{}) listed twice", key.0, key.1)));
            }
            let set: VertexSet = set.into_iter().collect();
            // validate per line so errors carry the line number
            if key.0 == key.1 && set != VertexSet::singleton(key.0) {
                return Err(perr(lineno, TransitError::T3 { a: key.0, set }.to_string()));
            }
            if !set.contains(key.0) || !set.contains(key.1) {
                return Err(perr(lineno, TransitError::T1 { a: key.0, b: key.1, set }.to_string()));
            }
            entries.push((key, set));
        }
        TransitFunction::new(n, entries, true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[Vertex]) -> VertexSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn defaults_and_rejections() {
        let r = TransitFunction::new(2, [], true).unwrap();
        assert_eq!(r.get(0, 1), set(&[0, 1]));
        assert_eq!(r.get(1, 1), set(&[1]));
        assert!(matches!(
            TransitFunction::new(2, [((0, 0), set(&[0, 1]))], true),
            Err(TransitError::T3 { a: 0, .. })
        ));
        assert!(matches!(
            TransitFunction::new(3, [((0, 2), set(&[0, 1]))], true),
            Err(TransitError::T1 { a: 0, b: 2, .. })
        ));
        assert!(matches!(TransitFunction::new(2, [], false), Err(TransitError::Missing { a: 0, b: 1 })));
        assert!(matches!(
            TransitFunction::new(3, [((0, 2), set(&[0, 1, 2])), ((2, 0), set(&[0, 2]))], true),
            Err(TransitError::Conflict { .. })
        ));
        assert!(matches!(
            TransitFunction::new(2, [((0, 1), set(&[0, 1, 5]))], true),
            Err(TransitError::OutOfRange { v: 5, .. })
        ));
    }

    #[test]
    fn symmetric_closure() {
        let r = TransitFunction::new(3, [((2, 0), set(&[0, 1, 2]))], true).unwrap();
        assert_eq!(r.get(0, 2), r.get(2, 0));
        assert!(r.contains(0, 1, 2));
        assert!(!r.is_pair(0, 2));
        assert!(r.is_pair(1, 1));
    }

    #[test]
    fn all_pairs_gives_complete_graph() {
        let g = TransitFunction::new(5, [], true).unwrap().underlying_graph();
        assert_eq!(g.m(), 10);
    }

    #[test]
    fn text_round_trip_and_errors() {
        let text = "# path\n3\n0 2 : 2 1 0\n";
        let r = TransitFunction::from_text(text).unwrap();
        assert_eq!(r.get(0, 2), set(&[0, 1, 2]));
        assert_eq!(r.to_text(), "3\n0 2 : 0 1 2\n");
        assert_eq!(TransitFunction::from_text(&r.to_text()).unwrap(), r);
        for (bad, line) in [
            ("x\n", 1),
            ("3\n0 2 1\n", 2),
            ("3\n0 : 0\n", 2),
            ("3\n0 5 : 0 5\n", 2),
            ("3\n0 2 : 0\n", 2),
            ("3\n1 1 : 1 2\n", 2),
            ("3\n0 2 : 0 1 2\n2 0 : 0 2\n", 3),
        ] {
            match TransitFunction::from_text(bad) {
                Err(TransitError::Parse { line: l, .. }) => assert_eq!(l, line, "{bad:?}"),
                other => panic!("{bad:?}: {other:?}"),
            }
        }
    }
}
