//! Ternary structures `(X, D)` and partial isomorphisms between them.

use std::fmt;

use crate::bitset::VertexSet;
use crate::graph::{Graph, Vertex};
use crate::tollwalk::toll_transit;

use super::NondefError;

/// A ternary relation stored as the sets `F(x,z) = {y : D(x,y,z)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryStructure {
    n: usize,
    f: Vec<VertexSet>,
    companion: Option<Graph>,
}

impl TernaryStructure {
    /// Builds a structure from `F(x,z)` for every ordered pair, row-major, and
    /// checks conditions (i)-(iii).
    pub fn from_sets(n: usize, f: Vec<VertexSet>, companion: Option<Graph>) -> Result<Self, NondefError> {
        if f.len() != n * n {
            return Err(NondefError::Contract(format!("expected {} sets, got {}", n * n, f.len())));
        }
        let s = TernaryStructure { n, f, companion };
        s.validate()?;
        Ok(s)
    }

    pub fn from_triples<I>(n: usize, triples: I) -> Result<Self, NondefError>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Vertex)>,
    {
        let mut f = vec![VertexSet::empty(); n * n];
        for (x, y, z) in triples {
            if x >= n || y >= n || z >= n {
                return Err(NondefError::Contract(format!("triple ({x},{y},{z}) outside universe of size {n}")));
            }
            f[x * n + z].insert(y);
        }
        Self::from_sets(n, f, None)
    }

    /// Checks (i) `D(u,u,v)`, (ii) `D(u,x,v) => D(v,x,u)`, (iii) `D(u,x,u) => x = u`.
    pub fn validate(&self) -> Result<(), NondefError> {
        let n = self.n;
        for u in 0..n {
            for v in 0..n {
                if !self.d(u, u, v) {
                    return Err(NondefError::NotTransit(format!("(i) fails: D({u},{u},{v}) is false")));
                }
                if self.f[u * n + v] != self.f[v * n + u] {
                    let x = self.f[u * n + v].difference(&self.f[v * n + u]).first().unwrap_or_else(|| {
                        self.f[v * n + u].difference(&self.f[u * n + v]).first().unwrap()
                    });
                    return Err(NondefError::NotTransit(format!("(ii) fails for u={u} x={x} v={v}")));
                }
            }
            if self.f[u * n + u] != VertexSet::singleton(u) {
                return Err(NondefError::NotTransit(format!("(iii) fails: F({u},{u}) = {}", self.f[u * n + u])));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self, x: Vertex, y: Vertex, z: Vertex) -> bool {
        self.f[x * self.n + z].contains(y)
    }

    /// `F(x,z) = {y : D(x,y,z)}`.
    pub fn f(&self, x: Vertex, z: Vertex) -> VertexSet {
        self.f[x * self.n + z]
    }

    pub fn companion(&self) -> Option<&Graph> {
        self.companion.as_ref()
    }

    pub fn universe(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn label(&self, v: Vertex) -> String {
        self.companion.as_ref().map_or_else(|| v.to_string(), |g| g.label(v))
    }

    /// Distinct `u, v` are adjacent iff `F(u,v) ∪ F(v,u) = {u,v}`.
    pub fn underlying_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.f(u, v).union(&self.f(v, u)) == VertexSet::pair(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, edges).expect("pairs are distinct and in range")
    }

    /// Number of triples in `D`.
    pub fn len(&self) -> usize {
        self.f.iter().map(|s| s.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}

/// The W-structure: `D(x,y,z)` iff `y` lies on some toll `x,z`-walk.
pub fn w_structure(g: &Graph) -> Result<TernaryStructure, NondefError> {
    let t = toll_transit(g)?;
    let n = g.n();
    let mut f = Vec::with_capacity(n * n);
    for x in 0..n {
        for z in 0..n {
            f.push(t.get(x, z));
        }
    }
    TernaryStructure::from_sets(n, f, Some(g.clone()))
}

/// The unique scant structure whose underlying graph is `g`: `F(x,z)` is
/// `{x,z}` on edges and the whole universe on other distinct pairs.
pub fn scant_structure(g: &Graph) -> Result<TernaryStructure, NondefError> {
    let n = g.n();
    let all = g.all();
    let mut f = Vec::with_capacity(n * n);
    for x in 0..n {
        for z in 0..n {
            f.push(if x == z {
                VertexSet::singleton(x)
            } else if g.has_edge(x, z) {
                VertexSet::pair(x, z)
            } else {
                all
            });
        }
    }
    TernaryStructure::from_sets(n, f, Some(g.clone()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScantWitness {
    pub x: Vertex,
    pub y: Vertex,
    pub set: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScantVerdict {
    pub scant: bool,
    /// Every pair `x < y` whose set is neither `{x,y}` nor the universe, in
    /// row-major order.
    pub offending: Vec<ScantWitness>,
}

impl ScantVerdict {
    /// The first offending pair.
    pub fn witness(&self) -> Option<&ScantWitness> {
        self.offending.first()
    }

    /// The offending entry for the unordered pair `{x, y}`, if any.
    pub fn offending_pair(&self, x: Vertex, y: Vertex) -> Option<&ScantWitness> {
        let (x, y) = (x.min(y), x.max(y));
        self.offending.iter().find(|w| w.x == x && w.y == y)
    }

    pub fn describe(&self, s: &TernaryStructure) -> String {
        match self.witness() {
            None => "scant".to_string(),
            Some(w) => {
                let names: Vec<String> = w.set.iter().map(|v| s.label(v)).collect();
                format!(
                    "not scant: F({},{}) = {{{}}} ({} offending pairs)",
                    s.label(w.x),
                    s.label(w.y),
                    names.join(","),
                    self.offending.len()
                )
            }
        }
    }
}

pub fn is_scant(s: &TernaryStructure) -> Result<ScantVerdict, NondefError> {
    s.validate()?;
    let all = s.universe();
    let mut offending = Vec::new();
    for x in 0..s.n() {
        for y in x + 1..s.n() {
            let set = s.f(x, y);
            if set != VertexSet::pair(x, y) && set != all {
                offending.push(ScantWitness { x, y, set });
            }
        }
    }
    Ok(ScantVerdict { scant: offending.is_empty(), offending })
}

/// The pairs `(a_i, b_i)` chosen so far, in move order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PartialMap {
    pub pairs: Vec<(Vertex, Vertex)>,
}

impl PartialMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, a: Vertex, b: Vertex) {
        self.pairs.push((a, b));
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

impl FromIterator<(Vertex, Vertex)> for PartialMap {
    fn from_iter<I: IntoIterator<Item = (Vertex, Vertex)>>(iter: I) -> Self {
        PartialMap { pairs: iter.into_iter().collect() }
    }
}

impl fmt::Display for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(a, b)| format!("{a}->{b}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Whether the last pair of `pairs` keeps a partial isomorphism that held
/// without it. Only triples involving the new index are examined.
pub(crate) fn extends_partial_iso(pairs: &[(Vertex, Vertex)], a: &TernaryStructure, b: &TernaryStructure) -> bool {
    let Some((&(na, nb), rest)) = pairs.split_last() else { return true };
    if na >= a.n() || nb >= b.n() {
        return false;
    }
    for &(pa, pb) in rest {
        if (pa == na) != (pb == nb) {
            return false;
        }
    }
    let k = pairs.len();
    for i in 0..k {
        for j in 0..k {
            let (ai, bi) = pairs[i];
            let (aj, bj) = pairs[j];
            if a.d(na, ai, aj) != b.d(nb, bi, bj)
                || a.d(ai, na, aj) != b.d(bi, nb, bj)
                || a.d(ai, aj, na) != b.d(bi, bj, nb)
            {
                return false;
            }
        }
    }
    true
}

/// Well-defined, injective, and `D_A(a_i,a_j,a_k) <=> D_B(b_i,b_j,b_k)` for
/// every triple of chosen indices.
pub fn check_partial_isomorphism(m: &PartialMap, a: &TernaryStructure, b: &TernaryStructure) -> bool {
    (1..=m.pairs.len()).all(|k| extends_partial_iso(&m.pairs[..k], a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_by_name;
    use crate::nondef::gadgets::{build_g_d, build_g_d_prime, GadgetIds};

    #[test]
    fn k2_and_p3() {
        let w = w_structure(&catalog_by_name("complete:2").unwrap()).unwrap();
        assert_eq!(w.len(), 6);
        assert!(w.d(0, 1, 1) && w.d(0, 0, 1) && !w.d(0, 1, 0));
        let p = w_structure(&catalog_by_name("path:3").unwrap()).unwrap();
        assert!(p.d(0, 1, 2));
        assert!(!p.d(0, 2, 1));
    }

    #[test]
    fn invalid_relations_rejected() {
        assert!(matches!(TernaryStructure::from_triples(2, [(0, 0, 0), (1, 1, 1), (0, 0, 1)]), Err(NondefError::NotTransit(_))));
        let mut t: Vec<_> = (0..2).flat_map(|u| (0..2).map(move |v| (u, u, v))).collect();
        t.extend([(0, 1, 1), (1, 0, 0)]);
        assert!(TernaryStructure::from_triples(2, t.clone()).is_ok());
        t.push((0, 1, 0));
        assert!(TernaryStructure::from_triples(2, t).is_err());
    }

    #[test]
    fn underlying_graph_round_trip() {
        for name in ["C5", "house", "fan3", "path:4"] {
            let g = catalog_by_name(name).unwrap();
            assert_eq!(w_structure(&g).unwrap().underlying_graph(), g);
            assert_eq!(scant_structure(&g).unwrap().underlying_graph(), g);
        }
    }

    #[test]
    fn gadget_prime_has_short_interval() {
        let ids = GadgetIds::new(2);
        let w = w_structure(&build_g_d_prime(2).unwrap()).unwrap();
        assert!(!w.d(ids.v(2), ids.u(2), ids.x()));
        let v = is_scant(&w).unwrap();
        assert!(!v.scant);
        let want: VertexSet = [ids.v(1), ids.v(2), ids.x()].into_iter().collect();
        assert_eq!(v.offending_pair(ids.x(), ids.v(2)).unwrap().set, want);
        let g = w_structure(&build_g_d(2).unwrap()).unwrap();
        assert!(is_scant(&g).unwrap().scant);
        assert_eq!(g, TernaryStructure { companion: g.companion.clone(), ..scant_structure(&build_g_d(2).unwrap()).unwrap() });
    }

    #[test]
    fn partial_isomorphisms() {
        let a = w_structure(&catalog_by_name("C5").unwrap()).unwrap();
        assert!(check_partial_isomorphism(&PartialMap::new(), &a, &a));
        let id: PartialMap = (0..5).map(|v| (v, v)).collect();
        assert!(check_partial_isomorphism(&id, &a, &a));
        // not injective
        assert!(!check_partial_isomorphism(&[(0, 1), (2, 1)].into_iter().collect(), &a, &a));
        // not well defined
        assert!(!check_partial_isomorphism(&[(0, 1), (0, 2)].into_iter().collect(), &a, &a));
        // path:3 vs K3: 0,1,2 maps D(0,1,2) to D(0,1,2), false in K3
        let p = w_structure(&catalog_by_name("path:3").unwrap()).unwrap();
        let k = w_structure(&catalog_by_name("complete:3").unwrap()).unwrap();
        let m: PartialMap = (0..3).map(|v| (v, v)).collect();
        assert!(!check_partial_isomorphism(&m, &p, &k));
        assert!(check_partial_isomorphism(&[(0, 0), (2, 2)].into_iter().collect(), &p, &k));
    }
}
