//! Graph class recognition.
//!
//! Every class is decided by two or three unrelated methods. A report is only
//! returned when they agree; a disagreement is an error, since it means one
//! of the methods is wrong. Non-members always carry a certificate that
//! [`Certificate::verify`] re-checks from scratch.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::catalog::{at_free_obstructions, catalog, PatternName};
use crate::graph::{Graph, GraphError, Vertex};
use crate::induced::{contains_induced, is_induced_embedding};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    Chordal,
    AtFree,
    DistanceHereditary,
    Ptolemaic,
    Tree,
    TriangleFree,
}

impl GraphClass {
    pub const ALL: [GraphClass; 6] = [
        GraphClass::Chordal,
        GraphClass::AtFree,
        GraphClass::DistanceHereditary,
        GraphClass::Ptolemaic,
        GraphClass::Tree,
        GraphClass::TriangleFree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Chordal => "chordal",
            GraphClass::AtFree => "at-free",
            GraphClass::DistanceHereditary => "distance-hereditary",
            GraphClass::Ptolemaic => "ptolemaic",
            GraphClass::Tree => "tree",
            GraphClass::TriangleFree => "triangle-free",
        }
    }

    /// True for classes whose definition assumes a connected graph.
    pub fn needs_connected(self) -> bool {
        matches!(self, GraphClass::DistanceHereditary | GraphClass::Ptolemaic)
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown graph class {0:?}")]
pub struct UnknownClass(pub String);

impl FromStr for GraphClass {
    type Err = UnknownClass;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        GraphClass::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .or(match key.as_str() {
                "atfree" => Some(GraphClass::AtFree),
                "dh" => Some(GraphClass::DistanceHereditary),
                _ => None,
            })
            .ok_or_else(|| UnknownClass(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{class}: methods disagree ({detail})")]
    Disagreement { class: GraphClass, detail: String },
    #[error("max_pattern must be at least 7, got {0}")]
    PatternBound(usize),
}

/// Why a graph is not in a class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Chordless cycle, listed in cyclic order.
    InducedCycle(Vec<Vertex>),
    /// Induced copy of a catalog pattern; `vertices[i]` is the image of
    /// pattern vertex `i`.
    InducedCopy { pattern: String, vertices: Vec<Vertex> },
    AsteroidalTriple([Vertex; 3]),
    /// Induced path strictly longer than the distance between its ends.
    NonGeodesicPath(Vec<Vertex>),
    /// `d(u,v)d(w,x) + d(u,x)d(v,w) < d(u,w)d(v,x)`.
    PtolemyQuadruple([Vertex; 4]),
    Triangle([Vertex; 3]),
    /// Two vertices in different components.
    Disconnected(Vertex, Vertex),
    NoVertices,
}

impl Certificate {
    /// Independent re-check against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let in_range = |vs: &[Vertex]| vs.iter().all(|&v| v < g.n());
        let distinct = |vs: &[Vertex]| vs.iter().copied().collect::<VertexSet>().len() == vs.len();
        match self {
            Certificate::InducedCycle(c) => {
                let k = c.len();
                if k < 4 || !in_range(c) || !distinct(c) {
                    return false;
                }
                (0..k).all(|i| {
                    (0..k).all(|j| {
                        let gap = (i + k - j) % k;
                        let consecutive = gap == 1 || gap == k - 1;
                        i == j || g.has_edge(c[i], c[j]) == consecutive
                    })
                })
            }
            Certificate::InducedCopy { pattern, vertices } => {
                let Ok(name) = pattern.parse::<PatternName>() else {
                    return false;
                };
                in_range(vertices) && is_induced_embedding(g, &catalog(name), vertices)
            }
            Certificate::AsteroidalTriple(t) => in_range(t) && distinct(t) && is_asteroidal(g, t),
            Certificate::NonGeodesicPath(p) => {
                if p.len() < 2 || !in_range(p) || !distinct(p) || !is_induced_path(g, p) {
                    return false;
                }
                let d = g.bfs(p[0])[p[p.len() - 1]];
                d.is_some_and(|d| d < p.len() - 1)
            }
            Certificate::PtolemyQuadruple(q) => {
                if !in_range(q) {
                    return false;
                }
                let dm = g.distances();
                let d = |a, b| dm.get(a, b);
                match (d(q[0], q[1]), d(q[2], q[3]), d(q[0], q[3]), d(q[1], q[2]), d(q[0], q[2]), d(q[1], q[3])) {
                    (Some(a), Some(b), Some(c), Some(e), Some(f), Some(h)) => a * b + c * e < f * h,
                    _ => false,
                }
            }
            Certificate::Triangle([a, b, c]) => {
                in_range(&[*a, *b, *c]) && g.has_edge(*a, *b) && g.has_edge(*b, *c) && g.has_edge(*a, *c)
            }
            Certificate::Disconnected(a, b) => {
                in_range(&[*a, *b]) && !g.reach_within(*a, &g.all()).contains(*b)
            }
            Certificate::NoVertices => g.n() == 0,
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |vs: &[Vertex]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Certificate::InducedCycle(c) => write!(f, "induced-cycle [{}]", list(c)),
            Certificate::InducedCopy { pattern, vertices } => {
                write!(f, "induced {pattern} [{}]", list(vertices))
            }
            Certificate::AsteroidalTriple(t) => write!(f, "asteroidal-triple [{}]", list(t)),
            Certificate::NonGeodesicPath(p) => write!(f, "non-geodesic-path [{}]", list(p)),
            Certificate::PtolemyQuadruple(q) => write!(f, "ptolemy-quadruple [{}]", list(q)),
            Certificate::Triangle(t) => write!(f, "triangle [{}]", list(t)),
            Certificate::Disconnected(a, b) => write!(f, "disconnected [{a},{b}]"),
            Certificate::NoVertices => f.write_str("no-vertices"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub class: GraphClass,
    pub member: bool,
    pub certificate: Option<Certificate>,
}

impl ClassReport {
    fn yes(class: GraphClass) -> Self {
        ClassReport { class, member: true, certificate: None }
    }

    fn no(class: GraphClass, cert: Certificate) -> Self {
        ClassReport { class, member: false, certificate: Some(cert) }
    }
}

pub fn classify(g: &Graph, class: GraphClass) -> Result<ClassReport, ClassError> {
    match class {
        GraphClass::Chordal => is_chordal(g),
        GraphClass::AtFree => is_at_free(g),
        GraphClass::DistanceHereditary => is_distance_hereditary(g),
        GraphClass::Ptolemaic => is_ptolemaic(g),
        GraphClass::Tree => Ok(is_tree(g)),
        GraphClass::TriangleFree => Ok(is_triangle_free(g)),
    }
}

fn agree(class: GraphClass, a: (&str, bool), b: (&str, bool)) -> Result<bool, ClassError> {
    if a.1 == b.1 {
        Ok(a.1)
    } else {
        Err(ClassError::Disagreement {
            class,
            detail: format!("{}={}, {}={}", a.0, a.1, b.0, b.1),
        })
    }
}

// ---------------------------------------------------------------- chordal

/// Maximum cardinality search order (ties to the least id).
pub fn mcs_order(g: &Graph) -> Vec<Vertex> {
    let mut weight = vec![0usize; g.n()];
    let mut done = VertexSet::empty();
    let mut order = Vec::with_capacity(g.n());
    for _ in 0..g.n() {
        let v = g
            .vertices()
            .filter(|&v| !done.contains(v))
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("vertex left");
        order.push(v);
        done.insert(v);
        for w in g.neighbors(v).difference(&done).iter() {
            weight[w] += 1;
        }
    }
    order
}

/// Perfect elimination ordering test on the reversed MCS order: every vertex's
/// earlier-visited neighbours must form a clique.
pub fn chordal_by_peo(g: &Graph) -> bool {
    let order = mcs_order(g);
    let mut seen = VertexSet::empty();
    for &v in &order {
        let earlier = g.neighbors(v).intersection(&seen);
        for a in earlier.iter() {
            if !earlier.difference(&g.closed_neighborhood(a)).is_empty() {
                return false;
            }
        }
        seen.insert(v);
    }
    true
}

/// Some chordless cycle of length at least `min_len` (4 or 5), or `None`.
///
/// For length 4 it grows an induced `a-b-c` into a cycle through a shortest
/// `a,c`-path avoiding `N[b]`; for 5 it does the same from an induced
/// `a-b-c-d` avoiding `N[b] ∪ N[c]`. Every hole of the requested length is
/// found this way, and the shortest closing path keeps the cycle chordless.
pub fn find_induced_cycle(g: &Graph, min_len: usize) -> Option<Vec<Vertex>> {
    assert!(min_len == 4 || min_len == 5, "min_len must be 4 or 5");
    let all = g.all();
    for b in g.vertices() {
        let nb = g.neighbors(b);
        for a in nb.iter() {
            if min_len == 4 {
                for c in nb.iter().filter(|&c| c > a && !g.has_edge(a, c)) {
                    let mut allowed = all.difference(&g.closed_neighborhood(b));
                    allowed.insert(a);
                    allowed.insert(c);
                    if let Some(p) = g.shortest_path_within(a, c, &allowed) {
                        let mut cyc = vec![b];
                        cyc.extend(p);
                        return Some(cyc);
                    }
                }
            } else {
                for c in nb.iter().filter(|&c| c != a && !g.has_edge(a, c)) {
                    let nbc = g.closed_neighborhood(b).union(&g.closed_neighborhood(c));
                    for d in g.neighbors(c).difference(&g.closed_neighborhood(b)).iter() {
                        if g.has_edge(a, d) || d < a {
                            continue;
                        }
                        let mut allowed = all.difference(&nbc);
                        allowed.insert(a);
                        allowed.insert(d);
                        if let Some(p) = g.shortest_path_within(d, a, &allowed) {
                            let mut cyc = vec![b, c];
                            cyc.extend(p);
                            return Some(cyc);
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn is_chordal(g: &Graph) -> Result<ClassReport, ClassError> {
    let cls = GraphClass::Chordal;
    let cycle = find_induced_cycle(g, 4);
    let member = agree(cls, ("peo", chordal_by_peo(g)), ("cycle-search", cycle.is_none()))?;
    Ok(match cycle {
        None => ClassReport::yes(cls),
        Some(c) => {
            debug_assert!(!member);
            ClassReport::no(cls, Certificate::InducedCycle(c))
        }
    })
}

// ---------------------------------------------------------------- AT-free

/// `u,v,w` with each pair joined by a path avoiding the closed neighbourhood
/// of the third.
fn is_asteroidal(g: &Graph, t: &[Vertex; 3]) -> bool {
    let leg = |a: Vertex, b: Vertex, w: Vertex| {
        let allowed = g.all().difference(&g.closed_neighborhood(w));
        allowed.contains(a) && allowed.contains(b) && g.reach_within(a, &allowed).contains(b)
    };
    let [u, v, w] = *t;
    leg(u, v, w) && leg(u, w, v) && leg(v, w, u)
}

/// Least asteroidal triple `u < v < w`, from the components of every
/// `G - N[w]` computed once.
pub fn find_asteroidal_triple(g: &Graph) -> Option<[Vertex; 3]> {
    let n = g.n();
    // comp[w][x] = component id of x in G - N[w], or usize::MAX inside N[w]
    let comp: Vec<Vec<usize>> = g
        .vertices()
        .map(|w| {
            let mut ids = vec![usize::MAX; n];
            let rest = g.all().difference(&g.closed_neighborhood(w));
            for (i, c) in g.induced_components(&rest).iter().enumerate() {
                for x in c.iter() {
                    ids[x] = i;
                }
            }
            ids
        })
        .collect();
    let leg = |a: Vertex, b: Vertex, w: Vertex| comp[w][a] != usize::MAX && comp[w][a] == comp[w][b];
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                if leg(u, v, w) && leg(u, w, v) && leg(v, w, u) {
                    return Some([u, v, w]);
                }
            }
        }
    }
    None
}

/// Brute force over all triples with a fresh search per leg.
pub fn at_free_by_triples(g: &Graph) -> bool {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                if is_asteroidal(g, &[u, v, w]) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_at_free(g: &Graph) -> Result<ClassReport, ClassError> {
    let cls = GraphClass::AtFree;
    let t = find_asteroidal_triple(g);
    agree(cls, ("components", t.is_none()), ("triples", at_free_by_triples(g)))?;
    Ok(match t {
        None => ClassReport::yes(cls),
        Some(t) => ClassReport::no(cls, Certificate::AsteroidalTriple(t)),
    })
}

/// Outcome of comparing [`is_at_free`] with the forbidden-pattern list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub at_free: bool,
    /// First obstruction found as an induced subgraph.
    pub obstruction: Option<(String, Vec<Vertex>)>,
    pub agree: bool,
    pub max_pattern: usize,
}

pub fn at_free_forbidden_crosscheck(g: &Graph, max_pattern: usize) -> Result<CrosscheckReport, ClassError> {
    if max_pattern < 7 {
        return Err(ClassError::PatternBound(max_pattern));
    }
    let at_free = find_asteroidal_triple(g).is_none();
    let obstruction = at_free_obstructions(max_pattern.min(g.n()))
        .into_iter()
        .find_map(|(name, p)| contains_induced(g, &p).map(|m| (name, m)));
    Ok(CrosscheckReport {
        at_free,
        agree: at_free == obstruction.is_none(),
        obstruction,
        max_pattern,
    })
}

// ------------------------------------------------------ distance-hereditary

fn is_induced_path(g: &Graph, p: &[Vertex]) -> bool {
    (0..p.len()).all(|i| (i + 1..p.len()).all(|j| g.has_edge(p[i], p[j]) == (j == i + 1)))
}

/// First induced path (depth-first from each start, neighbours in id order)
/// whose length exceeds the distance between its ends.
pub fn find_non_geodesic_induced_path(g: &Graph) -> Option<Vec<Vertex>> {
    let dm = g.distances();
    for s in g.vertices() {
        let mut path = vec![s];
        if let Some(p) = dfs_paths(g, &dm, &mut path, VertexSet::empty()) {
            return Some(p);
        }
    }
    None
}

/// `blocked` holds the closed neighbourhoods of every path vertex but the last.
fn dfs_paths(
    g: &Graph,
    dm: &crate::graph::DistanceMatrix,
    path: &mut Vec<Vertex>,
    blocked: VertexSet,
) -> Option<Vec<Vertex>> {
    let last = *path.last().unwrap();
    if dm.get(path[0], last) != Some(path.len() - 1) {
        return Some(path.clone());
    }
    let next_blocked = blocked.union(&g.closed_neighborhood(last));
    for w in g.neighbors(last).difference(&blocked).iter() {
        if path.contains(&w) {
            continue;
        }
        path.push(w);
        let found = dfs_paths(g, dm, path, next_blocked);
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// First induced house, hole of length at least five, domino or 3-fan.
pub fn dh_forbidden_copy(g: &Graph) -> Option<Certificate> {
    for name in [PatternName::House, PatternName::Domino, PatternName::Fan3] {
        if let Some(m) = contains_induced(g, &catalog(name)) {
            return Some(Certificate::InducedCopy { pattern: name.to_string(), vertices: m });
        }
    }
    find_induced_cycle(g, 5).map(Certificate::InducedCycle)
}

pub fn is_distance_hereditary(g: &Graph) -> Result<ClassReport, ClassError> {
    let cls = GraphClass::DistanceHereditary;
    g.require_connected()?;
    let path = find_non_geodesic_induced_path(g);
    let forb = dh_forbidden_copy(g);
    agree(cls, ("definitional", path.is_none()), ("forbidden", forb.is_none()))?;
    Ok(match path {
        None => ClassReport::yes(cls),
        Some(p) => ClassReport::no(cls, Certificate::NonGeodesicPath(p)),
    })
}

// -------------------------------------------------------------- Ptolemaic

/// Least ordered quadruple violating the Ptolemy inequality.
pub fn find_ptolemy_violation(g: &Graph) -> Option<[Vertex; 4]> {
    let dm = g.distances();
    let n = g.n();
    let d = |a, b| dm.get(a, b).expect("connected");
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                for x in 0..n {
                    if d(u, v) * d(w, x) + d(u, x) * d(v, w) < d(u, w) * d(v, x) {
                        return Some([u, v, w, x]);
                    }
                }
            }
        }
    }
    None
}

pub fn is_ptolemaic(g: &Graph) -> Result<ClassReport, ClassError> {
    let cls = GraphClass::Ptolemaic;
    g.require_connected()?;
    let q = find_ptolemy_violation(g);
    let chordal = is_chordal(g)?.member;
    let dh = is_distance_hereditary(g)?.member;
    let fan_free = contains_induced(g, &catalog(PatternName::Fan3)).is_none();
    let by_ineq = q.is_none();
    agree(cls, ("inequality", by_ineq), ("chordal+dh", chordal && dh))?;
    agree(cls, ("inequality", by_ineq), ("chordal+fan-free", chordal && fan_free))?;
    Ok(match q {
        None => ClassReport::yes(cls),
        Some(q) => ClassReport::no(cls, Certificate::PtolemyQuadruple(q)),
    })
}

// ------------------------------------------------- trees, triangle-free

pub fn find_triangle(g: &Graph) -> Option<[Vertex; 3]> {
    for (a, b) in g.edges() {
        let common = g.neighbors(a).intersection(&g.neighbors(b));
        if let Some(c) = common.iter().find(|&c| c > b) {
            return Some([a, b, c]);
        }
    }
    None
}

pub fn is_triangle_free(g: &Graph) -> ClassReport {
    match find_triangle(g) {
        None => ClassReport::yes(GraphClass::TriangleFree),
        Some(t) => ClassReport::no(GraphClass::TriangleFree, Certificate::Triangle(t)),
    }
}

pub fn is_tree(g: &Graph) -> ClassReport {
    let cls = GraphClass::Tree;
    if g.n() == 0 {
        return ClassReport::no(cls, Certificate::NoVertices);
    }
    let reach = g.reach_within(0, &g.all());
    if let Some(b) = g.all().difference(&reach).first() {
        return ClassReport::no(cls, Certificate::Disconnected(0, b));
    }
    if g.m() == g.n() - 1 {
        return ClassReport::yes(cls);
    }
    // connected with a cycle: a shortest cycle is chordless
    let cert = match find_triangle(g) {
        Some(t) => Certificate::Triangle(t),
        None => Certificate::InducedCycle(find_induced_cycle(g, 4).expect("a cyclic graph has a chordless cycle")),
    };
    ClassReport::no(cls, cert)
}
