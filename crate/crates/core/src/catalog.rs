//! Named graphs: small classics, the distance-hereditary obstructions, the
//! AT-free obstructions and the fan families.
//!
//! Every graph carries display labels. For the drawn patterns the labels are
//! the vertex names printed in the drawings (`u`, `v`, `x`, `y_2`, ...).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::nondef::gadgets;

const AT_FREE_PATTERNS: &str = include_str!("../data/at_free_patterns.txt");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown pattern name {0:?}")]
    Unknown(String),
    #[error("parameter {value} out of range for {family} (needs {min}..={max})")]
    Parameter {
        family: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternName {
    House,
    Domino,
    /// F_2^5: path u x y v plus the vertex z adjacent to all four.
    Fan3,
    C4,
    C5,
    /// C_k, k >= 3 (`Ck:k` and `cycle:k`).
    Cycle(usize),
    /// Induced cycle of length k >= 5.
    Hole(usize),
    Path(usize),
    Complete(usize),
    T2,
    X2,
    X3,
    /// X_30 ..= X_41.
    X(u8),
    /// F_2^{n+1}: path p_1..p_n plus universal y_2.
    F2(usize),
    /// F_3^n: path p_1..p_n plus adjacent universal y_1, y_2.
    F3(usize),
    /// F_4^n: F_3^n without y_1 y_2.
    F4(usize),
    XF2(usize),
    XF3(usize),
    XF4(usize),
    PGraph,
    Pan5,
    /// The non-definability gadget G_d.
    GadgetG(usize),
    /// The non-definability gadget G'_d.
    GadgetGPrime(usize),
}

const MAX_PARAM: usize = 200;

fn check(family: &'static str, value: usize, min: usize) -> Result<usize, CatalogError> {
    check_range(family, value, min, MAX_PARAM)
}

fn check_range(family: &'static str, value: usize, min: usize, max: usize) -> Result<usize, CatalogError> {
    if (min..=max).contains(&value) {
        Ok(value)
    } else {
        Err(CatalogError::Parameter { family, value, min, max })
    }
}

/// Largest `d` whose gadgets (8d + 1 vertices) fit a vertex set.
const MAX_GADGET_D: usize = (crate::bitset::MAX_VERTICES - 1) / 8;

impl FromStr for PatternName {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use PatternName::*;
        let unknown = || CatalogError::Unknown(s.to_string());
        if let Some((fam, arg)) = s.split_once(':') {
            let k: usize = arg.parse().map_err(|_| unknown())?;
            return Ok(match fam {
                "Ck" => Cycle(check("Ck", k, 4)?),
                "cycle" => Cycle(check("cycle", k, 3)?),
                "hole" => Hole(check("hole", k, 5)?),
                "path" => Path(check("path", k, 1)?),
                "complete" => Complete(check("complete", k, 1)?),
                "F2" => F2(check("F2", k, 1)?),
                "F3" => F3(check("F3", k, 1)?),
                "F4" => F4(check("F4", k, 1)?),
                "XF2" => XF2(check("XF2", k, 1)?),
                "XF3" => XF3(check("XF3", k, 1)?),
                "XF4" => XF4(check("XF4", k, 1)?),
                "G_d" => GadgetG(check_range("G_d", k, 2, MAX_GADGET_D)?),
                "GP_d" => GadgetGPrime(check_range("GP_d", k, 2, MAX_GADGET_D)?),
                _ => return Err(unknown()),
            });
        }
        Ok(match s {
            "house" => House,
            "domino" => Domino,
            "fan3" => Fan3,
            "C4" => C4,
            "C5" => C5,
            "T2" => T2,
            "X2" => X2,
            "X3" => X3,
            "Pgraph" => PGraph,
            "pan5" => Pan5,
            _ => match s.strip_prefix('X').and_then(|k| k.parse::<u8>().ok()) {
                Some(k) if (30..=41).contains(&k) => X(k),
                _ => return Err(unknown()),
            },
        })
    }
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use PatternName::*;
        match self {
            House => write!(f, "house"),
            Domino => write!(f, "domino"),
            Fan3 => write!(f, "fan3"),
            C4 => write!(f, "C4"),
            C5 => write!(f, "C5"),
            Cycle(k) => write!(f, "cycle:{k}"),
            Hole(k) => write!(f, "hole:{k}"),
            Path(k) => write!(f, "path:{k}"),
            Complete(k) => write!(f, "complete:{k}"),
            T2 => write!(f, "T2"),
            X2 => write!(f, "X2"),
            X3 => write!(f, "X3"),
            X(k) => write!(f, "X{k}"),
            F2(k) => write!(f, "F2:{k}"),
            F3(k) => write!(f, "F3:{k}"),
            F4(k) => write!(f, "F4:{k}"),
            XF2(k) => write!(f, "XF2:{k}"),
            XF3(k) => write!(f, "XF3:{k}"),
            XF4(k) => write!(f, "XF4:{k}"),
            PGraph => write!(f, "Pgraph"),
            Pan5 => write!(f, "pan5"),
            GadgetG(d) => write!(f, "G_d:{d}"),
            GadgetGPrime(d) => write!(f, "GP_d:{d}"),
        }
    }
}

/// Resolves a textual name such as `"hole:6"` or `"X34"`.
pub fn catalog_by_name(name: &str) -> Result<Graph, CatalogError> {
    Ok(catalog(name.parse()?))
}

pub fn catalog(name: PatternName) -> Graph {
    use PatternName::*;
    match name {
        House => labelled(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 3)],
            &["x", "y", "c", "d", "u"],
        ),
        Domino => labelled(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 5), (5, 4), (4, 3)],
            &["x", "y", "c", "d", "u", "v"],
        ),
        Fan3 => labelled(
            5,
            &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)],
            &["u", "x", "y", "v", "z"],
        ),
        C4 => cycle(4),
        C5 => cycle(5),
        Cycle(k) | Hole(k) => cycle(k),
        Path(k) => {
            let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
            Graph::from_edges(k, edges).unwrap().with_labels(numbered("p", k))
        }
        Complete(k) => {
            let mut edges = Vec::new();
            for a in 0..k {
                for b in a + 1..k {
                    edges.push((a, b));
                }
            }
            Graph::from_edges(k, edges).unwrap().with_labels(numbered("k", k))
        }
        T2 | X2 | X3 | X(_) => {
            let key = name.to_string();
            fixed_patterns()
                .into_iter()
                .find(|p| p.name == key)
                .expect("every fixed pattern is in the fixture file")
                .graph
        }
        F2(n) => fan(n, false, false, None),
        F3(n) => fan(n, true, true, None),
        F4(n) => fan(n, true, false, None),
        XF2(n) => fan(n, false, false, Some(Attach::Two)),
        XF3(n) => fan(n, true, true, Some(Attach::Three)),
        XF4(n) => fan(n, true, false, Some(Attach::Three)),
        PGraph => labelled(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0)],
            &["a", "x", "y", "v", "u"],
        ),
        Pan5 => labelled(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0)],
            &["a", "x", "y", "b", "v", "u"],
        ),
        GadgetG(d) => gadgets::build_g_d(d).expect("parameter validated"),
        GadgetGPrime(d) => gadgets::build_g_d_prime(d).expect("parameter validated"),
    }
}

fn labelled(n: usize, edges: &[(Vertex, Vertex)], labels: &[&str]) -> Graph {
    Graph::from_edges(n, edges.iter().copied())
        .unwrap()
        .with_labels(labels.to_vec())
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}_{i}")).collect()
}

fn cycle(k: usize) -> Graph {
    Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
        .unwrap()
        .with_labels(numbered("c", k))
}

enum Attach {
    Two,
    Three,
}

/// Path `p_1..p_n` (ids `0..n`), then `y_1` (only for the F_3/F_4 shapes),
/// `y_2`, then `u`, `v`, `x` when attachments are requested.
fn fan(n: usize, with_y1: bool, y1y2: bool, attach: Option<Attach>) -> Graph {
    let mut labels = numbered("p", n);
    let mut edges: Vec<(Vertex, Vertex)> = (1..n).map(|i| (i - 1, i)).collect();
    let mut next = n;
    let y1 = with_y1.then(|| {
        labels.push("y_1".into());
        next += 1;
        next - 1
    });
    let y2 = next;
    labels.push("y_2".into());
    next += 1;
    for p in 0..n {
        edges.push((p, y2));
        if let Some(y1) = y1 {
            edges.push((p, y1));
        }
    }
    if let (Some(y1), true) = (y1, y1y2) {
        edges.push((y1, y2));
    }
    if let Some(attach) = attach {
        let (u, v, x) = (next, next + 1, next + 2);
        labels.extend(["u".into(), "v".into(), "x".into()]);
        next += 3;
        edges.push((u, 0));
        edges.push((n - 1, v));
        match attach {
            Attach::Two => edges.push((y2, x)),
            Attach::Three => {
                let y1 = y1.expect("three-way attachment needs y_1");
                edges.extend([(u, y1), (v, y2), (x, y1), (x, y2)]);
            }
        }
    }
    Graph::from_edges(next, edges).unwrap().with_labels(labels)
}

/// One transcribed pattern from the fixture file.
#[derive(Debug, Clone)]
pub struct FixedPattern {
    pub name: String,
    pub graph: Graph,
    /// Degree sequence counted by hand when the drawing was transcribed.
    pub recorded_degrees: Vec<usize>,
}

pub fn fixed_patterns() -> Vec<FixedPattern> {
    AT_FREE_PATTERNS
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let cols: Vec<&str> = line.split('|').map(str::trim).collect();
            assert_eq!(cols.len(), 4, "malformed pattern line {line:?}");
            let labels: Vec<&str> = cols[1].split_whitespace().collect();
            let recorded_degrees = cols[2]
                .split_whitespace()
                .map(|t| t.parse().expect("degree"))
                .collect();
            let edges = cols[3].split_whitespace().map(|e| {
                let (a, b) = e.split_once('-').expect("edge a-b");
                (a.parse().expect("id"), b.parse().expect("id"))
            });
            let graph = Graph::from_edges(labels.len(), edges)
                .expect("valid pattern edges")
                .with_labels(labels);
            FixedPattern {
                name: cols[0].to_string(),
                graph,
                recorded_degrees,
            }
        })
        .collect()
}

/// Every AT-free obstruction with at most `max_vertices` vertices: C_k for
/// k >= 6, the fixed patterns, and the XF families. XF_2^{n+1} starts at n = 2
/// since XF_2^2 is a tree and has no asteroidal triple.
pub fn at_free_obstructions(max_vertices: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for k in 6..=max_vertices {
        out.push((format!("cycle:{k}"), cycle(k)));
    }
    for p in fixed_patterns() {
        if p.graph.n() <= max_vertices {
            out.push((p.name, p.graph));
        }
    }
    for n in 2..=max_vertices.saturating_sub(4) {
        out.push((format!("XF2:{n}"), catalog(PatternName::XF2(n))));
    }
    for n in 1..=max_vertices.saturating_sub(5) {
        out.push((format!("XF3:{n}"), catalog(PatternName::XF3(n))));
        out.push((format!("XF4:{n}"), catalog(PatternName::XF4(n))));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_degree_checksums() {
        let pats = fixed_patterns();
        assert_eq!(pats.len(), 15);
        for p in pats {
            assert_eq!(p.graph.degree_sequence(), p.recorded_degrees, "{}", p.name);
        }
    }

    #[test]
    fn drawn_graph_sizes() {
        let sizes = |n: PatternName| {
            let g = catalog(n);
            (g.n(), g.m())
        };
        assert_eq!(sizes(PatternName::House), (5, 6));
        assert_eq!(sizes(PatternName::Domino), (6, 7));
        assert_eq!(sizes(PatternName::Fan3), (5, 7));
        assert_eq!(sizes(PatternName::T2), (7, 6));
        assert_eq!(sizes(PatternName::X(34)), (7, 11));
        assert_eq!(sizes(PatternName::X(37)), (6, 7));
        assert_eq!(sizes(PatternName::PGraph), (5, 5));
        assert_eq!(sizes(PatternName::Pan5), (6, 6));
    }

    #[test]
    fn xf2_2_matches_family_definition() {
        let g = catalog(PatternName::XF2(2));
        let id = |l: &str| g.vertex_by_label(l).unwrap();
        assert_eq!(g.n(), 6);
        for (a, b) in [("p_1", "p_2"), ("y_2", "p_1"), ("y_2", "p_2"), ("u", "p_1"), ("p_2", "v"), ("y_2", "x")] {
            assert!(g.has_edge(id(a), id(b)), "{a}{b}");
        }
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn f4_is_f3_minus_y1y2() {
        for n in 1..6 {
            let f3 = catalog(PatternName::F3(n));
            let f4 = catalog(PatternName::F4(n));
            let y1 = f3.vertex_by_label("y_1").unwrap();
            let y2 = f3.vertex_by_label("y_2").unwrap();
            assert_eq!(f3.without_edge(y1, y2), f4);
        }
    }

    #[test]
    fn names_round_trip() {
        for s in [
            "house", "domino", "fan3", "C4", "C5", "Ck:7", "hole:5", "path:4", "complete:3", "T2", "X2",
            "X3", "X30", "X41", "F2:3", "F3:2", "F4:2", "XF2:2", "XF3:1", "XF4:3", "Pgraph", "pan5",
            "cycle:6", "G_d:2", "GP_d:3",
        ] {
            let p: PatternName = s.parse().unwrap();
            assert_eq!(p.to_string().parse::<PatternName>().unwrap(), p);
        }
    }

    #[test]
    fn bad_names_rejected() {
        assert!(matches!("hole:4".parse::<PatternName>(), Err(CatalogError::Parameter { .. })));
        assert!(matches!("G_d:1".parse::<PatternName>(), Err(CatalogError::Parameter { .. })));
        assert!(matches!("GP_d:32".parse::<PatternName>(), Err(CatalogError::Parameter { max: 31, .. })));
        assert_eq!(catalog_by_name("G_d:31").unwrap().n(), 249);
        assert!(matches!("X29".parse::<PatternName>(), Err(CatalogError::Unknown(_))));
        assert!(matches!("star".parse::<PatternName>(), Err(CatalogError::Unknown(_))));
        assert!(matches!("path:x".parse::<PatternName>(), Err(CatalogError::Unknown(_))));
    }

    #[test]
    fn domino_has_two_c4_sharing_an_edge() {
        let d = catalog(PatternName::Domino);
        // 0-1-2-3 and 2-3-4-5 share the edge 2-3
        for c in [[0, 1, 2, 3], [3, 2, 5, 4]] {
            for i in 0..4 {
                assert!(d.has_edge(c[i], c[(i + 1) % 4]));
            }
            assert!(!d.has_edge(c[0], c[2]) && !d.has_edge(c[1], c[3]));
        }
    }
}
