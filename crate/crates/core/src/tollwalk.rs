//! Toll walk intervals.
//!
//! A toll walk from `u` to `v` (`u != v`) is a walk whose second vertex is the
//! only neighbour of `u` on it and whose second-to-last vertex is the only
//! neighbour of `v` on it. `T(u,v)` collects every vertex on such a walk.

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphError, Vertex};
use crate::par::Exec;
use crate::transit::TransitFunction;

/// `T(u,v)` on a connected graph.
///
/// For distinct non-adjacent `u, v`, `w` is a member iff `N[u] - {w}` does not
/// separate `w` from `v` and `N[v] - {w}` does not separate `w` from `u`.
pub fn toll_interval(g: &Graph, u: Vertex, v: Vertex) -> Result<VertexSet, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    g.require_connected()?;
    Ok(toll_interval_unchecked(g, u, v))
}

/// [`toll_interval`] without the input checks; `g` must be connected.
pub fn toll_interval_unchecked(g: &Graph, u: Vertex, v: Vertex) -> VertexSet {
    if u == v {
        return VertexSet::singleton(u);
    }
    if g.has_edge(u, v) {
        return VertexSet::pair(u, v);
    }
    let nu = g.closed_neighborhood(u);
    let nv = g.closed_neighborhood(v);
    let all = g.all();
    let mut out = VertexSet::pair(u, v);
    for w in g.vertices() {
        if w == u || w == v {
            continue;
        }
        let mut su = nu;
        su.remove(w);
        let mut sv = nv;
        sv.remove(w);
        // u ∈ su and v ∈ sv, so the reach sets below start outside them
        let reach_u_side = g.reach_within(w, &all.difference(&su));
        if !reach_u_side.contains(v) {
            continue;
        }
        let reach_v_side = g.reach_within(w, &all.difference(&sv));
        if reach_v_side.contains(u) {
            out.insert(w);
        }
    }
    out
}

/// Independent oracle straight from the walk definition.
///
/// A toll walk `u a ... b v` has gates `a ∈ N(u)`, `b ∈ N(v)`, and the
/// neighbours of `u` (of `v`) occur on it only at the second (second-to-last)
/// position. So either `a = b` and the walk is `u a v`, or `a != b`,
/// `a` is not adjacent to `v`, `b` is not adjacent to `u`, and everything
/// between the gates lives in `O = V - (N[u] ∪ N[v])`. A component of `G[O]`
/// is on such a walk iff it touches both `N(a)` and `N(b)`.
pub fn toll_interval_oracle(g: &Graph, u: Vertex, v: Vertex) -> Result<VertexSet, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    g.require_connected()?;
    if u == v || g.has_edge(u, v) {
        return Err(GraphError::Contract(format!(
            "oracle needs distinct non-adjacent vertices, got {u} and {v}"
        )));
    }
    let nu = g.closed_neighborhood(u);
    let nv = g.closed_neighborhood(v);
    let outside = g.all().difference(&nu.union(&nv));
    let mut components: Vec<VertexSet> = Vec::new();
    let mut seen = VertexSet::empty();
    for w in outside.iter() {
        if !seen.contains(w) {
            let c = g.reach_within(w, &outside);
            seen = seen.union(&c);
            components.push(c);
        }
    }
    let mut out = VertexSet::pair(u, v);
    for a in g.neighbors(u).iter() {
        for b in g.neighbors(v).iter() {
            if a == b {
                out.insert(a);
                continue;
            }
            if g.has_edge(a, v) || g.has_edge(b, u) {
                continue;
            }
            let (na, nb) = (g.neighbors(a), g.neighbors(b));
            let mut linked = g.has_edge(a, b);
            for c in &components {
                if !c.intersection(&na).is_empty() && !c.intersection(&nb).is_empty() {
                    out = out.union(c);
                    linked = true;
                }
            }
            if linked {
                out.insert(a);
                out.insert(b);
            }
        }
    }
    Ok(out)
}

/// The toll walk transit function of a connected graph.
pub fn toll_transit(g: &Graph) -> Result<TransitFunction, GraphError> {
    toll_transit_with(g, Exec::Sequential)
}

pub fn toll_transit_with(g: &Graph, exec: Exec) -> Result<TransitFunction, GraphError> {
    g.require_connected()?;
    let n = g.n();
    let rows = exec.map_range(0..n, |u| {
        (0..n).map(|v| toll_interval_unchecked(g, u, v)).collect::<Vec<_>>()
    });
    Ok(TransitFunction::from_rows_unchecked(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, PatternName};

    fn set(xs: &[Vertex]) -> VertexSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn c4_opposite_pair_is_everything() {
        // u x y v in cyclic order: 0 1 2 3
        let c4 = catalog(PatternName::C4);
        assert!(toll_interval(&c4, 0, 2).unwrap().contains(1));
        assert_eq!(toll_interval(&c4, 0, 2).unwrap(), set(&[0, 1, 2, 3]));
        assert_eq!(toll_interval_oracle(&c4, 0, 2).unwrap(), set(&[0, 1, 2, 3]));
    }

    #[test]
    fn equal_and_adjacent_pairs() {
        let g = catalog(PatternName::House);
        for a in g.vertices() {
            assert_eq!(toll_interval(&g, a, a).unwrap(), VertexSet::singleton(a));
        }
        assert_eq!(toll_interval(&g, 0, 1).unwrap(), set(&[0, 1]));
    }

    #[test]
    fn fan3_universal_vertex_intervals() {
        let f = catalog(PatternName::Fan3);
        let id = |l: &str| f.vertex_by_label(l).unwrap();
        let (x, y, z) = (id("x"), id("y"), id("z"));
        assert_eq!(toll_interval(&f, x, z).unwrap(), set(&[x, z]));
        assert_eq!(toll_interval(&f, y, z).unwrap(), set(&[y, z]));
    }

    #[test]
    fn path_oracle() {
        let p = catalog(PatternName::Path(3));
        assert_eq!(toll_interval_oracle(&p, 0, 2).unwrap(), set(&[0, 1, 2]));
        assert_eq!(toll_interval(&p, 0, 2).unwrap(), set(&[0, 1, 2]));
    }

    #[test]
    fn gates_occur_once() {
        // 0-1-3-1-2 would revisit the gate 1
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(toll_interval_oracle(&g, 0, 2).unwrap(), set(&[0, 1, 2]));
        assert_eq!(toll_interval(&g, 0, 2).unwrap(), set(&[0, 1, 2]));
        let d = catalog(PatternName::Domino);
        for (u, v) in [(0, 2), (1, 3), (2, 4), (3, 5)] {
            assert_eq!(toll_interval_oracle(&d, u, v).unwrap(), toll_interval(&d, u, v).unwrap());
        }
    }

    #[test]
    fn six_cycle_sets() {
        // u x v1 a v b in cyclic order
        let c6 = catalog(PatternName::Cycle(6));
        let (u, x, v1, v) = (0, 1, 2, 4);
        assert!(toll_interval(&c6, u, v).unwrap().contains(x));
        assert!(toll_interval_oracle(&c6, u, v).unwrap().contains(x));
        // v1 x u b v is an induced path, so x is back on a v1,v toll walk;
        // this is what breaks TWC on the six-cycle
        assert!(toll_interval(&c6, v1, v).unwrap().contains(x));
        assert!(toll_interval_oracle(&c6, v1, v).unwrap().contains(x));
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(toll_interval(&g, 0, 2), Err(GraphError::Disconnected));
        assert!(toll_transit(&g).is_err());
        assert!(toll_interval(&catalog(PatternName::C4), 0, 9).is_err());
    }

    #[test]
    fn transit_of_small_graphs() {
        let k3 = catalog(PatternName::Complete(3));
        let t = toll_transit(&k3).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let expect = if a == b { VertexSet::singleton(a) } else { VertexSet::pair(a, b) };
                assert_eq!(t.get(a, b), expect);
            }
        }
        let p3 = catalog(PatternName::Path(3));
        assert_eq!(toll_transit(&p3).unwrap().get(0, 2), set(&[0, 1, 2]));
    }
}
