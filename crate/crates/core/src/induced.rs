//! Induced-subgraph search by backtracking.

use crate::bitset::VertexSet;
use crate::graph::{Graph, Vertex};

/// Finds an injective map `m` from `V(P)` into `V(G)` with
/// `pq ∈ E(P) ⟺ m(p)m(q) ∈ E(G)`. Pattern vertices are placed in id order
/// and candidates tried in increasing id order, so the result is the
/// lexicographically least image tuple.
pub fn contains_induced(g: &Graph, p: &Graph) -> Option<Vec<Vertex>> {
    if p.n() > g.n() {
        return None;
    }
    let mut map = Vec::with_capacity(p.n());
    let found = extend(g, p, &mut map, VertexSet::empty());
    debug_assert!(!found || is_induced_embedding(g, p, &map));
    found.then_some(map)
}

fn extend(g: &Graph, p: &Graph, map: &mut Vec<Vertex>, used: VertexSet) -> bool {
    let i = map.len();
    if i == p.n() {
        return true;
    }
    let need = p.degree(i);
    // candidates must agree with every already placed vertex
    let mut cand = g.all().difference(&used);
    for (j, &img) in map.iter().enumerate() {
        if p.has_edge(i, j) {
            cand = cand.intersection(&g.neighbors(img));
        } else {
            cand = cand.difference(&g.neighbors(img));
        }
    }
    for c in cand.iter() {
        if g.degree(c) < need {
            continue;
        }
        map.push(c);
        let mut u = used;
        u.insert(c);
        if extend(g, p, map, u) {
            return true;
        }
        map.pop();
    }
    false
}

/// Independent re-check of an embedding.
pub fn is_induced_embedding(g: &Graph, p: &Graph, map: &[Vertex]) -> bool {
    if map.len() != p.n() {
        return false;
    }
    let image: VertexSet = map.iter().copied().collect();
    if image.len() != map.len() || map.iter().any(|&v| v >= g.n()) {
        return false;
    }
    for a in 0..p.n() {
        for b in a + 1..p.n() {
            if p.has_edge(a, b) != g.has_edge(map[a], map[b]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn k4_has_no_induced_c4() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(contains_induced(&k4, &cycle(4)), None);
    }

    #[test]
    fn c6_contains_p4_but_not_c4() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let m = contains_induced(&cycle(6), &p4).unwrap();
        assert_eq!(m, vec![0, 1, 2, 3]);
        assert!(contains_induced(&cycle(6), &cycle(4)).is_none());
        assert!(contains_induced(&cycle(6), &cycle(6)).is_some());
    }

    #[test]
    fn pattern_larger_than_host() {
        assert!(contains_induced(&cycle(4), &cycle(5)).is_none());
    }
}
