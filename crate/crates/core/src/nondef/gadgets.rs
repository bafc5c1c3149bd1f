//! The graphs `G_d` and `G'_d`.
//!
//! Ids: `u_i` is `i - 1`, `v_i` is `4d + i - 1` (for `i` in `1..=4d`), and `x`
//! is `8d`. Labels use the same names with a prime for `G'_d`.

use crate::graph::{Graph, GraphError, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layer {
    U,
    V,
    X,
}

/// Vertex-id arithmetic shared by both gadgets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetIds {
    pub d: usize,
}

impl GadgetIds {
    pub fn new(d: usize) -> Self {
        GadgetIds { d }
    }

    pub fn n(self) -> usize {
        8 * self.d + 1
    }

    /// `u_i`, 1-based.
    pub fn u(self, i: usize) -> Vertex {
        debug_assert!((1..=4 * self.d).contains(&i));
        i - 1
    }

    /// `v_i`, 1-based.
    pub fn v(self, i: usize) -> Vertex {
        debug_assert!((1..=4 * self.d).contains(&i));
        4 * self.d + i - 1
    }

    pub fn x(self) -> Vertex {
        8 * self.d
    }

    pub fn layer(self, w: Vertex) -> Layer {
        if w < 4 * self.d {
            Layer::U
        } else if w < 8 * self.d {
            Layer::V
        } else {
            Layer::X
        }
    }

    /// 1-based index within the layer (`x` has index 0).
    pub fn index(self, w: Vertex) -> usize {
        match self.layer(w) {
            Layer::U => w + 1,
            Layer::V => w - 4 * self.d + 1,
            Layer::X => 0,
        }
    }

    /// The vertex at the same index in the other cycle layer.
    pub fn partner(self, w: Vertex) -> Vertex {
        match self.layer(w) {
            Layer::U => w + 4 * self.d,
            Layer::V => w - 4 * self.d,
            Layer::X => w,
        }
    }

    fn labels(self, prime: bool) -> Vec<String> {
        let p = if prime { "'" } else { "" };
        let mut out = Vec::with_capacity(self.n());
        for layer in ["u", "v"] {
            for i in 1..=4 * self.d {
                out.push(format!("{layer}{p}_{i}"));
            }
        }
        out.push(format!("x{p}"));
        out
    }
}

fn check_d(d: usize) -> Result<(), GraphError> {
    if d < 2 {
        return Err(GraphError::Contract(format!("gadget needs d >= 2, got {d}")));
    }
    if 8 * d + 1 > crate::bitset::MAX_VERTICES {
        return Err(GraphError::TooLarge(8 * d + 1));
    }
    Ok(())
}

/// `G_d`: two `4d`-cycles `u` and `v` joined by rungs `u_i v_i`, plus `x`
/// adjacent to `v_1` and `v_{2d+1}`.
pub fn build_g_d(d: usize) -> Result<Graph, GraphError> {
    check_d(d)?;
    let ids = GadgetIds::new(d);
    let k = 4 * d;
    let mut edges = Vec::new();
    for i in 1..=k {
        let next = i % k + 1;
        edges.push((ids.u(i), ids.u(next)));
        edges.push((ids.v(i), ids.v(next)));
        edges.push((ids.u(i), ids.v(i)));
    }
    edges.push((ids.v(1), ids.x()));
    edges.push((ids.v(2 * d + 1), ids.x()));
    Ok(Graph::from_edges(ids.n(), edges)?.with_labels(ids.labels(false)))
}

/// `G'_d`: each layer is two `2d`-cycles (`1..=2d` and `2d+1..=4d`), with the
/// same rungs and the same two edges at `x'`.
pub fn build_g_d_prime(d: usize) -> Result<Graph, GraphError> {
    check_d(d)?;
    let ids = GadgetIds::new(d);
    let mut edges = Vec::new();
    for layer in [GadgetIds::u as fn(GadgetIds, usize) -> Vertex, GadgetIds::v] {
        for base in [0, 2 * d] {
            for i in 1..2 * d {
                edges.push((layer(ids, base + i), layer(ids, base + i + 1)));
            }
            edges.push((layer(ids, base + 1), layer(ids, base + 2 * d)));
        }
    }
    for j in 1..=4 * d {
        edges.push((ids.u(j), ids.v(j)));
    }
    edges.push((ids.v(1), ids.x()));
    edges.push((ids.v(2 * d + 1), ids.x()));
    Ok(Graph::from_edges(ids.n(), edges)?.with_labels(ids.labels(true)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        for d in 2..6 {
            let g = build_g_d(d).unwrap();
            let gp = build_g_d_prime(d).unwrap();
            assert_eq!((g.n(), g.m()), (8 * d + 1, 12 * d + 2));
            assert_eq!((gp.n(), gp.m()), (8 * d + 1, 12 * d + 2));
        }
        assert!(build_g_d(1).is_err());
        assert!(build_g_d_prime(0).is_err());
    }

    #[test]
    fn x_attachments() {
        let g = build_g_d(2).unwrap();
        let ids = GadgetIds::new(2);
        assert_eq!(g.neighbors(ids.x()).to_vec(), vec![ids.v(1), ids.v(5)]);
        assert_eq!(g.label(ids.v(5)), "v_5");
        assert_eq!(build_g_d_prime(2).unwrap().label(ids.x()), "x'");
    }

    #[test]
    fn layer_cycles() {
        let d = 3;
        let ids = GadgetIds::new(d);
        let g = build_g_d(d).unwrap();
        let (h, _) = g.induced_subgraph(&(0..4 * d).collect());
        assert!(h.is_connected() && h.degree_sequence().iter().all(|&k| k == 2));
        let gp = build_g_d_prime(d).unwrap();
        let (hp, _) = gp.induced_subgraph(&(0..4 * d).collect());
        let comps = hp.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 2 * d));
        assert!(gp.has_edge(ids.u(1), ids.u(2 * d)));
        assert!(gp.has_edge(ids.u(2 * d + 1), ids.u(4 * d)));
        assert!(!gp.has_edge(ids.u(2 * d), ids.u(2 * d + 1)));
    }

    #[test]
    fn gadgets_differ() {
        // G_d has a 4d-cycle on the u layer, G'_d only 2d-cycles there; they
        // are told apart by the number of components after deleting v and x
        let g = build_g_d(2).unwrap();
        let gp = build_g_d_prime(2).unwrap();
        assert_ne!(g, gp);
        let keep = (0..8).collect();
        assert_ne!(
            g.induced_subgraph(&keep).0.components().len(),
            gp.induced_subgraph(&keep).0.components().len()
        );
    }
}
