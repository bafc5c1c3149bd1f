//! Small graphs up to isomorphism.
//!
//! Graphs on `n` vertices come from graphs on `n - 1` vertices plus a new
//! vertex with every possible neighbourhood, deduplicated by a canonical key.
//! The key is the least upper-triangle bit string over all relabellings that
//! list vertices in order of a degree-based invariant.

use std::collections::BTreeSet;
use std::path::Path;
use std::sync::{Mutex, OnceLock};

use crate::bitset::VertexSet;
use crate::graph::{Graph, Vertex};
use crate::io::read_graph6_lines;
use crate::par::Exec;

use super::HarnessError;

/// Largest order the builtin generator accepts.
pub const BUILTIN_MAX_N: usize = 7;

/// Largest order a canonical key fits (n(n-1)/2 bits in a u64).
const KEY_MAX_N: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphSource<'a> {
    Builtin,
    Corpus(&'a Path),
}

/// Vertex invariant: degree, then the sorted neighbour degrees.
fn invariant(g: &Graph, v: Vertex) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).iter().map(|w| g.degree(w)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

/// Canonical key of a graph with at most 11 vertices. Isomorphic graphs get
/// equal keys and the key determines the graph (see [`graph_from_key`]).
pub fn canonical_key(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= KEY_MAX_N, "canonical_key supports n <= {KEY_MAX_N}");
    if n <= 1 {
        return 0;
    }
    let mut verts: Vec<Vertex> = g.vertices().collect();
    let inv: Vec<_> = verts.iter().map(|&v| invariant(g, v)).collect();
    verts.sort_by(|&a, &b| inv[a].cmp(&inv[b]).then(a.cmp(&b)));
    // class[i] = index of the invariant class that position i must come from
    let mut class_of_pos = Vec::with_capacity(n);
    let mut members: Vec<Vec<Vertex>> = Vec::new();
    for (i, &v) in verts.iter().enumerate() {
        if i == 0 || inv[v] != inv[verts[i - 1]] {
            members.push(Vec::new());
        }
        members.last_mut().unwrap().push(v);
        class_of_pos.push(members.len() - 1);
    }
    let total_bits = n * (n - 1) / 2;
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    search(g, &class_of_pos, &members, &mut perm, VertexSet::empty(), 0, 0, total_bits, &mut best);
    best
}

/// Places vertices at positions `0..n` in order. After placing position `j`
/// the bits of every pair inside `0..=j` are known, so a prefix larger than
/// the best key's prefix prunes the branch.
#[allow(clippy::too_many_arguments)]
fn search(
    g: &Graph,
    class_of_pos: &[usize],
    members: &[Vec<Vertex>],
    perm: &mut Vec<Vertex>,
    used: VertexSet,
    key: u64,
    bits: usize,
    total_bits: usize,
    best: &mut u64,
) {
    let j = perm.len();
    if j == class_of_pos.len() {
        *best = (*best).min(key);
        return;
    }
    for &v in &members[class_of_pos[j]] {
        if used.contains(v) {
            continue;
        }
        let mut k = key;
        for &p in perm.iter() {
            k = (k << 1) | g.has_edge(p, v) as u64;
        }
        let nbits = bits + j;
        if *best != u64::MAX && k > *best >> (total_bits - nbits) {
            continue;
        }
        perm.push(v);
        let mut u = used;
        u.insert(v);
        search(g, class_of_pos, members, perm, u, k, nbits, total_bits, best);
        perm.pop();
    }
}

/// Inverse of [`canonical_key`] up to isomorphism.
pub fn graph_from_key(n: usize, key: u64) -> Graph {
    let total = n * (n - 1) / 2;
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if key >> (total - 1 - idx) & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, edges).expect("key decodes to a simple graph")
}

fn all_graphs_cache() -> &'static Mutex<Vec<Vec<u64>>> {
    static CACHE: OnceLock<Mutex<Vec<Vec<u64>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![vec![0]]))
}

/// Canonical keys of all graphs on `n` vertices, ascending.
fn all_keys(n: usize, exec: Exec) -> Vec<u64> {
    let cache = all_graphs_cache();
    let mut levels = cache.lock().unwrap();
    if n == 0 {
        return vec![0];
    }
    while levels.len() < n {
        // levels[m - 1] holds graphs on m vertices; add vertex m
        let m = levels.len();
        let prev: Vec<Graph> = levels[m - 1].iter().map(|&k| graph_from_key(m, k)).collect();
        let extended: Vec<Vec<u64>> = exec.map(&prev, |g| {
            (0u64..1 << m)
                .map(|mask| {
                    let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
                    edges.extend((0..m).filter(|i| mask >> i & 1 == 1).map(|i| (i, m)));
                    canonical_key(&Graph::from_edges(m + 1, edges).unwrap())
                })
                .collect()
        });
        let keys: BTreeSet<u64> = extended.into_iter().flatten().collect();
        levels.push(keys.into_iter().collect());
    }
    levels[n - 1].clone()
}

/// All graphs on `n <= 7` vertices up to isomorphism, in canonical-key order.
pub fn all_graphs(n: usize, exec: Exec) -> Result<Vec<Graph>, HarnessError> {
    if n > BUILTIN_MAX_N {
        return Err(HarnessError::TooLargeForBuiltin(n));
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0).unwrap()]);
    }
    Ok(all_keys(n, exec).into_iter().map(|k| graph_from_key(n, k)).collect())
}

/// Connected graphs on exactly `n` vertices.
pub fn enumerate_graphs(n: usize, source: GraphSource<'_>) -> Result<Vec<Graph>, HarnessError> {
    enumerate_graphs_with(n, source, Exec::default())
}

pub fn enumerate_graphs_with(n: usize, source: GraphSource<'_>, exec: Exec) -> Result<Vec<Graph>, HarnessError> {
    match source {
        GraphSource::Builtin => Ok(all_graphs(n, exec)?.into_iter().filter(|g| g.is_connected()).collect()),
        GraphSource::Corpus(path) => Ok(read_corpus(path)?.into_iter().filter(|g| g.n() == n).collect()),
    }
}

/// Every connected graph with `1 <= n <= max_n` vertices, by order then key.
pub fn corpus_up_to(max_n: usize, source: GraphSource<'_>, exec: Exec) -> Result<Vec<Graph>, HarnessError> {
    match source {
        GraphSource::Builtin => {
            let mut out = Vec::new();
            for n in 1..=max_n {
                out.extend(enumerate_graphs_with(n, source, exec)?);
            }
            Ok(out)
        }
        GraphSource::Corpus(path) => {
            let mut gs: Vec<Graph> = read_corpus(path)?.into_iter().filter(|g| g.n() <= max_n).collect();
            gs.sort_by_key(|g| g.n());
            Ok(gs)
        }
    }
}

/// Reads a graph6 corpus, requiring every graph to be connected.
pub fn read_corpus(path: &Path) -> Result<Vec<Graph>, HarnessError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| HarnessError::Corpus(format!("{}: {e}", path.display())))?;
    let graphs = read_graph6_lines(&text).map_err(|e| HarnessError::Corpus(format!("{}: {e}", path.display())))?;
    for (i, g) in graphs.iter().enumerate() {
        if !g.is_connected() {
            return Err(HarnessError::Corpus(format!(
                "{}: graph {} is disconnected",
                path.display(),
                i + 1
            )));
        }
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let conn: Vec<usize> = (1..=5)
            .map(|n| enumerate_graphs(n, GraphSource::Builtin).unwrap().len())
            .collect();
        assert_eq!(conn, [1, 1, 2, 6, 21]);
        let all: Vec<usize> = (1..=5).map(|n| all_graphs(n, Exec::Sequential).unwrap().len()).collect();
        assert_eq!(all, [1, 2, 4, 11, 34]);
    }

    #[test]
    fn key_is_invariant_under_relabelling() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let k = canonical_key(&g);
        for perm in [[4, 3, 2, 1, 0], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3]] {
            assert_eq!(canonical_key(&g.permuted(&perm)), k);
        }
        let h = graph_from_key(5, k);
        assert_eq!(canonical_key(&h), k);
        assert_eq!(h.degree_sequence(), g.degree_sequence());
    }

    #[test]
    fn builtin_limit() {
        assert!(matches!(all_graphs(8, Exec::Sequential), Err(HarnessError::TooLargeForBuiltin(8))));
    }

    #[test]
    fn corpus_rejects_disconnected() {
        let dir = std::env::temp_dir().join(format!("tw-corpus-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let p = dir.join("c.g6");
        std::fs::write(&p, "C~\nA?\n").unwrap();
        assert!(matches!(read_corpus(&p), Err(HarnessError::Corpus(_))));
        std::fs::write(&p, "C~\nA_\n").unwrap();
        assert_eq!(corpus_up_to(4, GraphSource::Corpus(&p), Exec::Sequential).unwrap().len(), 2);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
