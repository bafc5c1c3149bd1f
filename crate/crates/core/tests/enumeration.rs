//! Enumeration and class counts against brute force and published sequences.

use std::collections::BTreeSet;

use tollwalk_core::classes::{classify, GraphClass};
use tollwalk_core::harness::{all_graphs, corpus_up_to, GraphSource};
use tollwalk_core::{Exec, Graph};

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest edge mask over all relabellings.
fn brute_canon(n: usize, mask: u32, perms: &[Vec<usize>], idx: &[(usize, usize)]) -> u32 {
    let slot = |a: usize, b: usize| idx.iter().position(|&e| e == (a.min(b), a.max(b))).unwrap();
    let mut table = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            if a != b {
                table[a * n + b] = slot(a, b);
            }
        }
    }
    perms
        .iter()
        .map(|p| {
            idx.iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .fold(0u32, |m, (_, &(a, b))| m | 1 << table[p[a] * n + p[b]])
        })
        .min()
        .unwrap()
}

fn mask_of(g: &Graph, idx: &[(usize, usize)]) -> u32 {
    g.edges().fold(0, |m, (a, b)| m | 1 << idx.iter().position(|&e| e == (a.min(b), a.max(b))).unwrap())
}

#[test]
fn enumeration_matches_brute_force() {
    let all = [1usize, 2, 4, 11, 34, 156];
    for n in 1..=6 {
        let idx = pairs(n);
        let perms = permutations(n);
        let classes: BTreeSet<u32> = (0..1u32 << idx.len()).map(|m| brute_canon(n, m, &perms, &idx)).collect();
        assert_eq!(classes.len(), all[n - 1], "n={n}");
        let got = all_graphs(n, Exec::Parallel).unwrap();
        let got_canon: BTreeSet<u32> = got.iter().map(|g| brute_canon(n, mask_of(g, &idx), &perms, &idx)).collect();
        assert_eq!(got.len(), got_canon.len(), "n={n}: isomorphic duplicates");
        assert_eq!(got_canon, classes, "n={n}");
    }
}

fn counts_by_order(class: Option<GraphClass>) -> Vec<usize> {
    let corpus = corpus_up_to(6, GraphSource::Builtin, Exec::Parallel).unwrap();
    let mut out = vec![0; 6];
    for g in &corpus {
        if class.is_none_or(|c| classify(g, c).unwrap().member) {
            out[g.n() - 1] += 1;
        }
    }
    out
}

#[test]
fn connected_class_counts() {
    assert_eq!(counts_by_order(None), [1, 1, 2, 6, 21, 112]);
    assert_eq!(counts_by_order(Some(GraphClass::Chordal)), [1, 1, 2, 5, 15, 58]);
    assert_eq!(counts_by_order(Some(GraphClass::DistanceHereditary)), [1, 1, 2, 6, 18, 73]);
    assert_eq!(counts_by_order(Some(GraphClass::Ptolemaic)), [1, 1, 2, 5, 14, 47]);
    assert_eq!(counts_by_order(Some(GraphClass::Tree)), [1, 1, 1, 2, 3, 6]);
    assert_eq!(counts_by_order(Some(GraphClass::TriangleFree)), [1, 1, 1, 3, 6, 19]);
}

#[test]
fn sequential_and_parallel_enumeration_agree() {
    for n in 1..=6 {
        assert_eq!(all_graphs(n, Exec::Sequential).unwrap(), all_graphs(n, Exec::Parallel).unwrap());
    }
}
