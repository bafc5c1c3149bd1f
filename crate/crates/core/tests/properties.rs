use proptest::prelude::*;

use tollwalk_core::nondef::{ef_solve_with, scant_structure, w_structure, Player};
use tollwalk_core::tollwalk::toll_transit_with;
use tollwalk_core::{toll_interval, toll_interval_oracle, Exec, Graph};

/// A connected graph: a random tree on `0..n` plus extra edges from `bits`.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        (proptest::collection::vec(any::<usize>(), n - 1), proptest::collection::vec(any::<bool>(), n * (n - 1) / 2))
            .prop_map(move |(parents, bits)| {
                let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (parents[v - 1] % v, v)).collect();
                let mut k = 0;
                for a in 0..n {
                    for b in a + 1..n {
                        if bits[k] && !edges.contains(&(a, b)) {
                            edges.push((a, b));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn oracle_equals_interval(g in connected_graph(11)) {
        for u in g.vertices() {
            for v in g.vertices() {
                if u != v && !g.has_edge(u, v) {
                    prop_assert_eq!(toll_interval(&g, u, v).unwrap(), toll_interval_oracle(&g, u, v).unwrap());
                }
            }
        }
    }

    #[test]
    fn parallel_equals_sequential(g in connected_graph(12)) {
        prop_assert_eq!(
            toll_transit_with(&g, Exec::Sequential).unwrap(),
            toll_transit_with(&g, Exec::Parallel).unwrap()
        );
    }

    #[test]
    fn transit_laws(g in connected_graph(10)) {
        let t = toll_transit_with(&g, Exec::Sequential).unwrap();
        prop_assert!(t.validate().is_ok());
        prop_assert_eq!(t.underlying_graph(), g.clone());
        for u in g.vertices() {
            for v in g.vertices() {
                prop_assert_eq!(t.get(u, v), t.get(v, u));
            }
        }
    }

    #[test]
    fn w_structure_invariants(g in connected_graph(9)) {
        let w = w_structure(&g).unwrap();
        let t = toll_transit_with(&g, Exec::Sequential).unwrap();
        prop_assert!(w.validate().is_ok());
        prop_assert_eq!(w.underlying_graph(), g.clone());
        for x in g.vertices() {
            for z in g.vertices() {
                prop_assert_eq!(w.f(x, z), t.get(x, z));
            }
        }
        let s = scant_structure(&g).unwrap();
        prop_assert_eq!(s.underlying_graph(), g);
    }

    #[test]
    fn duplicator_wins_on_identical_structures(g in connected_graph(5), r in 1usize..=2) {
        let w = w_structure(&g).unwrap();
        let res = ef_solve_with(&w, &w, r, 1e8, Exec::Sequential).unwrap();
        prop_assert_eq!(res.winner, Player::Duplicator);
    }

    #[test]
    fn spoiler_wins_are_kept_with_more_rounds(a in connected_graph(4), b in connected_graph(4)) {
        let (wa, wb) = (w_structure(&a).unwrap(), w_structure(&b).unwrap());
        let winners: Vec<Player> =
            (1..=3).map(|r| ef_solve_with(&wa, &wb, r, 1e8, Exec::Sequential).unwrap().winner).collect();
        for r in 1..winners.len() {
            if winners[r - 1] == Player::Spoiler {
                prop_assert_eq!(winners[r], Player::Spoiler);
            }
        }
    }
}
