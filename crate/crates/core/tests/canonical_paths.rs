mod common;

use common::walk_is_ancestor;
use ftdiam_core::generate::random_connected;
use ftdiam_core::graph::{shortest_paths_from, TreeSet};
use ftdiam_core::{FailureSet, Graph};
use proptest::prelude::*;

fn graphs() -> impl Strategy<Value = Graph> {
    (4usize..14, 0usize..100, 1u64..4, any::<u64>()).prop_map(|(n, extra, w, seed)| {
        let max_m = (n * (n - 1) / 2).min(3 * n);
        let m = n - 1 + extra % (max_m - n + 2);
        random_connected(n, m, w, seed)
    })
}

/// Floyd-Warshall over weights `w 2^m + 2^rank`, which makes every shortest
/// path unique and orders equal-length paths by their highest-ranked edges.
fn perturbed_apsp(g: &Graph) -> Vec<Vec<Option<u128>>> {
    let n = g.n();
    let shift = g.m() as u32;
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for (id, e) in g.edges().iter().enumerate() {
        let w = ((e.weight as u128) << shift) + (1u128 << g.tie_rank(id));
        d[e.u][e.v] = Some(w);
        d[e.v][e.u] = Some(w);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn membership_matches_perturbed_weights(g in graphs()) {
        let d = perturbed_apsp(&g);
        let trees = TreeSet::build(&g);
        let shift = g.m() as u32;
        for s in g.vertices() {
            for t in g.vertices() {
                let dst = d[s][t].unwrap();
                prop_assert_eq!(trees.dist(s, t).value(), Some((dst >> shift) as u64));
                for v in g.vertices() {
                    let on = d[s][v].unwrap() + d[v][t].unwrap() == dst;
                    prop_assert_eq!(trees.on_canonical_path(s, v, t), on, "s={} v={} t={}", s, v, t);
                }
            }
        }
    }

    #[test]
    fn paths_are_symmetric_and_nested(g in graphs()) {
        let trees = TreeSet::build(&g);
        for s in g.vertices() {
            for t in g.vertices() {
                let forward = trees.tree(s).path_between(s, t).unwrap();
                let mut backward = trees.tree(t).path_between(t, s).unwrap();
                backward.reverse();
                prop_assert_eq!(&forward, &backward);
                // every prefix is the canonical path to its last vertex
                for (i, &v) in forward.iter().enumerate() {
                    prop_assert_eq!(&trees.tree(s).path_between(s, v).unwrap()[..], &forward[..=i]);
                    prop_assert_eq!(&trees.tree(v).path_between(v, t).unwrap()[..], &forward[i..]);
                }
            }
        }
    }

    #[test]
    fn pre_post_ancestry_matches_parent_walk(g in graphs(), cut in 0usize..3, pick in any::<u64>()) {
        let ids: Vec<usize> = (0..cut).map(|i| (pick as usize).wrapping_add(i * 7) % g.m()).collect();
        let failures = FailureSet::new(&g, ids).unwrap();
        for r in g.vertices() {
            let t = shortest_paths_from(&g, r, &failures);
            for a in g.vertices() {
                for b in g.vertices() {
                    prop_assert_eq!(t.is_ancestor(a, b), walk_is_ancestor(&t, a, b));
                    if t.is_reachable(a) && t.is_reachable(b) {
                        let z = t.lca(a, b).unwrap();
                        prop_assert!(walk_is_ancestor(&t, z, a) && walk_is_ancestor(&t, z, b));
                        for &c in t.children(z) {
                            prop_assert!(!(walk_is_ancestor(&t, c, a) && walk_is_ancestor(&t, c, b)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn edge_on_path_matches_explicit_path(g in graphs()) {
        let trees = TreeSet::build(&g);
        for r in g.vertices() {
            let t = trees.tree(r);
            for x in g.vertices() {
                for y in g.vertices() {
                    let path = t.path_between(x, y).unwrap();
                    for (id, e) in g.edges().iter().enumerate() {
                        let explicit = path.windows(2).any(|w| (w[0], w[1]) == (e.u, e.v) || (w[0], w[1]) == (e.v, e.u));
                        prop_assert_eq!(t.edge_on_path(x, y, id, e.u, e.v), explicit);
                    }
                }
            }
        }
    }
}
