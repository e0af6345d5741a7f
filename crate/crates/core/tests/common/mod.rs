#![allow(dead_code)]

use ftdiam_core::generate::random_subset;
use ftdiam_core::graph::ShortestPathTree;
use ftdiam_core::{FailureSet, Graph, VertexId};

/// `count` failure sets of exactly `f` distinct edges each.
pub fn failure_sets(g: &Graph, f: usize, count: usize, seed: u64) -> Vec<FailureSet> {
    (0..count as u64)
        .map(|q| FailureSet::new(g, random_subset(g.m(), f, seed.wrapping_mul(7919).wrapping_add(q))).unwrap())
        .collect()
}

/// Whether the root reaches `x` in `tree` minus the failed edges, by walking
/// parent pointers.
pub fn reaches_in_tree(tree: &ShortestPathTree, x: VertexId, failures: &FailureSet) -> bool {
    if !tree.is_reachable(x) {
        return false;
    }
    let mut cur = x;
    while let Some(p) = tree.parent(cur) {
        if failures.contains(tree.parent_edge(cur).unwrap()) {
            return false;
        }
        cur = p;
    }
    true
}

/// Ancestor test by walking parent pointers.
pub fn walk_is_ancestor(tree: &ShortestPathTree, a: VertexId, b: VertexId) -> bool {
    if !tree.is_reachable(a) || !tree.is_reachable(b) {
        return false;
    }
    let mut cur = Some(b);
    while let Some(x) = cur {
        if x == a {
            return true;
        }
        cur = tree.parent(x);
    }
    false
}
