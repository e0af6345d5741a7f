//! Seeded random graphs for experiments and tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexId};

/// A connected undirected graph: a random spanning tree plus random extra
/// edges until `m` edges exist. Weights are uniform in `1..=max_weight`.
///
/// # Panics
/// If `m` is below `n - 1` or above `n (n - 1) / 2`.
pub fn random_connected(n: usize, m: usize, max_weight: u64, seed: u64) -> Graph {
    assert!(n >= 1 && m + 1 >= n && m <= n * (n - 1) / 2, "impossible edge count");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<VertexId> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut present = std::collections::HashSet::new();
    let mut edges = Vec::with_capacity(m);
    let weight = |rng: &mut ChaCha8Rng| rng.gen_range(1..=max_weight.max(1));
    for i in 1..n {
        let u = order[i];
        let v = order[rng.gen_range(0..i)];
        present.insert((u.min(v), u.max(v)));
        edges.push((u, v, weight(&mut rng)));
    }
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && present.insert((u.min(v), u.max(v))) {
            edges.push((u, v, weight(&mut rng)));
        }
    }
    Graph::from_edges(n, false, &edges).expect("generated edges are valid")
}

/// A random directed graph whose edges include a Hamiltonian cycle, so it is
/// strongly connected.
pub fn random_strongly_connected(n: usize, m: usize, max_weight: u64, seed: u64) -> Graph {
    assert!(n >= 2 && m >= n && m <= n * (n - 1), "impossible edge count");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<VertexId> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut present = std::collections::HashSet::new();
    let mut edges = Vec::with_capacity(m);
    for i in 0..n {
        let (u, v) = (order[i], order[(i + 1) % n]);
        present.insert((u, v));
        edges.push((u, v, rng.gen_range(1..=max_weight.max(1))));
    }
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && present.insert((u, v)) {
            edges.push((u, v, rng.gen_range(1..=max_weight.max(1))));
        }
    }
    Graph::from_edges(n, true, &edges).expect("generated edges are valid")
}

/// A random subset of `0..n` of the given size, sorted.
pub fn random_subset(n: usize, size: usize, seed: u64) -> Vec<VertexId> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut set = rand::seq::index::sample(&mut rng, n, size.min(n)).into_vec();
    set.sort_unstable();
    set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::exact_diameter;
    use crate::graph::FailureSet;

    #[test]
    fn connected_and_sized() {
        for seed in 0..10 {
            let g = random_connected(20, 40, 5, seed);
            assert_eq!(g.m(), 40);
            assert!(exact_diameter(&g, &FailureSet::empty()).is_finite());
        }
        let d = random_strongly_connected(10, 25, 3, 1);
        assert!(exact_diameter(&d, &FailureSet::empty()).is_finite());
    }

    #[test]
    fn deterministic() {
        let a = random_connected(15, 30, 9, 7);
        let b = random_connected(15, 30, 9, 7);
        assert_eq!(a.edges(), b.edges());
    }
}
