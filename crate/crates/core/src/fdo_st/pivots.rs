use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{shortest_paths_from, FailureSet, Graph, ShortestPathTree, VertexId};

/// Multiplier in the pivot sample size `⌈c √n ln n⌉`.
pub const PIVOT_CONSTANT: f64 = 3.0;

/// Pivot vertices hitting every long path, each with its shortest-path tree.
#[derive(Clone, Debug, Default)]
pub struct PivotSet {
    pivots: Vec<VertexId>,
    trees: HashMap<VertexId, ShortestPathTree>,
    attempts: u32,
}

/// `⌈c √n ln n⌉`, capped at `n`.
pub fn pivot_sample_size(n: usize) -> usize {
    if n <= 1 {
        return n;
    }
    let nf = n as f64;
    ((PIVOT_CONSTANT * nf.sqrt() * nf.ln()).ceil() as usize).min(n)
}

/// Samples pivots uniformly with a seeded RNG until every path in `paths` is
/// hit, bumping the seed after each failed attempt.
pub fn build_pivots(paths: &[Vec<VertexId>], g: &Graph, seed: u64) -> PivotSet {
    if paths.is_empty() {
        return PivotSet::default();
    }
    let n = g.n();
    let size = pivot_sample_size(n);
    let mut attempts = 0;
    let pivots = loop {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempts as u64));
        attempts += 1;
        let mut chosen = vec![false; n];
        for v in rand::seq::index::sample(&mut rng, n, size) {
            chosen[v] = true;
        }
        if paths.iter().all(|p| p.iter().any(|&v| chosen[v])) {
            break (0..n).filter(|&v| chosen[v]).collect::<Vec<_>>();
        }
    };
    let empty = FailureSet::empty();
    let trees = pivots.iter().map(|&z| (z, shortest_paths_from(g, z, &empty))).collect();
    PivotSet { pivots, trees, attempts }
}

impl PivotSet {
    /// Pivot ids, ascending.
    pub fn pivots(&self) -> &[VertexId] {
        &self.pivots
    }

    pub fn len(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.pivots.binary_search(&v).is_ok()
    }

    pub fn tree(&self, z: VertexId) -> Option<&ShortestPathTree> {
        self.trees.get(&z)
    }

    /// How many samples were drawn before all paths were hit.
    pub fn attempts(&self) -> u32 {
        self.attempts
    }

    /// Lowest-id pivot on `path`.
    pub fn hitting_pivot(&self, path: &[VertexId]) -> Option<VertexId> {
        path.iter().copied().filter(|&v| self.contains(v)).min()
    }
}
