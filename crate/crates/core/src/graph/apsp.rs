use rayon::prelude::*;

use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::graph::{distances_from, shortest_paths_from, FailureSet, Graph, ShortestPathTree, VertexId};

/// Row-major `n x n` distance matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> Distance {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: VertexId) -> &[Distance] {
        &self.data[u * self.n..(u + 1) * self.n]
    }
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let empty = FailureSet::empty();
    let rows: Vec<Vec<Distance>> = g.vertices().into_par_iter().map(|s| distances_from(g, s, &empty)).collect();
    DistanceMatrix {
        n: g.n(),
        data: rows.concat(),
    }
}

/// `max_{s in S, t in T} d_G(s, t)`.
pub fn st_diameter(g: &Graph, sources: &[VertexId], targets: &[VertexId]) -> Result<Distance> {
    if sources.is_empty() || targets.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    for &v in sources.iter().chain(targets) {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    let empty = FailureSet::empty();
    Ok(sources
        .par_iter()
        .map(|&s| {
            let d = distances_from(g, s, &empty);
            targets.iter().map(|&t| d[t]).max().unwrap_or(Distance::ZERO)
        })
        .max()
        .unwrap_or(Distance::ZERO))
}

/// The canonical shortest-path tree of every vertex.
#[derive(Clone, Debug)]
pub struct TreeSet {
    trees: Vec<ShortestPathTree>,
}

impl TreeSet {
    /// Trees are built in parallel; each depends only on its root.
    pub fn build(g: &Graph) -> TreeSet {
        let empty = FailureSet::empty();
        let trees = g.vertices().into_par_iter().map(|v| shortest_paths_from(g, v, &empty)).collect();
        TreeSet { trees }
    }

    pub fn tree(&self, root: VertexId) -> &ShortestPathTree {
        &self.trees[root]
    }

    pub fn dist(&self, u: VertexId, v: VertexId) -> Distance {
        self.trees[u].dist(v)
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// Whether `v` lies on the canonical shortest path from `s` to `t`.
    ///
    /// `d(s,t) = d(s,v) + d(v,t)` says `v` is on some shortest `s`-`t` path;
    /// the ancestry test in `T_s` selects the canonical one.
    pub fn on_canonical_path(&self, s: VertexId, v: VertexId, t: VertexId) -> bool {
        let d = self.dist(s, t);
        d.is_finite() && d == self.dist(s, v) + self.dist(v, t) && self.trees[s].is_ancestor(v, t)
    }

    pub fn into_trees(self) -> Vec<ShortestPathTree> {
        self.trees
    }
}
