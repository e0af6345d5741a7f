use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, FailureSet, Graph, LcaIndex, VertexId};

const NONE: u32 = u32::MAX;

/// A rooted shortest-path tree with traversal numbers and an LCA index.
///
/// Immutable once built; unreachable vertices have infinite distance, no
/// parent, and no traversal numbers.
#[derive(Clone, Debug)]
pub struct ShortestPathTree {
    root: VertexId,
    parent: Vec<Option<VertexId>>,
    parent_edge: Vec<Option<EdgeId>>,
    dist: Vec<Distance>,
    children: Vec<Vec<VertexId>>,
    pre: Vec<u32>,
    post: Vec<u32>,
    lca: LcaIndex,
}

/// Computes the canonical shortest-path tree of `g - excluded` rooted at
/// `source`.
///
/// Lengths are compared first. Among equally long paths the one whose set of
/// edge tie ranks is smaller, read as a binary number, wins. This is a
/// path-additive perturbation of the weights, so shortest paths become unique
/// and are closed under taking subpaths, also across different roots.
pub fn shortest_paths_from(g: &Graph, source: VertexId, excluded: &FailureSet) -> ShortestPathTree {
    let n = g.n();
    let words = g.m().div_ceil(64).max(1);
    let mut dist = vec![Distance::INFINITE; n];
    let mut parent = vec![None; n];
    let mut parent_edge = vec![None; n];
    let mut mask = vec![0u64; n * words];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    let mut scratch = vec![0u64; words];

    dist[source] = Distance::ZERO;
    heap.push(Reverse((Distance::ZERO, source)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if done[u] || d != dist[u] {
            continue;
        }
        // Every vertex that could still improve u's mask is strictly closer,
        // hence already settled.
        done[u] = true;
        for &(v, e) in g.out_edges(u) {
            if done[v] || excluded.contains(e) {
                continue;
            }
            let cand = d + Distance::finite(g.edge(e).weight);
            scratch.copy_from_slice(&mask[u * words..(u + 1) * words]);
            let rank = g.tie_rank(e);
            scratch[rank / 64] |= 1 << (rank % 64);
            let better = match cand.cmp(&dist[v]) {
                Ordering::Less => true,
                Ordering::Equal => cmp_mask(&scratch, &mask[v * words..(v + 1) * words]) == Ordering::Less,
                Ordering::Greater => false,
            };
            if better {
                if cand < dist[v] {
                    heap.push(Reverse((cand, v)));
                }
                dist[v] = cand;
                parent[v] = Some(u);
                parent_edge[v] = Some(e);
                mask[v * words..(v + 1) * words].copy_from_slice(&scratch);
            }
        }
    }
    ShortestPathTree::from_parents(source, parent, parent_edge, dist)
}

fn cmp_mask(a: &[u64], b: &[u64]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

/// Plain Dijkstra distances from `source` in `g - excluded`, no tree.
pub fn distances_from(g: &Graph, source: VertexId, excluded: &FailureSet) -> Vec<Distance> {
    let mut dist = vec![Distance::INFINITE; g.n()];
    dijkstra(g, source, excluded, None, &mut dist);
    dist
}

/// `d_{g - excluded}(u, v)`, stopping as soon as `v` is settled.
pub fn distance_between(g: &Graph, u: VertexId, v: VertexId, excluded: &FailureSet) -> Distance {
    let mut dist = vec![Distance::INFINITE; g.n()];
    dijkstra(g, u, excluded, Some(v), &mut dist);
    dist[v]
}

fn dijkstra(g: &Graph, source: VertexId, excluded: &FailureSet, target: Option<VertexId>, dist: &mut [Distance]) {
    let mut heap = BinaryHeap::new();
    dist[source] = Distance::ZERO;
    heap.push(Reverse((Distance::ZERO, source)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if d != dist[u] {
            continue;
        }
        if Some(u) == target {
            return;
        }
        for &(v, e) in g.out_edges(u) {
            if excluded.contains(e) {
                continue;
            }
            let cand = d + Distance::finite(g.edge(e).weight);
            if cand < dist[v] {
                dist[v] = cand;
                heap.push(Reverse((cand, v)));
            }
        }
    }
}

impl ShortestPathTree {
    pub(crate) fn from_parents(
        root: VertexId,
        parent: Vec<Option<VertexId>>,
        parent_edge: Vec<Option<EdgeId>>,
        dist: Vec<Distance>,
    ) -> ShortestPathTree {
        let n = parent.len();
        let mut children = vec![Vec::new(); n];
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                children[p].push(v);
            }
        }
        let mut pre = vec![NONE; n];
        let mut post = vec![NONE; n];
        let (mut pre_clock, mut post_clock) = (0u32, 0u32);
        let mut stack = vec![(root, 0usize)];
        pre[root] = pre_clock;
        pre_clock += 1;
        while let Some((u, next)) = stack.last_mut() {
            let u = *u;
            if let Some(&c) = children[u].get(*next) {
                *next += 1;
                pre[c] = pre_clock;
                pre_clock += 1;
                stack.push((c, 0));
            } else {
                post[u] = post_clock;
                post_clock += 1;
                stack.pop();
            }
        }
        let lca = LcaIndex::new(root, &children);
        ShortestPathTree {
            root,
            parent,
            parent_edge,
            dist,
            children,
            pre,
            post,
            lca,
        }
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn dist(&self, v: VertexId) -> Distance {
        self.dist[v]
    }

    pub fn distances(&self) -> &[Distance] {
        &self.dist
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<VertexId>] {
        &self.parent
    }

    pub fn parent_edge(&self, v: VertexId) -> Option<EdgeId> {
        self.parent_edge[v]
    }

    /// Children in ascending id order.
    pub fn children(&self, v: VertexId) -> &[VertexId] {
        &self.children[v]
    }

    pub fn is_reachable(&self, v: VertexId) -> bool {
        self.pre[v] != NONE
    }

    pub fn pre(&self, v: VertexId) -> Option<u32> {
        (self.pre[v] != NONE).then_some(self.pre[v])
    }

    pub fn post(&self, v: VertexId) -> Option<u32> {
        (self.post[v] != NONE).then_some(self.post[v])
    }

    /// Reachable vertices in pre-order.
    pub fn preorder(&self) -> Vec<VertexId> {
        let mut order: Vec<VertexId> = (0..self.n()).filter(|&v| self.is_reachable(v)).collect();
        order.sort_unstable_by_key(|&v| self.pre[v]);
        order
    }

    /// `a` is an ancestor of `b` or equal to it. False if either is unreachable.
    pub fn is_ancestor(&self, a: VertexId, b: VertexId) -> bool {
        self.is_reachable(a) && self.is_reachable(b) && self.pre[a] <= self.pre[b] && self.post[a] >= self.post[b]
    }

    pub fn lca(&self, u: VertexId, v: VertexId) -> Result<VertexId> {
        for x in [u, v] {
            if !self.is_reachable(x) {
                return Err(Error::Unreachable(x));
            }
        }
        Ok(self.lca.query(u, v))
    }

    /// If `e = {a, b}` is a tree edge, returns its endpoint farther from the root.
    pub fn tree_edge_child(&self, e: EdgeId, a: VertexId, b: VertexId) -> Option<VertexId> {
        if self.parent_edge[b] == Some(e) {
            Some(b)
        } else if self.parent_edge[a] == Some(e) {
            Some(a)
        } else {
            None
        }
    }

    /// Whether the edge `e = {a, b}` lies on the tree path between `x` and `y`.
    ///
    /// The edge must be a tree edge, and its lower endpoint must be an ancestor
    /// of exactly one of `x` and `y`. When the root lies on the path, this is
    /// the pair of LCA conditions "both endpoints are ancestors of `x`" or
    /// "both endpoints are ancestors of `y`".
    pub fn edge_on_path(&self, x: VertexId, y: VertexId, e: EdgeId, a: VertexId, b: VertexId) -> bool {
        match self.tree_edge_child(e, a, b) {
            Some(c) => self.is_ancestor(c, x) != self.is_ancestor(c, y),
            None => false,
        }
    }

    /// Vertices from `v` up to the root, inclusive.
    pub fn path_to_root(&self, v: VertexId) -> Vec<VertexId> {
        let mut path = Vec::new();
        if !self.is_reachable(v) {
            return path;
        }
        let mut cur = Some(v);
        while let Some(x) = cur {
            path.push(x);
            cur = self.parent[x];
        }
        path
    }

    /// Vertices of the tree path from `x` to `y`, inclusive.
    pub fn path_between(&self, x: VertexId, y: VertexId) -> Result<Vec<VertexId>> {
        let z = self.lca(x, y)?;
        let mut up: Vec<VertexId> = self.path_to_root(x).into_iter().take_while(|&w| w != z).collect();
        up.push(z);
        let down: Vec<VertexId> = self.path_to_root(y).into_iter().take_while(|&w| w != z).collect();
        up.extend(down.into_iter().rev());
        Ok(up)
    }
}
