//! Brute-force ground truth.
//!
//! Deliberately shares no code with the shortest-path machinery the oracles
//! use: distances come from an array-scan Dijkstra over the raw edge list.

use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::graph::{FailureSet, Graph, VertexId};

#[derive(Clone, Copy, Debug)]
pub struct ExactQuery<'a> {
    pub graph: &'a Graph,
    pub sources: &'a [VertexId],
    pub targets: &'a [VertexId],
    pub failures: &'a FailureSet,
}

/// `diam(G - F, S, T)`, recomputed from scratch.
pub fn exact_st_diameter(q: &ExactQuery<'_>) -> Result<Distance> {
    if q.sources.is_empty() || q.targets.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let n = q.graph.n();
    for &v in q.sources.iter().chain(q.targets) {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    let adjacency = surviving_adjacency(q.graph, q.failures);
    let mut best = Distance::ZERO;
    for &s in q.sources {
        let dist = scan_dijkstra(&adjacency, s);
        for &t in q.targets {
            best = best.max(dist[t]);
            if !best.is_finite() {
                return Ok(best);
            }
        }
    }
    Ok(best)
}

/// `diam(G - F)`.
pub fn exact_diameter(g: &Graph, failures: &FailureSet) -> Distance {
    let all: Vec<VertexId> = (0..g.n()).collect();
    if all.is_empty() {
        return Distance::ZERO;
    }
    exact_st_diameter(&ExactQuery {
        graph: g,
        sources: &all,
        targets: &all,
        failures,
    })
    .expect("valid vertex sets")
}

/// All distances from `source` in `G - F`.
pub fn exact_distances(g: &Graph, source: VertexId, failures: &FailureSet) -> Vec<Distance> {
    scan_dijkstra(&surviving_adjacency(g, failures), source)
}

fn surviving_adjacency(g: &Graph, failures: &FailureSet) -> Vec<Vec<(usize, u64)>> {
    let mut adj = vec![Vec::new(); g.n()];
    for (id, e) in g.edges().iter().enumerate() {
        if failures.edge_ids().any(|f| f == id) {
            continue;
        }
        adj[e.u].push((e.v, e.weight));
        if !g.is_directed() {
            adj[e.v].push((e.u, e.weight));
        }
    }
    adj
}

fn scan_dijkstra(adj: &[Vec<(usize, u64)>], source: usize) -> Vec<Distance> {
    let n = adj.len();
    let mut dist = vec![u64::MAX; n];
    let mut done = vec![false; n];
    dist[source] = 0;
    loop {
        let next = (0..n).filter(|&v| !done[v] && dist[v] != u64::MAX).min_by_key(|&v| dist[v]);
        let Some(u) = next else { break };
        done[u] = true;
        for &(v, w) in &adj[u] {
            dist[v] = dist[v].min(dist[u] + w);
        }
    }
    dist.into_iter()
        .map(|d| if d == u64::MAX { Distance::INFINITE } else { Distance::finite(d) })
        .collect()
}
