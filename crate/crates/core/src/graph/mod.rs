//! Graph representation, shortest-path trees and LCA queries.

mod apsp;
mod io;
mod lca;
mod spt;

use std::collections::HashMap;

use crate::error::{Error, Result};

pub use apsp::{all_pairs_distances, st_diameter, DistanceMatrix, TreeSet};
pub use io::{parse_edge_list, read_edge_list, WeightFormat};
pub use lca::LcaIndex;
pub use spt::{distance_between, distances_from, shortest_paths_from, ShortestPathTree};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: u64,
}

/// A graph with strictly positive integer weights.
///
/// Edge ids are the insertion order. Every edge also carries a tie rank, its
/// position in the lexicographic order of `(min endpoint, max endpoint)`.
/// Shortest-path ties are broken by comparing the rank sets of the competing
/// paths, which makes every shortest path unique (see [`shortest_paths_from`]).
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    directed: bool,
    edges: Vec<Edge>,
    out_adj: Vec<Vec<(VertexId, EdgeId)>>,
    in_adj: Vec<Vec<(VertexId, EdgeId)>>,
    index: HashMap<(VertexId, VertexId), EdgeId>,
    tie_rank: Vec<usize>,
    format: WeightFormat,
}

impl Graph {
    /// Builds a graph from `(u, v, w)` triples, rejecting self-loops, parallel
    /// edges and non-positive weights.
    pub fn from_edges(n: usize, directed: bool, edges: &[(VertexId, VertexId, u64)]) -> Result<Graph> {
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); if directed { n } else { 0 }];
        let mut index = HashMap::with_capacity(edges.len());
        let mut list = Vec::with_capacity(edges.len());
        for (id, &(u, v, weight)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if weight == 0 {
                return Err(Error::NonPositiveWeight(u, v));
            }
            let key = if directed { (u, v) } else { (u.min(v), u.max(v)) };
            if index.insert(key, id).is_some() {
                return Err(Error::ParallelEdge(u, v));
            }
            out_adj[u].push((v, id));
            if directed {
                in_adj[v].push((u, id));
            } else {
                out_adj[v].push((u, id));
            }
            list.push(Edge { u, v, weight });
        }
        let mut order: Vec<EdgeId> = (0..list.len()).collect();
        order.sort_by_key(|&e| {
            let Edge { u, v, .. } = list[e];
            (u.min(v), u.max(v), u)
        });
        let mut tie_rank = vec![0; list.len()];
        for (rank, e) in order.into_iter().enumerate() {
            tie_rank[e] = rank;
        }
        Ok(Graph {
            n,
            directed,
            edges: list,
            out_adj,
            in_adj,
            index,
            tie_rank,
            format: WeightFormat::Int,
        })
    }

    /// Undirected unit-weight graph.
    pub fn unit(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph> {
        let triples: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1)).collect();
        Graph::from_edges(n, false, &triples)
    }

    pub fn with_format(mut self, format: WeightFormat) -> Graph {
        self.format = format;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn format(&self) -> WeightFormat {
        self.format
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id]
    }

    pub fn tie_rank(&self, id: EdgeId) -> usize {
        self.tie_rank[id]
    }

    /// Outgoing `(neighbor, edge)` pairs; all incident edges when undirected.
    pub fn out_edges(&self, u: VertexId) -> &[(VertexId, EdgeId)] {
        &self.out_adj[u]
    }

    /// Incoming `(neighbor, edge)` pairs; all incident edges when undirected.
    pub fn in_edges(&self, u: VertexId) -> &[(VertexId, EdgeId)] {
        if self.directed {
            &self.in_adj[u]
        } else {
            &self.out_adj[u]
        }
    }

    /// Looks up the edge `u -> v` (or `{u, v}` when undirected).
    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let key = if self.directed { (u, v) } else { (u.min(v), u.max(v)) };
        self.index.get(&key).copied()
    }

    /// The same graph with every edge reversed. Edge ids are preserved, so a
    /// [`FailureSet`] built for `self` is also valid for the reversal.
    pub fn reversed(&self) -> Graph {
        if !self.directed {
            return self.clone();
        }
        let triples: Vec<_> = self.edges.iter().map(|e| (e.v, e.u, e.weight)).collect();
        let mut g = Graph::from_edges(self.n, true, &triples).expect("reversal of a valid graph");
        g.tie_rank = self.tie_rank.clone();
        g.format = self.format;
        g
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n
    }
}

/// A set of failed edges, with the endpoints `V(F)` precomputed.
///
/// The failed edges carry their endpoints so that oracles can answer queries
/// without consulting the graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FailureSet {
    edges: Vec<(EdgeId, VertexId, VertexId)>,
    endpoints: Vec<VertexId>,
}

impl FailureSet {
    pub fn empty() -> FailureSet {
        FailureSet::default()
    }

    pub fn new(g: &Graph, ids: impl IntoIterator<Item = EdgeId>) -> Result<FailureSet> {
        let mut edges = Vec::new();
        for id in ids {
            if id >= g.m() {
                return Err(Error::UnknownEdgeId(id));
            }
            let e = g.edge(id);
            edges.push((id, e.u, e.v));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut endpoints: Vec<_> = edges.iter().flat_map(|&(_, u, v)| [u, v]).collect();
        endpoints.sort_unstable();
        endpoints.dedup();
        Ok(FailureSet { edges, endpoints })
    }

    /// Builds the set from endpoint pairs; every pair must be an edge of `g`.
    pub fn from_pairs(g: &Graph, pairs: &[(VertexId, VertexId)]) -> Result<FailureSet> {
        let ids = pairs
            .iter()
            .map(|&(u, v)| g.find_edge(u, v).ok_or(Error::UnknownEdge(u, v)))
            .collect::<Result<Vec<_>>>()?;
        FailureSet::new(g, ids)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.edges.binary_search_by_key(&id, |&(e, _, _)| e).is_ok()
    }

    /// `(edge id, u, v)` triples sorted by edge id.
    pub fn edges(&self) -> &[(EdgeId, VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().map(|&(e, _, _)| e)
    }

    /// `V(F)`, sorted ascending.
    pub fn endpoints(&self) -> &[VertexId] {
        &self.endpoints
    }

    pub fn check_sensitivity(&self, f: usize) -> Result<()> {
        if self.len() > f {
            return Err(Error::TooManyFailures { got: self.len(), max: f });
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// The 4-cycle 0-1-2-3-0 with unit weights.
    pub fn c4() -> Graph {
        Graph::unit(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    pub fn p3() -> Graph {
        Graph::unit(3, &[(0, 1), (1, 2)]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::c4;
    use super::*;

    #[test]
    fn rejects_invalid_edges() {
        assert_eq!(Graph::unit(2, &[(0, 0)]).unwrap_err(), Error::SelfLoop(0));
        assert_eq!(Graph::unit(2, &[(0, 1), (1, 0)]).unwrap_err(), Error::ParallelEdge(1, 0));
        assert!(matches!(Graph::unit(2, &[(0, 2)]), Err(Error::VertexOutOfRange { .. })));
        assert!(Graph::from_edges(2, false, &[(0, 1, 0)]).is_err());
        assert!(Graph::from_edges(2, true, &[(0, 1, 1), (1, 0, 1)]).is_ok());
    }

    #[test]
    fn failure_set_endpoints() {
        let g = c4();
        let f = FailureSet::from_pairs(&g, &[(1, 0), (2, 3)]).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.endpoints(), &[0, 1, 2, 3]);
        assert!(f.contains(0) && f.contains(2) && !f.contains(1));
        assert_eq!(FailureSet::from_pairs(&g, &[(0, 2)]).unwrap_err(), Error::UnknownEdge(0, 2));
        assert!(f.check_sensitivity(1).is_err());
    }

    #[test]
    fn reversal_keeps_ids() {
        let g = Graph::from_edges(3, true, &[(0, 1, 2), (1, 2, 3)]).unwrap();
        let r = g.reversed();
        assert_eq!(r.edge(1), Edge { u: 2, v: 1, weight: 3 });
        assert_eq!(r.find_edge(2, 1), Some(1));
        assert_eq!(r.find_edge(1, 2), None);
    }
}
