//! f-FDO-ST with stretch `1 + 3σ` from an all-pairs DSO.
//!
//! A query maps `S` and `T` to proxy sets `S', T' ⊆ V(F)`: `v ∈ S'` iff some
//! marked source is still reachable from `v` in `T_v - F`, and symmetrically
//! for `T'`. The answer is `diam(G,S,T) + max_{(u,v) ∈ S' x T'} d̂(u, v, F)`.
//!
//! Two storage regimes decide the same membership:
//!
//! * [`Regime::Full`] keeps every marked tree with subtree counts.
//! * [`Regime::Compressed`] keeps, per vertex and side, at most `2^f`
//!   selected leaves, the subtree they span, and long segments contracted to
//!   representative edges checked against pivot trees.

mod compress;
mod marked;
mod pivots;
mod select;

use crate::distance::{DiameterEstimate, Distance, Stretch};
use crate::dso::AllPairsDso;
use crate::error::{Error, Result};
use crate::graph::{FailureSet, Graph, TreeSet, VertexId};
use crate::oracle::DiameterOracle;

pub use compress::{compress_tree, long_path_threshold, spanned_segments, CompressedTree, Link, Segment};
pub use marked::{mark_all, MarkedTree, Marks, Side};
pub use pivots::{build_pivots, pivot_sample_size, PivotSet, PIVOT_CONSTANT};
pub use select::{relevant_vertices, select_leaves};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    Full,
    Compressed,
    /// Compressed iff `2^f <= √n`.
    Auto,
}

impl Regime {
    pub fn resolve(self, n: usize, f: usize) -> Regime {
        match self {
            Regime::Auto => {
                // 2^f <= √n  <=>  4^f <= n
                let compressed = f < 32 && 1u128 << (2 * f) <= n as u128;
                if compressed {
                    Regime::Compressed
                } else {
                    Regime::Full
                }
            }
            other => other,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct FdoStConfig {
    pub regime: Regime,
    /// Seed of the pivot sampler.
    pub seed: u64,
}

impl Default for FdoStConfig {
    fn default() -> Self {
        FdoStConfig {
            regime: Regime::Auto,
            seed: 0,
        }
    }
}

/// Structural sizes recorded while building the compressed regime.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CompressionStats {
    pub threshold: usize,
    /// Distinct long paths over all trees.
    pub long_paths: usize,
    /// Largest number of long segments in one tree.
    pub max_long_per_tree: usize,
    pub max_leaves: usize,
    pub max_nodes: usize,
    pub representative_edges: usize,
    pub pivots: usize,
    pub pivot_attempts: u32,
}

#[derive(Debug)]
enum Index {
    Full(Vec<MarkedTree>),
    Compressed {
        source: Vec<CompressedTree>,
        target: Vec<CompressedTree>,
        pivots: PivotSet,
        stats: CompressionStats,
    },
}

#[derive(Debug)]
pub struct FdoSt<D> {
    diam_st: Distance,
    index: Index,
    dso: D,
    f: usize,
}

impl<D: AllPairsDso> FdoSt<D> {
    /// Builds the oracle for sensitivity `dso.sensitivity()` over undirected `g`.
    pub fn build(g: &Graph, sources: &[VertexId], targets: &[VertexId], dso: D, config: FdoStConfig) -> Result<FdoSt<D>> {
        if g.is_directed() {
            return Err(Error::DirectedUnsupported("the ST-diameter oracle"));
        }
        if sources.is_empty() || targets.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        for &v in sources.iter().chain(targets) {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
        }
        let mut sources = sources.to_vec();
        sources.sort_unstable();
        sources.dedup();
        let mut targets = targets.to_vec();
        targets.sort_unstable();
        targets.dedup();

        let f = dso.sensitivity();
        let trees = TreeSet::build(g);
        let diam_st = sources
            .iter()
            .flat_map(|&s| targets.iter().map(move |&t| (s, t)))
            .map(|(s, t)| trees.dist(s, t))
            .max()
            .unwrap_or(Distance::ZERO);
        let marked = mark_all(trees, &sources, &targets);
        let index = match config.regime.resolve(g.n(), f) {
            Regime::Compressed => compress_all(g, marked, f, config.seed)?,
            _ => Index::Full(marked),
        };
        Ok(FdoSt { diam_st, index, dso, f })
    }

    /// `diam(G, S, T)`.
    pub fn diam_st(&self) -> Distance {
        self.diam_st
    }

    pub fn regime(&self) -> Regime {
        match self.index {
            Index::Full(_) => Regime::Full,
            Index::Compressed { .. } => Regime::Compressed,
        }
    }

    pub fn marked_trees(&self) -> Option<&[MarkedTree]> {
        match &self.index {
            Index::Full(t) => Some(t),
            Index::Compressed { .. } => None,
        }
    }

    pub fn compressed_tree(&self, v: VertexId, side: Side) -> Option<&CompressedTree> {
        match &self.index {
            Index::Full(_) => None,
            Index::Compressed { source, target, .. } => Some(match side {
                Side::Source => &source[v],
                Side::Target => &target[v],
            }),
        }
    }

    pub fn pivots(&self) -> Option<&PivotSet> {
        match &self.index {
            Index::Compressed { pivots, .. } => Some(pivots),
            Index::Full(_) => None,
        }
    }

    pub fn compression_stats(&self) -> Option<&CompressionStats> {
        match &self.index {
            Index::Compressed { stats, .. } => Some(stats),
            Index::Full(_) => None,
        }
    }

    /// `S'` (for [`Side::Source`]) or `T'` (for [`Side::Target`]).
    pub fn proxies(&self, side: Side, failures: &FailureSet) -> Vec<VertexId> {
        failures
            .endpoints()
            .iter()
            .copied()
            .filter(|&v| match &self.index {
                Index::Full(trees) => trees[v].reachable_marks(side, failures) > 0,
                Index::Compressed { source, target, pivots, .. } => {
                    let tree = match side {
                        Side::Source => &source[v],
                        Side::Target => &target[v],
                    };
                    tree.reachable_leaves(failures, pivots) > 0
                }
            })
            .collect()
    }

    pub fn compute_s_prime(&self, failures: &FailureSet) -> Vec<VertexId> {
        self.proxies(Side::Source, failures)
    }

    pub fn compute_t_prime(&self, failures: &FailureSet) -> Vec<VertexId> {
        self.proxies(Side::Target, failures)
    }

    pub fn query(&self, failures: &FailureSet) -> Result<DiameterEstimate> {
        failures.check_sensitivity(self.f)?;
        if !self.diam_st.is_finite() {
            return Ok(Distance::INFINITE);
        }
        let s_prime = self.compute_s_prime(failures);
        let t_prime = self.compute_t_prime(failures);
        let mut worst = Distance::ZERO;
        for &u in &s_prime {
            for &v in &t_prime {
                if u != v {
                    worst = worst.max(self.dso.query(u, v, failures));
                }
                if !worst.is_finite() {
                    return Ok(worst);
                }
            }
        }
        Ok(self.diam_st + worst)
    }
}

fn compress_all(g: &Graph, marked: Vec<MarkedTree>, f: usize, seed: u64) -> Result<Index> {
    let threshold = long_path_threshold(g.n());
    let mut stats = CompressionStats {
        threshold,
        ..Default::default()
    };
    let mut selections = Vec::with_capacity(marked.len());
    let mut long_paths: std::collections::BTreeMap<(VertexId, VertexId), Vec<VertexId>> = Default::default();
    for mt in &marked {
        let mut per_side = Vec::with_capacity(2);
        for side in [Side::Source, Side::Target] {
            let leaves = select_leaves(mt.tree(), mt.marks(side), f);
            stats.max_leaves = stats.max_leaves.max(leaves.len());
            let mut long_here = 0;
            for seg in spanned_segments(mt.tree(), &leaves) {
                if seg.edges() >= threshold {
                    long_here += 1;
                    let key = (seg.top().min(seg.bottom()), seg.top().max(seg.bottom()));
                    long_paths.entry(key).or_insert(seg.path);
                }
            }
            stats.max_long_per_tree = stats.max_long_per_tree.max(long_here);
            per_side.push(leaves);
        }
        selections.push(per_side);
    }
    let paths: Vec<Vec<VertexId>> = long_paths.into_values().collect();
    stats.long_paths = paths.len();
    let pivots = build_pivots(&paths, g, seed);
    stats.pivots = pivots.len();
    stats.pivot_attempts = pivots.attempts();

    let mut source = Vec::with_capacity(marked.len());
    let mut target = Vec::with_capacity(marked.len());
    for (mt, leaves) in marked.iter().zip(&selections) {
        for (side, out) in [(0, &mut source), (1, &mut target)] {
            let ct = compress_tree(mt.tree(), &leaves[side], threshold, &pivots)?;
            stats.max_nodes = stats.max_nodes.max(ct.node_count());
            stats.representative_edges += ct.representative_edges().count();
            out.push(ct);
        }
    }
    Ok(Index::Compressed {
        source,
        target,
        pivots,
        stats,
    })
}

impl<D: AllPairsDso> DiameterOracle for FdoSt<D> {
    fn query(&self, failures: &FailureSet) -> Result<DiameterEstimate> {
        FdoSt::query(self, failures)
    }

    fn stretch(&self) -> Stretch {
        Stretch::from_integer(1) + Stretch::from_integer(3) * self.dso.stretch()
    }

    fn sensitivity(&self) -> usize {
        self.f
    }
}
