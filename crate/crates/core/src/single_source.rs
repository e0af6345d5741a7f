//! ST-diameter oracles from single-source DSOs (undirected graphs only).
//!
//! [`FdoSourceTargets`] estimates `diam(G - F, s, T)` from one shortest-path
//! tree `T_s` with subtree counts of `T`. [`FdoStCombined`] glues an `sT` and
//! a `tS` oracle into an estimate of `diam(G - F, S, T)`.

use crate::distance::{DiameterEstimate, Distance, Stretch};
use crate::dso::SingleSourceDso;
use crate::error::{Error, Result};
use crate::graph::{shortest_paths_from, FailureSet, Graph, ShortestPathTree, VertexId};
use crate::oracle::DiameterOracle;

/// f-FDO-sT: answers `C + max_{x in X_F} d̂(s, x, F)` where `C` is the
/// largest distance from `s` to `T` and `X_F` are the roots of the components
/// of `T_s - F` that still contain a vertex of `T`.
#[derive(Debug)]
pub struct FdoSourceTargets<D> {
    tree: ShortestPathTree,
    count: Vec<u32>,
    farthest: Distance,
    dso: D,
    f: usize,
}

impl<D: SingleSourceDso> FdoSourceTargets<D> {
    pub fn build(g: &Graph, targets: &[VertexId], dso: D) -> Result<FdoSourceTargets<D>> {
        if g.is_directed() {
            return Err(Error::DirectedUnsupported("the sT-diameter oracle"));
        }
        if targets.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let source = dso.source();
        for &v in targets.iter().chain([&source]) {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
        }
        let tree = shortest_paths_from(g, source, &FailureSet::empty());
        let mut count = vec![0u32; g.n()];
        let mut farthest = Distance::ZERO;
        for &t in targets {
            farthest = farthest.max(tree.dist(t));
        }
        let mut is_target = vec![false; g.n()];
        for &t in targets {
            is_target[t] = true;
        }
        for &v in tree.preorder().iter().rev() {
            count[v] += is_target[v] as u32;
            if let Some(p) = tree.parent(v) {
                count[p] += count[v];
            }
        }
        Ok(FdoSourceTargets {
            tree,
            count,
            farthest,
            f: dso.sensitivity(),
            dso,
        })
    }

    pub fn source(&self) -> VertexId {
        self.tree.root()
    }

    pub fn tree(&self) -> &ShortestPathTree {
        &self.tree
    }

    /// Number of targets in the subtree of `v`, including `v`.
    pub fn count(&self, v: VertexId) -> u32 {
        self.count[v]
    }

    /// `C = max_{t in T} d_G(s, t)`.
    pub fn farthest(&self) -> Distance {
        self.farthest
    }

    /// Roots of the components of `T_s - F` that contain a target.
    pub fn component_roots(&self, failures: &FailureSet) -> Vec<VertexId> {
        let t = &self.tree;
        let mut cuts: Vec<VertexId> = failures
            .edges()
            .iter()
            .filter_map(|&(e, a, b)| t.tree_edge_child(e, a, b))
            .chain([t.root()])
            .collect();
        cuts.sort_unstable_by_key(|&b| t.pre(b));
        cuts.dedup();
        // In pre-order, the nearest proper ancestor in `cuts` of a vertex is
        // the ancestor with the largest pre-order number.
        let mut below = vec![0u32; cuts.len()];
        for (i, &b) in cuts.iter().enumerate() {
            if let Some(j) = (0..i).rev().find(|&j| t.is_ancestor(cuts[j], b)) {
                below[j] += self.count[b];
            }
        }
        cuts.iter()
            .zip(&below)
            .filter(|&(&b, &sub)| self.count[b] > sub)
            .map(|(&b, _)| b)
            .collect()
    }

    pub fn query(&self, failures: &FailureSet) -> Result<DiameterEstimate> {
        failures.check_sensitivity(self.f)?;
        if !self.farthest.is_finite() {
            return Ok(Distance::INFINITE);
        }
        let worst = self
            .component_roots(failures)
            .into_iter()
            .map(|x| self.dso.query(x, failures))
            .max()
            .unwrap_or(Distance::ZERO);
        Ok(self.farthest + worst)
    }
}

impl<D: SingleSourceDso> DiameterOracle for FdoSourceTargets<D> {
    fn query(&self, failures: &FailureSet) -> Result<DiameterEstimate> {
        FdoSourceTargets::query(self, failures)
    }

    fn stretch(&self) -> Stretch {
        Stretch::from_integer(1) + Stretch::from_integer(2) * self.dso.stretch()
    }

    fn sensitivity(&self) -> usize {
        self.f
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineMode {
    /// `D_tS + D_sT + min(D_tS, D_sT)`, treating both oracles as black boxes.
    BlackBox,
    /// `D_tS + d̂(s, t, F) + D_sT`, using the DSO at `s` once more.
    Combined,
}

/// `D_tS + D_sT + min(D_tS, D_sT)`.
pub fn combine_black_box(st: DiameterEstimate, ts: DiameterEstimate) -> DiameterEstimate {
    st + ts + st.min(ts)
}

/// The lowest-id vertex of each set, used as `s` and `t`.
pub fn default_anchors(sources: &[VertexId], targets: &[VertexId]) -> Result<(VertexId, VertexId)> {
    match (sources.iter().min(), targets.iter().min()) {
        (Some(&s), Some(&t)) => Ok((s, t)),
        _ => Err(Error::EmptyVertexSet),
    }
}

/// f-FDO-ST from an sT oracle at `s in S` and a tS oracle at `t in T`.
#[derive(Debug)]
pub struct FdoStCombined<D> {
    st: FdoSourceTargets<D>,
    ts: FdoSourceTargets<D>,
    dso_st: D,
    target: VertexId,
    mode: CombineMode,
}

impl<D: SingleSourceDso + Clone> FdoStCombined<D> {
    /// `dso_s` and `dso_t` are single-source DSOs rooted at the chosen
    /// `s in S` and `t in T`.
    pub fn build(
        g: &Graph,
        sources: &[VertexId],
        targets: &[VertexId],
        dso_s: D,
        dso_t: D,
        mode: CombineMode,
    ) -> Result<FdoStCombined<D>> {
        let (s, t) = (dso_s.source(), dso_t.source());
        if !sources.contains(&s) {
            return Err(Error::DsoMismatch(format!("source DSO rooted at {s}, which is not in S")));
        }
        if !targets.contains(&t) {
            return Err(Error::DsoMismatch(format!("target DSO rooted at {t}, which is not in T")));
        }
        Ok(FdoStCombined {
            st: FdoSourceTargets::build(g, targets, dso_s.clone())?,
            ts: FdoSourceTargets::build(g, sources, dso_t)?,
            dso_st: dso_s,
            target: t,
            mode,
        })
    }

    pub fn mode(&self) -> CombineMode {
        self.mode
    }

    pub fn source_side(&self) -> &FdoSourceTargets<D> {
        &self.st
    }

    pub fn target_side(&self) -> &FdoSourceTargets<D> {
        &self.ts
    }

    pub fn query(&self, failures: &FailureSet) -> Result<DiameterEstimate> {
        let st = self.st.query(failures)?;
        let ts = self.ts.query(failures)?;
        Ok(match self.mode {
            CombineMode::BlackBox => combine_black_box(st, ts),
            CombineMode::Combined => {
                if !(st + ts).is_finite() {
                    return Ok(Distance::INFINITE);
                }
                ts + self.dso_st.query(self.target, failures) + st
            }
        })
    }
}

impl<D: SingleSourceDso + Clone> DiameterOracle for FdoStCombined<D> {
    fn query(&self, failures: &FailureSet) -> Result<DiameterEstimate> {
        FdoStCombined::query(self, failures)
    }

    fn stretch(&self) -> Stretch {
        let (a, b) = (self.st.stretch(), self.ts.stretch());
        match self.mode {
            CombineMode::BlackBox => a + b + a.min(b),
            CombineMode::Combined => {
                let sigma = self.dso_st.stretch().max(self.ts.dso.stretch());
                Stretch::from_integer(2) + Stretch::from_integer(5) * sigma
            }
        }
    }

    fn sensitivity(&self) -> usize {
        self.st.f.min(self.ts.f)
    }
}
