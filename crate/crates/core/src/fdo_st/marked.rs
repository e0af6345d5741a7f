use crate::graph::{FailureSet, ShortestPathTree, TreeSet, VertexId};

/// Which endpoint set a mark refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Marks on `s in S`, used to decide membership in `S'`.
    Source,
    /// Marks on `t in T`, used to decide membership in `T'`.
    Target,
}

/// Marked vertices of one tree and their subtree counts.
#[derive(Clone, Debug)]
pub struct Marks {
    marked: Vec<bool>,
    count: Vec<u32>,
}

impl Marks {
    pub fn new(tree: &ShortestPathTree, marked: Vec<bool>) -> Marks {
        let mut count = vec![0u32; marked.len()];
        for &u in tree.preorder().iter().rev() {
            count[u] += marked[u] as u32;
            if let Some(p) = tree.parent(u) {
                count[p] += count[u];
            }
        }
        Marks { marked, count }
    }

    pub fn is_marked(&self, v: VertexId) -> bool {
        self.marked[v]
    }

    pub fn marked(&self) -> &[bool] {
        &self.marked
    }

    /// Marked vertices in the subtree of `u`.
    pub fn count(&self, u: VertexId) -> u32 {
        self.count[u]
    }
}

/// The canonical shortest-path tree `T_v` with its source and target marks.
///
/// `s in S` is marked iff `v` lies on the canonical path from `s` to some
/// `t in T`; symmetrically for `t in T`.
#[derive(Clone, Debug)]
pub struct MarkedTree {
    tree: ShortestPathTree,
    source: Marks,
    target: Marks,
}

impl MarkedTree {
    pub fn tree(&self) -> &ShortestPathTree {
        &self.tree
    }

    pub fn root(&self) -> VertexId {
        self.tree.root()
    }

    pub fn marks(&self, side: Side) -> &Marks {
        match side {
            Side::Source => &self.source,
            Side::Target => &self.target,
        }
    }

    /// Marked vertices reachable from the root in `T_v - F`, via subtree
    /// counts: failed tree edges dominated by a higher failed tree edge are
    /// dropped, then the counts below the survivors are subtracted.
    pub fn reachable_marks(&self, side: Side, failures: &FailureSet) -> u32 {
        let t = &self.tree;
        let marks = self.marks(side);
        let cuts: Vec<VertexId> = failures
            .edges()
            .iter()
            .filter_map(|&(e, a, b)| t.tree_edge_child(e, a, b))
            .collect();
        count_after_cuts(&cuts, |a, b| t.is_ancestor(a, b), |u| marks.count(u), marks.count(t.root()))
    }
}

/// `total - Σ count(b)` over the cut vertices `b` not below another cut.
pub(crate) fn count_after_cuts(
    cuts: &[usize],
    is_ancestor: impl Fn(usize, usize) -> bool,
    count: impl Fn(usize) -> u32,
    total: u32,
) -> u32 {
    let mut removed = 0;
    for (i, &b) in cuts.iter().enumerate() {
        if cuts[..i].contains(&b) {
            continue;
        }
        let dominated = cuts.iter().any(|&a| a != b && is_ancestor(a, b));
        if !dominated {
            removed += count(b);
        }
    }
    total - removed
}

/// Builds the marked trees of every vertex.
///
/// Testing `d(s,t) = d(s,v) + d(v,t)` on the canonical paths for every
/// `(v, s, t)` is the same as asking whether the subtree of `v` in `T_s`
/// holds a target, which is what is computed here in `O(n (|S| + |T|))`.
pub fn mark_all(trees: TreeSet, sources: &[VertexId], targets: &[VertexId]) -> Vec<MarkedTree> {
    let n = trees.len();
    let below = |roots: &[VertexId], members: &[VertexId]| -> Vec<Vec<bool>> {
        let mut is_member = vec![false; n];
        for &m in members {
            is_member[m] = true;
        }
        roots
            .iter()
            .map(|&r| {
                let tree = trees.tree(r);
                let mut hit = vec![false; n];
                for &u in tree.preorder().iter().rev() {
                    hit[u] |= is_member[u];
                    if let Some(p) = tree.parent(u) {
                        hit[p] |= hit[u];
                    }
                }
                hit
            })
            .collect()
    };
    // s_hits[i][v]: the subtree of v in T_{sources[i]} contains a target.
    let s_hits = below(sources, targets);
    let t_hits = below(targets, sources);
    trees
        .into_trees()
        .into_iter()
        .enumerate()
        .map(|(v, tree)| {
            let mut s_marked = vec![false; n];
            for (i, &s) in sources.iter().enumerate() {
                s_marked[s] |= s_hits[i][v];
            }
            let mut t_marked = vec![false; n];
            for (i, &t) in targets.iter().enumerate() {
                t_marked[t] |= t_hits[i][v];
            }
            MarkedTree {
                source: Marks::new(&tree, s_marked),
                target: Marks::new(&tree, t_marked),
                tree,
            }
        })
        .collect()
}
