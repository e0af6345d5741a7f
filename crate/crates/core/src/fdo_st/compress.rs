use crate::error::{Error, Result};
use crate::fdo_st::marked::count_after_cuts;
use crate::fdo_st::pivots::PivotSet;
use crate::graph::{EdgeId, FailureSet, ShortestPathTree, VertexId};

/// A maximal tree path between consecutive terminals (root, leaves, branch
/// vertices) of the subtree spanned by the root and the selected leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    /// Vertices from the upper terminal down to the lower one.
    pub path: Vec<VertexId>,
}

impl Segment {
    pub fn top(&self) -> VertexId {
        self.path[0]
    }

    pub fn bottom(&self) -> VertexId {
        *self.path.last().expect("segments are non-empty")
    }

    pub fn edges(&self) -> usize {
        self.path.len() - 1
    }
}

/// `⌈√n⌉`: segments with at least this many edges are contracted.
pub fn long_path_threshold(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r < n {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= n {
        r -= 1;
    }
    r
}

/// Splits the subtree of `tree` spanned by its root and `leaves` into
/// segments between consecutive terminals, in pre-order of their tops.
pub fn spanned_segments(tree: &ShortestPathTree, leaves: &[VertexId]) -> Vec<Segment> {
    let n = tree.n();
    let mut in_span = vec![false; n];
    in_span[tree.root()] = true;
    for &l in leaves {
        for v in tree.path_to_root(l) {
            if in_span[v] {
                break;
            }
            in_span[v] = true;
        }
    }
    let span_children = |u: VertexId| tree.children(u).iter().copied().filter(|&c| in_span[c]);
    let is_terminal = |u: VertexId| u == tree.root() || span_children(u).count() != 1;

    let mut segments = Vec::new();
    let mut stack = vec![tree.root()];
    while let Some(x) = stack.pop() {
        let kids: Vec<VertexId> = span_children(x).collect();
        for &c in kids.iter().rev() {
            let mut path = vec![x, c];
            let mut cur = c;
            while !is_terminal(cur) {
                cur = span_children(cur).next().expect("non-terminal has one child");
                path.push(cur);
            }
            stack.push(cur);
            segments.push(Segment { path });
        }
    }
    segments.sort_by_key(|s| tree.pre(s.top()));
    segments
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Link {
    /// An original tree edge to the parent node.
    Tree(EdgeId),
    /// A contracted long path to the parent node; the path is the tree path
    /// between the two nodes in the pivot's shortest-path tree.
    Representative { pivot: VertexId },
}

/// A compressed view of `T_v` that preserves root-to-leaf reachability for
/// the selected leaves under up to `f` failures.
#[derive(Clone, Debug)]
pub struct CompressedTree {
    root: VertexId,
    vertex: Vec<VertexId>,
    // (vertex, node) sorted by vertex
    index: Vec<(VertexId, usize)>,
    parent: Vec<Option<usize>>,
    link: Vec<Option<Link>>,
    pre: Vec<u32>,
    post: Vec<u32>,
    leaf_count: Vec<u32>,
    leaves: Vec<VertexId>,
}

/// Builds the compressed tree of `tree` for the selected `leaves`, replacing
/// segments of at least `threshold` edges by representative edges.
pub fn compress_tree(
    tree: &ShortestPathTree,
    leaves: &[VertexId],
    threshold: usize,
    pivots: &PivotSet,
) -> Result<CompressedTree> {
    let root = tree.root();
    let mut vertex = vec![root];
    let mut parent = vec![None];
    let mut link = vec![None];
    let mut node_of = std::collections::HashMap::from([(root, 0usize)]);

    for seg in spanned_segments(tree, leaves) {
        let top = node_of[&seg.top()];
        if seg.edges() >= threshold {
            let pivot = pivots.hitting_pivot(&seg.path).ok_or(Error::UnhitPath {
                from: seg.top(),
                to: seg.bottom(),
            })?;
            let pivot_tree = pivots.tree(pivot).expect("pivot trees are stored");
            let (x, y) = (seg.top(), seg.bottom());
            if pivot_tree.path_between(x, y).ok().as_deref() != Some(&seg.path[..]) {
                return Err(Error::PivotPathMismatch { pivot, from: x, to: y });
            }
            node_of.insert(y, vertex.len());
            vertex.push(y);
            parent.push(Some(top));
            link.push(Some(Link::Representative { pivot }));
        } else {
            let mut up = top;
            for &w in &seg.path[1..] {
                node_of.insert(w, vertex.len());
                vertex.push(w);
                parent.push(Some(up));
                link.push(Some(Link::Tree(tree.parent_edge(w).expect("non-root"))));
                up = vertex.len() - 1;
            }
        }
    }

    let k = vertex.len();
    let mut children = vec![Vec::new(); k];
    for (i, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            children[p].push(i);
        }
    }
    let mut is_leaf = vec![false; k];
    for l in leaves {
        is_leaf[node_of[l]] = true;
    }
    let mut pre = vec![0u32; k];
    let mut post = vec![0u32; k];
    let mut leaf_count = vec![0u32; k];
    let (mut pc, mut qc) = (0u32, 0u32);
    let mut stack = vec![(0usize, 0usize)];
    pre[0] = pc;
    pc += 1;
    while let Some(&mut (u, ref mut next)) = stack.last_mut() {
        if let Some(&c) = children[u].get(*next) {
            *next += 1;
            pre[c] = pc;
            pc += 1;
            stack.push((c, 0));
        } else {
            post[u] = qc;
            qc += 1;
            leaf_count[u] += is_leaf[u] as u32;
            stack.pop();
            if let Some(&(p, _)) = stack.last() {
                leaf_count[p] += leaf_count[u];
            }
        }
    }
    let mut index: Vec<(VertexId, usize)> = node_of.into_iter().collect();
    index.sort_unstable();
    Ok(CompressedTree {
        root,
        vertex,
        index,
        parent,
        link,
        pre,
        post,
        leaf_count,
        leaves: leaves.to_vec(),
    })
}

impl CompressedTree {
    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn node_count(&self) -> usize {
        self.vertex.len()
    }

    pub fn leaves(&self) -> &[VertexId] {
        &self.leaves
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.node(v).is_some()
    }

    fn node(&self, v: VertexId) -> Option<usize> {
        self.index.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| self.index[i].1)
    }

    /// `(upper, lower, pivot)` for every representative edge.
    pub fn representative_edges(&self) -> impl Iterator<Item = (VertexId, VertexId, VertexId)> + '_ {
        self.link.iter().enumerate().filter_map(|(i, l)| match l {
            Some(Link::Representative { pivot }) => {
                Some((self.vertex[self.parent[i].expect("non-root")], self.vertex[i], *pivot))
            }
            _ => None,
        })
    }

    /// Parent vertex and link of `v`, if `v` is a non-root node.
    pub fn parent_link(&self, v: VertexId) -> Option<(VertexId, Link)> {
        let i = self.node(v)?;
        Some((self.vertex[self.parent[i]?], self.link[i]?))
    }

    /// Number of selected leaves in the subtree of node `v`.
    pub fn leaf_count(&self, v: VertexId) -> Option<u32> {
        self.node(v).map(|i| self.leaf_count[i])
    }

    fn is_ancestor(&self, a: usize, b: usize) -> bool {
        self.pre[a] <= self.pre[b] && self.post[a] >= self.post[b]
    }

    /// Selected leaves still reachable from the root after removing every link
    /// that carries a failed edge.
    pub fn reachable_leaves(&self, failures: &FailureSet, pivots: &PivotSet) -> u32 {
        let mut cuts = Vec::new();
        for &(e, a, b) in failures.edges() {
            for x in [a, b] {
                if let Some(i) = self.node(x) {
                    if self.link[i] == Some(Link::Tree(e)) {
                        cuts.push(i);
                    }
                }
            }
        }
        for (i, l) in self.link.iter().enumerate() {
            if let Some(Link::Representative { pivot }) = l {
                let pivot_tree = pivots.tree(*pivot).expect("pivot trees are stored");
                let x = self.vertex[self.parent[i].expect("non-root")];
                let y = self.vertex[i];
                if failures.edges().iter().any(|&(e, a, b)| pivot_tree.edge_on_path(x, y, e, a, b)) {
                    cuts.push(i);
                }
            }
        }
        count_after_cuts(&cuts, |a, b| self.is_ancestor(a, b), |u| self.leaf_count[u], self.leaf_count[0])
    }
}
