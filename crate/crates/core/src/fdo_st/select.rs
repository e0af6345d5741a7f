use crate::fdo_st::marked::Marks;
use crate::graph::{ShortestPathTree, VertexId};

/// Marked vertices with no other marked vertex on their root path.
pub fn relevant_vertices(tree: &ShortestPathTree, marks: &Marks) -> Vec<VertexId> {
    let mut out = Vec::new();
    let mut stack = vec![tree.root()];
    while let Some(u) = stack.pop() {
        if marks.is_marked(u) {
            out.push(u);
            continue;
        }
        stack.extend(tree.children(u).iter().rev().filter(|&&c| marks.count(c) > 0));
    }
    out.sort_unstable();
    out
}

/// Chooses at most `2^f` relevant vertices `L` such that, for every set of at
/// most `f` failed tree edges, the root still reaches a marked vertex iff it
/// still reaches a vertex of `L`.
///
/// At a vertex with `r >= 2` marked branches and budget `k`: if `r > k + 1`,
/// one leaf from each of `k + 1` branches suffices, since `k` failures cannot
/// cut them all. Otherwise every branch gets budget `k - r + 1`, because
/// cutting the selection of the other `r - 1` branches already costs `r - 1`
/// failures. Both cases stay within `2^k` leaves.
pub fn select_leaves(tree: &ShortestPathTree, marks: &Marks, f: usize) -> Vec<VertexId> {
    let mut out = Vec::new();
    if marks.count(tree.root()) > 0 {
        pick(tree, marks, tree.root(), f, &mut out);
    }
    out.sort_unstable();
    out
}

fn pick(tree: &ShortestPathTree, marks: &Marks, start: VertexId, budget: usize, out: &mut Vec<VertexId>) {
    let mut u = start;
    loop {
        if marks.is_marked(u) {
            out.push(u);
            return;
        }
        let branches: Vec<VertexId> = tree.children(u).iter().copied().filter(|&c| marks.count(c) > 0).collect();
        let r = branches.len();
        if r == 0 {
            return;
        }
        if r == 1 || budget == 0 {
            u = branches[0];
            continue;
        }
        if r > budget + 1 {
            for &c in &branches[..=budget] {
                pick(tree, marks, c, 0, out);
            }
        } else {
            for &c in &branches {
                pick(tree, marks, c, budget + 1 - r, out);
            }
        }
        return;
    }
}
