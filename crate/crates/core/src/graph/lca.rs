use crate::graph::VertexId;

/// Constant-time LCA over an Euler tour with a sparse table of depth minima.
#[derive(Clone, Debug, Default)]
pub struct LcaIndex {
    first: Vec<u32>,
    // table[k][i] = vertex of minimum depth in tour[i .. i + 2^k]
    table: Vec<Vec<u32>>,
    depth: Vec<u32>,
}

impl LcaIndex {
    pub fn new(root: VertexId, children: &[Vec<VertexId>]) -> LcaIndex {
        let n = children.len();
        let mut first = vec![u32::MAX; n];
        let mut depth = vec![0u32; n];
        let mut tour: Vec<u32> = Vec::with_capacity(2 * n);
        let mut stack = vec![(root, 0usize)];
        first[root] = 0;
        tour.push(root as u32);
        while let Some(&mut (u, ref mut next)) = stack.last_mut() {
            if let Some(&c) = children[u].get(*next) {
                *next += 1;
                depth[c] = depth[u] + 1;
                first[c] = tour.len() as u32;
                tour.push(c as u32);
                stack.push((c, 0));
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    tour.push(p as u32);
                }
            }
        }
        let mut table = vec![tour];
        let mut width = 1;
        while 2 * width <= table[0].len() {
            let prev = table.last().unwrap();
            let row: Vec<u32> = (0..prev.len() - width)
                .map(|i| min_by_depth(&depth, prev[i], prev[i + width]))
                .collect();
            table.push(row);
            width *= 2;
        }
        LcaIndex { first, table, depth }
    }

    /// Both vertices must be in the tree.
    pub fn query(&self, u: VertexId, v: VertexId) -> VertexId {
        let (mut a, mut b) = (self.first[u] as usize, self.first[v] as usize);
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        let k = (usize::BITS - 1 - (b - a + 1).leading_zeros()) as usize;
        let row = &self.table[k];
        min_by_depth(&self.depth, row[a], row[b + 1 - (1 << k)]) as VertexId
    }
}

fn min_by_depth(depth: &[u32], a: u32, b: u32) -> u32 {
    if depth[b as usize] < depth[a as usize] {
        b
    } else {
        a
    }
}
