//! The dual-failure lower-bound construction.
//!
//! `H` has `n = 6N` vertices in four blocks `A, B, C, D`; `G ⊇ H` adds edges
//! encoding a binary `√N x √N x √N` tensor `M`. Removing the pair
//! `F = {a[i,j]b[i,y,0], c[i,y,0]d[x,y]}` leaves diameter at most 3 when
//! `M[i,j,y] = M[i,x,y] = 1` and at least 5 when both are 0.
//!
//! Indices `i, j, x, y` are 1-based, `k` is 0 or 1. Vertex ids, with
//! `r = √N` and `p = (i-1) r + (j-1)`:
//!
//! | label      | id               |
//! |------------|------------------|
//! | `a[i,j]`   | `p`              |
//! | `b[i,j,k]` | `N + 2p + k`     |
//! | `c[i,j,k]` | `3N + 2p + k`    |
//! | `d[i,j]`   | `5N + p`         |

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::exact::{exact_diameter, exact_distances};
use crate::graph::{FailureSet, Graph, VertexId};

/// A binary tensor with side `root`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LbTensor {
    root: usize,
    entries: Vec<bool>,
}

impl LbTensor {
    pub fn from_fn(root: usize, mut entry: impl FnMut(usize, usize, usize) -> bool) -> LbTensor {
        let mut entries = Vec::with_capacity(root * root * root);
        for i in 1..=root {
            for j in 1..=root {
                for k in 1..=root {
                    entries.push(entry(i, j, k));
                }
            }
        }
        LbTensor { root, entries }
    }

    pub fn ones(root: usize) -> LbTensor {
        LbTensor::from_fn(root, |_, _, _| true)
    }

    pub fn zeros(root: usize) -> LbTensor {
        LbTensor::from_fn(root, |_, _, _| false)
    }

    pub fn random(root: usize, seed: u64) -> LbTensor {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        LbTensor::from_fn(root, |_, _, _| rng.gen())
    }

    pub fn root(&self) -> usize {
        self.root
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        let r = self.root;
        assert!((1..=r).contains(&i) && (1..=r).contains(&j) && (1..=r).contains(&k), "index out of range");
        ((i - 1) * r + (j - 1)) * r + (k - 1)
    }

    /// `M[i,j,k]`, 1-based.
    pub fn get(&self, i: usize, j: usize, k: usize) -> bool {
        self.entries[self.offset(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: bool) {
        let o = self.offset(i, j, k);
        self.entries[o] = value;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    A { i: usize, j: usize },
    B { i: usize, j: usize, k: usize },
    C { i: usize, j: usize, k: usize },
    D { i: usize, j: usize },
}

/// `H` or `G` with its labeling.
#[derive(Clone, Debug)]
pub struct LbGraph {
    graph: Graph,
    root: usize,
}

impl LbGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// `√N`.
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn block(&self) -> usize {
        self.root * self.root
    }

    pub fn vertex(&self, label: Label) -> VertexId {
        let r = self.root;
        let big = self.block();
        let p = |i: usize, j: usize| {
            assert!((1..=r).contains(&i) && (1..=r).contains(&j), "index out of range");
            (i - 1) * r + (j - 1)
        };
        match label {
            Label::A { i, j } => p(i, j),
            Label::B { i, j, k } => big + 2 * p(i, j) + k,
            Label::C { i, j, k } => 3 * big + 2 * p(i, j) + k,
            Label::D { i, j } => 5 * big + p(i, j),
        }
    }

    pub fn label(&self, v: VertexId) -> Label {
        let r = self.root;
        let big = self.block();
        let ij = |p: usize| (p / r + 1, p % r + 1);
        match v / big {
            0 => {
                let (i, j) = ij(v);
                Label::A { i, j }
            }
            1 | 2 => {
                let q = v - big;
                let (i, j) = ij(q / 2);
                Label::B { i, j, k: q % 2 }
            }
            3 | 4 => {
                let q = v - 3 * big;
                let (i, j) = ij(q / 2);
                Label::C { i, j, k: q % 2 }
            }
            5 => {
                let (i, j) = ij(v - 5 * big);
                Label::D { i, j }
            }
            _ => panic!("vertex {v} out of range"),
        }
    }

    pub fn a(&self, i: usize, j: usize) -> VertexId {
        self.vertex(Label::A { i, j })
    }

    pub fn b(&self, i: usize, j: usize, k: usize) -> VertexId {
        self.vertex(Label::B { i, j, k })
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> VertexId {
        self.vertex(Label::C { i, j, k })
    }

    pub fn d(&self, i: usize, j: usize) -> VertexId {
        self.vertex(Label::D { i, j })
    }

    /// `F = {e1, e2}` and `F' = {e1', e2'}` as vertex pairs.
    pub fn failure_sets(&self, i: usize, j: usize, x: usize, y: usize) -> Result<FailurePairs> {
        let r = self.root;
        if [i, j, x, y].iter().any(|&t| t == 0 || t > r) {
            return Err(Error::InvalidQuadruple(format!("({i},{j},{x},{y}) outside [1,{r}]")));
        }
        if i == x || j == y {
            return Err(Error::InvalidQuadruple(format!("({i},{j},{x},{y}) needs i != x and j != y")));
        }
        Ok(FailurePairs {
            f: [(self.a(i, j), self.b(i, y, 0)), (self.c(i, y, 0), self.d(x, y))],
            f_prime: [(self.a(i, j), self.b(i, y, 1)), (self.c(i, y, 1), self.d(x, y))],
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FailurePairs {
    pub f: [(VertexId, VertexId); 2],
    pub f_prime: [(VertexId, VertexId); 2],
}

fn perfect_root(n: usize) -> Option<usize> {
    let mut r = (n as f64).sqrt() as usize;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    (r * r == n).then_some(r)
}

fn h_edges(r: usize) -> Vec<(Label, Label)> {
    let idx = || (1..=r).flat_map(move |i| (1..=r).map(move |j| (i, j)));
    let mut out = Vec::new();
    for (i, j) in idx() {
        for k in 0..2 {
            for (x, y) in idx() {
                for z in 0..2 {
                    // each unordered pair once
                    if ((i == x) ^ (j == y)) && (i, j, k) < (x, y, z) {
                        out.push((Label::B { i, j, k }, Label::B { i: x, j: y, k: z }));
                        out.push((Label::C { i, j, k }, Label::C { i: x, j: y, k: z }));
                    }
                }
            }
            out.push((Label::B { i, j, k }, Label::C { i, j, k: 0 }));
            out.push((Label::B { i, j, k }, Label::C { i, j, k: 1 }));
        }
        for y in 1..=r {
            out.push((Label::A { i, j }, Label::B { i, j: y, k: 0 }));
        }
        for x in 1..=r {
            out.push((Label::C { i: x, j, k: 0 }, Label::D { i, j }));
        }
    }
    out
}

fn assemble(root: usize, labelled: &[(Label, Label)]) -> Result<LbGraph> {
    let shell = LbGraph {
        graph: Graph::unit(0, &[])?,
        root,
    };
    let edges: Vec<(VertexId, VertexId)> = labelled
        .iter()
        .map(|&(p, q)| (shell.vertex(p), shell.vertex(q)))
        .collect();
    Ok(LbGraph {
        graph: Graph::unit(6 * root * root, &edges)?,
        root,
    })
}

/// The base graph `H` on `6N` vertices.
pub fn build_h(n_block: usize) -> Result<LbGraph> {
    let r = perfect_root(n_block).filter(|&r| r > 0).ok_or(Error::NotPerfectSquare(n_block))?;
    assemble(r, &h_edges(r))
}

/// `H` plus `a[i,j]b[i,y,1]` for `M[i,j,y] = 1` and `c[i,y,1]d[x,y]` for
/// `M[i,x,y] = 1`.
pub fn build_g(h: &LbGraph, m: &LbTensor) -> Result<LbGraph> {
    let r = h.root;
    if m.root() != r {
        return Err(Error::DimensionMismatch {
            graph: r,
            tensor: m.root(),
        });
    }
    let mut edges = h_edges(r);
    for i in 1..=r {
        for j in 1..=r {
            for y in 1..=r {
                if m.get(i, j, y) {
                    edges.push((Label::A { i, j }, Label::B { i, j: y, k: 1 }));
                    // here j plays the role of x
                    edges.push((Label::C { i, j: y, k: 1 }, Label::D { i: j, j: y }));
                }
            }
        }
    }
    assemble(r, &edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dichotomy {
    AtMost3,
    AtLeast5,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DichotomyReport {
    pub class: Dichotomy,
    /// `diam(G - F)`.
    pub diameter: Distance,
    /// `d_{G-F}(a[i,j], d[x,y])`.
    pub a_to_d: Distance,
}

/// Classifies `G - F` by brute force and checks it against the entries
/// `M[i,j,y] = M[i,x,y]`.
pub fn verify_dichotomy(g: &LbGraph, m: &LbTensor, i: usize, j: usize, x: usize, y: usize) -> Result<DichotomyReport> {
    if m.root() != g.root {
        return Err(Error::DimensionMismatch {
            graph: g.root,
            tensor: m.root(),
        });
    }
    let pairs = g.failure_sets(i, j, x, y)?;
    let (first, second) = (m.get(i, j, y), m.get(i, x, y));
    if first != second {
        return Err(Error::MixedEntries);
    }
    let fs = FailureSet::from_pairs(&g.graph, &pairs.f)?;
    let diameter = exact_diameter(&g.graph, &fs);
    let a_to_d = exact_distances(&g.graph, g.a(i, j), &fs)[g.d(x, y)];
    let quad = format!("({i},{j},{x},{y})");
    if first {
        if diameter > Distance::finite(3) {
            return Err(Error::DichotomyViolation(format!("{quad}: entries 1 but diameter {diameter}")));
        }
        Ok(DichotomyReport {
            class: Dichotomy::AtMost3,
            diameter,
            a_to_d,
        })
    } else {
        if a_to_d < Distance::finite(5) {
            return Err(Error::DichotomyViolation(format!("{quad}: entries 0 but a-d distance {a_to_d}")));
        }
        Ok(DichotomyReport {
            class: Dichotomy::AtLeast5,
            diameter,
            a_to_d,
        })
    }
}

/// Every `(i,j,x,y)` with `i != x` and `j != y`, in lexicographic order.
pub fn quadruples(root: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=root {
        for j in 1..=root {
            for x in (1..=root).filter(|&x| x != i) {
                for y in (1..=root).filter(|&y| y != j) {
                    out.push((i, j, x, y));
                }
            }
        }
    }
    out
}
