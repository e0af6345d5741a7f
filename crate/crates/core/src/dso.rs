//! Distance sensitivity oracle interfaces and reference implementations.
//!
//! Every reduction in this crate talks to its DSO only through
//! [`AllPairsDso`] or [`SingleSourceDso`]. The implementations here are exact
//! recomputation oracles and a wrapper that inflates answers to exercise the
//! stretch bounds of the reductions.

use std::cell::Cell;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use crate::distance::{Distance, Stretch};
use crate::graph::{distance_between, FailureSet, Graph, VertexId};

/// `(u, v, F) -> d̂` with `d_{G-F}(u,v) <= d̂ <= σ d_{G-F}(u,v)`.
pub trait AllPairsDso: Send + Sync {
    fn stretch(&self) -> Stretch;
    fn sensitivity(&self) -> usize;
    fn query(&self, u: VertexId, v: VertexId, failures: &FailureSet) -> Distance;
}

/// `(v, F) -> d̂` for a fixed source `s`, with the same sandwich bound as
/// [`AllPairsDso`] for the pair `(s, v)`.
pub trait SingleSourceDso: Send + Sync {
    fn source(&self) -> VertexId;
    fn stretch(&self) -> Stretch;
    fn sensitivity(&self) -> usize;
    fn query(&self, v: VertexId, failures: &FailureSet) -> Distance;
}

macro_rules! forward_impls {
    ($($ptr:ident),*) => {$(
        impl<D: AllPairsDso + ?Sized> AllPairsDso for $ptr<D> {
            fn stretch(&self) -> Stretch { (**self).stretch() }
            fn sensitivity(&self) -> usize { (**self).sensitivity() }
            fn query(&self, u: VertexId, v: VertexId, failures: &FailureSet) -> Distance {
                (**self).query(u, v, failures)
            }
        }

        impl<D: SingleSourceDso + ?Sized> SingleSourceDso for $ptr<D> {
            fn source(&self) -> VertexId { (**self).source() }
            fn stretch(&self) -> Stretch { (**self).stretch() }
            fn sensitivity(&self) -> usize { (**self).sensitivity() }
            fn query(&self, v: VertexId, failures: &FailureSet) -> Distance {
                (**self).query(v, failures)
            }
        }
    )*};
}

forward_impls!(Arc, Box);

/// Exact all-pairs DSO: runs Dijkstra on `G - F` for every query.
#[derive(Clone, Debug)]
pub struct RecomputeDso {
    graph: Arc<Graph>,
    f: usize,
}

impl RecomputeDso {
    pub fn new(graph: Arc<Graph>, f: usize) -> RecomputeDso {
        RecomputeDso { graph, f }
    }

    /// Exact single-source DSO from `source`.
    pub fn single_source(&self, source: VertexId) -> RecomputeSingleSource {
        RecomputeSingleSource {
            graph: Arc::clone(&self.graph),
            source,
            f: self.f,
        }
    }

    /// Exact single-source DSO from `source` on the edge-reversed graph, i.e.
    /// its answers are distances *into* `source`. For undirected graphs this
    /// coincides with [`RecomputeDso::single_source`].
    pub fn reversed_single_source(&self, source: VertexId) -> RecomputeSingleSource {
        let graph = if self.graph.is_directed() {
            Arc::new(self.graph.reversed())
        } else {
            Arc::clone(&self.graph)
        };
        RecomputeSingleSource { graph, source, f: self.f }
    }
}

impl AllPairsDso for RecomputeDso {
    fn stretch(&self) -> Stretch {
        Stretch::from_integer(1)
    }

    fn sensitivity(&self) -> usize {
        self.f
    }

    fn query(&self, u: VertexId, v: VertexId, failures: &FailureSet) -> Distance {
        distance_between(&self.graph, u, v, failures)
    }
}

#[derive(Clone, Debug)]
pub struct RecomputeSingleSource {
    graph: Arc<Graph>,
    source: VertexId,
    f: usize,
}

impl SingleSourceDso for RecomputeSingleSource {
    fn source(&self) -> VertexId {
        self.source
    }

    fn stretch(&self) -> Stretch {
        Stretch::from_integer(1)
    }

    fn sensitivity(&self) -> usize {
        self.f
    }

    fn query(&self, v: VertexId, failures: &FailureSet) -> Distance {
        distance_between(&self.graph, self.source, v, failures)
    }
}

/// Inflates the answers of an inner DSO by a factor in `[1, λ]` chosen by a
/// hash of the query, so the declared stretch becomes `λ · σ_inner`.
#[derive(Clone, Debug)]
pub struct StretchedDso<D> {
    inner: D,
    lambda: Stretch,
}

impl<D> StretchedDso<D> {
    /// # Panics
    /// If `lambda < 1`.
    pub fn new(inner: D, lambda: Stretch) -> StretchedDso<D> {
        assert!(lambda >= Stretch::from_integer(1), "inflation factor below 1");
        StretchedDso { inner, lambda }
    }

    pub fn lambda(&self) -> Stretch {
        self.lambda
    }

    fn inflate(&self, answer: Distance, key: u64) -> Distance {
        let Some(value) = answer.value() else {
            return answer;
        };
        let slack = answer.scale_floor(self.lambda).value().expect("finite") - value;
        Distance::finite(value + key % (slack + 1))
    }
}

fn query_key(u: VertexId, v: VertexId, failures: &FailureSet) -> u64 {
    let mut h = splitmix(u as u64 ^ 0x5151_0000_0000_0000);
    h = splitmix(h ^ v as u64);
    for e in failures.edge_ids() {
        h = splitmix(h ^ e as u64);
    }
    h
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

impl<D: AllPairsDso> AllPairsDso for StretchedDso<D> {
    fn stretch(&self) -> Stretch {
        self.inner.stretch() * self.lambda
    }

    fn sensitivity(&self) -> usize {
        self.inner.sensitivity()
    }

    fn query(&self, u: VertexId, v: VertexId, failures: &FailureSet) -> Distance {
        self.inflate(self.inner.query(u, v, failures), query_key(u, v, failures))
    }
}

impl<D: SingleSourceDso> SingleSourceDso for StretchedDso<D> {
    fn source(&self) -> VertexId {
        self.inner.source()
    }

    fn stretch(&self) -> Stretch {
        self.inner.stretch() * self.lambda
    }

    fn sensitivity(&self) -> usize {
        self.inner.sensitivity()
    }

    fn query(&self, v: VertexId, failures: &FailureSet) -> Distance {
        let s = self.inner.source();
        self.inflate(self.inner.query(v, failures), query_key(s, v, failures))
    }
}

thread_local! {
    static SCOPED_CALLS: Cell<usize> = const { Cell::new(0) };
}

/// Counts invocations of the wrapped DSO.
///
/// Besides a shared total, each call bumps a thread-local counter read by
/// [`count_calls`], which attributes calls to one oracle query even when many
/// queries run concurrently on a thread pool.
#[derive(Clone, Debug)]
pub struct CountingDso<D> {
    inner: D,
    total: Arc<AtomicUsize>,
}

impl<D> CountingDso<D> {
    pub fn new(inner: D) -> CountingDso<D> {
        CountingDso {
            inner,
            total: Arc::new(AtomicUsize::new(0)),
        }
    }

    pub fn total(&self) -> usize {
        self.total.load(Ordering::Relaxed)
    }

    /// Shared handle to the total, usable after the DSO moved into an oracle.
    pub fn total_handle(&self) -> Arc<AtomicUsize> {
        Arc::clone(&self.total)
    }

    fn record(&self) {
        self.total.fetch_add(1, Ordering::Relaxed);
        SCOPED_CALLS.with(|c| c.set(c.get() + 1));
    }
}

/// Runs `body` and returns how many [`CountingDso`] calls it made on this
/// thread.
pub fn count_calls<R>(body: impl FnOnce() -> R) -> (R, usize) {
    let before = SCOPED_CALLS.with(Cell::get);
    let result = body();
    let after = SCOPED_CALLS.with(Cell::get);
    (result, after - before)
}

impl<D: AllPairsDso> AllPairsDso for CountingDso<D> {
    fn stretch(&self) -> Stretch {
        self.inner.stretch()
    }

    fn sensitivity(&self) -> usize {
        self.inner.sensitivity()
    }

    fn query(&self, u: VertexId, v: VertexId, failures: &FailureSet) -> Distance {
        self.record();
        self.inner.query(u, v, failures)
    }
}

impl<D: SingleSourceDso> SingleSourceDso for CountingDso<D> {
    fn source(&self) -> VertexId {
        self.inner.source()
    }

    fn stretch(&self) -> Stretch {
        self.inner.stretch()
    }

    fn sensitivity(&self) -> usize {
        self.inner.sensitivity()
    }

    fn query(&self, v: VertexId, failures: &FailureSet) -> Distance {
        self.record();
        self.inner.query(v, failures)
    }
}
