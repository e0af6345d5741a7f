//! Diameter oracles for `diam(G - F)` built on a DSO.
//!
//! * [`FdoAllPairs`]: `diam(G) + max_{u,v in V(F)} d̂(u, v, F)`, stretch `1 + σ`.
//! * [`FdoSingleSource`]: `diam(G,V,s) + diam(G,s,V) + max_{v in V(F)} d̂(s, v, F)
//!   + max_{v in V(F)} d̂(v, s, F)`, stretch `2 + 2σ`.
//!
//! Both work on directed graphs. If `G` itself is disconnected every query
//! answers `+∞`.

use crate::distance::{DiameterEstimate, Distance, Stretch};
use crate::dso::{AllPairsDso, SingleSourceDso};
use crate::error::{Error, Result};
use crate::graph::{distances_from, FailureSet, Graph, VertexId};
use crate::oracle::DiameterOracle;

fn eccentricity(g: &Graph, s: VertexId) -> Distance {
    distances_from(g, s, &FailureSet::empty()).into_iter().max().unwrap_or(Distance::ZERO)
}

fn diameter(g: &Graph) -> Distance {
    use rayon::prelude::*;
    g.vertices().into_par_iter().map(|s| eccentricity(g, s)).max().unwrap_or(Distance::ZERO)
}

/// f-FDO from an all-pairs f-DSO.
#[derive(Debug)]
pub struct FdoAllPairs<D> {
    diam_g: Distance,
    directed: bool,
    dso: D,
    f: usize,
}

impl<D: AllPairsDso> FdoAllPairs<D> {
    /// Precomputes `diam(G)`; `dso` must have been built over `g`.
    pub fn build(g: &Graph, dso: D) -> FdoAllPairs<D> {
        FdoAllPairs {
            diam_g: diameter(g),
            directed: g.is_directed(),
            f: dso.sensitivity(),
            dso,
        }
    }

    pub fn diam_g(&self) -> Distance {
        self.diam_g
    }

    pub fn dso(&self) -> &D {
        &self.dso
    }

    pub fn query(&self, failures: &FailureSet) -> Result<DiameterEstimate> {
        failures.check_sensitivity(self.f)?;
        if !self.diam_g.is_finite() {
            return Ok(Distance::INFINITE);
        }
        let ends = failures.endpoints();
        let mut worst = Distance::ZERO;
        for (i, &u) in ends.iter().enumerate() {
            // Reflexive pairs are 0; undirected pairs are symmetric.
            let partners = if self.directed { ends } else { &ends[i + 1..] };
            for &v in partners {
                if u == v {
                    continue;
                }
                worst = worst.max(self.dso.query(u, v, failures));
                if !worst.is_finite() {
                    return Ok(worst);
                }
            }
        }
        Ok(self.diam_g + worst)
    }
}

impl<D: AllPairsDso> DiameterOracle for FdoAllPairs<D> {
    fn query(&self, failures: &FailureSet) -> Result<DiameterEstimate> {
        FdoAllPairs::query(self, failures)
    }

    fn stretch(&self) -> Stretch {
        Stretch::from_integer(1) + self.dso.stretch()
    }

    fn sensitivity(&self) -> usize {
        self.f
    }
}

/// f-FDO from two single-source f-DSOs rooted at the same vertex `s`: one on
/// `G` and one on `G` with reversed edges.
#[derive(Debug)]
pub struct FdoSingleSource<O, I> {
    source: VertexId,
    ecc_in: Distance,
    ecc_out: Distance,
    dso_out: O,
    dso_in: I,
    f: usize,
}

impl<O: SingleSourceDso, I: SingleSourceDso> FdoSingleSource<O, I> {
    /// `dso_out` answers `d(s, v)`; `dso_in` answers `d(v, s)`, so for directed
    /// graphs it must be built over the reversed graph.
    pub fn build(g: &Graph, source: VertexId, dso_out: O, dso_in: I) -> Result<FdoSingleSource<O, I>> {
        if source >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: source, n: g.n() });
        }
        for (name, root) in [("outgoing", dso_out.source()), ("incoming", dso_in.source())] {
            if root != source {
                return Err(Error::DsoMismatch(format!("{name} DSO rooted at {root}, expected {source}")));
            }
        }
        let ecc_out = eccentricity(g, source);
        let ecc_in = if g.is_directed() { eccentricity(&g.reversed(), source) } else { ecc_out };
        Ok(FdoSingleSource {
            source,
            ecc_in,
            ecc_out,
            f: dso_out.sensitivity().min(dso_in.sensitivity()),
            dso_out,
            dso_in,
        })
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    /// `diam(G, V, s)`.
    pub fn ecc_in(&self) -> Distance {
        self.ecc_in
    }

    /// `diam(G, s, V)`.
    pub fn ecc_out(&self) -> Distance {
        self.ecc_out
    }

    pub fn query(&self, failures: &FailureSet) -> Result<DiameterEstimate> {
        failures.check_sensitivity(self.f)?;
        let base = self.ecc_in + self.ecc_out;
        if !base.is_finite() {
            return Ok(base);
        }
        let ends = failures.endpoints();
        let out = ends.iter().map(|&v| self.dso_out.query(v, failures)).max().unwrap_or(Distance::ZERO);
        if !out.is_finite() {
            return Ok(out);
        }
        let inn = ends.iter().map(|&v| self.dso_in.query(v, failures)).max().unwrap_or(Distance::ZERO);
        Ok(base + out + inn)
    }
}

impl<O: SingleSourceDso, I: SingleSourceDso> DiameterOracle for FdoSingleSource<O, I> {
    fn query(&self, failures: &FailureSet) -> Result<DiameterEstimate> {
        FdoSingleSource::query(self, failures)
    }

    fn stretch(&self) -> Stretch {
        let sigma = self.dso_out.stretch().max(self.dso_in.stretch());
        Stretch::from_integer(2) + Stretch::from_integer(2) * sigma
    }

    fn sensitivity(&self) -> usize {
        self.f
    }
}
