use crate::distance::{DiameterEstimate, Stretch};
use crate::error::Result;
use crate::graph::FailureSet;

/// Anything that estimates a (restricted) diameter of `G - F`.
pub trait DiameterOracle: Send + Sync {
    /// Fails only if `failures` exceeds the sensitivity.
    fn query(&self, failures: &FailureSet) -> Result<DiameterEstimate>;

    /// The guaranteed stretch of [`DiameterOracle::query`].
    fn stretch(&self) -> Stretch;

    fn sensitivity(&self) -> usize;
}
