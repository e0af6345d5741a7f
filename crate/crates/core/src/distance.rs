//! Extended non-negative distances and stretch arithmetic.

use std::fmt;
use std::ops::Add;

use num_rational::Ratio;

/// A multiplicative stretch factor, kept exact.
pub type Stretch = Ratio<u64>;

/// A path length in integer weight units, or `+∞` for disconnected pairs.
///
/// `+∞` absorbs addition and is the maximum under `Ord`, so `max` over a set
/// containing a disconnected pair yields `+∞` without special casing.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Distance(u64);

/// Estimates returned by diameter oracles share the distance representation.
pub type DiameterEstimate = Distance;

impl Distance {
    pub const ZERO: Distance = Distance(0);
    pub const INFINITE: Distance = Distance(u64::MAX);

    /// # Panics
    /// If `value` collides with the infinity sentinel.
    pub fn finite(value: u64) -> Self {
        assert!(value != u64::MAX, "distance overflow");
        Distance(value)
    }

    pub fn is_finite(self) -> bool {
        self.0 != u64::MAX
    }

    pub fn value(self) -> Option<u64> {
        self.is_finite().then_some(self.0)
    }

    /// Multiplies a finite distance by `factor`, rounding down.
    pub fn scale_floor(self, factor: Stretch) -> Distance {
        match self.value() {
            None => Distance::INFINITE,
            Some(v) => {
                let scaled = v as u128 * *factor.numer() as u128 / *factor.denom() as u128;
                Distance::finite(u64::try_from(scaled).expect("distance overflow"))
            }
        }
    }
}

impl From<u64> for Distance {
    fn from(value: u64) -> Self {
        Distance::finite(value)
    }
}

impl Add for Distance {
    type Output = Distance;

    fn add(self, rhs: Distance) -> Distance {
        match (self.value(), rhs.value()) {
            (Some(a), Some(b)) => Distance::finite(a.checked_add(b).expect("distance overflow")),
            _ => Distance::INFINITE,
        }
    }
}

impl std::iter::Sum for Distance {
    fn sum<I: Iterator<Item = Distance>>(iter: I) -> Distance {
        iter.fold(Distance::ZERO, |a, b| a + b)
    }
}

impl fmt::Debug for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("inf"),
        }
    }
}

/// Checks `exact <= estimate <= bound * exact` in exact integer arithmetic.
///
/// An infinite `exact` is only matched by an infinite estimate; a finite
/// `exact` is never matched by an infinite estimate.
pub fn within_stretch(estimate: Distance, exact: Distance, bound: Stretch) -> bool {
    if estimate < exact {
        return false;
    }
    match (estimate.value(), exact.value()) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some(est), Some(ex)) => {
            est as u128 * *bound.denom() as u128 <= ex as u128 * *bound.numer() as u128
        }
    }
}

/// `estimate / exact` as a float, when both are finite and `exact > 0`.
pub fn stretch_ratio(estimate: Distance, exact: Distance) -> Option<f64> {
    match (estimate.value(), exact.value()) {
        (Some(est), Some(ex)) if ex > 0 => Some(est as f64 / ex as f64),
        (Some(0), Some(0)) => Some(1.0),
        _ => None,
    }
}

/// Parses a stretch such as `2`, `1.5` or `3/2`; must be at least 1.
pub fn parse_stretch(text: &str) -> Result<Stretch, crate::Error> {
    let bad = || crate::Error::InvalidStretch(text.to_string());
    let ratio = if let Some((n, d)) = text.split_once('/') {
        let n: u64 = n.trim().parse().map_err(|_| bad())?;
        let d: u64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        Ratio::new(n, d)
    } else if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || frac.len() > 9 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let den = 10u64.pow(frac.len() as u32);
        let frac: u64 = frac.parse().map_err(|_| bad())?;
        Ratio::new(int * den + frac, den)
    } else {
        Ratio::from_integer(text.trim().parse().map_err(|_| bad())?)
    };
    if ratio < Ratio::from_integer(1) {
        return Err(bad());
    }
    Ok(ratio)
}
