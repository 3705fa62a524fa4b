//! Sample sequences and subband pairs.

use crate::error::HaarError;

/// A finite sequence of real samples.
///
/// Construction rejects NaN and infinite values, so every `Signal` in the
/// system is finite sample-for-sample. Evenness is a per-operation
/// precondition, not a type invariant: odd-length signals are legal values
/// and are rejected at the transform boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    samples: Vec<f64>,
}

impl Signal {
    /// Wraps a sample buffer, rejecting non-finite entries.
    pub fn new(samples: Vec<f64>) -> Result<Self, HaarError> {
        if let Some(index) = samples.iter().position(|s| !s.is_finite()) {
            return Err(HaarError::NonFinite { index });
        }
        Ok(Self { samples })
    }

    /// Signal of `len` samples produced by `f(index)`.
    pub fn from_fn(len: usize, f: impl FnMut(usize) -> f64) -> Result<Self, HaarError> {
        Self::new((0..len).map(f).collect())
    }

    /// Wraps samples that are already known finite (permutations or copies
    /// of validated signals), skipping the scan.
    pub(crate) fn from_finite_unchecked(samples: Vec<f64>) -> Self {
        debug_assert!(samples.iter().all(|s| s.is_finite()));
        Self { samples }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }

    /// Sum of squared samples.
    pub fn energy(&self) -> f64 {
        self.samples.iter().map(|s| s * s).sum()
    }

    /// Largest absolute sample, 0 for an empty signal.
    pub fn max_abs(&self) -> f64 {
        self.samples.iter().fold(0.0, |m, s| m.max(s.abs()))
    }
}

/// Approximation and detail bands produced by one analysis level.
///
/// The two bands always have equal length; `new` rejects anything else.
#[derive(Debug, Clone, PartialEq)]
pub struct SubbandPair {
    approx: Signal,
    detail: Signal,
}

impl SubbandPair {
    pub fn new(approx: Signal, detail: Signal) -> Result<Self, HaarError> {
        if approx.len() != detail.len() {
            return Err(HaarError::LengthMismatch {
                left: approx.len(),
                right: detail.len(),
            });
        }
        Ok(Self { approx, detail })
    }

    pub fn approx(&self) -> &Signal {
        &self.approx
    }

    pub fn detail(&self) -> &Signal {
        &self.detail
    }

    /// Length of each band (half the analyzed signal's length).
    pub fn band_len(&self) -> usize {
        self.approx.len()
    }

    pub fn into_parts(self) -> (Signal, Signal) {
        (self.approx, self.detail)
    }

    /// Combined energy of both bands.
    pub fn energy(&self) -> f64 {
        self.approx.energy() + self.detail.energy()
    }
}
