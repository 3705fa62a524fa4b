//! Iterated decomposition of the approximation band.
//!
//! The single-level bank is the primitive; this module goes beyond it by
//! re-applying the selected analysis to successive approximation bands and
//! inverting the stack level by level. Detail bands are stored finest-first
//! (index 0 comes from the first split of the input).

use crate::count::OpCounter;
use crate::error::HaarError;
use crate::haar::{analyze, synthesize, Mode};
use crate::signal::{Signal, SubbandPair};

/// A multi-level decomposition: one detail band per level plus the final
/// approximation band.
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionTree {
    details: Vec<Signal>,
    final_approx: Signal,
    original_length: usize,
}

impl DecompositionTree {
    /// Assembles a tree from bands, validating the dyadic length ladder:
    /// `details[j].len() == original_length >> (j+1)` and
    /// `final_approx.len() == original_length >> levels`.
    pub fn new(
        details: Vec<Signal>,
        final_approx: Signal,
        original_length: usize,
    ) -> Result<Self, HaarError> {
        let levels = details.len();
        if levels == 0 {
            return Err(HaarError::MalformedTree {
                reason: "no detail bands".into(),
            });
        }
        if levels >= usize::BITS as usize || !original_length.is_multiple_of(1 << levels) {
            return Err(HaarError::MalformedTree {
                reason: format!(
                    "original length {original_length} is not divisible by 2^{levels}"
                ),
            });
        }
        for (j, d) in details.iter().enumerate() {
            let expected = original_length >> (j + 1);
            if d.len() != expected {
                return Err(HaarError::MalformedTree {
                    reason: format!(
                        "detail band {j} has {} samples, expected {expected}",
                        d.len()
                    ),
                });
            }
        }
        let expected = original_length >> levels;
        if final_approx.len() != expected {
            return Err(HaarError::MalformedTree {
                reason: format!(
                    "final approximation has {} samples, expected {expected}",
                    final_approx.len()
                ),
            });
        }
        Ok(Self {
            details,
            final_approx,
            original_length,
        })
    }

    pub fn levels(&self) -> usize {
        self.details.len()
    }

    /// Detail bands, finest first.
    pub fn details(&self) -> &[Signal] {
        &self.details
    }

    pub fn final_approx(&self) -> &Signal {
        &self.final_approx
    }

    pub fn original_length(&self) -> usize {
        self.original_length
    }

    /// Total coefficient count across all bands; always equals the original
    /// signal length.
    pub fn total_coefficients(&self) -> usize {
        self.details.iter().map(Signal::len).sum::<usize>() + self.final_approx.len()
    }

    /// Sum of squared coefficients over every band.
    pub fn energy(&self) -> f64 {
        self.details.iter().map(Signal::energy).sum::<f64>() + self.final_approx.energy()
    }
}

fn check_decomposable(len: usize, levels: usize) -> Result<(), HaarError> {
    if levels == 0 {
        return Err(HaarError::InvalidLevels { levels });
    }
    if levels >= usize::BITS as usize
        || !len.is_multiple_of(1usize << levels)
        || len >> levels == 0
    {
        return Err(HaarError::InsufficientLength { len, levels });
    }
    Ok(())
}

/// Applies the selected single-level analysis `levels` times, always to the
/// previous approximation band. Operation counts accumulate across levels.
pub fn decompose(
    x: &Signal,
    levels: usize,
    mode: Mode,
    mut sink: Option<&mut OpCounter>,
) -> Result<DecompositionTree, HaarError> {
    check_decomposable(x.len(), levels)?;
    let mut details = Vec::with_capacity(levels);
    let mut current = x.clone();
    for _ in 0..levels {
        let (approx, detail) = analyze(&current, mode, sink.as_deref_mut())?.into_parts();
        details.push(detail);
        current = approx;
    }
    DecompositionTree::new(details, current, x.len())
}

/// Inverts [`decompose`] coarsest level first.
pub fn reconstruct(
    tree: &DecompositionTree,
    mode: Mode,
    mut sink: Option<&mut OpCounter>,
) -> Result<Signal, HaarError> {
    let mut current = tree.final_approx().clone();
    for detail in tree.details().iter().rev() {
        let sb = SubbandPair::new(current, detail.clone())?;
        current = synthesize(&sb, mode, sink.as_deref_mut())?;
    }
    Ok(current)
}
