//! Haar tap sets and the shared polyphase scalar.
//!
//! Every tap magnitude equals `INV_SQRT2`, so both polyphase components of
//! each filter collapse to the same constant. The direct and fast paths must
//! scale with this one constant; any numerical gap between them then comes
//! from operation order alone.

/// 1/sqrt(2) in double precision, shared by all taps and both transform paths.
pub const INV_SQRT2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// The two-tap analysis and synthesis filters of the orthonormal Haar bank.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HaarFilterSet {
    pub analysis_low: [f64; 2],
    pub analysis_high: [f64; 2],
    pub synthesis_low: [f64; 2],
    pub synthesis_high: [f64; 2],
    /// The constant both polyphase components reduce to.
    pub polyphase_scalar: f64,
    /// Number of polyphase phases (the decimation factor).
    pub polyphase_count: usize,
}

/// The orthonormal Haar bank. Unity-gain perfect reconstruction; no extra
/// synthesis gain is applied anywhere.
pub const HAAR: HaarFilterSet = HaarFilterSet {
    analysis_low: [INV_SQRT2, INV_SQRT2],
    analysis_high: [-INV_SQRT2, INV_SQRT2],
    synthesis_low: [INV_SQRT2, INV_SQRT2],
    synthesis_high: [INV_SQRT2, -INV_SQRT2],
    polyphase_scalar: INV_SQRT2,
    polyphase_count: 2,
};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn highpass_is_the_sign_alternated_lowpass() {
        // Quadrature mirror relation, up to one overall sign.
        for k in 0..2 {
            let mirrored = if k % 2 == 0 { -1.0 } else { 1.0 } * HAAR.analysis_low[k];
            assert_eq!(HAAR.analysis_high[k], mirrored);
        }
    }

    #[test]
    fn lowpass_taps_are_orthonormal() {
        let sumsq: f64 = HAAR.analysis_low.iter().map(|t| t * t).sum();
        assert!((sumsq - 1.0).abs() < 1e-15);
    }

    #[test]
    fn polyphase_scalar_equals_every_tap_magnitude() {
        for taps in [
            HAAR.analysis_low,
            HAAR.analysis_high,
            HAAR.synthesis_low,
            HAAR.synthesis_high,
        ] {
            for t in taps {
                assert_eq!(t.abs(), HAAR.polyphase_scalar);
            }
        }
        assert_eq!(HAAR.polyphase_count, 2);
    }
}
