//! Quantitative comparison of the two transform paths: pointwise error in
//! dB against an oracle, exact operation counts, and optional wall-clock
//! medians.

use std::time::Instant;

use crate::count::OpCounter;
use crate::error::HaarError;
use crate::haar::{direct_analysis, fast_analysis, Mode};
use crate::multilevel::decompose;
use crate::rng::random_signal;
use crate::signal::Signal;

/// Lower bound for dB values; a pointwise difference of exactly zero maps
/// here. Well below anything double precision can resolve against a
/// normalized peak.
pub const DB_FLOOR: f64 = -300.0;

/// Pointwise amplitude error of a candidate sequence against an oracle,
/// normalized by the oracle's peak and expressed in dB.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport {
    /// `20*log10(|candidate - oracle| / reference_peak)` per sample, floored
    /// at [`DB_FLOOR`].
    pub pointwise_db: Vec<f64>,
    /// Largest pointwise value; [`DB_FLOOR`] for an empty input.
    pub max_db: f64,
    /// `max |oracle|`, or 1 when the oracle is all-zero.
    pub reference_peak: f64,
}

/// Operation tally of one transform configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpReport {
    pub mul_count: u64,
    pub add_count: u64,
    pub label: String,
}

impl OpReport {
    pub fn from_counter(counter: &OpCounter, label: impl Into<String>) -> Self {
        Self {
            mul_count: counter.muls(),
            add_count: counter.adds(),
            label: label.into(),
        }
    }

    pub fn total(&self) -> u64 {
        self.mul_count + self.add_count
    }
}

/// Exact-count comparison of the direct baseline against the fast path,
/// with optional informative wall-clock medians (seconds).
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexityComparison {
    pub baseline: OpReport,
    pub fast: OpReport,
    pub mul_ratio: f64,
    pub total_ratio: f64,
    pub wall_clock_baseline: Option<f64>,
    pub wall_clock_fast: Option<f64>,
}

/// Per-sample error of `candidate` against `oracle` in peak-normalized dB.
///
/// The reference peak is `max |oracle[n]|`; an all-zero oracle substitutes a
/// peak of 1 so the metric stays total. Zero differences map to exactly
/// [`DB_FLOOR`], and no value is ever below the floor.
pub fn pointwise_error_db(candidate: &Signal, oracle: &Signal) -> Result<ErrorReport, HaarError> {
    if candidate.len() != oracle.len() {
        return Err(HaarError::LengthMismatch {
            left: candidate.len(),
            right: oracle.len(),
        });
    }
    let peak = oracle.max_abs();
    let reference_peak = if peak == 0.0 { 1.0 } else { peak };
    let pointwise_db: Vec<f64> = candidate
        .samples()
        .iter()
        .zip(oracle.samples())
        .map(|(c, o)| {
            let diff = (c - o).abs();
            if diff == 0.0 {
                DB_FLOOR
            } else {
                (20.0 * (diff / reference_peak).log10()).max(DB_FLOOR)
            }
        })
        .collect();
    let max_db = pointwise_db.iter().fold(DB_FLOOR, |m, v| m.max(*v));
    Ok(ErrorReport {
        pointwise_db,
        max_db,
        reference_peak,
    })
}

/// Runs the direct analysis as oracle and the fast analysis as candidate on
/// the same signal, reporting each band's error.
pub fn compare_transforms(x: &Signal) -> Result<(ErrorReport, ErrorReport), HaarError> {
    let oracle = direct_analysis(x, None)?;
    let candidate = fast_analysis(x, None)?;
    let approx_report = pointwise_error_db(candidate.approx(), oracle.approx())?;
    let detail_report = pointwise_error_db(candidate.detail(), oracle.detail())?;
    Ok((approx_report, detail_report))
}

/// Median of `repeats` wall-clock timings of one decomposition, in seconds.
fn median_seconds(
    x: &Signal,
    levels: usize,
    mode: Mode,
    repeats: usize,
) -> Result<f64, HaarError> {
    let mut timings = Vec::with_capacity(repeats);
    for _ in 0..repeats {
        let start = Instant::now();
        let tree = decompose(x, levels, mode, None)?;
        let elapsed = start.elapsed().as_secs_f64();
        std::hint::black_box(&tree);
        timings.push(elapsed);
    }
    timings.sort_by(|a, b| a.partial_cmp(b).expect("timings are finite"));
    Ok(timings[timings.len() / 2])
}

/// Decomposes a deterministic pseudo-random signal of length `n` in both
/// modes with counters attached and reports the exact counts and ratios.
/// Counts depend only on `n` and `levels`, never on sample values.
///
/// `timing_repeats`, when given, additionally measures wall-clock medians
/// over that many runs per mode (informative; at least 3 runs are used).
pub fn complexity_report(
    n: usize,
    levels: usize,
    seed: u64,
    timing_repeats: Option<usize>,
) -> Result<ComplexityComparison, HaarError> {
    let x = random_signal(n, seed);

    let mut baseline_counter = OpCounter::new();
    decompose(&x, levels, Mode::Direct, Some(&mut baseline_counter))?;
    let mut fast_counter = OpCounter::new();
    decompose(&x, levels, Mode::Fast, Some(&mut fast_counter))?;

    let baseline = OpReport::from_counter(&baseline_counter, format!("direct n={n} levels={levels}"));
    let fast = OpReport::from_counter(&fast_counter, format!("fast n={n} levels={levels}"));
    let mul_ratio = fast.mul_count as f64 / baseline.mul_count as f64;
    let total_ratio = fast.total() as f64 / baseline.total() as f64;

    let (wall_clock_baseline, wall_clock_fast) = match timing_repeats {
        Some(repeats) => {
            let repeats = repeats.max(3);
            (
                Some(median_seconds(&x, levels, Mode::Direct, repeats)?),
                Some(median_seconds(&x, levels, Mode::Fast, repeats)?),
            )
        }
        None => (None, None),
    };

    Ok(ComplexityComparison {
        baseline,
        fast,
        mul_ratio,
        total_ratio,
        wall_clock_baseline,
        wall_clock_fast,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(samples: &[f64]) -> Signal {
        Signal::new(samples.to_vec()).unwrap()
    }

    #[test]
    fn identical_sequences_sit_on_the_floor() {
        let x = random_signal(64, 3);
        let report = pointwise_error_db(&x, &x).unwrap();
        assert!(report.pointwise_db.iter().all(|db| *db == DB_FLOOR));
        assert_eq!(report.max_db, DB_FLOOR);
    }

    #[test]
    fn known_difference_lands_at_minus_100_db() {
        let candidate = sig(&[1.0 + 1e-5, 0.0]);
        let oracle = sig(&[1.0, 0.0]);
        let report = pointwise_error_db(&candidate, &oracle).unwrap();
        assert!((report.pointwise_db[0] + 100.0).abs() < 1e-8);
        assert_eq!(report.pointwise_db[1], DB_FLOOR);
        assert_eq!(report.reference_peak, 1.0);
    }

    #[test]
    fn all_zero_oracle_substitutes_unit_peak() {
        let report = pointwise_error_db(&sig(&[0.1, 0.0]), &sig(&[0.0, 0.0])).unwrap();
        assert_eq!(report.reference_peak, 1.0);
        assert!((report.pointwise_db[0] + 20.0).abs() < 1e-12);
    }

    #[test]
    fn larger_differences_never_report_smaller_db() {
        let oracle = sig(&[0.0; 6]);
        let candidate = sig(&[0.0, 1e-300, 1e-20, 1e-10, 1e-3, 1.0]);
        let report = pointwise_error_db(&candidate, &oracle).unwrap();
        for pair in report.pointwise_db.windows(2) {
            assert!(pair[0] <= pair[1]);
        }
        assert!(report.pointwise_db.iter().all(|db| *db >= DB_FLOOR));
    }

    #[test]
    fn length_mismatch_is_rejected() {
        assert_eq!(
            pointwise_error_db(&sig(&[1.0]), &sig(&[1.0, 2.0])),
            Err(HaarError::LengthMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn constant_signal_compares_at_the_floor() {
        let x = Signal::from_fn(32, |_| 4.5).unwrap();
        let (approx, detail) = compare_transforms(&x).unwrap();
        assert_eq!(approx.max_db, DB_FLOOR);
        assert_eq!(detail.max_db, DB_FLOOR);
    }

    #[test]
    fn random_signal_meets_the_error_rate_targets() {
        let x = random_signal(4096, 42);
        let (approx, detail) = compare_transforms(&x).unwrap();
        assert!(approx.max_db <= -90.0, "approx max {}", approx.max_db);
        assert!(detail.max_db <= -160.0, "detail max {}", detail.max_db);
    }

    #[test]
    fn single_level_counts_and_ratios() {
        let report = complexity_report(8, 1, 42, None).unwrap();
        assert_eq!(report.baseline.mul_count, 32);
        assert_eq!(report.baseline.add_count, 16);
        assert_eq!(report.fast.mul_count, 8);
        assert_eq!(report.fast.add_count, 8);
        assert_eq!(report.mul_ratio, 0.25);
        assert_eq!(report.total_ratio, 16.0 / 48.0);
        assert_eq!(report.baseline.total(), 48);
    }

    #[test]
    fn multi_level_counts_sum_the_geometric_series() {
        let report = complexity_report(64, 3, 42, None).unwrap();
        assert_eq!(report.fast.mul_count, 64 + 32 + 16);
        assert_eq!(report.baseline.mul_count, 4 * (64 + 32 + 16));
        assert_eq!(report.mul_ratio, 0.25);
    }

    #[test]
    fn counts_do_not_depend_on_the_seed() {
        let a = complexity_report(256, 2, 1, None).unwrap();
        let b = complexity_report(256, 2, 999, None).unwrap();
        assert_eq!(a.baseline.mul_count, b.baseline.mul_count);
        assert_eq!(a.fast.total(), b.fast.total());
        assert_eq!(a.mul_ratio, 0.25);
        assert_eq!(b.mul_ratio, 0.25);
    }

    #[test]
    fn invalid_configurations_propagate() {
        assert_eq!(
            complexity_report(8, 0, 42, None),
            Err(HaarError::InvalidLevels { levels: 0 })
        );
        assert_eq!(
            complexity_report(6, 2, 42, None),
            Err(HaarError::InsufficientLength { len: 6, levels: 2 })
        );
    }

    #[test]
    fn timing_fields_fill_only_on_request() {
        let silent = complexity_report(64, 1, 42, None).unwrap();
        assert!(silent.wall_clock_baseline.is_none());
        let timed = complexity_report(64, 1, 42, Some(3)).unwrap();
        assert!(timed.wall_clock_baseline.unwrap() >= 0.0);
        assert!(timed.wall_clock_fast.unwrap() >= 0.0);
    }
}
