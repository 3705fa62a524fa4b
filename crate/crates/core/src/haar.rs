//! Single-level Haar analysis and synthesis in two interchangeable forms.
//!
//! The direct form runs the textbook two-channel bank: convolve the input
//! with both analysis filters at full rate, then decimate (analysis), or
//! zero-stuff to full rate and convolve with both synthesis filters
//! (synthesis). The fast form moves the rate change to the cheap side of the
//! filters: decimate into polyphase components first, then combine each
//! sample pair with one butterfly and a single scaling per output.
//!
//! Both forms compute the same mathematical values; they differ only in
//! floating-point operation order (the direct path multiplies each tap then
//! adds, the fast path adds then multiplies once). The decimator keeps odd
//! output phases, so each retained output depends on the input pair
//! `(x[2k], x[2k+1])` in both forms.

use crate::count::OpCounter;
use crate::error::HaarError;
use crate::filters::{HAAR, INV_SQRT2};
use crate::signal::{Signal, SubbandPair};

/// Which implementation path to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Convolve at full rate, then decimate (the unmodified bank).
    Direct,
    /// Decimate into polyphase components, then butterfly.
    Fast,
}

impl Mode {
    pub fn label(self) -> &'static str {
        match self {
            Mode::Direct => "direct",
            Mode::Fast => "fast",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "direct" => Ok(Mode::Direct),
            "fast" => Ok(Mode::Fast),
            other => Err(format!("unknown mode '{other}' (expected 'direct' or 'fast')")),
        }
    }
}

/// Splits a signal into its even- and odd-indexed polyphase components.
///
/// `even[k] = x[2k]`, `odd[k] = x[2k+1]`.
pub fn split_polyphase(x: &Signal) -> Result<(Signal, Signal), HaarError> {
    if !x.len().is_multiple_of(2) {
        return Err(HaarError::OddLength { len: x.len() });
    }
    let half = x.len() / 2;
    let mut even = Vec::with_capacity(half);
    let mut odd = Vec::with_capacity(half);
    for pair in x.samples().chunks_exact(2) {
        even.push(pair[0]);
        odd.push(pair[1]);
    }
    Ok((
        Signal::from_finite_unchecked(even),
        Signal::from_finite_unchecked(odd),
    ))
}

/// Interleaves two polyphase components back into one signal.
///
/// `out[2k] = even[k]`, `out[2k+1] = odd[k]`; exact inverse of
/// [`split_polyphase`].
pub fn merge_polyphase(even: &Signal, odd: &Signal) -> Result<Signal, HaarError> {
    if even.len() != odd.len() {
        return Err(HaarError::LengthMismatch {
            left: even.len(),
            right: odd.len(),
        });
    }
    let mut out = Vec::with_capacity(even.len() * 2);
    for (e, o) in even.samples().iter().zip(odd.samples()) {
        out.push(*e);
        out.push(*o);
    }
    Ok(Signal::from_finite_unchecked(out))
}

fn check_analysis_input(x: &Signal) -> Result<(), HaarError> {
    if x.is_empty() {
        return Err(HaarError::EmptySignal);
    }
    if !x.len().is_multiple_of(2) {
        return Err(HaarError::OddLength { len: x.len() });
    }
    Ok(())
}

/// Two-tap FIR output at one position: `taps[0]*cur + taps[1]*prev`.
#[inline]
fn fir2(taps: [f64; 2], cur: f64, prev: f64) -> f64 {
    taps[0] * cur + taps[1] * prev
}

/// Analysis as the unmodified bank runs it: both filters evaluated at every
/// input position, decimators discarding the even output phase afterwards.
///
/// Cost with a counter attached: 2 filters x N positions x (2 mul + 1 add),
/// i.e. exactly `4N` multiplications and `2N` additions.
pub fn direct_analysis(
    x: &Signal,
    sink: Option<&mut OpCounter>,
) -> Result<SubbandPair, HaarError> {
    check_analysis_input(x)?;
    let n = x.len();
    let s = x.samples();
    let mut approx = Vec::with_capacity(n / 2);
    let mut detail = Vec::with_capacity(n / 2);
    for pos in 0..n {
        // Position 0 reads one sample beyond the left edge; it is computed
        // (and counted) like every other full-rate output but never kept.
        let cur = s[pos];
        let prev = if pos == 0 { 0.0 } else { s[pos - 1] };
        let low = fir2(HAAR.analysis_low, cur, prev);
        let high = fir2(HAAR.analysis_high, cur, prev);
        if pos % 2 == 1 {
            approx.push(low);
            detail.push(high);
        }
    }
    if let Some(c) = sink {
        c.record_muls(4 * n as u64);
        c.record_adds(2 * n as u64);
    }
    SubbandPair::new(Signal::new(approx)?, Signal::new(detail)?)
}

/// Analysis with the decimators moved in front of the filters: the loop
/// walks the two polyphase components directly (the decimated sample pairs)
/// and spends one sum/difference butterfly plus a single scaling per pair.
///
/// Cost with a counter attached: N/2 butterflies x (2 mul + 2 add), i.e.
/// exactly `N` multiplications and `N` additions.
pub fn fast_analysis(
    x: &Signal,
    sink: Option<&mut OpCounter>,
) -> Result<SubbandPair, HaarError> {
    check_analysis_input(x)?;
    let half = x.len() / 2;
    let s = x.samples();
    let mut approx = vec![0.0; half];
    let mut detail = vec![0.0; half];
    for k in 0..half {
        let (even, odd) = (s[2 * k], s[2 * k + 1]);
        approx[k] = (even + odd) * INV_SQRT2;
        detail[k] = (even - odd) * INV_SQRT2;
    }
    if let Some(c) = sink {
        c.record_muls(2 * half as u64);
        c.record_adds(2 * half as u64);
    }
    SubbandPair::new(Signal::new(approx)?, Signal::new(detail)?)
}

/// Synthesis as the unmodified bank runs it: zero-stuff both bands to full
/// rate, convolve each with its synthesis filter at every output position
/// (stuffed zeros are multiplied like any other sample), then sum branches.
///
/// Cost with a counter attached: 2 filters x 2L positions x (2 mul + 1 add).
pub fn direct_synthesis(
    sb: &SubbandPair,
    sink: Option<&mut OpCounter>,
) -> Result<Signal, HaarError> {
    let band_len = sb.band_len();
    if band_len == 0 {
        return Err(HaarError::EmptySignal);
    }
    let n = band_len * 2;
    let upsample = |band: &Signal| {
        let mut up = vec![0.0; n];
        for (k, v) in band.samples().iter().enumerate() {
            up[2 * k] = *v;
        }
        up
    };
    let up_low = upsample(sb.approx());
    let up_high = upsample(sb.detail());
    let mut out = Vec::with_capacity(n);
    for pos in 0..n {
        let low = fir2(
            HAAR.synthesis_low,
            up_low[pos],
            if pos == 0 { 0.0 } else { up_low[pos - 1] },
        );
        let high = fir2(
            HAAR.synthesis_high,
            up_high[pos],
            if pos == 0 { 0.0 } else { up_high[pos - 1] },
        );
        out.push(low + high);
    }
    if let Some(c) = sink {
        c.record_muls(4 * n as u64);
        c.record_adds(2 * n as u64);
    }
    Signal::new(out)
}

/// Synthesis with the expanders moved behind the filters: one butterfly and
/// one scaling per input pair, the two results landing on the even and odd
/// output phases.
///
/// Cost with a counter attached: L butterflies x (2 mul + 2 add).
pub fn fast_synthesis(
    sb: &SubbandPair,
    sink: Option<&mut OpCounter>,
) -> Result<Signal, HaarError> {
    let band_len = sb.band_len();
    if band_len == 0 {
        return Err(HaarError::EmptySignal);
    }
    let approx = sb.approx().samples();
    let detail = sb.detail().samples();
    let mut out = vec![0.0; band_len * 2];
    for k in 0..band_len {
        let (a, d) = (approx[k], detail[k]);
        out[2 * k] = (a + d) * INV_SQRT2;
        out[2 * k + 1] = (a - d) * INV_SQRT2;
    }
    if let Some(c) = sink {
        c.record_muls(2 * band_len as u64);
        c.record_adds(2 * band_len as u64);
    }
    Signal::new(out)
}

/// Runs the analysis selected by `mode`.
pub fn analyze(x: &Signal, mode: Mode, sink: Option<&mut OpCounter>) -> Result<SubbandPair, HaarError> {
    match mode {
        Mode::Direct => direct_analysis(x, sink),
        Mode::Fast => fast_analysis(x, sink),
    }
}

/// Runs the synthesis selected by `mode`.
pub fn synthesize(sb: &SubbandPair, mode: Mode, sink: Option<&mut OpCounter>) -> Result<Signal, HaarError> {
    match mode {
        Mode::Direct => direct_synthesis(sb, sink),
        Mode::Fast => fast_synthesis(sb, sink),
    }
}
