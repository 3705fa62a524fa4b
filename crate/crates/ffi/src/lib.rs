//! C ABI over the fasthaar engine.
//!
//! Conventions: every fallible call returns an [`FhStatus`] code and writes
//! results through caller-allocated buffers; buffer sizes are fixed by the
//! input lengths (`len / 2` per band for one analysis level, and so on).
//! Multi-level decompositions live behind the opaque [`FhDecomposition`]
//! handle, released with [`fh_decomposition_free`]. Passing a null pointer
//! where data is expected yields `FH_STATUS_NULL_POINTER`; nothing is ever
//! read or written through null. Strings returned by this library are
//! static and must not be freed.

use std::ffi::c_char;

use fasthaar::{
    analyze, analyze2d, compare_transforms, decompose, reconstruct, synthesize, DecompositionTree,
    GrayImage, HaarError, Mode, OpCounter, QuadSubbands, Signal, SubbandPair,
};

/// Selects the full-rate convolution path.
pub const FH_MODE_DIRECT: i32 = 0;
/// Selects the polyphase butterfly path.
pub const FH_MODE_FAST: i32 = 1;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FhStatus {
    FhStatusOk = 0,
    FhStatusNullPointer = 1,
    FhStatusInvalidArgument = 2,
    FhStatusOddLength = 3,
    FhStatusEmptySignal = 4,
    FhStatusLengthMismatch = 5,
    FhStatusNonFinite = 6,
    FhStatusInvalidLevels = 7,
    FhStatusInsufficientLength = 8,
    FhStatusMalformedTree = 9,
    FhStatusOddDimension = 10,
    FhStatusDimensionMismatch = 11,
}

/// Multiplication and addition tallies of one call. Pass null to skip
/// counting.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct FhOpCounts {
    pub muls: u64,
    pub adds: u64,
}

/// Opaque multi-level decomposition handle.
pub struct FhDecomposition {
    tree: DecompositionTree,
}

fn status_of(err: &HaarError) -> FhStatus {
    match err {
        HaarError::OddLength { .. } => FhStatus::FhStatusOddLength,
        HaarError::EmptySignal => FhStatus::FhStatusEmptySignal,
        HaarError::LengthMismatch { .. } => FhStatus::FhStatusLengthMismatch,
        HaarError::NonFinite { .. } => FhStatus::FhStatusNonFinite,
        HaarError::InvalidLevels { .. } => FhStatus::FhStatusInvalidLevels,
        HaarError::InsufficientLength { .. } => FhStatus::FhStatusInsufficientLength,
        HaarError::MalformedTree { .. } => FhStatus::FhStatusMalformedTree,
        HaarError::OddDimension { .. } => FhStatus::FhStatusOddDimension,
        HaarError::DimensionMismatch { .. } => FhStatus::FhStatusDimensionMismatch,
        HaarError::BadPixelCount { .. } | HaarError::EmptyImage => {
            FhStatus::FhStatusInvalidArgument
        }
    }
}

fn mode_of(mode: i32) -> Result<Mode, FhStatus> {
    match mode {
        FH_MODE_DIRECT => Ok(Mode::Direct),
        FH_MODE_FAST => Ok(Mode::Fast),
        _ => Err(FhStatus::FhStatusInvalidArgument),
    }
}

/// Runs `f` with an optional counter and stores the tallies if requested.
unsafe fn with_counts<T>(
    counts: *mut FhOpCounts,
    f: impl FnOnce(Option<&mut OpCounter>) -> Result<T, HaarError>,
) -> Result<T, FhStatus> {
    let mut counter = OpCounter::new();
    let sink = if counts.is_null() {
        None
    } else {
        Some(&mut counter)
    };
    let value = f(sink).map_err(|e| status_of(&e))?;
    if !counts.is_null() {
        (*counts).muls = counter.muls();
        (*counts).adds = counter.adds();
    }
    Ok(value)
}

unsafe fn signal_from_raw(x: *const f64, len: usize) -> Result<Signal, FhStatus> {
    if x.is_null() {
        return Err(FhStatus::FhStatusNullPointer);
    }
    let slice = std::slice::from_raw_parts(x, len);
    Signal::new(slice.to_vec()).map_err(|e| status_of(&e))
}

/// Version of the underlying engine as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn fh_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Static human-readable description of a status code.
#[no_mangle]
pub extern "C" fn fh_status_message(status: FhStatus) -> *const c_char {
    let msg: &'static str = match status {
        FhStatus::FhStatusOk => "ok\0",
        FhStatus::FhStatusNullPointer => "null pointer argument\0",
        FhStatus::FhStatusInvalidArgument => "invalid argument\0",
        FhStatus::FhStatusOddLength => "signal length must be even\0",
        FhStatus::FhStatusEmptySignal => "signal is empty\0",
        FhStatus::FhStatusLengthMismatch => "band lengths differ\0",
        FhStatus::FhStatusNonFinite => "non-finite sample\0",
        FhStatus::FhStatusInvalidLevels => "level count must be at least 1\0",
        FhStatus::FhStatusInsufficientLength => "length not divisible by 2^levels\0",
        FhStatus::FhStatusMalformedTree => "malformed decomposition\0",
        FhStatus::FhStatusOddDimension => "image dimensions must be even\0",
        FhStatus::FhStatusDimensionMismatch => "image dimensions differ\0",
    };
    msg.as_ptr() as *const c_char
}

/// One analysis level of `x[0..len]`. Writes `len/2` samples to each of
/// `approx` and `detail`.
///
/// # Safety
/// `x` must point to `len` readable doubles; `approx` and `detail` to
/// `len/2` writable doubles each.
#[no_mangle]
pub unsafe extern "C" fn fh_analyze(
    mode: i32,
    x: *const f64,
    len: usize,
    approx: *mut f64,
    detail: *mut f64,
    counts: *mut FhOpCounts,
) -> FhStatus {
    if approx.is_null() || detail.is_null() {
        return FhStatus::FhStatusNullPointer;
    }
    let mode = match mode_of(mode) {
        Ok(m) => m,
        Err(s) => return s,
    };
    let signal = match signal_from_raw(x, len) {
        Ok(s) => s,
        Err(s) => return s,
    };
    match with_counts(counts, |sink| analyze(&signal, mode, sink)) {
        Ok(bands) => {
            let half = bands.band_len();
            std::ptr::copy_nonoverlapping(bands.approx().samples().as_ptr(), approx, half);
            std::ptr::copy_nonoverlapping(bands.detail().samples().as_ptr(), detail, half);
            FhStatus::FhStatusOk
        }
        Err(s) => s,
    }
}

/// One synthesis level from bands of `band_len` samples each. Writes
/// `2*band_len` samples to `out`.
///
/// # Safety
/// `approx` and `detail` must point to `band_len` readable doubles each;
/// `out` to `2*band_len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn fh_synthesize(
    mode: i32,
    approx: *const f64,
    detail: *const f64,
    band_len: usize,
    out: *mut f64,
    counts: *mut FhOpCounts,
) -> FhStatus {
    if out.is_null() {
        return FhStatus::FhStatusNullPointer;
    }
    let mode = match mode_of(mode) {
        Ok(m) => m,
        Err(s) => return s,
    };
    let approx = match signal_from_raw(approx, band_len) {
        Ok(s) => s,
        Err(s) => return s,
    };
    let detail = match signal_from_raw(detail, band_len) {
        Ok(s) => s,
        Err(s) => return s,
    };
    let bands = match SubbandPair::new(approx, detail) {
        Ok(b) => b,
        Err(e) => return status_of(&e),
    };
    match with_counts(counts, |sink| synthesize(&bands, mode, sink)) {
        Ok(signal) => {
            std::ptr::copy_nonoverlapping(signal.samples().as_ptr(), out, signal.len());
            FhStatus::FhStatusOk
        }
        Err(s) => s,
    }
}

/// Decomposes `x[0..len]` over `levels` levels and returns a handle through
/// `out`. The handle owns its coefficient storage until
/// [`fh_decomposition_free`].
///
/// # Safety
/// `x` must point to `len` readable doubles; `out` must be a valid location
/// for a pointer.
#[no_mangle]
pub unsafe extern "C" fn fh_decompose(
    mode: i32,
    x: *const f64,
    len: usize,
    levels: u32,
    counts: *mut FhOpCounts,
    out: *mut *mut FhDecomposition,
) -> FhStatus {
    if out.is_null() {
        return FhStatus::FhStatusNullPointer;
    }
    let mode = match mode_of(mode) {
        Ok(m) => m,
        Err(s) => return s,
    };
    let signal = match signal_from_raw(x, len) {
        Ok(s) => s,
        Err(s) => return s,
    };
    match with_counts(counts, |sink| {
        decompose(&signal, levels as usize, mode, sink)
    }) {
        Ok(tree) => {
            *out = Box::into_raw(Box::new(FhDecomposition { tree }));
            FhStatus::FhStatusOk
        }
        Err(s) => s,
    }
}

/// Number of decomposition levels, or 0 for a null handle.
///
/// # Safety
/// `d` must be null or a live handle from [`fh_decompose`].
#[no_mangle]
pub unsafe extern "C" fn fh_decomposition_levels(d: *const FhDecomposition) -> u32 {
    if d.is_null() {
        return 0;
    }
    (*d).tree.levels() as u32
}

/// Length of the signal the decomposition was built from, or 0 for a null
/// handle.
///
/// # Safety
/// `d` must be null or a live handle from [`fh_decompose`].
#[no_mangle]
pub unsafe extern "C" fn fh_decomposition_original_length(d: *const FhDecomposition) -> usize {
    if d.is_null() {
        return 0;
    }
    (*d).tree.original_length()
}

/// Length of detail band `level` (0 is the finest), or 0 if out of range.
///
/// # Safety
/// `d` must be null or a live handle from [`fh_decompose`].
#[no_mangle]
pub unsafe extern "C" fn fh_decomposition_detail_len(
    d: *const FhDecomposition,
    level: u32,
) -> usize {
    if d.is_null() {
        return 0;
    }
    (*d).tree
        .details()
        .get(level as usize)
        .map_or(0, |band| band.len())
}

/// Length of the final approximation band, or 0 for a null handle.
///
/// # Safety
/// `d` must be null or a live handle from [`fh_decompose`].
#[no_mangle]
pub unsafe extern "C" fn fh_decomposition_final_len(d: *const FhDecomposition) -> usize {
    if d.is_null() {
        return 0;
    }
    (*d).tree.final_approx().len()
}

/// Copies detail band `level` (0 is the finest) into `out`.
///
/// # Safety
/// `out` must point to `capacity` writable doubles; `capacity` must be at
/// least the band length reported by [`fh_decomposition_detail_len`].
#[no_mangle]
pub unsafe extern "C" fn fh_decomposition_copy_detail(
    d: *const FhDecomposition,
    level: u32,
    out: *mut f64,
    capacity: usize,
) -> FhStatus {
    if d.is_null() || out.is_null() {
        return FhStatus::FhStatusNullPointer;
    }
    let Some(band) = (*d).tree.details().get(level as usize) else {
        return FhStatus::FhStatusInvalidArgument;
    };
    if capacity < band.len() {
        return FhStatus::FhStatusInvalidArgument;
    }
    std::ptr::copy_nonoverlapping(band.samples().as_ptr(), out, band.len());
    FhStatus::FhStatusOk
}

/// Copies the final approximation band into `out`.
///
/// # Safety
/// `out` must point to `capacity` writable doubles; `capacity` must be at
/// least the length reported by [`fh_decomposition_final_len`].
#[no_mangle]
pub unsafe extern "C" fn fh_decomposition_copy_final(
    d: *const FhDecomposition,
    out: *mut f64,
    capacity: usize,
) -> FhStatus {
    if d.is_null() || out.is_null() {
        return FhStatus::FhStatusNullPointer;
    }
    let band = (*d).tree.final_approx();
    if capacity < band.len() {
        return FhStatus::FhStatusInvalidArgument;
    }
    std::ptr::copy_nonoverlapping(band.samples().as_ptr(), out, band.len());
    FhStatus::FhStatusOk
}

/// Rebuilds the signal from a decomposition. Writes
/// [`fh_decomposition_original_length`] samples to `out`.
///
/// # Safety
/// `d` must be a live handle; `out` must point to `capacity` writable
/// doubles with `capacity` at least the original length.
#[no_mangle]
pub unsafe extern "C" fn fh_reconstruct(
    d: *const FhDecomposition,
    mode: i32,
    out: *mut f64,
    capacity: usize,
    counts: *mut FhOpCounts,
) -> FhStatus {
    if d.is_null() || out.is_null() {
        return FhStatus::FhStatusNullPointer;
    }
    let mode = match mode_of(mode) {
        Ok(m) => m,
        Err(s) => return s,
    };
    if capacity < (*d).tree.original_length() {
        return FhStatus::FhStatusInvalidArgument;
    }
    match with_counts(counts, |sink| reconstruct(&(*d).tree, mode, sink)) {
        Ok(signal) => {
            std::ptr::copy_nonoverlapping(signal.samples().as_ptr(), out, signal.len());
            FhStatus::FhStatusOk
        }
        Err(s) => s,
    }
}

/// Releases a decomposition handle. Null is a no-op.
///
/// # Safety
/// `d` must be null or a handle from [`fh_decompose`] not freed before.
#[no_mangle]
pub unsafe extern "C" fn fh_decomposition_free(d: *mut FhDecomposition) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// One 2-D analysis level of a row-major `width x height` image. Writes
/// `(width/2)*(height/2)` samples to each band buffer.
///
/// # Safety
/// `pixels` must point to `width*height` readable doubles; `ll`, `lh`,
/// `hl`, `hh` to `(width/2)*(height/2)` writable doubles each.
#[no_mangle]
pub unsafe extern "C" fn fh_analyze2d(
    mode: i32,
    pixels: *const f64,
    width: usize,
    height: usize,
    ll: *mut f64,
    lh: *mut f64,
    hl: *mut f64,
    hh: *mut f64,
    counts: *mut FhOpCounts,
) -> FhStatus {
    if pixels.is_null() || ll.is_null() || lh.is_null() || hl.is_null() || hh.is_null() {
        return FhStatus::FhStatusNullPointer;
    }
    let mode = match mode_of(mode) {
        Ok(m) => m,
        Err(s) => return s,
    };
    let data = std::slice::from_raw_parts(pixels, width.saturating_mul(height));
    let image = match GrayImage::new(width, height, data.to_vec()) {
        Ok(img) => img,
        Err(e) => return status_of(&e),
    };
    match with_counts(counts, |sink| analyze2d(&image, mode, sink)) {
        Ok(quad) => {
            let band_px = quad.band_width() * quad.band_height();
            std::ptr::copy_nonoverlapping(quad.ll.pixels().as_ptr(), ll, band_px);
            std::ptr::copy_nonoverlapping(quad.lh.pixels().as_ptr(), lh, band_px);
            std::ptr::copy_nonoverlapping(quad.hl.pixels().as_ptr(), hl, band_px);
            std::ptr::copy_nonoverlapping(quad.hh.pixels().as_ptr(), hh, band_px);
            FhStatus::FhStatusOk
        }
        Err(s) => s,
    }
}

/// Inverse of [`fh_analyze2d`] from four `band_width x band_height` bands.
/// Writes `(2*band_width)*(2*band_height)` samples to `out`.
///
/// # Safety
/// The band pointers must each hold `band_width*band_height` readable
/// doubles; `out` must hold four times that, writable.
#[no_mangle]
pub unsafe extern "C" fn fh_synthesize2d(
    mode: i32,
    ll: *const f64,
    lh: *const f64,
    hl: *const f64,
    hh: *const f64,
    band_width: usize,
    band_height: usize,
    out: *mut f64,
    counts: *mut FhOpCounts,
) -> FhStatus {
    if ll.is_null() || lh.is_null() || hl.is_null() || hh.is_null() || out.is_null() {
        return FhStatus::FhStatusNullPointer;
    }
    let mode = match mode_of(mode) {
        Ok(m) => m,
        Err(s) => return s,
    };
    let band_px = band_width.saturating_mul(band_height);
    let band = |ptr: *const f64| -> Result<GrayImage, HaarError> {
        GrayImage::new(
            band_width,
            band_height,
            std::slice::from_raw_parts(ptr, band_px).to_vec(),
        )
    };
    let quad = match (|| {
        QuadSubbands::new(band(ll)?, band(lh)?, band(hl)?, band(hh)?)
    })() {
        Ok(q) => q,
        Err(e) => return status_of(&e),
    };
    match with_counts(counts, |sink| fasthaar::synthesize2d(&quad, mode, sink)) {
        Ok(image) => {
            std::ptr::copy_nonoverlapping(image.pixels().as_ptr(), out, image.pixels().len());
            FhStatus::FhStatusOk
        }
        Err(s) => s,
    }
}

/// Runs both analysis paths on `x[0..len]` and reports each band's maximum
/// pointwise error in peak-normalized dB (direct path as oracle).
///
/// # Safety
/// `x` must point to `len` readable doubles; the two output pointers must
/// be valid locations for a double each.
#[no_mangle]
pub unsafe extern "C" fn fh_compare(
    x: *const f64,
    len: usize,
    approx_max_db: *mut f64,
    detail_max_db: *mut f64,
) -> FhStatus {
    if approx_max_db.is_null() || detail_max_db.is_null() {
        return FhStatus::FhStatusNullPointer;
    }
    let signal = match signal_from_raw(x, len) {
        Ok(s) => s,
        Err(s) => return s,
    };
    match compare_transforms(&signal) {
        Ok((approx, detail)) => {
            *approx_max_db = approx.max_db;
            *detail_max_db = detail.max_db;
            FhStatus::FhStatusOk
        }
        Err(e) => status_of(&e),
    }
}
