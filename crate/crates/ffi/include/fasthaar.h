/* C interface to the fasthaar transform engine. Generated by cbindgen; do not edit. */

#ifndef FASTHAAR_H
#define FASTHAAR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Selects the full-rate convolution path.
 */
#define FH_MODE_DIRECT 0

/**
 * Selects the polyphase butterfly path.
 */
#define FH_MODE_FAST 1

/**
 * Result code of every fallible call.
 */
typedef enum FhStatus {
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
} FhStatus;

/**
 * Opaque multi-level decomposition handle.
 */
typedef struct FhDecomposition FhDecomposition;

/**
 * Multiplication and addition tallies of one call. Pass null to skip
 * counting.
 */
typedef struct FhOpCounts {
  uint64_t muls;
  uint64_t adds;
} FhOpCounts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Version of the underlying engine as a static nul-terminated string.
 */
const char *fh_version(void);

/**
 * Static human-readable description of a status code.
 */
const char *fh_status_message(enum FhStatus status);

/**
 * One analysis level of `x[0..len]`. Writes `len/2` samples to each of
 * `approx` and `detail`.
 *
 * # Safety
 * `x` must point to `len` readable doubles; `approx` and `detail` to
 * `len/2` writable doubles each.
 */
enum FhStatus fh_analyze(int32_t mode,
                         const double *x,
                         size_t len,
                         double *approx,
                         double *detail,
                         struct FhOpCounts *counts);

/**
 * One synthesis level from bands of `band_len` samples each. Writes
 * `2*band_len` samples to `out`.
 *
 * # Safety
 * `approx` and `detail` must point to `band_len` readable doubles each;
 * `out` to `2*band_len` writable doubles.
 */
enum FhStatus fh_synthesize(int32_t mode,
                            const double *approx,
                            const double *detail,
                            size_t band_len,
                            double *out,
                            struct FhOpCounts *counts);

/**
 * Decomposes `x[0..len]` over `levels` levels and returns a handle through
 * `out`. The handle owns its coefficient storage until
 * [`fh_decomposition_free`].
 *
 * # Safety
 * `x` must point to `len` readable doubles; `out` must be a valid location
 * for a pointer.
 */
enum FhStatus fh_decompose(int32_t mode,
                           const double *x,
                           size_t len,
                           uint32_t levels,
                           struct FhOpCounts *counts,
                           struct FhDecomposition **out);

/**
 * Number of decomposition levels, or 0 for a null handle.
 *
 * # Safety
 * `d` must be null or a live handle from [`fh_decompose`].
 */
uint32_t fh_decomposition_levels(const struct FhDecomposition *d);

/**
 * Length of the signal the decomposition was built from, or 0 for a null
 * handle.
 *
 * # Safety
 * `d` must be null or a live handle from [`fh_decompose`].
 */
size_t fh_decomposition_original_length(const struct FhDecomposition *d);

/**
 * Length of detail band `level` (0 is the finest), or 0 if out of range.
 *
 * # Safety
 * `d` must be null or a live handle from [`fh_decompose`].
 */
size_t fh_decomposition_detail_len(const struct FhDecomposition *d, uint32_t level);

/**
 * Length of the final approximation band, or 0 for a null handle.
 *
 * # Safety
 * `d` must be null or a live handle from [`fh_decompose`].
 */
size_t fh_decomposition_final_len(const struct FhDecomposition *d);

/**
 * Copies detail band `level` (0 is the finest) into `out`.
 *
 * # Safety
 * `out` must point to `capacity` writable doubles; `capacity` must be at
 * least the band length reported by [`fh_decomposition_detail_len`].
 */
enum FhStatus fh_decomposition_copy_detail(const struct FhDecomposition *d,
                                           uint32_t level,
                                           double *out,
                                           size_t capacity);

/**
 * Copies the final approximation band into `out`.
 *
 * # Safety
 * `out` must point to `capacity` writable doubles; `capacity` must be at
 * least the length reported by [`fh_decomposition_final_len`].
 */
enum FhStatus fh_decomposition_copy_final(const struct FhDecomposition *d,
                                          double *out,
                                          size_t capacity);

/**
 * Rebuilds the signal from a decomposition. Writes
 * [`fh_decomposition_original_length`] samples to `out`.
 *
 * # Safety
 * `d` must be a live handle; `out` must point to `capacity` writable
 * doubles with `capacity` at least the original length.
 */
enum FhStatus fh_reconstruct(const struct FhDecomposition *d,
                             int32_t mode,
                             double *out,
                             size_t capacity,
                             struct FhOpCounts *counts);

/**
 * Releases a decomposition handle. Null is a no-op.
 *
 * # Safety
 * `d` must be null or a handle from [`fh_decompose`] not freed before.
 */
void fh_decomposition_free(struct FhDecomposition *d);

/**
 * One 2-D analysis level of a row-major `width x height` image. Writes
 * `(width/2)*(height/2)` samples to each band buffer.
 *
 * # Safety
 * `pixels` must point to `width*height` readable doubles; `ll`, `lh`,
 * `hl`, `hh` to `(width/2)*(height/2)` writable doubles each.
 */
enum FhStatus fh_analyze2d(int32_t mode,
                           const double *pixels,
                           size_t width,
                           size_t height,
                           double *ll,
                           double *lh,
                           double *hl,
                           double *hh,
                           struct FhOpCounts *counts);

/**
 * Inverse of [`fh_analyze2d`] from four `band_width x band_height` bands.
 * Writes `(2*band_width)*(2*band_height)` samples to `out`.
 *
 * # Safety
 * The band pointers must each hold `band_width*band_height` readable
 * doubles; `out` must hold four times that, writable.
 */
enum FhStatus fh_synthesize2d(int32_t mode,
                              const double *ll,
                              const double *lh,
                              const double *hl,
                              const double *hh,
                              size_t band_width,
                              size_t band_height,
                              double *out,
                              struct FhOpCounts *counts);

/**
 * Runs both analysis paths on `x[0..len]` and reports each band's maximum
 * pointwise error in peak-normalized dB (direct path as oracle).
 *
 * # Safety
 * `x` must point to `len` readable doubles; the two output pointers must
 * be valid locations for a double each.
 */
enum FhStatus fh_compare(const double *x, size_t len, double *approx_max_db, double *detail_max_db);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FASTHAAR_H */
