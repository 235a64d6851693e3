#ifndef HYPERTORIC_H
#define HYPERTORIC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HtStatus {
  HT_STATUS_OK = 0,
  HT_STATUS_NULL_POINTER = 1,
  HT_STATUS_INVALID_UTF8 = 2,
  HT_STATUS_INVALID_INPUT = 3,
  HT_STATUS_NOT_SMOOTH = 4,
  HT_STATUS_EMPTY_CORE = 5,
  HT_STATUS_GUARD_EXCEEDED = 6,
  HT_STATUS_UNSUPPORTED = 7,
  HT_STATUS_PANIC = 8,
} HtStatus;

/**
 * Opaque handle to a parsed arrangement.
 */
typedef struct HtArrangement HtArrangement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses an arrangement file from a NUL-terminated JSON string.
 *
 * # Safety
 * `json` must be a valid C string and `out` a writable pointer.
 */
enum HtStatus ht_arrangement_from_json(const char *json, struct HtArrangement **out);

/**
 * # Safety
 * `h` must come from [`ht_arrangement_from_json`] and not be freed yet, or be null.
 */
void ht_arrangement_free(struct HtArrangement *h);

/**
 * Ambient dimension `n` and number of hyperplanes `d`.
 *
 * # Safety
 * `h` must be a live handle; `n` and `d` writable pointers.
 */
enum HtStatus ht_arrangement_dims(const struct HtArrangement *h, size_t *n, size_t *d);

/**
 * # Safety
 * `h` must be a live handle; `out` a writable pointer.
 */
enum HtStatus ht_arrangement_is_smooth(const struct HtArrangement *h, bool *out);

/**
 * Number of compact core components.
 *
 * # Safety
 * `h` must be a live handle; `out` a writable pointer.
 */
enum HtStatus ht_core_count(const struct HtArrangement *h, size_t *out);

/**
 * Hyperkähler semi-stability of a pattern over `z`, `w`, `0`, `*`.
 *
 * # Safety
 * `h` must be a live handle, `pattern` a valid C string, `out` writable.
 */
enum HtStatus ht_hk_semistable(const struct HtArrangement *h, const char *pattern, bool *out);

/**
 * Toric semi-stability of the point whose nonzero coordinates are the
 * 0-based indices in `support[0..len]`.
 *
 * # Safety
 * `h` must be a live handle, `support` readable for `len` entries (or null
 * when `len` is 0), `out` writable.
 */
enum HtStatus ht_toric_semistable(const struct HtArrangement *h,
                                  const size_t *support,
                                  size_t len,
                                  bool *out);

/**
 * Whether the compact charts cover the quotient. Fails with
 * `HT_STATUS_EMPTY_CORE` when there is no compact chart.
 *
 * # Safety
 * `h` must be a live handle; `covered` a writable pointer.
 */
enum HtStatus ht_verify_covering(const struct HtArrangement *h, bool *covered);

/**
 * The full JSON report. Release with [`ht_string_free`].
 *
 * # Safety
 * `h` must be a live handle; `out` a writable pointer.
 */
enum HtStatus ht_report_json(const struct HtArrangement *h, char **out);

/**
 * SVG picture for `n <= 2`. Release with [`ht_string_free`].
 *
 * # Safety
 * `h` must be a live handle; `out` a writable pointer.
 */
enum HtStatus ht_render_svg(const struct HtArrangement *h, char **out);

/**
 * # Safety
 * `s` must come from this library and not be freed yet, or be null.
 */
void ht_string_free(char *s);

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call into the library from the same thread.
 */
const char *ht_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERTORIC_H */
