#ifndef TIGHTCOUNT_H
#define TIGHTCOUNT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TcStatus {
  TC_STATUS_OK = 0,
  TC_STATUS_MALFORMED = 1,
  TC_STATUS_OUT_OF_SCOPE = 2,
  TC_STATUS_ENUMERATION_CAP = 3,
  TC_STATUS_NULL_POINTER = 4,
  /**
   * The requested count was not computed (run with `verify`).
   */
  TC_STATUS_NOT_COMPUTED = 5,
  /**
   * The value does not fit the output integer type; use the JSON form.
   */
  TC_STATUS_OVERFLOW = 6,
  TC_STATUS_INTERNAL = 7,
} TcStatus;

/**
 * Opaque classification report.
 */
typedef struct TcReport TcReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *tc_last_error(void);

/**
 * Enumeration limit used when `max_enum` is 0.
 */
uint64_t tc_default_max_enum(void);

/**
 * Classifies `M(r1, r2, r3)`. Each coefficient is `p` or `p/q`.
 *
 * With `verify` both enumerations run; with `list_chern` the distinct Chern
 * vectors are kept (visible in the JSON form). `max_enum = 0` selects the
 * default limit. On success `*out` receives a report owned by the caller.
 *
 * # Safety
 * `r1`, `r2`, `r3` must be valid NUL-terminated strings; `out` must be a
 * valid pointer to writable storage for one pointer.
 */
enum TcStatus tc_analyze(const char *r1,
                         const char *r2,
                         const char *r3,
                         bool verify,
                         bool list_chern,
                         uint64_t max_enum,
                         struct TcReport **out);

/**
 * # Safety
 * `report` must be null or a pointer returned by [`tc_analyze`] that has
 * not been freed.
 */
void tc_report_free(struct TcReport *report);

/**
 * # Safety
 * `report` must be a live report handle and `out` a valid pointer.
 */
enum TcStatus tc_report_e0(const struct TcReport *report, int64_t *out);

/**
 * # Safety
 * `report` must be a live report handle and `out` a valid pointer.
 */
enum TcStatus tc_report_t_formula(const struct TcReport *report, uint64_t *out);

/**
 * # Safety
 * `report` must be a live report handle and `out` a valid pointer.
 */
enum TcStatus tc_report_upper_count(const struct TcReport *report, uint64_t *out);

/**
 * # Safety
 * `report` must be a live report handle and `out` a valid pointer.
 */
enum TcStatus tc_report_lower_count(const struct TcReport *report, uint64_t *out);

/**
 * # Safety
 * `report` must be a live report handle and `out` a valid pointer.
 */
enum TcStatus tc_report_agree(const struct TcReport *report, bool *out);

/**
 * Single-line JSON rendering; release with [`tc_string_free`]. Null on a
 * null handle.
 *
 * # Safety
 * `report` must be null or a live report handle.
 */
char *tc_report_json(const struct TcReport *report);

/**
 * Labeled text table; release with [`tc_string_free`].
 *
 * # Safety
 * `report` must be null or a live report handle.
 */
char *tc_report_text(const struct TcReport *report);

/**
 * Negative continued fraction of `x < 0` as a JSON array, e.g. `[-2,-2,-3]`.
 *
 * # Safety
 * `x` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum TcStatus tc_neg_cf_expand(const char *x, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void tc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TIGHTCOUNT_H */
