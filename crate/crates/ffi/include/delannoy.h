#ifndef DELANNOY_H
#define DELANNOY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdint.h>

// Polynomial family selector for [`dln_poly_new`].
typedef enum DlnPolyFamily {
  DLN_POLY_FAMILY_DELANNOY = 0,
  DLN_POLY_FAMILY_LITTLE_SCHRODER = 1,
  DLN_POLY_FAMILY_LARGE_SCHRODER = 2,
} DlnPolyFamily;

// Integer sequence selector for [`dln_table_new`].
typedef enum DlnSequence {
  DLN_SEQUENCE_DELANNOY = 0,
  DLN_SEQUENCE_LITTLE_SCHRODER = 1,
  DLN_SEQUENCE_LARGE_SCHRODER = 2,
} DlnSequence;

// Result code of every fallible call.
typedef enum DlnStatus {
  DLN_STATUS_OK = 0,
  // A parameter violates a claim's hypothesis or is out of range.
  DLN_STATUS_INVALID_ARGUMENT = 1,
  DLN_STATUS_UNKNOWN_CLAIM = 2,
  DLN_STATUS_NULL_POINTER = 3,
  // A string argument is not valid UTF-8.
  DLN_STATUS_INVALID_UTF8 = 4,
  // A certificate spec could not be parsed or validated.
  DLN_STATUS_INVALID_SPEC = 5,
  // An internal consistency check failed during computation.
  DLN_STATUS_INTERNAL = 6,
  DLN_STATUS_PANIC = 7,
} DlnStatus;

// A polynomial with integer coefficients.
typedef struct DlnPoly DlnPoly;

// Outcome of one claim.
typedef struct DlnReport DlnReport;

// Values `0..=n_max` of one integer sequence.
typedef struct DlnTable DlnTable;

// Range overrides for [`dln_verify`]; `0` in any field means unset.
typedef struct DlnRange {
  uint64_t n_max;
  uint64_t n;
  uint64_t p_min;
  uint64_t p_max;
  uint64_t p;
  uint64_t j_max;
} DlnRange;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version, a static string owned by the library.
const char *dln_version(void);

// Message of the last failed call on this thread, or null. Valid until
// the next call into the library from the same thread.
const char *dln_last_error(void);

// Releases a string returned by this library. Null is a no-op.
//
// # Safety
// `s` must come from this library and not have been freed.
void dln_string_free(char *s);

// Builds the table of values `0..=n_max`.
//
// # Safety
// `out` must be a valid pointer to writable storage.
enum DlnStatus dln_table_new(enum DlnSequence kind, uint64_t n_max, struct DlnTable **out);

// Number of entries (`n_max + 1`), or 0 for null.
//
// # Safety
// `table` must be null or a live handle.
uint64_t dln_table_len(const struct DlnTable *table);

// Decimal value at `index`.
//
// # Safety
// `table` must be a live handle; `out` must be writable.
enum DlnStatus dln_table_value(const struct DlnTable *table, uint64_t index, char **out);

// # Safety
// `table` must be null or a live handle, not used afterwards.
void dln_table_free(struct DlnTable *table);

// The `n`-th member of a polynomial family (`n >= 1` for the Schröder
// families).
//
// # Safety
// `out` must be writable.
enum DlnStatus dln_poly_new(enum DlnPolyFamily family, uint64_t n, struct DlnPoly **out);

// Degree, or -1 for the zero polynomial or a null handle.
//
// # Safety
// `poly` must be null or a live handle.
int64_t dln_poly_degree(const struct DlnPoly *poly);

// Ascending coefficients as a comma-separated list, e.g. `1,5,5`.
//
// # Safety
// `poly` must be a live handle; `out` must be writable.
enum DlnStatus dln_poly_coefficients(const struct DlnPoly *poly, char **out);

// Value at integer `x`, in decimal.
//
// # Safety
// `poly` must be a live handle; `out` must be writable.
enum DlnStatus dln_poly_eval(const struct DlnPoly *poly, int64_t x, char **out);

// # Safety
// `poly` must be null or a live handle, not used afterwards.
void dln_poly_free(struct DlnPoly *poly);

// Runs the claim named by `claim` (e.g. `thm1.2`, `cert-f2`). `range` may
// be null for the claim's default range. `Ok` means a report was produced;
// whether the claim held is [`dln_report_passed`].
//
// # Safety
// `claim` must be a NUL-terminated string; `range` null or valid; `out`
// writable.
enum DlnStatus dln_verify(const char *claim, const struct DlnRange *range, struct DlnReport **out);

// Checks a certificate given as a JSON spec, over the certificate's
// default range unless `range` overrides it.
//
// # Safety
// As for [`dln_verify`], with `spec_json` a NUL-terminated string.
enum DlnStatus dln_verify_certificate(const char *spec_json,
                                      const struct DlnRange *range,
                                      struct DlnReport **out);

// 1 if the claim held, 0 if it failed, -1 for null.
//
// # Safety
// `report` must be null or a live handle.
int dln_report_passed(const struct DlnReport *report);

// Number of instances checked, or 0 for null.
//
// # Safety
// `report` must be null or a live handle.
uint64_t dln_report_instances_checked(const struct DlnReport *report);

// The report as a JSON object. With `deterministic` nonzero, the elapsed
// time is written as 0.
//
// # Safety
// `report` must be a live handle; `out` must be writable.
enum DlnStatus dln_report_json(const struct DlnReport *report, int deterministic, char **out);

// # Safety
// `report` must be null or a live handle, not used afterwards.
void dln_report_free(struct DlnReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DELANNOY_H */
