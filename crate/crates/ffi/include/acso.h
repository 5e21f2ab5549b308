#ifndef ACSO_H
#define ACSO_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AcsoStatus {
  ACSO_STATUS_OK = 0,
  ACSO_STATUS_NULL_POINTER = 1,
  ACSO_STATUS_INVALID_UTF8 = 2,
  ACSO_STATUS_IO = 3,
  ACSO_STATUS_PARSE = 4,
  ACSO_STATUS_INVALID_BUNDLE = 5,
  ACSO_STATUS_COMPUTATION = 6,
  ACSO_STATUS_OUT_OF_RANGE = 7,
  ACSO_STATUS_INVALID_ARGUMENT = 8,
  ACSO_STATUS_PANIC = 9,
} AcsoStatus;

// The outcome of [`acso_check`].
typedef struct AcsoReport AcsoReport;

// A parsed and validated space file.
typedef struct AcsoSpace AcsoSpace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Loads a space file from `path`.
//
// # Safety
// `path` must be a NUL-terminated string and `out` a valid pointer.
enum AcsoStatus acso_space_load(const char *path, struct AcsoSpace **out);

// Parses a space file held in memory.
//
// # Safety
// `json` must be a NUL-terminated string and `out` a valid pointer.
enum AcsoStatus acso_space_from_json(const char *json, struct AcsoSpace **out);

// # Safety
// `space` must come from this library and not be freed twice. Null is ignored.
void acso_space_free(struct AcsoSpace *space);

// Runs every obstruction check. A negative `bound` uses the file's
// expectation bound, or the default.
//
// # Safety
// `space` must be a live handle and `out` a valid pointer.
enum AcsoStatus acso_check(const struct AcsoSpace *space, int64_t bound, struct AcsoReport **out);

// 0 admits or nothing detected, 2 obstructed, 3 inconclusive; -1 for null.
//
// # Safety
// `report` must be a live handle or null.
int32_t acso_report_exit_code(const struct AcsoReport *report);

// The report as JSON, as printed by `acso check --format json`.
//
// # Safety
// `report` must be a live handle and `out` a valid pointer.
enum AcsoStatus acso_report_to_json(const struct AcsoReport *report, char **out);

// The human-readable table.
//
// # Safety
// `report` must be a live handle and `out` a valid pointer.
enum AcsoStatus acso_report_to_text(const struct AcsoReport *report, char **out);

// # Safety
// `report` must come from this library and not be freed twice. Null is ignored.
void acso_report_free(struct AcsoReport *report);

// # Safety
// `s` must be a string returned by this library, or null.
void acso_string_free(char *s);

// pi_q(SO(2n)/U(n)) written like `Z + Z/2`, for 1 <= q <= 2n - 1.
//
// # Safety
// `out` must be a valid pointer.
enum AcsoStatus acso_homotopy_group(uint64_t n, uint64_t q, char **out);

// The denominator in W_{4k+3} = l * o, in decimal.
//
// # Safety
// `out` must be a valid pointer.
enum AcsoStatus acso_obstruction_denominator(uint64_t k, char **out);

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call into the library.
const char *acso_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ACSO_H */
