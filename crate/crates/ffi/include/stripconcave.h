#ifndef STRIPCONCAVE_H
#define STRIPCONCAVE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ScStatus {
  SC_STATUS_OK = 0,
  SC_STATUS_NULL_POINTER = 1,
  SC_STATUS_INVALID_UTF8 = 2,
  SC_STATUS_PARSE = 3,
  SC_STATUS_CONFIG = 4,
  SC_STATUS_LENGTH = 5,
  SC_STATUS_PRECONDITION = 6,
  SC_STATUS_NON_INTEGER = 7,
  SC_STATUS_INFEASIBLE = 8,
  SC_STATUS_INADMISSIBLE = 9,
  SC_STATUS_INTERNAL = 10,
  SC_STATUS_PANIC = 11,
} ScStatus;

typedef struct ScArray ScArray;

typedef struct ScFlow ScFlow;

/*
 Boundary data together with the configuration it lives on.
 */
typedef struct ScSpec ScSpec;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the most recent failure on this thread; empty after a success.
 The pointer stays valid until the next call into the library on this thread.
 */
const char *sc_last_error(void);

/*
 Static name of a status code.
 */
const char *sc_status_name(enum ScStatus status);

/*
 # Safety
 `s` must be null or a string returned by this library, not yet freed.
 */
void sc_string_free(char *s);

/*
 Parses boundary data. `config_json` may be null, in which case a `config` key in
 `spec_json` is used, or else the configuration is inferred from the tuple lengths.

 # Safety
 `spec_json` and a non-null `config_json` must be NUL-terminated strings; `out` must be writable.
 */
enum ScStatus sc_spec_from_json(const char *spec_json,
                                const char *config_json,
                                struct ScSpec **out);

/*
 # Safety
 `spec` must be null or a live handle from `sc_spec_from_json`.
 */
void sc_spec_free(struct ScSpec *spec);

/*
 Writes 1 to `feasible` if some array has this boundary, else 0. When `certificate`
 is non-null it receives the JSON verdict, including the failing inequality.

 # Safety
 `spec` must be a live handle; `feasible` must be writable; `certificate` may be null.
 */
enum ScStatus sc_check(const struct ScSpec *spec, int32_t *feasible, char **certificate);

/*
 Builds an array with the given boundary; `SC_STATUS_INFEASIBLE` when none exists.

 # Safety
 `spec` must be a live handle; `out` must be writable.
 */
enum ScStatus sc_build(const struct ScSpec *spec, struct ScArray **out);

/*
 # Safety
 `json` must be a NUL-terminated string; `out` must be writable.
 */
enum ScStatus sc_array_from_json(const char *json, struct ScArray **out);

/*
 # Safety
 `array` must be a live handle; `out` must be writable.
 */
enum ScStatus sc_array_to_json(const struct ScArray *array, char **out);

/*
 Writes the boundary data of `array` as JSON.

 # Safety
 `array` must be a live handle; `out` must be writable.
 */
enum ScStatus sc_array_boundary(const struct ScArray *array, char **out);

/*
 Writes 1 to `valid` if every rhombus inequality holds and the corner entry is 0.

 # Safety
 `array` must be a live handle; `valid` must be writable.
 */
enum ScStatus sc_array_is_valid(const struct ScArray *array, int32_t *valid);

/*
 # Safety
 `array` must be null or a live handle.
 */
void sc_array_free(struct ScArray *array);

/*
 Flow of a trapezoid or parallelogram array.

 # Safety
 `array` must be a live handle; `out` must be writable.
 */
enum ScStatus sc_array_to_flow(const struct ScArray *array, struct ScFlow **out);

/*
 Array with zero left column whose flow is `flow`; `λ` is read off the flow.

 # Safety
 `flow` must be a live handle; `out` must be writable.
 */
enum ScStatus sc_flow_to_array(const struct ScFlow *flow, struct ScArray **out);

/*
 # Safety
 `json` must be a NUL-terminated string; `out` must be writable.
 */
enum ScStatus sc_flow_from_json(const char *json, struct ScFlow **out);

/*
 # Safety
 `flow` must be a live handle; `out` must be writable.
 */
enum ScStatus sc_flow_to_json(const struct ScFlow *flow, char **out);

/*
 Zigzag swap at `layer`, which exchanges `ν_layer` and `ν_{layer+1}`.

 # Safety
 `flow` must be a live handle; `out` must be writable.
 */
enum ScStatus sc_flow_swap(const struct ScFlow *flow, uintptr_t layer, struct ScFlow **out);

/*
 # Safety
 `flow` must be null or a live handle.
 */
void sc_flow_free(struct ScFlow *flow);

/*
 Number of integer arrays with the given trapezoid boundary, as a decimal string.

 # Safety
 `spec` must be a live handle; `out` must be writable.
 */
enum ScStatus sc_kostka(const struct ScSpec *spec, char **out);

/*
 Number of facets of the boundary cone of the `(n, m)` trapezoid.

 # Safety
 `out` must be writable.
 */
enum ScStatus sc_facet_count(uintptr_t n, uintptr_t m, uintptr_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STRIPCONCAVE_H */
