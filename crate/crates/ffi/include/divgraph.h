#ifndef DIVGRAPH_H
#define DIVGRAPH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes.
typedef enum DgStatus {
  DG_STATUS_OK = 0,
  // A null pointer or non-UTF-8 string was passed.
  DG_STATUS_INVALID_ARGUMENT = 1,
  // The group input was rejected.
  DG_STATUS_INVALID_GROUP = 2,
  // An order, lattice or subgroup cap was exceeded.
  DG_STATUS_CAP_EXCEEDED = 3,
  // The canonical-labeling search budget was exhausted.
  DG_STATUS_BUDGET_EXCEEDED = 4,
  // An internal invariant failed.
  DG_STATUS_INTERNAL = 5,
  // A panic was caught.
  DG_STATUS_PANIC = 6,
} DgStatus;

// Opaque division graph handle.
typedef struct DgDivisionGraph DgDivisionGraph;

// Opaque group handle.
typedef struct DgGroup DgGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. The pointer
// stays valid until the next call into the library on this thread.
const char *dg_last_error_message(void);

// Builds a group from a catalog descriptor such as `"symmetric:4"`.
//
// # Safety
// `descriptor` must be a NUL-terminated string; `out` must be writable.
enum DgStatus dg_group_from_catalog(const char *descriptor, struct DgGroup **out);

// Builds a group from the JSON group format (table or generators).
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum DgStatus dg_group_from_json(const char *json, struct DgGroup **out);

// # Safety
// `group` must be null or a handle from this library not yet freed.
void dg_group_free(struct DgGroup *group);

// # Safety
// `group` must be a live handle; `out` must be writable.
enum DgStatus dg_group_order(const struct DgGroup *group, uintptr_t *out);

// # Safety
// `group` must be a live handle; `out` must be writable.
enum DgStatus dg_group_division_count(const struct DgGroup *group, uintptr_t *out);

// # Safety
// `group` must be a live handle; `out` must be writable.
enum DgStatus dg_division_graph_new(const struct DgGroup *group, struct DgDivisionGraph **out);

// # Safety
// `graph` must be null or a handle from this library not yet freed.
void dg_division_graph_free(struct DgDivisionGraph *graph);

// # Safety
// `graph` must be a live handle; `out` must be writable.
enum DgStatus dg_division_graph_component_count(const struct DgDivisionGraph *graph,
                                                uintptr_t *out);

// JSON rendering; release with [`dg_string_free`].
//
// # Safety
// `graph` must be a live handle; `out` must be writable.
enum DgStatus dg_division_graph_to_json(const struct DgDivisionGraph *graph, char **out);

// Graphviz rendering; release with [`dg_string_free`].
//
// # Safety
// `graph` must be a live handle; `out` must be writable.
enum DgStatus dg_division_graph_to_dot(const struct DgDivisionGraph *graph, char **out);

// SHA-256 of the canonical certificate, as lowercase hex; release with
// [`dg_string_free`].
//
// # Safety
// `graph` must be a live handle; `out` must be writable.
enum DgStatus dg_division_graph_fingerprint(const struct DgDivisionGraph *graph,
                                            uintptr_t budget,
                                            char **out);

// Writes 1 to `same` if the division graphs are equivalent, else 0.
//
// # Safety
// `a` and `b` must be live handles; `same` must be writable.
enum DgStatus dg_compare(const struct DgGroup *a,
                         const struct DgGroup *b,
                         uintptr_t budget,
                         int32_t *same);

// # Safety
// `s` must be null or a string returned by this library not yet freed.
void dg_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* DIVGRAPH_H */
