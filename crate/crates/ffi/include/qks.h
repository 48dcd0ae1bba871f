/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef QKS_H
#define QKS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QksStatus {
  QKS_STATUS_OK = 0,
  QKS_STATUS_NULL_POINTER = 1,
  QKS_STATUS_INVALID_ARGUMENT = 2,
  QKS_STATUS_PARSE = 3,
  QKS_STATUS_UNKNOWN_ENTRY = 4,
  QKS_STATUS_TOO_LARGE = 5,
  QKS_STATUS_BUDGET_EXCEEDED = 6,
  QKS_STATUS_NOT_CONVERGED = 7,
  QKS_STATUS_ANALYSIS_FAILED = 8,
  QKS_STATUS_IO = 9,
  QKS_STATUS_PANIC = 10,
} QksStatus;

// Opaque graph handle.
typedef struct QksGraph QksGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static nul-terminated string.
const char *qks_version(void);

// Message of the last failed call on this thread, or null. Owned by the
// library; valid until the next failing call on this thread.
const char *qks_last_error(void);

// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
// `edges` (`u0 v0 u1 v1 ...`). `edges` may be null when `edge_count` is 0.
//
// # Safety
// `edges` must point to `2 * edge_count` readable values; `out` must be writable.
enum QksStatus qks_graph_new(size_t n,
                             const uint32_t *edges,
                             size_t edge_count,
                             struct QksGraph **out);

// Looks up a catalog graph such as `"g11"` or `"cycle-7"`.
//
// # Safety
// `name` must be a nul-terminated string; `out` must be writable.
enum QksStatus qks_graph_builtin(const char *name, struct QksGraph **out);

// Parses the `vertices <n>` / `u v` edge-list text format.
//
// # Safety
// `text` must be a nul-terminated string; `out` must be writable.
enum QksStatus qks_graph_parse(const char *text, struct QksGraph **out);

// Releases a graph. Null is ignored.
//
// # Safety
// `g` must come from this library and not have been freed already.
void qks_graph_free(struct QksGraph *g);

// Vertex count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t qks_graph_vertex_count(const struct QksGraph *g);

// Edge count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t qks_graph_edge_count(const struct QksGraph *g);

// Kochen-Specker check with maximal cliques as contexts. `budget` 0 means
// unlimited. When the graph is not contextual and `witness` is non-null,
// the 0/1 assignment is written to `witness[0..n]`.
//
// # Safety
// `g` must be a live handle, `contextual` writable, and `witness` null or
// writable for `qks_graph_vertex_count(g)` bytes.
enum QksStatus qks_ks_check(const struct QksGraph *g,
                            uint64_t budget,
                            bool *contextual,
                            uint8_t *witness);

// # Safety
// `g` must be a live handle and `out` writable.
enum QksStatus qks_chromatic_number(const struct QksGraph *g, size_t *out);

// Independence number; `budget` 0 means unlimited.
//
// # Safety
// `g` must be a live handle and `out` writable.
enum QksStatus qks_independence_number(const struct QksGraph *g, uint64_t budget, size_t *out);

// Order of the automorphism group (graphs up to 16 vertices).
//
// # Safety
// `g` must be a live handle and `out` writable.
enum QksStatus qks_automorphism_order(const struct QksGraph *g, uint64_t *out);

// Lovász number of the graph (up to 64 vertices).
//
// # Safety
// `g` must be a live handle and `out` writable.
enum QksStatus qks_lovasz_theta(const struct QksGraph *g, double *out);

// # Safety
// `g` must be a live handle and `out` writable.
enum QksStatus qks_is_planar(const struct QksGraph *g, bool *out);

// Distinct and real eigenray counts for dimension `q`. `seed` 0 selects the
// built-in default.
//
// # Safety
// `rays` and `real` must be writable.
enum QksStatus qks_ray_counts(uint32_t q, uint64_t seed, size_t *rays, size_t *real);

// Full `analyze` report for a catalog name or file path, as JSON. Release
// the string with [`qks_string_free`].
//
// # Safety
// `input` must be a nul-terminated string and `out` writable.
enum QksStatus qks_analyze_json(const char *input, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed already.
void qks_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QKS_H */
