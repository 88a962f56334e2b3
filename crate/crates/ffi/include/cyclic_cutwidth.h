#ifndef CYCLIC_CUTWIDTH_H
#define CYCLIC_CUTWIDTH_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum CcwStatus {
  CCW_STATUS_OK = 0,
  CCW_STATUS_NULL_POINTER = 1,
  CCW_STATUS_INVALID_ARGUMENT = 2,
  CCW_STATUS_OUT_OF_RANGE = 3,
  CCW_STATUS_GUARD = 4,
  CCW_STATUS_MISMATCH = 5,
  CCW_STATUS_PANIC = 6,
} CcwStatus;

typedef enum CcwHost {
  CCW_HOST_LINEAR = 0,
  CCW_HOST_CYCLIC = 1,
} CcwHost;

// Opaque graph handle.
typedef struct CcwGraph CcwGraph;

// Opaque numbering handle.
typedef struct CcwNumbering CcwNumbering;

// Scalar metrics of one numbering, read on the path and on the cycle.
typedef struct CcwMetrics {
  size_t lbw;
  size_t lwl;
  size_t lcw;
  size_t cbw;
  size_t cwl;
  size_t ccw;
  size_t ccw_lower;
  // False when the routing budget ran out before ccw was proven.
  bool exact;
} CcwMetrics;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Copies the calling thread's last error message into `buf` (always
// NUL-terminated when `len > 0`) and returns the full message length
// excluding the terminator; 0 when no error is recorded.
//
// # Safety
// `buf` must be null or point to `len` writable bytes.
size_t ccw_last_error_message(char *buf, size_t len);

// Library version as a static NUL-terminated string.
const char *ccw_version(void);

// # Safety
// `out` must be a valid pointer to write a handle into.
enum CcwStatus ccw_graph_hypercube(uint32_t n, struct CcwGraph **out);

// Builds a graph on `m` vertices from `edge_count` pairs stored flat in
// `edges` (`u0, v0, u1, v1, ...`).
//
// # Safety
// `edges` must point to `2 * edge_count` readable values (or may be null
// when `edge_count` is 0); `out` must be writable.
enum CcwStatus ccw_graph_from_edges(size_t m,
                                    const size_t *edges,
                                    size_t edge_count,
                                    struct CcwGraph **out);

// # Safety
// `graph` must be null or a handle from this library not yet freed.
void ccw_graph_free(struct CcwGraph *graph);

// # Safety
// `graph` must be a live handle.
size_t ccw_graph_vertex_count(const struct CcwGraph *graph);

// # Safety
// `graph` must be a live handle.
size_t ccw_graph_edge_count(const struct CcwGraph *graph);

// Cyclic reflected Gray layout of Qₙ.
//
// # Safety
// `out` must be writable.
enum CcwStatus ccw_numbering_gray(uint32_t n, struct CcwNumbering **out);

// Linear lexicographic layout of Qₙ.
//
// # Safety
// `out` must be writable.
enum CcwStatus ccw_numbering_lex(uint32_t n, struct CcwNumbering **out);

// Numbering placing `placement[p]` at position `p`.
//
// # Safety
// `placement` must point to `m` readable values; `out` must be writable.
enum CcwStatus ccw_numbering_from_placement(enum CcwHost host,
                                            const size_t *placement,
                                            size_t m,
                                            struct CcwNumbering **out);

// Copies the vertex order into `buf` (up to `len` entries) and returns
// the numbering length.
//
// # Safety
// `numbering` must be a live handle; `buf` must be null or hold `len`
// writable values.
size_t ccw_numbering_placement(const struct CcwNumbering *numbering, size_t *buf, size_t len);

// # Safety
// `numbering` must be null or a handle from this library not yet freed.
void ccw_numbering_free(struct CcwNumbering *numbering);

// All scalar metrics; `budget` caps the routing search for ccw.
//
// # Safety
// Handles must be live; `out` must be writable.
enum CcwStatus ccw_metrics(const struct CcwGraph *graph,
                           const struct CcwNumbering *numbering,
                           uint64_t budget,
                           struct CcwMetrics *out);

// Exact minimum cyclic (`host` = cyclic) or linear cutwidth over all
// numberings of a graph with at most 8 vertices. `witness` may be null.
//
// # Safety
// `graph` must be live; `optimum` writable; `witness` null or writable.
enum CcwStatus ccw_exhaustive(const struct CcwGraph *graph,
                              enum CcwHost host,
                              size_t *optimum,
                              struct CcwNumbering **witness);

// Fewest edges leaving an ℓ-vertex subset of Qₙ.
//
// # Safety
// `out` must be writable.
enum CcwStatus ccw_theta(uint32_t n, uint64_t l, uint64_t *out);

// ⌊5·2ⁿ⁻²/3⌋.
//
// # Safety
// `out` must be writable.
enum CcwStatus ccw_ct_value(uint32_t n, uint64_t *out);

// Cyclic wirelength of the Gray layout of Qₙ.
//
// # Safety
// `out` must be writable.
enum CcwStatus ccw_cwl_closed_form(uint32_t n, uint64_t *out);

// Cut lower bound for layouts of Qₙ that contain the easy facet split.
//
// # Safety
// `out` must be writable.
enum CcwStatus ccw_theorem_lower_bound(uint32_t n, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CYCLIC_CUTWIDTH_H */
