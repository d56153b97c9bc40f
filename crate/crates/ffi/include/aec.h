/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef AEC_H
#define AEC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum AecStatus {
  AEC_STATUS_OK = 0,
  AEC_STATUS_NULL_POINTER = 1,
  AEC_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The input breaks a precondition: degree above 4, not connected,
   * too many edges for six colors.
   */
  AEC_STATUS_PRECONDITION = 3,
  AEC_STATUS_PARSE = 4,
  /**
   * The coloring is not total, proper and acyclic.
   */
  AEC_STATUS_NOT_ACYCLIC = 5,
  AEC_STATUS_INFEASIBLE = 6,
  AEC_STATUS_TOO_LARGE = 7,
  AEC_STATUS_INTERNAL = 8,
} AecStatus;

/**
 * A coloring together with a copy of the graph it colors.
 */
typedef struct AecColoring AecColoring;

typedef struct AecGraph AecGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread. Valid until the next
 * failing call on the same thread; never null.
 */
const char *aec_last_error(void);

/**
 * A graph with `n` isolated vertices `0..n`.
 */
struct AecGraph *aec_graph_new(uint32_t n);

/**
 * Parses the edge-list text format (`n m` header, then `u v` lines).
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum AecStatus aec_graph_parse(const char *text, struct AecGraph **out);

/**
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void aec_graph_free(struct AecGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle.
 */
enum AecStatus aec_graph_add_edge(struct AecGraph *g, uint32_t u, uint32_t v);

/**
 * # Safety
 * `g` must be a live graph handle or null.
 */
uint32_t aec_graph_vertex_count(const struct AecGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle or null.
 */
uint32_t aec_graph_edge_count(const struct AecGraph *g);

/**
 * Colors `g` acyclically. With `palette == 6` the graph must be connected
 * with at most `2n - 1` edges; `palette == 7` takes any graph.
 *
 * # Safety
 * `g` must be a live graph handle and `out` a valid pointer.
 */
enum AecStatus aec_color(const struct AecGraph *g, uint8_t palette, struct AecColoring **out);

/**
 * # Safety
 * `c` must come from this library and not be used afterwards.
 */
void aec_coloring_free(struct AecColoring *c);

/**
 * Color of edge `uv`, 1-based.
 *
 * # Safety
 * `c` must be a live coloring handle and `color` a valid pointer.
 */
enum AecStatus aec_coloring_get(const struct AecColoring *c,
                                uint32_t u,
                                uint32_t v,
                                uint8_t *color);

/**
 * Number of distinct colors used, 0 for a null handle.
 *
 * # Safety
 * `c` must be a live coloring handle or null.
 */
uint32_t aec_coloring_colors_used(const struct AecColoring *c);

/**
 * `Ok` if the coloring is total, proper and has no bichromatic cycle.
 *
 * # Safety
 * `c` must be a live coloring handle.
 */
enum AecStatus aec_coloring_verify(const struct AecColoring *c);

/**
 * Exact acyclic chromatic index of a small graph (at most
 * `oracle::DEFAULT_EDGE_LIMIT` edges), trying up to `kmax` colors.
 * `nodes` may be null.
 *
 * # Safety
 * `g` must be a live graph handle and `index` a valid pointer.
 */
enum AecStatus aec_exact_index(const struct AecGraph *g,
                               uint8_t kmax,
                               uint8_t *index,
                               uint64_t *nodes);

/**
 * Library version, static storage.
 */
const char *aec_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AEC_H */
