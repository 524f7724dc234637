#ifndef INDUCED_TREES_H
#define INDUCED_TREES_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum ItStatus {
  IT_STATUS_OK = 0,
  IT_STATUS_NULL_POINTER = 1,
  IT_STATUS_INVALID_UTF8 = 2,
  IT_STATUS_PARSE = 3,
  IT_STATUS_INVALID_INPUT = 4,
  IT_STATUS_GUARD_EXCEEDED = 5,
  IT_STATUS_PRECONDITION = 6,
  IT_STATUS_BUFFER_TOO_SMALL = 7,
  IT_STATUS_SEARCH_FAILED = 8,
  IT_STATUS_PANIC = 9,
} ItStatus;

/**
 * Which embedding procedure `it_find_tree` runs.
 */
typedef enum ItVariant {
  /**
   * Out- or in-tree in an acyclic digraph.
   */
  IT_VARIANT_DAG = 0,
  /**
   * Any oriented tree in an acyclic digraph via kernel layers.
   */
  IT_VARIANT_PARITY = 1,
  /**
   * Any oriented tree by leaf peeling.
   */
  IT_VARIANT_BR = 2,
} ItVariant;

/**
 * A vertex coloring with its color order.
 */
typedef struct ItColoring ItColoring;

/**
 * An undirected or oriented graph.
 */
typedef struct ItGraph ItGraph;

/**
 * A rooted oriented tree.
 */
typedef struct ItTree ItTree;

/**
 * Properties of a tree image; the optional flags are `-1` when they do not
 * apply, else `0` or `1`.
 */
typedef struct ItVerdict {
  bool induced;
  int8_t direction_exact;
  int8_t rainbow;
  int8_t decreasing;
} ItVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *it_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void it_string_free(char *s);

/**
 * Parses `graph N` or `digraph N` followed by one edge per line.
 *
 * # Safety
 * `input` must be a nul-terminated string and `graph` a writable pointer.
 */
enum ItStatus it_graph_parse(const char *input, struct ItGraph **graph);

/**
 * # Safety
 * `graph` must be null or a handle from `it_graph_parse`, not yet freed.
 */
void it_graph_free(struct ItGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle.
 */
size_t it_graph_vertex_count(const struct ItGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle.
 */
bool it_graph_is_oriented(const struct ItGraph *graph);

/**
 * Shortest cycle length of the underlying graph; 0 when acyclic.
 *
 * # Safety
 * `graph` must be a live handle and `girth_out` writable.
 */
enum ItStatus it_graph_girth(const struct ItGraph *graph, size_t *girth_out);

/**
 * Parses `vertex color` lines, with an optional `order c1 c2 ...` line, for
 * a graph on `vertex_count` vertices.
 *
 * # Safety
 * `input` must be a nul-terminated string and `coloring` writable.
 */
enum ItStatus it_coloring_parse(const char *input,
                                size_t vertex_count,
                                struct ItColoring **coloring);

/**
 * # Safety
 * `coloring` must be null or a live handle.
 */
void it_coloring_free(struct ItColoring *coloring);

/**
 * # Safety
 * `coloring` must be a live handle.
 */
size_t it_coloring_num_colors(const struct ItColoring *coloring);

/**
 * Color of `vertex`, or 0 when out of range.
 *
 * # Safety
 * `coloring` must be a live handle.
 */
uint32_t it_coloring_color(const struct ItColoring *coloring, size_t vertex);

/**
 * The coloring in the text format of `it_coloring_parse`; free with `it_string_free`.
 *
 * # Safety
 * `coloring` must be a live handle and `text_out` writable.
 */
enum ItStatus it_coloring_to_string(const struct ItColoring *coloring, char **text_out);

/**
 * # Safety
 * `graph` and `coloring` must be live handles and `proper` writable.
 */
enum ItStatus it_is_proper(const struct ItGraph *graph,
                           const struct ItColoring *coloring,
                           bool *proper);

/**
 * Greedy refinement of a proper coloring under its color order.
 *
 * # Safety
 * `graph` and `coloring` must be live handles and `refined` writable.
 */
enum ItStatus it_refine(const struct ItGraph *graph,
                        const struct ItColoring *coloring,
                        struct ItColoring **refined);

/**
 * Parses `tree N root R` followed by one arc per line.
 *
 * # Safety
 * `input` must be a nul-terminated string and `tree` writable.
 */
enum ItStatus it_tree_parse(const char *input, struct ItTree **tree);

/**
 * # Safety
 * `tree` must be null or a live handle.
 */
void it_tree_free(struct ItTree *tree);

/**
 * # Safety
 * `tree` must be a live handle.
 */
size_t it_tree_vertex_count(const struct ItTree *tree);

/**
 * Runs an embedding procedure. On success `*found` says whether an image
 * was produced; if so it is written to `image_out`, one host vertex per tree
 * vertex. `coloring` may be null; only the `Dag` variant uses it. `r` is used
 * by the `Br` variant.
 *
 * # Safety
 * Handles must be live (or null where allowed), `image_out` must hold
 * `capacity` entries, and `found` must be writable.
 */
enum ItStatus it_find_tree(enum ItVariant variant,
                           const struct ItGraph *graph,
                           const struct ItTree *tree,
                           const struct ItColoring *coloring,
                           size_t r,
                           size_t *image_out,
                           size_t capacity,
                           bool *found);

/**
 * One run of the decreasing search for an induced rainbow path on `s`
 * vertices under the coloring's order.
 *
 * # Safety
 * Handles must be live, `image_out` must hold `capacity` entries, and
 * `found` must be writable.
 */
enum ItStatus it_find_rainbow_path(const struct ItGraph *graph,
                                   const struct ItColoring *coloring,
                                   size_t s,
                                   size_t *image_out,
                                   size_t capacity,
                                   bool *found);

/**
 * Brute-force search for an induced copy of `tree`.
 *
 * # Safety
 * Handles must be live, `image_out` must hold `capacity` entries, and
 * `found` must be writable.
 */
enum ItStatus it_contains_induced_copy(const struct ItGraph *graph,
                                       const struct ItTree *tree,
                                       size_t *image_out,
                                       size_t capacity,
                                       bool *found);

/**
 * Checks an image of `tree` in `graph`. `coloring` may be null.
 *
 * # Safety
 * Handles must be live (or null where allowed), `image` must hold `len`
 * entries, and `verdict` must be writable.
 */
enum ItStatus it_verify_embedding(const struct ItGraph *graph,
                                  const struct ItTree *tree,
                                  const size_t *image,
                                  size_t len,
                                  const struct ItColoring *coloring,
                                  struct ItVerdict *verdict);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INDUCED_TREES_H */
