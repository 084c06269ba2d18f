/* C interface to the fibcube library. Generated by cbindgen; do not edit. */

#ifndef FIBCUBE_H
#define FIBCUBE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum FcStatus {
  FC_STATUS_OK = 0,
  FC_STATUS_NULL_POINTER,
  FC_STATUS_INVALID_UTF8,
  FC_STATUS_PARSE_ERROR,
  FC_STATUS_DIMENSION_MISMATCH,
  FC_STATUS_OUT_OF_RANGE,
  FC_STATUS_CAPACITY_EXCEEDED,
  FC_STATUS_NOT_IN_DOMAIN,
  FC_STATUS_BUFFER_TOO_SMALL,
  FC_STATUS_INDEX_OUT_OF_BOUNDS,
} FcStatus;

/**
 * Verification verdict, mirroring the library's report status.
 */
typedef enum FcVerifyStatus {
  FC_VERIFY_STATUS_PERFECT_CODE = 0,
  FC_VERIFY_STATUS_NOT_CODE,
  FC_VERIFY_STATUS_NOT_DOMINATED,
  FC_VERIFY_STATUS_MULTIPLY_DOMINATED,
} FcVerifyStatus;

/**
 * Opaque: a set of equal-length binary words.
 */
typedef struct FcCode FcCode;

/**
 * Opaque: a forbidden-run subgraph of the hypercube.
 */
typedef struct FcGraph FcGraph;

/**
 * Opaque: result of a perfect-code verification sweep.
 */
typedef struct FcReport FcReport;

/**
 * Opaque: result of an exhaustive perfect-code search.
 */
typedef struct FcSearch FcSearch;

/**
 * Opaque: streaming construction too large to materialize.
 */
typedef struct FcStream FcStream;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copy the most recent error message into `buf` (NUL-terminated,
 * truncated to fit) and return the full length including the NUL.
 * Passing NULL just queries the required size.
 *
 * # Safety
 * `buf`, when non-NULL, must point to at least `cap` writable bytes.
 */
size_t fc_last_error(char *buf, size_t cap);

/**
 * Free a string returned by this library.
 *
 * # Safety
 * `s` must have been returned by a `fibcube` function and not freed yet.
 */
void fc_string_free(char *s);

/**
 * Build the run-suppressing perfect code of length 2^p - 1 (p in
 * 2..=4 materialized; use the stream for p = 5).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum FcStatus fc_code_theorem2(uint32_t p, struct FcCode **out);

/**
 * Build the Hamming code of length 2^p - 1 (p in 1..=4).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum FcStatus fc_code_hamming(uint32_t p, struct FcCode **out);

/**
 * Build the worked 16-word code of length 7 avoiding 11111.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum FcStatus fc_code_gamma7_example(struct FcCode **out);

/**
 * Parse code-file text: one word per line, '#' lines ignored.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` a valid pointer.
 */
enum FcStatus fc_code_parse(const char *text, struct FcCode **out);

/**
 * Render a code in the code-file format; free with `fc_string_free`.
 *
 * # Safety
 * `code` must be a live handle; `out` a valid pointer.
 */
enum FcStatus fc_code_render(const struct FcCode *code, char **out);

/**
 * # Safety
 * `code` must be NULL or a live handle, freed at most once.
 */
void fc_code_free(struct FcCode *code);

/**
 * Word length n, or 0 for NULL.
 *
 * # Safety
 * `code` must be NULL or a live handle.
 */
uint32_t fc_code_word_len(const struct FcCode *code);

/**
 * Number of codewords, or 0 for NULL.
 *
 * # Safety
 * `code` must be NULL or a live handle.
 */
size_t fc_code_size(const struct FcCode *code);

/**
 * Longest 1-run over all codewords, or 0 for NULL.
 *
 * # Safety
 * `code` must be NULL or a live handle.
 */
uint32_t fc_code_max_run(const struct FcCode *code);

/**
 * Render codeword `idx` (ascending mask order) into `buf`; needs
 * n + 1 bytes.
 *
 * # Safety
 * `code` must be a live handle; `buf` must hold `cap` writable bytes.
 */
enum FcStatus fc_code_word_at(const struct FcCode *code, size_t idx, char *buf, size_t cap);

/**
 * XOR every codeword with the given word.
 *
 * # Safety
 * `code` must be a live handle; `word` a NUL-terminated string; `out`
 * a valid pointer.
 */
enum FcStatus fc_code_translate(const struct FcCode *code, const char *word, struct FcCode **out);

/**
 * Full domination sweep in the hypercube (n <= 25).
 *
 * # Safety
 * `code` must be a live handle; `out` a valid pointer.
 */
enum FcStatus fc_code_verify_qn(const struct FcCode *code, struct FcReport **out);

/**
 * Graph over length-n words with no run of s ones.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum FcStatus fc_graph_ones_run(uint32_t n, uint64_t s, struct FcGraph **out);

/**
 * Number of vertices, or 0 for NULL.
 *
 * # Safety
 * `graph` must be NULL or a live handle.
 */
uint64_t fc_graph_vertex_count(const struct FcGraph *graph);

/**
 * # Safety
 * `graph` must be NULL or a live handle, freed at most once.
 */
void fc_graph_free(struct FcGraph *graph);

/**
 * Domination sweep inside the graph (n <= 25).
 *
 * # Safety
 * `code` and `graph` must be live handles; `out` a valid pointer.
 */
enum FcStatus fc_code_verify_gamma(const struct FcCode *code,
                                   const struct FcGraph *graph,
                                   struct FcReport **out);

/**
 * # Safety
 * `report` must be NULL or a live handle.
 */
enum FcVerifyStatus fc_report_status(const struct FcReport *report);

/**
 * # Safety
 * `report` must be NULL or a live handle.
 */
bool fc_report_is_perfect(const struct FcReport *report);

/**
 * # Safety
 * `report` must be NULL or a live handle.
 */
size_t fc_report_code_size(const struct FcReport *report);

/**
 * # Safety
 * `report` must be NULL or a live handle.
 */
uint32_t fc_report_max_run(const struct FcReport *report);

/**
 * Flat key-value rendering; free with `fc_string_free`.
 *
 * # Safety
 * `report` must be a live handle; `out` a valid pointer.
 */
enum FcStatus fc_report_render(const struct FcReport *report, char **out);

/**
 * # Safety
 * `report` must be NULL or a live handle, freed at most once.
 */
void fc_report_free(struct FcReport *report);

/**
 * Vertex count of the run-avoidance graph by the counting recurrence.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum FcStatus fc_vertex_count(uint32_t n, uint32_t s, uint64_t *out);

/**
 * Exhaustively search for perfect codes in the (n, s) instance;
 * `limit` = 0 enumerates everything.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum FcStatus fc_search(uint32_t n, uint32_t s, size_t limit, struct FcSearch **out);

/**
 * # Safety
 * `search` must be NULL or a live handle.
 */
bool fc_search_exists(const struct FcSearch *search);

/**
 * # Safety
 * `search` must be NULL or a live handle.
 */
bool fc_search_exhausted(const struct FcSearch *search);

/**
 * # Safety
 * `search` must be NULL or a live handle.
 */
uint64_t fc_search_solution_count(const struct FcSearch *search);

/**
 * # Safety
 * `search` must be NULL or a live handle.
 */
uint64_t fc_search_nodes_expanded(const struct FcSearch *search);

/**
 * Copy solution `idx` out as a new code handle.
 *
 * # Safety
 * `search` must be a live handle; `out` a valid pointer.
 */
enum FcStatus fc_search_solution_at(const struct FcSearch *search, size_t idx, struct FcCode **out);

/**
 * # Safety
 * `search` must be NULL or a live handle, freed at most once.
 */
void fc_search_free(struct FcSearch *search);

/**
 * Smallest s in 2..=s_max admitting a perfect code at length n.
 * `*found` is false when none does (then `*s_out` is untouched).
 *
 * # Safety
 * `found` and `s_out` must be valid pointers.
 */
enum FcStatus fc_min_s(uint32_t n, uint32_t s_max, bool *found, uint32_t *s_out);

/**
 * Streaming run-suppressing construction (p in 2..=5); words come out
 * in ascending mask order.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum FcStatus fc_theorem2_stream_new(uint32_t p, struct FcStream **out);

/**
 * Total number of words the stream yields.
 *
 * # Safety
 * `stream` must be NULL or a live handle.
 */
uint64_t fc_stream_expected_len(const struct FcStream *stream);

/**
 * Output word length (needs a buffer of that many bytes plus one).
 *
 * # Safety
 * `stream` must be NULL or a live handle.
 */
uint32_t fc_stream_word_len(const struct FcStream *stream);

/**
 * Write the next word into `buf`. Returns 1 on success, 0 when the
 * stream is exhausted, -1 on error (NULL or undersized buffer).
 *
 * # Safety
 * `stream` must be a live handle; `buf` must hold `cap` writable bytes.
 */
int32_t fc_stream_next(struct FcStream *stream, char *buf, size_t cap);

/**
 * # Safety
 * `stream` must be NULL or a live handle, freed at most once.
 */
void fc_stream_free(struct FcStream *stream);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FIBCUBE_H */
