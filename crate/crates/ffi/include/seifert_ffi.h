#ifndef SEIFERT_FFI_H
#define SEIFERT_FFI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum SeifertStatus {
  SeifertStatus_Ok = 0,
  SeifertStatus_NullPointer = 1,
  SeifertStatus_InvalidUtf8 = 2,
  SeifertStatus_Syntax = 3,
  SeifertStatus_InvalidLink = 4,
  SeifertStatus_NotPrime = 5,
  SeifertStatus_InvalidArgument = 6,
  SeifertStatus_UnknownTable = 7,
  SeifertStatus_Internal = 99,
} SeifertStatus;

/**
 * Opaque handle to a normalized Seifert link.
 */
typedef struct SeifertLink SeifertLink;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread, or an empty string.
 * The pointer stays valid until the next call into this library on the same thread.
 */
const char *seifert_last_error(void);

/**
 * Parses and normalizes a link expression such as `L(2,3;1,1;-)` or `T(3,4)`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SeifertStatus seifert_link_parse(const char *text, struct SeifertLink **out);

/**
 * Releases a handle from [`seifert_link_parse`]. Null is ignored.
 *
 * # Safety
 * `link` must be null or a handle not yet freed.
 */
void seifert_link_free(struct SeifertLink *link);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void seifert_string_free(char *s);

/**
 * Normal form of the link, e.g. `L(2,3;1,1;-)`.
 *
 * # Safety
 * `link` must be a live handle and `out` a valid pointer.
 */
enum SeifertStatus seifert_link_to_string(const struct SeifertLink *link, char **out);

/**
 * Number of components.
 *
 * # Safety
 * `link` must be a live handle and `out` a valid pointer.
 */
enum SeifertStatus seifert_link_components(const struct SeifertLink *link, uintptr_t *out);

/**
 * Seifert genus.
 *
 * # Safety
 * `link` must be a live handle and `out` a valid pointer.
 */
enum SeifertStatus seifert_link_genus(const struct SeifertLink *link, int64_t *out);

/**
 * Determinant `|Δ(-1)|` as a decimal string.
 *
 * # Safety
 * `link` must be a live handle and `out` a valid pointer.
 */
enum SeifertStatus seifert_link_determinant(const struct SeifertLink *link, char **out);

/**
 * Full classification report as JSON.
 *
 * # Safety
 * `link` must be a live handle and `out` a valid pointer.
 */
enum SeifertStatus seifert_classify_json(const struct SeifertLink *link, char **out);

/**
 * Euler characteristic of the orbifold `B̄_n` as a reduced fraction.
 *
 * # Safety
 * `link` must be a live handle; `num` and `den` must be valid pointers.
 */
enum SeifertStatus seifert_b_bar_chi(const struct SeifertLink *link,
                                     int64_t n,
                                     int64_t *num,
                                     int64_t *den);

/**
 * Whether the `n`-fold canonical cyclic branched cover has finite fundamental group.
 *
 * # Safety
 * `link` must be a live handle and `out` a valid pointer.
 */
enum SeifertStatus seifert_pi1_finite(const struct SeifertLink *link, int64_t n, bool *out);

/**
 * Whether the `n`-fold canonical cover is left-orderable, admits a co-orientable
 * taut foliation and is not an L-space.
 *
 * # Safety
 * `link` must be a live handle and `out` a valid pointer.
 */
enum SeifertStatus seifert_canonical_star(const struct SeifertLink *link, int64_t n, bool *out);

/**
 * Cover report as JSON. Pass a null `weights` for the canonical cover; otherwise
 * `weights` points to `weight_count` branching weights, one per component.
 *
 * # Safety
 * `link` must be a live handle, `out` a valid pointer, and `weights` either null
 * or readable for `weight_count` elements.
 */
enum SeifertStatus seifert_cover_json(const struct SeifertLink *link,
                                      int64_t n,
                                      const int64_t *weights,
                                      uintptr_t weight_count,
                                      char **out);

/**
 * One of the reference tables as JSON.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SeifertStatus seifert_table_json(const char *name, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SEIFERT_FFI_H */
