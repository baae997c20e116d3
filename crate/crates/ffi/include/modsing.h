#ifndef MODSING_H
#define MODSING_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every fallible call.
 */
typedef enum {
  ModsingStatus_Ok = 0,
  /**
   * A required pointer argument was NULL.
   */
  ModsingStatus_NullArgument = 1,
  /**
   * An argument was out of range or otherwise malformed.
   */
  ModsingStatus_InvalidArgument = 2,
  /**
   * The input is well-formed but rejected (excluded pair, enumeration
   * budget, unsupported case).
   */
  ModsingStatus_DomainError = 3,
} ModsingStatus;

/**
 * Opaque classification report.
 */
typedef struct ModsingReport ModsingReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the classification report for `(n, d, e)`. On success writes a
 * heap-allocated handle to `out`.
 */
ModsingStatus modsing_report_new(uint32_t n, uint32_t d, uint32_t e, ModsingReport **out);

/**
 * Releases a report handle. NULL is accepted and ignored.
 *
 * # Safety
 * `report` must be NULL or a pointer obtained from [`modsing_report_new`]
 * that has not been freed yet.
 */
void modsing_report_free(ModsingReport *report);

/**
 * Serializes a report as JSON.
 *
 * # Safety
 * `report` must be a live pointer from [`modsing_report_new`].
 */
ModsingStatus modsing_report_to_json(const ModsingReport *report, char **out);

/**
 * Reads the expected dimension field of a report.
 *
 * # Safety
 * `report` must be a live pointer from [`modsing_report_new`].
 */
ModsingStatus modsing_report_expected_dim(const ModsingReport *report, int64_t *out);

/**
 * Reads the conjecture-conditional general-type flag of a report.
 *
 * # Safety
 * `report` must be a live pointer from [`modsing_report_new`].
 */
ModsingStatus modsing_report_general_type_conditional(const ModsingReport *report, bool *out);

/**
 * Invariant of the tangent space at a degree-`e` cover of a line in `P^n`
 * with cyclic stabilizer of order `r`, as a rational string.
 */
ModsingStatus modsing_rsbt_invariant(uint32_t n, uint32_t e, uint32_t r, char **out);

/**
 * Classifies the determinantal pair `(g, f, q, k)` from tower level
 * `base_r`. Writes the class tag (e.g. `canonical`) and the minimal log
 * discrepancy (`undefined` when the pair is not log canonical).
 */
ModsingStatus modsing_pair_classify(uint32_t g,
                                    uint32_t f,
                                    uint32_t q,
                                    uint32_t k,
                                    uint32_t base_r,
                                    char **out_class,
                                    char **out_mld);

/**
 * Canonical divisor class of the space of degree-`e` rational curves on a
 * general degree-`d` hypersurface in `P^n`, rendered in the basis order
 * `H`, `L_p`, `D[i,j]`.
 */
ModsingStatus modsing_canonical_class(uint32_t n, uint32_t d, uint32_t e, char **out);

/**
 * Codimension of the rank-at-most-`k` stratum of `g x f` matrices.
 */
ModsingStatus modsing_stratum_codim(uint32_t g, uint32_t f, uint32_t k, uint64_t *out);

/**
 * Releases a string returned by this library. NULL is accepted.
 *
 * # Safety
 * `s` must be NULL or a pointer returned by one of the string-producing
 * functions of this library, not yet freed.
 */
void modsing_string_free(char *s);

/**
 * Library version as a static string; do not free.
 */
const char *modsing_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MODSING_H */
