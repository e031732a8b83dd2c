/* C interface to the truncpascal exact Pascal-matrix and Birkhoff toolkit.
* Handles are opaque; fallible calls return TpStatus and fill out
* parameters only on TP_STATUS_OK; strings returned through char ** are
* owned by the caller and released with tp_string_free. */

#ifndef TRUNCPASCAL_H
#define TRUNCPASCAL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code shared by every fallible function in this interface.
 */
typedef enum TpStatus {
  /**
   * The call succeeded and all out parameters were written.
   */
  TP_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  TP_STATUS_NULL_ARGUMENT = 1,
  /**
   * A `char *` argument was not valid UTF-8.
   */
  TP_STATUS_INVALID_UTF8 = 2,
  /**
   * Selection entries must be strictly increasing.
   */
  TP_STATUS_NOT_INCREASING = 3,
  /**
   * A selection entry, derivative order, or degree exceeds the ambient
   * bound `n`.
   */
  TP_STATUS_ENTRY_OUT_OF_RANGE = 4,
  /**
   * Two lengths that must agree (selection sizes, matrix widths) differ.
   */
  TP_STATUS_LENGTH_MISMATCH = 5,
  /**
   * The operation needs a square matrix but was handed a rectangular one.
   */
  TP_STATUS_NOT_SQUARE = 6,
  /**
   * A two-row 0/1 matrix would exceed the packed 64-column limit.
   */
  TP_STATUS_WIDTH_TOO_LARGE = 7,
  /**
   * A 2xN 0/1 matrix does not carry exactly N ones.
   */
  TP_STATUS_NOT_INCIDENCE = 8,
  /**
   * A text argument did not parse.
   */
  TP_STATUS_PARSE_ERROR = 9,
  /**
   * A row, column, or entry index is out of range for the handle.
   */
  TP_STATUS_INDEX_OUT_OF_RANGE = 10,
} TpStatus;

/**
 * Opaque handle to a two-row 0/1 incidence matrix (width N, exactly N ones).
 */
typedef struct TpIncidence TpIncidence;

/**
 * Opaque handle to an exact rational matrix.
 */
typedef struct TpMatrix TpMatrix;

/**
 * Opaque handle to a strictly increasing list of naturals (a selection of
 * derivative orders or degrees).
 */
typedef struct TpSelection TpSelection;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static name of a status code ("ok", "null_argument", ...). Never null;
 * do not free.
 */
const char *tp_status_name(enum TpStatus status);

/**
 * Detailed message for the most recent failure on this thread, as a fresh
 * string owned by the caller (free with `tp_string_free`), or null if the
 * last call on this thread succeeded.
 */
char *tp_last_error_message(void);

/**
 * Releases a string returned through a `char **` out parameter or by
 * `tp_last_error_message`. Null is a no-op.
 *
 * # Safety
 * `s` must be null or a string obtained from this library and not yet freed.
 */
void tp_string_free(char *s);

/**
 * Parses a selection from comma-separated naturals ("0,2,5"; empty string
 * for the empty selection). On success stores a new handle in `*out`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum TpStatus tp_selection_parse(const char *text, struct TpSelection **out);

/**
 * Builds a selection from an array of `len` strictly increasing naturals.
 * `entries` may be null only when `len` is 0.
 *
 * # Safety
 * `entries` must point to at least `len` readable values (or be null when
 * `len` is 0); `out` must be a valid pointer.
 */
enum TpStatus tp_selection_from_entries(const uintptr_t *entries,
                                        uintptr_t len,
                                        struct TpSelection **out);

/**
 * Releases a selection handle. Null is a no-op.
 *
 * # Safety
 * `s` must be null or an unfreed handle from this library.
 */
void tp_selection_free(struct TpSelection *s);

/**
 * Number of entries in the selection; 0 for a null handle.
 *
 * # Safety
 * `s` must be null or a valid handle.
 */
uintptr_t tp_selection_len(const struct TpSelection *s);

/**
 * Stores entry `index` (0-based) of the selection in `*out`.
 *
 * # Safety
 * `s` and `out` must be valid pointers.
 */
enum TpStatus tp_selection_entry(const struct TpSelection *s, uintptr_t index, uintptr_t *out);

/**
 * Renders the selection as comma-separated naturals (owned by the caller).
 *
 * # Safety
 * `s` and `out` must be valid pointers.
 */
enum TpStatus tp_selection_to_string(const struct TpSelection *s, char **out);

/**
 * Stores the complement of `s` inside `{0, ..., n}` in `*out`. Fails with
 * `EntryOutOfRange` if some entry of `s` exceeds `n`.
 *
 * # Safety
 * `s` and `out` must be valid pointers.
 */
enum TpStatus tp_selection_complement(const struct TpSelection *s,
                                      uintptr_t n,
                                      struct TpSelection **out);

/**
 * Stores in `*out` whether `r` dominates `x` entrywise (`r_i <= x_i` for
 * every position). The selections must have equal length.
 *
 * # Safety
 * `r`, `x`, and `out` must be valid pointers.
 */
enum TpStatus tp_selection_dominates(const struct TpSelection *r,
                                     const struct TpSelection *x,
                                     bool *out);

/**
 * Builds the truncated Pascal matrix with rows indexed by `r` and columns
 * by `x`: entry (i, j) is `C(x_j, r_i)`, zero whenever `r_i > x_j`.
 *
 * # Safety
 * `r`, `x`, and `out` must be valid pointers.
 */
enum TpStatus tp_pascal_matrix(const struct TpSelection *r,
                               const struct TpSelection *x,
                               struct TpMatrix **out);

/**
 * Builds the full (n+1)x(n+1) collocation matrix that pairs the order-`r`
 * derivative functionals at node 1 with the order-`x-complement`
 * evaluation-style functionals at node 0, against the monomial basis of
 * degree at most `n`. Its determinant equals that of the truncated Pascal
 * matrix for `(r, x)`. Requires `r` and `x` of equal length with entries
 * at most `n`.
 *
 * # Safety
 * `r`, `x`, and `out` must be valid pointers.
 */
enum TpStatus tp_extended_matrix(const struct TpSelection *r,
                                 const struct TpSelection *x,
                                 uintptr_t n,
                                 struct TpMatrix **out);

/**
 * Releases a matrix handle. Null is a no-op.
 *
 * # Safety
 * `m` must be null or an unfreed handle from this library.
 */
void tp_matrix_free(struct TpMatrix *m);

/**
 * Number of rows; 0 for a null handle.
 *
 * # Safety
 * `m` must be null or a valid handle.
 */
uintptr_t tp_matrix_rows(const struct TpMatrix *m);

/**
 * Number of columns; 0 for a null handle.
 *
 * # Safety
 * `m` must be null or a valid handle.
 */
uintptr_t tp_matrix_cols(const struct TpMatrix *m);

/**
 * Renders entry (`row`, `col`) as an exact decimal or `p/q` string owned
 * by the caller.
 *
 * # Safety
 * `m` and `out` must be valid pointers.
 */
enum TpStatus tp_matrix_entry_string(const struct TpMatrix *m,
                                     uintptr_t row,
                                     uintptr_t col,
                                     char **out);

/**
 * Renders the exact determinant as a string owned by the caller. Fails
 * with `NotSquare` on rectangular matrices.
 *
 * # Safety
 * `m` and `out` must be valid pointers.
 */
enum TpStatus tp_matrix_det_string(const struct TpMatrix *m, char **out);

/**
 * Stores in `*out` whether the (square) matrix has nonzero determinant.
 *
 * # Safety
 * `m` and `out` must be valid pointers.
 */
enum TpStatus tp_matrix_is_invertible(const struct TpMatrix *m, bool *out);

/**
 * Looks for the smallest `k` such that rows `k..` by columns `..=k` of the
 * square matrix are entirely zero — a block that forces singularity. On
 * success sets `*out_found`, and `*out_index` to `k` when found
 * (`*out_index` is untouched otherwise).
 *
 * # Safety
 * `m`, `out_found`, and `out_index` must be valid pointers.
 */
enum TpStatus tp_matrix_zero_block_witness(const struct TpMatrix *m,
                                           bool *out_found,
                                           uintptr_t *out_index);

/**
 * Parses a two-row 0/1 incidence matrix from "row0/row1" bit strings
 * ("1010/1010"). Both rows must have the same width N and carry N ones in
 * total.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum TpStatus tp_incidence_parse(const char *text, struct TpIncidence **out);

/**
 * Builds the width-(n+1) incidence matrix whose row 0 marks the complement
 * of `x` in `{0, ..., n}` and whose row 1 marks `r`.
 *
 * # Safety
 * `r`, `x`, and `out` must be valid pointers.
 */
enum TpStatus tp_incidence_from_selection(const struct TpSelection *r,
                                          const struct TpSelection *x,
                                          uintptr_t n,
                                          struct TpIncidence **out);

/**
 * Builds the width-`width` identity incidence matrix (row 0 all zeros,
 * row 1 all ones).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum TpStatus tp_incidence_identity(uintptr_t width, struct TpIncidence **out);

/**
 * Releases an incidence handle. Null is a no-op.
 *
 * # Safety
 * `e` must be null or an unfreed handle from this library.
 */
void tp_incidence_free(struct TpIncidence *e);

/**
 * Width (number of columns); 0 for a null handle.
 *
 * # Safety
 * `e` must be null or a valid handle.
 */
uintptr_t tp_incidence_width(const struct TpIncidence *e);

/**
 * Whether the incidence matrix satisfies the Pólya condition: every prefix
 * of columns `0..=j` holds strictly more than `j` ones. False for a null
 * handle.
 *
 * # Safety
 * `e` must be null or a valid handle.
 */
bool tp_incidence_is_polya(const struct TpIncidence *e);

/**
 * Stores entry (`row`, `col`) of the 0/1 matrix in `*out` (`row` is 0 or 1).
 *
 * # Safety
 * `e` and `out` must be valid pointers.
 */
enum TpStatus tp_incidence_get(const struct TpIncidence *e,
                               uintptr_t row,
                               uintptr_t col,
                               bool *out);

/**
 * Renders the incidence matrix as "row0/row1" bit strings owned by the
 * caller.
 *
 * # Safety
 * `e` and `out` must be valid pointers.
 */
enum TpStatus tp_incidence_to_string(const struct TpIncidence *e, char **out);

/**
 * Combines two equal-width incidence matrices columnwise: row 0 by OR,
 * row 1 by AND. Fails with `NotIncidence` when the result does not carry
 * exactly width-many ones, and `LengthMismatch` when the widths differ.
 *
 * # Safety
 * `e1`, `e2`, and `out` must be valid pointers.
 */
enum TpStatus tp_incidence_sum_dot(const struct TpIncidence *e1,
                                   const struct TpIncidence *e2,
                                   struct TpIncidence **out);

/**
 * Splits the incidence matrix into the standard two-part factorization:
 * the first factor exchanges the lowest row-0 one for the lowest row-1
 * zero, the second clears the remaining row-0 ones from the top. Their
 * columnwise OR/AND combination reassembles the input. A matrix with empty
 * row 0 splits into two identities.
 *
 * # Safety
 * `e`, `out_first`, and `out_second` must be valid pointers.
 */
enum TpStatus tp_incidence_decompose(const struct TpIncidence *e,
                                     struct TpIncidence **out_first,
                                     struct TpIncidence **out_second);

/**
 * Checks, for every pair of equal-size nonempty selections inside
 * `{0, ..., n}`, that four invertibility routes for the truncated Pascal
 * matrix agree: nonzero determinant, entrywise dominance, nonzero diagonal,
 * and the Pólya condition of the associated incidence matrix. Writes the
 * number of pairs checked and the number of disagreements (0 when the
 * equivalence holds).
 *
 * # Safety
 * `out_checked` and `out_disagreements` must be valid pointers.
 */
enum TpStatus tp_verify_main(uintptr_t n, uintptr_t *out_checked, uintptr_t *out_disagreements);

/**
 * Checks, for every width-(n+1) incidence matrix, that the Pólya condition
 * is equivalent to invertibility of the corresponding two-node collocation
 * system at nodes 0 and 1. Writes the number of matrices checked and the
 * number of disagreements.
 *
 * # Safety
 * `out_checked` and `out_disagreements` must be valid pointers.
 */
enum TpStatus tp_verify_polya(uintptr_t n, uintptr_t *out_checked, uintptr_t *out_disagreements);

/**
 * Checks, for every width-(n+1) incidence matrix, that the two-part
 * factorization reassembles the input, yields genuine incidence parts,
 * hands the Pólya property down to the parts, and splits the row counts
 * additively. Writes the number of matrices checked and the number of
 * disagreements.
 *
 * # Safety
 * `out_checked` and `out_disagreements` must be valid pointers.
 */
enum TpStatus tp_verify_decompose(uintptr_t n,
                                  uintptr_t *out_checked,
                                  uintptr_t *out_disagreements);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* TRUNCPASCAL_H */
