#ifndef PADIC_SOLVE_H
#define PADIC_SOLVE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PadicStatus {
  PADIC_STATUS_OK = 0,
  PADIC_STATUS_NULL_POINTER = 1,
  PADIC_STATUS_DOMAIN = 2,
  PADIC_STATUS_UNSUPPORTED = 3,
  PADIC_STATUS_HYPOTHESIS = 4,
  PADIC_STATUS_CONSISTENCY = 5,
  PADIC_STATUS_RESOURCE_LIMIT = 6,
  PADIC_STATUS_PANIC = 7,
} PadicStatus;

typedef enum PadicCase {
  PADIC_CASE_P_NOT_DIVIDES_K = 0,
  PADIC_CASE_K_EQUALS_PN1 = 1,
} PadicCase;

/**
 * Opaque handle to a validated instance of `g^(x^n) = x^k (mod p^e)`.
 */
typedef struct PadicInstance PadicInstance;

typedef struct PadicCountReport {
  /**
   * Solution pairs modulo p.
   */
  uint64_t n_mod_p;
  uint64_t d;
  /**
   * Solutions in `[0, m*p^e)`.
   */
  uint64_t total;
  /**
   * 1 or 0 when k = p; -1 otherwise.
   */
  int32_t wieferich;
  enum PadicCase case_tag;
} PadicCountReport;

/**
 * Sorted solutions in `[0, window)`. Free with [`padic_solutions_free`].
 */
typedef struct PadicSolutions {
  uint64_t *data;
  size_t len;
  uint64_t window;
} PadicSolutions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Validates `(g, n, k, p, e)` and stores a new handle in `*out`.
 */
enum PadicStatus padic_instance_new(uint64_t g,
                                    uint64_t n,
                                    uint64_t k,
                                    uint64_t p,
                                    uint32_t e,
                                    struct PadicInstance **out);

/**
 * Releases a handle. NULL is ignored.
 */
void padic_instance_free(struct PadicInstance *inst);

/**
 * Multiplicative order of g modulo p.
 */
uint64_t padic_instance_order(const struct PadicInstance *inst);

/**
 * Window size `m*p^e`.
 */
uint64_t padic_instance_window(const struct PadicInstance *inst);

enum PadicStatus padic_count(const struct PadicInstance *inst, struct PadicCountReport *out);

/**
 * Enumerates all solutions by lifting (or level search when k = p).
 */
enum PadicStatus padic_enumerate(const struct PadicInstance *inst, struct PadicSolutions *out);

/**
 * Exhaustive scan of the window; `ceiling = 0` selects the default.
 * Unsupported cases are scanned too.
 */
enum PadicStatus padic_oracle(const struct PadicInstance *inst,
                              uint64_t ceiling,
                              struct PadicSolutions *out);

/**
 * Frees the buffer inside `solutions` and zeroes it.
 */
void padic_solutions_free(struct PadicSolutions *solutions);

enum PadicStatus padic_is_wieferich_base(uint64_t g, uint64_t p, bool *out);

/**
 * Message for the last failed call on this thread, or NULL.
 */
const char *padic_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PADIC_SOLVE_H */
