#ifndef HOMN_H
#define HOMN_H

/*
 * homn - exact computation and verification of higher-order Mersenne
 * numbers M_n^(k) = ((2^k)^n - 1)/(2^k - 1) and their binomial transforms.
 *
 * C binding over the C++ core. All big values cross the boundary as
 * decimal strings (they outgrow every native type quickly); sequences and
 * verification runs are opaque handles. Every function that can fail
 * returns a homn_status; homn_last_error() describes the most recent
 * failure on the calling thread.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum homn_status {
  HOMN_OK = 0,
  HOMN_EINVAL = 1,   /* null pointer, zero order, unknown name */
  HOMN_EDOMAIN = 2,  /* parameter outside the operation's stated domain */
  HOMN_EINEXACT = 3, /* a division that must be exact left a remainder */
  HOMN_EINTERNAL = 4 /* unexpected failure inside the library */
} homn_status;

const char* homn_version(void);

/* Message for the last failing call on this thread; never NULL. */
const char* homn_last_error(void);

/* Frees a string returned through a char** out-parameter. */
void homn_string_free(char* s);

/* ---------------------------------------------------------------- *
 * Scalar values                                                     *
 * ---------------------------------------------------------------- */

typedef enum homn_method {
  HOMN_METHOD_RECURRENCE = 0, /* iterate the order-2 recurrence */
  HOMN_METHOD_CLOSED = 1,     /* ((2^k)^n - 1)/(2^k - 1) */
  HOMN_METHOD_QUOTIENT = 2,   /* M_{kn}/M_k */
  HOMN_METHOD_MATRIX = 3      /* entry (1,2) of U^n; requires n >= 1 */
} homn_method;

homn_status homn_mersenne(uint64_t n, char** out);
homn_status homn_mersenne_lucas(uint64_t n, char** out);

/* M_n^(k) by the chosen route; the routes agree on their common domain. */
homn_status homn_hom(uint32_t k, uint64_t n, homn_method method, char** out);

homn_status homn_hoj(uint32_t k, uint64_t n, char** out);
homn_status homn_hojl(uint32_t k, uint64_t n, char** out);

/* X(k,n) with mersenne(k)*X(k,n) = mersenne(k*n); n >= 1. */
homn_status homn_cofactor(uint32_t k, uint64_t n, char** out);

/* M_{n+1}^(k)/M_n^(k) - 2^k as an exact fraction "p/q"; n >= 1. */
homn_status homn_limiting_ratio_gap(uint32_t k, uint64_t n, char** out);

/* ---------------------------------------------------------------- *
 * Sequences                                                         *
 * ---------------------------------------------------------------- */

typedef struct homn_seq homn_seq; /* immutable list of decimal strings */

/* M_0^(k) .. M_{count-1}^(k). */
homn_status homn_hom_seq(uint32_t k, size_t count, homn_seq** out);

/* b_{k,0} .. b_{k,count-1}. With cross_check nonzero, every term is
 * recomputed by the definitional sum and the closed form and the call
 * fails with HOMN_EINTERNAL if the three routes ever disagree. */
homn_status homn_bt_seq(uint32_t k, size_t count, int cross_check,
                        homn_seq** out);

size_t homn_seq_len(const homn_seq* s);
/* Borrowed pointer, valid while the sequence lives; NULL out of range. */
const char* homn_seq_term(const homn_seq* s, size_t i);
void homn_seq_free(homn_seq* s);

/* ---------------------------------------------------------------- *
 * Generating functions                                              *
 * ---------------------------------------------------------------- */

typedef enum homn_family {
  HOMN_FAMILY_BASE = 0,     /* {M_n^(k)} */
  HOMN_FAMILY_TRANSFORM = 1 /* {b_{k,n}} */
} homn_family;

/* Ascending coefficient lists of the ordinary generating function. */
homn_status homn_ogf_numerator(uint32_t k, homn_family which, homn_seq** out);
homn_status homn_ogf_denominator(uint32_t k, homn_family which,
                                 homn_seq** out);

/* First `count` Taylor coefficients of the generating function. */
homn_status homn_ogf_expand(uint32_t k, homn_family which, size_t count,
                            homn_seq** out);

/* ---------------------------------------------------------------- *
 * Matrix forms                                                      *
 * ---------------------------------------------------------------- */

/* Six terms: a11, a12, a21, a22 of U^n, then det and trace; n >= 1. */
homn_status homn_matrix_power(uint32_t k, uint64_t n, homn_seq** out);

/* det(V_1) .. det(V_n), i.e. M_2^(k) .. M_{n+1}^(k); n >= 1. */
homn_status homn_tridiag_chain(uint32_t k, uint64_t n, homn_seq** out);

/* trace(V_n) = n (2^k + 1); n >= 1. */
homn_status homn_tridiag_trace(uint32_t k, uint64_t n, char** out);

/* ---------------------------------------------------------------- *
 * Identity verification sweeps                                      *
 * ---------------------------------------------------------------- */

typedef struct homn_verify homn_verify;

/* Number and names of the identities a sweep can run. */
size_t homn_identity_count(void);
const char* homn_identity_name(size_t i);

homn_verify* homn_verify_new(void); /* defaults: all identities, k<=8, n<=64 */
void homn_verify_free(homn_verify* v);

homn_status homn_verify_set_k_max(homn_verify* v, uint32_t k_max);
homn_status homn_verify_set_n_max(homn_verify* v, uint64_t n_max);
homn_status homn_verify_set_fail_fast(homn_verify* v, int enable);
/* Restricts the sweep; may be called repeatedly, order is preserved. */
homn_status homn_verify_add_identity(homn_verify* v, const char* name);

homn_status homn_verify_run(homn_verify* v);

/* Results (valid after a successful run): */
size_t homn_verify_summary_count(const homn_verify* v);
const char* homn_verify_summary_name(const homn_verify* v, size_t i);
uint64_t homn_verify_summary_passed(const homn_verify* v, size_t i);
uint64_t homn_verify_summary_failed(const homn_verify* v, size_t i);
/* Extra context, e.g. the verified Vajda convention; "" when none. */
const char* homn_verify_summary_note(const homn_verify* v, size_t i);
size_t homn_verify_counterexample_count(const homn_verify* v);
const char* homn_verify_counterexample(const homn_verify* v, size_t i);
int homn_verify_all_hold(const homn_verify* v);

#ifdef __cplusplus
}
#endif

#endif /* HOMN_H */
