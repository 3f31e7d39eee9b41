/*
 * pellkit C API.
 *
 * Integers cross the boundary as decimal strings so that values of any size
 * survive unchanged. Every handle returned through an out-parameter is owned
 * by the caller and released with the matching *_free function; strings
 * returned by accessors stay valid until their handle is freed.
 *
 * Functions return PK_OK on success. On failure the out-parameter is left
 * NULL and pk_last_error() describes the problem for the calling thread.
 */
#ifndef PELLKIT_H
#define PELLKIT_H

#include <stddef.h>

#if defined(PELLKIT_BUILDING)
#  define PK_API __attribute__((visibility("default")))
#else
#  define PK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pk_status {
  PK_OK = 0,
  PK_ERR_INVALID_ARGUMENT = 1,
  PK_ERR_PERFECT_SQUARE = 2,
  PK_ERR_NOT_SQUAREFREE = 3,
  PK_ERR_FACTORIZATION_INCOMPLETE = 4,
  PK_ERR_OUT_OF_RANGE = 5,
  PK_ERR_NULL_POINTER = 6,
  PK_ERR_INTERNAL = 7
} pk_status;

PK_API const char* pk_status_name(pk_status status);
PK_API const char* pk_last_error(void);
PK_API const char* pk_version(void);

/* Factorization and primality */

typedef struct pk_factorization pk_factorization;

PK_API pk_status pk_factorize(const char* n, pk_factorization** out);
PK_API void pk_factorization_free(pk_factorization* f);
PK_API size_t pk_factorization_count(const pk_factorization* f);
PK_API const char* pk_factorization_prime(const pk_factorization* f, size_t i);
PK_API unsigned pk_factorization_exponent(const pk_factorization* f, size_t i);
/* n = square_part^2 * core */
PK_API const char* pk_factorization_core(const pk_factorization* f);
PK_API const char* pk_factorization_square_part(const pk_factorization* f);
PK_API int pk_factorization_is_squarefree(const pk_factorization* f);

PK_API pk_status pk_is_prime(const char* n, int* out);
PK_API pk_status pk_jacobi(const char* a, const char* n, int* out);

/* Continued fraction of sqrt(m) */

typedef struct pk_expansion pk_expansion;

PK_API pk_status pk_cf_sqrt(const char* m, pk_expansion** out);
PK_API void pk_expansion_free(pk_expansion* e);
PK_API const char* pk_expansion_m(const pk_expansion* e);
PK_API const char* pk_expansion_a0(const pk_expansion* e);
PK_API size_t pk_expansion_period_length(const pk_expansion* e);
PK_API const char* pk_expansion_period_term(const pk_expansion* e, size_t i);
/* Convergent k as numerator, denominator and p^2 - m q^2. Computes up to
 * index k on first use and caches the prefix. */
PK_API pk_status pk_expansion_convergent(pk_expansion* e, size_t k, const char** p, const char** q,
                                         const char** pell_value);

/* Pell-type equations */

typedef enum pk_solve_mode {
  PK_SOLVE_CONVERGENT_SCAN = 0, /* complete, |N| < sqrt(m) */
  PK_SOLVE_CLASS_SEARCH = 1,    /* complete, y up to Nagell's bound */
  PK_SOLVE_BOUNDED = 2          /* brute force to y_max; incomplete beyond it */
} pk_solve_mode;

typedef struct pk_certificate pk_certificate;

PK_API pk_status pk_solve(const char* m, const char* N, pk_certificate** out);
PK_API pk_status pk_brute_force(const char* m, const char* N, const char* y_max, pk_certificate** out);
PK_API void pk_certificate_free(pk_certificate* c);
PK_API const char* pk_certificate_m(const pk_certificate* c);
PK_API const char* pk_certificate_target(const pk_certificate* c);
PK_API pk_solve_mode pk_certificate_mode(const pk_certificate* c);
PK_API int pk_certificate_complete(const pk_certificate* c);
/* Convergents or y values examined; y_max in bounded mode. */
PK_API const char* pk_certificate_scan_length(const pk_certificate* c);
PK_API size_t pk_certificate_solution_count(const pk_certificate* c);
PK_API const char* pk_certificate_x(const pk_certificate* c, size_t i);
PK_API const char* pk_certificate_y(const pk_certificate* c, size_t i);

/* Units of real quadratic fields: (a + b sqrt(m)) / denom */

typedef enum pk_rd_family {
  PK_RD_D2_MINUS_1 = 0,
  PK_RD_D2_PLUS_3 = 1,
  PK_RD_D2_PLUS_2 = 2,
  PK_RD_D2_MINUS_2 = 3
} pk_rd_family;

typedef struct pk_unit pk_unit;

PK_API pk_status pk_fundamental_unit(const char* m, pk_unit** out);
PK_API pk_status pk_pell_fundamental(const char* m, pk_unit** out);
/* *out stays NULL with PK_OK when x^2 - m y^2 = -1 has no solution. */
PK_API pk_status pk_neg_pell(const char* m, pk_unit** out);
PK_API pk_status pk_rd_unit(pk_rd_family family, const char* d, pk_unit** out);
PK_API void pk_unit_free(pk_unit* u);
PK_API const char* pk_unit_a(const pk_unit* u);
PK_API const char* pk_unit_b(const pk_unit* u);
PK_API const char* pk_unit_m(const pk_unit* u);
PK_API unsigned pk_unit_denom(const pk_unit* u);
PK_API int pk_unit_norm(const pk_unit* u);

/* Class numbers */

typedef struct pk_class_data pk_class_data;

/* m must be square-free; see pk_factorize for the core. */
PK_API pk_status pk_class_number(const char* m, pk_class_data** out);
PK_API void pk_class_data_free(pk_class_data* c);
PK_API const char* pk_class_data_m(const pk_class_data* c);
PK_API const char* pk_class_data_discriminant(const pk_class_data* c);
PK_API long long pk_class_data_h_narrow(const pk_class_data* c);
PK_API long long pk_class_data_h_wide(const pk_class_data* c);
PK_API int pk_class_data_unit_norm(const pk_class_data* c);

PK_API pk_status pk_class_conclusion(const char* m, int* h_gt_1, int* implied_by_lemma);

/* Family verification */

typedef enum pk_family { PK_F1 = 1, PK_F2 = 2, PK_F3 = 3, PK_F4 = 4 } pk_family;

enum {
  PK_VERIFY_REQUIRE_CONGRUENCE = 1 << 0,
  PK_VERIFY_ALLOW_N0 = 1 << 1
};

typedef struct pk_verification pk_verification;

typedef struct pk_verify_row {
  pk_family family;
  const char* p;
  const char* n;
  const char* d;
  const char* m;
  int p_is_prime;
  int m_is_squarefree;
  int congruence_ok;
  int phi_gt_4;
  const pk_certificate* cert_plus;  /* owned by the verification handle */
  const pk_certificate* cert_minus;
  int exceptional;
  int theorem_upheld;
  long long h_wide; /* -1 when m is not square-free */
  int class_conclusion;
} pk_verify_row;

PK_API pk_status pk_verify(pk_family family, unsigned long long p_max, unsigned long long n_max, unsigned flags,
                           unsigned threads, pk_verification** out);
PK_API void pk_verification_free(pk_verification* v);
PK_API size_t pk_verification_count(const pk_verification* v);
PK_API pk_status pk_verification_row(const pk_verification* v, size_t i, pk_verify_row* row);

/* Printed tables and their reproduction */

typedef struct pk_table pk_table;

typedef struct pk_table_row {
  int p;
  int n;
  long long m_printed;
  long long h_printed;
  int starred;
  const char* m_recomputed;
  const char* core;         /* square-free core of m_recomputed */
  const char* square_part;  /* m_recomputed = square_part^2 * core */
  int m_squarefree;
  long long h_computed;     /* class number at core */
  int match_m;
  int match_h;
  long long h_at_printed_m; /* -1 unless the printed m differs */
  int match_h_at_printed_m;
} pk_table_row;

PK_API pk_status pk_reproduce_table(int table_id, unsigned threads, pk_table** out);
/* Printed rows only; reproduction fields are zero / NULL. */
PK_API pk_status pk_printed_table(int table_id, pk_table** out);
PK_API void pk_table_free(pk_table* t);
PK_API pk_family pk_table_family(const pk_table* t);
PK_API size_t pk_table_count(const pk_table* t);
PK_API pk_status pk_table_row_at(const pk_table* t, size_t i, pk_table_row* row);

#ifdef __cplusplus
}
#endif

#endif /* PELLKIT_H */
