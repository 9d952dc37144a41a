#ifndef CAUCHYKIT_H
#define CAUCHYKIT_H

/* C interface to cauchykit. Values cross the boundary as opaque handles or
 * as JSON text in the document format (scalars are strings, the field is
 * named once per document). Every call returns a ck_status; on failure the
 * message is available from ck_last_error() on the same thread.
 *
 * Ownership: handles returned through out-parameters are freed with
 * ck_doc_free / ck_frame_free, strings with ck_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CK_API __declspec(dllexport)
#else
#define CK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ck_status {
  CK_OK = 0,
  CK_ERR_DIVISION_BY_ZERO = 1,
  CK_ERR_FIELD_MISMATCH = 2,
  CK_ERR_INVALID_DATA = 3,
  CK_ERR_DIMENSION_MISMATCH = 4,
  CK_ERR_NOT_VERIFIED = 5,
  CK_ERR_PARSE = 6,
  CK_ERR_INVALID_ARGUMENT = 7,
  CK_ERR_SINGULAR = 8,
  CK_ERR_INTERNAL = 99
} ck_status;

/* A parsed document: a matrix, Cauchy data or a pair. */
typedef struct ck_doc ck_doc;
/* Cauchy data together with the free parameters gamma and rho. */
typedef struct ck_frame ck_frame;

CK_API const char* ck_last_error(void);
CK_API const char* ck_status_name(ck_status status);
CK_API void ck_string_free(char* s);

CK_API ck_status ck_doc_parse(const char* json, ck_doc** out);
CK_API void ck_doc_free(ck_doc* doc);
/* "matrix", "cauchy_data" or "pair"; static storage. */
CK_API const char* ck_doc_kind(const ck_doc* doc);
CK_API ck_status ck_doc_to_json(const ck_doc* doc, char** out);

/* 2n distinct scalars from the documented LCG. field is "Q" or "GF(p)". */
CK_API ck_status ck_generate(size_t n, uint64_t seed, const char* field, ck_doc** out);

/* Cauchy data operations. */
CK_API ck_status ck_build(const ck_doc* data, ck_doc** matrix);
CK_API ck_status ck_invert(const ck_doc* data, ck_doc** matrix);
/* rhs is an n x k matrix; each column is solved. */
CK_API ck_status ck_solve(const ck_doc* data, const ck_doc* rhs, ck_doc** solution);
CK_API ck_status ck_alphas(const ck_doc* data, char** json);
CK_API ck_status ck_shift(const ck_doc* data, const char* zeta, ck_doc** out);
CK_API ck_status ck_perm_equivalent(const ck_doc* a, const ck_doc* b, int* equivalent, char** json);
CK_API ck_status ck_identities(const ck_doc* data, int* all_passed, char** json);

/* Matrix operations. */
CK_API ck_status ck_recognize(const ck_doc* matrix, int* is_cauchy, char** json);
CK_API ck_status ck_oracle_inverse(const ck_doc* matrix, ck_doc** inverse);

/* Pair operations. */
CK_API ck_status ck_pair_from_data(const ck_doc* data, ck_doc** pair);
CK_API ck_status ck_pair_verify(const ck_doc* pair, int* verdict, char** json);
CK_API ck_status ck_pair_eigenvalue_data(const ck_doc* pair, ck_doc** data);
CK_API ck_status ck_pair_affine(const ck_doc* pair, const char* xi, const char* zeta, ck_doc** out);
CK_API ck_status ck_pair_equivalent(const ck_doc* p, const ck_doc* q, int* equivalent, char** json);
CK_API ck_status ck_pairs_classify(const ck_doc* const* pairs, size_t count, char** json);

/* Frames. Basis names: "eps", "eps-tilde", "eps-star", "eps-tilde-star". */
CK_API ck_status ck_frame_new(const ck_doc* data, const char* gamma, const char* rho, ck_frame** out);
CK_API void ck_frame_free(ck_frame* frame);
CK_API ck_status ck_frame_transition(const ck_frame* frame, const char* from, const char* to, ck_doc** matrix);
CK_API ck_status ck_frame_gram(const ck_frame* frame, const char* left, const char* right, ck_doc** matrix);
/* u and v are n x 1 matrices of eps coordinates; the value is a scalar string. */
CK_API ck_status ck_frame_form(const ck_frame* frame, const ck_doc* u, const ck_doc* v, char** value);

/* CSV with header n,structured_us,oracle_us,match. */
CK_API ck_status ck_bench(const size_t* sizes, size_t count, size_t trials, uint64_t seed, char** csv);

#ifdef __cplusplus
}
#endif

#endif
