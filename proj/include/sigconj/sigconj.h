// Copyright 2026 The sigconj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the sigconj library.
 *
 * Every object is an opaque handle released with its matching *_free call.
 * Functions return an sc_status; on failure sc_last_error() holds a message
 * for the calling thread. Strings handed out through char** are allocated by
 * the library and released with sc_string_free. Scalars cross the boundary
 * as "p/q" strings (or bare integers when q = 1).
 */
#ifndef SIGCONJ_SIGCONJ_H
#define SIGCONJ_SIGCONJ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef SIGCONJ_BUILDING
#    define SIGCONJ_API __declspec(dllexport)
#  else
#    define SIGCONJ_API __declspec(dllimport)
#  endif
#else
#  define SIGCONJ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_ERR_INVALID_ARGUMENT = 1,
  SC_ERR_DIMENSION_MISMATCH = 2,
  SC_ERR_NOT_SQUARE = 3,
  SC_ERR_SIZE_CAP_EXCEEDED = 4,
  SC_ERR_MALFORMED_SIGN = 5,
  SC_ERR_FIRST_COORDINATE_NOT_ONE = 6,
  SC_ERR_EMPTY = 7,
  SC_ERR_INDEX_OUT_OF_RANGE = 8,
  SC_ERR_ORDER_OUT_OF_RANGE = 9,
  SC_ERR_RANGE = 10,
  SC_ERR_NOT_SYM_UNDER_PHI = 11,
  SC_ERR_NOT_ANTISYM_UNDER_PHI = 12,
  SC_ERR_PARSE = 13,
  SC_ERR_IO = 14,
  SC_ERR_INTERNAL = 15
} sc_status;

typedef enum sc_format { SC_FORMAT_AUTO = 0, SC_FORMAT_CSV = 1, SC_FORMAT_JSON = 2 } sc_format;

typedef enum sc_symmetry {
  SC_SYM_UNDER_PHI = 0,
  SC_ANTISYM_UNDER_PHI = 1,
  SC_NEITHER = 2
} sc_symmetry;

typedef enum sc_command {
  SC_CMD_APPLY = 0,
  SC_CMD_INVARIANTS = 1,
  SC_CMD_DECOMPOSE = 2,
  SC_CMD_BLOCKFORM = 3,
  SC_CMD_ORBIT = 4,
  SC_CMD_CAYLEY = 5,
  SC_CMD_VERIFY = 6
} sc_command;

typedef enum sc_block_kind { SC_BLOCK_AUTO = 0, SC_BLOCK_SYM = 1, SC_BLOCK_ANTISYM = 2 } sc_block_kind;

typedef struct sc_matrix sc_matrix;
typedef struct sc_signs sc_signs;
typedef struct sc_poly sc_poly;

/* Report options; initialise with sc_options_init before changing fields. */
typedef struct sc_options {
  size_t perm_cap;
  size_t permpoly_cap;
  size_t minor_sum_cap;
  size_t orbit_cap;
  unsigned threads;
  const sc_signs* signs; /* may be NULL */
  int classic;
  sc_block_kind block_kind;
  size_t samples;
  uint64_t seed;
  size_t cayley_n;
} sc_options;

SIGCONJ_API const char* sc_version(void);
SIGCONJ_API const char* sc_status_name(sc_status status);
SIGCONJ_API const char* sc_last_error(void);
SIGCONJ_API void sc_string_free(char* s);
SIGCONJ_API void sc_options_init(sc_options* options);

/* Matrices */
SIGCONJ_API sc_status sc_matrix_create(size_t rows, size_t cols, sc_matrix** out);
SIGCONJ_API sc_status sc_matrix_parse(const char* text, sc_format format, sc_matrix** out);
SIGCONJ_API sc_status sc_matrix_load(const char* path, sc_format format, sc_matrix** out);
SIGCONJ_API void sc_matrix_free(sc_matrix* m);
SIGCONJ_API size_t sc_matrix_rows(const sc_matrix* m);
SIGCONJ_API size_t sc_matrix_cols(const sc_matrix* m);
SIGCONJ_API sc_status sc_matrix_set(sc_matrix* m, size_t row, size_t col, const char* value);
SIGCONJ_API sc_status sc_matrix_get(const sc_matrix* m, size_t row, size_t col, char** out);
SIGCONJ_API int sc_matrix_equal(const sc_matrix* a, const sc_matrix* b);
SIGCONJ_API sc_status sc_matrix_to_csv(const sc_matrix* m, char** out);
SIGCONJ_API sc_status sc_matrix_to_json(const sc_matrix* m, char** out);
SIGCONJ_API sc_status sc_matrix_product(const sc_matrix* a, const sc_matrix* b, sc_matrix** out);

/* Sign vectors */
SIGCONJ_API sc_status sc_signs_parse(const char* text, sc_signs** out);
SIGCONJ_API void sc_signs_free(sc_signs* s);
SIGCONJ_API size_t sc_signs_length(const sc_signs* s);
SIGCONJ_API int sc_signs_at(const sc_signs* s, size_t index);

/* The map and its signature-matrix realisation */
SIGCONJ_API sc_status sc_apply_phi(const sc_matrix* a, const sc_signs* c, sc_matrix** out);
SIGCONJ_API sc_status sc_signature_matrix(const sc_signs* c, sc_matrix** out);
SIGCONJ_API sc_status sc_conjugate_by_signature(const sc_matrix* a, const sc_signs* c,
                                                sc_matrix** out);

/* Invariants. Scalars are returned as strings. */
SIGCONJ_API sc_status sc_trace(const sc_matrix* a, char** out);
SIGCONJ_API sc_status sc_determinant(const sc_matrix* a, char** out);
SIGCONJ_API sc_status sc_permanent(const sc_matrix* a, size_t cap, char** out);
SIGCONJ_API sc_status sc_rank(const sc_matrix* a, size_t* out);
/* indices are 1-based and strictly increasing */
SIGCONJ_API sc_status sc_principal_minor(const sc_matrix* a, const size_t* indices, size_t count,
                                         char** out);
SIGCONJ_API sc_status sc_principal_permanent(const sc_matrix* a, const size_t* indices,
                                             size_t count, char** out);
SIGCONJ_API sc_status sc_char_poly(const sc_matrix* a, sc_poly** out);
SIGCONJ_API sc_status sc_perm_poly(const sc_matrix* a, size_t cap, sc_poly** out);
SIGCONJ_API void sc_poly_free(sc_poly* p);
SIGCONJ_API size_t sc_poly_degree(const sc_poly* p);
SIGCONJ_API sc_status sc_poly_coefficient(const sc_poly* p, size_t power, char** out);

/* Group Psi_n */
SIGCONJ_API sc_status sc_compose(const sc_signs* c, const sc_signs* d, sc_signs** out);
SIGCONJ_API sc_status sc_signs_to_bits(const sc_signs* c, char** out);

/* Decomposition */
SIGCONJ_API sc_status sc_sym_part(const sc_matrix* a, const sc_signs* c, sc_matrix** out);
SIGCONJ_API sc_status sc_antisym_part(const sc_matrix* a, const sc_signs* c, sc_matrix** out);
SIGCONJ_API sc_status sc_classify(const sc_matrix* a, const sc_signs* c, sc_symmetry* out);

/* Orbit. Sizes above 2^63 report SC_ERR_RANGE. */
SIGCONJ_API sc_status sc_orbit_counts(const sc_matrix* a, size_t* components,
                                      uint64_t* orbit_size, uint64_t* stabilizer_size);

/* Reports: a JSON document in *out_json; *checks_failed is set to 1 when any
   check in the report failed. `matrix` is ignored (and may be NULL) for
   SC_CMD_CAYLEY. */
SIGCONJ_API sc_status sc_report(sc_command command, const sc_matrix* matrix,
                                const sc_options* options, char** out_json,
                                int* checks_failed);

#ifdef __cplusplus
}
#endif

#endif /* SIGCONJ_SIGCONJ_H */
