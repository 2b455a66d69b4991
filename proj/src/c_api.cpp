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

#include "sigconj/sigconj.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <string>
#include <utility>

#include "sigconj/core.hpp"
#include "sigconj/decomposition.hpp"
#include "sigconj/group.hpp"
#include "sigconj/invariants.hpp"
#include "sigconj/io.hpp"
#include "sigconj/orbit.hpp"
#include "sigconj/polynomial.hpp"
#include "sigconj/report.hpp"

struct sc_matrix {
  sigconj::Matrix value;
};

struct sc_signs {
  sigconj::SignVector value;
};

struct sc_poly {
  sigconj::Polynomial value;
};

namespace {

using sigconj::Error;
using sigconj::ErrorCode;

thread_local std::string last_error;

sc_status fail(sc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

sc_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return SC_ERR_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return SC_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotSquare: return SC_ERR_NOT_SQUARE;
    case ErrorCode::SizeCapExceeded: return SC_ERR_SIZE_CAP_EXCEEDED;
    case ErrorCode::MalformedSign: return SC_ERR_MALFORMED_SIGN;
    case ErrorCode::FirstCoordinateNotOne: return SC_ERR_FIRST_COORDINATE_NOT_ONE;
    case ErrorCode::Empty: return SC_ERR_EMPTY;
    case ErrorCode::IndexOutOfRange: return SC_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::OrderOutOfRange: return SC_ERR_ORDER_OUT_OF_RANGE;
    case ErrorCode::RangeError: return SC_ERR_RANGE;
    case ErrorCode::NotSymUnderPhi: return SC_ERR_NOT_SYM_UNDER_PHI;
    case ErrorCode::NotAntiSymUnderPhi: return SC_ERR_NOT_ANTISYM_UNDER_PHI;
    case ErrorCode::ParseError: return SC_ERR_PARSE;
    case ErrorCode::IoError: return SC_ERR_IO;
    case ErrorCode::Internal: return SC_ERR_INTERNAL;
  }
  return SC_ERR_INTERNAL;
}

template <class Body>
sc_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return SC_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SC_ERR_INTERNAL, "unknown error");
  }
}

template <class T>
const T& need(const T* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
  return *p;
}

const char* need(const char* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
  return p;
}

template <class T>
void need_out(T** out) {
  if (out == nullptr) throw Error(ErrorCode::InvalidArgument, "output pointer is NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put_string(char** out, const std::string& s) {
  need_out(out);
  *out = dup_string(s);
}

void put_matrix(sc_matrix** out, sigconj::Matrix m) {
  need_out(out);
  *out = new sc_matrix{std::move(m)};
}

sigconj::MatrixFormat to_format(sc_format f) {
  switch (f) {
    case SC_FORMAT_AUTO: return sigconj::MatrixFormat::Auto;
    case SC_FORMAT_CSV: return sigconj::MatrixFormat::Csv;
    case SC_FORMAT_JSON: return sigconj::MatrixFormat::Json;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown matrix format");
}

sigconj::IndexSet to_index_set(const size_t* indices, size_t count) {
  if (count > 0 && indices == nullptr) throw Error(ErrorCode::InvalidArgument, "indices is NULL");
  return sigconj::IndexSet(std::vector<std::size_t>(indices, indices + count));
}

uint64_t to_u64(const mpz_class& v) {
  if (v > mpz_class("9223372036854775808")) {
    throw Error(ErrorCode::RangeError, "count " + v.get_str() + " does not fit in 64 bits");
  }
  return std::stoull(v.get_str());
}

}  // namespace

extern "C" {

const char* sc_version(void) { return "1.0.0"; }

const char* sc_status_name(sc_status status) {
  switch (status) {
    case SC_OK: return "ok";
    case SC_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case SC_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
    case SC_ERR_NOT_SQUARE: return "not_square";
    case SC_ERR_SIZE_CAP_EXCEEDED: return "size_cap_exceeded";
    case SC_ERR_MALFORMED_SIGN: return "malformed_sign";
    case SC_ERR_FIRST_COORDINATE_NOT_ONE: return "first_coordinate_not_one";
    case SC_ERR_EMPTY: return "empty";
    case SC_ERR_INDEX_OUT_OF_RANGE: return "index_out_of_range";
    case SC_ERR_ORDER_OUT_OF_RANGE: return "order_out_of_range";
    case SC_ERR_RANGE: return "range_error";
    case SC_ERR_NOT_SYM_UNDER_PHI: return "not_sym_under_phi";
    case SC_ERR_NOT_ANTISYM_UNDER_PHI: return "not_antisym_under_phi";
    case SC_ERR_PARSE: return "parse_error";
    case SC_ERR_IO: return "io_error";
    case SC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* sc_last_error(void) { return last_error.c_str(); }

void sc_string_free(char* s) { std::free(s); }

void sc_options_init(sc_options* options) {
  if (options == nullptr) return;
  const sigconj::ReportOptions defaults;
  options->perm_cap = defaults.limits.permanent_cap;
  options->permpoly_cap = defaults.limits.perm_poly_cap;
  options->minor_sum_cap = defaults.limits.minor_sum_cap;
  options->orbit_cap = defaults.limits.orbit_cap;
  options->threads = defaults.limits.threads;
  options->signs = nullptr;
  options->classic = 0;
  options->block_kind = SC_BLOCK_AUTO;
  options->samples = defaults.samples;
  options->seed = defaults.seed;
  options->cayley_n = 0;
}

sc_status sc_matrix_create(size_t rows, size_t cols, sc_matrix** out) {
  return guarded([&] { put_matrix(out, sigconj::Matrix(rows, cols)); });
}

sc_status sc_matrix_parse(const char* text, sc_format format, sc_matrix** out) {
  return guarded([&] { put_matrix(out, sigconj::parse_matrix(need(text, "text"), to_format(format))); });
}

sc_status sc_matrix_load(const char* path, sc_format format, sc_matrix** out) {
  return guarded([&] { put_matrix(out, sigconj::load_matrix(need(path, "path"), to_format(format))); });
}

void sc_matrix_free(sc_matrix* m) { delete m; }

size_t sc_matrix_rows(const sc_matrix* m) { return m ? m->value.rows() : 0; }
size_t sc_matrix_cols(const sc_matrix* m) { return m ? m->value.cols() : 0; }

sc_status sc_matrix_set(sc_matrix* m, size_t row, size_t col, const char* value) {
  return guarded([&] {
    if (m == nullptr) throw Error(ErrorCode::InvalidArgument, "matrix is NULL");
    if (row >= m->value.rows() || col >= m->value.cols()) {
      throw Error(ErrorCode::IndexOutOfRange, "entry (" + std::to_string(row) + ", " +
                                                  std::to_string(col) + ") is outside the matrix");
    }
    m->value(row, col) = sigconj::Scalar::parse(need(value, "value"));
  });
}

sc_status sc_matrix_get(const sc_matrix* m, size_t row, size_t col, char** out) {
  return guarded([&] {
    const auto& a = need(m, "matrix").value;
    if (row >= a.rows() || col >= a.cols()) {
      throw Error(ErrorCode::IndexOutOfRange, "entry (" + std::to_string(row) + ", " +
                                                  std::to_string(col) + ") is outside the matrix");
    }
    put_string(out, a(row, col).to_string());
  });
}

int sc_matrix_equal(const sc_matrix* a, const sc_matrix* b) {
  if (a == nullptr || b == nullptr) return a == b;
  return a->value == b->value ? 1 : 0;
}

sc_status sc_matrix_to_csv(const sc_matrix* m, char** out) {
  return guarded([&] { put_string(out, sigconj::render_csv(need(m, "matrix").value)); });
}

sc_status sc_matrix_to_json(const sc_matrix* m, char** out) {
  return guarded([&] { put_string(out, sigconj::render_json(need(m, "matrix").value)); });
}

sc_status sc_matrix_product(const sc_matrix* a, const sc_matrix* b, sc_matrix** out) {
  return guarded([&] {
    put_matrix(out, sigconj::matrix_product(need(a, "a").value, need(b, "b").value));
  });
}

sc_status sc_signs_parse(const char* text, sc_signs** out) {
  return guarded([&] {
    need_out(out);
    *out = new sc_signs{sigconj::parse_sign_vector(need(text, "text"))};
  });
}

void sc_signs_free(sc_signs* s) { delete s; }

size_t sc_signs_length(const sc_signs* s) { return s ? s->value.size() : 0; }

int sc_signs_at(const sc_signs* s, size_t index) {
  if (s == nullptr || index >= s->value.size()) return 0;
  return s->value[index];
}

sc_status sc_apply_phi(const sc_matrix* a, const sc_signs* c, sc_matrix** out) {
  return guarded([&] { put_matrix(out, sigconj::apply_phi(need(a, "matrix").value, need(c, "signs").value)); });
}

sc_status sc_signature_matrix(const sc_signs* c, sc_matrix** out) {
  return guarded([&] { put_matrix(out, sigconj::signature_matrix(need(c, "signs").value)); });
}

sc_status sc_conjugate_by_signature(const sc_matrix* a, const sc_signs* c, sc_matrix** out) {
  return guarded([&] {
    put_matrix(out, sigconj::conjugate_by_signature(need(a, "matrix").value, need(c, "signs").value));
  });
}

sc_status sc_trace(const sc_matrix* a, char** out) {
  return guarded([&] { put_string(out, sigconj::trace(need(a, "matrix").value).to_string()); });
}

sc_status sc_determinant(const sc_matrix* a, char** out) {
  return guarded([&] { put_string(out, sigconj::determinant(need(a, "matrix").value).to_string()); });
}

sc_status sc_permanent(const sc_matrix* a, size_t cap, char** out) {
  return guarded([&] { put_string(out, sigconj::permanent(need(a, "matrix").value, cap).to_string()); });
}

sc_status sc_rank(const sc_matrix* a, size_t* out) {
  return guarded([&] {
    if (out == nullptr) throw Error(ErrorCode::InvalidArgument, "output pointer is NULL");
    *out = sigconj::rank(need(a, "matrix").value);
  });
}

sc_status sc_principal_minor(const sc_matrix* a, const size_t* indices, size_t count, char** out) {
  return guarded([&] {
    put_string(out, sigconj::principal_minor(need(a, "matrix").value, to_index_set(indices, count)).to_string());
  });
}

sc_status sc_principal_permanent(const sc_matrix* a, const size_t* indices, size_t count, char** out) {
  return guarded([&] {
    put_string(out,
               sigconj::principal_permanent(need(a, "matrix").value, to_index_set(indices, count)).to_string());
  });
}

sc_status sc_char_poly(const sc_matrix* a, sc_poly** out) {
  return guarded([&] {
    need_out(out);
    *out = new sc_poly{sigconj::char_poly(need(a, "matrix").value)};
  });
}

sc_status sc_perm_poly(const sc_matrix* a, size_t cap, sc_poly** out) {
  return guarded([&] {
    need_out(out);
    sigconj::Limits limits;
    limits.perm_poly_cap = cap;
    *out = new sc_poly{sigconj::perm_poly(need(a, "matrix").value, limits)};
  });
}

void sc_poly_free(sc_poly* p) { delete p; }

size_t sc_poly_degree(const sc_poly* p) { return p ? p->value.degree() : 0; }

sc_status sc_poly_coefficient(const sc_poly* p, size_t power, char** out) {
  return guarded([&] { put_string(out, need(p, "polynomial").value.coefficient(power).to_string()); });
}

sc_status sc_compose(const sc_signs* c, const sc_signs* d, sc_signs** out) {
  return guarded([&] {
    need_out(out);
    const auto g = sigconj::compose(sigconj::GroupElement(need(c, "c").value),
                                    sigconj::GroupElement(need(d, "d").value));
    *out = new sc_signs{g.signs()};
  });
}

sc_status sc_signs_to_bits(const sc_signs* c, char** out) {
  return guarded([&] { put_string(out, sigconj::to_bits(sigconj::GroupElement(need(c, "signs").value))); });
}

sc_status sc_sym_part(const sc_matrix* a, const sc_signs* c, sc_matrix** out) {
  return guarded([&] { put_matrix(out, sigconj::sym_part(need(a, "matrix").value, need(c, "signs").value)); });
}

sc_status sc_antisym_part(const sc_matrix* a, const sc_signs* c, sc_matrix** out) {
  return guarded(
      [&] { put_matrix(out, sigconj::antisym_part(need(a, "matrix").value, need(c, "signs").value)); });
}

sc_status sc_classify(const sc_matrix* a, const sc_signs* c, sc_symmetry* out) {
  return guarded([&] {
    if (out == nullptr) throw Error(ErrorCode::InvalidArgument, "output pointer is NULL");
    switch (sigconj::classify(need(a, "matrix").value, need(c, "signs").value)) {
      case sigconj::SymmetryClass::SymUnderPhi: *out = SC_SYM_UNDER_PHI; break;
      case sigconj::SymmetryClass::AntiSymUnderPhi: *out = SC_ANTISYM_UNDER_PHI; break;
      case sigconj::SymmetryClass::Neither: *out = SC_NEITHER; break;
    }
  });
}

sc_status sc_orbit_counts(const sc_matrix* a, size_t* components, uint64_t* orbit_size,
                          uint64_t* stabilizer_size) {
  return guarded([&] {
    sigconj::Limits limits;
    limits.orbit_cap = 0;  // counts only
    const auto report = sigconj::orbit_size(need(a, "matrix").value, limits);
    const uint64_t orbit = to_u64(report.orbit_size);
    const uint64_t stab = to_u64(report.stabilizer_size);
    if (components) *components = report.t;
    if (orbit_size) *orbit_size = orbit;
    if (stabilizer_size) *stabilizer_size = stab;
  });
}

sc_status sc_report(sc_command command, const sc_matrix* matrix, const sc_options* options,
                    char** out_json, int* checks_failed) {
  return guarded([&] {
    need_out(out_json);
    sc_options defaults;
    sc_options_init(&defaults);
    const sc_options& o = options ? *options : defaults;

    sigconj::ReportOptions ro;
    ro.limits.permanent_cap = o.perm_cap;
    ro.limits.perm_poly_cap = o.permpoly_cap;
    ro.limits.minor_sum_cap = o.minor_sum_cap;
    ro.limits.orbit_cap = o.orbit_cap;
    ro.limits.threads = o.threads;
    if (o.signs) ro.signs = o.signs->value;
    ro.classic = o.classic != 0;
    switch (o.block_kind) {
      case SC_BLOCK_AUTO: ro.block_kind = sigconj::BlockKind::Auto; break;
      case SC_BLOCK_SYM: ro.block_kind = sigconj::BlockKind::Sym; break;
      case SC_BLOCK_ANTISYM: ro.block_kind = sigconj::BlockKind::AntiSym; break;
      default: throw Error(ErrorCode::InvalidArgument, "unknown block kind");
    }
    ro.samples = o.samples;
    ro.seed = o.seed;
    ro.cayley_n = o.cayley_n;

    sigconj::Report report;
    if (command == SC_CMD_CAYLEY) {
      report = sigconj::report_cayley(ro);
    } else {
      const auto& a = need(matrix, "matrix").value;
      switch (command) {
        case SC_CMD_APPLY: report = sigconj::report_apply(a, ro); break;
        case SC_CMD_INVARIANTS: report = sigconj::report_invariants(a, ro); break;
        case SC_CMD_DECOMPOSE: report = sigconj::report_decompose(a, ro); break;
        case SC_CMD_BLOCKFORM: report = sigconj::report_blockform(a, ro); break;
        case SC_CMD_ORBIT: report = sigconj::report_orbit(a, ro); break;
        case SC_CMD_VERIFY: report = sigconj::report_verify(a, ro); break;
        default: throw Error(ErrorCode::InvalidArgument, "unknown command");
      }
    }
    *out_json = dup_string(report.text);
    if (checks_failed) *checks_failed = report.checks_failed ? 1 : 0;
  });
}

}  // extern "C"
