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

#include "sigconj/report.hpp"

#include <openssl/evp.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "json_util.hpp"
#include "sigconj/blockform.hpp"
#include "sigconj/core.hpp"
#include "sigconj/decomposition.hpp"
#include "sigconj/group.hpp"
#include "sigconj/io.hpp"
#include "sigconj/orbit.hpp"

namespace sigconj {

namespace {

using detail::Json;
using detail::to_json;

Json to_json(const GroupElement& g) { return g.signs().to_string(); }

// Collects named checks. Each name may be recorded for many cases (one per
// sign vector in verify); the rendered entry keeps the case count, the sides
// of the first failing case (or of the last case when everything passed) and
// a few failing case labels.
class CheckList {
 public:
  void record(const std::string& name, bool pass, Json lhs, Json rhs, const std::string& label = {}) {
    Entry& e = entry(name);
    ++e.cases;
    if (!pass) {
      if (e.failures == 0) {
        e.lhs = std::move(lhs);
        e.rhs = std::move(rhs);
      }
      ++e.failures;
      if (!label.empty() && e.failing.size() < kMaxFailingLabels) e.failing.push_back(label);
    } else if (e.failures == 0) {
      e.lhs = std::move(lhs);
      e.rhs = std::move(rhs);
    }
  }

  template <class T>
  void equal(const std::string& name, const T& lhs, const T& rhs, const std::string& label = {}) {
    record(name, lhs == rhs, to_json(lhs), to_json(rhs), label);
  }

  void skip(const std::string& name, const std::string& reason) {
    Entry& e = entry(name);
    if (e.cases == 0) e.skipped = reason;
  }

  bool any_failed() const {
    for (const auto& e : entries_)
      if (e.failures > 0) return true;
    return false;
  }

  Json to_json_array() const {
    Json out = Json::array();
    for (const auto& e : entries_) {
      Json j;
      j["name"] = e.name;
      if (e.cases == 0) {
        j["status"] = "skipped";
        j["reason"] = e.skipped;
      } else {
        j["status"] = e.failures == 0 ? "pass" : "fail";
        j["cases"] = e.cases;
        if (e.failures > 0) j["failures"] = e.failures;
        j["lhs"] = e.lhs;
        j["rhs"] = e.rhs;
        if (!e.failing.empty()) j["failing_cases"] = e.failing;
      }
      out.push_back(std::move(j));
    }
    return out;
  }

  Json summary() const {
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& e : entries_) {
      if (e.cases == 0) {
        ++skipped;
      } else if (e.failures == 0) {
        ++passed;
      } else {
        ++failed;
      }
    }
    Json s;
    s["checks"] = entries_.size();
    s["passed"] = passed;
    s["failed"] = failed;
    s["skipped"] = skipped;
    s["status"] = failed == 0 ? "pass" : "fail";
    return s;
  }

 private:
  static constexpr std::size_t kMaxFailingLabels = 5;

  struct Entry {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    Json lhs;
    Json rhs;
    std::vector<std::string> failing;
    std::string skipped;
  };

  Entry& entry(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return entries_[it->second];
    index_.emplace(name, entries_.size());
    entries_.emplace_back();
    entries_.back().name = name;
    return entries_.back();
  }

  std::vector<Entry> entries_;
  std::map<std::string, std::size_t> index_;
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::Internal, "SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < length; ++k) {
    out += kHex[digest[k] >> 4];
    out += kHex[digest[k] & 0xF];
  }
  return out;
}

Json input_json(const Matrix& a) {
  Json in;
  in["rows"] = a.rows();
  in["cols"] = a.cols();
  in["digest"] = "sha256:" + sha256_hex(render_csv(a));
  return in;
}

Json options_json(const ReportOptions& o) {
  Json j;
  if (o.signs) j["signs"] = o.signs->to_string();
  j["perm_cap"] = o.limits.permanent_cap;
  j["permpoly_cap"] = o.limits.perm_poly_cap;
  j["minor_sum_cap"] = o.limits.minor_sum_cap;
  j["orbit_cap"] = o.limits.orbit_cap;
  j["threads"] = o.limits.threads;
  return j;
}

Report finish(const std::string& command, Json input, Json options, Json results,
              const CheckList& checks) {
  Json doc;
  doc["command"] = command;
  if (!input.is_null()) doc["input"] = std::move(input);
  doc["options"] = std::move(options);
  doc["results"] = std::move(results);
  doc["checks"] = checks.to_json_array();
  doc["summary"] = checks.summary();
  return {doc.dump(2) + "\n", checks.any_failed()};
}

const SignVector& require_signs(const Matrix& a, const ReportOptions& o, std::string_view command) {
  if (!o.signs) {
    throw Error(ErrorCode::InvalidArgument, std::string(command) + " needs a sign vector (--signs)");
  }
  require_square(a, command);
  if (o.signs->size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(command) + ": sign vector length " + std::to_string(o.signs->size()) +
                    " does not match matrix order " + std::to_string(a.rows()));
  }
  return *o.signs;
}

std::string cap_reason(std::string_view what, std::size_t n, std::size_t cap) {
  return std::string(what) + ": n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap);
}

Json omitted(const std::string& reason) {
  Json j;
  j["omitted"] = reason;
  return j;
}

bool within_perm_cap(const Matrix& a, const Limits& l) { return a.rows() <= l.permanent_cap; }
bool within_subset_cap(const Matrix& a, const Limits& l) {
  return a.rows() <= l.minor_sum_cap && a.rows() <= 62;
}
bool within_perm_poly_cap(const Matrix& a, const Limits& l) { return a.rows() <= l.perm_poly_cap; }

// Largest n for which every individual principal minor/permanent is compared.
constexpr std::size_t kEveryPrincipalCap = 8;
// Largest n for which the group axioms are checked over all pairs of Psi_n.
constexpr std::size_t kGroupExhaustiveCap = 6;

// ---------------------------------------------------------------------------
// Check batteries shared by the subcommands and verify.

void check_conjugation(CheckList& checks, const Matrix& a, const SignVector& c,
                       const std::string& label) {
  const Matrix image = apply_phi(a, c);
  checks.equal("phi_equals_signature_conjugation", image, conjugate_by_signature(a, c), label);
  const Matrix p = signature_matrix(c);
  checks.equal("signature_matrix_squares_to_identity", matrix_product(p, p),
               Matrix::identity(c.size()), label);
  bool diagonal_kept = true;
  for (std::size_t i = 0; i < a.rows(); ++i) diagonal_kept = diagonal_kept && image(i, i) == a(i, i);
  checks.record("diagonal_preserved", diagonal_kept, to_json(image), to_json(a), label);
  checks.equal("phi_is_involution", apply_phi(image, c), a, label);
}

void check_ring_map(CheckList& checks, const Matrix& a, const SignVector& c, const std::string& label) {
  const Matrix b = a.transpose();
  checks.equal("phi_multiplicative", apply_phi(matrix_product(a, b), c),
               matrix_product(apply_phi(a, c), apply_phi(b, c)), label);
  const Scalar alpha(2), beta(-3, 2);
  checks.equal("phi_linear", apply_phi(alpha * a + beta * b, c),
               alpha * apply_phi(a, c) + beta * apply_phi(b, c), label);
}

void check_invariance(CheckList& checks, const Matrix& a, const Matrix& image, const Limits& limits,
                      const std::string& label) {
  const std::size_t n = a.rows();
  checks.equal("trace_invariant", trace(image), trace(a), label);
  checks.equal("determinant_invariant", determinant(image), determinant(a), label);
  checks.record("rank_invariant", rank(image) == rank(a), rank(image), rank(a), label);
  if (within_perm_cap(a, limits)) {
    checks.equal("permanent_invariant", permanent(image, limits.permanent_cap),
                 permanent(a, limits.permanent_cap), label);
  } else {
    checks.skip("permanent_invariant", cap_reason("permanent", n, limits.permanent_cap));
  }
  checks.equal("char_poly_invariant", char_poly(image), char_poly(a), label);
  if (within_perm_poly_cap(a, limits)) {
    checks.equal("perm_poly_invariant", perm_poly(image, limits), perm_poly(a, limits), label);
  } else {
    checks.skip("perm_poly_invariant", cap_reason("perm_poly", n, limits.perm_poly_cap));
  }
  if (within_subset_cap(a, limits)) {
    for (std::size_t k = 0; k <= n; ++k) {
      checks.equal("principal_minor_sums_invariant", sum_principal_minors(image, k, limits),
                   sum_principal_minors(a, k, limits), label + " k=" + std::to_string(k));
    }
    bool any_perm = false;
    for (std::size_t k = 0; k <= std::min(n, limits.permanent_cap); ++k) {
      checks.equal("principal_permanent_sums_invariant", sum_principal_permanents(image, k, limits),
                   sum_principal_permanents(a, k, limits), label + " k=" + std::to_string(k));
      any_perm = true;
    }
    if (!any_perm) checks.skip("principal_permanent_sums_invariant", "no order within the permanent cap");
  } else {
    checks.skip("principal_minor_sums_invariant", cap_reason("subset sums", n, limits.minor_sum_cap));
    checks.skip("principal_permanent_sums_invariant", cap_reason("subset sums", n, limits.minor_sum_cap));
  }
  if (n <= kEveryPrincipalCap) {
    // One case per sign vector; the sides are the first mismatching index set.
    Json lhs_minor = to_json(principal_minor(image, IndexSet{}));
    Json rhs_minor = lhs_minor;
    Json lhs_perm = lhs_minor;
    Json rhs_perm = lhs_minor;
    bool minors_ok = true;
    bool perms_ok = true;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      const IndexSet s = IndexSet::from_mask(mask, n);
      const Scalar mi = principal_minor(image, s), ma = principal_minor(a, s);
      if (minors_ok && mi != ma) {
        minors_ok = false;
        lhs_minor = Json{{"index_set", s.to_string()}, {"value", mi.to_string()}};
        rhs_minor = Json{{"index_set", s.to_string()}, {"value", ma.to_string()}};
      }
      const Scalar pi = principal_permanent(image, s), pa = principal_permanent(a, s);
      if (perms_ok && pi != pa) {
        perms_ok = false;
        lhs_perm = Json{{"index_set", s.to_string()}, {"value", pi.to_string()}};
        rhs_perm = Json{{"index_set", s.to_string()}, {"value", pa.to_string()}};
      }
      if (mask + 1 == (std::uint64_t{1} << n) && minors_ok) {
        lhs_minor = Json{{"index_set", s.to_string()}, {"value", mi.to_string()}};
        rhs_minor = Json{{"index_set", s.to_string()}, {"value", ma.to_string()}};
      }
      if (mask + 1 == (std::uint64_t{1} << n) && perms_ok) {
        lhs_perm = Json{{"index_set", s.to_string()}, {"value", pi.to_string()}};
        rhs_perm = Json{{"index_set", s.to_string()}, {"value", pa.to_string()}};
      }
    }
    checks.record("every_principal_minor_invariant", minors_ok, lhs_minor, rhs_minor, label);
    checks.record("every_principal_permanent_invariant", perms_ok, lhs_perm, rhs_perm, label);
  } else {
    checks.skip("every_principal_minor_invariant", cap_reason("index sets", n, kEveryPrincipalCap));
    checks.skip("every_principal_permanent_invariant", cap_reason("index sets", n, kEveryPrincipalCap));
  }
}

void check_coefficient_laws(CheckList& checks, const Matrix& a, const Limits& limits) {
  const std::size_t n = a.rows();
  const Polynomial p = char_poly(a);
  checks.equal("char_poly_at_zero_equals_determinant", p.evaluate(Scalar(0)), determinant(a));
  checks.equal("char_poly_leading_coefficient", p.coefficient(n), sign_power(n));
  if (within_subset_cap(a, limits)) {
    for (std::size_t k = 0; k <= n; ++k) {
      checks.equal("char_poly_coefficients_are_minor_sums", p.coefficient(n - k),
                   sign_power(n - k) * sum_principal_minors(a, k, limits), "k=" + std::to_string(k));
    }
  } else {
    checks.skip("char_poly_coefficients_are_minor_sums", cap_reason("subset sums", n, limits.minor_sum_cap));
  }
  if (within_perm_poly_cap(a, limits) && within_perm_cap(a, limits)) {
    const Polynomial q = perm_poly(a, limits);
    checks.equal("perm_poly_at_zero_equals_permanent", q.evaluate(Scalar(0)),
                 permanent(a, limits.permanent_cap));
    checks.equal("perm_poly_leading_coefficient", q.coefficient(n), sign_power(n));
  } else {
    checks.skip("perm_poly_at_zero_equals_permanent", cap_reason("perm_poly", n, limits.perm_poly_cap));
    checks.skip("perm_poly_leading_coefficient", cap_reason("perm_poly", n, limits.perm_poly_cap));
  }
}

Json additivity_json(const AdditivityCheck& c) {
  Json j;
  j["lhs"] = c.lhs.to_string();
  j["rhs_sym"] = c.rhs_sym.to_string();
  j["rhs_antisym"] = c.rhs_antisym.to_string();
  j["holds"] = c.holds();
  return j;
}

void record_additivity(CheckList& checks, const std::string& name, const AdditivityCheck& c,
                       const std::string& label) {
  checks.record(name, c.holds(), to_json(c.lhs), to_json(c.rhs_sym + c.rhs_antisym), label);
}

void check_phi_split(CheckList& checks, const Matrix& a, const SignVector& c, const Limits& limits,
                     const std::string& label) {
  const std::size_t n = a.rows();
  const auto parts = split(a, c);
  checks.equal("split_reconstructs_input", parts.sym_part + parts.antisym_part, a, label);
  checks.equal("phi_fixes_sym_part", apply_phi(parts.sym_part, c), parts.sym_part, label);
  checks.equal("phi_negates_antisym_part", apply_phi(parts.antisym_part, c), -parts.antisym_part, label);
  checks.equal("sym_mask_equals_average", parts.sym_part, sym_part_by_averaging(a, c), label);
  checks.equal("antisym_mask_equals_average", parts.antisym_part, antisym_part_by_averaging(a, c), label);
  bool zero_diag = true;
  for (std::size_t i = 0; i < n; ++i) zero_diag = zero_diag && parts.antisym_part(i, i).is_zero();
  checks.record("antisym_part_has_zero_diagonal", zero_diag, to_json(parts.antisym_part),
                "zero diagonal", label);

  const SubspaceDims formula = subspace_dims(n, c.count_plus());
  const SubspaceDims counted = mask_dims(c);
  checks.record("subspace_dims_match_masks", formula == counted,
                Json::array({formula.sym, formula.antisym}), Json::array({counted.sym, counted.antisym}),
                label);

  // Product table: Sym*Sym, AntiSym*AntiSym -> Sym; mixed -> AntiSym.
  const Matrix& s = parts.sym_part;
  const Matrix& t = parts.antisym_part;
  // Membership is tested directly because a zero product belongs to both classes.
  auto product_class = [&](const std::string& name, const Matrix& x, const Matrix& y, SymmetryClass want) {
    const Matrix p = matrix_product(x, y);
    const Matrix expected = want == SymmetryClass::SymUnderPhi ? p : -p;
    checks.equal(name, apply_phi(p, c), expected, label);
  };
  product_class("product_sym_sym_is_sym", s, s, SymmetryClass::SymUnderPhi);
  product_class("product_sym_antisym_is_antisym", s, t, SymmetryClass::AntiSymUnderPhi);
  product_class("product_antisym_sym_is_antisym", t, s, SymmetryClass::AntiSymUnderPhi);
  product_class("product_antisym_antisym_is_sym", t, t, SymmetryClass::SymUnderPhi);
  {
    const SymmetryClass got = classify(Matrix::identity(n), c);
    checks.record("identity_is_sym", got == SymmetryClass::SymUnderPhi, std::string(to_string(got)),
                  std::string(to_string(SymmetryClass::SymUnderPhi)), label);
  }

  if (n >= 2 && n <= 62) {
    record_additivity(checks, "order2_minor_sum_additive", minor2_additivity(a, c), label);
    record_additivity(checks, "order2_permanent_sum_additive", permanent2_additivity(a, c), label);
    const Polynomial pa = char_poly(a), ps = char_poly(s), pt = char_poly(t);
    checks.equal("char_poly_subleading_coefficient_additive", pa.coefficient(n - 2),
                 ps.coefficient(n - 2) + pt.coefficient(n - 2), label);
    if (within_perm_poly_cap(a, limits)) {
      const Polynomial qa = perm_poly(a, limits), qs = perm_poly(s, limits), qt = perm_poly(t, limits);
      checks.equal("perm_poly_subleading_coefficient_additive", qa.coefficient(n - 2),
                   qs.coefficient(n - 2) + qt.coefficient(n - 2), label);
    } else {
      checks.skip("perm_poly_subleading_coefficient_additive",
                  cap_reason("perm_poly", n, limits.perm_poly_cap));
    }
  }
}

void check_classic_split(CheckList& checks, const Matrix& a) {
  const auto parts = classic_split(a);
  checks.equal("classic_split_reconstructs_input", parts.sym_part + parts.antisym_part, a);
  checks.equal("classic_sym_part_is_symmetric", parts.sym_part.transpose(), parts.sym_part);
  checks.equal("classic_antisym_part_is_antisymmetric", parts.antisym_part.transpose(), -parts.antisym_part);
  if (a.rows() >= 2 && a.rows() <= 62) {
    record_additivity(checks, "classic_order2_minor_sum_additive", minor2_additivity_classic(a), {});
    record_additivity(checks, "classic_order2_permanent_sum_additive", permanent2_additivity_classic(a), {});
  }
}

Json partition_json(const IndexPartition& p) {
  Json j;
  j["plus"] = p.plus_indices.indices();
  j["minus"] = p.minus_indices.indices();
  j["r"] = p.r();
  return j;
}

Json sym_form_json(const SymBlockForm& f) {
  Json j;
  j["partition"] = partition_json(f.partition);
  j["permutation"] = f.permutation.to_string();
  j["permutation_matrix"] = to_json(f.permutation.to_matrix());
  j["D"] = to_json(f.d);
  j["E"] = to_json(f.e);
  j["conjugated"] = to_json(f.conjugated);
  return j;
}

Json antisym_form_json(const AntiSymBlockForm& f) {
  Json j;
  j["partition"] = partition_json(f.partition);
  j["permutation"] = f.permutation.to_string();
  j["permutation_matrix"] = to_json(f.permutation.to_matrix());
  j["F"] = to_json(f.f);
  j["G"] = to_json(f.g);
  j["H"] = to_json(f.assembled());
  j["conjugated"] = to_json(f.conjugated);
  return j;
}

void check_sym_form(CheckList& checks, const Matrix& a, const SignVector& c, const Limits& limits,
                    const std::string& label, Json* results) {
  const SymBlockForm form = sym_block_form(a, c);
  checks.equal("conjugated_equals_block_diagonal", form.conjugated, form.assembled(), label);
  const SymFactorization f = factor_invariants_sym(a, c, limits);
  checks.equal("char_poly_factorizes_over_blocks", f.char_poly_a, f.char_poly_blocks, label);
  checks.equal("determinant_factorizes_over_blocks", f.det_a, f.det_blocks, label);
  if (f.perm_a) {
    checks.equal("permanent_factorizes_over_blocks", *f.perm_a, *f.perm_blocks, label);
  } else {
    checks.skip("permanent_factorizes_over_blocks", cap_reason("permanent", a.rows(), limits.permanent_cap));
  }
  if (results) {
    *results = sym_form_json(form);
    Json fact;
    fact["char_poly"] = to_json(f.char_poly_a);
    fact["char_poly_D_times_E"] = to_json(f.char_poly_blocks);
    fact["det"] = to_json(f.det_a);
    fact["det_D_times_E"] = to_json(f.det_blocks);
    if (f.perm_a) {
      fact["perm"] = to_json(*f.perm_a);
      fact["perm_D_times_E"] = to_json(*f.perm_blocks);
    }
    (*results)["factorization"] = std::move(fact);
  }
}

void check_antisym_form(CheckList& checks, const Matrix& a, const SignVector& c, const Limits& limits,
                        const std::string& label, Json* results) {
  const AntiSymBlockForm form = antisym_block_form(a, c);
  checks.equal("conjugated_equals_anti_diagonal", form.conjugated, form.assembled(), label);
  const AntiSymFactorization f = factor_invariants_antisym(a, c, limits);
  if (f.balanced()) {
    checks.equal("determinant_equals_signed_block_product", f.det_a, *f.det_blocks, label);
    if (f.perm_a) {
      checks.equal("permanent_factorizes_over_blocks", *f.perm_a, *f.perm_blocks, label);
    } else {
      checks.skip("permanent_factorizes_over_blocks", cap_reason("permanent", a.rows(), limits.permanent_cap));
    }
  } else {
    checks.equal("unbalanced_determinant_vanishes", f.det_a, Scalar(0), label);
    if (f.perm_a) {
      checks.equal("unbalanced_permanent_vanishes", *f.perm_a, Scalar(0), label);
    } else {
      checks.skip("unbalanced_permanent_vanishes", cap_reason("permanent", a.rows(), limits.permanent_cap));
    }
  }
  if (results) {
    *results = antisym_form_json(form);
    Json fact;
    fact["n"] = f.n;
    fact["r"] = f.r;
    fact["balanced"] = f.balanced();
    fact["det"] = to_json(f.det_a);
    if (f.perm_a) fact["perm"] = to_json(*f.perm_a);
    if (f.balanced()) {
      fact["det_signed_F_times_G"] = to_json(*f.det_blocks);
      if (f.perm_blocks) fact["perm_F_times_G"] = to_json(*f.perm_blocks);
      Json note;
      note["sign"] = "(-1)^n";
      note["value"] = to_json(*f.det_blocks_sign_n);
      note["holds"] = f.sign_n_holds();
      fact["alternative_sign_convention"] = std::move(note);
    }
    (*results)["factorization"] = std::move(fact);
  }
}

void check_orbit(CheckList& checks, const Matrix& a, const Limits& limits, Json* results) {
  const std::size_t n = a.rows();
  const OrbitReport report = orbit_size(a, limits);
  const mpz_class total = mpz_class(1) << static_cast<mp_bitcnt_t>(n - 1);
  checks.record("orbit_times_stabilizer_is_group_order", report.orbit_size * report.stabilizer_size == total,
                mpz_class(report.orbit_size * report.stabilizer_size).get_str(), total.get_str());
  if (results) {
    const ComponentLabeling comp = graph_components(a);
    (*results)["labels"] = comp.labels;
    (*results)["t"] = report.t;
    (*results)["orbit_size"] = report.orbit_size.get_str();
    (*results)["stabilizer_size"] = report.stabilizer_size.get_str();
  }
  if (report.enumerated) {
    checks.record("enumerated_orbit_size", report.enumeration_matches(), report.enumerated->size(),
                  report.orbit_size.get_str());
    const auto constructive = stabilizer_elements(a, limits);
    const auto brute = brute_force_stabilizer(a, limits);
    auto as_json = [](const std::vector<SignVector>& v) {
      Json out = Json::array();
      for (const auto& c : v) out.push_back(c.to_string());
      return out;
    };
    checks.record("constructive_stabilizer_equals_brute_force", constructive == brute, as_json(constructive),
                  as_json(brute));
    checks.record("stabilizer_size", mpz_class(brute.size()) == report.stabilizer_size, brute.size(),
                  report.stabilizer_size.get_str());
    if (results) {
      (*results)["stabilizer"] = as_json(constructive);
      Json orbit = Json::array();
      for (const auto& m : *report.enumerated) orbit.push_back(to_json(m));
      (*results)["enumerated"] = std::move(orbit);
    }
  } else {
    const std::string reason = cap_reason("orbit enumeration", n, limits.orbit_cap);
    checks.skip("enumerated_orbit_size", reason);
    checks.skip("constructive_stabilizer_equals_brute_force", reason);
    checks.skip("stabilizer_size", reason);
    if (results) (*results)["enumerated"] = omitted(reason);
  }
}

void check_group_axioms(CheckList& checks, const std::vector<GroupElement>& elements) {
  if (elements.empty()) return;
  const std::size_t n = elements.front().degree();
  const GroupElement id = identity_element(n);
  for (const auto& g : elements) {
    checks.equal("element_has_order_two", compose(g, g), id, g.signs().to_string());
    checks.equal("identity_is_neutral", compose(id, g), g, g.signs().to_string());
  }
  for (const auto& g : elements) {
    for (const auto& h : elements) {
      const std::string label = g.signs().to_string() + "*" + h.signs().to_string();
      const GroupElement gh = compose(g, h);
      checks.equal("composition_commutes", gh, compose(h, g), label);
      std::string x = to_bits(g);
      const std::string hb = to_bits(h);
      for (std::size_t k = 0; k < x.size(); ++k) x[k] = (x[k] == hb[k]) ? '0' : '1';
      checks.record("bits_are_xor_homomorphic", to_bits(gh) == x, to_bits(gh), x, label);
    }
  }
}

std::vector<SignVector> verify_sign_list(std::size_t n, const ReportOptions& o, std::string* mode) {
  std::vector<SignVector> out;
  if (o.samples == 0 && n <= kVerifyExhaustiveCap) {
    *mode = "exhaustive";
    for (std::uint64_t idx = 0; idx < SignVector::admissible_count(n); ++idx) {
      out.push_back(SignVector::from_index(n, idx));
    }
    return out;
  }
  *mode = "sampled";
  const std::size_t count = o.samples == 0 ? kVerifyDefaultSamples : o.samples;
  std::mt19937_64 rng(o.seed);
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<std::int8_t> signs(n, 1);
    for (std::size_t k = 1; k < n; ++k) signs[k] = (rng() & 1U) ? -1 : 1;
    out.emplace_back(std::move(signs));
  }
  return out;
}

}  // namespace

Report report_apply(const Matrix& a, const ReportOptions& o) {
  const SignVector& c = require_signs(a, o, "apply");
  CheckList checks;
  Json results;
  results["phi"] = to_json(apply_phi(a, c));
  check_conjugation(checks, a, c, c.to_string());
  return finish("apply", input_json(a), options_json(o), std::move(results), checks);
}

Report report_invariants(const Matrix& a, const ReportOptions& o) {
  require_square(a, "invariants");
  const Limits& limits = o.limits;
  const std::size_t n = a.rows();
  CheckList checks;
  Json results;
  results["trace"] = to_json(trace(a));
  results["determinant"] = to_json(determinant(a));
  results["permanent"] = within_perm_cap(a, limits) ? to_json(permanent(a, limits.permanent_cap))
                                                     : omitted(cap_reason("permanent", n, limits.permanent_cap));
  results["rank"] = rank(a);
  results["char_poly"] = to_json(char_poly(a));
  results["perm_poly"] = within_perm_poly_cap(a, limits)
                             ? to_json(perm_poly(a, limits))
                             : omitted(cap_reason("perm_poly", n, limits.perm_poly_cap));
  check_coefficient_laws(checks, a, limits);
  if (o.signs) {
    const SignVector& c = require_signs(a, o, "invariants");
    check_invariance(checks, a, apply_phi(a, c), limits, c.to_string());
  }
  return finish("invariants", input_json(a), options_json(o), std::move(results), checks);
}

Report report_decompose(const Matrix& a, const ReportOptions& o) {
  require_square(a, "decompose");
  CheckList checks;
  Json results;
  Json opts = options_json(o);
  opts["classic"] = o.classic;
  if (o.classic) {
    const auto parts = classic_split(a);
    results["split"] = "transpose";
    results["sym_part"] = to_json(parts.sym_part);
    results["antisym_part"] = to_json(parts.antisym_part);
    if (a.rows() >= 2) {
      results["order2_minor_sums"] = additivity_json(minor2_additivity_classic(a));
      results["order2_permanent_sums"] = additivity_json(permanent2_additivity_classic(a));
    }
    check_classic_split(checks, a);
  } else {
    const SignVector& c = require_signs(a, o, "decompose");
    const auto parts = split(a, c);
    const SubspaceDims dims = subspace_dims(a.rows(), c.count_plus());
    results["split"] = "signs";
    results["sym_part"] = to_json(parts.sym_part);
    results["antisym_part"] = to_json(parts.antisym_part);
    results["classification"] = std::string(to_string(classify(a, c)));
    results["dims"] = Json{{"r", c.count_plus()}, {"sym", dims.sym}, {"antisym", dims.antisym}};
    if (a.rows() >= 2) {
      results["order2_minor_sums"] = additivity_json(minor2_additivity(a, c));
      results["order2_permanent_sums"] = additivity_json(permanent2_additivity(a, c));
    }
    check_phi_split(checks, a, c, o.limits, c.to_string());
  }
  return finish("decompose", input_json(a), std::move(opts), std::move(results), checks);
}

Report report_blockform(const Matrix& a, const ReportOptions& o) {
  const SignVector& c = require_signs(a, o, "blockform");
  CheckList checks;
  Json results;
  Json opts = options_json(o);
  opts["kind"] = o.block_kind == BlockKind::Sym ? "sym" : (o.block_kind == BlockKind::AntiSym ? "antisym" : "auto");

  const SymmetryClass cls = classify(a, c);
  results["classification"] = std::string(to_string(cls));
  const Matrix image = apply_phi(a, c);

  bool want_sym = false;
  bool want_antisym = false;
  switch (o.block_kind) {
    case BlockKind::Auto:
      checks.record("sym_or_antisym_under_phi", cls != SymmetryClass::Neither, to_json(image), to_json(a));
      want_sym = cls == SymmetryClass::SymUnderPhi;
      want_antisym = cls == SymmetryClass::AntiSymUnderPhi;
      break;
    case BlockKind::Sym:
      checks.record("sym_under_phi", cls == SymmetryClass::SymUnderPhi, to_json(image), to_json(a));
      want_sym = cls == SymmetryClass::SymUnderPhi;
      break;
    case BlockKind::AntiSym:
      // The zero matrix is reported as Sym but also qualifies here.
      checks.record("antisym_under_phi", image == -a, to_json(image), to_json(-a));
      want_antisym = image == -a;
      break;
  }

  Json form;
  if (want_sym) {
    check_sym_form(checks, a, c, o.limits, c.to_string(), &form);
    results["form"] = "block_diagonal";
    results["block_form"] = std::move(form);
  } else if (want_antisym) {
    check_antisym_form(checks, a, c, o.limits, c.to_string(), &form);
    results["form"] = "anti_diagonal";
    results["block_form"] = std::move(form);
  } else {
    results["form"] = "none";
    results["partition"] = partition_json(index_partition(c));
    results["permutation"] = block_permutation(c).to_string();
  }
  return finish("blockform", input_json(a), std::move(opts), std::move(results), checks);
}

Report report_orbit(const Matrix& a, const ReportOptions& o) {
  require_square(a, "orbit");
  CheckList checks;
  Json results;
  check_orbit(checks, a, o.limits, &results);
  return finish("orbit", input_json(a), options_json(o), std::move(results), checks);
}

Report report_cayley(const ReportOptions& o) {
  const CayleyTable table = cayley_table(o.cayley_n);
  CheckList checks;
  Json results;
  results["n"] = o.cayley_n;
  results["order"] = table.order.size();
  Json elements = Json::array();
  for (std::size_t k = 0; k < table.order.size(); ++k) {
    elements.push_back(Json{{"label", table.labels[k]},
                            {"signs", table.order[k].signs().to_string()},
                            {"bits", to_bits(table.order[k])}});
  }
  results["elements"] = std::move(elements);
  Json rows = Json::array();
  for (std::size_t i = 0; i < table.order.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < table.order.size(); ++j) row.push_back(table.labels[table.cells[i][j]]);
    rows.push_back(std::move(row));
  }
  results["table"] = std::move(rows);

  for (std::size_t i = 0; i < table.order.size(); ++i) {
    for (std::size_t j = 0; j < table.order.size(); ++j) {
      checks.record("table_symmetric", table.cells[i][j] == table.cells[j][i], table.labels[table.cells[i][j]],
                    table.labels[table.cells[j][i]]);
    }
    checks.equal("diagonal_is_identity", table.at(i, i), identity_element(o.cayley_n));
  }
  check_group_axioms(checks, table.order);
  checks.record("distinct_maps_on_all_ones", count_distinct_maps(o.cayley_n) == table.order.size(),
                count_distinct_maps(o.cayley_n), table.order.size());
  Json opts;
  opts["n"] = o.cayley_n;
  return finish("cayley", Json(), std::move(opts), std::move(results), checks);
}

Report report_verify(const Matrix& a, const ReportOptions& o) {
  require_square(a, "verify");
  if (a.rows() == 0) throw Error(ErrorCode::Empty, "verify needs n >= 1");
  const Limits& limits = o.limits;
  const std::size_t n = a.rows();
  CheckList checks;
  Json results;

  std::string mode;
  const std::vector<SignVector> signs = verify_sign_list(n, o, &mode);
  results["sign_vectors"] = Json{{"mode", mode}, {"count", signs.size()}};

  // Matrix-independent and c-independent checks.
  check_coefficient_laws(checks, a, limits);
  if (n >= 2) check_classic_split(checks, a);
  if (n <= kGroupExhaustiveCap) {
    check_group_axioms(checks, group_elements(n));
    checks.record("distinct_maps_on_all_ones", count_distinct_maps(n) == SignVector::admissible_count(n),
                  count_distinct_maps(n), SignVector::admissible_count(n));
  } else {
    std::vector<GroupElement> elements;
    for (const auto& c : signs) elements.emplace_back(c);
    check_group_axioms(checks, elements);
    checks.skip("distinct_maps_on_all_ones", cap_reason("map count witness", n, kGroupExhaustiveCap));
  }
  Json orbit;
  check_orbit(checks, a, limits, &orbit);
  orbit.erase("enumerated");
  results["orbit"] = std::move(orbit);

  for (std::size_t s = 0; s < signs.size(); ++s) {
    const SignVector& c = signs[s];
    const std::string label = c.to_string();
    const Matrix image = apply_phi(a, c);
    check_conjugation(checks, a, c, label);
    check_ring_map(checks, a, c, label);
    {
      const SignVector& d = signs[(s + 1) % signs.size()];
      const GroupElement cd = compose(GroupElement(c), GroupElement(d));
      checks.equal("composition_acts_as_product_map", apply_phi(apply_phi(a, c), d),
                   apply_phi(a, cd.signs()), label + "*" + d.to_string());
    }
    check_invariance(checks, a, image, limits, label);
    check_phi_split(checks, a, c, limits, label);
    const auto parts = split(a, c);
    check_sym_form(checks, parts.sym_part, c, limits, label, nullptr);
    check_antisym_form(checks, parts.antisym_part, c, limits, label, nullptr);
    const SymmetryClass cls = classify(a, c);
    if (cls == SymmetryClass::SymUnderPhi) check_sym_form(checks, a, c, limits, label, nullptr);
    if (cls == SymmetryClass::AntiSymUnderPhi) check_antisym_form(checks, a, c, limits, label, nullptr);
  }

  Json opts = options_json(o);
  opts["samples"] = o.samples;
  opts["seed"] = o.seed;
  return finish("verify", input_json(a), std::move(opts), std::move(results), checks);
}

}  // namespace sigconj
