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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "sigconj/invariants.hpp"
#include "sigconj/matrix.hpp"
#include "sigconj/sign_vector.hpp"

namespace sigconj {

enum class BlockKind { Auto, Sym, AntiSym };

struct ReportOptions {
  Limits limits;
  std::optional<SignVector> signs;
  bool classic = false;          // decompose: transpose split instead of phi_c split
  BlockKind block_kind = BlockKind::Auto;
  std::size_t samples = 0;       // verify: 0 means every c when n <= 8
  std::uint64_t seed = 1;
  std::size_t cayley_n = 0;
};

/// A rendered JSON report plus whether any check in it failed.
struct Report {
  std::string text;
  bool checks_failed = false;
};

/// Largest n for which verify walks every admissible sign vector.
inline constexpr std::size_t kVerifyExhaustiveCap = 8;
/// Random sign vectors drawn by verify above that cap when --samples is 0.
inline constexpr std::size_t kVerifyDefaultSamples = 16;

Report report_apply(const Matrix& a, const ReportOptions& options);
Report report_invariants(const Matrix& a, const ReportOptions& options);
Report report_decompose(const Matrix& a, const ReportOptions& options);
Report report_blockform(const Matrix& a, const ReportOptions& options);
Report report_orbit(const Matrix& a, const ReportOptions& options);
Report report_cayley(const ReportOptions& options);
Report report_verify(const Matrix& a, const ReportOptions& options);

}  // namespace sigconj
