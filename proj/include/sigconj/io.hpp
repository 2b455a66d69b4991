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

#include <filesystem>
#include <string>
#include <string_view>

#include "sigconj/matrix.hpp"

namespace sigconj {

enum class MatrixFormat { Auto, Csv, Json };

/// One row per line; entries separated by commas, integers or "p/q". Blank
/// lines and lines starting with '#' are skipped.
Matrix parse_matrix_csv(std::string_view text);

/// {"n": rows, "m": cols (optional, defaults to n), "entries": [[...], ...]}.
/// Entries may be JSON integers or strings holding an integer or "p/q".
Matrix parse_matrix_json(std::string_view text);

/// Auto picks JSON when the first non-blank character is '{'.
Matrix parse_matrix(std::string_view text, MatrixFormat format = MatrixFormat::Auto);

/// Auto picks by extension (.json, otherwise CSV). Errors: IoError, ParseError.
Matrix load_matrix(const std::filesystem::path& path, MatrixFormat format = MatrixFormat::Auto);

std::string render_csv(const Matrix& a);
/// Compact matrix document; re-parses to an identical Matrix.
std::string render_json(const Matrix& a);

}  // namespace sigconj
