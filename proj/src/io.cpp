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

#include "sigconj/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "json_util.hpp"
#include "sigconj/error.hpp"

namespace sigconj {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string where(std::size_t line) { return "line " + std::to_string(line) + ": "; }

Scalar entry_from_json(const nlohmann::json& v, std::size_t i, std::size_t j) {
  const std::string at = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (v.is_string()) {
    try {
      return Scalar::parse(v.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, at + ": " + e.what());
    }
  }
  throw Error(ErrorCode::ParseError, at + " must be an integer or a \"p/q\" string");
}

}  // namespace

Matrix parse_matrix_csv(std::string_view text) {
  std::vector<Scalar> entries;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    std::size_t count = 0;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view token = trim(rest.substr(0, comma));
      if (token.empty()) throw Error(ErrorCode::ParseError, where(line_no) + "empty entry");
      try {
        entries.push_back(Scalar::parse(token));
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, where(line_no) + e.what());
      }
      ++count;
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      throw Error(ErrorCode::ParseError, where(line_no) + "row has " + std::to_string(count) +
                                             " entries, expected " + std::to_string(cols));
    }
    ++rows;
  }
  if (rows == 0) throw Error(ErrorCode::Empty, "CSV input has no matrix rows");
  return Matrix(rows, cols, std::move(entries));
}

Matrix parse_matrix_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed matrix document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries")) {
    throw Error(ErrorCode::ParseError, "matrix document needs \"n\" and \"entries\"");
  }
  if (!doc["n"].is_number_unsigned() || (doc.contains("m") && !doc["m"].is_number_unsigned())) {
    throw Error(ErrorCode::ParseError, "\"n\" and \"m\" must be non-negative integers");
  }
  const auto rows = doc["n"].get<std::size_t>();
  const auto cols = doc.contains("m") ? doc["m"].get<std::size_t>() : rows;
  const auto& body = doc["entries"];
  if (!body.is_array() || body.size() != rows) {
    throw Error(ErrorCode::ParseError, "\"entries\" must hold " + std::to_string(rows) + " rows");
  }
  std::vector<Scalar> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = body[i];
    if (!row.is_array() || row.size() != cols) {
      throw Error(ErrorCode::ParseError, "row " + std::to_string(i + 1) + " must hold " +
                                             std::to_string(cols) + " entries");
    }
    for (std::size_t j = 0; j < cols; ++j) entries.push_back(entry_from_json(row[j], i, j));
  }
  return Matrix(rows, cols, std::move(entries));
}

Matrix parse_matrix(std::string_view text, MatrixFormat format) {
  if (format == MatrixFormat::Auto) {
    const auto first = text.find_first_not_of(" \t\r\n");
    format = (first != std::string_view::npos && text[first] == '{') ? MatrixFormat::Json
                                                                      : MatrixFormat::Csv;
  }
  return format == MatrixFormat::Json ? parse_matrix_json(text) : parse_matrix_csv(text);
}

Matrix load_matrix(const std::filesystem::path& path, MatrixFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open matrix file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (format == MatrixFormat::Auto) {
    format = path.extension() == ".json" ? MatrixFormat::Json : MatrixFormat::Csv;
  }
  try {
    return parse_matrix(buffer.str(), format);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string render_csv(const Matrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ',';
      out += a(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Matrix& a) { return detail::matrix_document(a).dump(); }

namespace detail {

Json matrix_document(const Matrix& a) {
  Json doc;
  doc["n"] = a.rows();
  if (!a.is_square()) doc["m"] = a.cols();
  Json body = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).to_string());
    body.push_back(std::move(row));
  }
  doc["entries"] = std::move(body);
  return doc;
}

}  // namespace detail

}  // namespace sigconj
