// Copyright 2026 The swapbit Authors
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


#include "swapbit/cli/kraus_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "swapbit/cli/config.hpp"
#include "swapbit/cli/record.hpp"

namespace swapbit::cli {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw KrausParseError(field + ": " + what, 0, field);
}

std::size_t require_count(const json& root, const char* key) {
  if (!root.contains(key)) field_error(key, "missing");
  const json& v = root.at(key);
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) field_error(key, "must be a positive integer");
  return v.get<std::size_t>();
}

double require_number(const json& v, const std::string& field) {
  if (!v.is_number()) field_error(field, "must be a number");
  return v.get<double>();
}

}  // namespace

KrausFile parse_kraus_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < upto; ++i)
      if (text[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    throw KrausParseError("line " + std::to_string(line) + ", column " + std::to_string(upto - line_start + 1) +
                              ": " + e.what(),
                          line, "");
  }
  if (!root.is_object()) field_error("/", "top level must be an object");

  if (!root.contains("format_version")) field_error("format_version", "missing");
  if (!root.at("format_version").is_number_integer() ||
      root.at("format_version").get<std::int64_t>() != kKrausFormatVersion) {
    field_error("format_version", "unsupported, expected " + std::to_string(kKrausFormatVersion));
  }
  const std::size_t n = require_count(root, "n_settings");
  const std::size_t dim = require_count(root, "dim");
  if (dim > kMaxDimension) field_error("dim", "exceeds " + std::to_string(kMaxDimension));
  if (dim != n * (n + 1)) {
    field_error("dim", "must equal n_settings * (n_settings + 1) = " + std::to_string(n * (n + 1)));
  }

  if (!root.contains("operators")) field_error("operators", "missing");
  const json& ops = root.at("operators");
  if (!ops.is_array() || ops.empty()) field_error("operators", "must be a non-empty array");

  std::vector<ComplexMatrix> matrices;
  matrices.reserve(ops.size());
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const std::string base = "operators[" + std::to_string(k) + "]";
    const json& op = ops[k];
    if (!op.is_array()) field_error(base, "must be an array of [re, im] pairs");
    if (op.size() != dim * dim) {
      field_error(base, "has " + std::to_string(op.size()) + " entries, expected dim*dim = " +
                            std::to_string(dim * dim));
    }
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim * dim; ++i) {
      const std::string field = base + "[" + std::to_string(i) + "]";
      const json& z = op[i];
      if (!z.is_array() || z.size() != 2) field_error(field, "must be a [re, im] pair");
      const Complex value{require_number(z[0], field + "[0]"), require_number(z[1], field + "[1]")};
      m(i / dim, i % dim) = value;
    }
    matrices.push_back(std::move(m));
  }

  for (const auto& [key, v] : root.items()) {
    if (key != "format_version" && key != "n_settings" && key != "dim" && key != "operators") {
      field_error(key, "unknown field");
    }
  }

  return KrausFile{n, KrausSet(std::move(matrices))};
}

KrausFile read_kraus_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read Kraus file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw IoError("error reading Kraus file '" + path + "'");
  return parse_kraus_json(text.str());
}

std::string kraus_to_json(std::span<const ComplexMatrix> operators, std::size_t n_settings) {
  const std::size_t dim = operators.empty() ? 0 : operators.front().rows();
  std::ostringstream os;
  os << "{\n  \"format_version\": " << kKrausFormatVersion << ",\n  \"n_settings\": " << n_settings
     << ",\n  \"dim\": " << dim << ",\n  \"operators\": [";
  for (std::size_t k = 0; k < operators.size(); ++k) {
    os << (k ? ",\n    [" : "\n    [");
    const auto e = operators[k].entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) os << (i % dim == 0 ? ",\n     " : ", ");
      os << '[' << format_double(e[i].real()) << ", " << format_double(e[i].imag()) << ']';
    }
    os << ']';
  }
  os << "\n  ]\n}\n";
  return os.str();
}

std::string kraus_to_json(const KrausSet& kraus, std::size_t n_settings) {
  return kraus_to_json(std::span<const ComplexMatrix>(kraus.operators()), n_settings);
}

}  // namespace swapbit::cli
