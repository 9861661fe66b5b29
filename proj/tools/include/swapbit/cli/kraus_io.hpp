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


#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "swapbit/gates.hpp"

namespace swapbit::cli {

inline constexpr int kKrausFormatVersion = 1;

/// Malformed Kraus file. line() is 0 when the error is structural (field() is then set).
class KrausParseError : public std::runtime_error {
 public:
  KrausParseError(const std::string& what, std::size_t line, std::string field)
      : std::runtime_error(what), line_(line), field_(std::move(field)) {}
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

struct KrausFile {
  std::size_t n_settings;
  KrausSet kraus;
};

/// Schema: {"format_version": 1, "n_settings": N, "dim": D,
///          "operators": [[[re, im], ... D*D row-major], ...]}.
/// Throws KrausParseError, or NotAChannelError when completeness fails.
KrausFile parse_kraus_json(std::string_view text);
/// Throws IoError when the file cannot be read.
KrausFile read_kraus_file(const std::string& path);

/// Raw overload writes operators without validating completeness.
std::string kraus_to_json(std::span<const ComplexMatrix> operators, std::size_t n_settings);
std::string kraus_to_json(const KrausSet& kraus, std::size_t n_settings);

}  // namespace swapbit::cli
