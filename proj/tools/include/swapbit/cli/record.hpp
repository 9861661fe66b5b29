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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "swapbit/cli/config.hpp"
#include "swapbit/matrix.hpp"

namespace swapbit::cli {

/// Empty fields serialize as JSON null and as an empty CSV cell.
using Field = std::variant<std::monostate, bool, std::int64_t, std::uint64_t, double, std::string, ComplexMatrix>;

/// One output row. Field order is the serialization order.
class Record {
 public:
  Record& add(std::string name, Field value);
  const Field* find(std::string_view name) const;
  const std::vector<std::pair<std::string, Field>>& fields() const { return fields_; }

 private:
  std::vector<std::pair<std::string, Field>> fields_;
};

/// Shortest-safe decimal form with 17 significant digits.
std::string format_double(double v);

/// Matrices: JSON [[re, im], ...] row-major; CSV a single cell "re im re im ...".
void write_json_line(std::ostream& os, const Record& r);
void write_csv_header(std::ostream& os, const Record& r);
void write_csv_row(std::ostream& os, const Record& r);
/// CSV: header from the first record, then one row per record.
void write_records(std::ostream& os, const std::vector<Record>& records, Format format);
std::string render_records(const std::vector<Record>& records, Format format);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index by name; throws std::out_of_range.
  std::size_t column(std::string_view name) const;
};

/// RFC 4180 subset: quoted fields with doubled quotes, no embedded newlines.
CsvTable parse_csv(std::string_view text);

}  // namespace swapbit::cli
