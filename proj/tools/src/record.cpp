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


#include "swapbit/cli/record.hpp"

#include <charconv>
#include <cstdio>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace swapbit::cli {

Record& Record::add(std::string name, Field value) {
  fields_.emplace_back(std::move(name), std::move(value));
  return *this;
}

const Field* Record::find(std::string_view name) const {
  for (const auto& [k, v] : fields_)
    if (k == name) return &v;
  return nullptr;
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

void write_json_string(std::ostream& os, std::string_view s) {
  os << '"';
  for (char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      case '\r': os << "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", static_cast<unsigned>(c));
          os << buf;
        } else {
          os << c;
        }
    }
  }
  os << '"';
}

void write_json_number(std::ostream& os, double v) {
  if (std::isfinite(v)) {
    os << format_double(v);
  } else {
    os << "null";
  }
}

struct JsonValue {
  std::ostream& os;
  void operator()(std::monostate) const { os << "null"; }
  void operator()(bool b) const { os << (b ? "true" : "false"); }
  void operator()(std::int64_t v) const { os << v; }
  void operator()(std::uint64_t v) const { os << v; }
  void operator()(double v) const { write_json_number(os, v); }
  void operator()(const std::string& s) const { write_json_string(os, s); }
  void operator()(const ComplexMatrix& m) const {
    os << '[';
    const auto e = m.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) os << ',';
      os << '[';
      write_json_number(os, e[i].real());
      os << ',';
      write_json_number(os, e[i].imag());
      os << ']';
    }
    os << ']';
  }
};

std::string csv_escape(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct CsvValue {
  std::string operator()(std::monostate) const { return {}; }
  std::string operator()(bool b) const { return b ? "true" : "false"; }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(std::uint64_t v) const { return std::to_string(v); }
  std::string operator()(double v) const { return format_double(v); }
  std::string operator()(const std::string& s) const { return csv_escape(s); }
  std::string operator()(const ComplexMatrix& m) const {
    std::string out;
    for (const auto& z : m.entries()) {
      if (!out.empty()) out += ' ';
      out += format_double(z.real());
      out += ' ';
      out += format_double(z.imag());
    }
    return out;
  }
};

}  // namespace

void write_json_line(std::ostream& os, const Record& r) {
  os << '{';
  bool first = true;
  for (const auto& [k, v] : r.fields()) {
    if (!first) os << ',';
    first = false;
    write_json_string(os, k);
    os << ':';
    std::visit(JsonValue{os}, v);
  }
  os << "}\n";
}

void write_csv_header(std::ostream& os, const Record& r) {
  bool first = true;
  for (const auto& [k, v] : r.fields()) {
    if (!first) os << ',';
    first = false;
    os << csv_escape(k);
  }
  os << '\n';
}

void write_csv_row(std::ostream& os, const Record& r) {
  bool first = true;
  for (const auto& [k, v] : r.fields()) {
    if (!first) os << ',';
    first = false;
    os << std::visit(CsvValue{}, v);
  }
  os << '\n';
}

void write_records(std::ostream& os, const std::vector<Record>& records, Format format) {
  if (format == Format::kJson) {
    for (const auto& r : records) write_json_line(os, r);
    return;
  }
  if (records.empty()) return;
  write_csv_header(os, records.front());
  for (const auto& r : records) write_csv_row(os, r);
}

std::string render_records(const std::vector<Record>& records, Format format) {
  std::ostringstream os;
  write_records(os, records, format);
  return os.str();
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw std::out_of_range("no CSV column '" + std::string(name) + "'");
}

namespace {

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  cells.push_back(std::move(cur));
  return cells;
}

}  // namespace

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  std::size_t pos = 0;
  bool have_header = false;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = eol + 1;
    if (line.empty()) continue;
    auto cells = split_csv_line(line);
    if (!have_header) {
      table.header = std::move(cells);
      have_header = true;
    } else {
      if (cells.size() != table.header.size()) {
        throw std::invalid_argument("CSV row " + std::to_string(table.rows.size() + 1) + " has " +
                                    std::to_string(cells.size()) + " cells, header has " +
                                    std::to_string(table.header.size()));
      }
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

}  // namespace swapbit::cli
