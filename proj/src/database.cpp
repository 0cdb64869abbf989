// Copyright 2026 The qsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsearch/database.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "qsearch/error.hpp"
#include "qsearch/statevector.hpp"

namespace qsearch {

Database::Database(std::vector<Record> records, unsigned num_qubits)
    : records_(std::move(records)), num_qubits_(num_qubits) {
  if (records_.empty()) throw EmptyError("empty database");
  if (num_qubits == 0 || num_qubits > kMaxQubits) {
    throw RangeError("qubit count " + std::to_string(num_qubits) + " outside [1, " +
                     std::to_string(kMaxQubits) + "]");
  }
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  sorted_.reserve(records_.size());
  for (const Record& r : records_) {
    if (r.value >= dim) {
      throw RangeError("value " + std::to_string(r.value) + " exceeds " +
                       std::to_string(dim - 1) + ", the largest " +
                       std::to_string(num_qubits) + "-bit value");
    }
    sorted_.push_back(r.value);
  }
  std::sort(sorted_.begin(), sorted_.end());
  const auto dup = std::adjacent_find(sorted_.begin(), sorted_.end());
  if (dup != sorted_.end()) {
    throw DataError("duplicate value " + std::to_string(*dup) +
                    " (database values must be distinct)");
  }
}

unsigned Database::minimal_qubits(std::uint64_t max_value) {
  return std::max(1U, static_cast<unsigned>(std::bit_width(max_value)));
}

bool Database::contains(std::uint64_t value) const {
  return std::binary_search(sorted_.begin(), sorted_.end(), value);
}

std::size_t Database::count_marked(std::uint64_t d0, SearchMode mode) const {
  if (mode == SearchMode::Min) {
    return static_cast<std::size_t>(
        std::upper_bound(sorted_.begin(), sorted_.end(), d0) - sorted_.begin());
  }
  return static_cast<std::size_t>(
      sorted_.end() - std::lower_bound(sorted_.begin(), sorted_.end(), d0));
}

bool Database::is_dense() const {
  const std::uint64_t n = size();
  return (std::uint64_t{1} << (num_qubits_ - 1)) < n && n <= (std::uint64_t{1} << num_qubits_);
}

namespace {

// Splits one CSV record into fields; double quotes delimit fields that contain
// commas, "" is an escaped quote.
std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          fields.back() += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  if (quoted) throw DataError("unterminated quoted field", line_no);
  return fields;
}

std::string trim_copy(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

}  // namespace

Database parse_database_csv(std::string_view text, std::optional<unsigned> num_qubits) {
  std::vector<Record> records;
  std::vector<std::size_t> line_of;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1 && line.substr(0, 3) == "\xEF\xBB\xBF") line.remove_prefix(3);
    if (trim_copy(std::string(line)).empty() || line.front() == '#') continue;

    auto fields = split_csv_line(line, line_no);
    if (fields.size() != 2) {
      throw DataError("expected 2 fields (label,value), found " +
                          std::to_string(fields.size()),
                      line_no);
    }
    const std::string label = trim_copy(fields[0]);
    const std::string value_text = trim_copy(fields[1]);
    if (!header_seen) {
      header_seen = true;
      if (label != "label" || value_text != "value") {
        throw DataError("expected header 'label,value'", line_no);
      }
      continue;
    }
    std::uint64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
    if (value_text.empty() || ec != std::errc{} ||
        ptr != value_text.data() + value_text.size()) {
      throw DataError("value '" + value_text + "' is not a non-negative integer", line_no);
    }
    records.push_back({label, value});
    line_of.push_back(line_no);
  }
  if (records.empty()) throw EmptyError("empty database: no data rows");

  // Report duplicates against the line of the second occurrence.
  std::vector<std::size_t> order(records.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return records[a].value < records[b].value; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (records[order[k]].value == records[order[k - 1]].value) {
      const std::size_t later = std::max(order[k], order[k - 1]);
      throw DataError("duplicate value " + std::to_string(records[later].value) +
                          " (database values must be distinct)",
                      line_of[later]);
    }
  }

  std::uint64_t max_value = 0;
  for (const Record& r : records) max_value = std::max(max_value, r.value);
  const unsigned n = num_qubits.value_or(Database::minimal_qubits(max_value));
  if (num_qubits && max_value >= (std::uint64_t{1} << std::min(n, 63U))) {
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (records[i].value == max_value) {
        throw DataError("value " + std::to_string(max_value) + " does not fit in " +
                            std::to_string(n) + " qubits",
                        line_of[i]);
      }
    }
  }
  return Database(std::move(records), n);
}

Database load_database(const std::filesystem::path& path, std::optional<unsigned> num_qubits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open dataset '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_database_csv(buf.str(), num_qubits);
}

std::string encode_bits(std::uint64_t value, unsigned num_qubits) {
  std::string bits(num_qubits, '0');
  for (unsigned q = 0; q < num_qubits; ++q) {
    if ((value >> q) & 1U) bits[num_qubits - 1 - q] = '1';
  }
  return bits;
}

}  // namespace qsearch
