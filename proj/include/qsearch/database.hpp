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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsearch {

/// Direction of an extremum search. Max mode mirrors every comparison.
enum class SearchMode { Min, Max };

struct Record {
  std::string label;
  std::uint64_t value = 0;

  friend bool operator==(const Record&, const Record&) = default;
};

/// Labelled, distinct, non-negative integer values, each stored in the basis
/// state whose index equals the value.
class Database {
 public:
  /// Throws EmptyError for no records, DataError for duplicate values and
  /// RangeError when a value does not fit in `num_qubits` bits.
  Database(std::vector<Record> records, unsigned num_qubits);

  /// Smallest register that holds every value (at least one qubit).
  static unsigned minimal_qubits(std::uint64_t max_value);

  unsigned num_qubits() const { return num_qubits_; }
  std::size_t size() const { return records_.size(); }
  const std::vector<Record>& records() const { return records_; }

  /// Values in ascending order, i.e. the occupied basis indices.
  const std::vector<std::uint64_t>& sorted_values() const { return sorted_; }

  bool contains(std::uint64_t value) const;
  std::uint64_t min_value() const { return sorted_.front(); }
  std::uint64_t max_value() const { return sorted_.back(); }
  std::uint64_t extremum(SearchMode mode) const {
    return mode == SearchMode::Min ? min_value() : max_value();
  }

  /// Number of stored values that satisfy the threshold predicate: <= d0 in
  /// min mode, >= d0 in max mode. Equals the rank of d0 when d0 is stored.
  std::size_t count_marked(std::uint64_t d0, SearchMode mode) const;

  /// True when 2^(n-1) < N <= 2^n, the density the uniform estimator assumes.
  bool is_dense() const;

 private:
  std::vector<Record> records_;
  std::vector<std::uint64_t> sorted_;
  unsigned num_qubits_;
};

/// Parses `label,value` CSV text (header row required, RFC 4180 quoting for
/// labels). When `num_qubits` is absent the smallest covering register is
/// used. Errors carry the offending line number.
Database parse_database_csv(std::string_view text,
                            std::optional<unsigned> num_qubits = std::nullopt);

Database load_database(const std::filesystem::path& path,
                       std::optional<unsigned> num_qubits = std::nullopt);

/// Binary string of `value` on `num_qubits` bits, most significant first.
std::string encode_bits(std::uint64_t value, unsigned num_qubits);

}  // namespace qsearch
