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

#include "qsearch/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <string>

#include "qsearch/error.hpp"

namespace qsearch {

namespace {

std::uint64_t dimension(unsigned num_qubits) { return std::uint64_t{1} << num_qubits; }

void check_index(unsigned num_qubits, std::uint64_t index) {
  if (index >= dimension(num_qubits)) {
    throw RangeError("basis index " + std::to_string(index) + " out of range [0, " +
                     std::to_string(dimension(num_qubits)) + ")");
  }
}

// Controls on q(n-1)..q1 whose polarities reproduce the bits of v.
std::vector<Control> upper_bit_controls(unsigned num_qubits, std::uint64_t v) {
  std::vector<Control> controls;
  for (unsigned q = num_qubits - 1; q >= 1; --q) {
    controls.push_back({q, ((v >> q) & 1U) ? Polarity::OnOne : Polarity::OnZero});
  }
  return controls;
}

void append_single_oracle(Circuit& circuit, std::uint64_t v, double phi) {
  const auto controls = upper_bit_controls(circuit.num_qubits(), v);
  if (v & 1U) {
    circuit.add(GateKind::phase(phi), 0, controls);
  } else {
    circuit.add(GateKind::x(), 0, controls);
    circuit.add(GateKind::phase(phi), 0, controls);
    circuit.add(GateKind::x(), 0, controls);
  }
}

}  // namespace

MarkedSet::MarkedSet(unsigned num_qubits, std::vector<std::uint64_t> indices)
    : num_qubits_(num_qubits), indices_(std::move(indices)) {
  if (num_qubits == 0 || num_qubits > kMaxQubits) {
    throw RangeError("qubit count " + std::to_string(num_qubits) + " outside [1, " +
                     std::to_string(kMaxQubits) + "]");
  }
  if (indices_.empty()) throw EmptyError("marked set is empty");
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  check_index(num_qubits, indices_.back());
}

MarkedSet MarkedSet::range(unsigned num_qubits, std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw EmptyError("marked range is empty");
  check_index(num_qubits, hi);
  std::vector<std::uint64_t> idx(hi - lo + 1);
  for (std::uint64_t i = lo; i <= hi; ++i) idx[i - lo] = i;
  return MarkedSet(num_qubits, std::move(idx));
}

bool MarkedSet::contains(std::uint64_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

std::pair<std::uint64_t, std::uint64_t> ThresholdPredicate::bounds() const {
  check_index(num_qubits, d0);
  if (mode == SearchMode::Min) return {0, d0};
  return {d0, dimension(num_qubits) - 1};
}

MarkedSet ThresholdPredicate::marked_set() const {
  const auto [lo, hi] = bounds();
  return MarkedSet::range(num_qubits, lo, hi);
}

Circuit build_I0(unsigned num_qubits, double phi) {
  Circuit circuit(num_qubits);
  append_single_oracle(circuit, 0, phi);
  return circuit;
}

Circuit build_single_oracle(unsigned num_qubits, std::uint64_t v, double phi) {
  Circuit circuit(num_qubits);
  check_index(num_qubits, v);
  append_single_oracle(circuit, v, phi);
  return circuit;
}

Circuit build_multi_oracle(const MarkedSet& marked, double phi) {
  Circuit circuit(marked.num_qubits());
  for (std::uint64_t v : marked.indices()) append_single_oracle(circuit, v, phi);
  return circuit;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> dyadic_blocks(std::uint64_t lo,
                                                                     std::uint64_t hi) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> blocks;
  if (lo > hi) return blocks;
  std::uint64_t start = lo;
  while (true) {
    const std::uint64_t remaining = hi - start;  // block length minus one
    std::uint64_t size = start == 0 ? std::uint64_t{1} << 63 : start & (~start + 1);
    while (size - 1 > remaining) size >>= 1;
    blocks.emplace_back(start, start + size - 1);
    if (start + size - 1 == hi) break;
    start += size;
  }
  return blocks;
}

Circuit build_threshold_oracle(const ThresholdPredicate& pred, double phi) {
  const auto [lo, hi] = pred.bounds();
  Circuit circuit(pred.num_qubits);
  for (const auto& [b_lo, b_hi] : dyadic_blocks(lo, hi)) {
    for (std::uint64_t v = b_lo; v <= b_hi; ++v) append_single_oracle(circuit, v, phi);
  }
  return circuit;
}

Circuit build_preparation(unsigned num_qubits, std::span<const std::uint64_t> occupied) {
  Circuit circuit(num_qubits);
  if (occupied.empty()) throw EmptyError("empty database: nothing to prepare");
  const std::set<std::uint64_t> unique(occupied.begin(), occupied.end());
  check_index(num_qubits, *unique.rbegin());

  if (unique.size() == dimension(num_qubits)) {
    for (unsigned q = 0; q < num_qubits; ++q) circuit.add(GateKind::h(), q);
    return circuit;
  }

  // Level q splits every prefix (bits above q) by the value of bit q.
  for (int q = static_cast<int>(num_qubits) - 1; q >= 0; --q) {
    const unsigned uq = static_cast<unsigned>(q);
    const std::uint64_t prefixes = dimension(num_qubits - 1 - uq);
    std::vector<std::uint64_t> zeros(prefixes, 0), ones(prefixes, 0);
    for (std::uint64_t i : unique) {
      const std::uint64_t prefix = i >> (uq + 1);
      (((i >> uq) & 1U) ? ones : zeros)[prefix]++;
    }
    for (std::uint64_t p = 0; p < prefixes; ++p) {
      if (ones[p] == 0) continue;
      const double theta = 2.0 * std::atan2(std::sqrt(static_cast<double>(ones[p])),
                                            std::sqrt(static_cast<double>(zeros[p])));
      std::vector<Control> controls;
      for (unsigned c = num_qubits - 1; c > uq; --c) {
        controls.push_back({c, ((p >> (c - uq - 1)) & 1U) ? Polarity::OnOne : Polarity::OnZero});
      }
      circuit.add(GateKind::ry(theta), uq, std::move(controls));
    }
  }
  return circuit;
}

Circuit build_preparation(const Database& db) {
  return build_preparation(db.num_qubits(), db.sorted_values());
}

void apply_phase_oracle(StateVector& state, std::span<const std::uint64_t> marked, double phi) {
  const Complex f = std::polar(1.0, phi);
  for (std::uint64_t i : marked) {
    if (i >= state.size()) {
      throw RangeError("marked index " + std::to_string(i) + " out of range");
    }
    state[i] *= f;
  }
}

}  // namespace qsearch
