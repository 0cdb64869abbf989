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
#include <span>
#include <utility>
#include <vector>

#include "qsearch/circuit.hpp"
#include "qsearch/database.hpp"

namespace qsearch {

/// Sorted, duplicate-free set of basis indices that receive the oracle phase.
class MarkedSet {
 public:
  /// Throws EmptyError for an empty set, RangeError for indices >= 2^n.
  MarkedSet(unsigned num_qubits, std::vector<std::uint64_t> indices);

  /// Every index in [lo, hi].
  static MarkedSet range(unsigned num_qubits, std::uint64_t lo, std::uint64_t hi);

  unsigned num_qubits() const { return num_qubits_; }
  const std::vector<std::uint64_t>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool contains(std::uint64_t index) const;

 private:
  unsigned num_qubits_;
  std::vector<std::uint64_t> indices_;
};

/// Marks values <= d0 (min search) or >= d0 (max search).
struct ThresholdPredicate {
  SearchMode mode = SearchMode::Min;
  std::uint64_t d0 = 0;
  unsigned num_qubits = 1;

  /// The contiguous index range [lo, hi] it marks.
  std::pair<std::uint64_t, std::uint64_t> bounds() const;
  MarkedSet marked_set() const;
};

/// diag[e^{i phi}, 1, ..., 1]: Phase on q0 between two X gates, all three
/// controlled on |0> by q1..q(n-1).
Circuit build_I0(unsigned num_qubits, double phi);

/// Identity except entry (v, v) = e^{i phi}. Odd v: Phase on q0; even v:
/// X-Phase-X on q0. Controls on q1..q(n-1) carry the bits of v, listed from
/// the highest qubit down; the X gates share the Phase gate's controls.
Circuit build_single_oracle(unsigned num_qubits, std::uint64_t v, double phi);

/// Concatenation of single-state oracles over the marked set, ascending.
Circuit build_multi_oracle(const MarkedSet& marked, double phi);

/// Maximal aligned power-of-two blocks covering [lo, hi], ascending.
/// {0..47} -> [0,31], [32,47].
std::vector<std::pair<std::uint64_t, std::uint64_t>> dyadic_blocks(std::uint64_t lo,
                                                                     std::uint64_t hi);

/// Single-state oracles over the predicate's range, emitted block by block
/// along its dyadic decomposition.
Circuit build_threshold_oracle(const ThresholdPredicate& pred, double phi);

/// Gate-level W with W|0...0> = equal superposition over `occupied`.
/// A full register gives H on every qubit; otherwise a binary tree of Ry
/// rotations, each controlled by the bits already fixed above it.
Circuit build_preparation(unsigned num_qubits, std::span<const std::uint64_t> occupied);
Circuit build_preparation(const Database& db);

/// Applies e^{i phi} directly to the marked amplitudes; same action as the
/// circuit from build_multi_oracle.
void apply_phase_oracle(StateVector& state, std::span<const std::uint64_t> marked, double phi);

}  // namespace qsearch
