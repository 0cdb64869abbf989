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

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qsearch/gate.hpp"
#include "qsearch/statevector.hpp"

namespace qsearch {

inline constexpr unsigned kMaxDenseQubits = 12;

/// Ordered list of gates on a fixed register. Every gate is validated against
/// the register size when appended.
class Circuit {
 public:
  explicit Circuit(unsigned num_qubits);
  Circuit(unsigned num_qubits, std::vector<GateOp> ops);

  unsigned num_qubits() const { return num_qubits_; }
  const std::vector<GateOp>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }

  Circuit& add(GateOp op);
  Circuit& add(GateKind kind, unsigned target, std::vector<Control> controls = {});
  Circuit& append(const Circuit& other);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  unsigned num_qubits_;
  std::vector<GateOp> ops_;
};

/// Gate-by-gate inverse: reversed order, Ry and Phase angles negated.
Circuit inverse(const Circuit& circuit);

/// Dense 2^n x 2^n unitary of a single gate, built entry by entry.
Eigen::MatrixXcd gate_to_matrix(const GateOp& gate, unsigned num_qubits);

/// Product of per-gate unitaries in application order. Throws RangeError for
/// registers wider than kMaxDenseQubits.
Eigen::MatrixXcd circuit_to_matrix(const Circuit& circuit);

/// Applies the circuit gate by gate without materialising its matrix.
void run_circuit(const Circuit& circuit, StateVector& state);
StateVector run_circuit(const Circuit& circuit, const StateVector& state);

/// Largest elementwise modulus difference between `a` and `b` after removing
/// the global phase that best aligns them.
double matrix_distance_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace qsearch
