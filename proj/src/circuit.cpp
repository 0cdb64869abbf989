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

#include "qsearch/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsearch/error.hpp"

namespace qsearch {

Circuit::Circuit(unsigned num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0 || num_qubits > kMaxQubits) {
    throw RangeError("qubit count " + std::to_string(num_qubits) + " outside [1, " +
                     std::to_string(kMaxQubits) + "]");
  }
}

Circuit::Circuit(unsigned num_qubits, std::vector<GateOp> ops) : Circuit(num_qubits) {
  for (auto& op : ops) add(std::move(op));
}

Circuit& Circuit::add(GateOp op) {
  validate_gate(op, num_qubits_);
  ops_.push_back(std::move(op));
  return *this;
}

Circuit& Circuit::add(GateKind kind, unsigned target, std::vector<Control> controls) {
  return add(GateOp{kind, target, std::move(controls)});
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits() != num_qubits_) {
    throw DimensionError("cannot append a " + std::to_string(other.num_qubits()) +
                         "-qubit circuit to a " + std::to_string(num_qubits_) +
                         "-qubit circuit");
  }
  ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
  return *this;
}

Circuit inverse(const Circuit& circuit) {
  Circuit inv(circuit.num_qubits());
  for (auto it = circuit.ops().rbegin(); it != circuit.ops().rend(); ++it) {
    GateOp op = *it;
    if (op.kind.has_angle()) op.kind.angle = -op.kind.angle;
    inv.add(std::move(op));
  }
  return inv;
}

Eigen::MatrixXcd gate_to_matrix(const GateOp& gate, unsigned num_qubits) {
  validate_gate(gate, num_qubits);
  if (num_qubits > kMaxDenseQubits) {
    throw RangeError("dense lowering limited to " + std::to_string(kMaxDenseQubits) +
                     " qubits");
  }
  Eigen::Matrix2cd u;
  switch (gate.kind.type) {
    case GateType::X:
      u << 0.0, 1.0, 1.0, 0.0;
      break;
    case GateType::H:
      u << 1.0, 1.0, 1.0, -1.0;
      u /= std::sqrt(2.0);
      break;
    case GateType::Ry: {
      const double c = std::cos(gate.kind.angle / 2.0);
      const double s = std::sin(gate.kind.angle / 2.0);
      u << c, -s, s, c;
      break;
    }
    case GateType::Phase:
      u << 1.0, 0.0, 0.0, std::polar(1.0, gate.kind.angle);
      break;
  }

  const ControlPattern ctrl = control_pattern(gate.controls);
  const std::uint64_t tbit = std::uint64_t{1} << gate.target;
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto c = static_cast<std::uint64_t>(col);
    if (!ctrl.fires(c)) {
      m(col, col) = 1.0;
      continue;
    }
    const int cb = (c & tbit) ? 1 : 0;
    for (int rb = 0; rb < 2; ++rb) {
      const std::uint64_t row = rb ? (c | tbit) : (c & ~tbit);
      m(static_cast<Eigen::Index>(row), col) = u(rb, cb);
    }
  }
  return m;
}

Eigen::MatrixXcd circuit_to_matrix(const Circuit& circuit) {
  const unsigned n = circuit.num_qubits();
  if (n > kMaxDenseQubits) {
    throw RangeError("dense lowering limited to " + std::to_string(kMaxDenseQubits) +
                     " qubits, circuit has " + std::to_string(n));
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(dim, dim);
  for (const GateOp& op : circuit.ops()) total = gate_to_matrix(op, n) * total;
  return total;
}

void run_circuit(const Circuit& circuit, StateVector& state) {
  if (circuit.num_qubits() != state.num_qubits()) {
    throw DimensionError("circuit has " + std::to_string(circuit.num_qubits()) +
                         " qubits, state has " + std::to_string(state.num_qubits()));
  }
  for (const GateOp& op : circuit.ops()) apply_gate(state, op);
}

StateVector run_circuit(const Circuit& circuit, const StateVector& state) {
  StateVector out = state;
  run_circuit(circuit, out);
  return out;
}

double matrix_distance_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix shapes differ");
  }
  const Complex overlap = (a.adjoint() * b).trace();
  Complex phase = 1.0;
  if (std::abs(overlap) > 0.0) phase = overlap / std::abs(overlap);
  return (a * phase - b).cwiseAbs().maxCoeff();
}

}  // namespace qsearch
