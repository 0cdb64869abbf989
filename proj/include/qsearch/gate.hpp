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
#include <vector>

namespace qsearch {

/// Elementary single-qubit operations. `Phase` is u1(phi) = diag[1, e^{i phi}].
enum class GateType : std::uint8_t { X, H, Ry, Phase };

struct GateKind {
  GateType type = GateType::X;
  double angle = 0.0;  // theta for Ry, phi for Phase; ignored otherwise

  static constexpr GateKind x() { return {GateType::X, 0.0}; }
  static constexpr GateKind h() { return {GateType::H, 0.0}; }
  static constexpr GateKind ry(double theta) { return {GateType::Ry, theta}; }
  static constexpr GateKind phase(double phi) { return {GateType::Phase, phi}; }

  bool has_angle() const { return type == GateType::Ry || type == GateType::Phase; }

  friend bool operator==(const GateKind&, const GateKind&) = default;
};

/// Which control value activates the gate: black dot (|1>) or white dot (|0>).
enum class Polarity : std::uint8_t { OnOne, OnZero };

struct Control {
  unsigned qubit = 0;
  Polarity polarity = Polarity::OnOne;

  friend bool operator==(const Control&, const Control&) = default;
};

/// A (multi-)controlled elementary gate. Qubit 0 is the least significant bit
/// of the basis index.
struct GateOp {
  GateKind kind;
  unsigned target = 0;
  std::vector<Control> controls;

  friend bool operator==(const GateOp&, const GateOp&) = default;
};

/// Throws GateError on target/control collision or duplicate controls,
/// RangeError when a qubit is >= num_qubits or an angle is not finite.
void validate_gate(const GateOp& gate, unsigned num_qubits);

/// Bit mask of all control qubits and the index bits they require.
struct ControlPattern {
  std::uint64_t mask = 0;
  std::uint64_t value = 0;

  bool fires(std::uint64_t index) const { return (index & mask) == value; }
};

ControlPattern control_pattern(const std::vector<Control>& controls);

}  // namespace qsearch
