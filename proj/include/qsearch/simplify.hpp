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

#include <cstddef>

#include "qsearch/circuit.hpp"

namespace qsearch {

/// Gate counts for an oracle circuit.
///
/// `n_two_qubit_equiv` prices every Phase gate on q qubits (q - 1 controls)
/// as 2^(q-1) two-qubit controlled-phase gates, the decomposition count the
/// oracle cost claims are stated in. A bare Phase gate therefore counts 1.
/// Controlled gates of other kinds (the X conjugations of even-state
/// fragments) are priced the same way but reported separately in
/// `n_other_controlled_equiv`.
struct GateCostReport {
  std::size_t n_multi_controlled = 0;  // gates with >= 2 controls
  std::size_t n_two_qubit_equiv = 0;
  std::size_t n_other_controlled_equiv = 0;
  std::size_t n_single = 0;  // gates with no controls

  friend bool operator==(const GateCostReport&, const GateCostReport&) = default;
};

GateCostReport gate_cost(const Circuit& circuit);

// The passes below rewrite runs of consecutive diagonal phase fragments. A
// fragment is either a Phase gate (fires when its target is |1>) or an
// X-Phase-X triple on one target whose X gates are uncontrolled or carry the
// Phase gate's controls (fires when the target is |0>). Fragments in a run
// commute, so a pass may combine any two of them; gates outside fragments
// end a run. Each pass preserves the circuit unitary exactly, never
// increases the gate cost, and returns its input unchanged when no pattern
// applies.

/// Merges fragments on the same target, with the same phase and target
/// polarity, whose controls differ in the polarity of exactly one qubit; that
/// control is dropped. Repeated to a fixed point, a block of 2^m consecutive
/// odd (or even) states collapses into one gate.
Circuit simplify_principle1(const Circuit& circuit);

/// Replaces the multi-controlled X gates around a Phase gate with the same
/// controls by plain X gates on the target.
Circuit simplify_principle2(const Circuit& circuit);

/// Merges a Phase fragment and an X-Phase-X fragment that share target,
/// phase and controls. Their union phases every state matching the controls,
/// which is re-expressed as a phase on the highest control qubit under the
/// remaining controls. Pairs without controls (a global phase) are kept.
Circuit simplify_principle3(const Circuit& circuit);

/// principle 1, then 3, then 2.
Circuit simplify_all(const Circuit& circuit);

}  // namespace qsearch
