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
#include <string_view>

#include "qsearch/circuit.hpp"

namespace qsearch {

/// Serialises a circuit to the line-oriented `.qc` format:
///
///     qubits: 3
///     X 0 | controls: -q2 -q1
///     PHASE(1.5707963267948966) 0 | controls: -q2 -q1
///     RY(0.5) 1 | controls:
///
/// `+qK` is a control firing on |1>, `-qK` one firing on |0>. Angles use the
/// shortest decimal form that round-trips to the same double. Lines are
/// separated by '\n' with no trailing newline.
std::string export_circuit(const Circuit& circuit);

/// Inverse of export_circuit. Blank lines and a trailing newline are accepted.
/// Throws ParseError (with the 1-based line number) on malformed lines,
/// unknown gate names, duplicate controls and target/control collisions.
Circuit parse_circuit(std::string_view text);

}  // namespace qsearch
