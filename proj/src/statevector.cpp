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

#include "qsearch/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "qsearch/error.hpp"

namespace qsearch {

namespace {

void check_qubit_count(unsigned num_qubits) {
  if (num_qubits == 0 || num_qubits > kMaxQubits) {
    throw RangeError("qubit count " + std::to_string(num_qubits) +
                     " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
}

struct Matrix2 {
  Complex m00, m01, m10, m11;
};

Matrix2 gate_matrix(const GateKind& kind) {
  switch (kind.type) {
    case GateType::X:
      return {0.0, 1.0, 1.0, 0.0};
    case GateType::H: {
      const double s = 1.0 / std::sqrt(2.0);
      return {s, s, s, -s};
    }
    case GateType::Ry: {
      const double c = std::cos(kind.angle / 2.0);
      const double s = std::sin(kind.angle / 2.0);
      return {c, -s, s, c};
    }
    case GateType::Phase:
      return {1.0, 0.0, 0.0, std::polar(1.0, kind.angle)};
  }
  return {1.0, 0.0, 0.0, 1.0};
}

}  // namespace

void validate_gate(const GateOp& gate, unsigned num_qubits) {
  if (gate.target >= num_qubits) {
    throw RangeError("target qubit " + std::to_string(gate.target) +
                     " out of range for " + std::to_string(num_qubits) + " qubits");
  }
  if (gate.kind.has_angle() && !std::isfinite(gate.kind.angle)) {
    throw RangeError("gate angle is not finite");
  }
  std::uint64_t seen = 0;
  for (const Control& c : gate.controls) {
    if (c.qubit >= num_qubits) {
      throw RangeError("control qubit " + std::to_string(c.qubit) +
                       " out of range for " + std::to_string(num_qubits) + " qubits");
    }
    if (c.qubit == gate.target) {
      throw GateError("qubit " + std::to_string(c.qubit) +
                      " is both target and control");
    }
    const std::uint64_t bit = std::uint64_t{1} << c.qubit;
    if (seen & bit) {
      throw GateError("duplicate control qubit " + std::to_string(c.qubit));
    }
    seen |= bit;
  }
}

ControlPattern control_pattern(const std::vector<Control>& controls) {
  ControlPattern p;
  for (const Control& c : controls) {
    const std::uint64_t bit = std::uint64_t{1} << c.qubit;
    p.mask |= bit;
    if (c.polarity == Polarity::OnOne) p.value |= bit;
  }
  return p;
}

StateVector::StateVector(unsigned num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  check_qubit_count(num_qubits);
  if (amps_.size() != (std::size_t{1} << num_qubits)) {
    throw DimensionError("amplitude array of length " + std::to_string(amps_.size()) +
                         " does not match 2^" + std::to_string(num_qubits));
  }
}

double StateVector::norm_squared() const {
  return std::accumulate(amps_.begin(), amps_.end(), 0.0,
                         [](double acc, const Complex& a) { return acc + std::norm(a); });
}

void StateVector::scale(Complex factor) {
  for (Complex& a : amps_) a *= factor;
}

StateVector make_basis_state(unsigned num_qubits, std::uint64_t index) {
  check_qubit_count(num_qubits);
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (index >= dim) {
    throw RangeError("basis index " + std::to_string(index) + " out of range [0, " +
                     std::to_string(dim) + ")");
  }
  std::vector<Complex> amps(dim, 0.0);
  amps[index] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

StateVector make_superposition(unsigned num_qubits,
                               std::span<const std::uint64_t> occupied) {
  check_qubit_count(num_qubits);
  if (occupied.empty()) throw EmptyError("empty database: no occupied basis states");
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  const std::set<std::uint64_t> unique(occupied.begin(), occupied.end());
  if (*unique.rbegin() >= dim) {
    throw RangeError("basis index " + std::to_string(*unique.rbegin()) +
                     " out of range [0, " + std::to_string(dim) + ")");
  }
  const double amp = 1.0 / std::sqrt(static_cast<double>(unique.size()));
  std::vector<Complex> amps(dim, 0.0);
  for (std::uint64_t i : unique) amps[i] = amp;
  return StateVector(num_qubits, std::move(amps));
}

void apply_gate(StateVector& state, const GateOp& gate) {
  validate_gate(gate, state.num_qubits());
  const ControlPattern ctrl = control_pattern(gate.controls);
  const std::uint64_t tbit = std::uint64_t{1} << gate.target;
  const std::uint64_t dim = state.size();
  auto amps = state.amplitudes();

  if (gate.kind.type == GateType::Phase) {
    const Complex f = std::polar(1.0, gate.kind.angle);
    for (std::uint64_t i = tbit; i < dim; ++i) {
      if ((i & tbit) && ctrl.fires(i)) amps[i] *= f;
    }
    return;
  }

  const Matrix2 m = gate_matrix(gate.kind);
  for (std::uint64_t i0 = 0; i0 < dim; ++i0) {
    if ((i0 & tbit) || !ctrl.fires(i0)) continue;
    const std::uint64_t i1 = i0 | tbit;
    const Complex a0 = amps[i0];
    const Complex a1 = amps[i1];
    amps[i0] = m.m00 * a0 + m.m01 * a1;
    amps[i1] = m.m10 * a0 + m.m11 * a1;
  }
}

void apply_rank1_reflection(StateVector& state, const StateVector& psi, double phi) {
  if (state.num_qubits() != psi.num_qubits()) {
    throw DimensionError("reflection axis has " + std::to_string(psi.num_qubits()) +
                         " qubits, state has " + std::to_string(state.num_qubits()));
  }
  auto s = state.amplitudes();
  const auto p = psi.amplitudes();
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) overlap += std::conj(p[i]) * s[i];
  const Complex coeff = -(std::polar(1.0, phi) - 1.0) * overlap;
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = coeff * p[i] - s[i];
}

std::vector<double> measure_distribution(const StateVector& state) {
  std::vector<double> probs(state.size());
  std::transform(state.amplitudes().begin(), state.amplitudes().end(), probs.begin(),
                 [](const Complex& a) { return std::norm(a); });
  return probs;
}

std::uint64_t sample_measurement(const StateVector& state, Rng& rng) {
  const double u = rng.uniform_open_closed();
  double cdf = 0.0;
  std::uint64_t last_nonzero = 0;
  const auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p > 0.0) last_nonzero = i;
    cdf += p;
    if (p > 0.0 && cdf >= u) return i;
  }
  // u fell into the rounding gap between the accumulated total and 1.
  return last_nonzero;
}

std::uint64_t sample_measurement(const StateVector& state, std::uint64_t seed) {
  Rng rng(seed);
  return sample_measurement(state, rng);
}

StateVector canonicalize_phase(const StateVector& state, double tolerance) {
  StateVector out = state;
  for (const Complex& a : state.amplitudes()) {
    if (std::abs(a) > tolerance) {
      out.scale(std::conj(a) / std::abs(a));
      break;
    }
  }
  return out;
}

double max_abs_difference(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw DimensionError("state sizes differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double distance_up_to_global_phase(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw DimensionError("state sizes differ");
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) overlap += std::conj(a[i]) * b[i];
  StateVector aligned = a;
  if (std::abs(overlap) > 0.0) aligned.scale(overlap / std::abs(overlap));
  return max_abs_difference(aligned, b);
}

}  // namespace qsearch
