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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qsearch/gate.hpp"
#include "qsearch/random.hpp"

namespace qsearch {

using Complex = std::complex<double>;

inline constexpr unsigned kMaxQubits = 24;

/// Dense register of 2^n complex amplitudes.
class StateVector {
 public:
  /// Takes ownership of `amplitudes`; its length must be exactly 2^n.
  StateVector(unsigned num_qubits, std::vector<Complex> amplitudes);

  unsigned num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amps_.size(); }

  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }

  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  Complex& operator[](std::size_t i) { return amps_[i]; }

  double norm_squared() const;

  /// Multiplies every amplitude by `factor`.
  void scale(Complex factor);

 private:
  unsigned num_qubits_;
  std::vector<Complex> amps_;
};

StateVector make_basis_state(unsigned num_qubits, std::uint64_t index);

/// Equal-amplitude superposition over `occupied` (duplicates ignored); zero
/// amplitude on every other basis state.
StateVector make_superposition(unsigned num_qubits,
                               std::span<const std::uint64_t> occupied);

void apply_gate(StateVector& state, const GateOp& gate);

/// state <- (-(e^{i phi} - 1) |psi><psi| - I) state.
///
/// With |psi> = W|0...0> this is -W I0(phi) W^-1, the diffusion half of a
/// Grover-Long iteration, without needing a gate-level W.
void apply_rank1_reflection(StateVector& state, const StateVector& psi, double phi);

/// Born-rule probabilities |amp_i|^2.
std::vector<double> measure_distribution(const StateVector& state);

/// Inverse-CDF sample: the first index whose cumulative probability reaches a
/// uniform variate drawn from (0, 1].
std::uint64_t sample_measurement(const StateVector& state, Rng& rng);
std::uint64_t sample_measurement(const StateVector& state, std::uint64_t seed);

/// Copy of `state` with the global phase fixed so that the first amplitude
/// whose modulus exceeds `tolerance` is real and positive.
StateVector canonicalize_phase(const StateVector& state, double tolerance = 1e-12);

/// Largest elementwise modulus difference after phase canonicalisation.
double distance_up_to_global_phase(const StateVector& a, const StateVector& b);

/// Largest elementwise modulus difference.
double max_abs_difference(const StateVector& a, const StateVector& b);

}  // namespace qsearch
