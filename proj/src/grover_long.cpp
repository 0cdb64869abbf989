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

#include "qsearch/grover_long.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qsearch/circuit.hpp"
#include "qsearch/error.hpp"

namespace qsearch {

namespace {

// Absorbs round-off when the iteration ratio is an exact integer in exact
// arithmetic (e.g. M/N = 1/4 evaluates to 0.9999999999999998).
constexpr double kSnap = 1e-9;
constexpr double kAsinTolerance = 1e-12;

void check_ratio(double m, double n) {
  if (!(m > 0.0) || !(n > 0.0) || m > n || !std::isfinite(m) || !std::isfinite(n)) {
    throw RangeError("need 0 < M <= N, got M = " + std::to_string(m) +
                     ", N = " + std::to_string(n));
  }
}

}  // namespace

SearchParams compute_params(double m_est, double n_est, IterationReading reading) {
  check_ratio(m_est, n_est);
  SearchParams p;
  p.m_est = m_est;
  p.n_est = n_est;
  p.beta = std::asin(std::sqrt(m_est / n_est));
  if (m_est == n_est) {
    p.iterations = 0;
    p.phi = std::numbers::pi;
    return p;
  }
  const double denom = reading == IterationReading::HalfAngle ? 2.0 * p.beta : p.beta;
  const double x = (std::numbers::pi / 2.0 - p.beta) / denom;
  p.iterations = static_cast<std::uint64_t>(std::floor(x + kSnap)) + 1;
  double arg = std::sin(std::numbers::pi / (4.0 * static_cast<double>(p.iterations) + 2.0)) /
               std::sin(p.beta);
  if (arg > 1.0 + kAsinTolerance) {
    throw RangeError("inconsistent Grover-Long parameters: asin argument " +
                     std::to_string(arg));
  }
  arg = std::min(arg, 1.0);
  p.phi = 2.0 * std::asin(arg);
  return p;
}

void apply_grover_iterations(StateVector& state, const StateVector& axis,
                             std::span<const std::uint64_t> marked, double phi,
                             std::uint64_t iterations) {
  for (std::uint64_t j = 0; j < iterations; ++j) {
    apply_phase_oracle(state, marked, phi);
    apply_rank1_reflection(state, axis, phi);
  }
}

StateVector run_grover_long(const StateVector& initial, const MarkedSet& marked,
                            const SearchParams& params, DiffusionMode mode) {
  if (marked.num_qubits() != initial.num_qubits()) {
    throw DimensionError("marked set has " + std::to_string(marked.num_qubits()) +
                         " qubits, state has " + std::to_string(initial.num_qubits()));
  }
  StateVector state = initial;
  if (params.iterations == 0) return state;
  if (mode == DiffusionMode::Rank1) {
    apply_grover_iterations(state, initial, marked.indices(), params.phi, params.iterations);
    return state;
  }

  const unsigned n = initial.num_qubits();
  std::vector<std::uint64_t> support;
  for (std::size_t i = 0; i < initial.size(); ++i) {
    if (std::norm(initial[i]) > 1e-24) support.push_back(i);
  }
  const Circuit prep = build_preparation(n, support);
  if (distance_up_to_global_phase(run_circuit(prep, make_basis_state(n, 0)), initial) > 1e-9) {
    throw Error("gate-level diffusion needs a uniform superposition over its support");
  }
  const Circuit oracle = build_multi_oracle(marked, params.phi);
  Circuit diffusion = inverse(prep);
  diffusion.append(build_I0(n, params.phi)).append(prep);
  for (std::uint64_t j = 0; j < params.iterations; ++j) {
    run_circuit(oracle, state);
    run_circuit(diffusion, state);
    state.scale(-1.0);
  }
  return state;
}

double success_probability(const StateVector& state, std::span<const std::uint64_t> marked) {
  double p = 0.0;
  for (std::uint64_t i : marked) {
    if (i >= state.size()) throw RangeError("marked index " + std::to_string(i) + " out of range");
    p += std::norm(state[i]);
  }
  return p;
}

double success_probability(const StateVector& state, const MarkedSet& marked) {
  return success_probability(state, std::span<const std::uint64_t>(marked.indices()));
}

IterationCount iteration_count_model(double m, double n) {
  check_ratio(m, n);
  IterationCount out;
  if (m == n) return out;
  const double beta = std::asin(std::sqrt(m / n));
  const double x = (std::numbers::pi / 2.0 - beta) / (2.0 * beta);
  out.floor_branch = static_cast<std::uint64_t>(std::floor(x + kSnap)) + 1;
  const double c = std::ceil(x - 1.0 - kSnap);
  out.ceil_branch = c > 0.0 ? static_cast<std::uint64_t>(c) : 0;
  out.iterations = std::max(out.floor_branch, out.ceil_branch);
  return out;
}

}  // namespace qsearch
