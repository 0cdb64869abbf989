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

#include "qsearch/oracle.hpp"
#include "qsearch/statevector.hpp"

namespace qsearch {

/// How the iteration count is read from beta. `HalfAngle` divides by 2*beta,
/// which reproduces the worked two-qubit example (M/N = 2/4 gives J = 1).
/// `AsPrinted` divides by beta and is kept for comparison only.
enum class IterationReading { HalfAngle, AsPrinted };

struct SearchParams {
  double m_est = 0.0;
  double n_est = 0.0;
  double beta = 0.0;
  double phi = 0.0;
  std::uint64_t iterations = 0;  // 0 only when m_est == n_est
};

/// Throws RangeError unless 0 < m_est <= n_est.
SearchParams compute_params(double m_est, double n_est,
                            IterationReading reading = IterationReading::HalfAngle);

enum class DiffusionMode {
  GateLevel,  // W, I0 and the oracle lowered to gates and simulated
  Rank1,      // diffusion as a rank-one update about the initial state
};

/// Applies the Grover-Long iteration `params.iterations` times to `initial`.
/// The diffusion axis is `initial` itself. GateLevel mode requires `initial`
/// to be a uniform superposition over its support, up to a global phase.
StateVector run_grover_long(const StateVector& initial, const MarkedSet& marked,
                            const SearchParams& params,
                            DiffusionMode mode = DiffusionMode::Rank1);

/// Rank-one iterations with an explicit phase and count. `marked` may be
/// empty, in which case the oracle is the identity.
void apply_grover_iterations(StateVector& state, const StateVector& axis,
                             std::span<const std::uint64_t> marked, double phi,
                             std::uint64_t iterations);

double success_probability(const StateVector& state, std::span<const std::uint64_t> marked);
double success_probability(const StateVector& state, const MarkedSet& marked);

/// Both branches of the max-of-floor/ceil iteration-count expression, under
/// the same half-angle reading as compute_params.
struct IterationCount {
  std::uint64_t floor_branch = 0;
  std::uint64_t ceil_branch = 0;
  std::uint64_t iterations = 0;  // max of the two; 0 when M == N
};

IterationCount iteration_count_model(double m, double n);

}  // namespace qsearch
