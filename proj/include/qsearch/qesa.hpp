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

#include "qsearch/database.hpp"
#include "qsearch/oracle.hpp"
#include "qsearch/random.hpp"
#include "qsearch/statevector.hpp"

namespace qsearch {

struct QesaConfig {
  double lambda = 4.0 / 3.0;  // must lie in (1, 4/3]
  std::uint64_t max_t = 64;
  std::uint64_t seed = 0;
};

void validate(const QesaConfig& cfg);

struct QesaStep {
  std::uint64_t t = 0;
  std::uint64_t gamma = 0;
  std::uint64_t measured = 0;
  bool success = false;
};

struct QesaTrace {
  std::vector<QesaStep> steps;
  bool success = false;
  std::uint64_t grover_iterations = 0;
  std::uint64_t preparations = 0;
};

/// Exponential searching: attempt t draws gamma = floor(U * min(lambda^(t-1),
/// sqrt(N))) with U uniform on [0, 1), runs gamma phase-inversion Grover
/// iterations from a fresh copy of `initial`, and measures. N is the number of
/// basis states with nonzero amplitude in `initial`. Throws EmptyError when no
/// marked index has nonzero amplitude.
QesaTrace run_qesa(const StateVector& initial, const MarkedSet& marked, const QesaConfig& cfg);

/// As above with a caller-owned generator; `marked` may be empty and is not
/// checked for reachability.
QesaTrace run_qesa(const StateVector& initial, std::span<const std::uint64_t> marked,
                   const QesaConfig& cfg, Rng& rng);

/// Distribution of gamma at attempt t: (value, probability) pairs.
std::vector<std::pair<std::uint64_t, double>> qesa_iteration_distribution(std::uint64_t t,
                                                                          double n,
                                                                          double lambda = 4.0 /
                                                                                          3.0);

/// `Normalized` gives the last gamma value weight (L - floor(L)) / L so the
/// per-attempt weights sum to one. `AsPrinted` omits the division by L.
enum class QesaModelVariant { Normalized, AsPrinted };

/// Probability that all of the first t attempts fail.
double qesa_failure_model(double m, double n, std::uint64_t t, double lambda = 4.0 / 3.0,
                          QesaModelVariant variant = QesaModelVariant::Normalized);

struct DhaConfig {
  QesaConfig qesa;
  double budget_sqrt = 22.5;  // time budget = budget_sqrt*sqrt(N) + budget_log2*log2(N)^2
  double budget_log2 = 1.4;
};

struct DhaResult {
  std::uint64_t minimum = 0;
  bool is_true_minimum = false;
  std::uint64_t grover_iterations = 0;
  std::uint64_t preparations = 0;
  std::uint64_t threshold_updates = 0;
  double budget = 0.0;
};

/// Durr-Hoyer minimum finding. Starts from a uniformly random record and
/// repeatedly runs exponential searching for values below the threshold,
/// charging gamma + 1 time units per attempt, until the time budget is spent.
/// The attempt counter restarts whenever the threshold improves.
DhaResult run_dha_minimum(const Database& db, const DhaConfig& cfg, std::uint64_t seed);

}  // namespace qsearch
