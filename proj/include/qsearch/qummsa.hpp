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
#include <vector>

#include "qsearch/analysis.hpp"
#include "qsearch/database.hpp"
#include "qsearch/grover_long.hpp"

namespace qsearch {

enum class EstimationKind {
  Uniform,  // every basis state assumed occupied: M~ = d0 + 1 (min), N~ = 2^n
  Sampled,  // M~/N~ from a sample of the database drawn with replacement
  Exact,    // true M and N; an analysis device, not available at runtime
};

struct EstimationStrategy {
  EstimationKind kind = EstimationKind::Uniform;
  SampleSpec sample;  // Sampled only; sample size is min_sample_size(sample)
};

/// What estimate_params may read. `sample` must be sorted for Sampled;
/// `db` must be set for Exact.
struct EstimationInput {
  unsigned num_qubits = 0;
  std::span<const std::uint64_t> sample;
  const Database* db = nullptr;
};

SearchParams estimate_params(std::uint64_t d0, EstimationKind kind, const EstimationInput& input,
                             SearchMode mode,
                             IterationReading reading = IterationReading::HalfAngle);

struct QummsaOptions {
  std::uint64_t c = 3;  // consecutive non-improving confirmations before stopping
  EstimationStrategy strategy;
  SearchMode mode = SearchMode::Min;
  std::uint64_t seed = 0;
  std::uint64_t retry_cap = 32;  // searches per main loop before giving up
  IterationReading reading = IterationReading::HalfAngle;
  DiffusionMode diffusion = DiffusionMode::Rank1;
};

struct LoopRecord {
  std::uint64_t d0 = 0;
  double m_est = 0.0;
  double n_est = 0.0;
  std::uint64_t iterations = 0;
  std::uint64_t d1 = 0;
  bool accepted = false;  // d1 is a database value no worse than d0
};

struct QummsaResult {
  std::uint64_t value = 0;
  bool success = false;  // value is the true extremum
  bool aborted = false;  // a main loop hit the retry cap
  std::uint64_t initial_rank = 0;  // 1-based rank of the starting d0; reporting only
  std::uint64_t main_loops = 0;    // loops up to the first one run at the final threshold
  std::uint64_t total_loops = 0;
  std::uint64_t grover_iterations = 0;
  std::uint64_t preparations = 0;
  std::vector<LoopRecord> searches;
};

/// Threshold-descent extremum search. Starts from a uniformly random record
/// d0. Each main loop searches (marking every basis index no worse than d0)
/// until it measures a database value d1 no worse than d0. A strict
/// improvement replaces d0 and resets the confirmation counter; otherwise the
/// counter advances. Stops after c consecutive confirmations.
QummsaResult run_qummsa(const Database& db, const QummsaOptions& options);

/// (1/r0)^c. Throws RangeError for r0 == 0.
double loop_failure_bound(std::uint64_t r0, std::uint64_t c);

}  // namespace qsearch
