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

#include "qsearch/qummsa.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsearch/error.hpp"
#include "qsearch/oracle.hpp"
#include "qsearch/random.hpp"

namespace qsearch {

namespace {

bool improves(std::uint64_t d1, std::uint64_t d0, SearchMode mode) {
  return mode == SearchMode::Min ? d1 < d0 : d1 > d0;
}

std::size_t count_no_worse(std::span<const std::uint64_t> sorted, std::uint64_t d0,
                           SearchMode mode) {
  if (mode == SearchMode::Min) {
    return static_cast<std::size_t>(std::upper_bound(sorted.begin(), sorted.end(), d0) -
                                    sorted.begin());
  }
  return static_cast<std::size_t>(sorted.end() -
                                  std::lower_bound(sorted.begin(), sorted.end(), d0));
}

}  // namespace

SearchParams estimate_params(std::uint64_t d0, EstimationKind kind, const EstimationInput& input,
                             SearchMode mode, IterationReading reading) {
  if (input.num_qubits < 1 || input.num_qubits > 63) {
    throw RangeError("qubit count " + std::to_string(input.num_qubits) + " out of range");
  }
  const std::uint64_t space = std::uint64_t{1} << input.num_qubits;
  if (d0 >= space) throw RangeError("threshold " + std::to_string(d0) + " does not fit");
  switch (kind) {
    case EstimationKind::Uniform: {
      const double m = mode == SearchMode::Min ? static_cast<double>(d0) + 1.0
                                               : static_cast<double>(space - d0);
      return compute_params(m, static_cast<double>(space), reading);
    }
    case EstimationKind::Sampled: {
      if (input.sample.empty()) throw EmptyError("sampled estimation needs a nonempty sample");
      const std::size_t hits = std::max<std::size_t>(count_no_worse(input.sample, d0, mode), 1);
      return compute_params(static_cast<double>(hits), static_cast<double>(input.sample.size()),
                            reading);
    }
    case EstimationKind::Exact: {
      if (input.db == nullptr) throw Error("exact estimation needs the database");
      const std::size_t m = input.db->count_marked(d0, mode);
      if (m == 0) throw RangeError("threshold " + std::to_string(d0) + " marks no record");
      return compute_params(static_cast<double>(m), static_cast<double>(input.db->size()),
                            reading);
    }
  }
  throw Error("unknown estimation strategy");
}

QummsaResult run_qummsa(const Database& db, const QummsaOptions& opt) {
  if (opt.c < 1) throw RangeError("interrupt constant c must be at least 1");
  if (opt.retry_cap < 1) throw RangeError("retry cap must be at least 1");
  Rng rng(opt.seed);
  const unsigned n = db.num_qubits();
  const auto& values = db.sorted_values();
  const StateVector initial = make_superposition(n, values);

  std::vector<std::uint64_t> sample;
  if (opt.strategy.kind == EstimationKind::Sampled) {
    const std::uint64_t h = min_sample_size(opt.strategy.sample);
    sample.reserve(h);
    for (std::uint64_t i = 0; i < h; ++i) sample.push_back(values[rng.below(values.size())]);
    std::sort(sample.begin(), sample.end());
  }
  const EstimationInput input{n, sample, &db};

  QummsaResult out;
  std::uint64_t d0 = values[rng.below(values.size())];
  const std::size_t pos =
      static_cast<std::size_t>(std::lower_bound(values.begin(), values.end(), d0) - values.begin());
  out.initial_rank = opt.mode == SearchMode::Min ? pos + 1 : values.size() - pos;

  std::uint64_t threshold_since = 1;
  std::uint64_t counter = 0;
  while (counter < opt.c) {
    // The oracle and parameters change only with d0.
    const SearchParams params = estimate_params(d0, opt.strategy.kind, input, opt.mode, opt.reading);
    const MarkedSet marked = ThresholdPredicate{opt.mode, d0, n}.marked_set();
    ++out.total_loops;
    bool accepted = false;
    std::uint64_t d1 = d0;
    for (std::uint64_t attempt = 0; attempt < opt.retry_cap && !accepted; ++attempt) {
      const StateVector final_state = run_grover_long(initial, marked, params, opt.diffusion);
      d1 = sample_measurement(final_state, rng);
      ++out.preparations;
      out.grover_iterations += params.iterations;
      accepted = !improves(d0, d1, opt.mode) && db.contains(d1);
      out.searches.push_back({d0, params.m_est, params.n_est, params.iterations, d1, accepted});
    }
    if (!accepted) {
      out.aborted = true;
      break;
    }
    if (improves(d1, d0, opt.mode)) {
      d0 = d1;
      counter = 0;
      threshold_since = out.total_loops + 1;
    } else {
      ++counter;
    }
  }
  out.value = d0;
  out.main_loops = std::min(threshold_since, out.total_loops);
  out.success = d0 == db.extremum(opt.mode);
  return out;
}

double loop_failure_bound(std::uint64_t r0, std::uint64_t c) {
  if (r0 == 0) throw RangeError("rank r0 starts at 1");
  return std::pow(1.0 / static_cast<double>(r0), static_cast<double>(c));
}

}  // namespace qsearch
