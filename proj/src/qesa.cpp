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

#include "qsearch/qesa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qsearch/error.hpp"
#include "qsearch/grover_long.hpp"

namespace qsearch {

namespace {

double attempt_cap(std::uint64_t t, double lambda, double n) {
  return std::min(std::pow(lambda, static_cast<double>(t - 1)), std::sqrt(n));
}

std::size_t occupied_count(const StateVector& s) {
  return static_cast<std::size_t>(std::count_if(s.amplitudes().begin(), s.amplitudes().end(),
                                                [](const Complex& a) { return std::norm(a) > 0.0; }));
}

// One attempt: fresh state, gamma iterations, one measurement.
QesaStep attempt(const StateVector& initial, std::span<const std::uint64_t> marked,
                 std::uint64_t t, double cap, Rng& rng) {
  QesaStep step;
  step.t = t;
  step.gamma = static_cast<std::uint64_t>(std::floor(rng.uniform() * cap));
  StateVector state = initial;
  apply_grover_iterations(state, initial, marked, std::numbers::pi, step.gamma);
  step.measured = sample_measurement(state, rng);
  step.success = std::binary_search(marked.begin(), marked.end(), step.measured);
  return step;
}

}  // namespace

void validate(const QesaConfig& cfg) {
  if (!(cfg.lambda > 1.0 && cfg.lambda <= 4.0 / 3.0 + 1e-15)) {
    throw RangeError("lambda must lie in (1, 4/3], got " + std::to_string(cfg.lambda));
  }
  if (cfg.max_t == 0) throw RangeError("max_t must be positive");
}

QesaTrace run_qesa(const StateVector& initial, std::span<const std::uint64_t> marked,
                   const QesaConfig& cfg, Rng& rng) {
  validate(cfg);
  const double n = static_cast<double>(occupied_count(initial));
  QesaTrace trace;
  for (std::uint64_t t = 1; t <= cfg.max_t; ++t) {
    const QesaStep step = attempt(initial, marked, t, attempt_cap(t, cfg.lambda, n), rng);
    trace.steps.push_back(step);
    trace.grover_iterations += step.gamma;
    ++trace.preparations;
    if (step.success) {
      trace.success = true;
      break;
    }
  }
  return trace;
}

QesaTrace run_qesa(const StateVector& initial, const MarkedSet& marked, const QesaConfig& cfg) {
  if (marked.num_qubits() != initial.num_qubits()) {
    throw DimensionError("marked set has " + std::to_string(marked.num_qubits()) +
                         " qubits, state has " + std::to_string(initial.num_qubits()));
  }
  if (!(success_probability(initial, marked) > 0.0)) {
    throw EmptyError("no marked state has nonzero amplitude");
  }
  Rng rng(cfg.seed);
  return run_qesa(initial, std::span<const std::uint64_t>(marked.indices()), cfg, rng);
}

std::vector<std::pair<std::uint64_t, double>> qesa_iteration_distribution(std::uint64_t t,
                                                                          double n,
                                                                          double lambda) {
  if (t == 0) throw RangeError("attempt index t starts at 1");
  const double cap = attempt_cap(t, lambda, n);
  const double whole = std::floor(cap);
  std::vector<std::pair<std::uint64_t, double>> out;
  for (std::uint64_t v = 0; static_cast<double>(v) < whole; ++v) out.emplace_back(v, 1.0 / cap);
  if (cap > whole) out.emplace_back(static_cast<std::uint64_t>(whole), (cap - whole) / cap);
  return out;
}

double qesa_failure_model(double m, double n, std::uint64_t t, double lambda,
                          QesaModelVariant variant) {
  if (!(m > 0.0) || m > n) throw RangeError("need 0 < M <= N");
  if (t == 0) throw RangeError("attempt index t starts at 1");
  const double beta = std::asin(std::sqrt(m / n));
  double eps = 1.0;
  for (std::uint64_t s = 1; s <= t; ++s) {
    const double cap = attempt_cap(s, lambda, n);
    const double whole = std::floor(cap);
    double round = 0.0;
    for (double v = 0.0; v < whole; v += 1.0) round += std::pow(std::cos((2.0 * v + 1.0) * beta), 2) / cap;
    if (cap > whole) {
      const double weight = variant == QesaModelVariant::Normalized ? (cap - whole) / cap
                                                                    : (cap - whole);
      round += weight * std::pow(std::cos((2.0 * whole + 1.0) * beta), 2);
    }
    eps *= round;
  }
  return eps;
}

DhaResult run_dha_minimum(const Database& db, const DhaConfig& cfg, std::uint64_t seed) {
  validate(cfg.qesa);
  Rng rng(seed);
  const unsigned nq = db.num_qubits();
  const auto& values = db.sorted_values();
  const StateVector initial = make_superposition(nq, values);
  const double n = static_cast<double>(values.size());
  const double log2n = std::log2(n);

  DhaResult out;
  out.budget = cfg.budget_sqrt * std::sqrt(n) + cfg.budget_log2 * log2n * log2n;
  std::uint64_t y = values[rng.below(values.size())];
  double time = 0.0;
  std::uint64_t t = 1;
  while (time < out.budget) {
    const auto end = std::lower_bound(values.begin(), values.end(), y);
    const std::span<const std::uint64_t> marked(values.begin(), end);
    const QesaStep step = attempt(initial, marked, t, attempt_cap(t, cfg.qesa.lambda, n), rng);
    out.grover_iterations += step.gamma;
    ++out.preparations;
    time += static_cast<double>(step.gamma + 1);
    if (step.success) {
      y = step.measured;
      ++out.threshold_updates;
      t = 1;
    } else {
      ++t;
    }
  }
  out.minimum = y;
  out.is_true_minimum = y == db.min_value();
  return out;
}

}  // namespace qsearch
