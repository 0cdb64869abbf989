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
#include <vector>

#include "qsearch/grover_long.hpp"
#include "qsearch/statevector.hpp"

namespace qsearch {

/// A true and an estimated solution fraction, both in (0, 1].
struct MisestimationPoint {
  double ratio_true = 0.0;
  double ratio_est = 0.0;
};

/// Amplitudes of one solution state and one non-solution state, scaled by
/// sqrt(N) so the uniform start is (1, 1).
struct AmplitudePair {
  Complex good{1.0, 0.0};
  Complex bad{1.0, 0.0};
};

/// Per-iteration amplitude recursion for a uniform start, entries 0..iterations.
/// The oracle phase multiplies the solution amplitude before the diffusion.
std::vector<AmplitudePair> amplitude_recursion(double ratio_true, double phi,
                                               std::uint64_t iterations);

/// Failure rate of Grover-Long run with parameters derived from `ratio_est`
/// on a database whose solution fraction is `ratio_true`.
double grover_long_failure(const MisestimationPoint& point,
                           IterationReading reading = IterationReading::HalfAngle);

/// Closed form of the failure rate after exactly one iteration with phase phi.
double single_iteration_failure(double ratio_true, double phi);

struct ContourCell {
  double ratio_true = 0.0;
  double ratio_est = 0.0;
  double failure = 0.0;
};

/// Failure rate on the grid k/resolution, k = 1..resolution, on both axes.
/// Row-major in ratio_true. Throws RangeError for resolution < 1.
std::vector<ContourCell> failure_contour_grid(std::uint64_t resolution);

struct SampleSpec {
  double z = 1.959963984540054;
  double sigma2 = 0.25;
  double error = 0.05;
};

void validate(const SampleSpec& spec);

/// Two-sided standard normal quantile for confidence level in (0, 1).
double z_for_confidence(double confidence);

/// ceil(z^2 sigma^2 / E^2).
std::uint64_t min_sample_size(const SampleSpec& spec);

struct CurvePoint {
  double ratio = 0.0;
  std::uint64_t grover_iterations = 0;  // exact-parameter iteration count
  double grover_long_failure = 0.0;     // mean over sample draws
  std::uint64_t qesa_attempts = 0;      // attempts whose expected cost first reaches the budget
  double qesa_failure = 0.0;
};

/// For each ratio k/resolution (k = 1..resolution-1): draws `draws` samples of
/// size min_sample_size(spec), estimates the ratio from each, and averages the
/// resulting Grover-Long failure. QESA is evaluated on a database of
/// `population` states after the fewest attempts whose expected cumulative
/// Grover iterations reach the exact Grover-Long count.
std::vector<CurvePoint> sampled_failure_curve(const SampleSpec& spec, std::uint64_t resolution,
                                              std::uint64_t draws, std::uint64_t seed,
                                              double population = 1048576.0);

struct ComplexityParams {
  double n = 0.0;
  double c = 3.0;
  double eps = 0.1;
};

/// Total expected cost of the optimized minimum search, taking the first
/// loop to mark half the database. Throws RangeError
/// unless n >= 2 and 0 <= eps < 1.
double qummsa_complexity(const ComplexityParams& params);
double qummsa_init_term(double n, double c);

/// Grover-Long iterations over all main loops, geometric closed form.
double grover_iterations_closed_form(double n, double m0);
/// The same as an explicit sum over M_k = m0 / 2^k while M_k >= 1.
double grover_iterations_sum(double n, double m0);

/// Durr-Hoyer cost with the same 1/(1 - eps) normalization: search term
/// 22.5 sqrt(N) + 1.4 log2(N)^2 plus log2(N)^3 state preparations.
double dha_complexity(double n, double eps);
double dha_init_term(double n);

}  // namespace qsearch
