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

#include "qsearch/analysis.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qsearch/error.hpp"
#include "qsearch/qesa.hpp"
#include "qsearch/random.hpp"

namespace qsearch {

namespace {

void check_unit_ratio(double r, const char* what) {
  if (!(r > 0.0 && r <= 1.0)) {
    throw RangeError(std::string(what) + " must lie in (0, 1], got " + std::to_string(r));
  }
}

void check_complexity_inputs(double n, double eps) {
  if (!(n >= 2.0)) throw RangeError("database size must be at least 2");
  if (!(eps >= 0.0 && eps < 1.0)) throw RangeError("failure rate must lie in [0, 1)");
}

}  // namespace

std::vector<AmplitudePair> amplitude_recursion(double ratio_true, double phi,
                                               std::uint64_t iterations) {
  check_unit_ratio(ratio_true, "ratio_true");
  const Complex e = std::polar(1.0, phi);
  const double p = ratio_true;
  std::vector<AmplitudePair> out(1);
  for (std::uint64_t j = 0; j < iterations; ++j) {
    const AmplitudePair& a = out.back();
    const Complex mean = p * e * a.good + (1.0 - p) * a.bad;
    out.push_back({-e * a.good - (e - 1.0) * mean, -a.bad - (e - 1.0) * mean});
  }
  return out;
}

double grover_long_failure(const MisestimationPoint& point, IterationReading reading) {
  check_unit_ratio(point.ratio_true, "ratio_true");
  check_unit_ratio(point.ratio_est, "ratio_est");
  const SearchParams params = compute_params(point.ratio_est, 1.0, reading);
  const auto amps = amplitude_recursion(point.ratio_true, params.phi, params.iterations);
  const double fail = (1.0 - point.ratio_true) * std::norm(amps.back().bad);
  return std::clamp(fail, 0.0, 1.0);
}

double single_iteration_failure(double ratio_true, double phi) {
  check_unit_ratio(ratio_true, "ratio_true");
  const Complex e = std::polar(1.0, phi);
  const double p = ratio_true;
  const Complex amp = -e * (e - 1.0) * std::sqrt(p * (1.0 - p)) * std::sqrt(p) +
                      (-e + (e - 1.0) * p) * std::sqrt(1.0 - p);
  return std::norm(amp);
}

std::vector<ContourCell> failure_contour_grid(std::uint64_t resolution) {
  if (resolution < 1) throw RangeError("resolution must be positive");
  std::vector<ContourCell> grid;
  grid.reserve(resolution * resolution);
  const double r = static_cast<double>(resolution);
  for (std::uint64_t i = 1; i <= resolution; ++i) {
    for (std::uint64_t j = 1; j <= resolution; ++j) {
      const MisestimationPoint pt{static_cast<double>(i) / r, static_cast<double>(j) / r};
      grid.push_back({pt.ratio_true, pt.ratio_est, grover_long_failure(pt)});
    }
  }
  return grid;
}

void validate(const SampleSpec& spec) {
  if (!(spec.z > 0.0)) throw RangeError("Z must be positive");
  if (!(spec.sigma2 > 0.0)) throw RangeError("variance must be positive");
  if (!(spec.error > 0.0 && spec.error < 1.0)) throw RangeError("error must lie in (0, 1)");
}

double z_for_confidence(double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw RangeError("confidence must lie in (0, 1), got " + std::to_string(confidence));
  }
  return boost::math::quantile(boost::math::normal(), 0.5 + confidence / 2.0);
}

std::uint64_t min_sample_size(const SampleSpec& spec) {
  validate(spec);
  const double h = spec.z * spec.z * spec.sigma2 / (spec.error * spec.error);
  return static_cast<std::uint64_t>(std::ceil(h - 1e-9));
}

std::vector<CurvePoint> sampled_failure_curve(const SampleSpec& spec, std::uint64_t resolution,
                                              std::uint64_t draws, std::uint64_t seed,
                                              double population) {
  if (resolution < 2) throw RangeError("resolution must be at least 2");
  if (draws < 1) throw RangeError("need at least one sample draw");
  const std::uint64_t h = min_sample_size(spec);
  std::vector<CurvePoint> out;
  for (std::uint64_t k = 1; k < resolution; ++k) {
    CurvePoint pt;
    pt.ratio = static_cast<double>(k) / static_cast<double>(resolution);
    Rng rng(trial_seed(seed, k));
    std::binomial_distribution<std::uint64_t> sample(h, pt.ratio);
    double total = 0.0;
    for (std::uint64_t d = 0; d < draws; ++d) {
      const std::uint64_t hits = std::max<std::uint64_t>(sample(rng.engine()), 1);
      const double est = static_cast<double>(hits) / static_cast<double>(h);
      total += grover_long_failure({pt.ratio, est});
    }
    pt.grover_long_failure = total / static_cast<double>(draws);
    pt.grover_iterations = compute_params(pt.ratio, 1.0).iterations;

    const double m = pt.ratio * population;
    double spent = 0.0;
    std::uint64_t t = 0;
    do {
      ++t;
      for (const auto& [v, w] : qesa_iteration_distribution(t, population)) {
        spent += static_cast<double>(v) * w;
      }
    } while (spent < static_cast<double>(pt.grover_iterations) && t < 4096);
    pt.qesa_attempts = t;
    pt.qesa_failure = qesa_failure_model(m, population, t);
    out.push_back(pt);
  }
  return out;
}

double qummsa_init_term(double n, double c) {
  const double l = std::log2(n);
  return (l + c) * l;
}

double qummsa_complexity(const ComplexityParams& params) {
  check_complexity_inputs(params.n, params.eps);
  const double grover =
      std::numbers::pi / 2.0 * (2.0 + std::numbers::sqrt2 + params.c) * std::sqrt(params.n);
  return (grover + qummsa_init_term(params.n, params.c)) / (1.0 - params.eps);
}

double grover_iterations_closed_form(double n, double m0) {
  if (!(m0 >= 1.0 && m0 <= n)) throw RangeError("need 1 <= M0 <= N");
  return std::numbers::pi / 2.0 * (std::numbers::sqrt2 + 1.0) *
         (std::sqrt(2.0 * n) - std::sqrt(n / m0));
}

double grover_iterations_sum(double n, double m0) {
  if (!(m0 >= 1.0 && m0 <= n)) throw RangeError("need 1 <= M0 <= N");
  double sum = 0.0;
  for (double mk = m0; mk >= 1.0; mk /= 2.0) sum += std::sqrt(n / mk);
  return std::numbers::pi / 2.0 * sum;
}

double dha_init_term(double n) {
  const double l = std::log2(n);
  return l * l * l;
}

double dha_complexity(double n, double eps) {
  check_complexity_inputs(n, eps);
  const double l = std::log2(n);
  return (22.5 * std::sqrt(n) + 1.4 * l * l + dha_init_term(n)) / (1.0 - eps);
}

}  // namespace qsearch
