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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qsearch/analysis.hpp"
#include "qsearch/error.hpp"
#include "qsearch/grover_long.hpp"
#include "test_util.hpp"

namespace qsearch {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(ComputeParams, TwoOfFour) {
  const auto p = compute_params(2, 4);
  EXPECT_NEAR(p.beta, 0.7854, 1e-4);
  EXPECT_EQ(p.iterations, 1u);
  EXPECT_NEAR(p.phi, kPi / 2, 1e-9);
}

TEST(ComputeParams, OneOfFour) {
  const auto p = compute_params(1, 4);
  EXPECT_NEAR(p.beta, kPi / 6, 1e-15);
  EXPECT_EQ(p.iterations, 2u);
  EXPECT_NEAR(p.phi, 1.3324788649850303, 1e-12);
}

TEST(ComputeParams, AllMarked) {
  const auto p = compute_params(5, 5);
  EXPECT_EQ(p.iterations, 0u);
}

TEST(ComputeParams, AsPrintedReadingDoublesCount) {
  const auto p = compute_params(2, 4, IterationReading::AsPrinted);
  EXPECT_EQ(p.iterations, 2u);
  EXPECT_NEAR(p.phi, 0.9045568943023812, 1e-12);
}

TEST(ComputeParams, Invariants) {
  for (double n : {3.0, 4.0, 10.0, 64.0, 1000.0, 1048576.0}) {
    for (double m = 1; m < n; m = std::ceil(m * 1.7)) {
      const auto p = compute_params(m, n);
      EXPECT_NEAR(std::pow(std::sin(p.beta), 2), m / n, 1e-12);
      EXPECT_GT(p.phi, 0.0);
      EXPECT_LE(p.phi, kPi);
      EXPECT_GE(p.iterations, 1u);
    }
  }
}

TEST(ComputeParams, Errors) {
  EXPECT_THROW(compute_params(0, 4), RangeError);
  EXPECT_THROW(compute_params(5, 4), RangeError);
  EXPECT_THROW(compute_params(-1, 4), RangeError);
}

TEST(RunGroverLong, OneOfFourIsExact) {
  const auto init = testing::uniform_state(2);
  const MarkedSet marked(2, {2});
  for (auto mode : {DiffusionMode::Rank1, DiffusionMode::GateLevel}) {
    const auto out = run_grover_long(init, marked, compute_params(1, 4), mode);
    EXPECT_NEAR(success_probability(out, marked), 1.0, 1e-10);
  }
}

TEST(RunGroverLong, WorkedTwoQubitExample) {
  const std::vector<std::uint64_t> occ{0, 2, 3};
  const auto init = make_superposition(2, occ);
  const MarkedSet marked(2, {2, 3});
  const auto params = compute_params(2, 4);
  const auto rank1 = run_grover_long(init, marked, params, DiffusionMode::Rank1);
  const auto gates = run_grover_long(init, marked, params, DiffusionMode::GateLevel);
  EXPECT_NEAR(success_probability(rank1, marked), 1.0 - 0.037, 1e-3);
  EXPECT_NEAR(success_probability(rank1, marked), 26.0 / 27.0, 1e-12);
  EXPECT_LT(max_abs_difference(rank1, gates), 1e-12);
}

TEST(RunGroverLong, ZeroIterationsReturnsInitial) {
  const auto init = testing::uniform_state(3);
  SearchParams p = compute_params(8, 8);
  const auto out = run_grover_long(init, MarkedSet::range(3, 0, 7), p);
  EXPECT_EQ(max_abs_difference(out, init), 0.0);
}

TEST(RunGroverLong, DimensionMismatch) {
  EXPECT_THROW(run_grover_long(testing::uniform_state(3), MarkedSet(2, {1}), compute_params(1, 4)),
               DimensionError);
}

TEST(RunGroverLong, GateLevelRejectsNonUniform) {
  StateVector s(1, {Complex(0.6), Complex(0.8)});
  EXPECT_THROW(run_grover_long(s, MarkedSet(1, {1}), compute_params(1, 2),
                               DiffusionMode::GateLevel),
               Error);
}

TEST(RunGroverLong, ZeroFailureUniform) {
  for (unsigned n = 1; n <= 7; ++n) {
    const auto init = testing::uniform_state(n);
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (std::uint64_t m = 1; m <= dim; ++m) {
      const MarkedSet marked = MarkedSet::range(n, 0, m - 1);
      const auto out = run_grover_long(init, marked, compute_params(double(m), double(dim)));
      EXPECT_NEAR(success_probability(out, marked), 1.0, 1e-9) << n << " " << m;
    }
  }
}

TEST(RunGroverLong, ZeroFailurePartialDatabases) {
  std::mt19937_64 gen(53);
  for (unsigned n = 2; n <= 7; ++n) {
    for (int rep = 0; rep < 15; ++rep) {
      const auto occ = testing::random_subset(n, gen, 0.6);
      const auto init = make_superposition(n, occ);
      const auto marked_vals = testing::random_subset(n, gen, 0.3);
      std::size_t m = 0;
      for (auto v : marked_vals) m += std::binary_search(occ.begin(), occ.end(), v);
      if (m == 0) continue;
      const MarkedSet marked(n, marked_vals);
      const auto out = run_grover_long(init, marked, compute_params(double(m), double(occ.size())));
      EXPECT_NEAR(success_probability(out, marked), 1.0, 1e-9);
    }
  }
}

TEST(RunGroverLong, ModesAgree) {
  std::mt19937_64 gen(59);
  for (unsigned n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      const auto occ = testing::random_subset(n, gen, 0.7);
      const auto init = make_superposition(n, occ);
      const auto marked = MarkedSet(n, testing::random_subset(n, gen, 0.3));
      const auto params = compute_params(1 + double(gen() % occ.size()), double(occ.size()));
      const auto a = run_grover_long(init, marked, params, DiffusionMode::Rank1);
      const auto b = run_grover_long(init, marked, params, DiffusionMode::GateLevel);
      EXPECT_LT(max_abs_difference(a, b), 1e-9);
    }
  }
}

TEST(RunGroverLong, AmplitudesFollowRecursion) {
  const unsigned n = 5;
  const auto init = testing::uniform_state(n);
  const MarkedSet marked = MarkedSet::range(n, 0, 6);
  const double p = 7.0 / 32.0;
  const auto params = compute_params(5, 32);  // deliberately misestimated
  const auto rec = amplitude_recursion(p, params.phi, params.iterations + 3);
  StateVector s = init;
  for (std::size_t j = 1; j < rec.size(); ++j) {
    apply_grover_iterations(s, init, marked.indices(), params.phi, 1);
    for (std::uint64_t i = 0; i < 32; ++i) {
      const Complex want = (marked.contains(i) ? rec[j].good : rec[j].bad) / std::sqrt(32.0);
      EXPECT_LT(std::abs(s[i] - want), 1e-9);
    }
  }
}

TEST(SuccessProbability, Basics) {
  const MarkedSet v(2, {2, 3});
  EXPECT_DOUBLE_EQ(success_probability(make_basis_state(2, 2), v), 1.0);
  EXPECT_NEAR(success_probability(testing::uniform_state(2), v), 0.5, 1e-15);
}

TEST(IterationCountModel, Examples) {
  EXPECT_EQ(iteration_count_model(2, 4).iterations, 1u);
  EXPECT_EQ(iteration_count_model(4, 4).iterations, 0u);
  const double asym = kPi / 4 * 1000.0;
  EXPECT_NEAR(double(iteration_count_model(1, 1e6).iterations), asym, 0.05 * asym);
}

TEST(IterationCountModel, MatchesComputeParamsAndFloorBranchDominates) {
  for (double n : {4.0, 16.0, 100.0, 4096.0, 1e6}) {
    for (double m = 1; m < n; m = std::ceil(m * 1.3)) {
      const auto model = iteration_count_model(m, n);
      EXPECT_EQ(model.iterations, compute_params(m, n).iterations);
      EXPECT_GE(model.floor_branch, model.ceil_branch);
    }
  }
}

TEST(IterationCountModel, ApproachesQuarterPiAsymptote) {
  for (double ratio : {1e4, 1e5, 1e6, 1e8}) {
    const double j = double(iteration_count_model(1, ratio).iterations);
    const double asym = kPi / 4 * std::sqrt(ratio);
    EXPECT_LT(std::abs(j - asym) / asym, 0.05) << ratio;
  }
}

}  // namespace
}  // namespace qsearch
