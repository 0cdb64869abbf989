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
#include "test_util.hpp"

namespace qsearch {
namespace {

// Full state-vector failure with M marked among N occupied states.
double simulated_failure(unsigned n, std::uint64_t occupied, std::uint64_t marked, double ratio_est) {
  std::vector<std::uint64_t> occ(occupied);
  for (std::uint64_t i = 0; i < occupied; ++i) occ[i] = i;
  const auto init = make_superposition(n, occ);
  const auto out =
      run_grover_long(init, MarkedSet::range(n, 0, marked - 1), compute_params(ratio_est, 1.0));
  return 1.0 - success_probability(out, MarkedSet::range(n, 0, marked - 1));
}

TEST(GroverLongFailure, TwoOfThreeEstimatedAsHalf) {
  const double analytic = grover_long_failure({2.0 / 3.0, 0.5});
  EXPECT_NEAR(analytic, 0.037, 1e-3);
  EXPECT_NEAR(analytic, 1.0 / 27.0, 1e-12);
  EXPECT_NEAR(single_iteration_failure(2.0 / 3.0, std::numbers::pi / 2), 1.0 / 27.0, 1e-12);
}

TEST(GroverLongFailure, ExactEstimateIsZero) {
  for (double r = 0.01; r <= 1.0; r += 0.0137) EXPECT_LT(grover_long_failure({r, r}), 1e-9);
  EXPECT_LT(grover_long_failure({1.0, 1.0}), 1e-15);
}

TEST(GroverLongFailure, TitanicFirstLoop) {
  // d0 = 47 marks 30 of 36 records; uniform estimate 48/64.
  const double analytic = grover_long_failure({30.0 / 36.0, 48.0 / 64.0});
  EXPECT_NEAR(analytic, 0.0020576131687248811, 1e-12);
}

TEST(GroverLongFailure, MatchesSimulation) {
  for (std::uint64_t occupied : {3u, 20u, 64u, 200u, 256u}) {
    for (std::uint64_t m = 1; m <= occupied; m += 1 + occupied / 9) {
      for (double est : {0.01, 0.1, 0.33, 0.5, 0.77, 1.0}) {
        const double ratio = double(m) / double(occupied);
        EXPECT_NEAR(grover_long_failure({ratio, est}), simulated_failure(8, occupied, m, est), 1e-9);
      }
    }
  }
}

TEST(GroverLongFailure, SingleIterationClosedFormMatchesRecursion) {
  for (double p = 0.05; p < 1.0; p += 0.05) {
    for (double phi : {0.3, 1.0, 2.0, std::numbers::pi}) {
      const auto rec = amplitude_recursion(p, phi, 1);
      EXPECT_NEAR(single_iteration_failure(p, phi), (1 - p) * std::norm(rec[1].bad), 1e-12);
    }
  }
}

TEST(GroverLongFailure, Errors) {
  EXPECT_THROW(grover_long_failure({0.0, 0.5}), RangeError);
  EXPECT_THROW(grover_long_failure({0.5, 1.5}), RangeError);
}

TEST(ContourGrid, ShapeAndDiagonal) {
  const auto grid = failure_contour_grid(10);
  ASSERT_EQ(grid.size(), 100u);
  for (const auto& c : grid) {
    EXPECT_GE(c.failure, 0.0);
    EXPECT_LE(c.failure, 1.0);
    if (c.ratio_true == c.ratio_est) {
      EXPECT_LT(c.failure, 1e-9);
    }
  }
  EXPECT_EQ(grid.back().ratio_true, 1.0);
  EXPECT_EQ(grid.back().failure, 0.0);
}

TEST(ContourGrid, SpotChecksAgainstSimulation) {
  const auto grid = failure_contour_grid(50);
  std::mt19937_64 gen(67);
  for (int k = 0; k < 5; ++k) {
    const auto& c = grid[gen() % grid.size()];
    // ratio_true = i/50 realised as 4i marked among 200 occupied states.
    const auto m = static_cast<std::uint64_t>(std::llround(c.ratio_true * 200));
    EXPECT_NEAR(c.failure, simulated_failure(8, 200, m, c.ratio_est), 1e-6);
  }
}

TEST(SampleSize, ZQuantiles) {
  EXPECT_NEAR(z_for_confidence(0.95), 1.959963984540054, 1e-12);
  EXPECT_NEAR(z_for_confidence(0.5), 0.6744897501960817, 1e-12);
  EXPECT_NEAR(z_for_confidence(0.999), 3.2905267314919255, 1e-10);
  EXPECT_THROW(z_for_confidence(1.0), RangeError);
}

TEST(SampleSize, TabulatedCells) {
  EXPECT_EQ(min_sample_size({1.96, 0.25, 0.05}), 385u);
  EXPECT_EQ(min_sample_size({2.576, 0.25, 0.05}), 664u);
  EXPECT_EQ(min_sample_size({0.6745, 0.25, 0.1}), 12u);
  EXPECT_EQ(min_sample_size({z_for_confidence(0.95), 0.25, 0.05}), 385u);
  EXPECT_THROW(min_sample_size({1.96, 0.25, 0.0}), RangeError);
  EXPECT_THROW(min_sample_size({0.0, 0.25, 0.1}), RangeError);
}

TEST(SampledCurve, SmallerErrorIsBetter) {
  const double z = z_for_confidence(0.95);
  const auto tight = sampled_failure_curve({z, 0.25, 0.05}, 20, 200, 3);
  const auto loose = sampled_failure_curve({z, 0.25, 0.15}, 20, 200, 3);
  ASSERT_EQ(tight.size(), loose.size());
  double t = 0, l = 0;
  for (std::size_t i = 0; i < tight.size(); ++i) {
    t += tight[i].grover_long_failure;
    l += loose[i].grover_long_failure;
    EXPECT_LE(tight[i].grover_long_failure, loose[i].grover_long_failure + 0.01);
  }
  EXPECT_LT(t, l);
}

TEST(SampledCurve, VanishingErrorVanishingFailure) {
  const auto curve = sampled_failure_curve({z_for_confidence(0.95), 0.25, 0.0005}, 20, 20, 5);
  for (const auto& p : curve) EXPECT_LT(p.grover_long_failure, 2e-3);
}

TEST(SampledCurve, QesaAboveGroverLongMidRange) {
  const auto curve = sampled_failure_curve({z_for_confidence(0.95), 0.25, 0.05}, 20, 200, 7);
  for (const auto& p : curve) {
    if (p.ratio >= 0.3 && p.ratio <= 0.7) EXPECT_GT(p.qesa_failure, p.grover_long_failure);
  }
}

TEST(Complexity, DirectEvaluation) {
  EXPECT_NEAR(qummsa_complexity({1048576.0, 3.0, 0.1}), 11974.703619474392, 1e-8);
  EXPECT_NEAR(dha_complexity(1048576.0, 0.1), 35111.111111111109, 1e-8);
  EXPECT_GT(qummsa_complexity({2.0, 3.0, 0.0}), 0.0);
  EXPECT_GT(dha_complexity(2.0, 0.0), 0.0);
  EXPECT_THROW(qummsa_complexity({1.0, 0.0, 0.0}), RangeError);
  EXPECT_THROW(qummsa_complexity({16.0, 3.0, 1.0}), RangeError);
}

TEST(Complexity, ClosedFormEqualsSumForPowersOfTwo) {
  for (int k = 6; k <= 29; ++k) {
    const double m0 = std::ldexp(1.0, k);
    const double n = 2 * m0;
    EXPECT_NEAR(grover_iterations_closed_form(n, m0) / grover_iterations_sum(n, m0), 1.0, 1e-12);
  }
}

TEST(Complexity, PreparationRatioGrowsLikeLog) {
  for (int k = 8; k <= 30; ++k) {
    const double n = std::ldexp(1.0, k);
    EXPECT_NEAR(dha_init_term(n) / qummsa_init_term(n, 0.0), double(k), 1e-9);
  }
}

}  // namespace
}  // namespace qsearch
