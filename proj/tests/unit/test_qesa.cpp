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

#include "qsearch/error.hpp"
#include "qsearch/qesa.hpp"
#include "test_util.hpp"

namespace qsearch {
namespace {

const std::vector<std::uint64_t> kOcc{0, 2, 3};

TEST(QesaModel, ReferenceValuesTwoOfThree) {
  const double expected[] = {0.33333333333333331, 0.16049382716049382, 0.093695081851192422,
                             0.054698479800864112, 0.03193255860833065, 0.018641986084197593,
                             0.01088305041340326, 0.0063534424800947868};
  for (std::uint64_t t = 1; t <= 8; ++t) {
    EXPECT_NEAR(qesa_failure_model(2, 3, t), expected[t - 1], 1e-14) << t;
  }
  EXPECT_NEAR(qesa_failure_model(2, 3, 6), 0.037, 0.02);
}

TEST(QesaModel, AsPrintedVariant) {
  EXPECT_NEAR(qesa_failure_model(2, 3, 6, 4.0 / 3.0, QesaModelVariant::AsPrinted),
              0.10681645609666922, 1e-14);
  EXPECT_DOUBLE_EQ(qesa_failure_model(2, 3, 1, 4.0 / 3.0, QesaModelVariant::AsPrinted), 1.0 / 3.0);
}

TEST(QesaModel, TrivialCases) {
  EXPECT_DOUBLE_EQ(qesa_failure_model(2, 3, 1), 1.0 / 3.0);
  for (std::uint64_t t = 1; t < 10; ++t) EXPECT_NEAR(qesa_failure_model(7, 7, t), 0.0, 1e-15);
  EXPECT_THROW(qesa_failure_model(0, 3, 1), RangeError);
  EXPECT_THROW(qesa_failure_model(2, 3, 0), RangeError);
}

TEST(QesaModel, NonIncreasingInT) {
  for (double n : {3.0, 8.0, 50.0, 1024.0}) {
    for (double m = 1; m <= n; m = std::ceil(m * 1.5)) {
      double prev = 1.0;
      for (std::uint64_t t = 1; t <= 40; ++t) {
        const double e = qesa_failure_model(m, n, t);
        EXPECT_LE(e, prev + 1e-15);
        prev = e;
      }
    }
  }
}

TEST(QesaModel, IterationDistributionSumsToOne) {
  for (std::uint64_t t = 1; t < 30; ++t) {
    double total = 0.0;
    for (const auto& [v, w] : qesa_iteration_distribution(t, 100.0)) {
      EXPECT_LE(double(v), std::min(std::pow(4.0 / 3.0, double(t - 1)), 10.0));
      total += w;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(RunQesa, FirstAttemptIsDirectMeasurement) {
  const auto init = make_superposition(2, kOcc);
  QesaConfig cfg;
  int fails = 0;
  const int trials = 20000;
  for (int i = 0; i < trials; ++i) {
    cfg.seed = trial_seed(1, i);
    cfg.max_t = 1;
    const auto trace = run_qesa(init, MarkedSet(2, {2, 3}), cfg);
    EXPECT_EQ(trace.steps.front().gamma, 0u);
    fails += !trace.success;
  }
  const double sigma = std::sqrt((1.0 / 3.0) * (2.0 / 3.0) / trials);
  EXPECT_NEAR(fails / double(trials), 1.0 / 3.0, 4 * sigma);
}

TEST(RunQesa, AllMarkedSucceedsAtOnce) {
  const auto init = testing::uniform_state(3);
  QesaConfig cfg;
  for (std::uint64_t s = 0; s < 100; ++s) {
    cfg.seed = s;
    const auto trace = run_qesa(init, MarkedSet::range(3, 0, 7), cfg);
    EXPECT_TRUE(trace.success);
    EXPECT_EQ(trace.steps.size(), 1u);
  }
}

TEST(RunQesa, TraceInvariantsAndMonteCarlo) {
  const auto init = make_superposition(2, kOcc);
  const MarkedSet marked(2, {2, 3});
  QesaConfig cfg;
  cfg.max_t = 8;
  const int trials = 20000;
  std::vector<int> failed_through(9, 0);
  for (int i = 0; i < trials; ++i) {
    cfg.seed = trial_seed(2, i);
    const auto trace = run_qesa(init, marked, cfg);
    std::uint64_t total = 0;
    for (const auto& s : trace.steps) {
      EXPECT_LE(double(s.gamma),
                std::min(std::pow(cfg.lambda, double(s.t - 1)), std::sqrt(3.0)));
      total += s.gamma;
    }
    EXPECT_EQ(trace.grover_iterations, total);
    EXPECT_EQ(trace.preparations, trace.steps.size());
    for (std::uint64_t t = 1; t <= 8; ++t) failed_through[t] += trace.steps.size() > t || !trace.success;
  }
  for (std::uint64_t t = 1; t <= 8; ++t) {
    const double p = qesa_failure_model(2, 3, t);
    const double sigma = std::sqrt(p * (1 - p) / trials);
    EXPECT_NEAR(failed_through[t] / double(trials), p, 4 * sigma + 1e-12) << t;
  }
}

TEST(RunQesa, Errors) {
  const auto init = make_superposition(2, kOcc);
  EXPECT_THROW(run_qesa(init, MarkedSet(2, {1}), QesaConfig{}), EmptyError);
  EXPECT_THROW(run_qesa(init, MarkedSet(3, {1}), QesaConfig{}), DimensionError);
  EXPECT_THROW(run_qesa(init, MarkedSet(2, {2}), QesaConfig{1.5, 10, 0}), RangeError);
  EXPECT_THROW(run_qesa(init, MarkedSet(2, {2}), QesaConfig{1.0, 10, 0}), RangeError);
}

TEST(Dha, SingleItem) {
  const Database db({{"only", 5}}, 3);
  const auto r = run_dha_minimum(db, DhaConfig{}, 1);
  EXPECT_EQ(r.minimum, 5u);
  EXPECT_TRUE(r.is_true_minimum);
  EXPECT_EQ(r.grover_iterations, 0u);
}

TEST(Dha, TitanicMajority) {
  const Database db = load_database(std::string(QSEARCH_DATA_DIR) + "/titanic.csv");
  int hits = 0;
  for (std::uint64_t s = 0; s < 200; ++s) hits += run_dha_minimum(db, DhaConfig{}, trial_seed(3, s)).minimum == 1;
  EXPECT_GT(hits, 100);
}

TEST(Dha, CostGrowsLikeSqrtN) {
  // Mean Grover iterations divided by sqrt(N) stays within a narrow band.
  std::vector<double> ratios;
  for (unsigned n = 4; n <= 10; n += 2) {
    std::vector<Record> recs;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) recs.push_back({"", v});
    const Database db(recs, n);
    double total = 0;
    const int trials = 100;
    for (int s = 0; s < trials; ++s) total += double(run_dha_minimum(db, DhaConfig{}, trial_seed(4, s)).grover_iterations);
    ratios.push_back(total / trials / std::sqrt(double(db.size())));
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  EXPECT_LT(*hi / *lo, 1.6);
}

TEST(Dha, RandomDatabasesReportFrequency) {
  std::mt19937_64 gen(61);
  int hits = 0;
  const int runs = 300;
  for (int r = 0; r < runs; ++r) {
    std::vector<std::uint64_t> vals(64);
    for (std::uint64_t i = 0; i < 64; ++i) vals[i] = i;
    std::shuffle(vals.begin(), vals.end(), gen);
    std::vector<Record> recs;
    for (int i = 0; i < 16; ++i) recs.push_back({"", vals[i]});
    const Database db(recs, 6);
    hits += run_dha_minimum(db, DhaConfig{}, trial_seed(5, r)).is_true_minimum;
  }
  RecordProperty("dha_success_frequency", std::to_string(hits / double(runs)));
  EXPECT_GT(hits, runs / 2);
}

}  // namespace
}  // namespace qsearch
