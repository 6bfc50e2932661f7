// Copyright 2026 The Authors.
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

#include <cmath>

#include "gtest/gtest.h"
#include "latsub/maximizers.h"
#include "latsub/random.h"
#include "oracles.h"

namespace latsub {
namespace {

using testing::vec;

std::optional<Step> search(const Objective& f, const LatticeVector& x, Count e,
                           Count k_max, double theta,
                           std::uint64_t* queries = nullptr) {
  CountingOracle oracle(f);
  const double fx = f(x);
  auto step = max_feasible_step(oracle, x, fx, e, k_max, theta);
  if (queries) *queries = oracle.queries();
  return step;
}

TEST(MaxFeasibleStepTest, Examples) {
  WeightedLinear linear(vec({10}));
  auto step = search(linear, vec({0}), 0, 5, 10.0);
  ASSERT_TRUE(step.has_value());
  EXPECT_EQ(step->k, 5);
  EXPECT_EQ(step->value, 50.0);

  EXPECT_FALSE(search(linear, vec({0}), 0, 5, 10.5).has_value());

  // 6·sqrt(k) >= 2k holds for every k <= 9.
  WeightedConcaveSqrt sq(vec({6}));
  step = search(sq, vec({0}), 0, 9, 2.0);
  ASSERT_TRUE(step.has_value());
  EXPECT_EQ(step->k, 9);
  EXPECT_EQ(step->k, testing::linear_scan_step(sq, vec({0}), 0, 9, 2.0));
}

TEST(MaxFeasibleStepTest, ZeroRangeCostsNothing) {
  WeightedLinear f(vec({3, 4}));
  std::uint64_t queries = 99;
  EXPECT_FALSE(search(f, vec({1, 1}), 1, 0, 1.0, &queries).has_value());
  EXPECT_EQ(queries, 0u);
}

TEST(ProbeBudgetTest, IsCeilLog2OfKPlusOne) {
  EXPECT_EQ(probe_budget(0), 0);
  EXPECT_EQ(probe_budget(1), 1);
  EXPECT_EQ(probe_budget(2), 2);
  EXPECT_EQ(probe_budget(3), 2);
  EXPECT_EQ(probe_budget(4), 3);
  EXPECT_EQ(probe_budget(7), 3);
  EXPECT_EQ(probe_budget(8), 4);
  EXPECT_EQ(probe_budget(1000), 10);
}

// Agrees with a full scan of k on random DR inputs and stays in budget.
TEST(MaxFeasibleStepTest, MatchesLinearScan) {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const Count n = uniform_int(rng, 1, 6);
    LatticeVector w(n);
    LatticeVector x(n);
    for (Count e = 0; e < n; ++e) {
      w(e) = uniform_int(rng, 1, 100);
      x(e) = uniform_int(rng, 0, 20);
    }
    const Count e = uniform_int(rng, 0, n - 1);
    const Count k_max = uniform_int(rng, 0, 64);
    const auto kind = trial % 2 == 0 ? ObjectiveKind::kWeightedLinear
                                     : ObjectiveKind::kWeightedConcaveSqrt;
    const auto f = make_objective({kind, w, nullptr});
    // Thresholds around the per-copy gain range so both outcomes occur.
    const double top = static_cast<double>(w(e));
    const double theta =
        top * static_cast<double>(uniform_int(rng, 1, 1200)) / 1000.0;

    std::uint64_t queries = 0;
    const auto step = search(*f, x, e, k_max, theta, &queries);
    const Count expected = testing::linear_scan_step(*f, x, e, k_max, theta);
    EXPECT_EQ(step ? step->k : 0, expected)
        << "trial " << trial << " x=" << to_string(x) << " e=" << e
        << " k_max=" << k_max << " theta=" << theta;
    EXPECT_LE(static_cast<Count>(queries), probe_budget(k_max));
    if (step) {
      LatticeVector y = x;
      y(e) += step->k;
      EXPECT_EQ(step->value, (*f)(y));
    }
  }
}

TEST(SampleSizeTest, FloorsTheFormula) {
  EXPECT_EQ(sample_size(100, 50, 1.0 / 400),
            static_cast<Count>(std::floor(2.0 * std::log(400.0))));
  EXPECT_EQ(sample_size(25, 50, 1.0 / 100), 2);
  EXPECT_EQ(sample_size(10, 1000, 0.5), 0);
}

TEST(TBarTest, ClosedForm) {
  EXPECT_NEAR(t_bar(100, 50), 7.177619674607532, 1e-12);
  EXPECT_NEAR(t_bar(2, 1), 1.7715533031636124, 1e-12);
  EXPECT_EQ(t_bar(10, 10), 1.0);
  EXPECT_EQ(t_bar(10, 25), 1.0);
  // Decreases as s grows towards n.
  EXPECT_LT(t_bar(1000, 999), t_bar(1000, 990));
  EXPECT_LT(t_bar(1000, 990), t_bar(1000, 500));
  EXPECT_GT(t_bar(1000, 999), 0.0);
}

TEST(ThresholdStateTest, DecaysToFloorAndStays) {
  ThresholdState state(8.0, 0.5, 4);
  EXPECT_EQ(state.theta(), 8.0);
  EXPECT_EQ(state.theta_stop(), 1.0);
  state.decay();
  EXPECT_EQ(state.theta(), 4.0);
  state.decay();
  state.decay();
  EXPECT_EQ(state.theta(), 1.0);
  EXPECT_TRUE(state.at_stop());
  state.decay();
  EXPECT_EQ(state.theta(), 1.0);
}

}  // namespace
}  // namespace latsub
