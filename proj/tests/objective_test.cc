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

#include "latsub/objective.h"

#include <cmath>

#include "gtest/gtest.h"
#include "latsub/oracle.h"
#include "latsub/random.h"
#include "oracles.h"

namespace latsub {
namespace {

using testing::vec;

TEST(EvaluateTest, WeightedLinear) {
  WeightedLinear f(vec({1, 2, 3}));
  CountingOracle oracle(f);
  EXPECT_EQ(oracle.evaluate(vec({0, 0, 0})), 0.0);
  EXPECT_EQ(oracle.evaluate(vec({1, 0, 2})), 7.0);
  EXPECT_EQ(oracle.queries(), 2u);
}

TEST(EvaluateTest, WeightedConcaveSqrt) {
  WeightedConcaveSqrt f(vec({4, 9}));
  CountingOracle oracle(f);
  EXPECT_EQ(oracle.evaluate(vec({4, 1})), 17.0);
  EXPECT_EQ(oracle.queries(), 1u);
}

TEST(EvaluateTest, OracleIsDefinedOutsideAnyBox) {
  WeightedLinear f(vec({1, 1}));
  CountingOracle oracle(f);
  EXPECT_EQ(oracle.evaluate(vec({1000, 7})), 1007.0);
}

TEST(EvaluateTest, DimensionMismatchThrowsWithoutCounting) {
  WeightedLinear f(vec({1, 2, 3}));
  CountingOracle oracle(f);
  EXPECT_THROW(oracle.evaluate(vec({1, 2})), ContractViolation);
  EXPECT_EQ(oracle.queries(), 0u);
}

TEST(EvaluateTest, BuiltinWeightsMustLieInRange) {
  EXPECT_THROW(WeightedLinear(vec({0, 5})), ContractViolation);
  EXPECT_THROW(WeightedConcaveSqrt(vec({101})), ContractViolation);
  EXPECT_THROW(make_objective({ObjectiveKind::kCustom, {}, nullptr}),
               ContractViolation);
}

TEST(EvaluateTest, KindNamesRoundTrip) {
  for (auto kind : {ObjectiveKind::kWeightedLinear,
                    ObjectiveKind::kWeightedConcaveSqrt, ObjectiveKind::kCustom}) {
    EXPECT_EQ(parse_objective_kind(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_objective_kind("quadratic"), ContractViolation);
}

TEST(MarginalGainTest, Examples) {
  WeightedLinear linear(vec({5, 7}));
  CountingOracle a(linear);
  EXPECT_EQ(a.marginal_gain(vec({0, 0}), 1, 3), 21.0);
  EXPECT_EQ(a.queries(), 2u);

  WeightedConcaveSqrt sqrt_f(vec({1}));
  CountingOracle b(sqrt_f);
  EXPECT_EQ(b.marginal_gain(vec({1}), 0, 3), 1.0);

  // Cached f(x) costs one query.
  CountingOracle c(linear);
  EXPECT_EQ(c.marginal_gain(vec({2, 1}), 17.0, 0, 2), 10.0);
  EXPECT_EQ(c.queries(), 1u);
}

TEST(MarginalGainTest, AtZeroEqualsValue) {
  WeightedConcaveSqrt f(vec({3, 8, 50}));
  CountingOracle oracle(f);
  for (Count e = 0; e < 3; ++e) {
    for (Count k = 1; k <= 5; ++k) {
      LatticeVector y = zeros(3);
      y(e) = k;
      EXPECT_DOUBLE_EQ(oracle.marginal_gain(zeros(3), e, k), f(y));
    }
  }
}

TEST(MarginalGainTest, RejectsBadSteps) {
  WeightedLinear f(vec({1, 2}));
  CountingOracle oracle(f);
  EXPECT_THROW(oracle.marginal_gain(vec({0, 0}), 0, 0), ContractViolation);
  EXPECT_THROW(oracle.marginal_gain(vec({0, 0}), 2, 1), ContractViolation);
  EXPECT_THROW(oracle.marginal_gain(vec({0, 0, 0}), 0, 1), ContractViolation);
}

// f(x + k·1_e) - f(x) equals the sum of the k unit gains along the way.
TEST(MarginalGainTest, TelescopesOverUnitSteps) {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Count n = uniform_int(rng, 1, 5);
    LatticeVector w(n);
    LatticeVector x(n);
    for (Count e = 0; e < n; ++e) {
      w(e) = uniform_int(rng, 1, 100);
      x(e) = uniform_int(rng, 0, 30);
    }
    const Count e = uniform_int(rng, 0, n - 1);
    const Count k = uniform_int(rng, 1, 25);
    WeightedLinear lin(w);
    WeightedConcaveSqrt sq(w);
    for (const Objective* f : {static_cast<const Objective*>(&lin),
                               static_cast<const Objective*>(&sq)}) {
      CountingOracle oracle(*f);
      const double direct = oracle.marginal_gain(x, e, k);
      double summed = 0.0;
      LatticeVector y = x;
      for (Count j = 0; j < k; ++j) {
        summed += oracle.marginal_gain(y, e, 1);
        ++y(e);
      }
      if (f == &lin) {
        EXPECT_EQ(direct, summed);
      } else {
        EXPECT_NEAR(direct, summed, 1e-9);
      }
    }
  }
}

TEST(ObjectiveTest, BuiltinsAreNormalized) {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Count n = uniform_int(rng, 1, 50);
    LatticeVector w(n);
    for (Count e = 0; e < n; ++e) w(e) = uniform_int(rng, 1, 100);
    EXPECT_EQ(WeightedLinear(w)(zeros(n)), 0.0);
    EXPECT_EQ(WeightedConcaveSqrt(w)(zeros(n)), 0.0);
  }
}

}  // namespace
}  // namespace latsub
