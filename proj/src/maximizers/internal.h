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

// Pieces shared by the threshold-greedy solvers. Not installed.

#ifndef LATSUB_SRC_MAXIMIZERS_INTERNAL_H_
#define LATSUB_SRC_MAXIMIZERS_INTERNAL_H_

#include <algorithm>
#include <chrono>
#include <span>

#include "latsub/maximizers.h"

namespace latsub::internal {

class Stopwatch {
 public:
  Stopwatch() : start_(Clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_;
};

inline bool expired(const std::optional<Clock::time_point>& deadline) {
  return deadline.has_value() && Clock::now() >= *deadline;
}

// Current solution with its cached value.
struct Incumbent {
  LatticeVector x;
  double value = 0.0;
  Count cardinality = 0;

  void add(Count e, Count k, double new_value) {
    x(e) += k;
    cardinality += k;
    value = new_value;
  }
};

// Starts from x = 0, paying one query for f(0).
inline Incumbent start_at_zero(CountingOracle& oracle) {
  Incumbent inc{zeros(oracle.dimension()), 0.0, 0};
  inc.value = oracle.evaluate(inc.x);
  return inc;
}

// f(x + 1_e) with x restored afterwards. One query.
inline double evaluate_plus_one(CountingOracle& oracle, LatticeVector& x,
                                Count e) {
  ++x(e);
  const double value = oracle.evaluate(x);
  --x(e);
  return value;
}

// d = max_e f(1_e). n queries.
double max_singleton_value(CountingOracle& oracle);

// One threshold sweep over `candidates` in the given order. Each accepted
// step is committed at once, so later candidates see the updated x. Returns
// the number of commits and fills the pass statistics.
Count threshold_pass(CountingOracle& oracle, const ProblemInstance& instance,
                     Incumbent& incumbent, std::span<const Count> candidates,
                     double theta, PassRecord& record);

Solution finish(Incumbent incumbent, const CountingOracle& oracle,
                const Stopwatch& watch, Count iterations);

// x = b with one query; used when r >= ||b||_1.
Solution take_everything(const ProblemInstance& instance);

}  // namespace latsub::internal

#endif  // LATSUB_SRC_MAXIMIZERS_INTERNAL_H_
