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

#include "latsub/maximizers.h"
#include "maximizers/internal.h"

namespace latsub {

Solution greedy_lattice(const ProblemInstance& instance,
                        const AlgorithmConfig& config, RunTrace* trace) {
  const Count n = instance.size();
  const Count r = instance.budget();
  const LatticeVector& b = instance.bounds();

  internal::Stopwatch watch;
  CountingOracle oracle(instance.objective());
  internal::Incumbent inc = internal::start_at_zero(oracle);
  if (trace) trace->setup_queries = oracle.queries();

  Count round = 0;
  bool timed_out = false;
  for (; round < r; ++round) {
    if (internal::expired(config.deadline)) {
      timed_out = true;
      break;
    }
    const std::uint64_t queries_before = oracle.queries();
    Count best = -1;
    double best_value = 0.0;
    Count candidates = 0;
    for (Count e = 0; e < n; ++e) {
      if (inc.x(e) >= b(e)) continue;
      ++candidates;
      const double value = internal::evaluate_plus_one(oracle, inc.x, e);
      if (best < 0 || value > best_value) {
        best = e;
        best_value = value;
      }
    }
    if (best < 0 || !(best_value > inc.value)) break;
    inc.add(best, 1, best_value);
    if (trace) {
      trace->passes.push_back(PassRecord{0.0, candidates, 1,
                                         oracle.queries() - queries_before, 1,
                                         inc.value});
    }
  }

  Solution out = internal::finish(std::move(inc), oracle, watch, round);
  out.timed_out = timed_out;
  return out;
}

}  // namespace latsub
