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

#include <numeric>
#include <vector>

#include "latsub/maximizers.h"
#include "maximizers/internal.h"

namespace latsub {

Solution soma_dr_i(const ProblemInstance& instance,
                   const AlgorithmConfig& config, RunTrace* trace) {
  const Count n = instance.size();
  const Count r = instance.budget();
  const double eps = config.epsilon_for(n);
  if (instance.is_unconstrained()) return internal::take_everything(instance);

  internal::Stopwatch watch;
  CountingOracle oracle(instance.objective());
  internal::Incumbent inc = internal::start_at_zero(oracle);
  if (r == 0) return internal::finish(std::move(inc), oracle, watch, 0);

  const double d = internal::max_singleton_value(oracle);
  if (trace) trace->setup_queries = oracle.queries();
  if (!(d > 0.0)) return internal::finish(std::move(inc), oracle, watch, 0);

  ThresholdState threshold(d, eps, r);
  std::vector<Count> everything(static_cast<std::size_t>(n));
  std::iota(everything.begin(), everything.end(), Count{0});

  Count passes = 0;
  bool timed_out = false;
  for (;;) {
    if (internal::expired(config.deadline)) {
      timed_out = true;
      break;
    }
    PassRecord record;
    internal::threshold_pass(oracle, instance, inc, everything,
                             threshold.theta(), record);
    ++passes;
    if (trace) trace->passes.push_back(record);
    // The pass just run at Θ_stop is the last one.
    if (inc.cardinality >= r || threshold.at_stop()) break;
    threshold.decay();
  }

  Solution out = internal::finish(std::move(inc), oracle, watch, passes);
  out.timed_out = timed_out;
  return out;
}

}  // namespace latsub
