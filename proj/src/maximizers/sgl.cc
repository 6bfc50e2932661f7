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
#include "latsub/random.h"
#include "maximizers/internal.h"

namespace latsub {

Solution sgl(const ProblemInstance& instance, const AlgorithmConfig& config,
             RunTrace* trace) {
  const Count n = instance.size();
  const Count r = instance.budget();
  const double eps = config.epsilon_for(n);
  if (config.max_stalled_passes < 1) {
    throw ContractViolation("sgl: max_stalled_passes must be >= 1");
  }
  if (instance.is_unconstrained()) return internal::take_everything(instance);

  internal::Stopwatch watch;
  CountingOracle oracle(instance.objective());
  internal::Incumbent inc = internal::start_at_zero(oracle);
  if (r == 0) return internal::finish(std::move(inc), oracle, watch, 0);

  const double d = internal::max_singleton_value(oracle);
  if (trace) trace->setup_queries = oracle.queries();
  if (!(d > 0.0)) return internal::finish(std::move(inc), oracle, watch, 0);

  ThresholdState threshold(d, eps, r);
  const Count s = sample_size(n, r, eps);
  const LatticeVector& b = instance.bounds();
  SplitMix64 rng(config.seed);
  std::vector<Count> available;
  available.reserve(n);

  Count passes = 0;
  Count stalled_passes = 0;
  bool stalled = false;
  bool timed_out = false;
  while (inc.cardinality < r) {
    if (internal::expired(config.deadline)) {
      timed_out = true;
      break;
    }
    available.clear();
    for (Count e = 0; e < n; ++e) {
      if (inc.x(e) < b(e)) available.push_back(e);
    }
    if (available.empty()) break;

    const auto count = static_cast<std::size_t>(
        std::clamp<Count>(s, 1, static_cast<Count>(available.size())));
    partial_shuffle(std::span<Count>(available), count, rng);

    PassRecord record;
    const Count commits = internal::threshold_pass(
        oracle, instance, inc, std::span<const Count>(available.data(), count),
        threshold.theta(), record);
    ++passes;
    if (trace) trace->passes.push_back(record);

    if (commits == 0 && threshold.at_stop()) {
      if (++stalled_passes >= config.max_stalled_passes) {
        stalled = true;
        break;
      }
    } else {
      stalled_passes = 0;
    }
    threshold.decay();
  }

  Solution out = internal::finish(std::move(inc), oracle, watch, passes);
  out.stalled = stalled;
  out.timed_out = timed_out;
  return out;
}

}  // namespace latsub
