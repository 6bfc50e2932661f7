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
#include <vector>

#include "latsub/maximizers.h"
#include "latsub/random.h"
#include "maximizers/internal.h"

namespace latsub {

// The reduced ground set V' holds b_e copies of each element. A copy is
// identified only by its element id: `slots` lists the ids of the copies not
// yet selected, and all copies of e have the same marginal gain f(1_e | x).
Solution ssg(const ProblemInstance& instance, const AlgorithmConfig& config,
             RunTrace* trace) {
  const Count n = instance.size();
  const Count r = instance.budget();
  const double eps = config.epsilon_for(n);
  const LatticeVector& b = instance.bounds();

  internal::Stopwatch watch;
  CountingOracle oracle(instance.objective());
  internal::Incumbent inc = internal::start_at_zero(oracle);
  if (trace) trace->setup_queries = oracle.queries();
  if (r == 0) return internal::finish(std::move(inc), oracle, watch, 0);

  std::vector<Count> slots;
  slots.reserve(static_cast<std::size_t>(l1_norm(b)));
  for (Count e = 0; e < n; ++e) slots.insert(slots.end(), b(e), e);
  const Count reduced_size = static_cast<Count>(slots.size());
  const Count s = static_cast<Count>(
      std::floor(static_cast<double>(reduced_size) / static_cast<double>(r) *
                 std::log(1.0 / eps)));
  const Count rounds = std::min(r, reduced_size);

  SplitMix64 rng(config.seed);
  Count round = 0;
  bool timed_out = false;
  for (; round < rounds; ++round) {
    if (internal::expired(config.deadline)) {
      timed_out = true;
      break;
    }
    const std::uint64_t queries_before = oracle.queries();
    const auto count = static_cast<std::size_t>(
        std::clamp<Count>(s, 1, static_cast<Count>(slots.size())));
    partial_shuffle(std::span<Count>(slots), count, rng);

    std::size_t best = 0;
    double best_value = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const double value = internal::evaluate_plus_one(oracle, inc.x, slots[i]);
      if (i == 0 || value > best_value ||
          (value == best_value && slots[i] < slots[best])) {
        best = i;
        best_value = value;
      }
    }
    inc.add(slots[best], 1, best_value);
    slots[best] = slots.back();
    slots.pop_back();

    if (trace) {
      trace->passes.push_back(PassRecord{
          0.0, static_cast<Count>(count), 1, oracle.queries() - queries_before,
          1, inc.value});
    }
  }

  Solution out = internal::finish(std::move(inc), oracle, watch, round);
  out.timed_out = timed_out;
  return out;
}

}  // namespace latsub
