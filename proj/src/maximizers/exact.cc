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

#include <string>

#include "latsub/maximizers.h"
#include "maximizers/internal.h"

namespace latsub {

Solution exact_bruteforce(const ProblemInstance& instance, Count cap,
                          std::optional<Clock::time_point> deadline) {
  const Count r = instance.budget();
  const LatticeVector box = instance.bounds().cwiseMin(r);
  if (box_volume(box, cap) > cap) {
    throw CapExceeded("exact_bruteforce: more than " + std::to_string(cap) +
                      " candidate points");
  }

  internal::Stopwatch watch;
  CountingOracle oracle(instance.objective());
  LatticeVector x = zeros(instance.size());
  internal::Incumbent best{x, oracle.evaluate(x), 0};
  Count visited = 1;
  bool timed_out = false;
  while (next_in_box(x, box)) {
    if ((visited & 4095) == 0 && internal::expired(deadline)) {
      timed_out = true;
      break;
    }
    const Count size = x.sum();
    if (size > r) continue;
    ++visited;
    const double value = oracle.evaluate(x);
    // Strict improvement keeps the lexicographically smallest maximizer.
    if (value > best.value) best = {x, value, size};
  }

  Solution out = internal::finish(std::move(best), oracle, watch, visited);
  out.timed_out = timed_out;
  return out;
}

}  // namespace latsub
