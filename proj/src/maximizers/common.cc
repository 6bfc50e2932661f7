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
#include <limits>
#include <string>

#include "latsub/maximizers.h"
#include "maximizers/internal.h"

namespace latsub {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kSgl:
      return "sgl";
    case Algorithm::kSomaDrI:
      return "soma-dr-i";
    case Algorithm::kSsg:
      return "ssg";
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kExact:
      return "exact";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kSgl, Algorithm::kSomaDrI, Algorithm::kSsg,
                      Algorithm::kGreedy, Algorithm::kExact}) {
    if (to_string(a) == name) return a;
  }
  throw ContractViolation("unknown algorithm: " + std::string(name));
}

bool is_randomized(Algorithm algorithm) {
  return algorithm == Algorithm::kSgl || algorithm == Algorithm::kSsg;
}

double AlgorithmConfig::epsilon_for(Count n) const {
  const double eps = epsilon.value_or(1.0 / (4.0 * static_cast<double>(n)));
  if (!(eps > 0.0 && eps < 1.0)) {
    throw ContractViolation("epsilon must lie in (0, 1), got " +
                            std::to_string(eps));
  }
  return eps;
}

Count probe_budget(Count k_max) {
  Count bits = 0;
  while (k_max > 0) {
    ++bits;
    k_max >>= 1;
  }
  return bits;
}

std::optional<Step> max_feasible_step(CountingOracle& oracle,
                                      const LatticeVector& x, double fx,
                                      Count e, Count k_max, double theta) {
  require_dimension(x, oracle.dimension(), "max_feasible_step");
  if (e < 0 || e >= x.size()) {
    throw ContractViolation("max_feasible_step: element out of range");
  }
  if (!(theta > 0.0)) {
    throw ContractViolation("max_feasible_step: theta must be positive");
  }
  // Invariant: every k <= lo passes (lo = 0 vacuously), every k > hi fails.
  Count lo = 0;
  Count hi = k_max;
  double lo_value = fx;
  LatticeVector probe = x;
  while (lo < hi) {
    const Count mid = lo + (hi - lo + 1) / 2;
    probe(e) = x(e) + mid;
    const double value = oracle.evaluate(probe);
    if (value - fx >= static_cast<double>(mid) * theta) {
      lo = mid;
      lo_value = value;
    } else {
      hi = mid - 1;
    }
  }
  if (lo == 0) return std::nullopt;
  return Step{lo, lo_value};
}

Count sample_size(Count n, Count budget, double epsilon) {
  if (budget < 1) throw ContractViolation("sample_size: budget must be >= 1");
  return static_cast<Count>(std::floor(static_cast<double>(n) /
                                       static_cast<double>(budget) *
                                       std::log(1.0 / epsilon)));
}

double t_bar(Count n, Count s) {
  if (n < 1 || s < 1) throw ContractViolation("t_bar: need n >= 1, s >= 1");
  if (s >= n) return 1.0;
  const double nd = static_cast<double>(n);
  return std::log(1.0 - std::exp(-std::log(2.0) / nd)) /
         std::log(1.0 - static_cast<double>(s) / nd);
}

double guarantee_bound(Algorithm algorithm, const ProblemInstance& instance,
                       double epsilon) {
  const Count n = instance.size();
  const Count r = instance.budget();
  if (algorithm == Algorithm::kExact || r == 0 || instance.is_unconstrained()) {
    return 1.0;
  }
  const double base = 1.0 - std::exp(-1.0);
  switch (algorithm) {
    case Algorithm::kSgl: {
      const Count s = std::clamp<Count>(sample_size(n, r, epsilon), 1, n);
      return base - t_bar(n, s) * epsilon;
    }
    case Algorithm::kSomaDrI:
    case Algorithm::kSsg:
      return base - epsilon;
    case Algorithm::kGreedy:
      return base;
    case Algorithm::kExact:
      break;
  }
  return 1.0;
}

Solution solve(const ProblemInstance& instance, const AlgorithmConfig& config,
               RunTrace* trace) {
  switch (config.algorithm) {
    case Algorithm::kSgl:
      return sgl(instance, config, trace);
    case Algorithm::kSomaDrI:
      return soma_dr_i(instance, config, trace);
    case Algorithm::kSsg:
      return ssg(instance, config, trace);
    case Algorithm::kGreedy:
      return greedy_lattice(instance, config, trace);
    case Algorithm::kExact:
      return exact_bruteforce(instance, kDefaultExactCap, config.deadline);
  }
  throw ContractViolation("unknown algorithm");
}

namespace internal {

double max_singleton_value(CountingOracle& oracle) {
  const Count n = oracle.dimension();
  LatticeVector x = zeros(n);
  double d = -std::numeric_limits<double>::infinity();
  for (Count e = 0; e < n; ++e) {
    d = std::max(d, evaluate_plus_one(oracle, x, e));
  }
  return d;
}

Count threshold_pass(CountingOracle& oracle, const ProblemInstance& instance,
                     Incumbent& incumbent, std::span<const Count> candidates,
                     double theta, PassRecord& record) {
  const std::uint64_t queries_before = oracle.queries();
  const LatticeVector& b = instance.bounds();
  const Count r = instance.budget();
  Count commits = 0;
  record.theta = theta;
  record.sample_size = static_cast<Count>(candidates.size());
  for (const Count e : candidates) {
    const Count k_max =
        std::min(b(e) - incumbent.x(e), r - incumbent.cardinality);
    if (k_max <= 0) continue;
    record.max_k_max = std::max(record.max_k_max, k_max);
    const auto step = max_feasible_step(oracle, incumbent.x, incumbent.value,
                                        e, k_max, theta);
    if (step && step->value >= incumbent.value) {
      incumbent.add(e, step->k, step->value);
      ++commits;
    }
  }
  record.commits = commits;
  record.queries = oracle.queries() - queries_before;
  record.value = incumbent.value;
  return commits;
}

Solution finish(Incumbent incumbent, const CountingOracle& oracle,
                const Stopwatch& watch, Count iterations) {
  Solution s;
  s.x = std::move(incumbent.x);
  s.value = incumbent.value;
  s.queries = oracle.queries();
  s.iterations = iterations;
  s.wall_time_s = watch.seconds();
  return s;
}

Solution take_everything(const ProblemInstance& instance) {
  Stopwatch watch;
  CountingOracle oracle(instance.objective());
  Incumbent inc{instance.bounds(), 0.0, l1_norm(instance.bounds())};
  inc.value = oracle.evaluate(inc.x);
  return finish(std::move(inc), oracle, watch, 0);
}

}  // namespace internal
}  // namespace latsub
