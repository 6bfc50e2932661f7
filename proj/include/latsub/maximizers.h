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

// Cardinality-constrained maximization of monotone DR-submodular functions on
// the bounded integer lattice:
//
//   max f(x)  s.t.  ||x||_1 <= r,  0 ≼ x ≼ b.
//
// Every solver talks to f only through a CountingOracle and reports the
// number of queries it spent. The incumbent value f(x) is cached, so a
// marginal gain against the incumbent costs one query.

#ifndef LATSUB_MAXIMIZERS_H_
#define LATSUB_MAXIMIZERS_H_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "latsub/lattice.h"
#include "latsub/oracle.h"
#include "latsub/problem.h"

namespace latsub {

enum class Algorithm { kSgl, kSomaDrI, kSsg, kGreedy, kExact };

std::string_view to_string(Algorithm algorithm);
// Accepts "sgl", "soma-dr-i", "ssg", "greedy", "exact".
Algorithm parse_algorithm(std::string_view name);
bool is_randomized(Algorithm algorithm);

using Clock = std::chrono::steady_clock;

struct AlgorithmConfig {
  Algorithm algorithm = Algorithm::kSgl;
  // Unset means 1/(4n).
  std::optional<double> epsilon;
  std::uint64_t seed = 0;
  // Zero-commit passes tolerated at the floor threshold before SGL gives up.
  Count max_stalled_passes = 2;
  // Solvers return their incumbent, flagged timed_out, once this passes.
  std::optional<Clock::time_point> deadline;

  // Resolved epsilon for a ground set of size n. Throws ContractViolation
  // outside (0, 1).
  double epsilon_for(Count n) const;
};

struct Solution {
  LatticeVector x;
  double value = 0.0;
  std::uint64_t queries = 0;
  Count iterations = 0;
  double wall_time_s = 0.0;
  bool stalled = false;
  bool timed_out = false;
};

// Decreasing threshold Θ, from d = max_e f(1_e) down to Θ_stop = (ε/r)·d.
class ThresholdState {
 public:
  ThresholdState(double d, double epsilon, Count budget)
      : d_(d), theta_(d), theta_stop_(epsilon / static_cast<double>(budget) * d),
        epsilon_(epsilon) {}

  double d() const { return d_; }
  double theta() const { return theta_; }
  double theta_stop() const { return theta_stop_; }
  bool at_stop() const { return theta_ <= theta_stop_; }

  // Θ <- max{Θ·(1 - ε), Θ_stop}.
  void decay() { theta_ = std::max(theta_ * (1.0 - epsilon_), theta_stop_); }

 private:
  double d_;
  double theta_;
  double theta_stop_;
  double epsilon_;
};

// Per-pass instrumentation. A pass is one sweep over the sampled (SGL), full
// (Soma-DR-I) candidate list, or one round of SSG / greedy.
struct PassRecord {
  double theta = 0.0;
  Count sample_size = 0;
  // Largest k_max = min{b_e - x_e, r - ||x||_1} computed during the pass.
  Count max_k_max = 0;
  std::uint64_t queries = 0;
  Count commits = 0;
  double value = 0.0;
};

struct RunTrace {
  std::vector<PassRecord> passes;
  // Queries spent before the first pass (f(0), the singleton scan for d).
  std::uint64_t setup_queries = 0;
};

struct Step {
  Count k = 0;
  // f(x + k·1_e), already paid for by the search.
  double value = 0.0;
};

// Largest k in [1, k_max] with f(k·1_e | x) >= k·θ, by binary search, given
// fx = f(x). Exact when f is DR-submodular: the average per-copy gain is then
// non-increasing in k, so the predicate is downward closed. Spends at most
// ceil(log2(k_max + 1)) queries; none when k_max == 0.
std::optional<Step> max_feasible_step(CountingOracle& oracle,
                                      const LatticeVector& x, double fx,
                                      Count e, Count k_max, double theta);

// ceil(log2(k + 1)) for k >= 0.
Count probe_budget(Count k_max);

// floor((n / r)·ln(1/ε)), before clamping.
Count sample_size(Count n, Count budget, double epsilon);

// t̄ = ln[1 - exp(-ln2 / n)] / ln(1 - s/n). Defined as 1 when s >= n.
double t_bar(Count n, Count s);

// Stochastic Greedy Lattice: sampled decreasing-threshold greedy with a
// binary search for the step size of each sampled element.
Solution sgl(const ProblemInstance& instance, const AlgorithmConfig& config,
             RunTrace* trace = nullptr);

// Deterministic decreasing-threshold greedy that searches every element on
// every pass and stops after a final pass at Θ_stop.
Solution soma_dr_i(const ProblemInstance& instance,
                   const AlgorithmConfig& config, RunTrace* trace = nullptr);

// Set-domain Stochastic Greedy run on the copy reduction, where element e
// contributes b_e interchangeable copies.
Solution ssg(const ProblemInstance& instance, const AlgorithmConfig& config,
             RunTrace* trace = nullptr);

// Unit-step greedy: adds one copy of the best element per round.
Solution greedy_lattice(const ProblemInstance& instance,
                        const AlgorithmConfig& config,
                        RunTrace* trace = nullptr);

inline constexpr Count kDefaultExactCap = 1000000;

// Enumerates every feasible x; ties go to the lexicographically smallest.
// Throws CapExceeded when ∏_e (min{b_e, r} + 1) > cap.
Solution exact_bruteforce(const ProblemInstance& instance,
                          Count cap = kDefaultExactCap,
                          std::optional<Clock::time_point> deadline = {});

// Runs config.algorithm.
Solution solve(const ProblemInstance& instance, const AlgorithmConfig& config,
               RunTrace* trace = nullptr);

// The approximation factor reported next to a run: 1 - 1/e - t̄ε for SGL,
// 1 - 1/e - ε for Soma-DR-I and SSG, 1 - 1/e for greedy, 1 for exact.
double guarantee_bound(Algorithm algorithm, const ProblemInstance& instance,
                       double epsilon);

}  // namespace latsub

#endif  // LATSUB_MAXIMIZERS_H_
