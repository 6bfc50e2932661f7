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

#include "latsub/diagnostics.h"

#include <cmath>
#include <sstream>

#include "latsub/checkers.h"
#include "latsub/maximizers.h"

namespace latsub::diagnostics {
namespace {

LatticeVector random_weights(SplitMix64& rng, Count n) {
  LatticeVector w(n);
  for (Count e = 0; e < n; ++e) w(e) = uniform_int(rng, 1, 100);
  std::sort(w.begin(), w.end());
  return w;
}

ObjectiveKind alternate(int i) {
  return i % 2 == 0 ? ObjectiveKind::kWeightedLinear
                    : ObjectiveKind::kWeightedConcaveSqrt;
}

}  // namespace

ProblemInstance random_tiny_instance(SplitMix64& rng, const TinyShape& shape,
                                     ObjectiveKind kind) {
  const Count n = uniform_int(rng, 1, shape.max_n);
  LatticeVector w = random_weights(rng, n);
  LatticeVector b(n);
  for (Count e = 0; e < n; ++e) b(e) = uniform_int(rng, 1, shape.max_b);
  const Count r = uniform_int(rng, 0, shape.max_r);
  return ProblemInstance(ObjectiveSpec{kind, std::move(w), nullptr},
                         std::move(b), r);
}

SuiteResult check_builtin_objectives() {
  SuiteResult result{"submodularity checkers", true, ""};
  std::ostringstream detail;
  const std::vector<LatticeVector> boxes = {
      (LatticeVector(2) << 3, 3).finished(),
      (LatticeVector(3) << 4, 2, 5).finished(),
      (LatticeVector(4) << 6, 6, 6, 6).finished()};
  for (ObjectiveKind kind : {ObjectiveKind::kWeightedLinear,
                             ObjectiveKind::kWeightedConcaveSqrt}) {
    for (const LatticeVector& box : boxes) {
      LatticeVector w = LatticeVector::LinSpaced(box.size(), 1, 90);
      const auto f = make_objective({kind, w, nullptr});
      if (!check_monotone(*f, box) || !check_dr_submodular(*f, box) ||
          !check_lattice_submodular(*f, box)) {
        result.passed = false;
        detail << to_string(kind) << " failed on box " << to_string(box)
               << "; ";
      }
    }
  }
  FunctionObjective product(2, [](const LatticeVector& x) {
    return static_cast<double>(x(0) * x(1));
  });
  const LatticeVector box = (LatticeVector(2) << 2, 2).finished();
  const auto dr = check_dr_submodular(product, box);
  if (dr.holds || !dr.counterexample) {
    result.passed = false;
    detail << "product x0*x1 not rejected; ";
  } else {
    detail << "product rejected at " << describe(*dr.counterexample);
  }
  result.detail = detail.str();
  return result;
}

SuiteResult check_step_search(int trials, std::uint64_t seed) {
  SuiteResult result{"step search vs linear scan", true, ""};
  SplitMix64 rng(seed);
  int disagreements = 0;
  int over_budget = 0;
  for (int t = 0; t < trials; ++t) {
    const Count n = uniform_int(rng, 1, 4);
    const auto f = make_objective({alternate(t), random_weights(rng, n), nullptr});
    LatticeVector x(n);
    for (Count e = 0; e < n; ++e) x(e) = uniform_int(rng, 0, 20);
    const Count e = uniform_int(rng, 0, n - 1);
    const Count k_max = uniform_int(rng, 0, 64);
    const double theta = 0.05 + 100.0 * static_cast<double>(rng() >> 11) /
                                    9007199254740992.0;

    CountingOracle oracle(*f);
    const double fx = (*f)(x);
    const auto step = max_feasible_step(oracle, x, fx, e, k_max, theta);
    if (static_cast<Count>(oracle.queries()) > probe_budget(k_max)) {
      ++over_budget;
    }
    Count expected = 0;
    LatticeVector y = x;
    for (Count k = 1; k <= k_max; ++k) {
      y(e) = x(e) + k;
      if ((*f)(y) - fx >= static_cast<double>(k) * theta) expected = k;
    }
    if ((step ? step->k : 0) != expected) ++disagreements;
  }
  result.passed = disagreements == 0 && over_budget == 0;
  result.detail = std::to_string(trials) + " calls, " +
                  std::to_string(disagreements) + " disagreements, " +
                  std::to_string(over_budget) + " over the probe budget";
  return result;
}

SuiteResult check_solvers_against_enumeration(int trials, std::uint64_t seed) {
  SuiteResult result{"solvers vs enumeration", true, ""};
  SplitMix64 rng(seed);
  int infeasible = 0;
  int inexact = 0;
  int below_bound = 0;
  int soma_exact = 0;
  int modular_runs = 0;
  for (int t = 0; t < trials; ++t) {
    const auto instance = random_tiny_instance(rng, {}, alternate(t));
    const Solution best = exact_bruteforce(instance);
    for (Algorithm a : {Algorithm::kSgl, Algorithm::kSomaDrI, Algorithm::kSsg,
                        Algorithm::kGreedy}) {
      AlgorithmConfig config;
      config.algorithm = a;
      config.seed = rng();
      const Solution s = solve(instance, config);
      if (!instance.is_feasible(s.x)) ++infeasible;
      const bool modular =
          instance.objective_spec().kind == ObjectiveKind::kWeightedLinear;
      if (modular && a == Algorithm::kGreedy && s.value != best.value) {
        ++inexact;
      }
      if (a == Algorithm::kSomaDrI) {
        const double bound = guarantee_bound(
            a, instance, config.epsilon_for(instance.size()));
        if (s.value < bound * best.value) ++below_bound;
        if (modular) {
          ++modular_runs;
          if (s.value == best.value) ++soma_exact;
        }
      }
    }
  }
  result.passed = infeasible == 0 && inexact == 0 && below_bound == 0;
  result.detail = std::to_string(trials) + " instances, " +
                  std::to_string(infeasible) + " infeasible outputs, " +
                  std::to_string(inexact) + " non-optimal greedy modular runs, " +
                  std::to_string(below_bound) + " soma-dr-i runs below bound; " +
                  "soma-dr-i optimal on " + std::to_string(soma_exact) + "/" +
                  std::to_string(modular_runs) + " modular instances";
  return result;
}

SuiteResult check_sgl_guarantee(int runs, std::uint64_t seed) {
  SuiteResult result{"sgl approximation guarantee", true, ""};
  SplitMix64 rng(seed);
  int met = 0;
  for (int t = 0; t < runs; ++t) {
    const auto instance = random_tiny_instance(rng, {6, 4, 8}, alternate(t));
    const Solution best = exact_bruteforce(instance);
    AlgorithmConfig config;
    config.seed = rng();
    const Solution s = sgl(instance, config);
    const double bound = guarantee_bound(Algorithm::kSgl, instance,
                                         config.epsilon_for(instance.size()));
    if (s.value >= bound * best.value) ++met;
  }
  const double fraction = static_cast<double>(met) / runs;
  result.passed = fraction >= 0.5;
  std::ostringstream detail;
  detail << met << "/" << runs << " runs met 1 - 1/e - t*eps (fraction "
         << fraction << ")";
  result.detail = detail.str();
  return result;
}

std::vector<SuiteResult> run_all(std::uint64_t seed) {
  return {check_builtin_objectives(), check_step_search(1000, seed),
          check_solvers_against_enumeration(100, mix_seed(seed, 1)),
          check_sgl_guarantee(200, mix_seed(seed, 2))};
}

}  // namespace latsub::diagnostics
