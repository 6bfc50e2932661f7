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

// Small-instance self-checks behind `bench check`: the exhaustive property
// checkers, the step search against a linear scan, and the solvers against
// exhaustive enumeration.

#ifndef LATSUB_DIAGNOSTICS_H_
#define LATSUB_DIAGNOSTICS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "latsub/problem.h"
#include "latsub/random.h"

namespace latsub::diagnostics {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct TinyShape {
  Count max_n = 5;
  Count max_b = 3;
  Count max_r = 6;
};

// Sorted weights in [1, 100], b_e in [1, max_b], r in [0, max_r].
ProblemInstance random_tiny_instance(SplitMix64& rng, const TinyShape& shape,
                                     ObjectiveKind kind);

SuiteResult check_builtin_objectives();
SuiteResult check_step_search(int trials, std::uint64_t seed);
SuiteResult check_solvers_against_enumeration(int trials, std::uint64_t seed);
SuiteResult check_sgl_guarantee(int runs, std::uint64_t seed);

std::vector<SuiteResult> run_all(std::uint64_t seed);

}  // namespace latsub::diagnostics

#endif  // LATSUB_DIAGNOSTICS_H_
