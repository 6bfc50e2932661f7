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

#include "latsub/problem.h"

#include <string>

namespace latsub {

ProblemInstance::ProblemInstance(ObjectiveSpec objective, LatticeVector bounds,
                                 Count budget)
    : spec_(std::move(objective)),
      objective_(make_objective(spec_)),
      bounds_(std::move(bounds)),
      budget_(budget) {
  if (bounds_.size() == 0) {
    throw ContractViolation("ProblemInstance: empty ground set");
  }
  if ((bounds_.array() < 1).any()) {
    throw ContractViolation("ProblemInstance: every b_e must be >= 1");
  }
  if (budget_ < 0) {
    throw ContractViolation("ProblemInstance: negative cardinality budget");
  }
  if (objective_->dimension() != bounds_.size()) {
    throw ContractViolation(
        "ProblemInstance: objective dimension " +
        std::to_string(objective_->dimension()) + " does not match n = " +
        std::to_string(bounds_.size()));
  }
}

}  // namespace latsub
