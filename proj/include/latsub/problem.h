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

#ifndef LATSUB_PROBLEM_H_
#define LATSUB_PROBLEM_H_

#include "latsub/lattice.h"
#include "latsub/objective.h"

namespace latsub {

// max f(x) s.t. ||x||_1 <= r, 0 ≼ x ≼ b.
class ProblemInstance {
 public:
  // Throws ContractViolation unless every b_e >= 1, r >= 0 and the objective
  // dimension matches b.
  ProblemInstance(ObjectiveSpec objective, LatticeVector bounds, Count budget);

  Count size() const { return bounds_.size(); }
  const LatticeVector& bounds() const { return bounds_; }
  Count budget() const { return budget_; }
  const ObjectiveSpec& objective_spec() const { return spec_; }
  const Objective& objective() const { return *objective_; }

  bool is_feasible(const LatticeVector& x) const {
    return x.size() == size() && is_nonnegative(x) && precedes(x, bounds_) &&
           l1_norm(x) <= budget_;
  }

  // r >= ||b||_1: x = b is optimal for monotone f.
  bool is_unconstrained() const { return budget_ >= l1_norm(bounds_); }

 private:
  ObjectiveSpec spec_;
  ObjectivePtr objective_;
  LatticeVector bounds_;
  Count budget_;
};

}  // namespace latsub

#endif  // LATSUB_PROBLEM_H_
