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

// Exhaustive property checkers over a box [0, box]. They are test oracles and
// refuse boxes above the cap instead of sampling.

#ifndef LATSUB_CHECKERS_H_
#define LATSUB_CHECKERS_H_

#include <optional>
#include <string>

#include "latsub/lattice.h"
#include "latsub/objective.h"

namespace latsub {

inline constexpr Count kDefaultCheckCap = 100000;

// A violating configuration. For the DR and monotonicity checks `e` is the
// incremented element; for the lattice check `e` is unused (-1).
struct Counterexample {
  LatticeVector x;
  LatticeVector y;
  Count e = -1;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct CheckResult {
  bool holds = true;
  std::optional<Counterexample> counterexample;

  explicit operator bool() const { return holds; }
};

std::string describe(const Counterexample& c);

// f(x + 1_e) >= f(x) for every x and x + 1_e in the box. Single increments
// suffice by transitivity.
CheckResult check_monotone(const Objective& f, const LatticeVector& box,
                           Count cap = kDefaultCheckCap);

// f(x + 1_e) - f(x) >= f(y + 1_e) - f(y) for all x ≼ y ≼ box and all e.
// Verified on covering pairs y = x + 1_{e'}; any x ≼ y is joined by a chain of
// such pairs inside the box, so the check is exact. The increment at y may
// leave the box by one unit.
CheckResult check_dr_submodular(const Objective& f, const LatticeVector& box,
                                Count cap = kDefaultCheckCap);

// f(x) + f(y) >= f(x ∧ y) + f(x ∨ y) for all x, y in the box. Verified on the
// local squares {z, z + 1_e, z + 1_e', z + 1_e + 1_e'}, which is equivalent on
// a product of chains. The reported pair is (z + 1_e, z + 1_e').
CheckResult check_lattice_submodular(const Objective& f,
                                     const LatticeVector& box,
                                     Count cap = kDefaultCheckCap);

}  // namespace latsub

#endif  // LATSUB_CHECKERS_H_
