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

#include "latsub/checkers.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace latsub {
namespace {

// Absolute slack, scaled by the magnitude of the compared quantities, so that
// equalities computed through different summation orders are not reported.
constexpr double kRelativeSlack = 1e-9;

bool at_least(double lhs, double rhs) {
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return lhs >= rhs - kRelativeSlack * scale;
}

void require_box(const Objective& f, const LatticeVector& box, Count cap,
                 const char* what) {
  require_dimension(box, f.dimension(), what);
  if (!is_nonnegative(box)) {
    throw ContractViolation(std::string(what) + ": negative box entry");
  }
  const Count volume = box_volume(box, cap);
  if (volume > cap) {
    throw CapExceeded(std::string(what) + ": box " + to_string(box) +
                      " has more than " + std::to_string(cap) + " points");
  }
}

CheckResult fail(LatticeVector x, LatticeVector y, Count e, double lhs,
                 double rhs) {
  return {false, Counterexample{std::move(x), std::move(y), e, lhs, rhs}};
}

}  // namespace

std::string describe(const Counterexample& c) {
  std::ostringstream out;
  out << "x=" << to_string(c.x) << " y=" << to_string(c.y);
  if (c.e >= 0) out << " e=" << c.e;
  out << " lhs=" << c.lhs << " rhs=" << c.rhs;
  return out.str();
}

CheckResult check_monotone(const Objective& f, const LatticeVector& box,
                           Count cap) {
  require_box(f, box, cap, "check_monotone");
  const Count n = box.size();
  LatticeVector x = zeros(n);
  do {
    const double fx = f(x);
    for (Count e = 0; e < n; ++e) {
      if (x(e) >= box(e)) continue;
      LatticeVector y = x;
      ++y(e);
      const double fy = f(y);
      if (!at_least(fy, fx)) return fail(x, y, e, fy, fx);
    }
  } while (next_in_box(x, box));
  return {};
}

CheckResult check_dr_submodular(const Objective& f, const LatticeVector& box,
                                Count cap) {
  require_box(f, box, cap, "check_dr_submodular");
  const Count n = box.size();
  LatticeVector x = zeros(n);
  do {
    const double fx = f(x);
    for (Count e = 0; e < n; ++e) {
      LatticeVector x_up = x;
      ++x_up(e);
      const double gain_x = f(x_up) - fx;
      for (Count dir = 0; dir < n; ++dir) {
        if (x(dir) >= box(dir)) continue;
        LatticeVector y = x;
        ++y(dir);
        LatticeVector y_up = y;
        ++y_up(e);
        const double gain_y = f(y_up) - f(y);
        if (!at_least(gain_x, gain_y)) return fail(x, y, e, gain_x, gain_y);
      }
    }
  } while (next_in_box(x, box));
  return {};
}

CheckResult check_lattice_submodular(const Objective& f,
                                     const LatticeVector& box, Count cap) {
  require_box(f, box, cap, "check_lattice_submodular");
  const Count n = box.size();
  LatticeVector z = zeros(n);
  do {
    const double fz = f(z);
    for (Count e = 0; e < n; ++e) {
      if (z(e) >= box(e)) continue;
      LatticeVector x = z;
      ++x(e);
      const double fx = f(x);
      for (Count e2 = e + 1; e2 < n; ++e2) {
        if (z(e2) >= box(e2)) continue;
        LatticeVector y = z;
        ++y(e2);
        const double lhs = fx + f(y);
        const double rhs = fz + f(join(x, y));
        if (!at_least(lhs, rhs)) return fail(x, y, -1, lhs, rhs);
      }
    }
  } while (next_in_box(z, box));
  return {};
}

}  // namespace latsub
