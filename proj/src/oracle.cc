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

#include "latsub/oracle.h"

#include <string>

namespace latsub {
namespace {

void require_step(const CountingOracle& oracle, Count e, Count k) {
  if (e < 0 || e >= oracle.dimension()) {
    throw ContractViolation("marginal_gain: element " + std::to_string(e) +
                            " out of range");
  }
  if (k < 1) throw ContractViolation("marginal_gain: k must be positive");
}

}  // namespace

double CountingOracle::marginal_gain(const LatticeVector& x, Count e, Count k) {
  return marginal_gain(x, evaluate(x), e, k);
}

double CountingOracle::marginal_gain(const LatticeVector& x, double fx, Count e,
                                     Count k) {
  require_dimension(x, dimension(), "CountingOracle::marginal_gain");
  require_step(*this, e, k);
  LatticeVector y = x;
  y(e) += k;
  return evaluate(y) - fx;
}

}  // namespace latsub
