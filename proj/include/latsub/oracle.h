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

#ifndef LATSUB_ORACLE_H_
#define LATSUB_ORACLE_H_

#include <cstdint>

#include "latsub/lattice.h"
#include "latsub/objective.h"

namespace latsub {

// Value-oracle access to an objective. Every evaluation of f at a point is
// one query. One oracle per solver run; not thread-safe.
class CountingOracle {
 public:
  explicit CountingOracle(const Objective& objective)
      : objective_(&objective) {}

  double evaluate(const LatticeVector& x) {
    require_dimension(x, objective_->dimension(), "CountingOracle::evaluate");
    ++queries_;
    return (*objective_)(x);
  }

  // f(x + k·1_e) - f(x). Two queries.
  double marginal_gain(const LatticeVector& x, Count e, Count k);

  // f(x + k·1_e) - f(x) given the cached value fx = f(x). One query.
  double marginal_gain(const LatticeVector& x, double fx, Count e, Count k);

  std::uint64_t queries() const { return queries_; }
  Count dimension() const { return objective_->dimension(); }
  const Objective& objective() const { return *objective_; }

 private:
  const Objective* objective_;
  std::uint64_t queries_ = 0;
};

}  // namespace latsub

#endif  // LATSUB_ORACLE_H_
