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

#ifndef LATSUB_OBJECTIVE_H_
#define LATSUB_OBJECTIVE_H_

#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "latsub/lattice.h"

namespace latsub {

// A function f : Z_+^V -> R. Implementations must be pure; the solvers call
// them through a CountingOracle, and concurrent runs may share one instance.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual Count dimension() const = 0;

  // Callers guarantee x.size() == dimension() and x ≽ 0.
  virtual double operator()(const LatticeVector& x) const = 0;
};

using ObjectivePtr = std::shared_ptr<const Objective>;

// f(x) = Σ_e w_e·x_e, computed in integer arithmetic so threshold tests on
// its values are exact.
class WeightedLinear final : public Objective {
 public:
  explicit WeightedLinear(LatticeVector weights);

  Count dimension() const override { return weights_.size(); }
  double operator()(const LatticeVector& x) const override;

  const LatticeVector& weights() const { return weights_; }

 private:
  LatticeVector weights_;
};

// f(x) = Σ_e w_e·√x_e. Strictly DR-submodular in every coordinate.
class WeightedConcaveSqrt final : public Objective {
 public:
  explicit WeightedConcaveSqrt(LatticeVector weights);

  Count dimension() const override { return weights_.size(); }
  double operator()(const LatticeVector& x) const override;

  const LatticeVector& weights() const { return weights_; }

 private:
  LatticeVector weights_;
  Vector<double> real_weights_;
};

// Wraps an arbitrary callable; used for custom objectives and planted
// counterexamples in tests.
class FunctionObjective final : public Objective {
 public:
  using Fn = std::function<double(const LatticeVector&)>;

  FunctionObjective(Count dimension, Fn fn)
      : dimension_(dimension), fn_(std::move(fn)) {}

  Count dimension() const override { return dimension_; }
  double operator()(const LatticeVector& x) const override { return fn_(x); }

 private:
  Count dimension_;
  Fn fn_;
};

enum class ObjectiveKind { kWeightedLinear, kWeightedConcaveSqrt, kCustom };

std::string_view to_string(ObjectiveKind kind);
ObjectiveKind parse_objective_kind(std::string_view name);

// Serializable description of a built-in objective. `custom` carries the
// callable for kCustom and is ignored otherwise.
struct ObjectiveSpec {
  ObjectiveKind kind = ObjectiveKind::kWeightedLinear;
  LatticeVector weights;
  ObjectivePtr custom;
};

// Builds the evaluator. Built-in kinds require weights in [1, 100].
ObjectivePtr make_objective(const ObjectiveSpec& spec);

}  // namespace latsub

#endif  // LATSUB_OBJECTIVE_H_
