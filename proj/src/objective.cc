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

#include "latsub/objective.h"

#include <cmath>
#include <string>

namespace latsub {
namespace {

void require_builtin_weights(const LatticeVector& w) {
  if (w.size() == 0) throw ContractViolation("objective: empty weight vector");
  if ((w.array() < 1).any() || (w.array() > 100).any()) {
    throw ContractViolation("objective: weights must lie in [1, 100]");
  }
}

}  // namespace

WeightedLinear::WeightedLinear(LatticeVector weights)
    : weights_(std::move(weights)) {
  require_builtin_weights(weights_);
}

double WeightedLinear::operator()(const LatticeVector& x) const {
  return static_cast<double>(weights_.dot(x));
}

WeightedConcaveSqrt::WeightedConcaveSqrt(LatticeVector weights)
    : weights_(std::move(weights)), real_weights_(weights_.cast<double>()) {
  require_builtin_weights(weights_);
}

double WeightedConcaveSqrt::operator()(const LatticeVector& x) const {
  return real_weights_.dot(x.cast<double>().cwiseSqrt());
}

std::string_view to_string(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kWeightedLinear:
      return "weighted-linear";
    case ObjectiveKind::kWeightedConcaveSqrt:
      return "weighted-concave-sqrt";
    case ObjectiveKind::kCustom:
      return "custom";
  }
  return "unknown";
}

ObjectiveKind parse_objective_kind(std::string_view name) {
  if (name == "weighted-linear") return ObjectiveKind::kWeightedLinear;
  if (name == "weighted-concave-sqrt") {
    return ObjectiveKind::kWeightedConcaveSqrt;
  }
  if (name == "custom") return ObjectiveKind::kCustom;
  throw ContractViolation("unknown objective kind: " + std::string(name));
}

ObjectivePtr make_objective(const ObjectiveSpec& spec) {
  switch (spec.kind) {
    case ObjectiveKind::kWeightedLinear:
      return std::make_shared<WeightedLinear>(spec.weights);
    case ObjectiveKind::kWeightedConcaveSqrt:
      return std::make_shared<WeightedConcaveSqrt>(spec.weights);
    case ObjectiveKind::kCustom:
      if (!spec.custom) {
        throw ContractViolation("custom objective without an evaluator");
      }
      return spec.custom;
  }
  throw ContractViolation("unknown objective kind");
}

}  // namespace latsub
