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

// Dense vectors over the nonnegative integer lattice and the coordinate-wise
// operations used throughout the solvers.

#ifndef LATSUB_LATTICE_H_
#define LATSUB_LATTICE_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace latsub {

using Count = std::int64_t;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// A point x in Z_+^V. Entry e is the multiplicity of element e.
using LatticeVector = Vector<Count>;

// Raised when a caller breaks a documented precondition (dimension mismatch,
// negative entries, out-of-range element ids).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised by exhaustive routines that refuse inputs above their size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline LatticeVector zeros(Count n) { return LatticeVector::Zero(n); }

// Characteristic vector 1_e.
inline LatticeVector unit(Count n, Count e) {
  LatticeVector v = LatticeVector::Zero(n);
  v(e) = 1;
  return v;
}

template <typename Derived>
Count l1_norm(const Eigen::MatrixBase<Derived>& x) {
  return x.cwiseAbs().sum();
}

template <typename Derived>
Count linf_norm(const Eigen::MatrixBase<Derived>& x) {
  return x.size() == 0 ? 0 : x.cwiseAbs().maxCoeff();
}

// Coordinate-wise minimum (x ∧ y).
template <typename A, typename B>
LatticeVector meet(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
  return x.cwiseMin(y);
}

// Coordinate-wise maximum (x ∨ y).
template <typename A, typename B>
LatticeVector join(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
  return x.cwiseMax(y);
}

// x ≼ y.
template <typename A, typename B>
bool precedes(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
  return x.size() == y.size() && (x.array() <= y.array()).all();
}

template <typename Derived>
bool is_nonnegative(const Eigen::MatrixBase<Derived>& x) {
  return (x.array() >= 0).all();
}

inline std::vector<Count> support(const LatticeVector& x) {
  std::vector<Count> out;
  for (Count e = 0; e < x.size(); ++e) {
    if (x(e) > 0) out.push_back(e);
  }
  return out;
}

inline void require_dimension(const LatticeVector& x, Count n,
                              const char* what) {
  if (x.size() != n) {
    throw ContractViolation(std::string(what) + ": expected dimension " +
                            std::to_string(n) + ", got " +
                            std::to_string(x.size()));
  }
}

// Number of lattice points in the box [0, box]; saturates at `limit + 1` so
// callers can compare against a cap without overflow.
inline Count box_volume(const LatticeVector& box, Count limit) {
  Count volume = 1;
  for (Count e = 0; e < box.size(); ++e) {
    const Count side = box(e) + 1;
    if (side <= 0) return 0;
    if (volume > limit / side) return limit + 1;
    volume *= side;
  }
  return volume;
}

// Advances `x` to the next point of [0, box] in lexicographic order, last
// coordinate fastest. Returns false after the final point.
inline bool next_in_box(LatticeVector& x, const LatticeVector& box) {
  for (Count e = x.size() - 1; e >= 0; --e) {
    if (x(e) < box(e)) {
      ++x(e);
      return true;
    }
    x(e) = 0;
  }
  return false;
}

std::string to_string(const LatticeVector& x);

}  // namespace latsub

#endif  // LATSUB_LATTICE_H_
