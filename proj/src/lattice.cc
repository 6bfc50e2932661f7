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

#include "latsub/lattice.h"

#include <sstream>

namespace latsub {

std::string to_string(const LatticeVector& x) {
  std::ostringstream out;
  out << '(';
  for (Count e = 0; e < x.size(); ++e) {
    if (e > 0) out << ',';
    out << x(e);
  }
  out << ')';
  return out.str();
}

}  // namespace latsub
