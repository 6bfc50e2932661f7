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

// One row of benchmark output and its CSV encoding.

#ifndef LATSUB_RUN_RECORD_H_
#define LATSUB_RUN_RECORD_H_

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "latsub/lattice.h"

namespace latsub {

inline constexpr std::string_view kCsvHeader =
    "algorithm,n,r,b_pivot,seed,instance_hash,value,queries,wall_time_s,"
    "stalled,timed_out,guarantee_bound";

struct RunRecord {
  std::string algorithm;
  Count n = 0;
  Count r = 0;
  Count b_pivot = 0;
  std::uint64_t seed = 0;
  std::string instance_hash;
  double value = 0.0;
  std::uint64_t queries = 0;
  double wall_time_s = 0.0;
  bool stalled = false;
  bool timed_out = false;
  // 1 - 1/e - t̄ε for SGL; see guarantee_bound().
  double guarantee_bound = 0.0;

  bool operator==(const RunRecord&) const = default;
};

// Reals are written in shortest round-trip form, so parse_csv_row inverts
// format_csv_row exactly.
std::string format_csv_row(const RunRecord& record);
RunRecord parse_csv_row(std::string_view line);

// Expects kCsvHeader on the first line. Throws ContractViolation on malformed
// input.
std::vector<RunRecord> read_csv(std::istream& in);
std::vector<RunRecord> read_csv_file(const std::string& path);

// Shortest representation that parses back to the same double.
std::string format_real(double value);

}  // namespace latsub

#endif  // LATSUB_RUN_RECORD_H_
