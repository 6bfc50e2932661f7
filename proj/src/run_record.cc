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

#include "latsub/run_record.h"

#include <charconv>
#include <fstream>
#include <string>
#include <system_error>

namespace latsub {
namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

template <typename T>
T parse_number(std::string_view field, const char* what) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ContractViolation(std::string("csv: bad ") + what + " field '" +
                            std::string(field) + "'");
  }
  return value;
}

bool parse_flag(std::string_view field, const char* what) {
  if (field == "0") return false;
  if (field == "1") return true;
  throw ContractViolation(std::string("csv: bad ") + what + " flag '" +
                          std::string(field) + "'");
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string format_csv_row(const RunRecord& r) {
  std::string out;
  out += r.algorithm;
  for (const std::string& field :
       {std::to_string(r.n), std::to_string(r.r), std::to_string(r.b_pivot),
        std::to_string(r.seed), r.instance_hash, format_real(r.value),
        std::to_string(r.queries), format_real(r.wall_time_s),
        std::string(r.stalled ? "1" : "0"), std::string(r.timed_out ? "1" : "0"),
        format_real(r.guarantee_bound)}) {
    out += ',';
    out += field;
  }
  return out;
}

RunRecord parse_csv_row(std::string_view line) {
  const auto f = split(strip_cr(line), ',');
  if (f.size() != 12) {
    throw ContractViolation("csv: expected 12 fields, got " +
                            std::to_string(f.size()));
  }
  RunRecord r;
  r.algorithm = std::string(f[0]);
  r.n = parse_number<Count>(f[1], "n");
  r.r = parse_number<Count>(f[2], "r");
  r.b_pivot = parse_number<Count>(f[3], "b_pivot");
  r.seed = parse_number<std::uint64_t>(f[4], "seed");
  r.instance_hash = std::string(f[5]);
  r.value = parse_number<double>(f[6], "value");
  r.queries = parse_number<std::uint64_t>(f[7], "queries");
  r.wall_time_s = parse_number<double>(f[8], "wall_time_s");
  r.stalled = parse_flag(f[9], "stalled");
  r.timed_out = parse_flag(f[10], "timed_out");
  r.guarantee_bound = parse_number<double>(f[11], "guarantee_bound");
  return r;
}

std::vector<RunRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != kCsvHeader) {
    throw ContractViolation("csv: missing or unexpected header");
  }
  std::vector<RunRecord> records;
  while (std::getline(in, line)) {
    if (strip_cr(line).empty()) continue;
    records.push_back(parse_csv_row(line));
  }
  return records;
}

std::vector<RunRecord> read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractViolation("csv: cannot open " + path);
  return read_csv(in);
}

}  // namespace latsub
