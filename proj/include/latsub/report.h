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

// Aggregation of benchmark rows into per-(algorithm, n) tables and
// queries-versus-b plot series.

#ifndef LATSUB_REPORT_H_
#define LATSUB_REPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latsub/lattice.h"
#include "latsub/run_record.h"

namespace latsub::report {

enum class Metric { kQueries, kValue };

Metric parse_metric(std::string_view name);

// Means are taken over runs that finished inside the timeout; they are empty
// when every run of the group timed out.
struct AggregateRow {
  std::string algorithm;
  Count n = 0;
  // Set only for (n, r, b_pivot) groups.
  std::optional<Count> r;
  std::optional<Count> b_pivot;
  std::optional<double> mean_value;
  std::optional<double> mean_queries;
  std::optional<double> mean_wall_time_s;
  // Runs behind the means; timed-out runs are counted only in timeout_count.
  Count run_count = 0;
  Count timeout_count = 0;

  bool operator==(const AggregateRow&) const = default;
};

enum class GroupBy { kN, kCell };

// Rows sorted by (algorithm rank, n, r, b_pivot). The result does not depend
// on the order of `records`.
std::vector<AggregateRow> aggregate(const std::vector<RunRecord>& records,
                                    GroupBy group_by);

struct Table {
  std::vector<AggregateRow> rows;
  // Algorithm-by-n grid of the chosen metric ("-" where no run finished),
  // followed by a "# detail" section holding every field of `rows`.
  std::string text;
};

// Throws ContractViolation on empty input.
Table table_by_n(const std::vector<RunRecord>& records, Metric metric);

// Reads the "# detail" section written by table_by_n.
std::vector<AggregateRow> parse_table(std::string_view text);

struct SeriesPoint {
  double b_pivot = 0.0;
  double mean_queries = 0.0;
  Count run_count = 0;
};

struct Series {
  std::string algorithm;
  // Ascending in b_pivot.
  std::vector<SeriesPoint> points;
};

// One series per requested algorithm over the (n, r) slice. Throws
// ContractViolation when `algorithms` is empty or the slice has no rows.
std::vector<Series> series_queries_vs_b(const std::vector<RunRecord>& records,
                                        Count n, Count r,
                                        const std::vector<std::string>& algorithms);

// Whitespace-delimited blocks, one per algorithm, separated by two blank
// lines (gnuplot `index` layout).
std::string render_series(const std::vector<Series>& series, Count n, Count r);

}  // namespace latsub::report

#endif  // LATSUB_REPORT_H_
