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

#include "latsub/report.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "latsub/maximizers.h"

namespace latsub::report {
namespace {

int algorithm_rank(const std::string& name) {
  static constexpr std::string_view kOrder[] = {"sgl", "soma-dr-i", "ssg",
                                                "greedy", "exact"};
  for (int i = 0; i < 5; ++i) {
    if (kOrder[i] == name) return i;
  }
  return 5;
}

bool algorithm_less(const std::string& a, const std::string& b) {
  const int ra = algorithm_rank(a);
  const int rb = algorithm_rank(b);
  return ra != rb ? ra < rb : a < b;
}

// Sums in sorted order so the result is independent of input order.
double sorted_mean(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

struct GroupKey {
  std::string algorithm;
  Count n;
  Count r;
  Count b_pivot;

  bool operator<(const GroupKey& o) const {
    if (algorithm != o.algorithm) return algorithm_less(algorithm, o.algorithm);
    return std::tie(n, r, b_pivot) < std::tie(o.n, o.r, o.b_pivot);
  }
};

struct Accumulator {
  std::vector<double> values;
  std::vector<double> queries;
  std::vector<double> wall_times;
  Count timeouts = 0;
};

std::string format_cell(const std::optional<double>& v) {
  if (!v) return "-";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", *v);
  return buf;
}

std::string format_exact(const std::optional<double>& v) {
  return v ? format_real(*v) : "-";
}

std::optional<double> parse_optional(const std::string& token) {
  if (token == "-") return std::nullopt;
  return std::stod(token);
}

}  // namespace

Metric parse_metric(std::string_view name) {
  if (name == "queries") return Metric::kQueries;
  if (name == "value") return Metric::kValue;
  throw ContractViolation("unknown metric: " + std::string(name));
}

std::vector<AggregateRow> aggregate(const std::vector<RunRecord>& records,
                                    GroupBy group_by) {
  std::map<GroupKey, Accumulator> groups;
  for (const RunRecord& rec : records) {
    GroupKey key{rec.algorithm, rec.n, 0, 0};
    if (group_by == GroupBy::kCell) {
      key.r = rec.r;
      key.b_pivot = rec.b_pivot;
    }
    Accumulator& acc = groups[key];
    if (rec.timed_out) {
      ++acc.timeouts;
      continue;
    }
    acc.values.push_back(rec.value);
    acc.queries.push_back(static_cast<double>(rec.queries));
    acc.wall_times.push_back(rec.wall_time_s);
  }

  std::vector<AggregateRow> rows;
  rows.reserve(groups.size());
  for (const auto& [key, acc] : groups) {
    AggregateRow row;
    row.algorithm = key.algorithm;
    row.n = key.n;
    if (group_by == GroupBy::kCell) {
      row.r = key.r;
      row.b_pivot = key.b_pivot;
    }
    row.run_count = static_cast<Count>(acc.values.size());
    row.timeout_count = acc.timeouts;
    if (row.run_count > 0) {
      row.mean_value = sorted_mean(acc.values);
      row.mean_queries = sorted_mean(acc.queries);
      row.mean_wall_time_s = sorted_mean(acc.wall_times);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Table table_by_n(const std::vector<RunRecord>& records, Metric metric) {
  if (records.empty()) throw ContractViolation("table_by_n: no records");
  Table table;
  table.rows = aggregate(records, GroupBy::kN);

  std::set<Count> ns;
  std::vector<std::string> algorithms;
  std::map<std::pair<std::string, Count>, const AggregateRow*> by_cell;
  for (const AggregateRow& row : table.rows) {
    ns.insert(row.n);
    if (algorithms.empty() || algorithms.back() != row.algorithm) {
      algorithms.push_back(row.algorithm);
    }
    by_cell[{row.algorithm, row.n}] = &row;
  }

  std::ostringstream out;
  out << (metric == Metric::kQueries ? "Average oracle queries"
                                     : "Average return value")
      << " by n\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%-12s", "algorithm");
  out << buf;
  for (Count n : ns) {
    std::snprintf(buf, sizeof(buf), " %14lld", static_cast<long long>(n));
    out << buf;
  }
  out << '\n';
  for (const std::string& algorithm : algorithms) {
    std::snprintf(buf, sizeof(buf), "%-12s", algorithm.c_str());
    out << buf;
    for (Count n : ns) {
      std::optional<double> v;
      if (auto it = by_cell.find({algorithm, n}); it != by_cell.end()) {
        v = metric == Metric::kQueries ? it->second->mean_queries
                                       : it->second->mean_value;
      }
      std::snprintf(buf, sizeof(buf), " %14s", format_cell(v).c_str());
      out << buf;
    }
    out << '\n';
  }

  out << "\n# detail\n"
      << "algorithm n runs timeouts mean_value mean_queries "
         "mean_wall_time_s\n";
  for (const AggregateRow& row : table.rows) {
    out << row.algorithm << ' ' << row.n << ' ' << row.run_count << ' '
        << row.timeout_count << ' ' << format_exact(row.mean_value) << ' '
        << format_exact(row.mean_queries) << ' '
        << format_exact(row.mean_wall_time_s) << '\n';
  }
  table.text = out.str();
  return table;
}

std::vector<AggregateRow> parse_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line) && line != "# detail") {
  }
  if (!in) throw ContractViolation("parse_table: no detail section");
  std::getline(in, line);  // column names
  std::vector<AggregateRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    AggregateRow row;
    std::string value, queries, wall;
    if (!(fields >> row.algorithm >> row.n >> row.run_count >>
          row.timeout_count >> value >> queries >> wall)) {
      throw ContractViolation("parse_table: malformed row '" + line + "'");
    }
    row.mean_value = parse_optional(value);
    row.mean_queries = parse_optional(queries);
    row.mean_wall_time_s = parse_optional(wall);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Series> series_queries_vs_b(
    const std::vector<RunRecord>& records, Count n, Count r,
    const std::vector<std::string>& algorithms) {
  if (algorithms.empty()) {
    throw ContractViolation("series_queries_vs_b: empty algorithm filter");
  }
  std::vector<RunRecord> slice;
  for (const RunRecord& rec : records) {
    if (rec.n == n && rec.r == r) slice.push_back(rec);
  }
  if (slice.empty()) {
    throw ContractViolation("series_queries_vs_b: no rows for n=" +
                            std::to_string(n) + " r=" + std::to_string(r));
  }
  const auto rows = aggregate(slice, GroupBy::kCell);
  std::vector<Series> out;
  for (const std::string& algorithm : algorithms) {
    Series series{algorithm, {}};
    for (const AggregateRow& row : rows) {
      if (row.algorithm != algorithm || !row.mean_queries) continue;
      series.points.push_back({static_cast<double>(*row.b_pivot),
                               *row.mean_queries, row.run_count});
    }
    std::sort(series.points.begin(), series.points.end(),
              [](const SeriesPoint& a, const SeriesPoint& b) {
                return a.b_pivot < b.b_pivot;
              });
    out.push_back(std::move(series));
  }
  return out;
}

std::string render_series(const std::vector<Series>& series, Count n, Count r) {
  std::ostringstream out;
  out << "# oracle queries vs b_pivot, n=" << n << " r=" << r << '\n';
  bool first = true;
  for (const Series& s : series) {
    if (!first) out << "\n\n";
    first = false;
    out << "# algorithm: " << s.algorithm << '\n'
        << "# b_pivot mean_queries runs\n";
    for (const SeriesPoint& p : s.points) {
      out << format_real(p.b_pivot) << ' ' << format_real(p.mean_queries) << ' '
          << p.run_count << '\n';
    }
  }
  return out.str();
}

}  // namespace latsub::report
