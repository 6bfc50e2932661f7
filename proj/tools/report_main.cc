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

// report tables: per-(algorithm, n) means from a runs CSV
// report series: queries-vs-b plot data for one (n, r) slice

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "latsub/report.h"

int main(int argc, char** argv) {
  CLI::App app{"Summaries of benchmark CSV files"};
  app.require_subcommand(1);

  std::string in_path;
  std::string metric = "queries";
  auto* tables = app.add_subcommand("tables", "Mean metric per algorithm and n");
  tables->add_option("--in", in_path, "runs.csv")->required()->check(CLI::ExistingFile);
  tables->add_option("--metric", metric, "queries or value")
      ->check(CLI::IsMember({"queries", "value"}));

  std::string series_in;
  latsub::Count n = 0;
  latsub::Count r = 0;
  std::string out_dir;
  std::string algorithms = "sgl,soma-dr-i,ssg,greedy";
  auto* series = app.add_subcommand("series", "Mean queries against b_pivot");
  series->add_option("--in", series_in, "runs.csv")->required()->check(CLI::ExistingFile);
  series->add_option("--n", n)->required();
  series->add_option("--r", r)->required();
  series->add_option("--out", out_dir, "Output directory")->required();
  series->add_option("--algorithms", algorithms, "Comma-separated filter");
  CLI11_PARSE(app, argc, argv);

  try {
    using namespace latsub;
    if (*tables) {
      const auto records = read_csv_file(in_path);
      std::cout << report::table_by_n(records, report::parse_metric(metric)).text;
      return 0;
    }
    std::vector<std::string> filter;
    std::stringstream list(algorithms);
    for (std::string item; std::getline(list, item, ',');) {
      if (!item.empty()) filter.push_back(item);
    }
    const auto records = read_csv_file(series_in);
    const auto data = report::series_queries_vs_b(records, n, r, filter);
    std::filesystem::create_directories(out_dir);
    const auto path = std::filesystem::path(out_dir) /
                      ("queries_vs_b_n" + std::to_string(n) + "_r" +
                       std::to_string(r) + ".dat");
    std::ofstream(path) << report::render_series(data, n, r);
    std::cout << path.string() << '\n';
  } catch (const std::exception& ex) {
    std::cerr << "report: " << ex.what() << '\n';
    return 2;
  }
  return 0;
}
