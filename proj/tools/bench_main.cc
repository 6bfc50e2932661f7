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

// bench run: seeded experiment matrix to <out>/runs.csv
// bench check: small-instance self-checks

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "latsub/bench.h"
#include "latsub/diagnostics.h"
#include "latsub/report.h"

namespace {

std::vector<latsub::Algorithm> parse_algorithms(const std::string& list) {
  std::vector<latsub::Algorithm> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(latsub::parse_algorithm(item));
  }
  return out;
}

int run(const std::string& grid_path, const std::string& algorithms,
        std::uint64_t master_seed, const std::string& out_dir,
        unsigned workers, bool full_scale, bool quiet) {
  using namespace latsub;
  bench::ExperimentGrid grid = full_scale ? bench::ExperimentGrid::full_scale()
                                          : bench::ExperimentGrid::desk();
  if (!grid_path.empty()) {
    grid = bench::load_grid(grid_path);
    if (full_scale) {
      const auto full = bench::ExperimentGrid::full_scale();
      grid.n_values = full.n_values;
      grid.timeout = full.timeout;
    }
  }
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);
  std::ofstream(dir / "grid.txt") << bench::format_grid(grid);

  bench::MatrixOptions options;
  options.algorithms = parse_algorithms(algorithms);
  options.master_seed = master_seed;
  options.csv_path = (dir / "runs.csv").string();
  options.workers = workers;
  if (!quiet) options.log = [](const std::string& msg) { std::cerr << msg << '\n'; };

  const auto summary = bench::run_matrix(grid, options);
  std::cerr << summary.cells << " cells, " << summary.discarded
            << " discarded combinations, " << summary.records.size()
            << " rows -> " << options.csv_path << '\n';
  for (auto metric : {report::Metric::kQueries, report::Metric::kValue}) {
    const auto table = report::table_by_n(summary.records, metric);
    std::cout << table.text.substr(0, table.text.find("\n# detail")) << '\n';
  }
  return 0;
}

int check(std::uint64_t seed) {
  bool ok = true;
  for (const auto& suite : latsub::diagnostics::run_all(seed)) {
    std::cout << (suite.passed ? "PASS " : "FAIL ") << suite.name << ": "
              << suite.detail << '\n';
    ok = ok && suite.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark harness for lattice submodular maximization"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "Run the experiment matrix");
  std::string grid_path;
  std::string algorithms = "sgl,soma-dr-i,ssg,greedy";
  std::uint64_t master_seed = 0;
  std::string out_dir;
  unsigned workers = 1;
  bool full_scale = false;
  bool quiet = false;
  run_cmd->add_option("--grid", grid_path, "key=value grid file")
      ->check(CLI::ExistingFile);
  run_cmd->add_option("--algorithms", algorithms,
                      "Comma-separated: sgl,soma-dr-i,ssg,greedy,exact");
  run_cmd->add_option("--master-seed", master_seed)->required();
  run_cmd->add_option("--out", out_dir, "Output directory")->required();
  run_cmd->add_option("--workers", workers)->check(CLI::PositiveNumber);
  run_cmd->add_flag("--full-scale", full_scale,
                    "n in {100,200,500,750} with a 6.5 h timeout");
  run_cmd->add_flag("--quiet", quiet, "No per-cell progress on stderr");

  auto* check_cmd = app.add_subcommand("check", "Run the small-instance checks");
  std::uint64_t check_seed = 1;
  check_cmd->add_option("--seed", check_seed);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run_cmd) {
      return run(grid_path, algorithms, master_seed, out_dir, workers,
                 full_scale, quiet);
    }
    return check(check_seed);
  } catch (const std::exception& ex) {
    std::cerr << "bench: " << ex.what() << '\n';
    return 2;
  }
}
