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

// One-off solver run on a generated instance; prints one CSV row.

#include <iostream>

#include "CLI11.hpp"
#include "latsub/bench.h"

int main(int argc, char** argv) {
  CLI::App app{"Solve one generated lattice instance"};
  latsub::Count n = 0;
  latsub::Count r = 0;
  latsub::Count b_pivot = 0;
  std::string algorithm = "sgl";
  std::uint64_t seed = 0;
  double timeout_s = 600.0;
  std::string epsilon_rule = "1/(4n)";
  std::string objective = "weighted-linear";
  bool header = false;
  bool show_x = false;
  app.add_option("--n", n, "Ground-set size")->required();
  app.add_option("--r", r, "Cardinality budget")->required();
  app.add_option("--b-pivot", b_pivot, "b_e drawn from [b, 4b]")->required();
  app.add_option("--algorithm", algorithm,
                 "sgl, soma-dr-i, ssg, greedy or exact");
  app.add_option("--seed", seed, "Instance seed; the solver uses a derived one");
  app.add_option("--timeout-s", timeout_s);
  app.add_option("--epsilon", epsilon_rule, "1/(4n) or a real in (0,1)");
  app.add_option("--objective", objective,
                 "weighted-linear or weighted-concave-sqrt");
  app.add_flag("--header", header, "Print the CSV header first");
  app.add_flag("--show-x", show_x, "Print the solution vector to stderr");
  CLI11_PARSE(app, argc, argv);

  try {
    using namespace latsub;
    bench::ExperimentGrid grid;
    grid.timeout = std::chrono::duration<double>(timeout_s);
    grid.objective = parse_objective_kind(objective);
    if (epsilon_rule != "1/(4n)") grid.epsilon = std::stod(epsilon_rule);

    const auto instance =
        bench::generate_instance(n, r, b_pivot, seed, grid.objective);
    bench::Cell cell;
    cell.n = n;
    cell.r = r;
    cell.b_pivot = b_pivot;
    cell.seed = seed;
    const Algorithm a = parse_algorithm(algorithm);
    if (show_x) {
      AlgorithmConfig config;
      config.algorithm = a;
      config.epsilon = grid.epsilon;
      config.seed = bench::solver_seed(seed);
      std::cerr << "x = " << to_string(solve(instance, config).x) << '\n';
    }
    const RunRecord rec = bench::run_cell(instance, cell, a, grid);
    if (header) std::cout << kCsvHeader << '\n';
    std::cout << format_csv_row(rec) << '\n';
  } catch (const std::exception& ex) {
    std::cerr << "solve: " << ex.what() << '\n';
    return 2;
  }
  return 0;
}
