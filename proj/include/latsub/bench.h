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

// Seeded experiment matrix over synthetic instances f(x) = wᵀx: instance
// generation, grid expansion, timed solver runs and incremental CSV output.

#ifndef LATSUB_BENCH_H_
#define LATSUB_BENCH_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "latsub/maximizers.h"
#include "latsub/problem.h"
#include "latsub/random.h"
#include "latsub/report.h"
#include "latsub/run_record.h"

namespace latsub::bench {

struct Fraction {
  Count num = 1;
  Count den = 1;

  // floor(num·n / den).
  Count of(Count n) const { return num * n / den; }
  bool operator==(const Fraction&) const = default;
};

// Accepts "p/q", an integer, or a decimal such as "0.25".
Fraction parse_fraction(std::string_view text);

struct ExperimentGrid {
  std::vector<Count> n_values = {25, 50, 100, 200};
  // r = floor(fraction·n), at least 1.
  std::vector<Fraction> r_fractions = {{1, 4}, {1, 2}, {1, 1}, {2, 1}};
  Count b_pivots = 6;
  Count b_low_divisor = 20;
  Count b_high_divisor = 2;
  Count repetitions = 5;
  // Unset: ε = 1/(4n).
  std::optional<double> epsilon;
  std::chrono::duration<double> timeout{600.0};
  ObjectiveKind objective = ObjectiveKind::kWeightedLinear;

  bool operator==(const ExperimentGrid&) const = default;

  static ExperimentGrid desk() { return {}; }
  // n up to 750 with the 6.5 hour timeout.
  static ExperimentGrid full_scale();
};

// Flat key=value text; '#' starts a comment. Keys: n_values, r_fractions,
// b_pivots, b_low_divisor, b_high_divisor, repetitions, epsilon_rule
// ("1/(4n)" or a real), timeout_s, objective. Unset keys keep desk defaults.
ExperimentGrid parse_grid(std::istream& in);
ExperimentGrid load_grid(const std::string& path);
std::string format_grid(const ExperimentGrid& grid);

// Weights drawn uniformly from [1, 100] and sorted ascending, then each b_e
// drawn uniformly from [b_pivot, 4·b_pivot]. SplitMix64 seeded with `seed`.
ProblemInstance generate_instance(
    Count n, Count r, Count b_pivot, std::uint64_t seed,
    ObjectiveKind objective = ObjectiveKind::kWeightedLinear);

// FNV-1a over (n, r, w, b) as little-endian 64-bit words, 16 hex digits.
std::string instance_hash(const ProblemInstance& instance);

// Up to `count` equidistant integers spanning [floor(r/low), floor(r/high)],
// endpoints included, raised to at least 1, duplicates removed.
std::vector<Count> b_pivots_for(Count r, const ExperimentGrid& grid);

// The stated feasibility filter, verbatim: drop (n, b, r) when
// r > ||b||_inf and r >= n·||b||_inf, with ||b||_inf taken as 4·b_pivot.
bool is_discarded(Count n, Count r, Count b_pivot);

struct Cell {
  std::size_t index = 0;
  Count n = 0;
  Count r = 0;
  Count b_pivot = 0;
  Count repetition = 0;
  // mix_seed(master_seed, index). Generates the instance; solvers draw from
  // solver_seed(seed).
  std::uint64_t seed = 0;
};

inline std::uint64_t solver_seed(std::uint64_t cell_seed) {
  return mix_seed(cell_seed, 1);
}

struct DiscardedCombination {
  Count n = 0;
  Count r = 0;
  Count b_pivot = 0;
};

struct GridExpansion {
  std::vector<Cell> cells;
  std::vector<DiscardedCombination> discarded;
};

// Cells ordered by (n, r fraction, b_pivot, repetition). Throws
// ContractViolation when nothing survives the filter.
GridExpansion expand_grid(const ExperimentGrid& grid,
                          std::uint64_t master_seed);

// Runs one solver on one cell's instance under the grid timeout.
RunRecord run_cell(const ProblemInstance& instance, const Cell& cell,
                   Algorithm algorithm, const ExperimentGrid& grid);

// Deterministic solvers run only on repetition 0.
bool runs_on(Algorithm algorithm, const Cell& cell);

struct MatrixOptions {
  std::vector<Algorithm> algorithms = {Algorithm::kSgl, Algorithm::kSomaDrI,
                                       Algorithm::kSsg, Algorithm::kGreedy};
  std::uint64_t master_seed = 0;
  // CSV destination, truncated and rewritten.
  std::string csv_path;
  unsigned workers = 1;
  std::function<void(const std::string&)> log;
};

struct MatrixSummary {
  std::vector<RunRecord> records;
  std::vector<report::AggregateRow> by_n;
  std::size_t cells = 0;
  std::size_t discarded = 0;
};

// Rows reach the CSV in cell order as soon as every earlier cell is done, so
// an interrupted run keeps a valid prefix and reruns are byte-comparable.
MatrixSummary run_matrix(const ExperimentGrid& grid,
                         const MatrixOptions& options);

}  // namespace latsub::bench

#endif  // LATSUB_BENCH_H_
