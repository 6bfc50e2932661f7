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

#include "latsub/bench.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace latsub::bench {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t pos = std::min(s.find(',', start), s.size());
    const auto item = trim(s.substr(start, pos - start));
    if (!item.empty()) out.push_back(item);
    start = pos + 1;
  }
  return out;
}

template <typename T>
T to_number(std::string_view s, std::string_view key) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ContractViolation("grid: bad value '" + std::string(s) +
                            "' for key " + std::string(key));
  }
  return value;
}

Count positive(Count v, std::string_view key) {
  if (v < 1) throw ContractViolation("grid: " + std::string(key) + " must be >= 1");
  return v;
}

void hash_word(std::uint64_t& h, std::uint64_t word) {
  for (int i = 0; i < 8; ++i) {
    h ^= (word >> (8 * i)) & 0xff;
    h *= 0x100000001b3ULL;
  }
}

}  // namespace

Fraction parse_fraction(std::string_view text) {
  text = trim(text);
  Fraction f;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    f.num = to_number<Count>(trim(text.substr(0, slash)), "r_fractions");
    f.den = to_number<Count>(trim(text.substr(slash + 1)), "r_fractions");
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 9) {
      throw ContractViolation("grid: too many decimals in " + std::string(text));
    }
    f.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) f.den *= 10;
    const Count w = whole.empty() ? 0 : to_number<Count>(whole, "r_fractions");
    const Count p = frac.empty() ? 0 : to_number<Count>(frac, "r_fractions");
    f.num = w * f.den + p;
  } else {
    f.num = to_number<Count>(text, "r_fractions");
  }
  if (f.num <= 0 || f.den <= 0) {
    throw ContractViolation("grid: r fraction must be positive");
  }
  const Count g = std::gcd(f.num, f.den);
  f.num /= g;
  f.den /= g;
  return f;
}

ExperimentGrid ExperimentGrid::full_scale() {
  ExperimentGrid g;
  g.n_values = {100, 200, 500, 750};
  g.timeout = std::chrono::duration<double>(6.5 * 3600.0);
  return g;
}

ExperimentGrid parse_grid(std::istream& in) {
  ExperimentGrid g;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ContractViolation("grid: line " + std::to_string(line_no) +
                              " is not key=value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "n_values") {
      g.n_values.clear();
      for (auto item : split_list(value)) {
        g.n_values.push_back(positive(to_number<Count>(item, key), key));
      }
    } else if (key == "r_fractions") {
      g.r_fractions.clear();
      for (auto item : split_list(value)) {
        g.r_fractions.push_back(parse_fraction(item));
      }
    } else if (key == "b_pivots") {
      g.b_pivots = positive(to_number<Count>(value, key), key);
    } else if (key == "b_low_divisor") {
      g.b_low_divisor = positive(to_number<Count>(value, key), key);
    } else if (key == "b_high_divisor") {
      g.b_high_divisor = positive(to_number<Count>(value, key), key);
    } else if (key == "repetitions") {
      g.repetitions = positive(to_number<Count>(value, key), key);
    } else if (key == "epsilon_rule") {
      if (value == "1/(4n)") {
        g.epsilon.reset();
      } else {
        const double eps = to_number<double>(value, key);
        if (!(eps > 0.0 && eps < 1.0)) {
          throw ContractViolation("grid: epsilon_rule must lie in (0, 1)");
        }
        g.epsilon = eps;
      }
    } else if (key == "timeout_s") {
      const double t = to_number<double>(value, key);
      if (t < 0.0) throw ContractViolation("grid: negative timeout");
      g.timeout = std::chrono::duration<double>(t);
    } else if (key == "objective") {
      g.objective = parse_objective_kind(value);
      if (g.objective == ObjectiveKind::kCustom) {
        throw ContractViolation("grid: custom objectives are library-only");
      }
    } else {
      throw ContractViolation("grid: unknown key '" + std::string(key) + "'");
    }
  }
  return g;
}

ExperimentGrid load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractViolation("grid: cannot open " + path);
  return parse_grid(in);
}

std::string format_grid(const ExperimentGrid& g) {
  std::ostringstream out;
  out << "n_values=";
  for (std::size_t i = 0; i < g.n_values.size(); ++i) {
    out << (i ? "," : "") << g.n_values[i];
  }
  out << "\nr_fractions=";
  for (std::size_t i = 0; i < g.r_fractions.size(); ++i) {
    out << (i ? "," : "") << g.r_fractions[i].num << '/' << g.r_fractions[i].den;
  }
  out << "\nb_pivots=" << g.b_pivots << "\nb_low_divisor=" << g.b_low_divisor
      << "\nb_high_divisor=" << g.b_high_divisor
      << "\nrepetitions=" << g.repetitions << "\nepsilon_rule="
      << (g.epsilon ? format_real(*g.epsilon) : std::string("1/(4n)"))
      << "\ntimeout_s=" << format_real(g.timeout.count())
      << "\nobjective=" << to_string(g.objective) << '\n';
  return out.str();
}

ProblemInstance generate_instance(Count n, Count r, Count b_pivot,
                                  std::uint64_t seed, ObjectiveKind objective) {
  if (n < 1 || r < 1 || b_pivot < 1) {
    throw ContractViolation("generate_instance: n, r, b_pivot must be >= 1");
  }
  SplitMix64 rng(seed);
  LatticeVector w(n);
  for (Count e = 0; e < n; ++e) w(e) = uniform_int(rng, 1, 100);
  std::sort(w.begin(), w.end());
  LatticeVector b(n);
  for (Count e = 0; e < n; ++e) b(e) = uniform_int(rng, b_pivot, 4 * b_pivot);
  return ProblemInstance(ObjectiveSpec{objective, std::move(w), nullptr},
                         std::move(b), r);
}

std::string instance_hash(const ProblemInstance& instance) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  hash_word(h, static_cast<std::uint64_t>(instance.size()));
  hash_word(h, static_cast<std::uint64_t>(instance.budget()));
  for (Count w : instance.objective_spec().weights) {
    hash_word(h, static_cast<std::uint64_t>(w));
  }
  for (Count b : instance.bounds()) hash_word(h, static_cast<std::uint64_t>(b));
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::vector<Count> b_pivots_for(Count r, const ExperimentGrid& grid) {
  const Count lo = r / grid.b_low_divisor;
  const Count hi = std::max(lo, r / grid.b_high_divisor);
  const Count steps = grid.b_pivots - 1;
  std::vector<Count> out;
  for (Count i = 0; i <= steps; ++i) {
    // Nearest integer to lo + i·(hi - lo)/steps.
    const Count offset =
        steps == 0 ? 0 : (2 * i * (hi - lo) + steps) / (2 * steps);
    const Count pivot = std::max<Count>(1, lo + offset);
    if (out.empty() || out.back() != pivot) out.push_back(pivot);
  }
  return out;
}

bool is_discarded(Count n, Count r, Count b_pivot) {
  const Count b_inf = 4 * b_pivot;
  return r > b_inf && r >= n * b_inf;
}

GridExpansion expand_grid(const ExperimentGrid& grid,
                          std::uint64_t master_seed) {
  GridExpansion out;
  for (Count n : grid.n_values) {
    for (const Fraction& fraction : grid.r_fractions) {
      const Count r = std::max<Count>(1, fraction.of(n));
      for (Count pivot : b_pivots_for(r, grid)) {
        if (is_discarded(n, r, pivot)) {
          out.discarded.push_back({n, r, pivot});
          continue;
        }
        for (Count rep = 0; rep < grid.repetitions; ++rep) {
          Cell cell;
          cell.index = out.cells.size();
          cell.n = n;
          cell.r = r;
          cell.b_pivot = pivot;
          cell.repetition = rep;
          cell.seed = mix_seed(master_seed, cell.index);
          out.cells.push_back(cell);
        }
      }
    }
  }
  if (out.cells.empty()) {
    throw ContractViolation("expand_grid: no cells left after discarding");
  }
  return out;
}

bool runs_on(Algorithm algorithm, const Cell& cell) {
  return is_randomized(algorithm) || cell.repetition == 0;
}

RunRecord run_cell(const ProblemInstance& instance, const Cell& cell,
                   Algorithm algorithm, const ExperimentGrid& grid) {
  AlgorithmConfig config;
  config.algorithm = algorithm;
  config.epsilon = grid.epsilon;
  config.seed = solver_seed(cell.seed);
  config.deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(grid.timeout);
  const Solution solution = solve(instance, config);

  RunRecord rec;
  rec.algorithm = std::string(to_string(algorithm));
  rec.n = cell.n;
  rec.r = cell.r;
  rec.b_pivot = cell.b_pivot;
  rec.seed = cell.seed;
  rec.instance_hash = instance_hash(instance);
  rec.value = solution.value;
  rec.queries = solution.queries;
  rec.stalled = solution.stalled;
  rec.timed_out =
      solution.timed_out || solution.wall_time_s > grid.timeout.count();
  rec.wall_time_s = rec.timed_out ? grid.timeout.count() : solution.wall_time_s;
  rec.guarantee_bound = guarantee_bound(algorithm, instance,
                                        config.epsilon_for(instance.size()));
  return rec;
}

MatrixSummary run_matrix(const ExperimentGrid& grid,
                         const MatrixOptions& options) {
  if (options.algorithms.empty()) {
    throw ContractViolation("run_matrix: no algorithms requested");
  }
  const GridExpansion expansion = expand_grid(grid, options.master_seed);
  auto log = [&](const std::string& msg) {
    if (options.log) options.log(msg);
  };
  for (const auto& d : expansion.discarded) {
    log("discarded n=" + std::to_string(d.n) + " r=" + std::to_string(d.r) +
        " b_pivot=" + std::to_string(d.b_pivot));
  }

  std::ofstream csv(options.csv_path, std::ios::trunc);
  if (!csv) throw ContractViolation("run_matrix: cannot write " + options.csv_path);
  csv << kCsvHeader << '\n' << std::flush;

  const std::size_t total = expansion.cells.size();
  std::vector<std::vector<RunRecord>> done(total);
  std::vector<bool> ready(total, false);
  std::size_t next_to_write = 0;
  std::mutex mu;
  std::atomic<std::size_t> next_cell{0};

  auto work = [&] {
    for (;;) {
      const std::size_t i = next_cell.fetch_add(1);
      if (i >= total) return;
      const Cell& cell = expansion.cells[i];
      const ProblemInstance instance = generate_instance(
          cell.n, cell.r, cell.b_pivot, cell.seed, grid.objective);
      std::vector<RunRecord> rows;
      for (Algorithm a : options.algorithms) {
        if (runs_on(a, cell)) rows.push_back(run_cell(instance, cell, a, grid));
      }
      std::lock_guard<std::mutex> lock(mu);
      done[i] = std::move(rows);
      ready[i] = true;
      while (next_to_write < total && ready[next_to_write]) {
        for (const RunRecord& rec : done[next_to_write]) {
          csv << format_csv_row(rec) << '\n';
        }
        csv.flush();
        ++next_to_write;
      }
      log("cell " + std::to_string(i + 1) + "/" + std::to_string(total) +
          " n=" + std::to_string(cell.n) + " r=" + std::to_string(cell.r) +
          " b_pivot=" + std::to_string(cell.b_pivot) +
          " rep=" + std::to_string(cell.repetition));
    }
  };

  std::exception_ptr failure;
  auto worker = [&] {
    try {
      work();
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
      next_cell.store(total);
    }
  };

  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  MatrixSummary summary;
  summary.cells = total;
  summary.discarded = expansion.discarded.size();
  for (auto& rows : done) {
    for (auto& rec : rows) summary.records.push_back(std::move(rec));
  }
  summary.by_n = report::aggregate(summary.records, report::GroupBy::kN);
  return summary;
}

}  // namespace latsub::bench
