// Copyright 2026 The qvs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qvs/andor.hpp"
#include "qvs/counting.hpp"
#include "qvs/oracles.hpp"
#include "qvs/perceptron.hpp"
#include "qvs/search.hpp"

namespace qvs {

/// Runs fn(0..count-1) on up to `jobs` threads; results come back in index order.
template <typename Fn>
auto parallel_map(std::size_t count, int jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}));
  std::vector<std::optional<Result>> slots(count);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(count, jobs < 1 ? 1 : jobs));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) slots[i].emplace(fn(i));
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += workers) slots[i].emplace(fn(i));
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  std::vector<Result> out;
  out.reserve(count);
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

double median(std::vector<double> values);

/// Independent sub-seed for one use of a trial seed (splitmix64 of both).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Least-squares slope of log y against log x.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

// ---------------------------------------------------------------- verify

/// A table whose rows and columns are drawn around powers of two up to
/// (2^n_max, 2^k_max). Columns mix the kinds that stress the AND oracle:
/// all ones, a single 0, and Bernoulli(1/2) or Bernoulli(9/10) fills.
TruthTable random_verify_table(int n_max, int k_max, std::uint64_t seed);

struct ColumnCheck {
  std::size_t table = 0;
  std::size_t column = 0;
  std::size_t rows = 0;
  std::size_t ones = 0;
  bool g = false;
  int sign = 1;
  double fidelity = 0.0;
  bool ok = false;
};

struct AndOracleReport {
  std::size_t tables = 0;
  std::size_t columns = 0;
  double min_fidelity = 1.0;
  /// Largest |1 - fidelity| over all-ones columns.
  double max_exact_error = 0.0;
  std::vector<ColumnCheck> violations;
  bool passed() const { return violations.empty() && max_exact_error <= 1e-9; }
};

/// Readout of every column against sign = (-1)^g(j) and fidelity >= 2/3;
/// all-ones columns must also have fidelity 1 within 1e-9.
ColumnCheck check_column(OracleHandle& handle, std::size_t j, const CountingOptions& options);
AndOracleReport and_oracle_suite(std::size_t tables, int n_max, int k_max, std::uint64_t seed,
                          const CountingOptions& options = {});

struct ClosestCaseCheck {
  int n = 0;
  int phase_bits = 0;
  ColumnCheck column;
};

/// The column with 2^n - 1 ones, read out with `phase_bits` phase qubits
/// (default l_bits(n)).
ClosestCaseCheck closest_case(int n, std::optional<int> phase_bits = std::nullopt);

struct BoundReport {
  std::size_t checked = 0;
  std::vector<std::pair<int, std::uint64_t>> failures;
};

BoundReport phase_gap_bound_sweep(int n_max);

struct IdentityReport {
  std::size_t tables = 0;
  std::size_t basis_states = 0;
  double max_error = 0.0;
  bool ledger_exact = true;
  bool passed() const { return max_error <= 1e-10 && ledger_exact; }
};

/// Compares U_f' CZ U_f' with the scratch in |0> against a densely built
/// control (x) U_f on every basis state, for random tables with n + k <= nk_max.
IdentityReport controlled_oracle_identity(std::size_t tables, int nk_max, std::uint64_t seed);

// ----------------------------------------------------------------- train

struct TrainTrial {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t rows = 0;
  std::size_t sample_count = 0;
  bool found = false;
  std::optional<std::size_t> index;
  bool verified = false;
  bool solution_exists = false;
  TrainFailure failure = TrainFailure::none;
  QueryLedger queries;
  std::size_t rounds = 0;
};

struct TrainSettings {
  std::size_t n = 12;
  int m = 2;
  double gamma = 0.195;
  double epsilon = 0.1;
  double c = kSampleCountConstant;
  PlantedGeometry geometry = PlantedGeometry::slab;
  BEQConfig search;
  /// When set, every trial trains on this dataset; only the plane sample varies.
  std::optional<Dataset> dataset;
};

/// Trial t draws everything from seed + t: the dataset and the training run
/// use separate derived streams.
TrainTrial run_train_trial(const TrainSettings& settings, std::uint64_t seed, std::size_t trial);

// ----------------------------------------------------------------- sweep

struct SweepTrial {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t solution = 0;
  std::optional<std::size_t> found;
  bool correct = false;
  QueryLedger quantum;
  QueryLedger classical;
};

/// One planted single-solution table searched both ways.
SweepTrial run_sweep_trial(std::size_t rows, std::size_t cols, std::uint64_t seed, std::size_t trial,
                           const BEQConfig& config);

struct SweepCell {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t trials = 0;
  double median_quantum = 0.0;
  double median_classical = 0.0;
  double success = 0.0;
  /// Whether every trial's quantum count was below the same table's classical count.
  bool dominates = false;
};

SweepCell summarize_cell(const std::vector<SweepTrial>& trials);

// ----------------------------------------------------------------- misc

/// Fraction of `samples` Gaussian planes inside the version space of a
/// planted dataset.
double version_space_fraction(const Dataset& data, std::size_t samples, std::uint64_t seed);

/// N, K uniform in [1, max]; Bernoulli fill with density drawn from
/// {1/2, 3/4, 9/10}; half of the instances get one column forced to all ones.
AndOrInstance random_andor_instance(std::size_t n_max, std::size_t k_max, std::uint64_t seed);

/// A table with rows in [1, 2^n_max] and columns in [1, 2^k_max], built the same way.
TruthTable random_search_table(int n_max, int k_max, std::uint64_t seed);

}  // namespace qvs
