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

#include "qvs/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qvs/baselines.hpp"
#include "qvs/fixtures.hpp"

namespace qvs {
namespace {

std::size_t draw_size(int bits, std::mt19937_64& rng) {
  if (bits == 0) return 1;
  const std::size_t hi = std::size_t{1} << bits;
  return std::uniform_int_distribution<std::size_t>(hi / 2 + 1, hi)(rng);
}

std::size_t ones_in(const TruthTable& table, std::size_t j) { return table.column_sum(j); }

}  // namespace

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("slope needs >= 2 paired points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0 && y[i] > 0.0)) throw std::invalid_argument("log-log fit needs positive values");
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw std::invalid_argument("slope needs distinct x values");
  return sxy / sxx;
}

TruthTable random_verify_table(int n_max, int k_max, std::uint64_t seed) {
  if (n_max < 1 || k_max < 0) throw std::invalid_argument("need n_max >= 1 and k_max >= 0");
  std::mt19937_64 rng(seed);
  const int n = std::uniform_int_distribution<int>(1, n_max)(rng);
  const int k = std::uniform_int_distribution<int>(0, k_max)(rng);
  const std::size_t rows = draw_size(n, rng);
  const std::size_t cols = draw_size(k, rng);
  TruthTable table(rows, cols);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<std::size_t> row(0, rows - 1);
  for (std::size_t j = 0; j < cols; ++j) {
    const int which = kind(rng);
    const std::size_t zero = row(rng);
    const double density = which == 2 ? 0.5 : 0.9;
    std::bernoulli_distribution bit(density);
    for (std::size_t i = 0; i < rows; ++i) {
      switch (which) {
        case 0: table.set(i, j, true); break;
        case 1: table.set(i, j, i != zero); break;
        default: table.set(i, j, bit(rng)); break;
      }
    }
  }
  return table;
}

ColumnCheck check_column(OracleHandle& handle, std::size_t j, const CountingOptions& options) {
  const GTildeReadout readout = g_tilde_readout(j, handle, options);
  ColumnCheck check;
  check.column = j;
  check.rows = handle.table().rows();
  check.ones = ones_in(handle.table(), j);
  check.g = check.ones == check.rows;
  check.sign = readout.sign;
  check.fidelity = readout.fidelity;
  check.ok = check.sign == (check.g ? -1 : 1) && check.fidelity >= 2.0 / 3.0;
  return check;
}

AndOracleReport and_oracle_suite(std::size_t tables, int n_max, int k_max, std::uint64_t seed,
                          const CountingOptions& options) {
  AndOracleReport report;
  for (std::size_t t = 0; t < tables; ++t) {
    OracleHandle handle(random_verify_table(n_max, k_max, seed + t));
    ++report.tables;
    for (std::size_t j = 0; j < handle.table().cols(); ++j) {
      ColumnCheck check = check_column(handle, j, options);
      check.table = t;
      ++report.columns;
      report.min_fidelity = std::min(report.min_fidelity, check.fidelity);
      if (check.g) report.max_exact_error = std::max(report.max_exact_error, std::abs(1.0 - check.fidelity));
      if (!check.ok || (check.g && std::abs(1.0 - check.fidelity) > 1e-9)) {
        check.ok = false;
        report.violations.push_back(check);
      }
    }
  }
  return report;
}

ClosestCaseCheck closest_case(int n, std::optional<int> phase_bits) {
  if (n < 1 || n > 12) throw std::invalid_argument("closest case needs 1 <= n <= 12");
  const std::size_t rows = std::size_t{1} << n;
  TruthTable table(rows, 1, std::vector<std::uint8_t>(rows, 1));
  table.set(rows - 1, 0, false);
  OracleHandle handle(std::move(table));
  CountingOptions options;
  options.phase_bits = phase_bits;
  ClosestCaseCheck result;
  result.n = n;
  result.phase_bits = phase_bits_for(n, options);
  result.column = check_column(handle, 0, options);
  return result;
}

BoundReport phase_gap_bound_sweep(int n_max) {
  BoundReport report;
  for (int n = 0; n <= n_max; ++n) {
    for (std::uint64_t m = 1; m <= (std::uint64_t{1} << n); ++m) {
      ++report.checked;
      if (!phase_gap_bound_check(n, m)) report.failures.emplace_back(n, m);
    }
  }
  return report;
}

IdentityReport controlled_oracle_identity(std::size_t tables, int nk_max, std::uint64_t seed) {
  IdentityReport report;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < tables; ++t) {
    const int n = std::uniform_int_distribution<int>(0, nk_max)(rng);
    const int k = std::uniform_int_distribution<int>(0, nk_max - n)(rng);
    const std::size_t rows = draw_size(n, rng);
    const std::size_t cols = draw_size(k, rng);
    OracleHandle handle(random_table(rows, cols, 0.5, rng()));
    const RegisterLayout layout(n, k, 0, 1, 1);
    const int control = layout.probe_qubit();
    const BasisIndex scratch = BasisIndex{1} << layout.scratch_qubit();
    const BasisIndex low = BasisIndex{1} << (n + k);
    const auto padded = handle.padded_bits();
    const BasisIndex dim = BasisIndex{1} << layout.total_qubits();
    // Columns of the operator on the scratch-0 sector against the diagonal
    // of control (x) U_f.
    Eigen::MatrixXcd built = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    Eigen::MatrixXcd expected = built;
    for (BasisIndex x = 0; x < dim; ++x) {
      if (x & scratch) continue;
      StateVector state = StateVector::basis(layout.total_qubits(), x);
      const QueryLedger before = handle.ledger();
      apply_controlled_phase_oracle(state, control, layout, handle);
      const QueryLedger used = handle.ledger() - before;
      report.ledger_exact = report.ledger_exact && used == QueryLedger{2, 0, 1, 0};
      built.col(static_cast<Eigen::Index>(x)) = state.amplitudes();
      const bool c = (x >> control) & 1U;
      const bool f = padded[x % low] != 0;
      expected(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = (c && f) ? -1.0 : 1.0;
      ++report.basis_states;
    }
    report.max_error = std::max(report.max_error, (built - expected).cwiseAbs().maxCoeff());
    ++report.tables;
  }
  return report;
}

TrainTrial run_train_trial(const TrainSettings& settings, std::uint64_t seed, std::size_t trial) {
  TrainTrial out;
  out.trial = trial;
  out.seed = seed + trial;
  const Dataset data = settings.dataset
                           ? *settings.dataset
                           : generate_planted_dataset<double>(settings.n, settings.m, settings.gamma,
                                                              derive_seed(out.seed, 0), settings.geometry)
                                 .data;
  out.rows = data.size();
  const TrainResult result = train_perceptron(data, settings.epsilon, settings.search,
                                              derive_seed(out.seed, 1), settings.c);
  out.sample_count = result.sample_count;
  out.found = result.plane.has_value();
  out.index = result.index;
  out.verified = result.plane && in_version_space(data, *result.plane);
  out.solution_exists = result.solution_exists;
  out.failure = result.failure;
  out.queries = result.search.queries;
  out.rounds = result.search.rounds.size();
  return out;
}

SweepTrial run_sweep_trial(std::size_t rows, std::size_t cols, std::uint64_t seed, std::size_t trial,
                           const BEQConfig& config) {
  SweepTrial out;
  out.rows = rows;
  out.cols = cols;
  out.trial = trial;
  out.seed = seed + trial;
  const PlantedTable planted = planted_single_solution(rows, cols, derive_seed(out.seed, 0));
  out.solution = planted.solution;
  OracleHandle quantum(planted.table);
  BEQConfig search = config;
  search.seed = derive_seed(out.seed, 1);
  const SearchOutcome outcome = multi_criterion_search(quantum, search);
  out.found = outcome.found;
  out.correct = outcome.found == planted.solution;
  out.quantum = outcome.queries;
  OracleHandle classical(planted.table);
  out.classical = classical_version_space_search(classical).queries;
  return out;
}

SweepCell summarize_cell(const std::vector<SweepTrial>& trials) {
  if (trials.empty()) throw std::invalid_argument("empty sweep cell");
  SweepCell cell;
  cell.rows = trials.front().rows;
  cell.cols = trials.front().cols;
  cell.trials = trials.size();
  std::vector<double> q, c;
  std::size_t correct = 0;
  cell.dominates = true;
  for (const auto& t : trials) {
    q.push_back(static_cast<double>(t.quantum.bit_oracle));
    c.push_back(static_cast<double>(t.classical.classical_f));
    correct += t.correct ? 1 : 0;
    cell.dominates = cell.dominates && t.quantum.bit_oracle < t.classical.classical_f;
  }
  cell.median_quantum = median(q);
  cell.median_classical = median(c);
  cell.success = static_cast<double>(correct) / static_cast<double>(trials.size());
  return cell;
}

double version_space_fraction(const Dataset& data, std::size_t samples, std::uint64_t seed) {
  const auto planes = sample_hyperplanes(samples, data.dimension(), seed);
  std::size_t inside = 0;
  for (const auto& p : planes) inside += in_version_space(data, p) ? 1 : 0;
  return static_cast<double>(inside) / static_cast<double>(samples);
}

AndOrInstance random_andor_instance(std::size_t n_max, std::size_t k_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, n_max)(rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, k_max)(rng);
  const double densities[] = {0.5, 0.75, 0.9};
  TruthTable table = random_table(n, k, densities[rng() % 3], rng());
  if (rng() % 2) {
    const std::size_t j = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
    for (std::size_t i = 0; i < n; ++i) table.set(i, j, true);
  }
  return from_truth_table(table);
}

TruthTable random_search_table(int n_max, int k_max, std::uint64_t seed) {
  const std::size_t rows_max = std::size_t{1} << n_max;
  const std::size_t cols_max = std::size_t{1} << k_max;
  return to_truth_table(random_andor_instance(rows_max, cols_max, seed));
}

}  // namespace qvs
