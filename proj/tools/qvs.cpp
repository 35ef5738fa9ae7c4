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

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qvs/andor.hpp"
#include "qvs/baselines.hpp"
#include "qvs/experiments.hpp"
#include "qvs/io.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json ledger_json(const qvs::QueryLedger& ledger) {
  return Json{{"bit_oracle", ledger.bit_oracle},
              {"phase_oracle", ledger.phase_oracle},
              {"controlled_phase_oracle", ledger.controlled_phase_oracle},
              {"classical_f", ledger.classical_f}};
}

Json optional_index(const std::optional<std::size_t>& index) {
  return index ? Json(*index) : Json(nullptr);
}

void emit(const Json& line) { std::cout << line.dump() << '\n'; }

qvs::PlantedGeometry parse_geometry(const std::string& name) {
  if (name == "slab") return qvs::PlantedGeometry::slab;
  if (name == "box") return qvs::PlantedGeometry::box;
  throw UsageError("unknown geometry '" + name + "' (expected slab or box)");
}

struct SearchFlags {
  int verify_repeats = 5;
  int max_rounds = 3;

  void attach(CLI::App* cmd) {
    cmd->add_option("--verify-repeats", verify_repeats, "Majority width t for candidate checks (odd, >= 3)")
        ->capture_default_str();
    cmd->add_option("--max-rounds", max_rounds, "Rounds at the iteration cap before NotFound")
        ->capture_default_str();
  }

  qvs::BEQConfig config() const {
    qvs::BEQConfig c;
    c.verify_repeats = verify_repeats;
    c.max_rounds = max_rounds;
    try {
      c.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return c;
  }
};

// ------------------------------------------------------------------ train

struct TrainArgs {
  std::size_t n = 12;
  int m = 2;
  double gamma = 0.195;
  double epsilon = 0.1;
  double c = qvs::kSampleCountConstant;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::string geometry = "slab";
  std::string dataset;
  double min_success = 0.0;
  int jobs = 1;
  SearchFlags search;
};

int cmd_train(const TrainArgs& args) {
  qvs::TrainSettings settings;
  settings.n = args.n;
  settings.m = args.m;
  settings.gamma = args.gamma;
  settings.epsilon = args.epsilon;
  settings.c = args.c;
  settings.geometry = parse_geometry(args.geometry);
  settings.search = args.search.config();
  if (!args.dataset.empty()) {
    settings.dataset = qvs::load_dataset(args.dataset);
    settings.gamma = settings.dataset->claimed_margin();
  }
  if (!(settings.gamma > 0.0 && settings.gamma < 1.0)) throw UsageError("--gamma must lie in (0, 1)");
  if (!(settings.epsilon > 0.0 && settings.epsilon < 1.0)) throw UsageError("--epsilon must lie in (0, 1)");
  if (!(settings.c > 0.0)) throw UsageError("--c must be positive");
  if (settings.n < 1 || settings.m < 1) throw UsageError("--n and --m must be positive");
  if (args.trials < 1) throw UsageError("--trials must be positive");

  const auto trials = qvs::parallel_map(args.trials, args.jobs, [&](std::size_t t) {
    return qvs::run_train_trial(settings, args.seed, t);
  });
  std::size_t successes = 0;
  std::size_t unsound = 0;
  for (const auto& t : trials) {
    successes += t.verified ? 1 : 0;
    unsound += t.found && !t.verified ? 1 : 0;
    emit(Json{{"trial", t.trial},
              {"seed", t.seed},
              {"N", t.rows},
              {"K", t.sample_count},
              {"found", t.found},
              {"index", optional_index(t.index)},
              {"in_version_space", t.verified},
              {"solution_exists", t.solution_exists},
              {"failure", qvs::to_string(t.failure)},
              {"rounds", t.rounds},
              {"ledger", ledger_json(t.queries)}});
  }
  const double rate = static_cast<double>(successes) / static_cast<double>(trials.size());
  std::vector<double> queries;
  for (const auto& t : trials) queries.push_back(static_cast<double>(t.queries.bit_oracle));
  emit(Json{{"summary", "train"},
            {"trials", trials.size()},
            {"successes", successes},
            {"success_fraction", rate},
            {"unsound", unsound},
            {"median_bit_oracle", qvs::median(queries)}});
  if (unsound > 0) {
    std::cerr << "error: " << unsound << " returned plane(s) failed the version-space check\n";
    return kExitViolation;
  }
  if (rate < args.min_success) {
    std::cerr << "error: success fraction " << rate << " below --min-success " << args.min_success << '\n';
    return kExitViolation;
  }
  return kExitOk;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  int n_max = 5;
  int k_max = 3;
  std::size_t tables = 50;
  int bound_n_max = 12;
  std::size_t identity_tables = 20;
  std::uint64_t seed = 0;
  bool fault = false;
};

Json column_json(const qvs::ColumnCheck& c) {
  return Json{{"table", c.table}, {"j", c.column}, {"N", c.rows},   {"L", c.ones},
              {"g", c.g},         {"sign", c.sign}, {"fidelity", c.fidelity}};
}

int cmd_verify(const VerifyArgs& args) {
  if (args.n_max < 1 || args.n_max > 8) throw UsageError("--n-max must lie in [1, 8]");
  if (args.k_max < 0 || args.k_max > 4) throw UsageError("--k-max must lie in [0, 4]");
  if (args.bound_n_max < 0 || args.bound_n_max > 20) throw UsageError("--bound-n-max must lie in [0, 20]");
  std::size_t violations = 0;

  // With the fault the phase register is ceil(n/2) wide; each table sets its own n.
  std::vector<qvs::ColumnCheck> oracle_violations;
  double min_fidelity = 1.0;
  double exact_error = 0.0;
  std::size_t columns = 0;
  for (std::size_t t = 0; t < args.tables; ++t) {
    qvs::OracleHandle handle(qvs::random_verify_table(args.n_max, args.k_max, args.seed + t));
    qvs::CountingOptions options;
    if (args.fault) options.phase_bits = std::max(1, (handle.data_qubits() + 1) / 2);
    for (std::size_t j = 0; j < handle.table().cols(); ++j) {
      qvs::ColumnCheck check = qvs::check_column(handle, j, options);
      check.table = t;
      ++columns;
      min_fidelity = std::min(min_fidelity, check.fidelity);
      const double error = check.g ? std::abs(1.0 - check.fidelity) : 0.0;
      exact_error = std::max(exact_error, error);
      if (!check.ok || error > 1e-9) oracle_violations.push_back(check);
    }
  }
  Json suite{{"check", "and_oracle"},
             {"phase_bits", args.fault ? "ceil(n/2)" : "ceil(n/2)+3"},
             {"tables", args.tables},
             {"columns", columns},
             {"min_fidelity", min_fidelity},
             {"max_exact_error", exact_error},
             {"violations", oracle_violations.size()}};
  if (!oracle_violations.empty()) suite["first_violation"] = column_json(oracle_violations.front());
  emit(suite);
  for (const auto& v : oracle_violations) {
    std::cerr << "AND-oracle violation: table " << v.table << " column " << v.column << " (N=" << v.rows
              << ", L=" << v.ones << ") sign " << v.sign << " fidelity " << v.fidelity << '\n';
  }
  violations += oracle_violations.size();

  for (int n = 1; n <= args.n_max; ++n) {
    const std::optional<int> bits = args.fault ? std::optional<int>((n + 1) / 2) : std::nullopt;
    const auto closest = qvs::closest_case(n, bits);
    Json line = column_json(closest.column);
    line.erase("table");
    emit(Json{{"check", "closest_case"},
              {"n", n},
              {"phase_bits", closest.phase_bits},
              {"column", line},
              {"ok", closest.column.ok}});
    if (!closest.column.ok) {
      ++violations;
      std::cerr << "closest-case violation: n=" << n << " L=" << closest.column.ones << " fidelity "
                << closest.column.fidelity << '\n';
    }
  }

  const auto bound = qvs::phase_gap_bound_sweep(args.bound_n_max);
  emit(Json{{"check", "phase_gap_bound"},
            {"n_max", args.bound_n_max},
            {"checked", bound.checked},
            {"failures", bound.failures.size()}});
  for (const auto& [n, m] : bound.failures) std::cerr << "bound violation: n=" << n << " m=" << m << '\n';
  violations += bound.failures.size();

  const auto identity = qvs::controlled_oracle_identity(args.identity_tables, 8, args.seed);
  emit(Json{{"check", "controlled_oracle_identity"},
            {"tables", identity.tables},
            {"basis_states", identity.basis_states},
            {"max_error", identity.max_error},
            {"ledger_exact", identity.ledger_exact}});
  if (!identity.passed()) {
    ++violations;
    std::cerr << "controlled-oracle identity failed (max error " << identity.max_error << ")\n";
  }

  emit(Json{{"summary", "verify"}, {"fault", args.fault}, {"violations", violations}});
  return violations == 0 ? kExitOk : kExitViolation;
}

// ------------------------------------------------------------------ sweep

struct SweepArgs {
  std::vector<std::size_t> rows{8, 16, 32, 64};
  std::vector<std::size_t> cols{8};
  std::size_t trials = 25;
  std::uint64_t seed = 0;
  std::string csv;
  int jobs = 1;
  SearchFlags search;
};

std::string slope_cell(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() < 2) return "";
  return qvs::format_double(qvs::log_log_slope(x, y));
}

int cmd_sweep(const SweepArgs& args) {
  if (args.trials < 1) throw UsageError("--trials must be positive");
  for (auto v : args.rows) {
    if (v < 1 || v > 256) throw UsageError("--rows entries must lie in [1, 256]");
  }
  for (auto v : args.cols) {
    if (v < 1 || v > 256) throw UsageError("--cols entries must lie in [1, 256]");
  }
  const qvs::BEQConfig config = args.search.config();
  struct Job {
    std::size_t rows, cols, trial, cell;
  };
  std::vector<Job> jobs;
  std::size_t cell_index = 0;
  for (auto r : args.rows) {
    for (auto c : args.cols) {
      for (std::size_t t = 0; t < args.trials; ++t) jobs.push_back({r, c, t, cell_index});
      ++cell_index;
    }
  }
  // Every cell restarts the trial numbering, so cells share seeds seed + t.
  const auto results = qvs::parallel_map(jobs.size(), args.jobs, [&](std::size_t i) {
    return qvs::run_sweep_trial(jobs[i].rows, jobs[i].cols, args.seed, jobs[i].trial, config);
  });
  std::vector<std::vector<qvs::SweepTrial>> by_cell(cell_index);
  std::size_t unsound = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& t = results[i];
    by_cell[jobs[i].cell].push_back(t);
    unsound += t.found && !t.correct ? 1 : 0;
    emit(Json{{"N", t.rows},
              {"K", t.cols},
              {"trial", t.trial},
              {"seed", t.seed},
              {"solution", t.solution},
              {"found", optional_index(t.found)},
              {"correct", t.correct},
              {"quantum", ledger_json(t.quantum)},
              {"classical", ledger_json(t.classical)}});
  }
  std::vector<qvs::SweepCell> cells;
  for (const auto& trials : by_cell) cells.push_back(qvs::summarize_cell(trials));

  std::ostringstream csv;
  csv << "N,K,trials,median_quantum,median_classical,success,quantum_below_classical,slope_vs_N,slope_vs_K\n";
  for (const auto& cell : cells) {
    std::vector<double> xn, yn, xk, yk;
    for (const auto& other : cells) {
      if (other.cols == cell.cols) {
        xn.push_back(static_cast<double>(other.rows));
        yn.push_back(other.median_quantum);
      }
      if (other.rows == cell.rows) {
        xk.push_back(static_cast<double>(other.cols));
        yk.push_back(other.median_quantum);
      }
    }
    csv << cell.rows << ',' << cell.cols << ',' << cell.trials << ',' << qvs::format_double(cell.median_quantum)
        << ',' << qvs::format_double(cell.median_classical) << ',' << qvs::format_double(cell.success) << ','
        << (cell.dominates ? 1 : 0) << ',' << slope_cell(xn, yn) << ',' << slope_cell(xk, yk) << '\n';
    emit(Json{{"summary", "cell"},
              {"N", cell.rows},
              {"K", cell.cols},
              {"trials", cell.trials},
              {"median_quantum", cell.median_quantum},
              {"median_classical", cell.median_classical},
              {"success", cell.success},
              {"quantum_below_classical", cell.dominates}});
  }
  if (!args.csv.empty()) {
    std::ofstream out(args.csv);
    if (!out) throw std::runtime_error("cannot write " + args.csv);
    out << csv.str();
  } else {
    std::cerr << csv.str();
  }
  if (unsound > 0) {
    std::cerr << "error: " << unsound << " search result(s) were not the planted solution\n";
    return kExitViolation;
  }
  return kExitOk;
}

// ------------------------------------------------------------------ andor

struct AndOrArgs {
  std::string file;
  std::size_t batch = 0;
  std::size_t n_max = 8;
  std::size_t k_max = 8;
  std::size_t runs = 1;
  std::uint64_t seed = 0;
  int jobs = 1;
  SearchFlags search;
};

struct AndOrTally {
  bool direct = false;
  std::size_t agree = 0;
  std::vector<qvs::AndOrSearchResult> results;
};

AndOrTally run_andor(const qvs::AndOrInstance& instance, std::size_t runs, std::uint64_t seed,
                     const qvs::BEQConfig& config) {
  AndOrTally tally;
  tally.direct = qvs::evaluate_direct(instance);
  for (std::size_t r = 0; r < runs; ++r) {
    qvs::BEQConfig c = config;
    c.seed = qvs::derive_seed(seed, r + 1);
    tally.results.push_back(qvs::evaluate_via_search(instance, c));
    tally.agree += tally.results.back().value == tally.direct ? 1 : 0;
  }
  return tally;
}

int cmd_andor(const AndOrArgs& args) {
  if (args.file.empty() == (args.batch == 0)) throw UsageError("give exactly one of --file or --batch");
  if (args.runs < 1) throw UsageError("--runs must be positive");
  const qvs::BEQConfig config = args.search.config();
  if (!args.file.empty()) {
    const auto instance = qvs::load_andor(args.file);
    const auto tally = run_andor(instance, args.runs, args.seed, config);
    qvs::OracleHandle classical(qvs::to_truth_table(instance));
    const auto scan = qvs::classical_version_space_search(classical);
    for (std::size_t r = 0; r < tally.results.size(); ++r) {
      emit(Json{{"run", r},
                {"N", instance.n()},
                {"K", instance.k()},
                {"direct", tally.direct ? 1 : 0},
                {"search", tally.results[r].value ? 1 : 0},
                {"found", optional_index(tally.results[r].search.found)},
                {"ledger", ledger_json(tally.results[r].search.queries)},
                {"classical_ledger", ledger_json(scan.queries)}});
    }
    return tally.agree == args.runs ? kExitOk : kExitViolation;
  }
  if (args.n_max < 1 || args.k_max < 1 || args.n_max > 64 || args.k_max > 64) {
    throw UsageError("--n-max and --k-max must lie in [1, 64]");
  }
  const auto tallies = qvs::parallel_map(args.batch, args.jobs, [&](std::size_t i) {
    const auto instance = qvs::random_andor_instance(args.n_max, args.k_max, args.seed + i);
    return std::make_pair(instance, run_andor(instance, args.runs, args.seed + i, config));
  });
  std::size_t below = 0;
  double worst = 1.0;
  for (std::size_t i = 0; i < tallies.size(); ++i) {
    const auto& [instance, tally] = tallies[i];
    std::vector<double> queries;
    for (const auto& r : tally.results) queries.push_back(static_cast<double>(r.search.queries.bit_oracle));
    const double rate = static_cast<double>(tally.agree) / static_cast<double>(args.runs);
    worst = std::min(worst, rate);
    below += rate < 2.0 / 3.0 ? 1 : 0;
    emit(Json{{"instance", i},
              {"seed", args.seed + i},
              {"N", instance.n()},
              {"K", instance.k()},
              {"direct", tally.direct ? 1 : 0},
              {"runs", args.runs},
              {"agree", tally.agree},
              {"agreement", rate},
              {"median_bit_oracle", qvs::median(queries)}});
  }
  emit(Json{{"summary", "andor"},
            {"instances", args.batch},
            {"min_agreement", worst},
            {"below_two_thirds", below}});
  return below == 0 ? kExitOk : kExitViolation;
}

// ------------------------------------------------------------ gen-dataset

struct GenArgs {
  std::size_t n = 12;
  int m = 2;
  double gamma = 0.195;
  std::uint64_t seed = 0;
  std::string geometry = "slab";
  std::string out;
};

int cmd_gen_dataset(const GenArgs& args) {
  if (!(args.gamma > 0.0 && args.gamma < 1.0)) throw UsageError("--gamma must lie in (0, 1)");
  if (args.n < 1 || args.m < 1) throw UsageError("--n and --m must be positive");
  const auto planted = qvs::generate_planted_dataset<double>(args.n, args.m, args.gamma, args.seed,
                                                              parse_geometry(args.geometry));
  if (args.out.empty()) {
    qvs::write_dataset(std::cout, planted.data);
  } else {
    qvs::save_dataset(args.out, planted.data);
  }
  Json w = Json::array();
  for (Eigen::Index i = 0; i < planted.planted.w().size(); ++i) w.push_back(planted.planted.w()(i));
  std::cerr << Json{{"planted_w", w},
                    {"planted_b", planted.planted.b()},
                    {"margin", qvs::geometric_margin(planted.data, planted.planted)}}
                   .dump()
            << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Version-space perceptron training by multi-criterion quantum search (statevector simulation)"};
  app.require_subcommand(1);

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Train on planted datasets or a dataset file");
  train_cmd->add_option("--n", train.n, "Data points per planted dataset")->capture_default_str();
  train_cmd->add_option("--m", train.m, "Feature dimension")->capture_default_str();
  train_cmd->add_option("--gamma", train.gamma, "Planted margin")->capture_default_str();
  train_cmd->add_option("--epsilon", train.epsilon, "Sampling failure probability")->capture_default_str();
  train_cmd->add_option("--c", train.c, "Constant in K = ceil(c ln(1/epsilon) / gamma)")->capture_default_str();
  train_cmd->add_option("--trials", train.trials, "Independent trials")->capture_default_str();
  train_cmd->add_option("--seed", train.seed, "Base seed; trial t uses seed + t")->required();
  train_cmd->add_option("--geometry", train.geometry, "Planted generator: slab or box")->capture_default_str();
  train_cmd->add_option("--dataset", train.dataset, "Dataset file instead of a planted dataset")
      ->check(CLI::ExistingFile);
  train_cmd->add_option("--min-success", train.min_success, "Exit 1 below this success fraction")
      ->capture_default_str();
  train_cmd->add_option("--jobs", train.jobs, "Worker threads")->capture_default_str();
  train.search.attach(train_cmd);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "AND-oracle, precision-bound and controlled-oracle checks");
  verify_cmd->add_option("--n-max", verify.n_max, "Largest data register width")->capture_default_str();
  verify_cmd->add_option("--k-max", verify.k_max, "Largest hyperplane register width")->capture_default_str();
  verify_cmd->add_option("--tables", verify.tables, "Random tables in the AND-oracle check")->capture_default_str();
  verify_cmd->add_option("--bound-n-max", verify.bound_n_max, "Largest n in the exhaustive bound check")
      ->capture_default_str();
  verify_cmd->add_option("--identity-tables", verify.identity_tables, "Random tables in the identity check")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Seed for the random tables")->required();
  verify_cmd->add_flag("--fault", verify.fault, "Shrink the phase register to ceil(n/2) qubits");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Quantum vs classical queries on planted single-solution tables");
  sweep_cmd->add_option("--rows", sweep.rows, "Row counts N")->delimiter(',')->capture_default_str();
  sweep_cmd->add_option("--cols", sweep.cols, "Column counts K")->delimiter(',')->capture_default_str();
  sweep_cmd->add_option("--trials", sweep.trials, "Trials per cell")->capture_default_str();
  sweep_cmd->add_option("--seed", sweep.seed, "Base seed; trial t of every cell uses seed + t")->required();
  sweep_cmd->add_option("--csv", sweep.csv, "Write the per-cell CSV here (default: standard error)");
  sweep_cmd->add_option("--jobs", sweep.jobs, "Worker threads")->capture_default_str();
  sweep.search.attach(sweep_cmd);

  AndOrArgs andor;
  auto* andor_cmd = app.add_subcommand("andor", "Evaluate two-level AND-OR trees directly and by search");
  andor_cmd->add_option("--file", andor.file, "Instance file: 'N K' then the z string")
      ->check(CLI::ExistingFile);
  andor_cmd->add_option("--batch", andor.batch, "Number of random instances instead of a file");
  andor_cmd->add_option("--n-max", andor.n_max, "Largest N in batch mode")->capture_default_str();
  andor_cmd->add_option("--k-max", andor.k_max, "Largest K in batch mode")->capture_default_str();
  andor_cmd->add_option("--runs", andor.runs, "Search runs per instance")->capture_default_str();
  andor_cmd->add_option("--seed", andor.seed, "Base seed; instance i uses seed + i")->required();
  andor_cmd->add_option("--jobs", andor.jobs, "Worker threads")->capture_default_str();
  andor.search.attach(andor_cmd);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-dataset", "Write a planted dataset");
  gen_cmd->add_option("--n", gen.n, "Data points")->capture_default_str();
  gen_cmd->add_option("--m", gen.m, "Feature dimension")->capture_default_str();
  gen_cmd->add_option("--gamma", gen.gamma, "Planted margin")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Generator seed")->required();
  gen_cmd->add_option("--geometry", gen.geometry, "slab or box")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*train_cmd) return cmd_train(train);
    if (*verify_cmd) return cmd_verify(verify);
    if (*sweep_cmd) return cmd_sweep(sweep);
    if (*andor_cmd) return cmd_andor(andor);
    if (*gen_cmd) return cmd_gen_dataset(gen);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qvs::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}
