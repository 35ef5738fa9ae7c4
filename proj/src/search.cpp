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

#include "qvs/search.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qvs/baselines.hpp"

namespace qvs {
namespace {

// Offsets the trainer's search stream from its plane sample.
constexpr std::uint64_t kSearchStream = 0x9E3779B97F4A7C15ULL;

BasisIndex sample_register(const StateVector& state, int first, int width, std::mt19937_64& rng) {
  const auto probs = register_marginal(state, first, width);
  std::discrete_distribution<BasisIndex> pick(probs.begin(), probs.end());
  return pick(rng);
}

// The randomized schedule shared by both searches. `run_round(m)` prepares
// the start state, applies m iterations and measures; `check(j, round)`
// decides acceptance.
template <typename Round, typename Check>
SearchOutcome randomized_rounds(int k, int max_rounds, std::mt19937_64& rng, Round run_round, Check check) {
  SearchOutcome outcome;
  const double cap = static_cast<double>(iteration_cap(k));
  double bound = 1.0;
  int rounds_at_cap = 0;
  for (int round = 0;; ++round) {
    const auto limit = static_cast<std::uint64_t>(std::ceil(bound - 1e-12));
    std::uniform_int_distribution<std::uint64_t> draw(0, limit - 1);
    SearchRound record;
    record.round = round;
    record.bound = bound;
    record.iterations = draw(rng);
    record.candidate = run_round(record.iterations);
    record.accepted = check(record.candidate, record);
    outcome.rounds.push_back(record);
    if (record.accepted) {
      outcome.found = record.candidate;
      return outcome;
    }
    if (bound >= cap) {
      if (++rounds_at_cap >= max_rounds) return outcome;
    }
    bound = std::min(bound * kBoundGrowth, cap);
  }
}

}  // namespace

void BEQConfig::validate() const {
  if (verify_repeats < 3 || verify_repeats % 2 == 0) {
    throw std::invalid_argument("verify_repeats must be odd and >= 3, got " +
                                std::to_string(verify_repeats));
  }
  if (max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
}

std::uint64_t iteration_cap(int k) {
  if (k < 0 || k > 40) throw std::invalid_argument("register width out of range");
  const double cap = std::ceil(std::numbers::pi / 4.0 * std::sqrt(std::ldexp(1.0, k)));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(cap));
}

SearchOutcome grover_search_unknown_m(OracleHandle& handle, std::uint64_t seed, int max_rounds) {
  if (handle.table().rows() != 1) {
    throw std::invalid_argument("plain Grover search expects a single-row table");
  }
  if (max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
  const QueryLedger before = handle.ledger();
  const RegisterLayout layout(0, handle.hyperplane_qubits(), 0, 1);
  const std::size_t cols = handle.table().cols();
  std::mt19937_64 rng(seed);
  auto run_round = [&](std::uint64_t iterations) {
    StateVector state = new_uniform(layout);
    for (std::uint64_t t = 0; t < iterations; ++t) {
      apply_phase_oracle(state, layout, handle);
      apply_reflection_about_uniform(state, layout.offset(Register::hyperplane), layout.k);
    }
    return static_cast<std::size_t>(sample_register(state, layout.offset(Register::hyperplane), layout.k, rng));
  };
  auto check = [&](std::size_t j, SearchRound& record) {
    if (j >= cols) return false;  // padding column, known unmarked
    const bool marked = handle.query(0, j);
    (marked ? record.votes_marked : record.votes_unmarked) = 1;
    return marked;
  };
  SearchOutcome outcome = randomized_rounds(layout.k, max_rounds, rng, run_round, check);
  outcome.queries = handle.ledger() - before;
  return outcome;
}

double kickback_marked_probability(OracleHandle& column, const CountingOptions& options) {
  if (column.table().cols() != 1) throw std::invalid_argument("kickback vote runs on one column");
  const RegisterLayout layout = counting_layout(column, options, /*with_probe=*/true);
  StateVector state = new_uniform(layout);
  const int probe = layout.probe_qubit();
  apply_hadamard(state, probe);
  // Controlling only the flip suffices: on the probe-0 branch the two phase
  // estimations cancel exactly.
  sim_and(state, layout, column, ControlMask::on(probe));
  apply_hadamard(state, probe);
  return probability_of_one(state, probe);
}

bool kickback_vote(OracleHandle& column, const CountingOptions& options, std::mt19937_64& rng) {
  const double p = std::clamp(kickback_marked_probability(column, options), 0.0, 1.0);
  return std::bernoulli_distribution(p)(rng);
}

SearchOutcome bounded_error_search(OracleHandle& handle, const BEQConfig& config) {
  config.validate();
  const QueryLedger before = handle.ledger();
  const RegisterLayout layout = counting_layout(handle, config.counting);
  const std::size_t cols = handle.table().cols();
  const int needed = (config.verify_repeats + 1) / 2;
  std::mt19937_64 rng(config.seed);
  auto run_round = [&](std::uint64_t iterations) {
    StateVector state = new_uniform(layout);
    for (std::uint64_t t = 0; t < iterations; ++t) {
      sim_and(state, layout, handle);
      apply_reflection_about_uniform(state, layout.offset(Register::hyperplane), layout.k);
    }
    return static_cast<std::size_t>(sample_register(state, layout.offset(Register::hyperplane), layout.k, rng));
  };
  auto check = [&](std::size_t j, SearchRound& record) {
    if (j >= cols) return false;  // padding column, known unmarked
    OracleHandle column = handle.column(j);
    while (record.votes_marked < needed && record.votes_unmarked < needed) {
      if (kickback_vote(column, config.counting, rng)) {
        ++record.votes_marked;
      } else {
        ++record.votes_unmarked;
        if (record.votes_marked == 0) break;  // screening vote failed
      }
    }
    return record.votes_marked >= needed;
  };
  SearchOutcome outcome = randomized_rounds(layout.k, config.max_rounds, rng, run_round, check);
  outcome.queries = handle.ledger() - before;
  return outcome;
}

SearchOutcome multi_criterion_search(OracleHandle& handle, const BEQConfig& config) {
  return bounded_error_search(handle, config);
}

const char* to_string(TrainFailure failure) {
  switch (failure) {
    case TrainFailure::none: return "none";
    case TrainFailure::no_version_space_plane: return "no_version_space_plane";
    case TrainFailure::search_failed: return "search_failed";
  }
  return "unknown";
}

TrainResult train_perceptron_with_planes(const Dataset& data, std::vector<Hyperplane> planes,
                                         const BEQConfig& config, std::uint64_t seed) {
  TrainResult result;
  result.sample_count = planes.size();
  OracleHandle handle(from_perceptron(data, planes));
  result.solution_exists = first_solution(handle.table()).has_value();
  BEQConfig search_config = config;
  search_config.seed = seed + kSearchStream;
  result.search = multi_criterion_search(handle, search_config);
  if (result.search.found) {
    result.index = result.search.found;
    result.plane = planes[*result.search.found];
  } else {
    result.failure = result.solution_exists ? TrainFailure::search_failed
                                            : TrainFailure::no_version_space_plane;
  }
  return result;
}

TrainResult train_perceptron(const Dataset& data, double epsilon, const BEQConfig& config,
                             std::uint64_t seed, double c) {
  const std::size_t count = required_sample_count(data.claimed_margin(), epsilon, c);
  return train_perceptron_with_planes(data, sample_hyperplanes(count, data.dimension(), seed),
                                      config, seed);
}

}  // namespace qvs
