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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qvs/counting.hpp"
#include "qvs/oracles.hpp"
#include "qvs/perceptron.hpp"

namespace qvs {

/// One measurement round of a randomized Grover search.
struct SearchRound {
  int round = 0;
  /// Iteration bound M for this round; the iteration count is drawn from [0, ceil(M)).
  double bound = 0.0;
  std::uint64_t iterations = 0;
  std::size_t candidate = 0;
  int votes_marked = 0;
  int votes_unmarked = 0;
  bool accepted = false;
};

struct SearchOutcome {
  /// Set only after the candidate passed verification.
  std::optional<std::size_t> found;
  /// Ledger delta charged by this search alone.
  QueryLedger queries;
  std::vector<SearchRound> rounds;
};

struct BEQConfig {
  /// Majority width t; odd and at least 3.
  int verify_repeats = 5;
  /// Rounds at the iteration cap before giving up.
  int max_rounds = 3;
  std::uint64_t seed = 0;
  CountingOptions counting;

  void validate() const;
};

/// Growth factor of the iteration bound per round.
inline constexpr double kBoundGrowth = 6.0 / 5.0;

/// ceil(pi/4 sqrt(2^k)), the largest iteration bound.
std::uint64_t iteration_cap(int k);

/// Grover search with an unknown number of marked entries over a single-row
/// table (one criterion, K candidates). Each iteration is one phase-oracle
/// call plus the reflection about the uniform state on the k-qubit register;
/// candidates are checked with one classical query. Draws from `seed`.
SearchOutcome grover_search_unknown_m(OracleHandle& handle, std::uint64_t seed, int max_rounds = 3);

/// Search over the AND oracle: every iteration applies sim_and to the full
/// (data, hyperplane, phase, scratch) state and reflects the hyperplane
/// register. Each measured candidate j is checked by phase-kickback votes on
/// column j alone: one screening vote (reject on "unmarked"), then a
/// sequential majority of `verify_repeats` that stops once decided.
SearchOutcome bounded_error_search(OracleHandle& handle, const BEQConfig& config);

/// Find j < K with f(i, j) = 1 for every row i.
SearchOutcome multi_criterion_search(OracleHandle& handle, const BEQConfig& config);

/// One phase-kickback vote on column j: probe in |+>, sim_and with the flip
/// also controlled on the probe, probe measured in the X basis. Returns
/// true for "marked". Costs one sim_and.
bool kickback_vote(OracleHandle& column, const CountingOptions& options, std::mt19937_64& rng);

/// Probability that kickback_vote reports "marked" for a single-column handle,
/// (1 - Re <psi|U|psi>) / 2. Charges one sim_and.
double kickback_marked_probability(OracleHandle& column, const CountingOptions& options = {});

enum class TrainFailure { none, no_version_space_plane, search_failed };

const char* to_string(TrainFailure failure);

struct TrainResult {
  std::optional<Hyperplane> plane;
  std::optional<std::size_t> index;
  std::size_t sample_count = 0;
  /// Whether any sampled plane was in the version space (unmetered check).
  bool solution_exists = false;
  TrainFailure failure = TrainFailure::none;
  SearchOutcome search;
};

/// Samples K = required_sample_count(gamma, epsilon, c) Gaussian planes, builds
/// the classification table and runs multi_criterion_search on it. The plane
/// sample and the search both derive from `seed`; config.seed is ignored.
TrainResult train_perceptron(const Dataset& data, double epsilon, const BEQConfig& config,
                             std::uint64_t seed, double c = kSampleCountConstant);

/// Same, with an explicit candidate list.
TrainResult train_perceptron_with_planes(const Dataset& data, std::vector<Hyperplane> planes,
                                         const BEQConfig& config, std::uint64_t seed);

}  // namespace qvs
