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
#include <optional>
#include <vector>

#include "qvs/oracles.hpp"
#include "qvs/perceptron.hpp"
#include "qvs/search.hpp"

namespace qvs {

/// Columns left to right, rows top to bottom, each column abandoned at its
/// first 0. Every lookup is a metered classical query.
SearchOutcome classical_version_space_search(OracleHandle& handle);

/// Number of classical queries classical_version_space_search would make,
/// computed without metering.
std::size_t classical_query_count(const TruthTable& table);

struct OnlineTrainResult {
  std::optional<Hyperplane> plane;
  std::size_t updates = 0;
  std::size_t passes = 0;
};

/// Perceptron updates w += y x, b += y from (w, b) = 0, stopping at the first
/// full pass without a violation. A point with y (w.x + b) <= 0 is a violation.
OnlineTrainResult online_train(const Dataset& data, std::size_t max_updates);

/// (R / gamma)^2 with R = max ||(x, 1)|| and gamma the margin of the
/// augmented separator (w, b) / ||(w, b)||, for a separator of the data.
double mistake_bound(const Dataset& data, const Hyperplane& separator);

/// Column ANDs g(j), unmetered.
std::vector<bool> brute_force_g(const TruthTable& table);
std::vector<bool> brute_force_g(const OracleHandle& handle);

/// First j with g(j) = 1, unmetered.
std::optional<std::size_t> first_solution(const TruthTable& table);

}  // namespace qvs
