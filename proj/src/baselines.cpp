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

#include "qvs/baselines.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qvs {

SearchOutcome classical_version_space_search(OracleHandle& handle) {
  const QueryLedger before = handle.ledger();
  SearchOutcome outcome;
  const TruthTable& table = handle.table();
  for (std::size_t j = 0; j < table.cols() && !outcome.found; ++j) {
    bool all = true;
    for (std::size_t i = 0; i < table.rows(); ++i) {
      if (!handle.query(i, j)) {
        all = false;
        break;
      }
    }
    if (all) outcome.found = j;
  }
  outcome.queries = handle.ledger() - before;
  return outcome;
}

std::size_t classical_query_count(const TruthTable& table) {
  std::size_t count = 0;
  for (std::size_t j = 0; j < table.cols(); ++j) {
    std::size_t i = 0;
    while (i < table.rows() && table.bit(i, j)) ++i;
    if (i == table.rows()) return count + table.rows();
    count += i + 1;
  }
  return count;
}

OnlineTrainResult online_train(const Dataset& data, std::size_t max_updates) {
  if (max_updates < 1) throw std::invalid_argument("max_updates must be >= 1");
  const int m = data.dimension();
  Vector<double> w = Vector<double>::Zero(m);
  double b = 0.0;
  OnlineTrainResult result;
  while (true) {
    ++result.passes;
    bool clean = true;
    for (const auto& d : data.points()) {
      if (static_cast<double>(d.y) * (w.dot(d.x) + b) > 0.0) continue;
      clean = false;
      if (result.updates == max_updates) return result;
      w += static_cast<double>(d.y) * d.x;
      b += static_cast<double>(d.y);
      ++result.updates;
    }
    if (clean) {
      result.plane = Hyperplane(w, b);
      return result;
    }
  }
}

double mistake_bound(const Dataset& data, const Hyperplane& separator) {
  const double norm = std::sqrt(separator.w().squaredNorm() + separator.b() * separator.b());
  double radius = 0.0;
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& d : data.points()) {
    radius = std::max(radius, std::sqrt(d.x.squaredNorm() + 1.0));
    margin = std::min(margin, d.y * (separator.w().dot(d.x) + separator.b()) / norm);
  }
  if (!(margin > 0.0)) throw std::invalid_argument("mistake bound needs a separating plane");
  return (radius / margin) * (radius / margin);
}

std::vector<bool> brute_force_g(const TruthTable& table) {
  std::vector<bool> g(table.cols());
  for (std::size_t j = 0; j < table.cols(); ++j) g[j] = table.column_sum(j) == table.rows();
  return g;
}

std::vector<bool> brute_force_g(const OracleHandle& handle) { return brute_force_g(handle.table()); }

std::optional<std::size_t> first_solution(const TruthTable& table) {
  const auto g = brute_force_g(table);
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g[j]) return j;
  }
  return std::nullopt;
}

}  // namespace qvs
