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

#include "qvs/andor.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace qvs {

AndOrInstance::AndOrInstance(std::size_t n, std::size_t k, std::vector<std::uint8_t> z)
    : n_(n), k_(k), z_(std::move(z)) {
  if (n_ == 0 || k_ == 0) throw std::invalid_argument("AND-OR instance needs N >= 1 and K >= 1");
  if (z_.size() != n_ * k_) {
    throw std::invalid_argument("AND-OR instance expects " + std::to_string(n_ * k_) +
                                " bits, got " + std::to_string(z_.size()));
  }
  for (auto b : z_) {
    if (b > 1) throw std::invalid_argument("AND-OR bits must be 0 or 1");
  }
}

TruthTable to_truth_table(const AndOrInstance& instance) {
  TruthTable table(instance.n(), instance.k());
  for (std::size_t j = 0; j < instance.k(); ++j) {
    for (std::size_t i = 0; i < instance.n(); ++i) {
      table.set(i, j, instance.z()[i + j * instance.n()] != 0);
    }
  }
  return table;
}

AndOrInstance from_truth_table(const TruthTable& table) {
  std::vector<std::uint8_t> z(table.rows() * table.cols());
  for (std::size_t j = 0; j < table.cols(); ++j) {
    for (std::size_t i = 0; i < table.rows(); ++i) z[i + j * table.rows()] = table.bit(i, j) ? 1 : 0;
  }
  return AndOrInstance(table.rows(), table.cols(), std::move(z));
}

bool evaluate_direct(const AndOrInstance& instance) {
  for (std::size_t j = 0; j < instance.k(); ++j) {
    bool all = true;
    for (std::size_t i = 0; i < instance.n() && all; ++i) all = instance.z()[i + j * instance.n()] != 0;
    if (all) return true;
  }
  return false;
}

AndOrSearchResult evaluate_via_search(const AndOrInstance& instance, const BEQConfig& config) {
  OracleHandle handle(to_truth_table(instance));
  AndOrSearchResult result;
  result.search = multi_criterion_search(handle, config);
  result.value = result.search.found.has_value();
  return result;
}

}  // namespace qvs
