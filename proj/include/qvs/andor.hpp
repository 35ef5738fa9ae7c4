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
#include <vector>

#include "qvs/oracles.hpp"
#include "qvs/search.hpp"

namespace qvs {

/// OR over K blocks of an AND over N bits; bit i of block j is z[i + j N].
class AndOrInstance {
 public:
  AndOrInstance(std::size_t n, std::size_t k, std::vector<std::uint8_t> z);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  const std::vector<std::uint8_t>& z() const { return z_; }

  bool operator==(const AndOrInstance&) const = default;

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<std::uint8_t> z_;
};

/// f(i, j) = z[i + j N].
TruthTable to_truth_table(const AndOrInstance& instance);

/// Inverse of to_truth_table.
AndOrInstance from_truth_table(const TruthTable& table);

bool evaluate_direct(const AndOrInstance& instance);

struct AndOrSearchResult {
  bool value = false;
  SearchOutcome search;
};

/// Found maps to 1, NotFound to 0.
AndOrSearchResult evaluate_via_search(const AndOrInstance& instance, const BEQConfig& config);

}  // namespace qvs
