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
#include "qvs/perceptron.hpp"

namespace qvs {

/// The 4 x 3 example table
///   0 1 1
///   0 1 1
///   0 0 1
///   1 1 1
/// with column sums (1, 3, 4) and only column 2 all ones.
TruthTable example_table();

/// A 12-point planar dataset with margin 0.195 and three candidate lines:
/// planes[0] is the planted separator, planes[1] is it rotated, planes[2]
/// is parallel to it through the farthest positive point.
struct ThreeLineInstance {
  Dataset data;
  std::vector<Hyperplane> planes;
};

ThreeLineInstance three_line_instance(std::uint64_t seed);

/// i.i.d. Bernoulli(density) entries.
TruthTable random_table(std::size_t rows, std::size_t cols, double density, std::uint64_t seed);

/// Exactly one all-ones column at a uniformly drawn position; every other
/// column holds a single 0 at a uniformly drawn row, so each non-solution
/// column looks like the solution everywhere but one place.
struct PlantedTable {
  TruthTable table;
  std::size_t solution;
};

PlantedTable planted_single_solution(std::size_t rows, std::size_t cols, std::uint64_t seed);

}  // namespace qvs
