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

#include "qvs/fixtures.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace qvs {

TruthTable example_table() {
  return TruthTable(4, 3, {0, 1, 1,
                           0, 1, 1,
                           0, 0, 1,
                           1, 1, 1});
}

ThreeLineInstance three_line_instance(std::uint64_t seed) {
  auto planted = generate_planted_dataset<double>(12, 2, 0.195, seed);
  const Hyperplane& p1 = planted.planted;

  Hyperplane p2 = p1;
  for (double angle = 0.25; in_version_space(planted.data, p2); angle += 0.25) {
    const double c = std::cos(angle), s = std::sin(angle);
    Vector<double> w(2);
    w << c * p1.w()(0) - s * p1.w()(1), s * p1.w()(0) + c * p1.w()(1);
    p2 = Hyperplane(w, p1.b());
  }

  double farthest = -std::numeric_limits<double>::infinity();
  for (const auto& d : planted.data.points()) {
    if (d.y == 1) farthest = std::max(farthest, p1.w().dot(d.x));
  }
  if (!std::isfinite(farthest)) throw std::runtime_error("instance has no positive point");
  Hyperplane p3(p1.w(), -farthest);

  return {std::move(planted.data), {p1, p2, p3}};
}

TruthTable random_table(std::size_t rows, std::size_t cols, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution bit(density);
  TruthTable table(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) table.set(i, j, bit(rng));
  }
  return table;
}

PlantedTable planted_single_solution(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("planted table needs N >= 1 and K >= 1");
  std::mt19937_64 rng(seed);
  const std::size_t solution = std::uniform_int_distribution<std::size_t>(0, cols - 1)(rng);
  std::uniform_int_distribution<std::size_t> row(0, rows - 1);
  TruthTable table(rows, cols, std::vector<std::uint8_t>(rows * cols, 1));
  for (std::size_t j = 0; j < cols; ++j) {
    if (j != solution) table.set(row(rng), j, false);
  }
  return {std::move(table), solution};
}

}  // namespace qvs
