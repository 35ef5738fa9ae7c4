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

#include <doctest.h>

#include <vector>

#include "qvs/baselines.hpp"
#include "qvs/experiments.hpp"
#include "qvs/fixtures.hpp"
#include "qvs/search.hpp"

using namespace qvs;

namespace {

BEQConfig config(std::uint64_t seed) {
  BEQConfig cfg;
  cfg.seed = seed;
  return cfg;
}

TruthTable single_row(std::size_t cols, std::vector<std::size_t> marked) {
  TruthTable t(1, cols);
  for (auto j : marked) t.set(0, j, true);
  return t;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("iteration cap") {
    CHECK(iteration_cap(0) == 1);
    CHECK(iteration_cap(2) == 2);
    CHECK(iteration_cap(3) == 3);
    CHECK(iteration_cap(6) == 7);
  }

  TEST_CASE("config validation") {
    BEQConfig cfg;
    cfg.verify_repeats = 4;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.verify_repeats = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.verify_repeats = 5;
    cfg.max_rounds = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  }

  TEST_CASE("plain search with one marked element") {
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      OracleHandle h(single_row(8, {5}));
      const auto out = grover_search_unknown_m(h, seed);
      if (out.found) {
        CHECK(*out.found == 5);
        ++hits;
      }
      CHECK(out.queries.classical_f >= 1);
    }
    CHECK(hits >= 134);
  }

  TEST_CASE("plain search with every element marked") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      OracleHandle h(single_row(8, {0, 1, 2, 3, 4, 5, 6, 7}));
      const auto out = grover_search_unknown_m(h, seed);
      REQUIRE(out.found);
      CHECK(out.rounds.size() == 1);
    }
  }

  TEST_CASE("plain search with nothing marked") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      OracleHandle h(single_row(8, {}));
      CHECK_FALSE(grover_search_unknown_m(h, seed).found);
    }
  }

  TEST_CASE("plain search needs a single-row table") {
    OracleHandle h(example_table());
    CHECK_THROWS_AS(grover_search_unknown_m(h, 1), std::invalid_argument);
  }

  TEST_CASE("bounded-error search on the example table") {
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      OracleHandle h(example_table());
      const auto out = multi_criterion_search(h, config(seed));
      if (out.found) {
        CHECK(*out.found == 2);
        ++hits;
      }
      CHECK(out.queries == h.ledger());
    }
    CHECK(hits >= 134);
  }

  TEST_CASE("bounded-error search on degenerate tables") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      OracleHandle zeros(TruthTable(4, 3));
      const auto none = bounded_error_search(zeros, config(seed));
      CHECK_FALSE(none.found);
      CHECK(none.rounds.size() >= 3);

      OracleHandle ones(TruthTable(4, 3, std::vector<std::uint8_t>(12, 1)));
      const auto any = bounded_error_search(ones, config(seed));
      REQUIRE(any.found);
      CHECK(*any.found < 3);
    }
  }

  TEST_CASE("single data point reduces to plain search") {
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      OracleHandle h(single_row(8, {6}));
      const auto out = bounded_error_search(h, config(seed));
      if (out.found) {
        CHECK(*out.found == 6);
        ++hits;
      }
    }
    CHECK(hits >= 34);
  }

  TEST_CASE("padded hyperplanes are never returned") {
    // K = 5 pads to 8; columns 5..7 read as all zero.
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      OracleHandle h(random_table(3, 5, 1.0, seed));
      const auto out = bounded_error_search(h, config(seed));
      REQUIRE(out.found);
      CHECK(*out.found < 5);
    }
  }

  TEST_CASE("found indices are solutions") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const TruthTable t = random_search_table(4, 3, seed);
      OracleHandle h(t);
      const auto out = bounded_error_search(h, config(seed));
      if (out.found) CHECK(brute_force_g(t)[*out.found]);
      for (const auto& round : out.rounds) {
        CHECK(round.iterations < static_cast<std::uint64_t>(std::ceil(round.bound)));
        CHECK(round.bound <= static_cast<double>(iteration_cap(h.hyperplane_qubits())));
      }
    }
  }

  TEST_CASE("kickback votes") {
    OracleHandle h(example_table());
    OracleHandle solution = h.column(2);
    CHECK(kickback_marked_probability(solution) == doctest::Approx(1.0).epsilon(1e-9));
    std::mt19937_64 rng(3);
    for (int v = 0; v < 10; ++v) CHECK(kickback_vote(solution, {}, rng));

    OracleHandle bad = h.column(1);
    const double p = kickback_marked_probability(bad);
    CHECK(p >= 0.0);
    CHECK(p <= 1.0 / 3.0);
    const auto before = h.ledger();
    kickback_vote(bad, {}, rng);
    CHECK((h.ledger() - before).bit_oracle == 4 * 15);
  }

  TEST_CASE("trainer with a planted plane among the candidates") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto planted = generate_planted_dataset<double>(12, 2, 0.195, seed);
      auto planes = sample_hyperplanes(7, 2, seed + 1000);
      planes.insert(planes.begin() + static_cast<std::ptrdiff_t>(seed % 8), planted.planted);
      const auto result = train_perceptron_with_planes(planted.data, planes, config(seed), seed);
      CHECK(result.solution_exists);
      if (result.plane) {
        CHECK(in_version_space(planted.data, *result.plane));
        CHECK(result.failure == TrainFailure::none);
      } else {
        CHECK(result.failure == TrainFailure::search_failed);
      }
    }
  }

  TEST_CASE("trainer on the three-line picture") {
    const auto inst = three_line_instance(3);
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto result = train_perceptron_with_planes(inst.data, inst.planes, config(seed), seed);
      if (result.index) {
        CHECK(*result.index == 0);
        ++hits;
      }
    }
    CHECK(hits >= 20);
  }

  TEST_CASE("trainer with a wide margin") {
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto planted = generate_planted_dataset<double>(12, 2, 0.9, seed);
      const auto result = train_perceptron(planted.data, 0.1, config(seed), seed, 1.5);
      CHECK(result.sample_count == 4);
      if (result.plane) {
        CHECK(in_version_space(planted.data, *result.plane));
        ++hits;
      }
      CHECK(result.search.queries.bit_oracle < 5000);
    }
    CHECK(hits >= 20);
  }

  TEST_CASE("trainer reports sampling failures") {
    const auto planted = generate_planted_dataset<double>(12, 2, 0.195, 1);
    const std::vector<Hyperplane> wrong{planted.planted.scaled(-1.0)};
    const auto result = train_perceptron_with_planes(planted.data, wrong, config(1), 1);
    CHECK_FALSE(result.plane);
    CHECK_FALSE(result.solution_exists);
    CHECK(result.failure == TrainFailure::no_version_space_plane);
    CHECK(std::string(to_string(result.failure)) != "");
  }
}
