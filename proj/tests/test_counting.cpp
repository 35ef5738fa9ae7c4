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

#include <cmath>
#include <numbers>
#include <vector>

#include "qvs/counting.hpp"
#include "qvs/experiments.hpp"
#include "qvs/fixtures.hpp"
#include "qvs/search.hpp"
#include "test_util.hpp"

using namespace qvs;
using qvs::testing::distance;
using qvs::testing::estimated_phase_distribution;
using qvs::testing::random_state;

namespace {

double column_angle(const OracleHandle& column) {
  const double size = std::ldexp(1.0, column.data_qubits());
  double ones = 0;
  for (BasisIndex i = 0; i < static_cast<BasisIndex>(size); ++i) ones += column.padded_bits()[i];
  return std::asin(std::sqrt(ones / size));
}

std::vector<double> simulated_phase_distribution(OracleHandle& column, const CountingOptions& options = {}) {
  const RegisterLayout layout = counting_layout(column, options);
  StateVector s = new_uniform(layout);
  phase_estimate(s, layout, column);
  return register_marginal(s, layout.offset(Register::phase), layout.l);
}

}  // namespace

TEST_SUITE("counting") {
  TEST_CASE("phase register width") {
    CHECK(l_bits(2) == 4);
    CHECK(l_bits(5) == 6);
    CHECK(l_bits(6) == 6);
    CHECK(l_bits(1) == 4);
    CHECK(l_bits(0) == 3);
    CHECK(phase_bits_for(4, CountingOptions{2}) == 2);
    CHECK_THROWS_AS(phase_bits_for(4, CountingOptions{0}), std::invalid_argument);
  }

  TEST_CASE("Grover operator on single columns") {
    OracleHandle h(example_table());
    const RegisterLayout layout(2, 0, 0, 1);

    OracleHandle first = h.column(0);
    StateVector s = new_uniform(layout);
    grover_operator(s, layout, first);
    CHECK(std::abs(s[3] - 1.0) < 1e-12);

    OracleHandle third = h.column(2);
    StateVector t = new_uniform(layout);
    const StateVector plus = t;
    grover_operator(t, layout, third);
    CHECK(std::abs(inner_product(plus, t) + 1.0) < 1e-12);
    CHECK(h.ledger().phase_oracle == 2);
    CHECK(h.ledger().bit_oracle == 2);
  }

  TEST_CASE("Grover operator keeps the good/bad plane") {
    const TruthTable table = random_table(8, 1, 0.4, 5);
    OracleHandle h(table);
    const RegisterLayout layout(3, 0, 0, 1);
    StateVector s = new_uniform(layout);
    for (int rep = 0; rep < 5; ++rep) {
      grover_operator(s, layout, h);
      // Within each class (f = 0 or f = 1) all amplitudes stay equal.
      std::complex<double> good, bad;
      bool have_good = false, have_bad = false;
      for (BasisIndex i = 0; i < 8; ++i) {
        auto& ref = table.bit(i, 0) ? good : bad;
        auto& have = table.bit(i, 0) ? have_good : have_bad;
        if (!have) {
          ref = s[i];
          have = true;
        }
        CHECK(std::abs(s[i] - ref) < 1e-12);
      }
    }
  }

  TEST_CASE("inverse Grover operator undoes the operator") {
    OracleHandle h(random_table(5, 3, 0.6, 2));
    const RegisterLayout layout(3, 2, 1, 1);
    StateVector s = new_uniform(layout);
    const StateVector start = s;
    const int control = layout.qubit(Register::phase, 0);
    grover_operator(s, layout, h, control);
    inverse_grover_operator(s, layout, h, control);
    CHECK(distance(start, s) < 1e-12);
    CHECK(h.ledger().controlled_phase_oracle == 2);
    CHECK(h.ledger().bit_oracle == 4);
  }

  TEST_CASE("Grover powers match repeated controlled Grover operators") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const TruthTable table = random_table(3 + seed, 1 + seed % 3, 0.6, seed);
      OracleHandle fast_handle(table);
      OracleHandle slow_handle(table);
      const RegisterLayout layout = counting_layout(fast_handle, CountingOptions{3}, true);
      StateVector start = new_uniform(layout);
      // Random phase and probe content with the scratch qubit clear.
      const StateVector noise = random_state(layout.total_qubits(), seed + 100);
      const BasisIndex scratch = BasisIndex{1} << layout.scratch_qubit();
      for (BasisIndex x = 0; x < start.dimension(); ++x) start[x] = (x & scratch) ? 0 : noise[x];
      start.amplitudes().normalize();

      for (bool inverse : {false, true}) {
        for (int control : {layout.qubit(Register::phase, 1), layout.probe_qubit()}) {
          StateVector fast = start;
          StateVector slow = start;
          apply_controlled_grover_power(fast, layout, fast_handle, control, 3, inverse);
          for (int rep = 0; rep < 3; ++rep) {
            if (inverse) {
              inverse_grover_operator(slow, layout, slow_handle, control);
            } else {
              grover_operator(slow, layout, slow_handle, control);
            }
          }
          CHECK(distance(fast, slow) < 1e-12);
          CHECK(fast_handle.ledger() == slow_handle.ledger());
        }
      }
      CHECK_THROWS_AS(apply_controlled_grover_power(start, layout, fast_handle, layout.scratch_qubit(), 1),
                      std::invalid_argument);
      CHECK_THROWS_AS(apply_controlled_grover_power(start, layout, fast_handle, 0, 1), std::invalid_argument);
    }
  }

  TEST_CASE("phase estimation readouts on the example table") {
    OracleHandle h(example_table());
    OracleHandle third = h.column(2);
    const auto exact = simulated_phase_distribution(third);
    CHECK(exact[8] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(h.ledger().bit_oracle == 30);
    CHECK(h.ledger().controlled_phase_oracle == 15);

    OracleHandle second = h.column(1);
    const auto p = simulated_phase_distribution(second);
    std::size_t best = 0;
    for (std::size_t s = 1; s < 8; ++s) {
      if (p[s] > p[best]) best = s;
    }
    CHECK(best == 5);
  }

  TEST_CASE("phase estimation matches the Fejer-kernel distribution") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const std::size_t rows = 1 + seed * 3 % 17;
      const TruthTable table = random_table(rows, 1, 0.3 + 0.05 * static_cast<double>(seed), seed);
      OracleHandle h(table);
      const double theta = column_angle(h);
      for (int l : {2, 4, 5}) {
        const auto p = simulated_phase_distribution(h, CountingOptions{l});
        const auto q = estimated_phase_distribution(theta, l);
        REQUIRE(p.size() == q.size());
        for (std::size_t s = 0; s < p.size(); ++s) CHECK(std::abs(p[s] - q[s]) < 1e-10);
      }
    }
  }

  TEST_CASE("AND-oracle sign and fidelity follow the half-phase probability") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const TruthTable table = random_table(2 + seed, 3, 0.8, seed + 40);
      OracleHandle h(table);
      for (std::size_t j = 0; j < 3; ++j) {
        OracleHandle column = h.column(j);
        const int l = phase_bits_for(column.data_qubits(), {});
        const double half = estimated_phase_distribution(column_angle(column), l)[std::size_t{1} << (l - 1)];
        const auto readout = g_tilde_readout(j, h);
        CHECK(std::abs(readout.overlap.real() - (1.0 - 2.0 * half)) < 1e-10);
        CHECK(std::abs(readout.overlap.imag()) < 1e-10);
        CHECK(readout.fidelity == doctest::Approx((1 - 2 * half) * (1 - 2 * half)).epsilon(1e-9));
        CHECK(kickback_marked_probability(column) == doctest::Approx(half).epsilon(1e-9));
        const bool g = table.column_sum(j) == table.rows();
        CHECK(readout.sign == (g ? -1 : 1));
        CHECK(readout.fidelity >= 2.0 / 3.0);
      }
    }
  }

  TEST_CASE("AND-oracle readouts on fixed tables") {
    OracleHandle h(example_table());
    const auto all_ones = g_tilde_readout(2, h);
    CHECK(all_ones.sign == -1);
    CHECK(std::abs(all_ones.fidelity - 1.0) < 1e-9);
    CHECK(std::abs(all_ones.overlap + 1.0) < 1e-9);
    const auto first = g_tilde_readout(0, h);
    CHECK(first.sign == 1);
    CHECK(first.fidelity >= 2.0 / 3.0);
    const auto second = g_tilde_readout(1, h);
    CHECK(second.sign == 1);
    CHECK(second.fidelity >= 2.0 / 3.0);
    CHECK(h.ledger().bit_oracle == 3 * 4 * 15);

    OracleHandle ones(TruthTable(5, 4, std::vector<std::uint8_t>(20, 1)));
    for (std::size_t j = 0; j < 4; ++j) {
      const auto r = g_tilde_readout(j, ones);
      CHECK(r.sign == -1);
      CHECK(std::abs(r.fidelity - 1.0) < 1e-9);
    }
    OracleHandle zeros(TruthTable(4, 2));
    for (std::size_t j = 0; j < 2; ++j) {
      const auto r = g_tilde_readout(j, zeros);
      CHECK(r.sign == 1);
      CHECK(std::abs(r.fidelity - 1.0) < 1e-12);
    }
  }

  TEST_CASE("AND oracle over a superposed hyperplane register") {
    OracleHandle h(example_table());
    const RegisterLayout layout = counting_layout(h);
    const StateVector input = new_uniform(layout);
    StateVector output = input;
    const auto before = h.ledger();
    sim_and(output, layout, h);
    CHECK((h.ledger() - before).bit_oracle == 4 * ((BasisIndex{1} << layout.l) - 1));

    const std::vector<bool> g{false, false, true, false};
    for (BasisIndex j = 0; j < 4; ++j) {
      const StateVector slice = new_uniform(layout, j);
      const std::complex<double> amp = inner_product(slice, output) * 2.0;  // slice weight is 1/4
      // Weight of the j-branch that left |+>|j>|+>.
      double branch = 0.0;
      for (BasisIndex x = 0; x < output.dimension(); ++x) {
        if (((x >> layout.n) & 3U) == j) branch += std::norm(output[x]);
      }
      const double stray = 1.0 - std::norm(amp) * 0.25 / branch;
      CHECK(stray <= 1.0 / 3.0);
      CHECK((amp.real() < 0) == g[j]);
    }
  }

  TEST_CASE("AND oracle with an extra control only acts when the control is set") {
    OracleHandle h(example_table());
    const RegisterLayout layout = counting_layout(h, {}, true);
    const StateVector input = new_uniform(layout);
    StateVector output = input;
    sim_and(output, layout, h, ControlMask::on(layout.probe_qubit()));
    CHECK(distance(input, output) < 1e-10);
  }

  TEST_CASE("inverse phase estimation undoes phase estimation") {
    OracleHandle h(random_table(6, 3, 0.5, 8));
    const RegisterLayout layout = counting_layout(h);
    StateVector s = new_uniform(layout);
    const StateVector start = s;
    phase_estimate(s, layout, h);
    inverse_phase_estimate(s, layout, h);
    CHECK(distance(start, s) < 1e-10);
  }

  TEST_CASE("quantum counting on the example table") {
    OracleHandle h(example_table());
    const auto first = quantum_count(0, h, 64, 1);
    CHECK(first.s_bits == 3);
    CHECK(first.L_hat == doctest::Approx(4 * std::pow(std::sin(3 * std::numbers::pi / 16), 2)));
    CHECK(std::lround(first.L_hat) == 1);

    const auto second = quantum_count(1, h, 64, 2);
    CHECK(second.s_bits == 5);
    CHECK(std::abs(second.theta_hat - std::numbers::pi / 3) <= std::numbers::pi / 16);
    CHECK(std::lround(second.L_hat) == 3);

    const auto third = quantum_count(2, h, 8, 3);
    CHECK(third.s_bits == 8);
    CHECK(third.L_hat == 4.0);
    CHECK_THROWS_AS(quantum_count(0, h, 0, 1), std::invalid_argument);
  }

  TEST_CASE("counting separates the closest case from the all-ones column") {
    std::vector<std::uint8_t> bits(8, 1);
    bits[5] = 0;
    OracleHandle h(TruthTable(8, 1, bits));
    const auto estimate = quantum_count(0, h, 64, 4);
    CHECK(estimate.phase_bits == 5);
    CHECK(estimate.s_bits != 16);
  }

  TEST_CASE("phase gap bound") {
    CHECK(phase_gap_bound_check(2, 1));
    CHECK(phase_gap_bound_check(2, 4));
    CHECK_THROWS_AS(phase_gap_bound_check(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(phase_gap_bound_check(2, 5), std::invalid_argument);
    // Sufficient integer condition: m 2^(2l) 113^2 >= 2^n 355^2, using 355/113 > pi.
    for (int n = 0; n <= 12; ++n) {
      const int l = l_bits(n);
      for (std::uint64_t m = 1; m <= (std::uint64_t{1} << n); ++m) {
        const unsigned __int128 lhs = static_cast<unsigned __int128>(m) << (2 * l);
        const bool sufficient = lhs * 113 * 113 >= (static_cast<unsigned __int128>(1) << n) * 355 * 355;
        if (sufficient) CHECK(phase_gap_bound_check(n, m));
      }
    }
    const BoundReport report = phase_gap_bound_sweep(12);
    CHECK(report.failures.empty());
    CHECK(report.checked == (std::size_t{1} << 13) - 1);
  }

  TEST_CASE("closest case needs the extra phase bits") {
    for (int n = 1; n <= 4; ++n) {
      CHECK(closest_case(n).column.ok);
    }
    bool violated = false;
    for (int n = 1; n <= 5; ++n) violated |= !closest_case(n, (n + 1) / 2).column.ok;
    CHECK(violated);
  }
}
