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
#include <vector>

#include "qvs/statevec.hpp"
#include "test_util.hpp"

using namespace qvs;
using qvs::testing::dense_matrix;
using qvs::testing::distance;
using qvs::testing::random_state;

TEST_SUITE("statevec") {
  TEST_CASE("register layout packs registers from the bottom up") {
    const RegisterLayout layout(2, 3, 4, 1, 1);
    CHECK(layout.total_qubits() == 11);
    CHECK(layout.offset(Register::hyperplane) == 2);
    CHECK(layout.offset(Register::phase) == 5);
    CHECK(layout.scratch_qubit() == 9);
    CHECK(layout.probe_qubit() == 10);
    CHECK(layout.mask(Register::hyperplane) == 0b11100);
    CHECK(layout.qubit(Register::phase, 3) == 8);
    CHECK_THROWS_AS(layout.qubit(Register::data, 2), std::out_of_range);
    CHECK_THROWS_AS(RegisterLayout(0, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(RegisterLayout(1, 1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(RegisterLayout(10, 10, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(RegisterLayout(2, 2, 2, 0).scratch_qubit(), std::logic_error);
  }

  TEST_CASE("new_uniform with a pinned hyperplane") {
    // Data is qubit 0 and the hyperplane qubit 1, so index = i + 2 j.
    const StateVector s = new_uniform(RegisterLayout(1, 1, 0, 0), BasisIndex{0});
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(s[0] - h) < 1e-15);
    CHECK(std::abs(s[1] - h) < 1e-15);
    CHECK(std::abs(s[2]) == 0.0);
    CHECK(std::abs(s[3]) == 0.0);

    const StateVector pinned = new_uniform(RegisterLayout(2, 2, 4, 0), BasisIndex{2});
    int nonzero = 0;
    for (BasisIndex x = 0; x < pinned.dimension(); ++x) {
      if (std::abs(pinned[x]) > 0) {
        ++nonzero;
        CHECK(std::abs(pinned[x] - 0.125) < 1e-15);
        CHECK(((x >> 2) & 3U) == 2U);
      }
    }
    CHECK(nonzero == 64);

    const StateVector full = new_uniform(RegisterLayout(2, 2, 4, 0));
    for (BasisIndex x = 0; x < full.dimension(); ++x) CHECK(std::abs(full[x] - 1.0 / 16) < 1e-15);
    CHECK_THROWS_AS(new_uniform(RegisterLayout(2, 2, 4, 0), BasisIndex{4}), std::out_of_range);
  }

  TEST_CASE("new_uniform leaves scratch and probe in zero") {
    const RegisterLayout layout(1, 1, 1, 1, 1);
    const StateVector s = new_uniform(layout);
    CHECK(probability_of_one(s, layout.scratch_qubit()) == 0.0);
    CHECK(probability_of_one(s, layout.probe_qubit()) == 0.0);
    CHECK(std::abs(s.norm_squared() - 1.0) < 1e-12);
  }

  TEST_CASE("hadamards") {
    StateVector s(3);
    const std::vector<int> all{0, 1, 2};
    apply_hadamards(s, all);
    for (BasisIndex x = 0; x < 8; ++x) CHECK(std::abs(s[x] - 1.0 / std::sqrt(8.0)) < 1e-15);

    const StateVector r = random_state(4, 1);
    StateVector twice = r;
    apply_hadamard(twice, 2);
    apply_hadamard(twice, 2);
    CHECK(distance(r, twice) < 1e-12);

    StateVector minus = StateVector::from_amplitudes((StateVector::Amplitudes(2) << 1, -1).finished() / std::sqrt(2.0));
    apply_hadamard(minus, 0);
    CHECK(std::abs(minus[1] - 1.0) < 1e-15);
    CHECK(std::abs(minus[0]) < 1e-15);

    const std::vector<int> repeated{1, 1};
    CHECK_THROWS_AS(apply_hadamards(s, repeated), std::invalid_argument);
    CHECK_THROWS_AS(apply_hadamard(s, 3), std::out_of_range);
  }

  TEST_CASE("phase flip about the all-zero state") {
    const std::vector<int> both{0, 1};
    StateVector zero(2);
    apply_phase_flip_all_zero(zero, both);
    CHECK(std::abs(zero[0] - 1.0) < 1e-15);

    StateVector one = StateVector::basis(2, 1);
    apply_phase_flip_all_zero(one, both);
    CHECK(std::abs(one[1] + 1.0) < 1e-15);

    StateVector uniform(2);
    apply_hadamards(uniform, both);
    apply_phase_flip_all_zero(uniform, both);
    CHECK(std::abs(uniform[0] - 0.5) < 1e-15);
    for (BasisIndex x = 1; x < 4; ++x) CHECK(std::abs(uniform[x] + 0.5) < 1e-15);
  }

  TEST_CASE("phase flip equals the dense 2|0><0| - I") {
    for (int q = 1; q <= 4; ++q) {
      std::vector<int> qubits;
      for (int b = 0; b < q; ++b) qubits.push_back(b);
      const auto m = dense_matrix(q, [&](StateVector& s) { apply_phase_flip_all_zero(s, qubits); });
      Eigen::MatrixXcd expected = -Eigen::MatrixXcd::Identity(m.rows(), m.cols());
      expected(0, 0) = 1.0;
      CHECK((m - expected).norm() < 1e-14);
    }
    // On a subset: 2|0><0| - I on qubits {1, 3} of a 4-qubit space.
    const std::vector<int> subset{1, 3};
    const auto m = dense_matrix(4, [&](StateVector& s) { apply_phase_flip_all_zero(s, subset); });
    for (Eigen::Index x = 0; x < 16; ++x) {
      const double expected = (x & 0b1010) == 0 ? 1.0 : -1.0;
      CHECK(std::abs(m(x, x) - expected) < 1e-15);
    }
  }

  TEST_CASE("reflection about uniform equals H S H") {
    for (int width = 1; width <= 4; ++width) {
      std::vector<int> qubits;
      for (int b = 0; b < width; ++b) qubits.push_back(b);
      const auto reflected = dense_matrix(width, [&](StateVector& s) { apply_reflection_about_uniform(s, 0, width); });
      const auto hsh = dense_matrix(width, [&](StateVector& s) {
        apply_hadamards(s, qubits);
        apply_phase_flip_all_zero(s, qubits);
        apply_hadamards(s, qubits);
      });
      CHECK((reflected - hsh).norm() < 1e-12);
    }
  }

  TEST_CASE("controlled reflection acts only where the controls hold") {
    const StateVector r = random_state(4, 9);
    StateVector s = r;
    apply_reflection_about_uniform(s, 0, 2, ControlMask::on(3));
    StateVector manual = r;
    // Reference: run the uncontrolled reflection and keep only the control-1 half.
    StateVector full = r;
    apply_reflection_about_uniform(full, 0, 2);
    for (BasisIndex x = 0; x < 16; ++x) {
      if (x & 8U) manual.amplitudes()(static_cast<Eigen::Index>(x)) = full[x];
    }
    CHECK(distance(s, manual) < 1e-14);
    CHECK_THROWS_AS(apply_reflection_about_uniform(s, 0, 2, ControlMask::on(1)), std::invalid_argument);
  }

  TEST_CASE("open-controlled Z") {
    StateVector one = StateVector::basis(1, 1);
    apply_open_controlled_z(one, 0, {});
    CHECK(std::abs(one[1] + 1.0) < 1e-15);

    const std::vector<int> controls{1, 2};
    StateVector a = StateVector::basis(3, 0b001);  // target 1, controls 00
    apply_open_controlled_z(a, 0, controls);
    CHECK(std::abs(a[0b001] + 1.0) < 1e-15);
    StateVector b = StateVector::basis(3, 0b011);  // a control is 1
    apply_open_controlled_z(b, 0, controls);
    CHECK(std::abs(b[0b011] - 1.0) < 1e-15);

    const std::vector<int> overlapping{0, 1};
    CHECK_THROWS_AS(apply_open_controlled_z(a, 0, overlapping), std::invalid_argument);
  }

  TEST_CASE("inverse QFT") {
    const std::vector<int> reg{0, 1, 2, 3};
    // Phase 1/2 lands on 1000, the leading bit on the top qubit.
    StateVector::Amplitudes a(16);
    for (int x = 0; x < 16; ++x) a(x) = std::polar(0.25, 2 * std::numbers::pi * x / 2.0);
    StateVector fourier = StateVector::from_amplitudes(a);
    apply_inverse_qft(fourier, reg);
    CHECK(std::abs(std::abs(fourier[0b1000]) - 1.0) < 1e-12);

    StateVector uniform(4);
    apply_hadamards(uniform, reg);
    apply_inverse_qft(uniform, reg);
    CHECK(std::abs(uniform[0] - 1.0) < 1e-12);

    const StateVector r = random_state(6, 3);
    const std::vector<int> mid{1, 2, 3, 4};
    StateVector round_trip = r;
    apply_qft(round_trip, mid);
    apply_inverse_qft(round_trip, mid);
    CHECK(distance(r, round_trip) < 1e-10);
  }

  TEST_CASE("register transforms agree on contiguous and scattered registers") {
    const StateVector r = random_state(7, 5);
    for (int width = 1; width <= 5; ++width) {
      for (int first = 0; first + width <= 7; first += 2) {
        std::vector<int> reg;
        for (int b = 0; b < width; ++b) reg.push_back(first + b);
        StateVector fast = r;
        StateVector reference = r;
        apply_inverse_qft(fast, reg);
        detail::apply_register_matrix(reference, std::span<const int>(reg),
                                      detail::fourier_matrix<double>(width, -1.0));
        CHECK(distance(fast, reference) < 1e-12);
      }
    }
    const std::vector<int> scattered{5, 0, 3};
    StateVector s = r;
    apply_qft(s, scattered);
    apply_inverse_qft(s, scattered);
    CHECK(distance(r, s) < 1e-12);
  }

  TEST_CASE("inner products") {
    const StateVector r = random_state(3, 2);
    CHECK(std::abs(inner_product(r, r) - 1.0) < 1e-12);
    CHECK(std::abs(inner_product(StateVector::basis(1, 0), StateVector::basis(1, 1))) == 0.0);
    StateVector plus(1);
    apply_hadamard(plus, 0);
    CHECK(std::abs(inner_product(plus, StateVector(1)) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK_THROWS_AS(inner_product(plus, StateVector(2)), std::invalid_argument);
  }

  TEST_CASE("gates preserve the norm and undo themselves") {
    const std::vector<int> reg{1, 2, 3};
    const StateVector r = random_state(5, 11);
    StateVector s = r;
    apply_hadamards(s, reg);
    apply_pauli_x(s, 4);
    apply_controlled_z(s, 0, ControlMask{0b10, 0b100});
    apply_reflection_about_uniform(s, 1, 3);
    apply_inverse_qft(s, reg);
    CHECK(std::abs(s.norm_squared() - 1.0) < 1e-9);
    apply_qft(s, reg);
    apply_reflection_about_uniform(s, 1, 3);
    apply_controlled_z(s, 0, ControlMask{0b10, 0b100});
    apply_pauli_x(s, 4);
    apply_hadamards(s, reg);
    CHECK(distance(r, s) < 1e-10);
  }

  TEST_CASE("marginals and single-qubit probabilities") {
    StateVector s = new_uniform(RegisterLayout(1, 2, 0, 0), BasisIndex{3});
    const auto p = register_marginal(s, 1, 2);
    CHECK(p.size() == 4);
    CHECK(std::abs(p[3] - 1.0) < 1e-15);
    CHECK(std::abs(probability_of_one(s, 0) - 0.5) < 1e-15);
    CHECK(probability_of_one(s, 1) == doctest::Approx(1.0));
  }

  TEST_CASE("state construction validates sizes") {
    CHECK_THROWS_AS(StateVector(0), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(31), std::invalid_argument);
    CHECK_THROWS_AS(StateVector::basis(2, 4), std::out_of_range);
    CHECK_THROWS_AS(StateVector::from_amplitudes(StateVector::Amplitudes::Zero(3)), std::invalid_argument);
  }

  TEST_CASE("single-precision states run the same circuits") {
    BasicStateVector<float> s = new_uniform<float>(RegisterLayout(2, 0, 2, 0));
    const std::vector<int> phase{2, 3};
    apply_inverse_qft(s, phase);
    CHECK(std::abs(s.norm_squared() - 1.0f) < 1e-5f);
    CHECK(register_marginal(s, 2, 2)[0] == doctest::Approx(1.0f).epsilon(1e-5));
  }
}
