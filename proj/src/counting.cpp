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

#include "qvs/counting.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qvs {
namespace {

ControlMask control_mask(std::optional<int> control) {
  return control ? ControlMask::on(*control) : ControlMask{};
}

void oracle_step(StateVector& state, const RegisterLayout& layout, OracleHandle& handle,
                 std::optional<int> control) {
  if (control) {
    apply_controlled_phase_oracle(state, *control, layout, handle);
  } else {
    apply_phase_oracle(state, layout, handle);
  }
}

void check_counting_layout(const StateVector& state, const RegisterLayout& layout) {
  if (state.num_qubits() != layout.total_qubits()) {
    throw std::invalid_argument("state has " + std::to_string(state.num_qubits()) +
                                " qubits but layout " + to_string(layout) + " needs " +
                                std::to_string(layout.total_qubits()));
  }
  if (layout.l < 1) throw std::invalid_argument("phase estimation needs a phase register");
}

}  // namespace

int l_bits(int n) {
  if (n < 0) throw std::invalid_argument("data register width must be non-negative");
  return (n + 1) / 2 + 3;
}

int phase_bits_for(int n, const CountingOptions& options) {
  if (options.phase_bits) {
    if (*options.phase_bits < 1) throw std::invalid_argument("phase register needs >= 1 qubit");
    return *options.phase_bits;
  }
  return l_bits(n);
}

RegisterLayout counting_layout(const OracleHandle& handle, const CountingOptions& options,
                               bool with_probe) {
  const int n = handle.data_qubits();
  return RegisterLayout(n, handle.hyperplane_qubits(), phase_bits_for(n, options), 1,
                        with_probe ? 1 : 0);
}

void grover_operator(StateVector& state, const RegisterLayout& layout, OracleHandle& handle,
                     std::optional<int> control) {
  if (state.num_qubits() != layout.total_qubits()) throw std::invalid_argument("state/layout size mismatch");
  oracle_step(state, layout, handle, control);
  apply_reflection_about_uniform(state, layout.offset(Register::data), layout.n,
                                 control_mask(control));
}

void inverse_grover_operator(StateVector& state, const RegisterLayout& layout,
                             OracleHandle& handle, std::optional<int> control) {
  if (state.num_qubits() != layout.total_qubits()) throw std::invalid_argument("state/layout size mismatch");
  apply_reflection_about_uniform(state, layout.offset(Register::data), layout.n,
                                 control_mask(control));
  oracle_step(state, layout, handle, control);
}

void apply_controlled_grover_power(StateVector& state, const RegisterLayout& layout,
                                   OracleHandle& handle, int control, BasisIndex power,
                                   bool inverse) {
  if (state.num_qubits() != layout.total_qubits()) throw std::invalid_argument("state/layout size mismatch");
  if (layout.n != handle.data_qubits() || layout.k != handle.hyperplane_qubits() || layout.a != 1) {
    throw std::invalid_argument("layout " + to_string(layout) + " does not fit the oracle");
  }
  if (control < layout.n || control >= layout.total_qubits() || control == layout.scratch_qubit()) {
    throw std::invalid_argument("control must sit outside the data register and scratch qubit");
  }
  const int scratch_pos = layout.scratch_qubit();
  const BasisIndex scratch = BasisIndex{1} << scratch_pos;
  const BasisIndex control_bit = BasisIndex{1} << control;
  const BasisIndex data_dim = BasisIndex{1} << layout.n;
  const BasisIndex k_mask = (BasisIndex{1} << layout.k) - 1;
  const BasisIndex below_scratch = (BasisIndex{1} << (scratch_pos - layout.n)) - 1;
  const BasisIndex outer_count = BasisIndex{1} << (layout.total_qubits() - layout.n - 1);
  const double two_over = 2.0 / static_cast<double>(data_dim);
  const auto padded = handle.padded_bits();
  auto* amps = state.amplitudes().data();

  // One fiber: all data values for a fixed (j, phase, probe) with the
  // control set; `lo` is the scratch-0 half, `hi` the scratch-1 half.
  auto reflect = [&](std::complex<double>* lo) {
    std::complex<double> sum(0);
    for (BasisIndex i = 0; i < data_dim; ++i) sum += lo[i];
    const std::complex<double> twice_mean = sum * two_over;
    for (BasisIndex i = 0; i < data_dim; ++i) lo[i] = twice_mean - lo[i];
  };
  auto oracle = [&](std::complex<double>* lo, std::complex<double>* hi, const std::uint8_t* f) {
    for (BasisIndex i = 0; i < data_dim; ++i) {
      if (f[i]) std::swap(lo[i], hi[i]);  // U_f'
    }
    for (BasisIndex i = 0; i < data_dim; ++i) hi[i] = -hi[i];  // CZ(control, scratch)
    for (BasisIndex i = 0; i < data_dim; ++i) {
      if (f[i]) std::swap(lo[i], hi[i]);  // U_f'
    }
  };

  double leaked = 0.0;
  for (BasisIndex outer = 0; outer < outer_count; ++outer) {
    const BasisIndex rest = (outer & below_scratch) | ((outer & ~below_scratch) << 1);
    const BasisIndex base = rest << layout.n;
    if ((base & control_bit) == 0) continue;
    const BasisIndex j = (base >> layout.n) & k_mask;
    const std::uint8_t* f = padded.data() + (j << layout.n);
    std::complex<double>* lo = amps + base;
    std::complex<double>* hi = amps + (base | scratch);
    // The reflection is only run on the scratch-0 half: the oracle leaves
    // the scratch-1 half untouched up to sign when it enters empty, and the
    // leak check below rejects any other input.
    for (BasisIndex rep = 0; rep < power; ++rep) {
      if (inverse) {
        reflect(lo);
        oracle(lo, hi, f);
      } else {
        oracle(lo, hi, f);
        reflect(lo);
      }
    }
    for (BasisIndex i = 0; i < data_dim; ++i) leaked += std::norm(hi[i]);
  }
  if (leaked > 1e-18) {
    throw std::logic_error("scratch qubit not disentangled after controlled Grover power; it must enter in |0>");
  }
  handle.ledger_->bit_oracle += 2 * power;
  handle.ledger_->controlled_phase_oracle += power;
}

void phase_estimate(StateVector& state, const RegisterLayout& layout, OracleHandle& handle) {
  check_counting_layout(state, layout);
  for (int t = 0; t < layout.l; ++t) {
    apply_controlled_grover_power(state, layout, handle, layout.qubit(Register::phase, t),
                                  BasisIndex{1} << t);
  }
  const auto phase = layout.qubits(Register::phase);
  apply_inverse_qft(state, std::span<const int>(phase));
}

void inverse_phase_estimate(StateVector& state, const RegisterLayout& layout,
                            OracleHandle& handle) {
  check_counting_layout(state, layout);
  const auto phase = layout.qubits(Register::phase);
  apply_qft(state, std::span<const int>(phase));
  for (int t = layout.l - 1; t >= 0; --t) {
    apply_controlled_grover_power(state, layout, handle, layout.qubit(Register::phase, t),
                                  BasisIndex{1} << t, /*inverse=*/true);
  }
}

void flip_on_half_phase(StateVector& state, const RegisterLayout& layout, ControlMask extra) {
  const BasisIndex phase_mask = layout.mask(Register::phase);
  if (extra.bits() & phase_mask) throw std::invalid_argument("extra control overlaps phase register");
  const int leading = layout.qubit(Register::phase, layout.l - 1);
  const BasisIndex others = phase_mask & ~(BasisIndex{1} << leading);
  apply_controlled_z(state, leading, ControlMask{extra.ones, extra.zeros | others});
}

void sim_and(StateVector& state, const RegisterLayout& layout, OracleHandle& handle,
             ControlMask extra) {
  phase_estimate(state, layout, handle);
  flip_on_half_phase(state, layout, extra);
  inverse_phase_estimate(state, layout, handle);
}

GTildeReadout g_tilde_readout(std::size_t j, OracleHandle& handle, const CountingOptions& options) {
  OracleHandle column = handle.column(j);
  const RegisterLayout layout = counting_layout(column, options);
  const StateVector input = new_uniform(layout);
  StateVector output = input;
  sim_and(output, layout, column);
  GTildeReadout readout;
  readout.overlap = inner_product(input, output);
  readout.sign = readout.overlap.real() < 0.0 ? -1 : 1;
  readout.fidelity = std::norm(readout.overlap);
  return readout;
}

CountEstimate quantum_count(std::size_t j, OracleHandle& handle, int shots, std::uint64_t seed,
                            const CountingOptions& options) {
  if (shots < 1) throw std::invalid_argument("quantum_count needs at least one shot");
  OracleHandle column = handle.column(j);
  const RegisterLayout layout = counting_layout(column, options);
  const BasisIndex grid = BasisIndex{1} << layout.l;
  std::mt19937_64 rng(seed);
  std::map<BasisIndex, int> tally;
  for (int shot = 0; shot < shots; ++shot) {
    StateVector state = new_uniform(layout);
    phase_estimate(state, layout, column);
    const auto probs = register_marginal(state, layout.offset(Register::phase), layout.l);
    std::discrete_distribution<BasisIndex> readout(probs.begin(), probs.end());
    const BasisIndex s = readout(rng);
    ++tally[std::min(s, grid - s)];
  }
  BasisIndex mode = 0;
  int best = -1;
  for (const auto& [s, hits] : tally) {
    if (hits > best) {
      best = hits;
      mode = s;
    }
  }
  CountEstimate estimate;
  estimate.s_bits = mode;
  estimate.phase_bits = layout.l;
  estimate.theta_hat = std::numbers::pi * static_cast<double>(mode) / static_cast<double>(grid);
  const double sin_theta = std::sin(estimate.theta_hat);
  estimate.L_hat = std::ldexp(1.0, layout.n) * sin_theta * sin_theta;
  return estimate;
}

bool phase_gap_bound_check(int n, std::uint64_t m) {
  if (n < 0 || n > 62) throw std::invalid_argument("n out of range");
  const std::uint64_t size = std::uint64_t{1} << n;
  if (m < 1 || m > size) {
    throw std::invalid_argument("m must lie in [1, 2^n], got " + std::to_string(m));
  }
  using Wide = long double;
  const Wide pi = std::numbers::pi_v<Wide>;
  const Wide theta = std::acos(std::sqrt(static_cast<Wide>(m) / static_cast<Wide>(size)));
  const Wide fraction = (2 * pi - 2 * theta) / (2 * pi);
  return fraction >= Wide(0.5) + std::ldexp(Wide(1), -l_bits(n));
}

}  // namespace qvs
