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

#include <complex>
#include <cstdint>
#include <optional>

#include "qvs/oracles.hpp"
#include "qvs/register_layout.hpp"
#include "qvs/statevec.hpp"

namespace qvs {

/// Phase-register width ceil(n/2) + 3.
int l_bits(int n);

struct CountingOptions {
  /// Overrides l_bits(n). Only for negative controls: an undersized phase
  /// register is expected to break the AND oracle.
  std::optional<int> phase_bits;
};

int phase_bits_for(int n, const CountingOptions& options);

/// Layout (n, k, l, scratch) sized for `handle`, plus an optional probe qubit.
RegisterLayout counting_layout(const OracleHandle& handle, const CountingOptions& options = {},
                               bool with_probe = false);

/// G = H^n S H^n U_f on the data register. With `control`, U_f is the
/// ancilla-based controlled oracle (two bit-oracle calls) and the
/// reflection is controlled on the same qubit at no query cost.
void grover_operator(StateVector& state, const RegisterLayout& layout, OracleHandle& handle,
                     std::optional<int> control = std::nullopt);

/// G^-1 = U_f H^n S H^n, same cost as G.
void inverse_grover_operator(StateVector& state, const RegisterLayout& layout,
                             OracleHandle& handle, std::optional<int> control = std::nullopt);

/// `power` consecutive controlled-G (or controlled-G^-1) gates on `control`.
/// Same gates and ledger charges as calling grover_operator `power` times,
/// but executed one (j, phase, probe) fiber at a time so the whole sequence
/// stays in cache.
void apply_controlled_grover_power(StateVector& state, const RegisterLayout& layout,
                                   OracleHandle& handle, int control, BasisIndex power,
                                   bool inverse = false);

/// Controlled-G^(2^t) from phase qubit t for t = 0..l-1, then the inverse
/// QFT on the phase register. Every power is applied as 2^t separate
/// controlled-G calls, so the ledger grows by exactly 2 (2^l - 1).
void phase_estimate(StateVector& state, const RegisterLayout& layout, OracleHandle& handle);

/// Exact inverse of phase_estimate, same query cost.
void inverse_phase_estimate(StateVector& state, const RegisterLayout& layout,
                            OracleHandle& handle);

/// Flips the sign of amplitudes whose phase register reads s = 100...0, i.e.
/// Z on the leading-bit qubit with every other phase qubit as an open
/// control. `extra` adds controls outside the phase register (the probe).
void flip_on_half_phase(StateVector& state, const RegisterLayout& layout, ControlMask extra = {});

/// The AND oracle: phase estimation, flip on s = 1/2, inverse phase
/// estimation. On each hyperplane basis state |j> the result approximates
/// (-1)^g(j) times the input, with g(j) = AND_i f(i, j). Costs exactly
/// 4 (2^l - 1) bit-oracle queries.
void sim_and(StateVector& state, const RegisterLayout& layout, OracleHandle& handle,
             ControlMask extra = {});

/// Sign and fidelity of <psi_in| SimAnd |psi_in> for one hyperplane.
struct GTildeReadout {
  int sign = 1;
  double fidelity = 0.0;
  std::complex<double> overlap;
};

/// Exact amplitude readout of the AND oracle on column j, simulated on the
/// column alone. Deterministic; charges one sim_and to the ledger.
GTildeReadout g_tilde_readout(std::size_t j, OracleHandle& handle,
                              const CountingOptions& options = {});

/// Phase-estimation readout of one column.
struct CountEstimate {
  /// Folded register value min(s, 2^l - s); fraction s_bits / 2^l, leading bit s_1 first.
  std::uint64_t s_bits = 0;
  int phase_bits = 0;
  /// pi * s_bits / 2^l, in [0, pi/2].
  double theta_hat = 0.0;
  /// 2^n sin^2(theta_hat). Padded rows (f = 1) are included when N is not a power of two.
  double L_hat = 0.0;
};

/// Samples the phase register after phase estimation `shots` times (each
/// shot is a fresh circuit run and is metered), folds s and 2^l - s onto one
/// angle and returns the modal estimate.
CountEstimate quantum_count(std::size_t j, OracleHandle& handle, int shots, std::uint64_t seed,
                            const CountingOptions& options = {});

/// Whether (2 pi - 2 theta) / 2 pi >= 1/2 + 2^-(ceil(n/2)+3) for
/// theta = arccos(sqrt(m / 2^n)). Requires 1 <= m <= 2^n.
bool phase_gap_bound_check(int n, std::uint64_t m);

}  // namespace qvs
