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
#include <memory>
#include <span>
#include <vector>

#include "qvs/perceptron.hpp"
#include "qvs/register_layout.hpp"
#include "qvs/statevec.hpp"

namespace qvs {

/// The Boolean matrix f(i, j): row i is a data point, column j a hyperplane.
class TruthTable {
 public:
  /// All-zero table.
  TruthTable(std::size_t rows, std::size_t cols);
  /// Row-major bits, each 0 or 1.
  TruthTable(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> bits);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool bit(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool value);

  /// L_j without metering; test and diagnostic use only.
  std::size_t column_sum(std::size_t j) const;

  /// ceil(log2 N) and ceil(log2 K); zero for a single row or column.
  int data_qubits() const;
  int hyperplane_qubits() const;

  /// f on the power-of-two padded grid: rows past N read 1 (they must not
  /// block the AND), columns past K read 0 (they must not be solutions).
  bool padded_bit(BasisIndex i, BasisIndex j) const;

  bool operator==(const TruthTable&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> bits_;
};

/// f(i, j) = 1 iff planes[j] classifies data point i correctly (strictly).
TruthTable from_perceptron(const Dataset& data, std::span<const Hyperplane> planes);

/// Oracle invocation counts. A phase-oracle call and a controlled call are
/// built from one and two bit-oracle calls respectively, and both tags are
/// charged, so bit_oracle is the total quantum query count.
struct QueryLedger {
  std::uint64_t bit_oracle = 0;
  std::uint64_t phase_oracle = 0;
  std::uint64_t controlled_phase_oracle = 0;
  std::uint64_t classical_f = 0;

  bool operator==(const QueryLedger&) const = default;
};

QueryLedger operator-(const QueryLedger& after, const QueryLedger& before);

/// A truth table plus the ledger that meters every access to it.
///
/// Copies and column views share the ledger; a handle (and anything derived
/// from it) belongs to one experiment trial at a time.
class OracleHandle {
 public:
  friend void apply_bit_oracle(StateVector&, const RegisterLayout&, OracleHandle&);
  friend void apply_phase_oracle(StateVector&, const RegisterLayout&, OracleHandle&);
  friend void apply_controlled_phase_oracle(StateVector&, ControlMask, const RegisterLayout&,
                                            OracleHandle&);
  friend void apply_controlled_grover_power(StateVector&, const RegisterLayout&, OracleHandle&,
                                            int, BasisIndex, bool);

  explicit OracleHandle(TruthTable table);

  const TruthTable& table() const { return *table_; }
  const QueryLedger& ledger() const { return *ledger_; }

  int data_qubits() const { return n_; }
  int hyperplane_qubits() const { return k_; }

  /// Handle over the single column j (an N x 1 table) metered on this
  /// handle's ledger. Simulating one hyperplane does not need the other
  /// columns in the state.
  OracleHandle column(std::size_t j) const;

  /// Classical query f(i, j); charges classical_f.
  bool query(std::size_t i, std::size_t j);

  /// Padded f over the flat index i + j * 2^n, unmetered. Kernel input.
  std::span<const std::uint8_t> padded_bits() const { return padded_; }

 private:
  OracleHandle(std::shared_ptr<const TruthTable> table, std::shared_ptr<QueryLedger> ledger);

  std::shared_ptr<const TruthTable> table_;
  std::shared_ptr<QueryLedger> ledger_;
  int n_ = 0;
  int k_ = 0;
  std::vector<std::uint8_t> padded_;
};

/// U_f': XORs f(i, j) into the scratch qubit. Charges bit_oracle += 1.
void apply_bit_oracle(StateVector& state, const RegisterLayout& layout, OracleHandle& handle);

/// U_f|i, j> = (-1)^f(i,j)|i, j>, realized as U_f' with the scratch qubit
/// rotated to |->. Charges phase_oracle += 1 and bit_oracle += 1.
void apply_phase_oracle(StateVector& state, const RegisterLayout& layout, OracleHandle& handle);

/// Controlled-U_f as U_f' . CZ(control, scratch) . U_f' with the scratch in
/// |0>. Charges controlled_phase_oracle += 1 and bit_oracle += 2. Throws
/// std::logic_error if the scratch qubit is left entangled, which means the
/// caller violated the scratch-in-|0> precondition.
void apply_controlled_phase_oracle(StateVector& state, int control, const RegisterLayout& layout,
                                   OracleHandle& handle);

/// Same construction with an arbitrary control mask on the CZ. Used when a
/// probe qubit adds a second control.
void apply_controlled_phase_oracle(StateVector& state, ControlMask controls,
                                   const RegisterLayout& layout, OracleHandle& handle);

/// Exact column sum L_j. Charges classical_f += N (a full classical scan).
std::size_t column_count(OracleHandle& handle, std::size_t j);

}  // namespace qvs
