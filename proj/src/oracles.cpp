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

#include "qvs/oracles.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace qvs {
namespace {

int ceil_log2(std::size_t v) {
  int bits = 0;
  while ((std::size_t{1} << bits) < v) ++bits;
  return bits;
}

void check_layout(const RegisterLayout& layout, const OracleHandle& handle) {
  if (layout.n != handle.data_qubits() || layout.k != handle.hyperplane_qubits()) {
    throw std::invalid_argument("layout " + to_string(layout) + " does not match a table needing n=" +
                                std::to_string(handle.data_qubits()) +
                                ", k=" + std::to_string(handle.hyperplane_qubits()));
  }
  if (layout.a != 1) throw std::invalid_argument("oracle needs a scratch qubit in the layout");
}

// XOR f(i, j) into the scratch bit: swap the (a=0, a=1) amplitude pair of
// every (i, j) with f = 1.
void xor_table_into_scratch(StateVector& state, const RegisterLayout& layout,
                            std::span<const std::uint8_t> padded) {
  const BasisIndex scratch = BasisIndex{1} << layout.scratch_qubit();
  const BasisIndex low_mask = (BasisIndex{1} << (layout.n + layout.k)) - 1;
  auto* amps = state.amplitudes().data();
  const BasisIndex dim = state.dimension();
  for (BasisIndex hi = 0; hi < dim; hi += 2 * scratch) {
    for (BasisIndex x = hi; x < hi + scratch; ++x) {
      if (padded[x & low_mask]) std::swap(amps[x], amps[x | scratch]);
    }
  }
}

void require_scratch_clear(const StateVector& state, const RegisterLayout& layout) {
  const BasisIndex scratch = BasisIndex{1} << layout.scratch_qubit();
  const auto* amps = state.amplitudes().data();
  double leaked = 0.0;
  for (BasisIndex x = 0; x < state.dimension(); ++x) {
    if (x & scratch) leaked += std::norm(amps[x]);
  }
  if (leaked > 1e-18) {
    throw std::logic_error("scratch qubit not disentangled after oracle call (weight " +
                           std::to_string(leaked) + "); it must enter in |0>");
  }
}

}  // namespace

TruthTable::TruthTable(std::size_t rows, std::size_t cols)
    : TruthTable(rows, cols, std::vector<std::uint8_t>(rows * cols, 0)) {}

TruthTable::TruthTable(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> bits)
    : rows_(rows), cols_(cols), bits_(std::move(bits)) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("truth table needs N >= 1 and K >= 1");
  if (bits_.size() != rows_ * cols_) {
    throw std::invalid_argument("truth table expects " + std::to_string(rows_ * cols_) +
                                " bits, got " + std::to_string(bits_.size()));
  }
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("truth table entries must be 0 or 1");
  }
}

bool TruthTable::bit(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("truth table index out of range");
  return bits_[i * cols_ + j] != 0;
}

void TruthTable::set(std::size_t i, std::size_t j, bool value) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("truth table index out of range");
  bits_[i * cols_ + j] = value ? 1 : 0;
}

std::size_t TruthTable::column_sum(std::size_t j) const {
  std::size_t sum = 0;
  for (std::size_t i = 0; i < rows_; ++i) sum += bit(i, j) ? 1 : 0;
  return sum;
}

int TruthTable::data_qubits() const { return ceil_log2(rows_); }
int TruthTable::hyperplane_qubits() const { return ceil_log2(cols_); }

bool TruthTable::padded_bit(BasisIndex i, BasisIndex j) const {
  if (j >= cols_) return false;
  if (i >= rows_) return true;
  return bits_[i * cols_ + j] != 0;
}

TruthTable from_perceptron(const Dataset& data, std::span<const Hyperplane> planes) {
  if (planes.empty()) throw std::invalid_argument("need at least one hyperplane");
  TruthTable table(data.size(), planes.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t j = 0; j < planes.size(); ++j) {
      table.set(i, j, correctly_classifies(planes[j], data.points()[i]));
    }
  }
  return table;
}

QueryLedger operator-(const QueryLedger& after, const QueryLedger& before) {
  return {after.bit_oracle - before.bit_oracle, after.phase_oracle - before.phase_oracle,
          after.controlled_phase_oracle - before.controlled_phase_oracle,
          after.classical_f - before.classical_f};
}

OracleHandle::OracleHandle(TruthTable table)
    : OracleHandle(std::make_shared<const TruthTable>(std::move(table)),
                   std::make_shared<QueryLedger>()) {}

OracleHandle::OracleHandle(std::shared_ptr<const TruthTable> table,
                           std::shared_ptr<QueryLedger> ledger)
    : table_(std::move(table)),
      ledger_(std::move(ledger)),
      n_(table_->data_qubits()),
      k_(table_->hyperplane_qubits()) {
  if (n_ + k_ > 26) throw std::invalid_argument("truth table too large for dense simulation");
  const BasisIndex rows = BasisIndex{1} << n_;
  const BasisIndex cols = BasisIndex{1} << k_;
  padded_.resize(rows * cols);
  for (BasisIndex j = 0; j < cols; ++j) {
    for (BasisIndex i = 0; i < rows; ++i) {
      padded_[i + (j << n_)] = table_->padded_bit(i, j) ? 1 : 0;
    }
  }
}

OracleHandle OracleHandle::column(std::size_t j) const {
  if (j >= table_->cols()) throw std::out_of_range("column index out of range");
  TruthTable col(table_->rows(), 1);
  for (std::size_t i = 0; i < table_->rows(); ++i) col.set(i, 0, table_->bit(i, j));
  return OracleHandle(std::make_shared<const TruthTable>(std::move(col)), ledger_);
}

bool OracleHandle::query(std::size_t i, std::size_t j) {
  const bool v = table_->bit(i, j);
  ++ledger_->classical_f;
  return v;
}

void apply_bit_oracle(StateVector& state, const RegisterLayout& layout, OracleHandle& handle) {
  check_layout(layout, handle);
  if (layout.total_qubits() != state.num_qubits()) throw std::invalid_argument("state/layout size mismatch");
  xor_table_into_scratch(state, layout, handle.padded_bits());
  ++handle.ledger_->bit_oracle;
}

void apply_phase_oracle(StateVector& state, const RegisterLayout& layout, OracleHandle& handle) {
  check_layout(layout, handle);
  if (layout.total_qubits() != state.num_qubits()) throw std::invalid_argument("state/layout size mismatch");
  const int s = layout.scratch_qubit();
  apply_pauli_x(state, s);
  apply_hadamard(state, s);
  xor_table_into_scratch(state, layout, handle.padded_bits());
  apply_hadamard(state, s);
  apply_pauli_x(state, s);
  require_scratch_clear(state, layout);
  ++handle.ledger_->bit_oracle;
  ++handle.ledger_->phase_oracle;
}

void apply_controlled_phase_oracle(StateVector& state, ControlMask controls,
                                   const RegisterLayout& layout, OracleHandle& handle) {
  check_layout(layout, handle);
  if (layout.total_qubits() != state.num_qubits()) throw std::invalid_argument("state/layout size mismatch");
  const int s = layout.scratch_qubit();
  xor_table_into_scratch(state, layout, handle.padded_bits());
  apply_controlled_z(state, s, controls);
  xor_table_into_scratch(state, layout, handle.padded_bits());
  require_scratch_clear(state, layout);
  handle.ledger_->bit_oracle += 2;
  ++handle.ledger_->controlled_phase_oracle;
}

void apply_controlled_phase_oracle(StateVector& state, int control, const RegisterLayout& layout,
                                   OracleHandle& handle) {
  if (control < 0 || control >= state.num_qubits()) throw std::out_of_range("control qubit out of range");
  apply_controlled_phase_oracle(state, ControlMask::on(control), layout, handle);
}

std::size_t column_count(OracleHandle& handle, std::size_t j) {
  if (j >= handle.table().cols()) throw std::out_of_range("column index out of range");
  std::size_t sum = 0;
  for (std::size_t i = 0; i < handle.table().rows(); ++i) sum += handle.query(i, j) ? 1 : 0;
  return sum;
}

}  // namespace qvs
