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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qvs {

using BasisIndex = std::uint64_t;

enum class Register { data, hyperplane, phase, scratch, probe };

/// Qubit bookkeeping for the counting circuit.
///
/// Global qubit 0 is the least-significant bit of a basis-state index.
/// Registers are packed from the bottom up:
///
///   [0, n)                 data register (index i)
///   [n, n+k)               hyperplane register (index j)
///   [n+k, n+k+l)           phase register, LSB first; its top qubit holds
///                          the leading fraction bit s_1
///   n+k+l                  scratch qubit for the bit oracle (when a = 1)
///   n+k+l+a                probe qubit (when probe = 1)
///
/// With data in the low bits, (i, j) is the low n+k bits of the index and
/// reads as the column-major flat position i + j * 2^n.
struct RegisterLayout {
  int n = 0;
  int k = 0;
  int l = 0;
  int a = 0;
  int probe = 0;

  RegisterLayout() = default;
  RegisterLayout(int data_bits, int hyperplane_bits, int phase_bits, int scratch_bits,
                 int probe_bits = 0)
      : n(data_bits), k(hyperplane_bits), l(phase_bits), a(scratch_bits), probe(probe_bits) {
    if (n < 0 || k < 0 || l < 0) throw std::invalid_argument("register widths must be non-negative");
    if (a != 0 && a != 1) throw std::invalid_argument("scratch register holds 0 or 1 qubits");
    if (probe != 0 && probe != 1) throw std::invalid_argument("probe register holds 0 or 1 qubits");
    if (total_qubits() < 1) throw std::invalid_argument("layout must hold at least one qubit");
    if (total_qubits() > 30) throw std::invalid_argument("layout exceeds the dense simulation limit");
  }

  int total_qubits() const { return n + k + l + a + probe; }

  int width(Register r) const {
    switch (r) {
      case Register::data: return n;
      case Register::hyperplane: return k;
      case Register::phase: return l;
      case Register::scratch: return a;
      case Register::probe: return probe;
    }
    return 0;
  }

  int offset(Register r) const {
    switch (r) {
      case Register::data: return 0;
      case Register::hyperplane: return n;
      case Register::phase: return n + k;
      case Register::scratch: return n + k + l;
      case Register::probe: return n + k + l + a;
    }
    return 0;
  }

  /// Global qubit index of position `pos` (0 = least significant) in register `r`.
  int qubit(Register r, int pos) const {
    if (pos < 0 || pos >= width(r)) throw std::out_of_range("register position out of range");
    return offset(r) + pos;
  }

  std::vector<int> qubits(Register r) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(width(r)));
    for (int p = 0; p < width(r); ++p) out.push_back(offset(r) + p);
    return out;
  }

  int scratch_qubit() const {
    if (a == 0) throw std::logic_error("layout has no scratch qubit");
    return offset(Register::scratch);
  }

  int probe_qubit() const {
    if (probe == 0) throw std::logic_error("layout has no probe qubit");
    return offset(Register::probe);
  }

  /// Bit mask of a register inside a basis index.
  BasisIndex mask(Register r) const {
    const int w = width(r);
    if (w == 0) return 0;
    return ((BasisIndex{1} << w) - 1) << offset(r);
  }

  bool operator==(const RegisterLayout&) const = default;
};

inline std::string to_string(const RegisterLayout& layout) {
  return "RegisterLayout(n=" + std::to_string(layout.n) + ", k=" + std::to_string(layout.k) +
         ", l=" + std::to_string(layout.l) + ", a=" + std::to_string(layout.a) +
         ", probe=" + std::to_string(layout.probe) + ")";
}

}  // namespace qvs
