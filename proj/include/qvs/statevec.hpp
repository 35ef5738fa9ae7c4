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

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qvs/register_layout.hpp"

namespace qvs {

/// Dense amplitude vector over `num_qubits` qubits.
///
/// Basis index bit q is the value of global qubit q. Gates are free functions
/// that mutate a state in place.
template <typename Real>
class BasicStateVector {
 public:
  using RealScalar = Real;
  using Scalar = std::complex<Real>;
  using Amplitudes = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  /// |0...0> on `num_qubits` qubits.
  explicit BasicStateVector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 30) {
      throw std::invalid_argument("qubit count must lie in [1, 30], got " +
                                  std::to_string(num_qubits));
    }
    amplitudes_ = Amplitudes::Zero(static_cast<Eigen::Index>(BasisIndex{1} << num_qubits));
    amplitudes_(0) = Scalar(1);
  }

  static BasicStateVector basis(int num_qubits, BasisIndex x) {
    BasicStateVector s(num_qubits);
    if (x >= s.dimension()) throw std::out_of_range("basis index out of range");
    s.amplitudes_(0) = Scalar(0);
    s.amplitudes_(static_cast<Eigen::Index>(x)) = Scalar(1);
    return s;
  }

  /// Wraps raw amplitudes. The length must be a power of two; the norm is not
  /// touched, so callers building test states normalize themselves.
  static BasicStateVector from_amplitudes(Amplitudes amplitudes) {
    const auto size = static_cast<BasisIndex>(amplitudes.size());
    if (size < 2 || (size & (size - 1)) != 0) {
      throw std::invalid_argument("amplitude count must be a power of two >= 2");
    }
    int q = 0;
    while ((BasisIndex{1} << q) < size) ++q;
    BasicStateVector s(q);
    s.amplitudes_ = std::move(amplitudes);
    return s;
  }

  int num_qubits() const { return num_qubits_; }
  BasisIndex dimension() const { return static_cast<BasisIndex>(amplitudes_.size()); }

  const Amplitudes& amplitudes() const { return amplitudes_; }
  Amplitudes& amplitudes() { return amplitudes_; }

  Scalar operator[](BasisIndex x) const { return amplitudes_(static_cast<Eigen::Index>(x)); }
  Scalar& operator[](BasisIndex x) { return amplitudes_(static_cast<Eigen::Index>(x)); }

  Real norm_squared() const { return amplitudes_.squaredNorm(); }

 private:
  int num_qubits_;
  Amplitudes amplitudes_;
};

using StateVector = BasicStateVector<double>;

/// Condition on basis indices: every bit in `ones` set and every bit in
/// `zeros` clear. An empty mask is always satisfied.
struct ControlMask {
  BasisIndex ones = 0;
  BasisIndex zeros = 0;

  bool satisfied(BasisIndex x) const { return (x & ones) == ones && (x & zeros) == 0; }
  BasisIndex bits() const { return ones | zeros; }

  static ControlMask on(int qubit) { return {BasisIndex{1} << qubit, 0}; }
};

namespace detail {

template <typename Real>
void check_qubit(const BasicStateVector<Real>& state, int q) {
  if (q < 0 || q >= state.num_qubits()) {
    throw std::out_of_range("qubit index " + std::to_string(q) + " out of range for " +
                            std::to_string(state.num_qubits()) + "-qubit state");
  }
}

template <typename Real>
BasisIndex checked_mask(const BasicStateVector<Real>& state, std::span<const int> qubits) {
  BasisIndex mask = 0;
  for (int q : qubits) {
    check_qubit(state, q);
    const BasisIndex bit = BasisIndex{1} << q;
    if (mask & bit) throw std::invalid_argument("qubit " + std::to_string(q) + " listed twice");
    mask |= bit;
  }
  return mask;
}

/// Deposits the low bits of `value` into the positions listed in `qubits`
/// (qubits[0] receives bit 0).
inline BasisIndex deposit_bits(BasisIndex value, std::span<const int> qubits) {
  BasisIndex x = 0;
  for (std::size_t b = 0; b < qubits.size(); ++b) {
    if ((value >> b) & 1U) x |= BasisIndex{1} << qubits[b];
  }
  return x;
}

template <typename Real>
Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> fourier_matrix(int bits,
                                                                                  Real sign) {
  const Eigen::Index dim = Eigen::Index{1} << bits;
  const Real scale = Real(1) / std::sqrt(static_cast<Real>(dim));
  Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> f(dim, dim);
  for (Eigen::Index y = 0; y < dim; ++y) {
    for (Eigen::Index x = 0; x < dim; ++x) {
      // Reduce the exponent mod dim before scaling so large l keeps full accuracy.
      const auto e = static_cast<Real>((x * y) % dim);
      const Real angle = sign * Real(2) * std::numbers::pi_v<Real> * e / static_cast<Real>(dim);
      f(y, x) = std::polar(scale, angle);
    }
  }
  return f;
}

template <typename Real>
void apply_register_matrix(
    BasicStateVector<Real>& state, std::span<const int> qubits,
    const Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>& op) {
  const BasisIndex reg_mask = checked_mask(state, qubits);
  const BasisIndex reg_dim = BasisIndex{1} << qubits.size();
  std::vector<BasisIndex> offsets(reg_dim);
  for (BasisIndex r = 0; r < reg_dim; ++r) offsets[r] = deposit_bits(r, qubits);
  std::vector<BasisIndex> bases;
  bases.reserve(state.dimension() / reg_dim);
  for (BasisIndex x = 0; x < state.dimension(); ++x) {
    if ((x & reg_mask) == 0) bases.push_back(x);
  }
  using Matrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix fibers(static_cast<Eigen::Index>(reg_dim), static_cast<Eigen::Index>(bases.size()));
  auto& amps = state.amplitudes();
  for (std::size_t c = 0; c < bases.size(); ++c) {
    for (BasisIndex r = 0; r < reg_dim; ++r) {
      fibers(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          amps(static_cast<Eigen::Index>(bases[c] | offsets[r]));
    }
  }
  const Matrix out = op * fibers;
  for (std::size_t c = 0; c < bases.size(); ++c) {
    for (BasisIndex r = 0; r < reg_dim; ++r) {
      amps(static_cast<Eigen::Index>(bases[c] | offsets[r])) =
          out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
}

/// Unitary DFT with kernel e^{sign 2 pi i x y / 2^width} on the contiguous
/// register [first, first + width), as an in-place radix-2 transform whose
/// butterflies act on whole rows of the lower qubits at once.
template <typename Real>
void apply_fourier_contiguous(BasicStateVector<Real>& state, int first, int width, Real sign) {
  using Complex = std::complex<Real>;
  using Row = Eigen::Map<Eigen::Matrix<Complex, Eigen::Dynamic, 1>>;
  const Eigen::Index low = Eigen::Index{1} << first;
  const Eigen::Index reg = Eigen::Index{1} << width;
  const Eigen::Index block = low * reg;
  auto* amps = state.amplitudes().data();
  std::vector<Complex> twiddles(static_cast<std::size_t>(reg / 2));
  for (Eigen::Index t = 0; t < reg / 2; ++t) {
    twiddles[static_cast<std::size_t>(t)] = std::polar(
        Real(1), sign * Real(2) * std::numbers::pi_v<Real> * static_cast<Real>(t) / static_cast<Real>(reg));
  }
  Eigen::Matrix<Complex, Eigen::Dynamic, 1> tmp(low);
  const Real scale = Real(1) / std::sqrt(static_cast<Real>(reg));
  for (Eigen::Index base = 0; base < static_cast<Eigen::Index>(state.dimension()); base += block) {
    Complex* b = amps + base;
    auto row = [&](Eigen::Index r) { return Row(b + r * low, low); };
    for (Eigen::Index r = 0; r < reg; ++r) {
      Eigen::Index rev = 0;
      for (int bit = 0; bit < width; ++bit) rev |= ((r >> bit) & 1) << (width - 1 - bit);
      if (r < rev) row(r).swap(row(rev));
    }
    for (Eigen::Index size = 2; size <= reg; size *= 2) {
      const Eigen::Index half = size / 2;
      const Eigen::Index stride = reg / size;
      for (Eigen::Index start = 0; start < reg; start += size) {
        for (Eigen::Index t = 0; t < half; ++t) {
          auto u = row(start + t);
          auto v = row(start + t + half);
          tmp = v * twiddles[static_cast<std::size_t>(t * stride)];
          v = u - tmp;
          u += tmp;
        }
      }
    }
    Row(b, block) *= scale;
  }
}

/// Dispatches to the radix-2 path when the register is contiguous and
/// listed least significant first.
template <typename Real>
void apply_fourier(BasicStateVector<Real>& state, std::span<const int> qubits, Real sign) {
  checked_mask(state, qubits);
  bool contiguous = true;
  for (std::size_t b = 1; b < qubits.size(); ++b) contiguous &= qubits[b] == qubits[0] + static_cast<int>(b);
  if (contiguous) {
    apply_fourier_contiguous(state, qubits[0], static_cast<int>(qubits.size()), sign);
  } else {
    apply_register_matrix(state, qubits, fourier_matrix<Real>(static_cast<int>(qubits.size()), sign));
  }
}

}  // namespace detail

/// Equal superposition over the data and phase registers (and over the
/// hyperplane register unless `fixed_j` pins it to a basis state). Scratch
/// and probe qubits start in |0>.
template <typename Real = double>
BasicStateVector<Real> new_uniform(const RegisterLayout& layout,
                                   std::optional<BasisIndex> fixed_j = std::nullopt) {
  if (fixed_j && *fixed_j >= (BasisIndex{1} << layout.k)) {
    throw std::out_of_range("fixed hyperplane index " + std::to_string(*fixed_j) +
                            " does not fit a " + std::to_string(layout.k) + "-qubit register");
  }
  BasicStateVector<Real> state(layout.total_qubits());
  const int free_bits = layout.n + layout.l + (fixed_j ? 0 : layout.k);
  const Real value = Real(1) / std::sqrt(std::ldexp(Real(1), free_bits));
  const BasisIndex j_mask = layout.mask(Register::hyperplane);
  const BasisIndex j_bits = fixed_j ? (*fixed_j << layout.offset(Register::hyperplane)) : 0;
  const BasisIndex ancilla_mask = layout.mask(Register::scratch) | layout.mask(Register::probe);
  auto& amps = state.amplitudes();
  for (BasisIndex x = 0; x < state.dimension(); ++x) {
    const bool keep = (x & ancilla_mask) == 0 && (!fixed_j || (x & j_mask) == j_bits);
    amps(static_cast<Eigen::Index>(x)) = keep ? std::complex<Real>(value) : std::complex<Real>(0);
  }
  return state;
}

template <typename Real>
void apply_hadamard(BasicStateVector<Real>& state, int qubit) {
  detail::check_qubit(state, qubit);
  const Real r = Real(1) / std::numbers::sqrt2_v<Real>;
  const BasisIndex half = BasisIndex{1} << qubit;
  auto* amps = state.amplitudes().data();
  for (BasisIndex base = 0; base < state.dimension(); base += 2 * half) {
    for (BasisIndex x = base; x < base + half; ++x) {
      const auto a0 = amps[x];
      const auto a1 = amps[x + half];
      amps[x] = (a0 + a1) * r;
      amps[x + half] = (a0 - a1) * r;
    }
  }
}

template <typename Real>
void apply_hadamards(BasicStateVector<Real>& state, std::span<const int> qubits) {
  detail::checked_mask(state, qubits);
  for (int q : qubits) apply_hadamard(state, q);
}

template <typename Real>
void apply_pauli_x(BasicStateVector<Real>& state, int qubit) {
  detail::check_qubit(state, qubit);
  const BasisIndex bit = BasisIndex{1} << qubit;
  auto* amps = state.amplitudes().data();
  for (BasisIndex x = 0; x < state.dimension(); ++x) {
    if ((x & bit) == 0) std::swap(amps[x], amps[x | bit]);
  }
}

/// 2|0><0| - I on the listed qubits: amplitudes whose listed bits are all zero
/// keep their sign, all others flip.
template <typename Real>
void apply_phase_flip_all_zero(BasicStateVector<Real>& state, std::span<const int> qubits) {
  const BasisIndex mask = detail::checked_mask(state, qubits);
  auto* amps = state.amplitudes().data();
  for (BasisIndex x = 0; x < state.dimension(); ++x) {
    if (x & mask) amps[x] = -amps[x];
  }
}

/// Z on `target` conditioned on the control mask.
template <typename Real>
void apply_controlled_z(BasicStateVector<Real>& state, int target, ControlMask controls) {
  detail::check_qubit(state, target);
  const BasisIndex t = BasisIndex{1} << target;
  if (controls.bits() & t) throw std::invalid_argument("target qubit also listed as a control");
  if (controls.ones & controls.zeros) throw std::invalid_argument("control listed as open and closed");
  if (controls.bits() >> state.num_qubits()) throw std::out_of_range("control qubit out of range");
  auto* amps = state.amplitudes().data();
  for (BasisIndex x = 0; x < state.dimension(); ++x) {
    if ((x & t) && controls.satisfied(x)) amps[x] = -amps[x];
  }
}

/// Z on `target` when every qubit in `open_controls` reads 0.
template <typename Real>
void apply_open_controlled_z(BasicStateVector<Real>& state, int target,
                             std::span<const int> open_controls) {
  const BasisIndex mask = detail::checked_mask(state, open_controls);
  apply_controlled_z(state, target, ControlMask{0, mask});
}

/// Inverse QFT on the register formed by `qubits` (qubits[0] is the least
/// significant bit). Register value y receives sum_x e^{-2 pi i x y / 2^m} a_x / sqrt(2^m),
/// so a phase phi = 0.s_1 s_2 ... lands with s_1 on the last listed qubit.
template <typename Real>
void apply_inverse_qft(BasicStateVector<Real>& state, std::span<const int> qubits) {
  if (qubits.empty()) throw std::invalid_argument("inverse QFT needs at least one qubit");
  detail::apply_fourier(state, qubits, Real(-1));
}

template <typename Real>
void apply_qft(BasicStateVector<Real>& state, std::span<const int> qubits) {
  if (qubits.empty()) throw std::invalid_argument("QFT needs at least one qubit");
  detail::apply_fourier(state, qubits, Real(1));
}

/// Reflection 2|+><+| - I on the contiguous register [first, first + width),
/// applied only on basis fibers whose remaining bits satisfy `controls`.
/// Equals H^width (2|0><0| - I) H^width on that register.
template <typename Real>
void apply_reflection_about_uniform(BasicStateVector<Real>& state, int first, int width,
                                    ControlMask controls = {}) {
  if (width < 0 || first < 0 || first + width > state.num_qubits()) {
    throw std::out_of_range("reflection register out of range");
  }
  if (width == 0) return;  // 2|><| - I on a one-dimensional space is the identity
  const BasisIndex fiber = BasisIndex{1} << width;
  const BasisIndex stride = BasisIndex{1} << first;
  const BasisIndex reg_mask = (fiber - 1) << first;
  if (controls.bits() & reg_mask) throw std::invalid_argument("control overlaps reflected register");
  const Real two_over = Real(2) / static_cast<Real>(fiber);
  auto* amps = state.amplitudes().data();
  const BasisIndex outer_count = state.dimension() >> (first + width);
  for (BasisIndex outer = 0; outer < outer_count; ++outer) {
    for (BasisIndex inner = 0; inner < stride; ++inner) {
      const BasisIndex base = inner | (outer << (first + width));
      if (!controls.satisfied(base)) continue;
      std::complex<Real> sum(0);
      for (BasisIndex r = 0; r < fiber; ++r) sum += amps[base + r * stride];
      const std::complex<Real> twice_mean = sum * two_over;
      for (BasisIndex r = 0; r < fiber; ++r) {
        auto& a = amps[base + r * stride];
        a = twice_mean - a;
      }
    }
  }
}

/// <a|b>.
template <typename Real>
std::complex<Real> inner_product(const BasicStateVector<Real>& a, const BasicStateVector<Real>& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("inner product of states with different qubit counts");
  }
  return a.amplitudes().dot(b.amplitudes());
}

/// Marginal distribution of the contiguous register [first, first + width).
template <typename Real>
std::vector<Real> register_marginal(const BasicStateVector<Real>& state, int first, int width) {
  if (width < 0 || first < 0 || first + width > state.num_qubits()) {
    throw std::out_of_range("marginal register out of range");
  }
  std::vector<Real> probs(std::size_t{1} << width, Real(0));
  const BasisIndex mask = (BasisIndex{1} << width) - 1;
  const auto& amps = state.amplitudes();
  for (BasisIndex x = 0; x < state.dimension(); ++x) {
    probs[(x >> first) & mask] += std::norm(amps(static_cast<Eigen::Index>(x)));
  }
  return probs;
}

template <typename Real>
Real probability_of_one(const BasicStateVector<Real>& state, int qubit) {
  detail::check_qubit(state, qubit);
  const BasisIndex bit = BasisIndex{1} << qubit;
  Real p(0);
  const auto& amps = state.amplitudes();
  for (BasisIndex x = 0; x < state.dimension(); ++x) {
    if (x & bit) p += std::norm(amps(static_cast<Eigen::Index>(x)));
  }
  return p;
}

}  // namespace qvs
