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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qvs {

template <typename Real>
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

template <typename Real>
struct BasicDataPoint {
  Vector<Real> x;
  int y = 1;  // +1 or -1
};

/// Separator p = (w, b). The pair must not be the zero vector.
template <typename Real>
class BasicHyperplane {
 public:
  BasicHyperplane(Vector<Real> w, Real b) : w_(std::move(w)), b_(b) {
    if (w_.size() < 1) throw std::invalid_argument("hyperplane needs dimension >= 1");
    if (!w_.allFinite() || !std::isfinite(b_)) {
      throw std::invalid_argument("hyperplane entries must be finite");
    }
    if (w_.isZero(0) && b_ == Real(0)) throw std::invalid_argument("hyperplane (w, b) is zero");
  }

  const Vector<Real>& w() const { return w_; }
  Real b() const { return b_; }
  int dimension() const { return static_cast<int>(w_.size()); }

  BasicHyperplane scaled(Real alpha) const { return BasicHyperplane(alpha * w_, alpha * b_); }

 private:
  Vector<Real> w_;
  Real b_;
};

template <typename Real>
class BasicDataset {
 public:
  BasicDataset(std::vector<BasicDataPoint<Real>> points, Real claimed_margin)
      : points_(std::move(points)), claimed_margin_(claimed_margin) {
    if (points_.empty()) throw std::invalid_argument("dataset needs at least one point");
    if (!(claimed_margin_ > Real(0)) || !std::isfinite(claimed_margin_)) {
      throw std::invalid_argument("claimed margin must be positive and finite");
    }
    const auto m = points_.front().x.size();
    if (m < 1) throw std::invalid_argument("data points need dimension >= 1");
    for (const auto& p : points_) {
      if (p.x.size() != m) throw std::invalid_argument("data points disagree on dimension");
      if (p.y != 1 && p.y != -1) throw std::invalid_argument("labels must be +1 or -1");
      if (!p.x.allFinite()) throw std::invalid_argument("data point has a non-finite entry");
    }
  }

  const std::vector<BasicDataPoint<Real>>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  int dimension() const { return static_cast<int>(points_.front().x.size()); }
  Real claimed_margin() const { return claimed_margin_; }

 private:
  std::vector<BasicDataPoint<Real>> points_;
  Real claimed_margin_;
};

using DataPoint = BasicDataPoint<double>;
using Hyperplane = BasicHyperplane<double>;
using Dataset = BasicDataset<double>;

namespace detail {
template <typename Real>
void check_dimension(const BasicHyperplane<Real>& p, const Vector<Real>& x) {
  if (p.dimension() != x.size()) {
    throw std::invalid_argument("dimension mismatch: hyperplane " + std::to_string(p.dimension()) +
                                " vs point " + std::to_string(x.size()));
  }
}
}  // namespace detail

/// sgn(w.x + b) with the boundary mapped to +1.
template <typename Real>
int classify(const BasicHyperplane<Real>& p, const Vector<Real>& x) {
  detail::check_dimension(p, x);
  return p.w().dot(x) + p.b() >= Real(0) ? 1 : -1;
}

/// Strict criterion (w.x + b) y > 0; a point on the boundary is not counted.
template <typename Real>
bool correctly_classifies(const BasicHyperplane<Real>& p, const BasicDataPoint<Real>& d) {
  detail::check_dimension(p, d.x);
  return (p.w().dot(d.x) + p.b()) * static_cast<Real>(d.y) > Real(0);
}

/// min_i y_i (w.x_i + b) / ||w||. Positive iff p lies in the version space.
template <typename Real>
Real geometric_margin(const BasicDataset<Real>& data, const BasicHyperplane<Real>& p) {
  const Real norm = p.w().norm();
  if (norm == Real(0)) throw std::invalid_argument("geometric margin of a zero weight vector");
  Real best = std::numeric_limits<Real>::infinity();
  for (const auto& d : data.points()) {
    detail::check_dimension(p, d.x);
    best = std::min(best, static_cast<Real>(d.y) * (p.w().dot(d.x) + p.b()) / norm);
  }
  return best;
}

template <typename Real>
bool in_version_space(const BasicDataset<Real>& data, const BasicHyperplane<Real>& p) {
  return std::all_of(data.points().begin(), data.points().end(),
                     [&](const auto& d) { return correctly_classifies(p, d); });
}

/// K draws of (w, b) in R^{M+1} with i.i.d. standard normal entries, w first.
template <typename Real = double>
std::vector<BasicHyperplane<Real>> sample_hyperplanes(std::size_t count, int dimension,
                                                      std::uint64_t seed) {
  if (count < 1 || dimension < 1) throw std::invalid_argument("need K >= 1 and M >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<Real> normal(Real(0), Real(1));
  std::vector<BasicHyperplane<Real>> planes;
  planes.reserve(count);
  while (planes.size() < count) {
    Vector<Real> w(dimension);
    for (int m = 0; m < dimension; ++m) w(m) = normal(rng);
    const Real b = normal(rng);
    if (w.isZero(0) && b == Real(0)) continue;  // measure zero
    planes.emplace_back(std::move(w), b);
  }
  return planes;
}

/// Default multiplier in K = ceil(c ln(1/epsilon) / gamma).
inline constexpr double kSampleCountConstant = 2.0;

inline std::size_t required_sample_count(double gamma, double epsilon,
                                         double c = kSampleCountConstant) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma must lie in (0, 1]");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!(c > 0.0)) throw std::invalid_argument("sample-count constant must be positive");
  const double k = std::ceil(c * std::log(1.0 / epsilon) / gamma);
  return std::max<std::size_t>(1, static_cast<std::size_t>(k));
}

enum class PlantedGeometry {
  /// Two slabs on either side of a plane through the origin: normal offset
  /// uniform in [gamma, gamma + 1], tangential coordinates uniform in
  /// [-gamma/2, gamma/2].
  slab,
  /// Uniform box [-1, 1]^M with points closer than gamma to the plane rejected.
  box,
};

template <typename Real>
struct BasicPlantedDataset {
  BasicDataset<Real> data;
  BasicHyperplane<Real> planted;
};

using PlantedDataset = BasicPlantedDataset<double>;

/// Labelled points separated by a unit-norm planted plane with geometric
/// margin exactly gamma (the closest point is moved onto the margin).
template <typename Real = double>
BasicPlantedDataset<Real> generate_planted_dataset(std::size_t count, int dimension, Real gamma,
                                                   std::uint64_t seed,
                                                   PlantedGeometry geometry = PlantedGeometry::slab) {
  if (count < 1 || dimension < 1) throw std::invalid_argument("need N >= 1 and M >= 1");
  if (!(gamma > Real(0) && gamma < Real(1))) throw std::invalid_argument("gamma must lie in (0, 1)");

  std::mt19937_64 rng(seed);
  std::normal_distribution<Real> normal(Real(0), Real(1));
  std::uniform_real_distribution<Real> unit(Real(0), Real(1));

  Vector<Real> w(dimension);
  do {
    for (int m = 0; m < dimension; ++m) w(m) = normal(rng);
  } while (w.norm() == Real(0));
  w.normalize();

  Real b(0);
  std::vector<Vector<Real>> xs;
  xs.reserve(count);
  if (geometry == PlantedGeometry::slab) {
    Eigen::HouseholderQR<Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>> qr(w);
    const Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> q = qr.householderQ();
    const auto tangent = q.rightCols(dimension - 1);
    for (std::size_t i = 0; i < count; ++i) {
      const Real side = unit(rng) < Real(0.5) ? Real(-1) : Real(1);
      const Real offset = gamma + unit(rng);
      Vector<Real> v(dimension - 1);
      for (int m = 0; m + 1 < dimension; ++m) v(m) = gamma * (unit(rng) - Real(0.5));
      xs.push_back(side * offset * w + tangent * v);
    }
  } else {
    b = unit(rng) - Real(0.5);
    const std::size_t budget = 1000 * count + 10000;
    std::size_t attempts = 0;
    while (xs.size() < count) {
      if (++attempts > budget) {
        throw std::runtime_error("planted generator exhausted its retry budget; gamma too large");
      }
      Vector<Real> x(dimension);
      for (int m = 0; m < dimension; ++m) x(m) = Real(2) * unit(rng) - Real(1);
      if (std::abs(w.dot(x) + b) >= gamma) xs.push_back(std::move(x));
    }
  }

  // Pin the planted margin to gamma. A hair above gamma keeps the
  // ">= gamma" postcondition robust to rounding in the dot products.
  std::size_t closest = 0;
  Real closest_distance = std::numeric_limits<Real>::infinity();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Real d = std::abs(w.dot(xs[i]) + b);
    if (d < closest_distance) {
      closest_distance = d;
      closest = i;
    }
  }
  const Real signed_distance = w.dot(xs[closest]) + b;
  const Real target = std::copysign(gamma * (Real(1) + Real(1e-12)), signed_distance);
  xs[closest] += (target - signed_distance) * w;

  std::vector<BasicDataPoint<Real>> points;
  points.reserve(count);
  for (auto& x : xs) {
    const int y = w.dot(x) + b >= Real(0) ? 1 : -1;
    points.push_back({std::move(x), y});
  }
  return {BasicDataset<Real>(std::move(points), gamma), BasicHyperplane<Real>(w, b)};
}

}  // namespace qvs
