/*
 * Copyright 2026 The rankopt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * \file rankopt/features.hpp
 *
 * \brief Polynomial and sinusoidal feature maps.
 *
 * Monomials of total degree 1..k, constant excluded, in graded
 * lexicographic order: all degree-1 monomials first, then degree 2, ...;
 * within one degree, exponent vectors are sorted lexicographically in
 * decreasing order. For d = 2, k = 2 this gives
 *
 *   (x1, x2, x1^2, x1 x2, x2^2).
 *
 * Because lower degrees come first, the first feature_dim(d, k-1) entries
 * of a degree-k map are exactly the degree-(k-1) map.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rankopt/domain.hpp"
#include "rankopt/error.hpp"

namespace rankopt {

enum class FeatureKind { polynomial, sinusoidal };

/// Largest degree a FeatureMap accepts.
inline constexpr int kMaxFeatureDegree = 8;

/// binom(k + d, d) - 1; throws CapacityError if it does not fit in size_t.
inline std::size_t feature_dim(std::size_t d, int k) {
  if (d < 1 || k < 1) throw InvalidParameter("feature_dim: need d >= 1 and k >= 1");
  // binom(n, r) with r = min(d, k), built up through binom(n - r + i, i)
  const std::size_t n = d + static_cast<std::size_t>(k);
  const std::size_t r = std::min(d, static_cast<std::size_t>(k));
  unsigned __int128 c = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    c = c * (n - r + i) / i;
    if (c > std::numeric_limits<std::size_t>::max())
      throw CapacityError("feature_dim: binomial coefficient overflows");
  }
  return static_cast<std::size_t>(c) - 1;
}

/**
 * \brief Degree-k monomial (or cos(2 pi x) monomial) embedding of R^d.
 *
 * When constructed with a domain, inputs are first mapped affinely onto
 * [-1, 1]^d; for the sinusoidal kind the cosine is applied after that
 * rescaling.
 */
class FeatureMap {
 public:
  FeatureMap(FeatureKind kind, int degree, std::size_t input_dim,
             std::optional<BoxDomain> rescale = std::nullopt)
      : kind_(kind), degree_(degree), input_dim_(input_dim), rescale_(std::move(rescale)) {
    if (degree < 1 || degree > kMaxFeatureDegree)
      throw InvalidParameter("FeatureMap: degree must lie in [1, " +
                             std::to_string(kMaxFeatureDegree) + "]");
    if (input_dim < 1) throw InvalidParameter("FeatureMap: input dimension must be >= 1");
    if (rescale_ && rescale_->dim() != input_dim)
      throw InvalidParameter("FeatureMap: rescale domain dimension mismatch");
    build_monomials();
  }

  FeatureKind kind() const noexcept { return kind_; }
  int degree() const noexcept { return degree_; }
  std::size_t input_dim() const noexcept { return input_dim_; }
  std::size_t output_dim() const noexcept { return exponents_.size(); }

  /// Exponent vector of every output coordinate, in output order.
  const std::vector<std::vector<int>>& exponents() const noexcept { return exponents_; }

  void map_into(std::span<const double> x, std::span<double> out) const {
    if (x.size() != input_dim_) throw InvalidParameter("FeatureMap: input dimension mismatch");
    double z[kScratch];
    std::vector<double> zbig;
    double* zp = z;
    if (input_dim_ > kScratch) {
      zbig.resize(input_dim_);
      zp = zbig.data();
    }
    for (std::size_t i = 0; i < input_dim_; ++i) {
      double v = x[i];
      if (rescale_) {
        const double lo = rescale_->lower()[i], hi = rescale_->upper()[i];
        v = 2.0 * (v - lo) / (hi - lo) - 1.0;
      }
      if (kind_ == FeatureKind::sinusoidal) v = std::cos(2.0 * std::numbers::pi * v);
      zp[i] = v;
    }
    for (std::size_t f = 0; f < exponents_.size(); ++f) {
      const double base = parent_[f] < 0 ? 1.0 : out[static_cast<std::size_t>(parent_[f])];
      out[f] = base * zp[factor_[f]];
    }
  }

  std::vector<double> operator()(std::span<const double> x) const {
    std::vector<double> out(output_dim());
    map_into(x, out);
    return out;
  }
  std::vector<double> operator()(const Point& x) const { return (*this)(x.coords()); }

 private:
  static constexpr std::size_t kScratch = 16;

  void build_monomials() {
    exponents_.clear();
    std::vector<int> e(input_dim_, 0);
    for (int g = 1; g <= degree_; ++g) emit(e, 0, g);
    // Each monomial is its parent (first nonzero exponent decremented)
    // times that variable; the parent always has lower degree, so it
    // appears earlier in graded order.
    parent_.assign(exponents_.size(), -1);
    factor_.assign(exponents_.size(), 0);
    for (std::size_t f = 0; f < exponents_.size(); ++f) {
      std::vector<int> p = exponents_[f];
      std::size_t j = 0;
      while (p[j] == 0) ++j;
      --p[j];
      factor_[f] = j;
      for (std::size_t q = 0; q < f; ++q)
        if (exponents_[q] == p) {
          parent_[f] = static_cast<std::ptrdiff_t>(q);
          break;
        }
    }
  }

  // Exponent vectors with the given remaining degree in decreasing lex order.
  void emit(std::vector<int>& e, std::size_t pos, int remaining) {
    if (pos + 1 == input_dim_) {
      e[pos] = remaining;
      exponents_.push_back(e);
      e[pos] = 0;
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      e[pos] = v;
      emit(e, pos + 1, remaining - v);
    }
    e[pos] = 0;
  }

  FeatureKind kind_;
  int degree_;
  std::size_t input_dim_;
  std::optional<BoxDomain> rescale_;
  std::vector<std::vector<int>> exponents_;
  std::vector<std::ptrdiff_t> parent_;
  std::vector<std::size_t> factor_;
};

/// All monomials of x of total degree 1..k, graded-lex order, no rescaling.
inline std::vector<double> map_polynomial(const Point& x, int k) {
  return FeatureMap(FeatureKind::polynomial, k, x.dim())(x);
}

/// map_polynomial applied to (cos(2 pi x_1), ..., cos(2 pi x_d)).
inline std::vector<double> map_sinusoidal(const Point& x, int k) {
  return FeatureMap(FeatureKind::sinusoidal, k, x.dim())(x);
}

}  // namespace rankopt
