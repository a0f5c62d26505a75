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
 * \file rankopt/feasibility.hpp
 *
 * \brief Ranking-consistency tests: does some rule of a given structure rank
 *  an ordered sample perfectly?
 *
 * Polynomial / sinusoidal structures reduce to linear separability of the
 * consecutive feature differences, i.e. to 0 not lying in their convex hull.
 * Convex structures use interval run counting (d = 1) or a cascade of
 * convex-hull membership tests (degree 1, any d).
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rankopt/domain.hpp"
#include "rankopt/error.hpp"
#include "rankopt/features.hpp"
#include "rankopt/ranking.hpp"
#include "rankopt/simplex.hpp"

namespace rankopt {

/// Tagged descriptor of a ranking structure.
struct RankingStructure {
  enum class Kind { polynomial, sinusoidal, convex1d, convex_deg1, full };

  Kind kind = Kind::polynomial;
  int degree = 1;  ///< ignored for convex_deg1 and full

  static RankingStructure polynomial(int k) { return {Kind::polynomial, k}; }
  static RankingStructure sinusoidal(int k) { return {Kind::sinusoidal, k}; }
  static RankingStructure convex1d(int k) { return {Kind::convex1d, k}; }
  static RankingStructure convex_deg1() { return {Kind::convex_deg1, 1}; }
  static RankingStructure full() { return {Kind::full, 0}; }

  bool uses_features() const noexcept {
    return kind == Kind::polynomial || kind == Kind::sinusoidal;
  }
  FeatureKind feature_kind() const noexcept {
    return kind == Kind::sinusoidal ? FeatureKind::sinusoidal : FeatureKind::polynomial;
  }

  /// Textual form used by the CLI: poly:K, sin:K, convex1d:K, convexdeg1, full.
  std::string to_string() const {
    switch (kind) {
      case Kind::polynomial: return "poly:" + std::to_string(degree);
      case Kind::sinusoidal: return "sin:" + std::to_string(degree);
      case Kind::convex1d: return "convex1d:" + std::to_string(degree);
      case Kind::convex_deg1: return "convexdeg1";
      case Kind::full: return "full";
    }
    return "?";
  }

  static RankingStructure parse(const std::string& s) {
    if (s == "full") return full();
    if (s == "convexdeg1") return convex_deg1();
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw UnknownName("unknown ranking structure '" + s + "'");
    const std::string head = s.substr(0, colon);
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(s.substr(colon + 1), &used);
      if (used != s.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InvalidParameter("ranking structure '" + s + "': degree is not an integer");
    }
    if (k < 1) throw InvalidParameter("ranking structure '" + s + "': degree must be >= 1");
    if (head == "poly") return polynomial(k);
    if (head == "sin") return sinusoidal(k);
    if (head == "convex1d") return convex1d(k);
    throw UnknownName("unknown ranking structure '" + s + "'");
  }

  friend bool operator==(const RankingStructure&, const RankingStructure&) = default;
};

struct ConsistencyOptions {
  /// Inputs are mapped onto [-1,1]^d through this box before feature mapping.
  std::optional<BoxDomain> rescale;
  SimplexOptions simplex;
};

struct ConsistencyResult {
  bool consistent = false;
  /// For feature-based structures: omega with <omega, C_i> > 0 for every
  /// consecutive feature difference C_i (empty for t + 1 < 2).
  std::vector<double> axis;
};

/// 1 iff the zero vector lies in the convex hull of \p vectors.
inline bool zero_in_convex_hull(const std::vector<std::vector<double>>& vectors,
                                const SimplexOptions& opt = {}) {
  if (vectors.empty()) throw InvalidParameter("zero_in_convex_hull: empty vector list");
  FeasibilityProblem p{Matrix::from_columns(vectors), std::vector<double>(vectors.front().size(), 0.0)};
  return !phase1_simplex(p, opt).empty();
}

/// 1 iff \p point lies in the convex hull of \p vertices.
inline bool in_convex_hull(const std::vector<std::vector<double>>& vertices,
                           const std::vector<double>& point, const SimplexOptions& opt = {}) {
  if (vertices.empty()) throw InvalidParameter("in_convex_hull: empty vertex list");
  FeasibilityProblem p{Matrix::from_columns(vertices), point};
  return !phase1_simplex(p, opt).empty();
}

/// The consistency polyhedron's matrix: columns Phi(X_(i+1)) - Phi(X_(i)).
inline Matrix consecutive_feature_differences(const OrderedSample& sample, const FeatureMap& phi) {
  Matrix m(phi.output_dim(), sample.size() > 0 ? sample.size() - 1 : 0);
  std::vector<double> prev = phi(sample.point(0));
  std::vector<double> cur(phi.output_dim());
  for (std::size_t i = 1; i < sample.size(); ++i) {
    phi.map_into(sample.point(i).coords(), cur);
    double* c = m.col_ptr(i - 1);
    for (std::size_t f = 0; f < cur.size(); ++f) c[f] = cur[f] - prev[f];
    prev.swap(cur);
  }
  return m;
}

/**
 * \brief Consistency with polynomial (or sinusoidal) ranking rules of degree k.
 *
 * Consistent iff the polyhedron {lambda : M lambda = 0, sum = 1, lambda >= 0}
 * over the consecutive feature differences is empty; the separating axis of
 * the empty verdict is returned. Samples with duplicate points produce a zero
 * column and are therefore never consistent.
 */
inline ConsistencyResult polynomial_consistency(const OrderedSample& sample, int k,
                                                FeatureKind kind = FeatureKind::polynomial,
                                                const ConsistencyOptions& opt = {}) {
  if (sample.size() == 0) throw InsufficientSample("polynomial_consistency: empty sample");
  const FeatureMap phi(kind, k, sample.dim(), opt.rescale);
  ConsistencyResult out;
  if (sample.size() < 2) {
    out.consistent = true;
    return out;
  }
  FeasibilityProblem p{consecutive_feature_differences(sample, phi),
                       std::vector<double>(phi.output_dim(), 0.0)};
  FeasibilityResult r = phase1_simplex(p, opt.simplex);
  out.consistent = r.empty();
  if (out.consistent) out.axis = std::move(r.axis);
  return out;
}

/**
 * \brief Consistency with convex ranking rules of degree k on the real line.
 *
 * For every level, the points ranked at or above it must form at most k
 * maximal runs in spatial order. Two points at the same location can never
 * be separated.
 */
inline bool convex1d_consistency(const OrderedSample& sample, int k) {
  if (sample.dim() != 1 && sample.size() > 0)
    throw UnsupportedDimension("convex1d_consistency: requires d = 1");
  if (k < 1) throw InvalidParameter("convex1d_consistency: k must be >= 1");
  const std::size_t n = sample.size();
  if (n < 2) return true;
  std::vector<std::size_t> by_x(n);
  std::iota(by_x.begin(), by_x.end(), std::size_t{0});
  std::sort(by_x.begin(), by_x.end(),
            [&](std::size_t a, std::size_t b) { return sample.point(a)[0] < sample.point(b)[0]; });
  std::vector<std::size_t> slot(n);
  for (std::size_t s = 0; s < n; ++s) {
    slot[by_x[s]] = s;
    if (s > 0 && sample.point(by_x[s])[0] == sample.point(by_x[s - 1])[0]) return false;
  }
  std::vector<char> in(n, 0);
  long runs = 0;
  for (std::size_t r = n; r-- > 0;) {  // best first
    const std::size_t s = slot[r];
    const bool left = s > 0 && in[s - 1];
    const bool right = s + 1 < n && in[s + 1];
    in[s] = 1;
    runs += 1 - static_cast<long>(left) - static_cast<long>(right);
    if (runs > k) return false;
  }
  return true;
}

/**
 * \brief Consistency with convex ranking rules of degree 1 in any dimension.
 *
 * Every point must lie outside the convex hull of the points ranked above it.
 */
inline bool convex_deg1_consistency(const OrderedSample& sample, const SimplexOptions& opt = {}) {
  const std::size_t n = sample.size();
  if (n < 2) return true;
  FeasibilityProblem p;
  p.M = Matrix(sample.dim(), 0);
  for (std::size_t j = n - 1; j-- > 0;) {
    p.M.push_column(sample.point(j + 1).coords());
    const auto c = sample.point(j).coords();
    p.b.assign(c.begin(), c.end());
    if (!phase1_simplex(p, opt).empty()) return false;
  }
  return true;
}

/// Points pairwise distinct (the only requirement for a continuous rule).
inline bool full_consistency(const OrderedSample& sample) {
  std::vector<std::size_t> idx(sample.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  auto less = [&](std::size_t a, std::size_t b) {
    const auto x = sample.point(a).coords(), y = sample.point(b).coords();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  };
  std::sort(idx.begin(), idx.end(), less);
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (sample.point(idx[i]) == sample.point(idx[i - 1])) return false;
  return true;
}

/// Dispatches to the test matching \p structure.
inline bool is_consistent(const RankingStructure& structure, const OrderedSample& sample,
                          const ConsistencyOptions& opt = {}) {
  switch (structure.kind) {
    case RankingStructure::Kind::polynomial:
    case RankingStructure::Kind::sinusoidal:
      return polynomial_consistency(sample, structure.degree, structure.feature_kind(), opt).consistent;
    case RankingStructure::Kind::convex1d:
      return convex1d_consistency(sample, structure.degree);
    case RankingStructure::Kind::convex_deg1:
      return convex_deg1_consistency(sample, opt.simplex);
    case RankingStructure::Kind::full:
      return full_consistency(sample);
  }
  return false;
}

}  // namespace rankopt
