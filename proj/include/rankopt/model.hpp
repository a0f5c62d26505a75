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
 * \file rankopt/model.hpp
 *
 * \brief Running sample plus the implicit active subset of one ranking
 *  structure.
 *
 * RankingModel answers the two questions the optimizers ask:
 *
 *  - consistent(): does some rule of the structure rank the sample
 *    perfectly?
 *  - admits(x): does some such rule rank x at or above the current best?
 *    This is the consistency of the sample augmented with a ghost
 *    evaluation (x, best + c).
 *
 * For feature-based structures both questions are "is 0 in the convex hull
 * of these difference columns". The model solves them by column generation:
 * a small LP over a working set of difference columns either proves
 * membership (some lambda, which stays valid for the full column set) or
 * returns a separating axis, which is checked against every consecutive
 * column; violated columns join the working set and the LP is re-solved.
 * Difference columns Phi(x_hi) - Phi(x_lo) with value(hi) > value(lo) are
 * non-negative combinations of consecutive columns, so working-set entries
 * never go stale as the sample grows. Separating axes found along the way
 * are cached and give a one-dot-product acceptance for later candidates.
 * Rejections are cached too: the final basis of a rejecting LP spans a
 * simplicial cone inside the cone of the difference columns, and any later
 * candidate with -g in that cone is rejected without an LP. Every verdict
 * is backed by a certificate for the full problem.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rankopt/domain.hpp"
#include "rankopt/error.hpp"
#include "rankopt/feasibility.hpp"
#include "rankopt/features.hpp"
#include "rankopt/ranking.hpp"
#include "rankopt/simplex.hpp"

namespace rankopt {

struct ModelOptions {
  double ghost_offset = 1.0;           ///< c > 0 in the ghost value best + c
  bool ghost_equality_branch = false;  ///< also try r(x, best) = 0 (feature structures only)
  SimplexOptions simplex;
  std::size_t axis_cache = 8;
  std::size_t cone_cache = 64;
  std::size_t working_set_factor = 4;  ///< working set holds factor * (m + 1) columns
};

/// Counters describing how verdicts were reached; for diagnostics only.
struct ModelStats {
  std::size_t cached_axis_accepts = 0;
  std::size_t cached_cone_rejects = 0;
  std::size_t lp_solves = 0;
  std::size_t numerical_failures = 0;
};

class RankingModel {
 public:
  RankingModel(RankingStructure structure, BoxDomain domain, ModelOptions opt = {})
      : structure_(structure), domain_(std::move(domain)), opt_(opt) {
    if (!(opt_.ghost_offset > 0.0)) throw InvalidParameter("RankingModel: ghost offset must be > 0");
    if (structure_.kind == RankingStructure::Kind::convex1d && domain_.dim() != 1)
      throw UnsupportedDimension("RankingModel: convex1d structures require d = 1");
    if (structure_.kind != RankingStructure::Kind::full &&
        structure_.kind != RankingStructure::Kind::convex_deg1 && structure_.degree < 1)
      throw InvalidParameter("RankingModel: degree must be >= 1");
    rebuild_features();
  }

  const RankingStructure& structure() const noexcept { return structure_; }
  std::size_t size() const noexcept { return sample_.size(); }
  const Sample& sample() const noexcept { return sample_; }
  const ModelStats& stats() const noexcept { return stats_; }

  /// Adds an evaluation; \p key must differ from every stored key.
  void add(const Point& x, double key) {
    const std::size_t idx = sample_.size();
    sample_.append(x, key);
    auto pos = std::lower_bound(order_.begin(), order_.end(), key,
                                [&](std::size_t i, double k) { return sample_[i].value < k; });
    if (pos != order_.end() && sample_[*pos].value == key)
      throw TieError("RankingModel: duplicate key");
    order_.insert(pos, idx);
    if (structure_.uses_features()) append_features(x);
    consistent_.reset();
  }

  /// Changes the degree of the structure (polynomial, sinusoidal, convex1d).
  void set_degree(int k) {
    if (k < 1) throw InvalidParameter("RankingModel: degree must be >= 1");
    if (k == structure_.degree) return;
    structure_.degree = k;
    rebuild_features();
    consistent_.reset();
  }

  /// Whether some rule of the structure ranks the whole sample perfectly.
  bool consistent() {
    if (!consistent_) consistent_ = compute_consistent();
    return *consistent_;
  }

  /// Whether some perfectly-ranking rule places \p x at or above the best point.
  bool admits(const Point& x) {
    if (sample_.empty()) return true;
    if (!consistent()) return false;
    try {
      switch (structure_.kind) {
        case RankingStructure::Kind::polynomial:
        case RankingStructure::Kind::sinusoidal:
          return admits_features(x);
        default:
          return admits_generic(x);
      }
    } catch (const NumericalFailure&) {
      // never lose a point that might beat the best
      ++stats_.numerical_failures;
      return true;
    }
  }

  /// Independent check of admits() through the plain consistency tests.
  bool admits_reference(const Point& x) const {
    Sample aug = sample_;
    aug.append(x, sample_.best().value + opt_.ghost_offset);
    ConsistencyOptions co{domain_, opt_.simplex};
    return is_consistent(structure_, reorder_strict(aug), co);
  }

 private:
  bool compute_consistent() {
    if (sample_.size() < 2) {
      if (structure_.uses_features()) axes_.clear();
      return true;
    }
    try {
      if (!structure_.uses_features()) {
        ConsistencyOptions co{domain_, opt_.simplex};
        return is_consistent(structure_, reorder_strict(sample_), co);
      }
      // keep only cached axes that still separate every consecutive column
      std::deque<std::vector<double>> keep;
      for (auto& a : axes_)
        if (separates_all(a)) keep.push_back(std::move(a));
      axes_.swap(keep);
      if (!axes_.empty()) return true;
      return !zero_in_hull(std::nullopt);
    } catch (const NumericalFailure&) {
      ++stats_.numerical_failures;
      return true;
    }
  }

  bool admits_features(const Point& x) {
    std::vector<double> g(m_);
    phi_->map_into(x.coords(), g);
    const double* best = feat(sample_.best_index());
    double gnorm = 0.0;
    for (std::size_t f = 0; f < m_; ++f) {
      g[f] -= best[f];
      gnorm = std::max(gnorm, std::abs(g[f]));
    }
    if (gnorm == 0.0) return opt_.ghost_equality_branch;  // same features as the best point
    for (const auto& a : axes_)
      if (dot(a.data(), g.data()) > opt_.simplex.tol) {
        ++stats_.cached_axis_accepts;
        return true;
      }
    if (in_cached_cone(g)) {
      ++stats_.cached_cone_rejects;
      return opt_.ghost_equality_branch && equality_branch(g);
    }
    if (!zero_in_hull(g)) return true;
    if (opt_.ghost_equality_branch) return equality_branch(g);
    return false;
  }

  bool admits_generic(const Point& x) {
    ConsistencyOptions co{domain_, opt_.simplex};
    Sample aug = sample_;
    aug.append(x, sample_.best().value + opt_.ghost_offset);
    return is_consistent(structure_, reorder_strict(aug), co);
  }

  // Exists omega with <omega, C_i> > 0 for all i and <omega, g> = 0: project
  // every consecutive column onto the orthogonal complement of g.
  bool equality_branch(const std::vector<double>& g) {
    const double gg = dot(g.data(), g.data());
    Matrix M(m_, order_.size() - 1);
    for (std::size_t i = 0; i + 1 < order_.size(); ++i) {
      double* c = M.col_ptr(i);
      consecutive_column(i, c);
      const double s = dot(c, g.data()) / gg;
      for (std::size_t f = 0; f < m_; ++f) c[f] -= s * g[f];
    }
    ++stats_.lp_solves;
    return phase1_simplex({std::move(M), std::vector<double>(m_, 0.0)}, opt_.simplex).empty();
  }

  // Column generation for "0 in conv(all consecutive columns [+ forced])".
  // On a "no" answer the separating axis is cached.
  bool zero_in_hull(const std::optional<std::vector<double>>& forced) {
    const std::size_t ncols = order_.size() - 1;
    const std::size_t ws_cap = opt_.working_set_factor * (m_ + 1);
    std::vector<std::pair<std::size_t, std::size_t>> active(working_.begin(), working_.end());
    if (active.empty()) {
      // seed with the columns next to the best point
      for (std::size_t i = ncols; i-- > 0 && active.size() < m_ + 1;)
        active.emplace_back(order_[i], order_[i + 1]);
    }
    std::vector<double> scores(ncols);
    std::vector<double> col(m_);
    for (std::size_t round = 0;; ++round) {
      FeasibilityProblem p;
      p.M = Matrix(m_, 0);
      for (const auto& [lo, hi] : active) {
        pair_column(lo, hi, col.data());
        p.M.push_column(col);
      }
      if (forced) p.M.push_column(*forced);
      p.b.assign(m_, 0.0);
      ++stats_.lp_solves;
      const FeasibilityResult r = phase1_simplex(p, opt_.simplex);
      if (!r.empty()) {
        for (std::size_t j = 0; j < active.size(); ++j)
          if (r.lambda[j] > 0.0) touch(active[j], ws_cap);
        if (forced) remember_cone(active, r.basis);
        return true;
      }
      // check the axis on every consecutive column
      std::vector<std::size_t> violated;
      for (std::size_t i = 0; i < ncols; ++i) {
        consecutive_column(i, col.data());
        scores[i] = dot(r.axis.data(), col.data());
        if (!(scores[i] > opt_.simplex.tol)) violated.push_back(i);
      }
      if (violated.empty()) {
        remember_axis(r.axis);
        return false;
      }
      std::sort(violated.begin(), violated.end(),
                [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
      std::size_t added = 0;
      for (std::size_t i : violated) {
        const std::pair<std::size_t, std::size_t> pr{order_[i], order_[i + 1]};
        if (std::find(active.begin(), active.end(), pr) != active.end()) continue;
        active.push_back(pr);
        if (++added > m_) break;
      }
      if (added == 0 || round > ncols) return zero_in_full_hull(forced);
    }
  }

  bool zero_in_full_hull(const std::optional<std::vector<double>>& forced) {
    const std::size_t ncols = order_.size() - 1;
    FeasibilityProblem p;
    p.M = Matrix(m_, ncols);
    for (std::size_t i = 0; i < ncols; ++i) consecutive_column(i, p.M.col_ptr(i));
    if (forced) p.M.push_column(*forced);
    p.b.assign(m_, 0.0);
    ++stats_.lp_solves;
    const FeasibilityResult r = phase1_simplex(p, opt_.simplex);
    if (r.empty()) {
      remember_axis(r.axis);
    } else if (forced) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < ncols; ++i) pairs.emplace_back(order_[i], order_[i + 1]);
      remember_cone(pairs, r.basis);
    }
    return !r.empty();
  }

  void touch(std::pair<std::size_t, std::size_t> pr, std::size_t cap) {
    auto it = std::find(working_.begin(), working_.end(), pr);
    if (it != working_.end()) working_.erase(it);
    working_.push_front(pr);
    while (working_.size() > cap) working_.pop_back();
  }

  void remember_axis(std::vector<double> axis) {
    axes_.push_front(std::move(axis));
    while (axes_.size() > opt_.axis_cache) axes_.pop_back();
  }

  // Basic difference columns of a rejecting LP, when they are m independent
  // columns, generate a full-dimensional cone inside cone(C).
  void remember_cone(const std::vector<std::pair<std::size_t, std::size_t>>& cols,
                     const std::vector<std::size_t>& basis) {
    Cone cone;
    for (std::size_t j : basis)
      if (j < cols.size()) cone.gens.push_back(cols[j]);
    if (cone.gens.size() != m_) return;
    std::vector<double> B(m_ * m_), col(m_);
    for (std::size_t c = 0; c < m_; ++c) {
      pair_column(cone.gens[c].first, cone.gens[c].second, col.data());
      for (std::size_t r = 0; r < m_; ++r) B[r * m_ + c] = col[r];
    }
    if (!detail::invert_dense(B, m_)) return;
    cone.inv = std::move(B);
    cones_.push_front(std::move(cone));
    while (cones_.size() > opt_.cone_cache) cones_.pop_back();
  }

  // -g = B z with z >= 0 means 0 is in conv(C, g).
  bool in_cached_cone(const std::vector<double>& g) {
    for (auto it = cones_.begin(); it != cones_.end(); ++it) {
      bool inside = true;
      for (std::size_t i = 0; i < m_ && inside; ++i) {
        const double z = -dot(it->inv.data() + i * m_, g.data());
        inside = z >= 0.0;
      }
      if (inside) {
        if (it != cones_.begin()) std::rotate(cones_.begin(), it, std::next(it));
        return true;
      }
    }
    return false;
  }

  bool separates_all(const std::vector<double>& a) const {
    std::vector<double> col(m_);
    for (std::size_t i = 0; i + 1 < order_.size(); ++i) {
      consecutive_column(i, col.data());
      if (!(dot(a.data(), col.data()) > opt_.simplex.tol)) return false;
    }
    return true;
  }

  void consecutive_column(std::size_t i, double* out) const {
    pair_column(order_[i], order_[i + 1], out);
  }

  void pair_column(std::size_t lo, std::size_t hi, double* out) const {
    const double* a = feat(lo);
    const double* b = feat(hi);
    for (std::size_t f = 0; f < m_; ++f) out[f] = b[f] - a[f];
  }

  double dot(const double* a, const double* b) const {
    double s = 0.0;
    for (std::size_t f = 0; f < m_; ++f) s += a[f] * b[f];
    return s;
  }

  const double* feat(std::size_t i) const { return feats_.data() + i * m_; }

  void append_features(const Point& x) {
    feats_.resize(feats_.size() + m_);
    phi_->map_into(x.coords(), std::span<double>(feats_.data() + feats_.size() - m_, m_));
  }

  void rebuild_features() {
    axes_.clear();
    working_.clear();
    cones_.clear();
    feats_.clear();
    if (!structure_.uses_features()) {
      phi_.reset();
      m_ = 0;
      return;
    }
    phi_.emplace(structure_.feature_kind(), structure_.degree, domain_.dim(), domain_);
    m_ = phi_->output_dim();
    feats_.reserve(sample_.size() * m_);
    for (const auto& e : sample_.evaluations()) append_features(e.x);
  }

  RankingStructure structure_;
  BoxDomain domain_;
  ModelOptions opt_;
  Sample sample_;                  // values are the distinct ranking keys
  std::vector<std::size_t> order_; // sample indices by increasing key
  std::optional<FeatureMap> phi_;
  std::size_t m_ = 0;
  std::vector<double> feats_;      // row i = Phi(x_i), length m_
  std::deque<std::vector<double>> axes_;
  std::deque<std::pair<std::size_t, std::size_t>> working_;
  struct Cone {
    std::vector<std::pair<std::size_t, std::size_t>> gens;
    std::vector<double> inv;  // row-major inverse of the generator matrix
  };
  std::deque<Cone> cones_;
  std::optional<bool> consistent_;
  ModelStats stats_;
};

}  // namespace rankopt
