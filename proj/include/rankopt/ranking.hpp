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
 * \file rankopt/ranking.hpp
 *
 * \brief Induced ranking rules, the pairwise 0-1 ranking loss and sample
 *  bookkeeping.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "rankopt/domain.hpp"
#include "rankopt/error.hpp"

namespace rankopt {

enum class RankVerdict : int { below = -1, tie = 0, above = 1 };

constexpr RankVerdict operator-(RankVerdict v) noexcept {
  return static_cast<RankVerdict>(-static_cast<int>(v));
}

/// Sign of f_x - f_x2.
constexpr RankVerdict induced_rank(double f_x, double f_x2) noexcept {
  if (f_x > f_x2) return RankVerdict::above;
  if (f_x < f_x2) return RankVerdict::below;
  return RankVerdict::tie;
}

struct Evaluation {
  Point x;
  double value;
};

/**
 * \brief Evaluations in arrival order with the running best index.
 *
 * The best index is the earliest evaluation attaining the maximum value.
 */
class Sample {
 public:
  Sample() = default;

  Sample(std::vector<Point> points, const std::vector<double>& values) {
    if (points.size() != values.size()) throw InvalidParameter("Sample: size mismatch");
    evals_.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) append(std::move(points[i]), values[i]);
  }

  void append(Point x, double value) {
    if (!std::isfinite(value)) throw InvalidParameter("Sample: non-finite value");
    if (!evals_.empty() && x.dim() != evals_.front().x.dim())
      throw InvalidParameter("Sample: point dimension mismatch");
    evals_.push_back({std::move(x), value});
    if (evals_.size() == 1 || value > evals_[best_].value) best_ = evals_.size() - 1;
  }

  std::size_t size() const noexcept { return evals_.size(); }
  bool empty() const noexcept { return evals_.empty(); }
  const Evaluation& operator[](std::size_t i) const { return evals_[i]; }
  const std::vector<Evaluation>& evaluations() const noexcept { return evals_; }

  std::size_t best_index() const {
    if (evals_.empty()) throw InsufficientSample("Sample: no evaluation yet");
    return best_;
  }
  const Evaluation& best() const { return evals_[best_index()]; }

 private:
  std::vector<Evaluation> evals_;
  std::size_t best_ = 0;
};

/**
 * \brief A sample whose values are pairwise distinct, viewed in strictly
 *  increasing value order.
 *
 * point(0) is the worst evaluation and point(size()-1) the best.
 */
class OrderedSample {
 public:
  std::size_t size() const noexcept { return order_.size(); }
  std::size_t dim() const noexcept { return points_.empty() ? 0 : points_.front().dim(); }

  /// Original sample index of the i-th smallest value.
  std::size_t original_index(std::size_t i) const { return order_[i]; }
  const std::vector<std::size_t>& order() const noexcept { return order_; }

  const Point& point(std::size_t i) const { return points_[i]; }
  double value(std::size_t i) const { return values_[i]; }
  const std::vector<Point>& points() const noexcept { return points_; }
  const std::vector<double>& values() const noexcept { return values_; }

  friend OrderedSample reorder_strict(const Sample& sample);

 private:
  std::vector<std::size_t> order_;
  std::vector<Point> points_;
  std::vector<double> values_;
};

/// Strictly increasing reordering; throws TieError on duplicate values.
inline OrderedSample reorder_strict(const Sample& sample) {
  OrderedSample out;
  out.order_.resize(sample.size());
  std::iota(out.order_.begin(), out.order_.end(), std::size_t{0});
  std::stable_sort(out.order_.begin(), out.order_.end(), [&](std::size_t a, std::size_t b) {
    return sample[a].value < sample[b].value;
  });
  for (std::size_t i = 1; i < out.order_.size(); ++i)
    if (sample[out.order_[i - 1]].value == sample[out.order_[i]].value)
      throw TieError("reorder_strict: duplicate evaluation values");
  out.points_.reserve(sample.size());
  out.values_.reserve(sample.size());
  for (std::size_t idx : out.order_) {
    out.points_.push_back(sample[idx].x);
    out.values_.push_back(sample[idx].value);
  }
  return out;
}

/// A ranking rule: any callable (x, x') -> RankVerdict.
template <class Rule>
concept RankingRule = std::invocable<const Rule&, const Point&, const Point&> &&
    std::convertible_to<std::invoke_result_t<const Rule&, const Point&, const Point&>, RankVerdict>;

/**
 * \brief Fraction of sample pairs on which \p rule disagrees with the ranking
 *  induced by the observed values.
 *
 * A zero verdict counts as a disagreement with a strict order and vice versa.
 */
template <RankingRule Rule>
double empirical_ranking_loss(const Rule& rule, const Sample& sample) {
  const std::size_t t = sample.size();
  if (t < 2) throw InsufficientSample("empirical_ranking_loss: need at least 2 evaluations");
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) {
      const RankVerdict truth = induced_rank(sample[i].value, sample[j].value);
      if (static_cast<RankVerdict>(rule(sample[i].x, sample[j].x)) != truth) ++mismatches;
    }
  return 2.0 * static_cast<double>(mismatches) / (static_cast<double>(t) * static_cast<double>(t - 1));
}

/// The rule induced by a scoring function h: (x, x') -> sgn(h(x) - h(x')).
template <class Score>
auto induced_rule(Score h) {
  return [h = std::move(h)](const Point& a, const Point& b) { return induced_rank(h(a), h(b)); };
}

}  // namespace rankopt
