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

#include <gtest/gtest.h>

#include <random>

#include "rankopt/feasibility.hpp"

using namespace rankopt;

namespace {

OrderedSample ordered(const std::vector<Point>& pts, const std::vector<double>& fs) {
  return reorder_strict(Sample(pts, fs));
}

OrderedSample line(const std::vector<double>& xs, const std::vector<double>& fs) {
  std::vector<Point> pts;
  for (double x : xs) pts.push_back(Point{x});
  return ordered(pts, fs);
}

OrderedSample random_sample(std::mt19937_64& gen, std::size_t d, std::size_t t) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Point> pts;
  std::vector<double> fs;
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<double> x(d);
    for (auto& v : x) v = u(gen);
    pts.emplace_back(x);
    fs.push_back(u(gen));
  }
  return ordered(pts, fs);
}

}  // namespace

TEST(RankingStructure, ParseAndPrint) {
  for (const char* s : {"poly:3", "sin:2", "convex1d:4", "convexdeg1", "full"})
    EXPECT_EQ(RankingStructure::parse(s).to_string(), s);
  EXPECT_THROW(RankingStructure::parse("cubic:2"), UnknownName);
  EXPECT_THROW(RankingStructure::parse("poly"), UnknownName);
  EXPECT_THROW(RankingStructure::parse("poly:x"), InvalidParameter);
  EXPECT_THROW(RankingStructure::parse("poly:0"), InvalidParameter);
  EXPECT_THROW(RankingStructure::parse("poly:2x"), InvalidParameter);
}

TEST(PolynomialConsistency, MonotoneData) {
  const auto r = polynomial_consistency(line({0, 0.3, 0.9}, {1, 2, 3}), 1);
  EXPECT_TRUE(r.consistent);
  ASSERT_EQ(r.axis.size(), 1u);
  EXPECT_GT(r.axis[0], 0.0);
}

TEST(PolynomialConsistency, PeakNeedsDegreeTwo) {
  const auto s = line({-1, 1, 0}, {0, 0.5, 1});
  EXPECT_FALSE(polynomial_consistency(s, 1).consistent);
  const auto r = polynomial_consistency(s, 2);
  ASSERT_TRUE(r.consistent);
  // the axis is a perfect scorer: h = <omega, (x, x^2)>
  const FeatureMap phi(FeatureKind::polynomial, 2, 1);
  double prev = -1e300;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto f = phi(s.point(i));
    const double h = r.axis[0] * f[0] + r.axis[1] * f[1];
    EXPECT_GT(h, prev);
    prev = h;
  }
}

TEST(PolynomialConsistency, TwoPointsAlwaysConsistent) {
  std::mt19937_64 gen(1);
  for (int i = 0; i < 100; ++i)
    for (int k = 1; k <= 4; ++k) EXPECT_TRUE(polynomial_consistency(random_sample(gen, 3, 2), k).consistent);
}

TEST(PolynomialConsistency, DuplicatePointsNeverConsistent) {
  const auto s = ordered({Point{0.2, 0.1}, Point{0.2, 0.1}, Point{0.5, 0.0}}, {1, 2, 3});
  for (int k = 1; k <= 5; ++k) EXPECT_FALSE(polynomial_consistency(s, k).consistent);
}

TEST(PolynomialConsistency, MonotoneInDegree) {
  std::mt19937_64 gen(2);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_sample(gen, 1 + trial % 3, 3 + gen() % 12);
    for (auto kind : {FeatureKind::polynomial, FeatureKind::sinusoidal}) {
      bool prev = false;
      for (int k = 1; k <= 5; ++k) {
        const bool c = polynomial_consistency(s, k, kind).consistent;
        if (prev) {
          EXPECT_TRUE(c) << trial << " k=" << k;
        }
        prev = c;
      }
    }
  }
}

TEST(PolynomialConsistency, AxisSeparatesEveryConsecutiveDifference) {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_sample(gen, 2, 3 + gen() % 8);
    const auto r = polynomial_consistency(s, 3);
    if (!r.consistent) continue;
    const FeatureMap phi(FeatureKind::polynomial, 3, 2);
    const Matrix M = consecutive_feature_differences(s, phi);
    for (std::size_t j = 0; j < M.cols(); ++j) {
      double dot = 0.0;
      for (std::size_t i = 0; i < M.rows(); ++i) dot += r.axis[i] * M(i, j);
      EXPECT_GT(dot, 1e-9);
    }
  }
}

TEST(Convex1D, Examples) {
  EXPECT_TRUE(convex1d_consistency(line({0, 1, 2, 3}, {1, 2, 3, 4}), 1));
  EXPECT_FALSE(convex1d_consistency(line({0, 1, 2}, {1, 0, 1.5}), 1));
  EXPECT_TRUE(convex1d_consistency(line({0, 1, 2}, {1, 0, 1.5}), 2));
  EXPECT_FALSE(convex1d_consistency(line({0, 0, 2}, {1, 2, 3}), 3));
  EXPECT_THROW(convex1d_consistency(ordered({Point{0.0, 1.0}, Point{1.0, 0.0}}, {1, 2}), 1),
               UnsupportedDimension);
  EXPECT_THROW(convex1d_consistency(line({0, 1}, {1, 2}), 0), InvalidParameter);
}

TEST(Convex1D, MatchesBruteForceRunCount) {
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t t = 2 + gen() % 9;
    const auto s = random_sample(gen, 1, t);
    int worst = 0;
    for (std::size_t lvl = 0; lvl < t; ++lvl) {
      // points ranked lvl..t-1, runs in spatial order
      std::vector<std::pair<double, bool>> all;
      for (std::size_t i = 0; i < t; ++i) all.emplace_back(s.point(i)[0], i >= lvl);
      std::sort(all.begin(), all.end());
      int runs = 0;
      for (std::size_t i = 0; i < t; ++i)
        if (all[i].second && (i == 0 || !all[i - 1].second)) ++runs;
      worst = std::max(worst, runs);
    }
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(convex1d_consistency(s, k), worst <= k);
  }
}

TEST(ConvexDeg1, Examples) {
  EXPECT_TRUE(convex_deg1_consistency(
      ordered({Point{0.0, 0.0}, Point{1.0, 1.0}, Point{2.0, 2.0}, Point{3.0, 3.0}}, {1, 2, 3, 4})));
  EXPECT_FALSE(convex_deg1_consistency(ordered({Point{0.0, 0.0}, Point{2.0, 0.0}, Point{1.0, 0.0}}, {1, 2, 0})));
  EXPECT_TRUE(convex_deg1_consistency(ordered({Point{0.0, 0.0}, Point{2.0, 0.0}}, {1, 2})));
}

TEST(ConvexDeg1, AgreesWithConvex1DAtDegreeOne) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_sample(gen, 1, 2 + gen() % 8);
    EXPECT_EQ(convex_deg1_consistency(s), convex1d_consistency(s, 1));
  }
}

TEST(FullConsistency, DistinctPoints) {
  EXPECT_TRUE(full_consistency(line({0, 1, 2}, {3, 1, 2})));
  EXPECT_FALSE(full_consistency(line({0, 1, 0}, {3, 1, 2})));
}

TEST(IsConsistent, Dispatch) {
  const auto s = line({-1, 1, 0}, {0, 0.5, 1});
  EXPECT_FALSE(is_consistent(RankingStructure::polynomial(1), s));
  EXPECT_TRUE(is_consistent(RankingStructure::polynomial(2), s));
  EXPECT_TRUE(is_consistent(RankingStructure::convex1d(1), s));
  EXPECT_TRUE(is_consistent(RankingStructure::convex_deg1(), s));
  EXPECT_TRUE(is_consistent(RankingStructure::full(), s));
}
