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

#include <cmath>
#include <numbers>
#include <random>

#include "rankopt/feasibility.hpp"
#include "rankopt/features.hpp"

using namespace rankopt;

namespace {

// Pascal-triangle binomial, independent of feature_dim's product formula.
std::size_t binom(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> c(n + 1, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c[n][r];
}

Point random_point(std::mt19937_64& gen, std::size_t d) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(d);
  for (auto& v : x) v = u(gen);
  return Point(x);
}

}  // namespace

TEST(FeatureDim, Examples) {
  EXPECT_EQ(feature_dim(2, 2), 5u);
  EXPECT_EQ(feature_dim(1, 1), 1u);
  EXPECT_EQ(feature_dim(3, 2), 9u);
  EXPECT_THROW(feature_dim(0, 1), InvalidParameter);
  EXPECT_THROW(feature_dim(2, 0), InvalidParameter);
}

TEST(FeatureDim, MatchesPascalTriangle) {
  for (std::size_t d = 1; d <= 12; ++d)
    for (int k = 1; k <= 10; ++k) EXPECT_EQ(feature_dim(d, k), binom(d + k, d) - 1) << d << "," << k;
}

TEST(FeatureDim, OverflowIsACapacityError) {
  EXPECT_THROW(feature_dim(1000000, 1000), CapacityError);
}

TEST(MapPolynomial, GradedLexOrder) {
  EXPECT_EQ(map_polynomial(Point{2.0, 3.0}, 2), (std::vector<double>{2, 3, 4, 6, 9}));
  const FeatureMap phi(FeatureKind::polynomial, 2, 2);
  EXPECT_EQ(phi.exponents(),
            (std::vector<std::vector<int>>{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(map_polynomial(Point{2.0, 3.0, 5.0}, 1), (std::vector<double>{2, 3, 5}));
  for (double v : map_polynomial(Point{0.0, 0.0, 0.0}, 4)) EXPECT_EQ(v, 0.0);
}

TEST(MapPolynomial, MonomialsMatchExponents) {
  std::mt19937_64 gen(4);
  for (std::size_t d = 1; d <= 4; ++d)
    for (int k = 1; k <= 5; ++k) {
      const FeatureMap phi(FeatureKind::polynomial, k, d);
      const Point x = random_point(gen, d);
      const auto f = phi(x);
      for (std::size_t j = 0; j < f.size(); ++j) {
        double m = 1.0;
        for (std::size_t i = 0; i < d; ++i) m *= std::pow(x[i], phi.exponents()[j][i]);
        EXPECT_NEAR(f[j], m, 1e-12);
      }
    }
}

TEST(MapPolynomial, DimensionAndNesting) {
  std::mt19937_64 gen(5);
  for (std::size_t d = 1; d <= 7; ++d)
    for (int k = 1; k <= 6; ++k) {
      const Point x = random_point(gen, d);
      const auto fk = map_polynomial(x, k);
      ASSERT_EQ(fk.size(), feature_dim(d, k));
      if (k > 1) {
        const auto prev = map_polynomial(x, k - 1);
        EXPECT_TRUE(std::equal(prev.begin(), prev.end(), fk.begin()));
      }
    }
}

TEST(MapSinusoidal, Examples) {
  EXPECT_EQ(map_sinusoidal(Point{0.0, 0.0}, 1), (std::vector<double>{1, 1}));
  const auto h = map_sinusoidal(Point{0.5, 0.0}, 1);
  EXPECT_DOUBLE_EQ(h[0], -1.0);
  EXPECT_DOUBLE_EQ(h[1], 1.0);
  const auto q = map_sinusoidal(Point{0.25}, 2);
  ASSERT_EQ(q.size(), 2u);
  EXPECT_NEAR(q[0], 0.0, 1e-12);
  EXPECT_NEAR(q[1], 0.0, 1e-12);
}

TEST(FeatureMap, RescaleMapsBoxOntoUnitCube) {
  const BoxDomain box(Point{-300.0, 0.0}, Point{600.0, 2.0});
  const FeatureMap phi(FeatureKind::polynomial, 1, 2, box);
  EXPECT_EQ(phi(Point{-300.0, 2.0}), (std::vector<double>{-1.0, 1.0}));
  EXPECT_EQ(phi(Point{150.0, 1.0}), (std::vector<double>{0.0, 0.0}));
  EXPECT_THROW(FeatureMap(FeatureKind::polynomial, 1, 3, box), InvalidParameter);
  EXPECT_THROW(FeatureMap(FeatureKind::polynomial, 9, 2), InvalidParameter);
  EXPECT_THROW(phi(Point{1.0}), InvalidParameter);
}

TEST(FeatureMap, RescalingPreservesSeparability) {
  // an affine change of coordinates keeps the degree of a polynomial
  std::mt19937_64 gen(6);
  const BoxDomain box(Point{-3.0, 10.0}, Point{5.0, 14.0});
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int agree = 0, total = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Sample s;
    const std::size_t t = 3 + gen() % 10;
    for (std::size_t i = 0; i < t; ++i) {
      const Point x{-3.0 + 8.0 * u(gen), 10.0 + 4.0 * u(gen)};
      s.append(x, u(gen));
    }
    const auto o = reorder_strict(s);
    for (int k = 1; k <= 2; ++k) {
      ConsistencyOptions raw, scaled;
      scaled.rescale = box;
      agree += polynomial_consistency(o, k, FeatureKind::polynomial, raw).consistent ==
               polynomial_consistency(o, k, FeatureKind::polynomial, scaled).consistent;
      ++total;
    }
  }
  EXPECT_EQ(agree, total);
}
