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

#include "rankopt/model.hpp"

using namespace rankopt;

namespace {

double sphere(const Point& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) s -= x[i] * x[i];
  return s;
}

double bumpy(const Point& x) {
  return std::sin(3.0 * x[0]) * std::cos(2.0 * x[1]) + 0.3 * x[0] * x[1];
}

}  // namespace

TEST(RankingModel, ConsistencyTracksTheReferenceTest) {
  const auto box = BoxDomain::cube(2, -1.0, 1.0);
  RngStream rng(1);
  for (int k = 1; k <= 4; ++k) {
    RankingModel model(RankingStructure::polynomial(k), box);
    for (int i = 0; i < 60; ++i) {
      const Point x = sample_uniform(box, rng);
      model.add(x, bumpy(x));
      ConsistencyOptions co;
      co.rescale = box;
      EXPECT_EQ(model.consistent(),
                is_consistent(RankingStructure::polynomial(k), reorder_strict(model.sample()), co))
          << "k=" << k << " i=" << i;
    }
  }
}

TEST(RankingModel, AdmitsAgreesWithAugmentedConsistency) {
  const auto box = BoxDomain::cube(2, -1.0, 1.0);
  for (auto structure : {RankingStructure::polynomial(1), RankingStructure::polynomial(2),
                         RankingStructure::polynomial(3), RankingStructure::sinusoidal(2),
                         RankingStructure::convex_deg1(), RankingStructure::full()}) {
    RngStream rng(2);
    RankingModel model(structure, box);
    std::size_t mismatches = 0, accepted = 0, tested = 0;
    for (int i = 0; i < 25; ++i) {
      const Point x = sample_uniform(box, rng);
      model.add(x, sphere(x) + 0.01 * bumpy(x));
      if (!model.consistent()) break;
      for (int c = 0; c < 40; ++c) {
        const Point cand = sample_uniform(box, rng);
        const bool a = model.admits(cand);
        mismatches += a != model.admits_reference(cand);
        accepted += a;
        ++tested;
      }
    }
    EXPECT_EQ(mismatches, 0u) << structure.to_string();
    EXPECT_GT(tested, 0u);
    if (structure.kind != RankingStructure::Kind::full) {
      EXPECT_LT(accepted, tested) << structure.to_string();
    }
  }
}

TEST(RankingModel, AcceptanceRegionOfLinearRulesOnTheLine) {
  // f(x) = x: once two points are seen, a linear rule must be increasing,
  // so a candidate can reach the best exactly when it lies at or beyond it.
  const BoxDomain box(Point{0.0}, Point{1.0});
  RankingModel model(RankingStructure::polynomial(1), box);
  model.add(Point{0.3}, 0.3);
  model.add(Point{0.6}, 0.6);
  for (int i = 0; i <= 1000; ++i) {
    const double x = i / 1000.0;
    if (x == 0.6) continue;
    EXPECT_EQ(model.admits(Point{x}), x > 0.6) << x;
    EXPECT_EQ(model.admits(Point{x}), model.admits_reference(Point{x})) << x;
  }
}

TEST(RankingModel, QuadraticRegionContainsTheSuperLevelSet) {
  // sphere values: every candidate at least as good as the best is admitted
  const auto box = BoxDomain::cube(2, -1.0, 1.0);
  RngStream rng(3);
  RankingModel model(RankingStructure::polynomial(2), box);
  for (int i = 0; i < 40; ++i) {
    const Point x = sample_uniform(box, rng);
    model.add(x, sphere(x));
  }
  ASSERT_TRUE(model.consistent());
  const double best = model.sample().best().value;
  for (int i = 0; i < 2000; ++i) {
    const Point x = sample_uniform(box, rng);
    if (sphere(x) >= best) {
      EXPECT_TRUE(model.admits(x));
    }
  }
}

TEST(RankingModel, DegreeChangeRebuildsFeatures) {
  const BoxDomain box(Point{-1.0}, Point{1.0});
  RankingModel model(RankingStructure::polynomial(1), box);
  model.add(Point{-1.0}, 0.0);
  model.add(Point{1.0}, 0.5);
  model.add(Point{0.0}, 1.0);
  EXPECT_FALSE(model.consistent());
  EXPECT_FALSE(model.admits(Point{0.1}));
  model.set_degree(2);
  EXPECT_TRUE(model.consistent());
  EXPECT_THROW(model.set_degree(0), InvalidParameter);
}

TEST(RankingModel, Validation) {
  const auto box = BoxDomain::cube(2, 0.0, 1.0);
  EXPECT_THROW(RankingModel(RankingStructure::convex1d(1), box), UnsupportedDimension);
  ModelOptions bad;
  bad.ghost_offset = 0.0;
  EXPECT_THROW(RankingModel(RankingStructure::polynomial(1), box, bad), InvalidParameter);
  RankingModel m(RankingStructure::polynomial(1), box);
  m.add(Point{0.1, 0.1}, 1.0);
  EXPECT_THROW(m.add(Point{0.2, 0.1}, 1.0), TieError);
}

TEST(RankingModel, EqualityBranchOnlyMattersAtTheBestPoint) {
  const auto box = BoxDomain::cube(1, -1.0, 1.0);
  ModelOptions opt;
  opt.ghost_equality_branch = true;
  RankingModel with(RankingStructure::polynomial(2), box, opt);
  RankingModel without(RankingStructure::polynomial(2), box);
  for (double x : {-0.8, 0.9, 0.1, -0.3}) {
    with.add(Point{x}, -x * x);
    without.add(Point{x}, -x * x);
  }
  EXPECT_TRUE(with.admits(Point{0.1}));
  EXPECT_FALSE(without.admits(Point{0.1}));
  RngStream rng(4);
  for (int i = 0; i < 500; ++i) {
    const Point x = sample_uniform(box, rng);
    EXPECT_EQ(with.admits(x), without.admits(x)) << x[0];
  }
}
