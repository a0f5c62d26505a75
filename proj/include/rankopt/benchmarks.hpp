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
 * \file rankopt/benchmarks.hpp
 *
 * \brief Synthetic test functions, all in maximization form.
 *
 * Maxima listed here were computed to 20 digits in multiprecision and are
 * only given where they are known in closed form or to full precision.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "rankopt/domain.hpp"
#include "rankopt/error.hpp"
#include "rankopt/optimizers.hpp"

namespace rankopt {

struct BenchmarkSpec {
  std::string name;
  BoxDomain domain;
  double (*formula)(const Point&);
  std::optional<double> known_max;
  std::vector<Point> known_argmax;
  std::optional<int> local_max_count;

  std::size_t dim() const noexcept { return domain.dim(); }
  double operator()(const Point& x) const { return formula(x); }

  Objective objective() const { return {name, domain, formula, known_max, known_argmax}; }
};

namespace bench {

using std::numbers::pi;

inline double branin_hoo(const Point& x) {
  // classical Branin, negated so its three minima become maxima
  const double a = x[1] - 5.1 * x[0] * x[0] / (4.0 * pi * pi) + 5.0 * x[0] / pi - 6.0;
  return -(10.0 * (1.0 - 1.0 / (8.0 * pi)) * std::cos(x[0]) + 10.0 + a * a);
}

inline double himmelblau(const Point& x) {
  const double a = x[0] * x[0] + x[1] - 11.0;
  const double b = x[0] + x[1] * x[1] - 7.0;
  return -a * a - b * b;
}

inline double styblinski(const Point& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    const double v = x[i], v2 = v * v;
    s += 8.0 * v2 - 0.5 * v2 * v2 - 2.5 * v;
  }
  return s;
}

inline double holder_table(const Point& x) {
  const double r = std::sqrt(x[0] * x[0] + x[1] * x[1]);
  return std::abs(std::sin(x[0])) * std::abs(std::cos(x[1])) * std::exp(std::abs(1.0 - r / pi));
}

inline double levy13(const Point& x) {
  const double s3 = std::sin(3.0 * pi * x[0]);
  const double a = std::sin(3.0 * pi * x[1]);
  const double b = std::sin(2.0 * pi * x[1]);
  return -(x[0] - 1.0) * (x[0] - 1.0) * (1.0 + a * a) - s3 * s3 * s3 - (x[1] - 1.0) * (1.0 + b * b);
}

inline double rosenbrock3(const Point& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < 3; ++i) s -= (x[i] - 1.0) * (x[i] - 1.0);
  for (std::size_t i = 0; i + 1 < 3; ++i) {
    const double a = x[i + 1] + x[i] * x[i];
    s -= 100.0 * a * a;
  }
  return s;
}

inline double mishra2(const Point& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < 5; ++i) s += 0.5 * (x[i] + x[i + 1]);
  return -std::pow(6.0 - s, 5.0 - s);
}

inline double linear_slope7(const Point& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < 7; ++i) s += std::pow(10.0, static_cast<double>(i) / 6.0) * (x[i] - 5.0);
  return s;
}

inline double deb1(const Point& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < 5; ++i) {
    const double v = std::sin(5.0 * pi * x[i]);
    const double v2 = v * v;
    s += v2 * v2 * v2;
  }
  return s / 5.0;
}

inline double griewank4(const Point& x) {
  double s = 0.0, p = 1.0;
  for (std::size_t i = 0; i < 4; ++i) {
    s += x[i] * x[i] / 4000.0;
    p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return -1.0 - s + p;
}

}  // namespace bench

inline const std::vector<std::string>& benchmark_names() {
  static const std::vector<std::string> names{"branin_hoo", "himmelblau",   "styblinski", "holder_table",
                                              "levy13",     "rosenbrock3",  "mishra2",    "linear_slope7",
                                              "deb1",       "griewank4"};
  return names;
}

/// Throws UnknownName for names outside benchmark_names().
inline BenchmarkSpec get_benchmark(const std::string& name) {
  const auto cube = [](std::size_t d, double lo, double hi) { return BoxDomain::cube(d, lo, hi); };
  if (name == "branin_hoo") {
    return {name, BoxDomain(Point{-5.0, 0.0}, Point{10.0, 15.0}), bench::branin_hoo,
            -5.0 / (4.0 * std::numbers::pi),
            {Point{-std::numbers::pi, 12.275}, Point{std::numbers::pi, 2.275},
             Point{3.0 * std::numbers::pi, 2.475}},
            3};
  }
  if (name == "himmelblau") {
    return {name, cube(2, -5.0, 5.0), bench::himmelblau, 0.0,
            {Point{3.0, 2.0}, Point{-2.8051180869527448531, 3.1313125182505729658},
             Point{-3.7793102533777468919, -3.2831859912861694123},
             Point{3.5844283403304917449, -1.8481265269644035535}},
            4};
  }
  if (name == "styblinski") {
    const double a = -2.9035340277711770951;
    return {name, cube(2, -5.0, 5.0), bench::styblinski, 78.332331407542830928, {Point{a, a}}, 4};
  }
  if (name == "holder_table") {
    const double a = 8.0550234757365634198, b = 9.66459001924127289;
    return {name, cube(2, -10.0, 10.0), bench::holder_table, 19.208502567886731832,
            {Point{a, b}, Point{-a, b}, Point{a, -b}, Point{-a, -b}}, 36};
  }
  if (name == "levy13") return {name, cube(2, -10.0, 10.0), bench::levy13, std::nullopt, {}, std::nullopt};
  if (name == "rosenbrock3")
    return {name, cube(3, -2.048, 2.048), bench::rosenbrock3, std::nullopt, {}, std::nullopt};
  if (name == "mishra2")
    return {name, cube(6, 0.0, 1.0), bench::mishra2, -1.0, {Point(std::vector<double>(6, 1.0))}, std::nullopt};
  if (name == "linear_slope7")
    return {name, cube(7, -5.0, 5.0), bench::linear_slope7, 0.0, {Point(std::vector<double>(7, 5.0))}, 1};
  if (name == "deb1")
    return {name, cube(5, -5.0, 5.0), bench::deb1, 1.0, {Point(std::vector<double>(5, 0.1))}, 36};
  if (name == "griewank4")
    return {name, cube(4, -300.0, 600.0), bench::griewank4, 0.0, {Point(std::vector<double>(4, 0.0))},
            std::nullopt};
  throw UnknownName("unknown benchmark '" + name + "'");
}

}  // namespace rankopt
