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

// Small random integer feasibility instances: m <= 4 rows, t <= 6 columns.

#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "rankopt/simplex.hpp"

namespace testing_support {

struct IntInstance {
  std::vector<std::vector<long>> M;  // m rows of t entries
  std::vector<long> b;

  rankopt::FeasibilityProblem to_problem() const {
    const std::size_t m = M.size(), t = M[0].size();
    rankopt::FeasibilityProblem p{rankopt::Matrix(m, t), std::vector<double>(m)};
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < t; ++j) p.M(i, j) = static_cast<double>(M[i][j]);
      p.b[i] = static_cast<double>(b[i]);
    }
    return p;
  }
};

// Half the instances have b = 0 (the consistency form), the rest a random b.
// Entries come from [-range, range]; small ranges make degenerate and
// boundary cases (zero on a hull facet, repeated columns) frequent.
inline std::vector<IntInstance> random_instances(std::size_t count, unsigned long long seed) {
  std::mt19937_64 gen(seed);
  std::vector<IntInstance> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t m = 1 + gen() % 4, t = 1 + gen() % 6;
    const long range = (k % 3 == 0) ? 1 : 3;
    std::uniform_int_distribution<long> ent(-range, range);
    IntInstance inst;
    inst.M.assign(m, std::vector<long>(t));
    for (auto& row : inst.M)
      for (auto& v : row) v = ent(gen);
    inst.b.assign(m, 0);
    if (k % 2 == 1)
      for (auto& v : inst.b) v = ent(gen);
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace testing_support
