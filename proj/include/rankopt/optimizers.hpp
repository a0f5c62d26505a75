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
 * \file rankopt/optimizers.hpp
 *
 * \brief RankOpt, AdaRankOpt, pure random search and pure adaptive search
 *  over one shared budget loop and trace format.
 *
 * The budget counts objective evaluations. Candidate tests inside the
 * rejection loops are free but bounded by rejection_cap.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rankopt/domain.hpp"
#include "rankopt/error.hpp"
#include "rankopt/feasibility.hpp"
#include "rankopt/model.hpp"
#include "rankopt/ranking.hpp"

namespace rankopt {

struct Objective {
  std::string name;
  BoxDomain domain;
  std::function<double(const Point&)> eval;
  std::optional<double> known_max;
  std::vector<Point> known_argmax;

  std::size_t dim() const noexcept { return domain.dim(); }
  double operator()(const Point& x) const { return eval(x); }
};

enum class Algorithm { prs, pas, rankopt, adarankopt };

inline std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::prs: return "prs";
    case Algorithm::pas: return "pas";
    case Algorithm::rankopt: return "rankopt";
    case Algorithm::adarankopt: return "adarankopt";
  }
  return "?";
}

inline Algorithm parse_algorithm(const std::string& s) {
  if (s == "prs") return Algorithm::prs;
  if (s == "pas") return Algorithm::pas;
  if (s == "rankopt") return Algorithm::rankopt;
  if (s == "adarankopt") return Algorithm::adarankopt;
  throw UnknownName("unknown algorithm '" + s + "'");
}

struct OptimizerConfig {
  Algorithm algorithm = Algorithm::adarankopt;
  /// rankopt: the fixed structure. adarankopt: the kind of the nested
  /// sequence (degree ignored, the sequence starts at 1).
  RankingStructure structure = RankingStructure::polynomial(1);
  int k_max = 6;
  double p = 0.1;
  std::size_t budget = 1000;
  std::size_t rejection_cap = 10000;
  double ghost_offset = 1.0;
  bool ghost_equality_branch = false;
  /// The run ends as soon as the best value reaches this level. The
  /// evaluated prefix is identical to that of the full-budget run.
  std::optional<double> stop_at;
  SimplexOptions simplex;

  void validate(std::size_t dim) const {
    if (budget < 1) throw InvalidParameter("budget must be >= 1");
    if (rejection_cap < 1) throw InvalidParameter("rejection_cap must be >= 1");
    if (!(ghost_offset > 0.0) || !std::isfinite(ghost_offset))
      throw InvalidParameter("ghost offset must be a positive number");
    if (algorithm == Algorithm::adarankopt) {
      if (!(p > 0.0 && p < 1.0)) throw InvalidParameter("p must lie in (0, 1)");
      if (k_max < 1) throw InvalidParameter("k_max must be >= 1");
      if (structure.kind == RankingStructure::Kind::convex_deg1 ||
          structure.kind == RankingStructure::Kind::full)
        throw InvalidParameter("adarankopt needs a polynomial, sinusoidal or convex1d sequence");
      if (structure.uses_features() && k_max > kMaxFeatureDegree)
        throw InvalidParameter("k_max exceeds the largest supported feature degree");
    }
    if (algorithm == Algorithm::rankopt && structure.uses_features() &&
        (structure.degree < 1 || structure.degree > kMaxFeatureDegree))
      throw InvalidParameter("structure degree out of range");
    if ((algorithm == Algorithm::rankopt || algorithm == Algorithm::adarankopt) &&
        structure.kind == RankingStructure::Kind::convex1d && dim != 1)
      throw UnsupportedDimension("convex1d structures require d = 1");
  }
};

enum class Phase { init, explore, exploit, explore_fallback };

inline std::string to_string(Phase p) {
  switch (p) {
    case Phase::init: return "init";
    case Phase::explore: return "explore";
    case Phase::exploit: return "exploit";
    case Phase::explore_fallback: return "explore_fallback";
  }
  return "?";
}

struct EvaluationRecord {
  Point x;
  double value;
  Phase phase;
};

/// One optimizer run. All per-step vectors have one entry per evaluation.
struct RunRecord {
  std::vector<EvaluationRecord> evaluations;
  std::vector<int> khat_trace;                 ///< adarankopt only
  std::vector<std::size_t> rejection_counts;   ///< rejected candidates before each evaluation
  std::vector<double> best_trace;
  bool truncated = false;      ///< PAS exhausted its rejection cap
  bool clamped = false;        ///< AdaRankOpt hit k_max with an inconsistent sample
  bool stopped_early = false;  ///< stop_at reached before the budget

  std::size_t size() const noexcept { return evaluations.size(); }
  double best() const { return best_trace.empty() ? -std::numeric_limits<double>::infinity() : best_trace.back(); }
  std::vector<double> values() const {
    std::vector<double> v;
    v.reserve(evaluations.size());
    for (const auto& e : evaluations) v.push_back(e.value);
    return v;
  }
};

namespace detail {

/// Shared bookkeeping: true values go to the record, distinct ranking keys
/// (exact duplicates nudged down by one ulp) to the model.
class Recorder {
 public:
  Recorder(const Objective& obj, const OptimizerConfig& cfg) : obj_(obj), cfg_(cfg) {
    rec_.evaluations.reserve(cfg.budget);
  }

  double evaluate(Point x, Phase phase, std::size_t rejections) {
    const double v = obj_(x);
    if (!std::isfinite(v)) throw NumericalFailure("objective returned a non-finite value");
    rec_.best_trace.push_back(rec_.best_trace.empty() ? v : std::max(v, rec_.best_trace.back()));
    rec_.rejection_counts.push_back(rejections);
    rec_.evaluations.push_back({std::move(x), v, phase});
    return v;
  }

  double key_for(double v) {
    while (keys_.contains(v)) v = std::nextafter(v, -std::numeric_limits<double>::infinity());
    keys_.insert(v);
    return v;
  }

  /// Whether the loop must stop (budget spent or stop_at reached).
  bool done() {
    if (rec_.evaluations.size() >= cfg_.budget) return true;
    if (cfg_.stop_at && rec_.best_trace.back() >= *cfg_.stop_at) {
      rec_.stopped_early = true;
      return true;
    }
    return false;
  }

  RunRecord& record() { return rec_; }

 private:
  const Objective& obj_;
  const OptimizerConfig& cfg_;
  RunRecord rec_;
  std::unordered_set<double> keys_;
};

inline ModelOptions model_options(const OptimizerConfig& cfg) {
  ModelOptions mo;
  mo.ghost_offset = cfg.ghost_offset;
  mo.ghost_equality_branch = cfg.ghost_equality_branch;
  mo.simplex = cfg.simplex;
  return mo;
}

// One exploitation step: rejection sampling under the ghost test, with a
// uniform fallback when the cap runs out. If the model is already
// inconsistent nothing can be accepted, so the fallback is taken directly.
inline void exploit_step(const Objective& obj, RankingModel& model, const OptimizerConfig& cfg,
                         RngStream& rng, Recorder& r) {
  if (model.consistent()) {
    for (std::size_t tries = 0; tries < cfg.rejection_cap; ++tries) {
      Point x = sample_uniform(obj.domain, rng);
      if (model.admits(x)) {
        const double v = r.evaluate(std::move(x), Phase::exploit, tries);
        model.add(r.record().evaluations.back().x, r.key_for(v));
        return;
      }
    }
  }
  const std::size_t rejected = model.consistent() ? cfg.rejection_cap : 0;
  const double v = r.evaluate(sample_uniform(obj.domain, rng), Phase::explore_fallback, rejected);
  model.add(r.record().evaluations.back().x, r.key_for(v));
}

}  // namespace detail

/// n i.i.d. uniform evaluations.
inline RunRecord run_prs(const Objective& obj, const OptimizerConfig& cfg, RngStream& rng) {
  cfg.validate(obj.dim());
  detail::Recorder r(obj, cfg);
  r.evaluate(sample_uniform(obj.domain, rng), Phase::init, 0);
  while (!r.done()) r.evaluate(sample_uniform(obj.domain, rng), Phase::explore, 0);
  return std::move(r.record());
}

/**
 * \brief Pure adaptive search by rejection from the uniform distribution.
 *
 * Each next point is uniform on {x : f(x) >= f(current)}. Rejected draws are
 * evaluated (to decide membership) but do not count toward the budget. When
 * rejection_cap draws fail, the run stops with truncated set.
 */
inline RunRecord run_pas(const Objective& obj, const OptimizerConfig& cfg, RngStream& rng) {
  cfg.validate(obj.dim());
  detail::Recorder r(obj, cfg);
  double level = r.evaluate(sample_uniform(obj.domain, rng), Phase::init, 0);
  while (!r.done()) {
    bool accepted = false;
    for (std::size_t tries = 0; tries < cfg.rejection_cap; ++tries) {
      Point x = sample_uniform(obj.domain, rng);
      const double v = obj(x);
      if (v >= level) {
        level = r.evaluate(std::move(x), Phase::exploit, tries);
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      r.record().truncated = true;
      break;
    }
  }
  return std::move(r.record());
}

/// RankOpt with a fixed ranking structure.
inline RunRecord run_rankopt(const Objective& obj, const OptimizerConfig& cfg, RngStream& rng) {
  cfg.validate(obj.dim());
  detail::Recorder r(obj, cfg);
  RankingModel model(cfg.structure, obj.domain, detail::model_options(cfg));
  const double v0 = r.evaluate(sample_uniform(obj.domain, rng), Phase::init, 0);
  model.add(r.record().evaluations.back().x, r.key_for(v0));
  while (!r.done()) detail::exploit_step(obj, model, cfg, rng, r);
  return std::move(r.record());
}

/**
 * \brief AdaRankOpt over the nested sequence of cfg.structure's kind.
 *
 * Each step explores with probability p and otherwise exploits at the
 * current index; after every evaluation the index grows while the sample is
 * inconsistent, up to k_max.
 */
inline RunRecord run_adarankopt(const Objective& obj, const OptimizerConfig& cfg, RngStream& rng) {
  cfg.validate(obj.dim());
  detail::Recorder r(obj, cfg);
  RankingStructure s = cfg.structure;
  s.degree = 1;
  RankingModel model(s, obj.domain, detail::model_options(cfg));
  int khat = 1;

  auto select = [&] {
    while (!model.consistent() && khat < cfg.k_max) model.set_degree(++khat);
    if (!model.consistent()) r.record().clamped = true;
    r.record().khat_trace.push_back(khat);
  };

  const double v0 = r.evaluate(sample_uniform(obj.domain, rng), Phase::init, 0);
  model.add(r.record().evaluations.back().x, r.key_for(v0));
  select();
  while (!r.done()) {
    if (sample_bernoulli(cfg.p, rng)) {
      const double v = r.evaluate(sample_uniform(obj.domain, rng), Phase::explore, 0);
      model.add(r.record().evaluations.back().x, r.key_for(v));
    } else {
      detail::exploit_step(obj, model, cfg, rng, r);
    }
    select();
  }
  return std::move(r.record());
}

/// Dispatches on cfg.algorithm.
inline RunRecord optimize(const Objective& obj, const OptimizerConfig& cfg, RngStream& rng) {
  switch (cfg.algorithm) {
    case Algorithm::prs: return run_prs(obj, cfg, rng);
    case Algorithm::pas: return run_pas(obj, cfg, rng);
    case Algorithm::rankopt: return run_rankopt(obj, cfg, rng);
    case Algorithm::adarankopt: return run_adarankopt(obj, cfg, rng);
  }
  throw InvalidParameter("unknown algorithm");
}

}  // namespace rankopt
