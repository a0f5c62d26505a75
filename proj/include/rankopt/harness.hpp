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
 * \file rankopt/harness.hpp
 *
 * \brief Experiment protocol: normalized targets, stopping times, CDFs,
 *  win/tie/loss counts, and the CSV / JSON artifacts.
 *
 * A report is a pure function of the configuration and its master seed;
 * run k of (algorithm, benchmark) draws from
 * substream(master_seed, hash(algorithm, benchmark, k)).
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <thread>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "rankopt/benchmarks.hpp"
#include "rankopt/domain.hpp"
#include "rankopt/error.hpp"
#include "rankopt/optimizers.hpp"

namespace rankopt {

struct TargetSpec {
  std::vector<double> levels{0.90, 0.95, 0.99};
  double f_max = 0.0;
  double f_avg = 0.0;
  std::size_t mc_samples = 1000000;
  bool f_max_known = false;
  double mc_max = -std::numeric_limits<double>::infinity();  ///< best Monte Carlo value

  /// f_max - (f_max - f_avg)(1 - t).
  double target(double t) const { return f_max - (f_max - f_avg) * (1.0 - t); }
};

inline void validate_levels(const std::vector<double>& levels) {
  if (levels.empty()) throw InvalidParameter("at least one target level is required");
  for (double t : levels)
    if (!(t > 0.0 && t < 1.0)) throw InvalidParameter("target levels must lie in (0, 1)");
}

/**
 * \brief Monte Carlo average, and the maximum from known_max when present.
 *
 * Without a known maximum, f_max is the Monte Carlo best; run_experiment
 * later raises it to the best value seen across all runs.
 */
inline TargetSpec estimate_targets(const Objective& obj, const std::vector<double>& levels,
                                   std::size_t mc_samples, RngStream& rng) {
  validate_levels(levels);
  if (mc_samples < 10000) throw InvalidParameter("mc_samples must be >= 10000");
  TargetSpec ts;
  ts.levels = levels;
  ts.mc_samples = mc_samples;
  double sum = 0.0, comp = 0.0;  // Kahan
  for (std::size_t i = 0; i < mc_samples; ++i) {
    const double v = obj(sample_uniform(obj.domain, rng));
    ts.mc_max = std::max(ts.mc_max, v);
    const double y = v - comp;
    const double s = sum + y;
    comp = (s - sum) - y;
    sum = s;
  }
  ts.f_avg = sum / static_cast<double>(mc_samples);
  ts.f_max_known = obj.known_max.has_value();
  ts.f_max = obj.known_max ? *obj.known_max : ts.mc_max;
  return ts;
}

/// 1-based index of the first value >= target, or n if none.
inline std::size_t stopping_time(const std::vector<double>& values, double target, std::size_t n) {
  if (values.empty()) throw InsufficientSample("stopping_time: empty trace");
  const std::size_t lim = std::min(values.size(), n);
  for (std::size_t i = 0; i < lim; ++i)
    if (values[i] >= target) return i + 1;
  return n;
}

inline std::size_t stopping_time(const RunRecord& run, double target, std::size_t n) {
  return stopping_time(run.values(), target, n);
}

struct WinTieLoss {
  std::size_t wins = 0, ties = 0, losses = 0;
  friend bool operator==(const WinTieLoss&, const WinTieLoss&) = default;
};

/// Counts of runs where `other` needs fewer (win) or more (loss) evaluations
/// than `ref` by more than the relative margin.
inline WinTieLoss win_tie_loss(const std::vector<std::size_t>& tau_ref,
                               const std::vector<std::size_t>& tau_other, double margin = 0.1) {
  if (tau_ref.size() != tau_other.size()) throw InvalidParameter("win_tie_loss: length mismatch");
  if (!(margin >= 0.0 && margin < 1.0)) throw InvalidParameter("win_tie_loss: margin must lie in [0, 1)");
  WinTieLoss w;
  for (std::size_t k = 0; k < tau_ref.size(); ++k) {
    const double r = static_cast<double>(tau_ref[k]), o = static_cast<double>(tau_other[k]);
    if (o < (1.0 - margin) * r)
      ++w.wins;
    else if (o > (1.0 + margin) * r)
      ++w.losses;
  }
  w.ties = tau_ref.size() - w.wins - w.losses;
  return w;
}

/// cdf[i-1] = fraction of stopping times <= i, for i = 1..n.
inline std::vector<double> empirical_cdf(const std::vector<std::size_t>& taus, std::size_t n) {
  if (taus.empty()) throw InsufficientSample("empirical_cdf: no stopping times");
  std::vector<std::size_t> count(n + 1, 0);
  for (std::size_t t : taus) {
    if (t < 1 || t > n) throw InvalidParameter("empirical_cdf: stopping time outside [1, n]");
    ++count[t];
  }
  std::vector<double> cdf(n);
  std::size_t acc = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    acc += count[i];
    cdf[i - 1] = static_cast<double>(acc) / static_cast<double>(taus.size());
  }
  return cdf;
}

/// Mean and population standard deviation.
inline std::pair<double, double> mean_std(const std::vector<std::size_t>& xs) {
  if (xs.empty()) return {0.0, 0.0};
  double m = 0.0;
  for (auto x : xs) m += static_cast<double>(x);
  m /= static_cast<double>(xs.size());
  double v = 0.0;
  for (auto x : xs) v += (static_cast<double>(x) - m) * (static_cast<double>(x) - m);
  return {m, std::sqrt(v / static_cast<double>(xs.size()))};
}

// ---------------------------------------------------------------------------

struct ExperimentConfig {
  std::vector<std::string> algorithms{"adarankopt"};
  std::vector<std::string> benchmarks{"himmelblau"};
  std::string structure = "poly:1";  ///< rankopt structure; its kind sets the adarankopt sequence
  std::size_t budget = 1000;
  std::size_t runs = 100;
  double p = 0.1;
  int k_max = 6;
  std::size_t rejection_cap = 10000;
  double ghost_offset = 1.0;
  std::uint64_t seed = 0;
  std::vector<double> targets{0.90, 0.95, 0.99};
  std::size_t mc_samples = 1000000;
  std::string reference = "adarankopt";
  double margin = 0.1;
  /// With a known maximum, runs stop once the highest target is reached;
  /// stopping times are unaffected.
  bool early_stop = true;
  std::size_t threads = 1;
  std::string out;  ///< output directory; empty means no files

  void validate() const {
    if (algorithms.empty()) throw InvalidParameter("no algorithm given");
    if (benchmarks.empty()) throw InvalidParameter("no benchmark given");
    for (const auto& a : algorithms) (void)parse_algorithm(a);
    for (const auto& b : benchmarks) (void)get_benchmark(b);
    (void)RankingStructure::parse(structure);
    if (budget < 1) throw InvalidParameter("budget must be >= 1");
    if (runs < 1) throw InvalidParameter("runs must be >= 1");
    if (!(p > 0.0 && p < 1.0)) throw InvalidParameter("p must lie in (0, 1)");
    validate_levels(targets);
    if (mc_samples < 10000) throw InvalidParameter("mc must be >= 10000");
    if (threads < 1) throw InvalidParameter("threads must be >= 1");
    for (const auto& b : benchmarks)
      for (const auto& a : algorithms) optimizer_config(a).validate(get_benchmark(b).dim());
  }

  OptimizerConfig optimizer_config(const std::string& algorithm) const {
    OptimizerConfig c;
    c.algorithm = parse_algorithm(algorithm);
    c.structure = RankingStructure::parse(structure);
    c.budget = budget;
    c.p = p;
    c.k_max = k_max;
    c.rejection_cap = rejection_cap;
    c.ghost_offset = ghost_offset;
    return c;
  }
};

namespace detail {

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

inline std::vector<std::string> string_list(const nlohmann::json& j) {
  if (j.is_string()) return split_list(j.get<std::string>());
  return j.get<std::vector<std::string>>();
}

inline std::vector<double> level_list(const nlohmann::json& j) {
  if (!j.is_string()) return j.get<std::vector<double>>();
  std::vector<double> out;
  for (const auto& s : split_list(j.get<std::string>())) {
    std::size_t used = 0;
    out.push_back(std::stod(s, &used));
    if (used != s.size()) throw InvalidParameter("bad target level '" + s + "'");
  }
  return out;
}

}  // namespace detail

/// Parses target levels written as "0.90,0.95,0.99".
inline std::vector<double> parse_levels(const std::string& s) {
  try {
    return detail::level_list(nlohmann::json(s));
  } catch (const std::invalid_argument&) {
    throw InvalidParameter("bad target list '" + s + "'");
  } catch (const std::out_of_range&) {
    throw InvalidParameter("bad target list '" + s + "'");
  }
}

/// Applies the keys of \p j (same names as the CLI flags) on top of \p cfg.
inline void apply_json(ExperimentConfig& cfg, const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidParameter("config: top level must be an object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "algo") cfg.algorithms = detail::string_list(v);
      else if (key == "benchmark") cfg.benchmarks = detail::string_list(v);
      else if (key == "structure") cfg.structure = v.get<std::string>();
      else if (key == "budget") cfg.budget = v.get<std::size_t>();
      else if (key == "runs") cfg.runs = v.get<std::size_t>();
      else if (key == "p") cfg.p = v.get<double>();
      else if (key == "k-max") cfg.k_max = v.get<int>();
      else if (key == "rejection-cap") cfg.rejection_cap = v.get<std::size_t>();
      else if (key == "ghost-offset") cfg.ghost_offset = v.get<double>();
      else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
      else if (key == "targets") cfg.targets = detail::level_list(v);
      else if (key == "mc") cfg.mc_samples = v.get<std::size_t>();
      else if (key == "ref") cfg.reference = v.get<std::string>();
      else if (key == "margin") cfg.margin = v.get<double>();
      else if (key == "early-stop") cfg.early_stop = v.get<bool>();
      else if (key == "threads") cfg.threads = v.get<std::size_t>();
      else if (key == "out") cfg.out = v.get<std::string>();
      else throw InvalidParameter("config: unknown key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InvalidParameter(std::string("config: ") + e.what());
  }
}

inline ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open config file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(path.string() + ": " + e.what());
  }
  ExperimentConfig cfg;
  apply_json(cfg, j);
  return cfg;
}

/// Label-derived substream index of run k.
inline std::uint64_t run_stream(const std::string& algorithm, const std::string& benchmark, std::size_t k) {
  std::uint64_t h = fnv1a64(algorithm);
  h = mix64(h ^ fnv1a64(benchmark));
  return mix64(h ^ static_cast<std::uint64_t>(k));
}

inline std::uint64_t target_stream(const std::string& benchmark) {
  return mix64(fnv1a64("targets") ^ fnv1a64(benchmark));
}

struct LevelResult {
  double level = 0.0;
  double target = 0.0;
  std::vector<std::size_t> taus;
  double mean = 0.0, stddev = 0.0;
  std::vector<double> cdf;
  std::optional<WinTieLoss> vs_reference;
};

struct CellResult {
  std::string algorithm, benchmark;
  std::vector<std::uint64_t> streams;
  std::vector<LevelResult> levels;
  std::size_t truncated_runs = 0, clamped_runs = 0, stopped_early_runs = 0;
  std::vector<double> best_values;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::map<std::string, TargetSpec> targets;  // by benchmark
  std::vector<CellResult> cells;               // benchmark-major, then algorithm order

  const CellResult& cell(const std::string& algorithm, const std::string& benchmark) const {
    for (const auto& c : cells)
      if (c.algorithm == algorithm && c.benchmark == benchmark) return c;
    throw UnknownName("no result for " + algorithm + " on " + benchmark);
  }
};

/// Shortest round-trip decimal form of a double.
inline std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

/**
 * \brief Runs every (benchmark, algorithm) cell for config.runs seeds.
 *
 * Without a known maximum, all runs are kept and f_max becomes the best of
 * the Monte Carlo sample and every run of every algorithm on that benchmark.
 */
inline ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentReport rep;
  rep.config = cfg;
  const double top_level = *std::max_element(cfg.targets.begin(), cfg.targets.end());

  for (const auto& bname : cfg.benchmarks) {
    const BenchmarkSpec spec = get_benchmark(bname);
    const Objective obj = spec.objective();
    RngStream trng(cfg.seed, target_stream(bname));
    TargetSpec ts = estimate_targets(obj, cfg.targets, cfg.mc_samples, trng);

    struct Job {
      std::size_t cell, run;
    };
    std::vector<Job> jobs;
    std::vector<CellResult> cells;
    std::vector<std::vector<std::vector<double>>> values;  // [cell][run]
    for (const auto& aname : cfg.algorithms) {
      CellResult c;
      c.algorithm = aname;
      c.benchmark = bname;
      for (std::size_t k = 0; k < cfg.runs; ++k) {
        c.streams.push_back(run_stream(aname, bname, k));
        jobs.push_back({cells.size(), k});
      }
      c.best_values.assign(cfg.runs, 0.0);
      cells.push_back(std::move(c));
      values.emplace_back(cfg.runs);
    }
    std::vector<std::vector<char>> flags(cells.size(), std::vector<char>(cfg.runs, 0));

    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr err;
    auto worker = [&] {
      for (;;) {
        const std::size_t j = next.fetch_add(1);
        if (j >= jobs.size()) return;
        try {
          const Job job = jobs[j];
          CellResult& c = cells[job.cell];
          OptimizerConfig oc = cfg.optimizer_config(c.algorithm);
          if (cfg.early_stop && ts.f_max_known) oc.stop_at = ts.target(top_level);
          RngStream rng(cfg.seed, c.streams[job.run]);
          const RunRecord rec = optimize(obj, oc, rng);
          values[job.cell][job.run] = rec.values();
          c.best_values[job.run] = rec.best();
          flags[job.cell][job.run] = static_cast<char>((rec.truncated ? 1 : 0) | (rec.clamped ? 2 : 0) |
                                                       (rec.stopped_early ? 4 : 0));
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mu);
          if (!err) err = std::current_exception();
          next = jobs.size();
          return;
        }
      }
    };
    const std::size_t nthreads = std::min(cfg.threads, jobs.size());
    if (nthreads <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    if (err) std::rethrow_exception(err);

    if (!ts.f_max_known) {
      ts.f_max = ts.mc_max;
      for (const auto& c : cells)
        for (double b : c.best_values) ts.f_max = std::max(ts.f_max, b);
    }

    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      CellResult& c = cells[ci];
      for (char f : flags[ci]) {
        c.truncated_runs += (f & 1) != 0;
        c.clamped_runs += (f & 2) != 0;
        c.stopped_early_runs += (f & 4) != 0;
      }
      for (double t : cfg.targets) {
        LevelResult lr;
        lr.level = t;
        lr.target = ts.target(t);
        for (const auto& v : values[ci]) lr.taus.push_back(stopping_time(v, lr.target, cfg.budget));
        std::tie(lr.mean, lr.stddev) = mean_std(lr.taus);
        lr.cdf = empirical_cdf(lr.taus, cfg.budget);
        c.levels.push_back(std::move(lr));
      }
    }
    // comparisons against the reference algorithm
    for (auto& c : cells) {
      if (c.algorithm == cfg.reference) continue;
      for (const auto& r : cells) {
        if (r.algorithm != cfg.reference) continue;
        for (std::size_t li = 0; li < c.levels.size(); ++li)
          c.levels[li].vs_reference = win_tie_loss(r.levels[li].taus, c.levels[li].taus, cfg.margin);
      }
    }
    rep.targets[bname] = ts;
    for (auto& c : cells) rep.cells.push_back(std::move(c));
  }
  return rep;
}

inline std::string stopping_times_csv(const ExperimentReport& rep) {
  std::string s = "algorithm,benchmark,run,seed,level,tau\n";
  for (const auto& c : rep.cells)
    for (std::size_t k = 0; k < c.streams.size(); ++k)
      for (const auto& lr : c.levels)
        s += c.algorithm + ',' + c.benchmark + ',' + std::to_string(k) + ',' + std::to_string(c.streams[k]) +
             ',' + format_double(lr.level) + ',' + std::to_string(lr.taus[k]) + '\n';
  return s;
}

inline std::string cdf_csv(const ExperimentReport& rep) {
  std::string s = "algorithm,benchmark,level,i,cdf\n";
  for (const auto& c : rep.cells)
    for (const auto& lr : c.levels)
      for (std::size_t i = 0; i < lr.cdf.size(); ++i)
        s += c.algorithm + ',' + c.benchmark + ',' + format_double(lr.level) + ',' + std::to_string(i + 1) +
             ',' + format_double(lr.cdf[i]) + '\n';
  return s;
}

inline nlohmann::json to_json(const TargetSpec& ts) {
  nlohmann::json j;
  j["levels"] = ts.levels;
  j["f_max"] = ts.f_max;
  j["f_max_known"] = ts.f_max_known;
  j["f_avg"] = ts.f_avg;
  j["mc_samples"] = ts.mc_samples;
  nlohmann::json tg = nlohmann::json::array();
  for (double t : ts.levels) tg.push_back({{"level", t}, {"target", ts.target(t)}});
  j["targets"] = tg;
  return j;
}

inline nlohmann::json to_json(const WinTieLoss& w) {
  return {{"W", w.wins}, {"T", w.ties}, {"L", w.losses}};
}

inline nlohmann::json report_json(const ExperimentReport& rep) {
  const auto& cfg = rep.config;
  nlohmann::json j;
  j["config"] = {{"algo", cfg.algorithms}, {"benchmark", cfg.benchmarks}, {"structure", cfg.structure},
                 {"budget", cfg.budget},   {"runs", cfg.runs},             {"p", cfg.p},
                 {"k-max", cfg.k_max},     {"rejection-cap", cfg.rejection_cap},
                 {"ghost-offset", cfg.ghost_offset}, {"seed", cfg.seed},  {"targets", cfg.targets},
                 {"mc", cfg.mc_samples},   {"ref", cfg.reference},        {"margin", cfg.margin},
                 {"early-stop", cfg.early_stop}};
  nlohmann::json targets = nlohmann::json::object();
  for (const auto& [b, ts] : rep.targets) targets[b] = to_json(ts);
  j["targets"] = targets;
  nlohmann::json results = nlohmann::json::array();
  for (const auto& c : rep.cells) {
    nlohmann::json cj = {{"algorithm", c.algorithm},
                         {"benchmark", c.benchmark},
                         {"truncated_runs", c.truncated_runs},
                         {"clamped_runs", c.clamped_runs}};
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& lr : c.levels) {
      nlohmann::json lj = {{"level", lr.level}, {"target", lr.target}, {"mean", lr.mean}, {"std", lr.stddev}};
      if (lr.vs_reference) lj["vs_ref"] = to_json(*lr.vs_reference);
      levels.push_back(lj);
    }
    cj["levels"] = levels;
    results.push_back(cj);
  }
  j["results"] = results;
  return j;
}

inline void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot open " + p.string() + " for writing");
  out << content;
  if (!out) throw Error("write failed: " + p.string());
}

/// Writes stopping_times.csv, cdf.csv and report.json into \p dir.
inline void write_artifacts(const ExperimentReport& rep, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create " + dir.string() + ": " + ec.message());
  write_file(dir / "stopping_times.csv", stopping_times_csv(rep));
  write_file(dir / "cdf.csv", cdf_csv(rep));
  write_file(dir / "report.json", report_json(rep).dump(2) + "\n");
}

// ---------------------------------------------------------------------------

struct StoppingRow {
  std::string algorithm, benchmark;
  std::size_t run;
  std::string level;
  std::size_t tau;
};

/// Reads a stopping-times CSV as written by stopping_times_csv.
inline std::vector<StoppingRow> read_stopping_times(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "algorithm,benchmark,run,seed,level,tau")
    throw InvalidParameter(path.string() + ": unexpected header");
  std::vector<StoppingRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = detail::split_list(line);
    if (f.size() != 6) throw InvalidParameter(path.string() + ":" + std::to_string(lineno) + ": expected 6 fields");
    try {
      rows.push_back({f[0], f[1], std::stoul(f[2]), f[4], std::stoul(f[5])});
    } catch (const std::exception&) {
      throw InvalidParameter(path.string() + ":" + std::to_string(lineno) + ": malformed number");
    }
  }
  return rows;
}

/**
 * \brief W/T/L of every (benchmark, level) present in both files.
 *
 * Each file must hold one algorithm per benchmark; runs are paired by index.
 */
inline nlohmann::json compare_stopping_times(const std::vector<StoppingRow>& ref,
                                             const std::vector<StoppingRow>& other, double margin = 0.1) {
  using Key = std::pair<std::string, std::string>;  // benchmark, level
  auto group = [](const std::vector<StoppingRow>& rows) {
    std::map<Key, std::map<std::size_t, std::size_t>> g;
    std::map<std::string, std::string> algo;
    for (const auto& r : rows) {
      auto [it, fresh] = algo.emplace(r.benchmark, r.algorithm);
      if (!fresh && it->second != r.algorithm)
        throw InvalidParameter("compare: more than one algorithm for benchmark " + r.benchmark);
      g[{r.benchmark, r.level}][r.run] = r.tau;
    }
    return std::make_pair(g, algo);
  };
  const auto [gr, ar] = group(ref);
  const auto [go, ao] = group(other);
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, runs_r] : gr) {
    auto it = go.find(key);
    if (it == go.end()) continue;
    std::vector<std::size_t> tr, to;
    for (const auto& [k, tau] : runs_r) {
      auto jt = it->second.find(k);
      if (jt == it->second.end()) throw InvalidParameter("compare: run " + std::to_string(k) + " missing in other");
      tr.push_back(tau);
      to.push_back(jt->second);
    }
    if (tr.size() != it->second.size()) throw InvalidParameter("compare: run counts differ");
    const WinTieLoss w = win_tie_loss(tr, to, margin);
    out.push_back({{"benchmark", key.first},
                   {"level", key.second},
                   {"ref", ar.at(key.first)},
                   {"other", ao.at(key.first)},
                   {"K", tr.size()},
                   {"W", w.wins},
                   {"T", w.ties},
                   {"L", w.losses}});
  }
  return out;
}

}  // namespace rankopt
