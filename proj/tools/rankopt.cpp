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

// rankopt command line: run experiments, print targets, compare results.
//
// Exit codes: 0 success, 2 invalid configuration, 3 runtime failure.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rankopt/harness.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalidConfig = 2;
constexpr int kRuntimeFailure = 3;

struct RunFlags {
  std::string config, algo, structure, benchmark, targets, out, ref;
  std::size_t budget = 0, runs = 0, rejection_cap = 0, mc = 0, threads = 0;
  double p = 0.0, ghost_offset = 0.0, margin = 0.0;
  int k_max = 0;
  std::uint64_t seed = 0;
  bool no_early_stop = false;
};

// Flags given on the command line override the config file.
rankopt::ExperimentConfig build_config(const CLI::App& cmd, const RunFlags& f) {
  rankopt::ExperimentConfig cfg;
  if (!f.config.empty()) cfg = rankopt::load_config(f.config);
  nlohmann::json j = nlohmann::json::object();
  auto given = [&](const char* name) { return cmd.count(std::string("--") + name) > 0; };
  if (given("algo")) j["algo"] = f.algo;
  if (given("structure")) j["structure"] = f.structure;
  if (given("benchmark")) j["benchmark"] = f.benchmark;
  if (given("budget")) j["budget"] = f.budget;
  if (given("runs")) j["runs"] = f.runs;
  if (given("p")) j["p"] = f.p;
  if (given("k-max")) j["k-max"] = f.k_max;
  if (given("rejection-cap")) j["rejection-cap"] = f.rejection_cap;
  if (given("ghost-offset")) j["ghost-offset"] = f.ghost_offset;
  if (given("seed")) j["seed"] = f.seed;
  if (given("targets")) j["targets"] = f.targets;
  if (given("mc")) j["mc"] = f.mc;
  if (given("ref")) j["ref"] = f.ref;
  if (given("margin")) j["margin"] = f.margin;
  if (given("threads")) j["threads"] = f.threads;
  if (given("out")) j["out"] = f.out;
  if (f.no_early_stop) j["early-stop"] = false;
  rankopt::apply_json(cfg, j);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global optimization by ranking structures"};
  app.require_subcommand(1);

  RunFlags rf;
  auto* run = app.add_subcommand("run", "run an experiment and write CSV/JSON artifacts");
  run->add_option("--config", rf.config, "JSON config file (keys as the flags)");
  run->add_option("--algo", rf.algo, "prs|pas|rankopt|adarankopt, comma separated");
  run->add_option("--structure", rf.structure, "poly:K|sin:K|convex1d:K|convexdeg1|full");
  run->add_option("--benchmark", rf.benchmark, "benchmark name(s), comma separated");
  run->add_option("--budget", rf.budget, "evaluations per run");
  run->add_option("--runs", rf.runs, "runs per algorithm and benchmark");
  run->add_option("--p", rf.p, "exploration probability");
  run->add_option("--k-max", rf.k_max, "largest structure index for adarankopt");
  run->add_option("--rejection-cap", rf.rejection_cap, "candidate tests per step");
  run->add_option("--ghost-offset", rf.ghost_offset, "ghost value offset c > 0");
  run->add_option("--seed", rf.seed, "master seed");
  run->add_option("--targets", rf.targets, "target levels, e.g. 0.90,0.95,0.99");
  run->add_option("--mc", rf.mc, "Monte Carlo samples for the targets");
  run->add_option("--ref", rf.ref, "reference algorithm for win/tie/loss");
  run->add_option("--margin", rf.margin, "relative win/tie/loss margin");
  run->add_option("--threads", rf.threads, "worker threads");
  run->add_option("--out", rf.out, "output directory");
  run->add_flag("--no-early-stop", rf.no_early_stop, "always spend the full budget");

  std::string tbench = "himmelblau", tlevels = "0.90,0.95,0.99";
  std::size_t tmc = 1000000;
  std::uint64_t tseed = 0;
  auto* targets = app.add_subcommand("targets", "print the target specification as JSON");
  targets->add_option("--benchmark", tbench, "benchmark name");
  targets->add_option("--mc", tmc, "Monte Carlo samples");
  targets->add_option("--seed", tseed, "master seed");
  targets->add_option("--targets", tlevels, "target levels");

  std::string cref, cother;
  double cmargin = 0.1;
  auto* compare = app.add_subcommand("compare", "win/tie/loss of two stopping-time CSV files");
  compare->add_option("--ref", cref, "reference stopping_times.csv")->required();
  compare->add_option("--other", cother, "other stopping_times.csv")->required();
  compare->add_option("--margin", cmargin, "relative margin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalidConfig;
  }

  try {
    if (*run) {
      rankopt::ExperimentConfig cfg;
      try {
        cfg = build_config(*run, rf);
        cfg.validate();
      } catch (const rankopt::Error& e) {
        std::cerr << "invalid config: " << e.what() << '\n';
        return kInvalidConfig;
      }
      const rankopt::ExperimentReport rep = rankopt::run_experiment(cfg);
      if (!cfg.out.empty()) rankopt::write_artifacts(rep, cfg.out);
      std::cout << rankopt::report_json(rep).dump(2) << '\n';
    } else if (*targets) {
      rankopt::TargetSpec ts;
      try {
        const auto spec = rankopt::get_benchmark(tbench);
        const auto levels = rankopt::parse_levels(tlevels);
        rankopt::RngStream rng(tseed, rankopt::target_stream(tbench));
        ts = rankopt::estimate_targets(spec.objective(), levels, tmc, rng);
      } catch (const rankopt::NumericalFailure&) {
        throw;
      } catch (const rankopt::Error& e) {
        std::cerr << "invalid config: " << e.what() << '\n';
        return kInvalidConfig;
      }
      nlohmann::json j = rankopt::to_json(ts);
      j["benchmark"] = tbench;
      std::cout << j.dump(2) << '\n';
    } else if (*compare) {
      nlohmann::json j;
      try {
        j = rankopt::compare_stopping_times(rankopt::read_stopping_times(cref),
                                            rankopt::read_stopping_times(cother), cmargin);
      } catch (const rankopt::InvalidParameter& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kInvalidConfig;
      }
      std::cout << j.dump(2) << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeFailure;
  }
  return kOk;
}
