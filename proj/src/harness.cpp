// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "paretosub/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <set>
#include <thread>

#include "paretosub/exact_oracle.hpp"
#include "paretosub/instance_io.hpp"
#include "paretosub/optimizers.hpp"

namespace paretosub {
namespace {

using nlohmann::json;

constexpr const char* kKnownAlgorithms[] = {"greedy", "sg",   "po",
                                            "bpo",    "kbpo", "bposc"};

bool is_pareto(const std::string& name) {
  return name == "po" || name == "bpo" || name == "kbpo" || name == "bposc";
}

int default_capacity(const AlgorithmConfig& alg, int kappa, int n) {
  if (alg.capacity != 0) return alg.capacity;
  if (alg.name == "bposc") return n + 1;
  return std::min(2 * kappa, n + 1);
}

// Validation collects every offense before refusing the config.
void validate(const ExperimentConfig& config, int n) {
  std::vector<std::string> problems;
  if (config.kappa < 1 || config.kappa > n)
    problems.push_back("kappa must be in [1, n]");
  if (config.repetitions < 1) problems.push_back("repetitions must be >= 1");

  for (const AlgorithmConfig& alg : config.algorithms) {
    const auto prefix = [&](const std::string& field) {
      return "algorithms/" + alg.name + "/" + field;
    };
    if (std::find(std::begin(kKnownAlgorithms), std::end(kKnownAlgorithms),
                  alg.name) == std::end(kKnownAlgorithms)) {
      problems.push_back("algorithms: unknown name '" + alg.name + "'");
      continue;
    }
    if (is_pareto(alg.name)) {
      if (alg.budget == 0) problems.push_back(prefix("budget must be > 0"));
      const int capacity = default_capacity(alg, config.kappa, n);
      if (capacity < 1 || capacity > n + 1)
        problems.push_back(prefix("P must be in [1, n+1]"));
      else if (alg.name != "bposc" && config.kappa >= capacity)
        problems.push_back(prefix("requires kappa < P"));
    }
    if (alg.name != "greedy" && alg.name != "po") {
      if (!(alg.epsilon > 0.0 && alg.epsilon < 1.0))
        problems.push_back(prefix("epsilon must be in (0, 1)"));
    }
    if (alg.name == "bpo" || alg.name == "kbpo" || alg.name == "bposc") {
      if (!(alg.p >= 0.0 && alg.p <= 1.0))
        problems.push_back(prefix("p must be in [0, 1]"));
    }
    if (alg.name == "bpo" || alg.name == "bposc") {
      if (!(alg.xi > 0.0 && alg.xi < 1.0))
        problems.push_back(prefix("xi must be in (0, 1)"));
    }
    if (alg.name == "bposc") {
      const bool has_abs = alg.tau > 0.0;
      const bool has_frac = alg.tau_fraction > 0.0 && alg.tau_fraction <= 1.0;
      if (has_abs == has_frac)
        problems.push_back(prefix("needs exactly one of tau, tau_fraction"));
    }
  }

  if (!problems.empty()) {
    std::string message = "invalid experiment config:";
    for (const std::string& p : problems) message += "\n  - " + p;
    throw ConfigError(message);
  }
}

struct RepOutcome {
  Trajectory trajectory;
  double final_value = 0.0;
  std::vector<TrajectoryEvent> events;
};

RepOutcome run_one(const AlgorithmConfig& alg, const ObjectiveOracle& oracle,
                   int kappa, std::uint64_t seed, std::uint64_t sample_every,
                   double tau) {
  RngStreams rng(seed);
  RepOutcome out;
  if (alg.name == "sg") {
    const std::uint64_t start = oracle.query_count();
    Solution sol = run_stochastic_greedy(oracle, kappa, alg.epsilon, rng.sg);
    out.final_value = sol.value;
    // Stochastic greedy reports only its final value; the two samples bound
    // its query span for the plots.
    out.trajectory.caps = {kappa};
    out.trajectory.samples.push_back({0, {0.0}});
    out.trajectory.samples.push_back(
        {oracle.query_count() - start, {sol.value}});
    return out;
  }

  TrackOptions track;
  track.sample_every = sample_every != 0
                           ? sample_every
                           : std::max<std::uint64_t>(1, alg.budget / 200);
  const int capacity = default_capacity(alg, kappa, oracle.n());
  if (alg.name == "po") {
    track.caps = {kappa};
    PoResult r = run_po(oracle, capacity, alg.budget, rng, track);
    out.trajectory = std::move(r.trajectory);
  } else if (alg.name == "bpo") {
    track.caps = {kappa};
    BpoResult r = run_bpo(oracle, capacity, alg.budget, alg.p, alg.epsilon,
                          alg.xi, rng, track);
    out.trajectory = std::move(r.trajectory);
  } else if (alg.name == "kbpo") {
    track.caps = {kappa};
    KbpoResult r = run_kbpo(oracle, kappa, capacity, alg.budget, alg.p,
                            alg.epsilon, rng, track);
    out.trajectory = std::move(r.trajectory);
  } else {  // bposc
    track.caps = {capacity - 1};
    BposcResult r = run_bposc(oracle, tau, capacity, alg.budget, alg.p,
                              alg.epsilon, alg.xi, rng, track);
    out.trajectory = std::move(r.trajectory);
  }
  out.final_value = out.trajectory.samples.back().best[0];
  out.events = out.trajectory.events;
  return out;
}

double interpolate(const std::vector<std::pair<double, double>>& points,
                   double x) {
  if (x <= points.front().first) return points.front().second;
  if (x >= points.back().first) return points.back().second;
  const auto hi = std::upper_bound(
      points.begin(), points.end(), x,
      [](double v, const auto& pt) { return v < pt.first; });
  const auto lo = hi - 1;
  if (hi->first == lo->first) return hi->second;
  const double t = (x - lo->first) / (hi->first - lo->first);
  return lo->second + t * (hi->second - lo->second);
}

int thread_budget() {
  const char* env = std::getenv("PARETO_THREADS");
  if (env == nullptr) return 0;
  return std::atoi(env);
}

// Runs fn(rep) for every repetition, at most `threads` at a time; outcomes
// land in a vector indexed by repetition so aggregation order is fixed.
template <typename Fn>
std::vector<RepOutcome> run_repetitions(int repetitions, int threads, Fn fn) {
  std::vector<RepOutcome> out(static_cast<std::size_t>(repetitions));
  if (threads <= 1) {
    for (int rep = 0; rep < repetitions; ++rep)
      out[static_cast<std::size_t>(rep)] = fn(rep);
    return out;
  }
  std::vector<std::exception_ptr> errors(
      static_cast<std::size_t>(repetitions));
  std::vector<std::thread> pool;
  const int workers = std::min(threads, repetitions);
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int rep = w; rep < repetitions; rep += workers) {
        try {
          out[static_cast<std::size_t>(rep)] = fn(rep);
        } catch (...) {
          errors[static_cast<std::size_t>(rep)] = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace

std::uint64_t repetition_seed(std::uint64_t master, int repetition) {
  return master ^ splitmix64(static_cast<std::uint64_t>(repetition));
}

ExperimentConfig ExperimentConfig::from_json(const json& j,
                                             std::string base_dir) {
  ExperimentConfig config;
  config.base_dir = std::move(base_dir);
  try {
    config.objective = j.at("objective");
    config.kappa = j.at("kappa").get<int>();
    config.repetitions = j.value("repetitions", 1);
    config.seed = j.value("seed", std::uint64_t{0});
    config.sample_every = j.value("sample_every", std::uint64_t{0});
    config.output_dir = j.value("output_dir", std::string("out"));
    for (const json& a : j.value("algorithms", json::array())) {
      AlgorithmConfig alg;
      alg.name = a.at("name").get<std::string>();
      alg.budget = a.value("budget", std::uint64_t{0});
      alg.capacity = a.value("P", 0);
      alg.p = a.value("p", 0.5);
      alg.epsilon = a.value("epsilon", 0.2);
      alg.xi = a.value("xi", 0.5);
      alg.tau = a.value("tau", 0.0);
      alg.tau_fraction = a.value("tau_fraction", 0.0);
      config.algorithms.push_back(std::move(alg));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("experiment config: ") + e.what());
  }
  return config;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  return from_json(load_json_file(path),
                   std::filesystem::path(path).parent_path().string());
}

SummaryStats run_experiment(const ExperimentConfig& config) {
  const std::unique_ptr<ObjectiveOracle> base =
      make_oracle(config.objective, config.base_dir);
  const int n = base->n();
  validate(config, n);

  std::filesystem::create_directories(config.output_dir);

  // The baseline always runs: it defines the value normalizer V_g and the
  // query normalizer Q = kappa * n.
  const std::unique_ptr<ObjectiveOracle> greedy_oracle = base->clone();
  GreedyResult baseline = run_greedy(*greedy_oracle, config.kappa);
  if (!(baseline.value > 0.0))
    throw ConfigError("experiment: greedy baseline value is 0; nothing to "
                      "normalize against");
  const auto normalizer =
      static_cast<std::uint64_t>(config.kappa) * static_cast<std::uint64_t>(n);
  if (baseline.trajectory.samples.back().query_count < normalizer)
    baseline.trajectory.samples.push_back({normalizer, {baseline.value}});

  SummaryStats stats;
  stats.greedy_value = baseline.value;
  stats.normalizer_queries = normalizer;

  const int threads = thread_budget();
  std::ofstream raw(std::filesystem::path(config.output_dir) /
                    "raw_trajectories.csv");
  if (!raw) throw IoError("cannot write raw_trajectories.csv");
  raw << kTrajectoryCsvHeader;

  // Normalized curves per algorithm per repetition, plus SG final values.
  struct AlgorithmRuns {
    const AlgorithmConfig* config = nullptr;
    std::vector<std::vector<std::pair<double, double>>> curves;
    std::vector<double> finals;  // normalized
  };
  std::vector<AlgorithmRuns> all_runs;

  for (const AlgorithmConfig& alg : config.algorithms) {
    AlgorithmRuns runs;
    runs.config = &alg;
    if (alg.name == "greedy") {
      append_trajectory_csv(raw, "greedy", config.seed, baseline.trajectory);
      std::vector<std::pair<double, double>> curve;
      for (const TrajectorySample& s : baseline.trajectory.samples)
        curve.emplace_back(
            static_cast<double>(s.query_count) / normalizer,
            s.best[0] / baseline.value);
      runs.curves.push_back(std::move(curve));
      runs.finals.push_back(1.0);
      all_runs.push_back(std::move(runs));
      continue;
    }

    double tau = alg.tau;
    if (alg.name == "bposc" && alg.tau_fraction > 0.0) {
      SubsetMask universe(n);
      for (int u = 0; u < n; ++u) universe.set(u);
      tau = alg.tau_fraction * base->peek(universe);
    }

    std::vector<RepOutcome> outcomes = run_repetitions(
        config.repetitions, threads, [&](int rep) {
          const std::unique_ptr<ObjectiveOracle> oracle = base->clone();
          return run_one(alg, *oracle, config.kappa,
                         repetition_seed(config.seed, rep),
                         config.sample_every, tau);
        });

    for (int rep = 0; rep < config.repetitions; ++rep) {
      const RepOutcome& outcome = outcomes[static_cast<std::size_t>(rep)];
      const std::uint64_t seed = repetition_seed(config.seed, rep);
      append_trajectory_csv(raw, alg.name, seed, outcome.trajectory);
      for (const TrajectoryEvent& event : outcome.events) {
        stats.events.push_back({alg.name, seed, event.iteration, event.name});
        if (alg.name == "kbpo" && event.name == "beta_reached_kappa")
          stats.kbpo_beta_iterations.push_back(event.iteration);
      }
      std::vector<std::pair<double, double>> curve;
      for (const TrajectorySample& s : outcome.trajectory.samples)
        curve.emplace_back(static_cast<double>(s.query_count) / normalizer,
                           s.best[0] / baseline.value);
      runs.curves.push_back(std::move(curve));
      runs.finals.push_back(outcome.final_value / baseline.value);
    }
    all_runs.push_back(std::move(runs));
  }
  raw.close();

  // Shared normalized grid: the union of every sampled x.
  std::set<double> grid_points;
  for (const AlgorithmRuns& runs : all_runs)
    for (const auto& curve : runs.curves)
      for (const auto& point : curve) grid_points.insert(point.first);
  stats.grid.assign(grid_points.begin(), grid_points.end());

  for (const AlgorithmRuns& runs : all_runs) {
    AlgorithmSummary summary;
    summary.name = runs.config->name;
    const auto reps = static_cast<double>(runs.curves.size());
    summary.mean.resize(stats.grid.size());
    summary.stddev.resize(stats.grid.size());
    for (std::size_t g = 0; g < stats.grid.size(); ++g) {
      double sum = 0.0, sum_sq = 0.0;
      for (const auto& curve : runs.curves) {
        const double v = interpolate(curve, stats.grid[g]);
        sum += v;
        sum_sq += v * v;
      }
      const double mean = sum / reps;
      summary.mean[g] = mean;
      summary.stddev[g] =
          runs.curves.size() > 1
              ? std::sqrt(std::max(0.0, (sum_sq - reps * mean * mean) /
                                            (reps - 1.0)))
              : 0.0;
    }
    double final_sum = 0.0;
    for (double v : runs.finals) final_sum += v;
    summary.final_mean = final_sum / reps;
    stats.algorithms.push_back(std::move(summary));
    if (runs.config->name == "sg")
      stats.sg_final_mean = stats.algorithms.back().final_mean;
  }

  // Crossing statistics against the SG mean final value and the greedy line.
  for (AlgorithmSummary& summary : stats.algorithms) {
    for (std::size_t g = 0; g < stats.grid.size(); ++g) {
      if (stats.sg_final_mean && !summary.crossing_sg_x &&
          summary.mean[g] > *stats.sg_final_mean)
        summary.crossing_sg_x = stats.grid[g];
      if (!summary.crossing_greedy_x && summary.mean[g] > 1.0)
        summary.crossing_greedy_x = stats.grid[g];
    }
  }

  emit_plotdata(stats, config.output_dir);
  return stats;
}

void emit_plotdata(const SummaryStats& stats, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path out_dir(dir);

  std::ofstream trajectory(out_dir / "trajectory.csv");
  if (!trajectory) throw IoError("cannot write trajectory.csv");
  trajectory << "algorithm,x_normalized_queries,mean,std\n";
  for (const AlgorithmSummary& summary : stats.algorithms) {
    for (std::size_t g = 0; g < stats.grid.size(); ++g) {
      trajectory << summary.name << ',' << format_double(stats.grid[g]) << ','
                 << format_double(summary.mean[g]) << ','
                 << format_double(summary.stddev[g]) << '\n';
    }
  }
  trajectory.close();

  json crossings;
  crossings["greedy_value"] = stats.greedy_value;
  crossings["normalizer_queries"] = stats.normalizer_queries;
  if (stats.sg_final_mean)
    crossings["sg_final_mean_normalized"] = *stats.sg_final_mean;
  json per_algorithm = json::object();
  for (const AlgorithmSummary& summary : stats.algorithms) {
    json entry;
    entry["final_mean_normalized"] = summary.final_mean;
    entry["crosses_sg_at_x"] =
        summary.crossing_sg_x ? json(*summary.crossing_sg_x) : json(nullptr);
    entry["crosses_sg_at_query"] =
        summary.crossing_sg_x
            ? json(*summary.crossing_sg_x *
                   static_cast<double>(stats.normalizer_queries))
            : json(nullptr);
    entry["crosses_greedy_at_x"] = summary.crossing_greedy_x
                                       ? json(*summary.crossing_greedy_x)
                                       : json(nullptr);
    per_algorithm[summary.name] = std::move(entry);
  }
  crossings["algorithms"] = std::move(per_algorithm);
  if (!stats.kbpo_beta_iterations.empty())
    crossings["kbpo_beta_reached_kappa_iterations"] =
        stats.kbpo_beta_iterations;
  std::ofstream crossings_file(out_dir / "crossings.json");
  if (!crossings_file) throw IoError("cannot write crossings.json");
  crossings_file << crossings.dump(2) << '\n';
  crossings_file.close();

  std::ofstream events(out_dir / "events.csv");
  if (!events) throw IoError("cannot write events.csv");
  events << kEventsCsvHeader;
  for (const EventRow& row : stats.events) {
    events << row.algorithm << ',' << row.seed << ',' << row.iteration << ','
           << row.name << '\n';
  }
}

}  // namespace paretosub
