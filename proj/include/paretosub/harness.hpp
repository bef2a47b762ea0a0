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

//
// Configuration-driven benchmark runner: repeated seeded runs against one
// instance, trajectories normalized by the standard-greedy value and its
// kappa*n query budget, aggregated onto a shared grid with crossing
// statistics. Outputs are byte-stable for identical configs; repetitions may
// run concurrently (PARETO_THREADS) without changing any output.

#ifndef PARETOSUB_HARNESS_HPP_
#define PARETOSUB_HARNESS_HPP_

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace paretosub {

struct AlgorithmConfig {
  std::string name;            // greedy | sg | po | bpo | kbpo | bposc
  std::uint64_t budget = 0;    // iterations of the Pareto variants
  int capacity = 0;            // 0: 2*kappa (SM variants) or n+1 (bposc)
  double p = 0.5;
  double epsilon = 0.2;
  double xi = 0.5;
  double tau = 0.0;            // cover threshold (bposc), absolute...
  double tau_fraction = 0.0;   // ...or as a fraction of f(U)
};

struct ExperimentConfig {
  nlohmann::json objective;
  int kappa = 0;
  int repetitions = 1;
  std::uint64_t seed = 0;
  std::uint64_t sample_every = 0;  // 0: budget/200, at least 1
  std::string output_dir = "out";
  std::vector<AlgorithmConfig> algorithms;
  std::string base_dir;  // resolves relative data paths

  static ExperimentConfig from_json(const nlohmann::json& j,
                                    std::string base_dir);
  static ExperimentConfig from_file(const std::string& path);
};

struct EventRow {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::uint64_t iteration = 0;
  std::string name;
};

struct AlgorithmSummary {
  std::string name;
  std::vector<double> mean;    // normalized, one per grid point
  std::vector<double> stddev;  // sample std of the normalized values
  double final_mean = 0.0;
  std::optional<double> crossing_sg_x;      // first x with mean > SG final
  std::optional<double> crossing_greedy_x;  // first x with mean > 1
};

struct SummaryStats {
  std::vector<double> grid;  // normalized query counts, strictly increasing
  std::vector<AlgorithmSummary> algorithms;
  double greedy_value = 0.0;           // raw baseline value
  std::uint64_t normalizer_queries = 0;  // kappa * n
  std::optional<double> sg_final_mean;   // normalized
  std::vector<std::uint64_t> kbpo_beta_iterations;  // one per repetition
  std::vector<EventRow> events;
};

// Master seed XOR a fixed integer hash of the repetition index.
std::uint64_t repetition_seed(std::uint64_t master, int repetition);

// Runs the full experiment, writes raw_trajectories.csv and the plot data
// into config.output_dir, and returns the aggregate statistics.
SummaryStats run_experiment(const ExperimentConfig& config);

// Writes trajectory.csv, crossings.json, and events.csv with a stable column
// order.
void emit_plotdata(const SummaryStats& stats, const std::string& dir);

}  // namespace paretosub

#endif  // PARETOSUB_HARNESS_HPP_
