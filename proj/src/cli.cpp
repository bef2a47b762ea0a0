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

#include "paretosub/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <nlohmann/json.hpp>
#include <numbers>

#include "paretosub/bounds.hpp"
#include "paretosub/exact_oracle.hpp"
#include "paretosub/harness.hpp"
#include "paretosub/instance_io.hpp"
#include "paretosub/optimizers.hpp"

namespace paretosub {
namespace {

using nlohmann::json;

struct BoundsArgs {
  std::string algo;
  int n = 0;
  int capacity = 0;
  int kappa = 0;
  double p = 0.5;
  double eps = 0.2;
  double xi = 0.5;
  double delta = 0.5;
  double gamma = 1.0;
};

GuaranteeSpec::Algorithm parse_algo(const std::string& name) {
  using Algorithm = GuaranteeSpec::Algorithm;
  if (name == "po") return Algorithm::kPo;
  if (name == "bpo") return Algorithm::kBpo;
  if (name == "kbpo") return Algorithm::kKbpo;
  if (name == "posc") return Algorithm::kPosc;
  if (name == "bposc") return Algorithm::kBposc;
  if (name == "greedy") return Algorithm::kGreedy;
  if (name == "sg") return Algorithm::kSg;
  throw ConfigError("bounds: unknown algorithm '" + name + "'");
}

json bounds_report(const BoundsArgs& args) {
  json out;
  out["algorithm"] = args.algo;
  out["n"] = args.n;

  GuaranteeSpec spec;
  spec.algorithm = parse_algo(args.algo);
  spec.n = args.n;
  spec.p = args.p;
  spec.epsilon = args.eps;
  spec.delta = args.delta;
  spec.gamma = args.gamma;

  if (args.algo == "po") {
    out["P"] = args.capacity;
    out["epsilon"] = args.eps;
    out["T"] = t_bound_po(args.n, args.capacity, args.eps);
  } else if (args.algo == "bpo") {
    out["P"] = args.capacity;
    out["p"] = args.p;
    out["epsilon"] = args.eps;
    out["xi"] = args.xi;
    out["T"] = t_bound_bpo(args.n, args.capacity, args.p, args.eps, args.xi);
    const int m = m_value(args.capacity, args.xi);
    out["M"] = m;
    json h = json::array();
    for (int j = 1; j <= m; ++j) h.push_back(h_value(j, args.eps, args.xi));
    out["H"] = std::move(h);
  } else if (args.algo == "kbpo") {
    out["p"] = args.p;
    out["epsilon"] = args.eps;
    out["T"] = t_bound_kbpo(args.n, args.p, args.eps);
    if (args.kappa > 0) {
      out["kappa"] = args.kappa;
      out["H"] = std::numbers::e * args.n * std::log(1.0 / args.eps) /
                 args.kappa;
    }
  } else if (args.algo == "posc") {
    out["delta"] = args.delta;
    const std::uint64_t t = t_bound_posc(args.n, args.delta);
    out["T"] = t;
    if (t == 0) out["degenerate"] = true;
  } else if (args.algo == "bposc") {
    out["P"] = args.capacity;
    out["p"] = args.p;
    out["epsilon"] = args.eps;
    out["xi"] = args.xi;
    out["delta"] = args.delta;
    out["T"] =
        t_bound_bposc(args.n, args.capacity, args.p, args.eps, args.xi,
                      args.delta);
    out["M"] = m_value(args.capacity, args.xi);
  } else if (args.algo == "greedy") {
    if (args.kappa > 0) {
      out["kappa"] = args.kappa;
      out["queries"] = static_cast<std::uint64_t>(args.kappa) * args.n -
                       static_cast<std::uint64_t>(args.kappa) *
                           (args.kappa - 1) / 2;
    }
  } else if (args.algo == "sg") {
    out["epsilon"] = args.eps;
    if (args.kappa > 0) {
      out["kappa"] = args.kappa;
      const int s = sg_sample_size(args.n, args.kappa, args.eps);
      out["sample_size"] = s;
      out["queries"] =
          static_cast<std::uint64_t>(args.kappa) * static_cast<std::uint64_t>(s);
    }
  }

  try {
    out["guarantee_ratio"] = guarantee_ratio(spec);
  } catch (const NumericError& e) {
    out["guarantee_ratio"] = nullptr;
    out["guarantee_note"] = e.what();
  }
  return out;
}

json exact_report(const ExactResult& result) {
  json out;
  out["opt_value"] = result.opt_value;
  out["opt_set"] = result.opt_set.elements();
  out["opt_set_hex"] = result.opt_set.to_hex();
  out["cardinality"] = result.opt_set.cardinality();
  out["enumerated"] = result.enumerated;
  return out;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Anytime Pareto optimization for submodular maximization"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run a benchmark experiment config");
  std::string config_path;
  std::string output_dir_override;
  run->add_option("--config", config_path, "Experiment config JSON")
      ->required();
  run->add_option("--output-dir", output_dir_override,
                  "Override the config's output directory");

  // bounds
  auto* bounds = app.add_subcommand(
      "bounds", "Print iteration bounds and guarantee ratios as JSON");
  BoundsArgs bargs;
  bounds->add_option("--algo", bargs.algo, "po|bpo|kbpo|posc|bposc|greedy|sg")
      ->required();
  bounds->add_option("--n", bargs.n, "Ground-set size")->required();
  bounds->add_option("--P", bargs.capacity, "Pool capacity");
  bounds->add_option("--kappa", bargs.kappa, "Cardinality constraint");
  bounds->add_option("--p", bargs.p, "Bias probability");
  bounds->add_option("--eps", bargs.eps, "Accuracy parameter");
  bounds->add_option("--xi", bargs.xi, "Pointer spacing");
  bounds->add_option("--delta", bargs.delta, "Cover confidence parameter");
  bounds->add_option("--gamma", bargs.gamma, "Submodularity ratio");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Exhaustively check monotonicity and submodularity");
  std::string verify_file;
  verify->add_option("--file", verify_file, "Instance description JSON")
      ->required();

  // gen-data
  auto* gen = app.add_subcommand("gen-data",
                                 "Write a generated vector dataset as CSV");
  int clusters = 1, points = 1, dim = 1;
  std::uint64_t seed = 0;
  std::string out_path;
  gen->add_option("--clusters", clusters, "Gaussian cluster count")
      ->required();
  gen->add_option("--points", points, "Number of vectors")->required();
  gen->add_option("--dim", dim, "Vector dimension")->required();
  gen->add_option("--seed", seed, "Generator seed")->required();
  gen->add_option("--out", out_path, "Output CSV path")->required();

  // brute
  auto* brute = app.add_subcommand(
      "brute", "Exact optimum by exhaustive enumeration");
  std::string brute_file;
  std::string brute_objective;
  int brute_kappa = -1;
  double brute_tau = -1.0;
  brute->add_option("--file", brute_file, "Instance description JSON")
      ->required();
  brute->add_option("--objective", brute_objective,
                    "Expected objective kind (checked against the file)");
  brute->add_option("--kappa", brute_kappa, "Maximize under |X| <= kappa");
  brute->add_option("--tau", brute_tau, "Minimize |X| subject to f >= tau");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (run->parsed()) {
      ExperimentConfig config;
      try {
        config = ExperimentConfig::from_file(config_path);
      } catch (const IoError& e) {
        throw ConfigError(e.what());
      }
      if (!output_dir_override.empty()) config.output_dir = output_dir_override;
      const SummaryStats stats = run_experiment(config);
      json summary;
      summary["output_dir"] = config.output_dir;
      summary["greedy_value"] = stats.greedy_value;
      summary["normalizer_queries"] = stats.normalizer_queries;
      summary["grid_points"] = stats.grid.size();
      summary["algorithms"] = [&] {
        json names = json::array();
        for (const AlgorithmSummary& a : stats.algorithms) names.push_back(a.name);
        return names;
      }();
      out << summary.dump(2) << '\n';
    } else if (bounds->parsed()) {
      out << bounds_report(bargs).dump(2) << '\n';
    } else if (verify->parsed()) {
      const auto oracle = make_oracle_from_file(verify_file);
      const OracleReport report = verify_oracle(*oracle);
      json j;
      j["n"] = oracle->n();
      j["monotone"] = report.monotone;
      j["submodular"] = report.submodular;
      j["worst_violation"] = report.worst_violation;
      out << j.dump(2) << '\n';
    } else if (gen->parsed()) {
      write_vectors_csv(gen_gaussian_points(clusters, points, dim, seed),
                        out_path);
      out << "wrote " << points << " x " << dim << " vectors to " << out_path
          << '\n';
    } else if (brute->parsed()) {
      const auto oracle = make_oracle_from_file(brute_file);
      if (!brute_objective.empty() && oracle->kind() != brute_objective)
        throw ConfigError("brute: file holds a '" + oracle->kind() +
                          "' objective, not '" + brute_objective + "'");
      if ((brute_kappa >= 0) == (brute_tau >= 0.0))
        throw ConfigError("brute: pass exactly one of --kappa, --tau");
      const ExactResult result = brute_kappa >= 0
                                     ? brute_force_sm(*oracle, brute_kappa)
                                     : brute_force_sc(*oracle, brute_tau);
      out << exact_report(result).dump(2) << '\n';
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericError& e) {
    // Out-of-domain parameters are configuration mistakes.
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace paretosub
