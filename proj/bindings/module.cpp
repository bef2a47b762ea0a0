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

#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "paretosub/bounds.hpp"
#include "paretosub/exact_oracle.hpp"
#include "paretosub/harness.hpp"
#include "paretosub/instance_io.hpp"
#include "paretosub/optimizers.hpp"

namespace py = pybind11;
using namespace paretosub;

namespace {

GuaranteeSpec::Algorithm algo_from_name(const std::string& name) {
  using Algorithm = GuaranteeSpec::Algorithm;
  if (name == "po") return Algorithm::kPo;
  if (name == "bpo") return Algorithm::kBpo;
  if (name == "kbpo") return Algorithm::kKbpo;
  if (name == "posc") return Algorithm::kPosc;
  if (name == "bposc") return Algorithm::kBposc;
  if (name == "greedy") return Algorithm::kGreedy;
  if (name == "sg") return Algorithm::kSg;
  throw ConfigError("unknown algorithm '" + name + "'");
}

py::dict summary_to_dict(const SummaryStats& stats) {
  py::dict out;
  out["grid"] = stats.grid;
  out["greedy_value"] = stats.greedy_value;
  out["normalizer_queries"] = stats.normalizer_queries;
  if (stats.sg_final_mean) out["sg_final_mean"] = *stats.sg_final_mean;
  py::dict algorithms;
  for (const AlgorithmSummary& a : stats.algorithms) {
    py::dict entry;
    entry["mean"] = a.mean;
    entry["std"] = a.stddev;
    entry["final_mean"] = a.final_mean;
    entry["crossing_sg_x"] =
        a.crossing_sg_x ? py::cast(*a.crossing_sg_x) : py::none();
    entry["crossing_greedy_x"] =
        a.crossing_greedy_x ? py::cast(*a.crossing_greedy_x) : py::none();
    algorithms[py::str(a.name)] = std::move(entry);
  }
  out["algorithms"] = std::move(algorithms);
  out["kbpo_beta_iterations"] = stats.kbpo_beta_iterations;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Anytime Pareto optimization for submodular maximization";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError",
                                        PyExc_RuntimeError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError",
                                          PyExc_RuntimeError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<SubsetMask>(m, "SubsetMask")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init<int, const std::vector<int>&>(), py::arg("n"),
           py::arg("elements"))
      .def_property_readonly("n", &SubsetMask::n)
      .def_property_readonly("cardinality", &SubsetMask::cardinality)
      .def("test", &SubsetMask::test)
      .def("set", &SubsetMask::set)
      .def("reset", &SubsetMask::reset)
      .def("flip", &SubsetMask::flip)
      .def("elements", &SubsetMask::elements)
      .def("to_hex", &SubsetMask::to_hex)
      .def_static("from_hex", &SubsetMask::from_hex)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__repr__", [](const SubsetMask& mask) {
        std::ostringstream out;
        out << "SubsetMask(n=" << mask.n() << ", {";
        bool first = true;
        for (int e : mask.elements()) {
          if (!first) out << ", ";
          out << e;
          first = false;
        }
        out << "})";
        return out.str();
      });

  py::class_<ObjectiveOracle, std::shared_ptr<ObjectiveOracle>>(
      m, "ObjectiveOracle")
      .def_property_readonly("n", &ObjectiveOracle::n)
      .def("value", &ObjectiveOracle::value)
      .def("peek", &ObjectiveOracle::peek)
      .def("query_count", &ObjectiveOracle::query_count)
      .def("kind", &ObjectiveOracle::kind)
      .def("clone", [](const ObjectiveOracle& oracle) {
        return std::shared_ptr<ObjectiveOracle>(oracle.clone());
      });

  m.def(
      "coverage_oracle",
      [](int num_items, const std::vector<std::vector<int>>& sets,
         const std::vector<double>& weights) {
        return std::shared_ptr<ObjectiveOracle>(std::make_shared<CoverageOracle>(
            std::make_shared<const CoverageInstance>(num_items, sets,
                                                     weights)));
      },
      py::arg("num_items"), py::arg("sets"),
      py::arg("weights") = std::vector<double>{});
  m.def("modular_oracle", [](const std::vector<double>& weights) {
    return std::shared_ptr<ObjectiveOracle>(
        std::make_shared<ModularOracle>(weights));
  });
  m.def("tabular_oracle", [](int n, const std::vector<double>& values) {
    return std::shared_ptr<ObjectiveOracle>(
        std::make_shared<TabularOracle>(n, values));
  });
  m.def("facility_location_oracle", [](const Eigen::MatrixXd& w) {
    return std::shared_ptr<ObjectiveOracle>(
        std::make_shared<FacilityLocationOracle>(
            std::make_shared<const FacilityLocationInstance>(w)));
  });
  m.def("dpp_oracle", [](const Eigen::MatrixXd& kernel) {
    return std::shared_ptr<ObjectiveOracle>(std::make_shared<DppOracle>(
        std::make_shared<const DppInstance>(kernel)));
  });
  m.def(
      "oracle_from_json",
      [](const std::string& text, const std::string& base_dir) {
        return std::shared_ptr<ObjectiveOracle>(
            make_oracle(nlohmann::json::parse(text), base_dir));
      },
      py::arg("text"), py::arg("base_dir") = std::string());

  m.def("gen_gaussian_points", &gen_gaussian_points, py::arg("clusters"),
        py::arg("points"), py::arg("dim"), py::arg("seed"));
  m.def(
      "gaussian_fl_oracle",
      [](int clusters, int points, int dim, std::uint64_t seed) {
        return std::shared_ptr<ObjectiveOracle>(
            std::make_shared<FacilityLocationOracle>(
                std::make_shared<const FacilityLocationInstance>(
                    gen_gaussian_dataset(clusters, points, dim, seed))));
      },
      py::arg("clusters"), py::arg("points"), py::arg("dim"), py::arg("seed"));
  m.def("load_vectors_csv", &load_vectors_csv);
  m.def("write_vectors_csv", &write_vectors_csv);
  m.def(
      "fl_oracle_from_vectors",
      [](const Eigen::MatrixXd& vectors, const std::string& kind,
         double sigma) {
        const SimilaritySpec sim = kind == "rbf"
                                       ? SimilaritySpec::rbf(sigma)
                                       : SimilaritySpec::inner_product();
        return std::shared_ptr<ObjectiveOracle>(
            std::make_shared<FacilityLocationOracle>(
                std::make_shared<const FacilityLocationInstance>(
                    make_fl_from_vectors(vectors, sim))));
      },
      py::arg("vectors"), py::arg("kind") = "rbf", py::arg("sigma") = 1.0);
  m.def(
      "dpp_oracle_from_vectors",
      [](const Eigen::MatrixXd& vectors, const std::string& kind,
         double sigma) {
        const SimilaritySpec sim = kind == "rbf"
                                       ? SimilaritySpec::rbf(sigma)
                                       : SimilaritySpec::inner_product();
        return std::shared_ptr<ObjectiveOracle>(std::make_shared<DppOracle>(
            std::make_shared<const DppInstance>(
                make_dpp_from_vectors(vectors, sim))));
      },
      py::arg("vectors"), py::arg("kind") = "rbf", py::arg("sigma") = 1.0);
  m.def("estimate_gamma", &estimate_gamma);

  py::class_<PoolEntry>(m, "PoolEntry")
      .def(py::init<const SubsetMask&, double>(), py::arg("subset"),
           py::arg("value"))
      .def_readonly("subset", &PoolEntry::subset)
      .def_readonly("value", &PoolEntry::value)
      .def_property_readonly("cardinality", &PoolEntry::cardinality);

  m.def("precedes", &precedes);
  m.def("dominates", &dominates);
  m.def("equivalent", &equivalent);

  py::class_<ParetoPool>(m, "ParetoPool")
      .def(py::init<int, int>(), py::arg("n"), py::arg("capacity"))
      .def_property_readonly("capacity", &ParetoPool::capacity)
      .def_property_readonly("n", &ParetoPool::n)
      .def("size", &ParetoPool::size)
      .def("has", &ParetoPool::has)
      .def("get_by_cardinality", &ParetoPool::get_by_cardinality)
      .def("insert",
           [](ParetoPool& pool, const PoolEntry& entry) {
             return pool.insert(entry) == InsertOutcome::kAdded;
           })
      .def("best_under", &ParetoPool::best_under)
      .def("entries", &ParetoPool::entries)
      .def("present_cardinalities", &ParetoPool::present_cardinalities)
      .def("to_json", &ParetoPool::to_json_string)
      .def_static("from_json", &ParetoPool::from_json_string);

  py::class_<TrajectorySample>(m, "TrajectorySample")
      .def_readonly("query_count", &TrajectorySample::query_count)
      .def_readonly("best", &TrajectorySample::best);
  py::class_<TrajectoryEvent>(m, "TrajectoryEvent")
      .def_readonly("iteration", &TrajectoryEvent::iteration)
      .def_readonly("name", &TrajectoryEvent::name);
  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("caps", &Trajectory::caps)
      .def_readonly("samples", &Trajectory::samples)
      .def_readonly("events", &Trajectory::events);

  py::class_<RngStream>(m, "RngStream")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("next_u64", &RngStream::next_u64)
      .def("next_double", &RngStream::next_double)
      .def("uniform_int", &RngStream::uniform_int);

  m.def("mutate", &mutate, py::arg("subset"), py::arg("mutate_stream"));

  py::class_<BiasState>(m, "BiasState")
      .def_readonly("num_pointers", &BiasState::num_pointers)
      .def_readonly("beta", &BiasState::beta)
      .def_readonly("ell", &BiasState::ell)
      .def_readonly("h", &BiasState::h)
      .def_readonly("selections", &BiasState::selections);
  py::class_<KBiasState>(m, "KBiasState")
      .def_readonly("beta", &KBiasState::beta)
      .def_readonly("ell", &KBiasState::ell)
      .def_readonly("h", &KBiasState::h)
      .def_readonly("selections", &KBiasState::selections);

  py::class_<PoResult>(m, "PoResult")
      .def_readonly("pool", &PoResult::pool)
      .def_readonly("trajectory", &PoResult::trajectory);
  py::class_<BpoResult>(m, "BpoResult")
      .def_readonly("pool", &BpoResult::pool)
      .def_readonly("trajectory", &BpoResult::trajectory)
      .def_readonly("bias", &BpoResult::bias);
  py::class_<KbpoResult>(m, "KbpoResult")
      .def_readonly("pool", &KbpoResult::pool)
      .def_readonly("trajectory", &KbpoResult::trajectory)
      .def_readonly("bias", &KbpoResult::bias);
  py::class_<BposcResult>(m, "BposcResult")
      .def_readonly("pool", &BposcResult::pool)
      .def_readonly("trajectory", &BposcResult::trajectory)
      .def_readonly("bias", &BposcResult::bias);
  py::class_<GreedyResult>(m, "GreedyResult")
      .def_readonly("subset", &GreedyResult::subset)
      .def_readonly("value", &GreedyResult::value)
      .def_readonly("trajectory", &GreedyResult::trajectory);
  py::class_<Solution>(m, "Solution")
      .def_readonly("subset", &Solution::subset)
      .def_readonly("value", &Solution::value);
  py::class_<ScExtract>(m, "ScExtract")
      .def_readonly("entry", &ScExtract::entry)
      .def_readonly("feasible", &ScExtract::feasible);

  const auto make_track = [](const std::vector<int>& caps,
                             std::uint64_t sample_every) {
    TrackOptions track;
    track.caps = caps;
    track.sample_every = sample_every;
    return track;
  };

  m.def(
      "run_po",
      [make_track](const ObjectiveOracle& oracle, int capacity,
                   std::uint64_t t, std::uint64_t seed,
                   const std::vector<int>& caps, std::uint64_t sample_every) {
        RngStreams rng(seed);
        return run_po(oracle, capacity, t, rng,
                      make_track(caps, sample_every));
      },
      py::arg("oracle"), py::arg("capacity"), py::arg("t"), py::arg("seed"),
      py::arg("caps") = std::vector<int>{}, py::arg("sample_every") = 0);
  m.def(
      "run_bpo",
      [make_track](const ObjectiveOracle& oracle, int capacity,
                   std::uint64_t t, double p, double epsilon, double xi,
                   std::uint64_t seed, const std::vector<int>& caps,
                   std::uint64_t sample_every) {
        RngStreams rng(seed);
        return run_bpo(oracle, capacity, t, p, epsilon, xi, rng,
                       make_track(caps, sample_every));
      },
      py::arg("oracle"), py::arg("capacity"), py::arg("t"), py::arg("p"),
      py::arg("epsilon"), py::arg("xi"), py::arg("seed"),
      py::arg("caps") = std::vector<int>{}, py::arg("sample_every") = 0);
  m.def(
      "run_kbpo",
      [make_track](const ObjectiveOracle& oracle, int kappa, int capacity,
                   std::uint64_t t, double p, double epsilon,
                   std::uint64_t seed, const std::vector<int>& caps,
                   std::uint64_t sample_every) {
        RngStreams rng(seed);
        return run_kbpo(oracle, kappa, capacity, t, p, epsilon, rng,
                        make_track(caps, sample_every));
      },
      py::arg("oracle"), py::arg("kappa"), py::arg("capacity"), py::arg("t"),
      py::arg("p"), py::arg("epsilon"), py::arg("seed"),
      py::arg("caps") = std::vector<int>{}, py::arg("sample_every") = 0);
  m.def(
      "run_bposc",
      [make_track](const ObjectiveOracle& oracle, double tau, int capacity,
                   std::uint64_t t, double p, double epsilon, double xi,
                   std::uint64_t seed, const std::vector<int>& caps,
                   std::uint64_t sample_every) {
        RngStreams rng(seed);
        return run_bposc(oracle, tau, capacity, t, p, epsilon, xi, rng,
                         make_track(caps, sample_every));
      },
      py::arg("oracle"), py::arg("tau"), py::arg("capacity"), py::arg("t"),
      py::arg("p"), py::arg("epsilon"), py::arg("xi"), py::arg("seed"),
      py::arg("caps") = std::vector<int>{}, py::arg("sample_every") = 0);
  m.def("run_greedy", &run_greedy, py::arg("oracle"), py::arg("kappa"));
  m.def("sg_sample_size", &sg_sample_size);
  m.def(
      "run_stochastic_greedy",
      [](const ObjectiveOracle& oracle, int kappa, double epsilon,
         std::uint64_t seed) {
        RngStreams rng(seed);
        return run_stochastic_greedy(oracle, kappa, epsilon, rng.sg);
      },
      py::arg("oracle"), py::arg("kappa"), py::arg("epsilon"),
      py::arg("seed"));
  m.def("run_greedy_cover", &run_greedy_cover, py::arg("oracle"),
        py::arg("tau"));
  m.def("extract_sm", &extract_sm, py::arg("pool"), py::arg("kappa"));
  m.def("extract_sc", &extract_sc, py::arg("pool"), py::arg("tau"),
        py::arg("cap"));

  m.def("t_bound_po", &t_bound_po, py::arg("n"), py::arg("capacity"),
        py::arg("epsilon"));
  m.def("t_bound_bpo", &t_bound_bpo, py::arg("n"), py::arg("capacity"),
        py::arg("p"), py::arg("epsilon"), py::arg("xi"));
  m.def("t_bound_kbpo", &t_bound_kbpo, py::arg("n"), py::arg("p"),
        py::arg("epsilon"));
  m.def("t_bound_posc", &t_bound_posc, py::arg("n"), py::arg("delta"));
  m.def("t_bound_bposc", &t_bound_bposc, py::arg("n"), py::arg("capacity"),
        py::arg("p"), py::arg("epsilon"), py::arg("xi"), py::arg("delta"));
  m.def("m_value", &m_value, py::arg("capacity"), py::arg("xi"));
  m.def("h_value", &h_value, py::arg("j"), py::arg("epsilon"), py::arg("xi"));
  m.def("q_index", &q_index, py::arg("capacity"), py::arg("xi"),
        py::arg("size"));
  m.def(
      "guarantee_ratio",
      [](const std::string& algorithm, int n, double p, double epsilon,
         double delta, double gamma) {
        GuaranteeSpec spec;
        spec.algorithm = algo_from_name(algorithm);
        spec.n = n;
        spec.p = p;
        spec.epsilon = epsilon;
        spec.delta = delta;
        spec.gamma = gamma;
        return guarantee_ratio(spec);
      },
      py::arg("algorithm"), py::arg("n") = 0, py::arg("p") = 0.5,
      py::arg("epsilon") = 0.2, py::arg("delta") = 0.5, py::arg("gamma") = 1.0);
  m.def("chernoff_tail", &chernoff_tail, py::arg("t"), py::arg("rho"),
        py::arg("eta"));

  py::class_<ExactResult>(m, "ExactResult")
      .def_readonly("opt_value", &ExactResult::opt_value)
      .def_readonly("opt_set", &ExactResult::opt_set)
      .def_readonly("enumerated", &ExactResult::enumerated);
  py::class_<OracleReport>(m, "OracleReport")
      .def_readonly("monotone", &OracleReport::monotone)
      .def_readonly("submodular", &OracleReport::submodular)
      .def_readonly("worst_violation", &OracleReport::worst_violation);
  m.def("brute_force_sm", &brute_force_sm, py::arg("oracle"),
        py::arg("kappa"));
  m.def("brute_force_sc", &brute_force_sc, py::arg("oracle"), py::arg("tau"));
  m.def("verify_oracle", &verify_oracle, py::arg("oracle"));

  m.def(
      "run_experiment",
      [](const std::string& config_json, const std::string& base_dir) {
        const ExperimentConfig config = ExperimentConfig::from_json(
            nlohmann::json::parse(config_json), base_dir);
        return summary_to_dict(run_experiment(config));
      },
      py::arg("config_json"), py::arg("base_dir") = std::string());
  m.def("run_experiment_file", [](const std::string& path) {
    return summary_to_dict(run_experiment(ExperimentConfig::from_file(path)));
  });

#ifdef PARETOSUB_VERSION
  m.attr("__version__") = PARETOSUB_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
