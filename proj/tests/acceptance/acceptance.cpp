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
// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// statistical criteria run fixed seed sets and compare the sample mean
// against the guarantee minus two standard errors.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <numbers>
#include <vector>

#include "paretosub/bounds.hpp"
#include "paretosub/exact_oracle.hpp"
#include "paretosub/harness.hpp"
#include "paretosub/instance_io.hpp"
#include "paretosub/optimizers.hpp"

using namespace paretosub;

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void report(int id, const char* name, bool pass, double seconds) {
  std::printf("[%s] criterion %2d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", id,
              name, seconds);
  std::fflush(stdout);
}

struct MeanStats {
  double mean = 0.0;
  double stderr_of_mean = 0.0;
};

MeanStats mean_stats(const std::vector<double>& values) {
  const auto count = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / count;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double stddev = count > 1 ? std::sqrt(ss / (count - 1.0)) : 0.0;
  return {mean, stddev / std::sqrt(count)};
}

std::shared_ptr<CoverageOracle> random_coverage(RngStream& rng, int n,
                                                int items) {
  std::vector<std::vector<int>> sets;
  for (int i = 0; i < n; ++i) {
    std::vector<int> s;
    for (int item = 0; item < items; ++item)
      if (rng.next_double() < 0.3) s.push_back(item);
    if (s.empty()) s.push_back(static_cast<int>(rng.uniform_int(items)));
    sets.push_back(std::move(s));
  }
  return std::make_shared<CoverageOracle>(
      std::make_shared<const CoverageInstance>(items, std::move(sets)));
}

// The two desk-scale instances shared by the expectation criteria.
std::shared_ptr<ObjectiveOracle> modular10() {
  return std::make_shared<ModularOracle>(
      std::vector<double>{10, 9, 8, 7, 6, 5, 4, 3, 2, 1});
}

std::shared_ptr<CoverageOracle> coverage10() {
  RngStream rng(4811);
  return random_coverage(rng, 10, 25);
}

bool pools_identical(const ParetoPool& a, const ParetoPool& b) {
  const auto ea = a.entries();
  const auto eb = b.entries();
  if (ea.size() != eb.size()) return false;
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (!(ea[i].subset == eb[i].subset)) return false;
    if (std::memcmp(&ea[i].value, &eb[i].value, sizeof(double)) != 0)
      return false;
  }
  return true;
}

std::int64_t ulp_distance(double a, double b) {
  std::int64_t ia, ib;
  std::memcpy(&ia, &a, sizeof a);
  std::memcpy(&ib, &b, sizeof b);
  return ia > ib ? ia - ib : ib - ia;
}

}  // namespace

TEST_CASE("criterion 1: pool invariant fuzz") {
  Stopwatch timer;
  RngStream rng(0xF00DF00DULL);
  std::uint64_t violations = 0;
  const int sequences = 100000;
  for (int seq = 0; seq < sequences; ++seq) {
    const int n = 1 + static_cast<int>(rng.uniform_int(16));
    const int capacity = 1 + static_cast<int>(rng.uniform_int(n + 1));
    ParetoPool pool(n, capacity);
    std::vector<double> best_before(static_cast<std::size_t>(capacity), 0.0);
    for (int step = 0; step < 30; ++step) {
      SubsetMask mask(n);
      for (int u = 0; u < n; ++u)
        if (rng.next_double() < 0.35) mask.set(u);
      const double value = 0.25 * static_cast<double>(rng.uniform_int(24));
      pool.insert(PoolEntry{mask, value});

      const std::vector<PoolEntry> entries = pool.entries();
      if (entries.front().cardinality() != 0) ++violations;
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].cardinality() >= capacity) ++violations;
        if (i + 1 < entries.size()) {
          if (entries[i].cardinality() >= entries[i + 1].cardinality())
            ++violations;
          if (!(entries[i].value < entries[i + 1].value)) ++violations;
        }
        for (std::size_t j = 0; j < entries.size(); ++j) {
          if (i != j && dominates(entries[j], entries[i])) ++violations;
        }
      }
      for (int cap = 0; cap < capacity; ++cap) {
        const double best = pool.best_under(cap).value;
        if (best < best_before[static_cast<std::size_t>(cap)]) ++violations;
        best_before[static_cast<std::size_t>(cap)] = best;
      }
    }
  }
  const double elapsed = timer.seconds();
  const bool pass = violations == 0 && elapsed < 30.0;
  report(1, "pool invariant fuzz, 1e5 insert sequences", pass, elapsed);
  CHECK(violations == 0);
  CHECK(elapsed < 30.0);
}

TEST_CASE("criterion 2: greedy ratio against the exact optimum") {
  Stopwatch timer;
  RngStream rng(0xBEEF2ULL);
  const double bound = 1.0 - 1.0 / std::numbers::e;
  int failures = 0;
  for (int round = 0; round < 100; ++round) {
    const int n = 4 + static_cast<int>(rng.uniform_int(9));  // 4..12
    const int kappa = 1 + static_cast<int>(rng.uniform_int(4));
    const auto oracle = random_coverage(rng, n, 16);
    const double opt = brute_force_sm(*oracle, kappa).opt_value;
    const GreedyResult greedy = run_greedy(*oracle->clone(), kappa);
    if (!(greedy.value >= bound * opt)) ++failures;  // exact, no tolerance
  }
  const double elapsed = timer.seconds();
  const bool pass = failures == 0 && elapsed < 60.0;
  report(2, "greedy >= (1-1/e) * OPT on 100 exact instances", pass, elapsed);
  CHECK(failures == 0);
  CHECK(elapsed < 60.0);
}

TEST_CASE("criterion 3: plain Pareto optimization expectation at small scale") {
  Stopwatch timer;
  const int kappa = 3, capacity = 4;
  const double epsilon = 0.2;
  const std::uint64_t t = t_bound_po(10, capacity, epsilon);
  const double ratio = (1.0 - epsilon) * (1.0 - 1.0 / std::numbers::e);

  bool pass = true;
  const std::shared_ptr<ObjectiveOracle> instances[] = {modular10(),
                                                        coverage10()};
  for (const auto& base : instances) {
    const double opt = brute_force_sm(*base, kappa).opt_value;
    std::vector<double> bests;
    for (int seed = 0; seed < 200; ++seed) {
      RngStreams rng(2000 + seed);
      const auto oracle = base->clone();
      const PoResult r = run_po(*oracle, capacity, t, rng);
      bests.push_back(r.pool.best_under(kappa).value);
    }
    const MeanStats stats = mean_stats(bests);
    const double target = ratio * opt - 2.0 * stats.stderr_of_mean;
    INFO("mean ", stats.mean, " target ", target, " opt ", opt);
    CHECK(stats.mean >= target);
    pass = pass && stats.mean >= target;
  }
  const double elapsed = timer.seconds();
  pass = pass && elapsed < 300.0;
  report(3, "PO mean >= (1-eps)(1-1/e) OPT - 2 SE at T = t_bound_po", pass,
         elapsed);
  CHECK(elapsed < 300.0);
}

TEST_CASE("criterion 4: single-pointer biased variant expectation") {
  Stopwatch timer;
  const int kappa = 3, capacity = 4;
  const double p = 0.5, epsilon = 0.2;
  const std::uint64_t t = t_bound_kbpo(10, p, epsilon);
  const double ratio =
      (1.0 - epsilon) * (1.0 - 1.0 / std::numbers::e - epsilon);

  bool pass = true;
  const std::shared_ptr<ObjectiveOracle> instances[] = {modular10(),
                                                        coverage10()};
  for (const auto& base : instances) {
    const double opt = brute_force_sm(*base, kappa).opt_value;
    std::vector<double> bests;
    for (int seed = 0; seed < 200; ++seed) {
      RngStreams rng(7000 + seed);
      const auto oracle = base->clone();
      const KbpoResult r =
          run_kbpo(*oracle, kappa, capacity, t, p, epsilon, rng);
      bests.push_back(r.pool.best_under(kappa).value);
    }
    const MeanStats stats = mean_stats(bests);
    const double target = ratio * opt - 2.0 * stats.stderr_of_mean;
    INFO("mean ", stats.mean, " target ", target, " opt ", opt);
    CHECK(stats.mean >= target);
    pass = pass && stats.mean >= target;
  }
  const double elapsed = timer.seconds();
  pass = pass && elapsed < 120.0;
  report(4, "kappa-biased mean >= (1-eps)(1-1/e-eps) OPT - 2 SE", pass,
         elapsed);
  CHECK(elapsed < 120.0);
}

TEST_CASE("criterion 5: stochastic greedy expectation") {
  Stopwatch timer;
  const int kappa = 3;
  const double epsilon = 0.2;
  const auto base = modular10();
  const double opt = brute_force_sm(*base, kappa).opt_value;
  std::vector<double> values;
  for (int seed = 0; seed < 500; ++seed) {
    RngStreams rng(11000 + seed);
    const auto oracle = base->clone();
    values.push_back(
        run_stochastic_greedy(*oracle, kappa, epsilon, rng.sg).value);
  }
  const MeanStats stats = mean_stats(values);
  const double target = (1.0 - 1.0 / std::numbers::e - epsilon) * opt -
                        2.0 * stats.stderr_of_mean;
  const double elapsed = timer.seconds();
  const bool pass = stats.mean >= target;
  report(5, "SG mean >= (1-1/e-eps) OPT - 2 SE over 500 seeds", pass,
         elapsed);
  INFO("mean ", stats.mean, " target ", target);
  CHECK(pass);
}

TEST_CASE("criterion 6: p = 0 biased run replays the plain run") {
  Stopwatch timer;
  RngStream meta(0xABCD6ULL);
  int mismatches = 0;
  for (int config = 0; config < 50; ++config) {
    const int n = 2 + static_cast<int>(meta.uniform_int(14));
    const int capacity = 1 + static_cast<int>(meta.uniform_int(n + 1));
    const std::uint64_t t = meta.uniform_int(400);
    const std::uint64_t seed = meta.next_u64();
    const double epsilon = 0.1 + 0.8 * meta.next_double();
    const double xi = 0.1 + 0.8 * meta.next_double();
    const auto oracle = random_coverage(meta, n, 2 * n);

    RngStreams rng_po(seed), rng_bpo(seed);
    const auto oracle_po = oracle->clone();
    const auto oracle_bpo = oracle->clone();
    const PoResult po = run_po(*oracle_po, capacity, t, rng_po);
    const BpoResult bpo =
        run_bpo(*oracle_bpo, capacity, t, 0.0, epsilon, xi, rng_bpo);
    if (!pools_identical(po.pool, bpo.pool) ||
        oracle_po->query_count() != oracle_bpo->query_count())
      ++mismatches;
  }
  const double elapsed = timer.seconds();
  const bool pass = mismatches == 0;
  report(6, "p=0 equivalence: 50 random configs, bit-identical pools", pass,
         elapsed);
  CHECK(mismatches == 0);
}

TEST_CASE("criterion 7: mutation statistics") {
  Stopwatch timer;
  const int trials = 1000000;
  bool pass = true;
  RngStream stream(0x5EED7ULL);
  for (const int n : {5, 10, 50}) {
    const SubsetMask base(n);
    std::vector<std::int64_t> flips(static_cast<std::size_t>(n), 0);
    std::int64_t single_flip_events = 0;
    for (int trial = 0; trial < trials; ++trial) {
      const SubsetMask mutant = mutate(base, stream);
      if (mutant.cardinality() == 1) ++single_flip_events;
      for (int u : mutant.elements()) ++flips[static_cast<std::size_t>(u)];
    }
    const double rate = 1.0 / n;
    const double sigma = std::sqrt(rate * (1.0 - rate) / trials);
    for (int u = 0; u < n; ++u) {
      const double observed =
          static_cast<double>(flips[static_cast<std::size_t>(u)]) / trials;
      if (std::abs(observed - rate) > 3.0 * sigma) pass = false;
    }
    const double single_rate = std::pow(1.0 - rate, n - 1);
    const double single_sigma =
        std::sqrt(single_rate * (1.0 - single_rate) / trials);
    const double observed_single =
        static_cast<double>(single_flip_events) / trials;
    if (std::abs(observed_single - single_rate) > 3.0 * single_sigma)
      pass = false;
    INFO("n ", n, " single rate ", observed_single, " expected ",
         single_rate);
  }
  const double elapsed = timer.seconds();
  report(7, "flip rate within 3 sigma of 1/n; single-flip rate matches",
         pass, elapsed);
  CHECK(pass);
}

TEST_CASE("criterion 8: cover guarantee of plain Pareto optimization") {
  Stopwatch timer;
  const auto base = coverage10();
  SubsetMask universe(10);
  for (int u = 0; u < 10; ++u) universe.set(u);
  const double tau = 0.8 * base->peek(universe);
  const double delta = 0.5;
  const int cardinality_opt = brute_force_sc(*base, tau).opt_set.cardinality();
  const int cap =
      static_cast<int>(std::ceil(std::log(1.0 / delta) * cardinality_opt));
  const std::uint64_t t = t_bound_posc(10, delta);
  const int capacity = 11;  // n + 1

  std::vector<double> values;
  for (int seed = 0; seed < 200; ++seed) {
    RngStreams rng(23000 + seed);
    const auto oracle = base->clone();
    const PoResult r = run_po(*oracle, capacity, t, rng);
    values.push_back(r.pool.best_under(cap).value);
  }
  const MeanStats stats = mean_stats(values);
  const double target =
      (1.0 - delta) * (1.0 - delta) * tau - 2.0 * stats.stderr_of_mean;
  const double elapsed = timer.seconds();
  const bool pass = stats.mean >= target;
  report(8,
         "PO cover: mean best under ceil(ln(1/delta)|A*|) >= (1-delta)^2 tau",
         pass, elapsed);
  INFO("mean ", stats.mean, " target ", target, " tau ", tau, " |A*| ",
       cardinality_opt, " cap ", cap);
  CHECK(pass);
}

TEST_CASE("criterion 9: bound calculators against high-precision values") {
  Stopwatch timer;
  bool pass = true;
  const auto expect_u64 = [&](std::uint64_t actual, std::uint64_t frozen) {
    if (actual != frozen) pass = false;
    CHECK(actual == frozen);
  };
  const auto expect_ulp = [&](double actual, double frozen) {
    if (ulp_distance(actual, frozen) > 1) pass = false;
    CHECK(ulp_distance(actual, frozen) <= 1);
  };

  expect_u64(t_bound_po(10, 5, 0.5), 754);
  expect_u64(t_bound_po(1, 1, 0.5), 16);
  expect_u64(t_bound_po(10, 5, std::exp(-0.25)), 272);
  expect_u64(t_bound_bpo(100, 100, 0.5, 0.1, 0.5), 17526);
  expect_u64(t_bound_kbpo(100, 0.5, 0.1), 2504);
  expect_u64(t_bound_kbpo(3, 1.0, 0.99), 9);
  expect_u64(t_bound_kbpo(1, 1.0, std::exp(-1.0)), 6);
  expect_u64(t_bound_posc(10, 0.5), 1508);
  expect_u64(t_bound_posc(1, std::exp(-1.0)), 22);
  expect_u64(t_bound_posc(10, 1.0), 0);
  expect_u64(t_bound_bposc(10, 10, 0.5, 0.2, 0.5, 0.5), 1213);
  expect_u64(t_bound_bposc(10, 10, 0.5, 0.2, 0.5, 1.0), 401);
  expect_u64(static_cast<std::uint64_t>(m_value(100, 0.5)), 7);
  expect_u64(static_cast<std::uint64_t>(q_index(100, 0.5, 10)), 4);
  expect_ulp(h_value(1, std::exp(-1.0), 0.5), 5.43656365691809);

  GuaranteeSpec po_spec;
  po_spec.algorithm = GuaranteeSpec::Algorithm::kPo;
  po_spec.epsilon = 0.1;
  expect_ulp(guarantee_ratio(po_spec), 0.5689085029457019);
  GuaranteeSpec bpo_spec = po_spec;
  bpo_spec.algorithm = GuaranteeSpec::Algorithm::kBpo;
  expect_ulp(guarantee_ratio(bpo_spec), 0.4789085029457019);
  GuaranteeSpec gamma_spec = po_spec;
  gamma_spec.gamma = 1.0;
  if (guarantee_ratio(gamma_spec) != guarantee_ratio(po_spec)) pass = false;

  expect_ulp(chernoff_tail(32, 0.25, 0.5), 0.36787944117144233);
  expect_ulp(chernoff_tail(800, std::log(10.0) / 100.0, 0.5),
             0.09999999999999998);
  if (chernoff_tail(100, 0.0, 0.5) != 1.0) pass = false;

  // Monotonicity over a 1e4-point random parameter grid.
  RngStream rng(0x9999ULL);
  for (int i = 0; i < 10000; ++i) {
    const int n = 2 + static_cast<int>(rng.uniform_int(500));
    const int capacity = 1 + static_cast<int>(rng.uniform_int(n + 1));
    const double eps = 0.02 + 0.95 * rng.next_double();
    const double p = 0.02 + 0.98 * rng.next_double();
    const double xi = 0.02 + 0.95 * rng.next_double();
    const double delta = 0.02 + 0.95 * rng.next_double();
    bool ok = true;
    ok = ok && t_bound_po(n + 1, capacity, eps) >= t_bound_po(n, capacity, eps);
    if (capacity <= n)
      ok = ok &&
           t_bound_po(n, capacity + 1, eps) >= t_bound_po(n, capacity, eps);
    ok = ok &&
         t_bound_po(n, capacity, eps * 0.9) >= t_bound_po(n, capacity, eps);
    ok = ok && t_bound_bpo(n + 1, capacity, p, eps, xi) >=
                   t_bound_bpo(n, capacity, p, eps, xi);
    ok = ok && t_bound_bpo(n, capacity, p, eps * 0.9, xi) >=
                   t_bound_bpo(n, capacity, p, eps, xi);
    ok = ok && t_bound_bpo(n, capacity, p, eps, xi) >=
                   t_bound_bpo(n, capacity, std::min(1.0, p * 1.2), eps, xi);
    ok = ok && t_bound_kbpo(n + 1, p, eps) >= t_bound_kbpo(n, p, eps);
    ok = ok && t_bound_kbpo(n, p, eps * 0.9) >= t_bound_kbpo(n, p, eps);
    ok = ok && t_bound_kbpo(n, p, eps) >=
                   t_bound_kbpo(n, std::min(1.0, p * 1.2), eps);
    ok = ok && t_bound_posc(n + 1, delta) >= t_bound_posc(n, delta);
    ok = ok && t_bound_posc(n, delta * 0.9) >= t_bound_posc(n, delta);
    ok = ok && t_bound_bposc(n + 1, capacity, p, eps, xi, delta) >=
                   t_bound_bposc(n, capacity, p, eps, xi, delta);
    ok = ok && t_bound_bposc(n, capacity, p, eps, xi, delta * 0.9) >=
                   t_bound_bposc(n, capacity, p, eps, xi, delta);
    const double tail = chernoff_tail(n, p, 0.5);
    ok = ok && tail > 0.0 && tail <= 1.0;
    GuaranteeSpec s;
    s.algorithm = GuaranteeSpec::Algorithm::kPo;
    s.epsilon = eps;
    const double ratio = guarantee_ratio(s);
    ok = ok && ratio > 0.0 && ratio < 1.0;
    if (!ok) {
      pass = false;
      CHECK(ok);
      break;
    }
  }
  const double elapsed = timer.seconds();
  report(9, "bound calculators: frozen values and monotonicity grid", pass,
         elapsed);
  CHECK(pass);
}

TEST_CASE("criterion 10: qualitative benchmark reproduction") {
  Stopwatch timer;
  const auto dir =
      std::filesystem::temp_directory_path() / "paretosub_acceptance_fig";
  std::filesystem::remove_all(dir);

  nlohmann::json cfg;
  cfg["objective"] = {{"kind", "facility_location"},
                      {"generator",
                       {{"clusters", 10},
                        {"points", 100},
                        {"dim", 10},
                        {"seed", 20260810}}}};
  cfg["kappa"] = 10;
  cfg["repetitions"] = 50;
  cfg["seed"] = 31337;
  cfg["sample_every"] = 25;
  cfg["output_dir"] = dir.string();
  cfg["algorithms"] = nlohmann::json::array(
      {{{"name", "greedy"}},
       {{"name", "sg"}, {"epsilon", 0.2}},
       {{"name", "po"}, {"budget", 3000}, {"P", 20}},
       {{"name", "kbpo"},
        {"budget", 3000},
        {"P", 20},
        {"p", 0.5},
        {"epsilon", 0.2}}});

  const SummaryStats stats =
      run_experiment(ExperimentConfig::from_json(cfg, ""));

  const AlgorithmSummary* po = nullptr;
  const AlgorithmSummary* kbpo = nullptr;
  for (const AlgorithmSummary& a : stats.algorithms) {
    if (a.name == "po") po = &a;
    if (a.name == "kbpo") kbpo = &a;
  }
  REQUIRE(po != nullptr);
  REQUIRE(kbpo != nullptr);

  bool pass = true;
  if (!po->crossing_sg_x || *po->crossing_sg_x > 3.0) pass = false;
  if (!kbpo->crossing_sg_x) pass = false;
  // Same query normalizer, so the raw-query comparison is the x comparison.
  if (pass && !(*kbpo->crossing_sg_x < *po->crossing_sg_x)) pass = false;

  if (po->crossing_sg_x)
    std::printf("    po crosses the SG final value at x = %.3f\n",
                *po->crossing_sg_x);
  if (kbpo->crossing_sg_x)
    std::printf("    kbpo crosses the SG final value at x = %.3f\n",
                *kbpo->crossing_sg_x);

  const double elapsed = timer.seconds();
  pass = pass && elapsed < 900.0;
  report(10,
         "PO crosses the SG final value by x <= 3; the biased variant "
         "crosses first",
         pass, elapsed);
  CHECK(pass);
  std::filesystem::remove_all(dir);
}

TEST_CASE("criterion 11: CSV ingestion validated on synthetic vectors") {
  Stopwatch timer;
  const auto path =
      std::filesystem::temp_directory_path() / "paretosub_synth.csv";
  const Eigen::MatrixXd points = gen_gaussian_points(3, 30, 5, 99);
  write_vectors_csv(points, path.string());
  const Eigen::MatrixXd loaded = load_vectors_csv(path.string());

  bool pass = loaded.rows() == points.rows() && loaded.cols() == points.cols();
  pass = pass && (loaded.array() == points.array()).all();

  const FacilityLocationInstance from_memory =
      make_fl_from_vectors(points, SimilaritySpec::rbf(1.0));
  const FacilityLocationInstance from_disk =
      make_fl_from_vectors(loaded, SimilaritySpec::rbf(1.0));
  pass = pass && (from_memory.similarity.array() ==
                  from_disk.similarity.array())
                     .all();

  const DppInstance kernel =
      make_dpp_from_vectors(loaded, SimilaritySpec::inner_product());
  DppOracle dpp(std::make_shared<const DppInstance>(kernel));
  const double value = dpp.value(SubsetMask(30, {0, 7, 19}));
  pass = pass && value >= 0.0 && std::isfinite(value);

  const double elapsed = timer.seconds();
  report(11,
         "full-scale image benchmark not reproduced by design; the CSV "
         "ingestion path is validated on synthetic vectors",
         pass, elapsed);
  CHECK(pass);
  std::filesystem::remove(path);
}
