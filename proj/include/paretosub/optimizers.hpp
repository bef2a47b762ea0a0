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
// The anytime Pareto optimizers and the greedy baselines.
//
// Draw order is part of the contract: each iteration consumes one
// select-stream draw, then one coin-stream draw (biased variants), then a
// bias-stream draw on heads, then exactly n mutate-stream draws when an
// entry is mutated. Streams are only ever consumed by their role, so a
// p = 0 biased run replays the plain run draw-for-draw.
//
// A run is strictly sequential and owns its pool and streams; independent
// runs may execute concurrently on cloned oracle handles.

#ifndef PARETOSUB_OPTIMIZERS_HPP_
#define PARETOSUB_OPTIMIZERS_HPP_

#include <cstdint>
#include <vector>

#include "paretosub/objectives.hpp"
#include "paretosub/pareto_pool.hpp"
#include "paretosub/rng.hpp"
#include "paretosub/trajectory.hpp"

namespace paretosub {

// Trajectory sampling: a sample is taken before the first iteration, at
// every multiple of `sample_every` queries (when nonzero), at named events,
// and after the last iteration.
struct TrackOptions {
  std::vector<int> caps;             // empty: track best under P-1
  std::uint64_t sample_every = 0;
};

// Bias bookkeeping of the multi-pointer variants. For pointer j (1-based in
// the schedule formulas, index j-1 here), beta advances after ceil(H_j)
// selections of j, where H_j = e ln(1/eps) / xi^j. `selections` counts every
// ell increment of the run, so selections[j] = beta[j]*ceil(H_j) + ell[j]
// whenever advancement is ungated.
struct BiasState {
  int num_pointers = 0;
  std::vector<std::uint64_t> beta;
  std::vector<std::uint64_t> ell;
  std::vector<double> h;
  std::vector<std::uint64_t> selections;
};

// Single-pointer bias bookkeeping with H = e n ln(1/eps) / kappa.
struct KBiasState {
  std::uint64_t beta = 0;
  std::uint64_t ell = 0;
  double h = 0.0;
  std::uint64_t selections = 0;
};

struct PoResult {
  ParetoPool pool;
  Trajectory trajectory;
};

struct BpoResult {
  ParetoPool pool;
  Trajectory trajectory;
  BiasState bias;
};

struct KbpoResult {
  ParetoPool pool;
  Trajectory trajectory;
  KBiasState bias;
};

struct BposcResult {
  ParetoPool pool;
  Trajectory trajectory;
  BiasState bias;
};

struct GreedyResult {
  SubsetMask subset;
  double value = 0.0;
  Trajectory trajectory;
};

struct Solution {
  SubsetMask subset;
  double value = 0.0;
};

struct ScExtract {
  PoolEntry entry;
  bool feasible = false;
};

// Independent membership flip of every element with probability exactly 1/n;
// consumes exactly n mutate-stream draws and leaves the input untouched.
SubsetMask mutate(const SubsetMask& b, RngStream& mutate_stream);

// Plain Pareto optimization: T iterations, each selecting a uniform slot in
// {0..P-1}, mutating the entry there if present, and inserting the mutant
// unless it is too large or weakly dominated. At most one query per
// iteration; mutants of cardinality >= P are discarded before querying.
PoResult run_po(const ObjectiveOracle& oracle, int capacity, std::uint64_t t,
                RngStreams& rng, const TrackOptions& track = {});

// Biased selection over ceil(ln P / ln(1/xi)) pointers: on a p-coin heads,
// pointer j is drawn uniformly and the mutation target becomes the best
// entry of cardinality <= beta_j. With p = 0 this is run_po draw-for-draw.
BpoResult run_bpo(const ObjectiveOracle& oracle, int capacity,
                  std::uint64_t t, double p, double epsilon, double xi,
                  RngStreams& rng, const TrackOptions& track = {});

// Single bias pointer for a known cardinality target; emits the event
// "beta_reached_kappa" when the pointer first reaches kappa.
KbpoResult run_kbpo(const ObjectiveOracle& oracle, int kappa, int capacity,
                    std::uint64_t t, double p, double epsilon,
                    RngStreams& rng, const TrackOptions& track = {});

// Cover variant: heads selects the entry at beta^j for a uniform pointer j,
// tails selects uniformly among current pool entries. beta^j advances once
// ceil(H_j) selections have accrued since its last advance AND an entry of
// cardinality beta^j + 1 exists. Emits "tau_reached" when the pool first
// holds a value >= tau.
BposcResult run_bposc(const ObjectiveOracle& oracle, double tau, int capacity,
                      std::uint64_t t, double p, double epsilon, double xi,
                      RngStreams& rng, const TrackOptions& track = {});

// Standard greedy: kappa rounds, each evaluating every element outside the
// current set (lowest index wins ties), for exactly
// sum_{i=0}^{kappa-1} (n - i) queries.
GreedyResult run_greedy(const ObjectiveOracle& oracle, int kappa);

// ceil((n/kappa) ln(1/eps)), the per-round sample size of stochastic greedy.
int sg_sample_size(int n, int kappa, double epsilon);

// Stochastic greedy: each round samples sg_sample_size elements without
// replacement from the remaining ground set (capped at what is left) and
// adds the best of the sample.
Solution run_stochastic_greedy(const ObjectiveOracle& oracle, int kappa,
                               double epsilon, RngStream& sg_stream);

// Classical greedy for cover: add max-marginal-gain elements until the
// threshold is met; raises InfeasibleError if even the full ground set
// falls short.
Solution run_greedy_cover(const ObjectiveOracle& oracle, double tau);

// The cardinality-constrained answer in a pool: best entry under the cap.
PoolEntry extract_sm(const ParetoPool& pool, int kappa);

// The cover answer under a caller-chosen cardinality budget, flagged with
// whether it meets the threshold.
ScExtract extract_sc(const ParetoPool& pool, double tau, int cap);

}  // namespace paretosub

#endif  // PARETOSUB_OPTIMIZERS_HPP_
