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

#include "paretosub/optimizers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "paretosub/bounds.hpp"

namespace paretosub {
namespace {

// Samples the best-under-cap values at the current query count; query counts
// are recorded relative to the count at run start.
class Recorder {
 public:
  Recorder(Trajectory& trajectory, const ObjectiveOracle& oracle,
           const ParetoPool& pool, const TrackOptions& track)
      : trajectory_(trajectory),
        oracle_(oracle),
        pool_(pool),
        sample_every_(track.sample_every),
        start_count_(oracle.query_count()) {
    trajectory_.caps = track.caps;
    if (trajectory_.caps.empty())
      trajectory_.caps.push_back(pool.capacity() - 1);
    record();
  }

  void after_iteration() {
    const std::uint64_t q = queries();
    if (sample_every_ != 0 && q != last_recorded_ && q % sample_every_ == 0)
      record();
  }

  void event(std::uint64_t iteration, std::string name) {
    trajectory_.events.push_back({iteration, std::move(name)});
    record();
  }

  void finish() { record(); }

 private:
  std::uint64_t queries() const { return oracle_.query_count() - start_count_; }

  void record() {
    const std::uint64_t q = queries();
    if (!trajectory_.samples.empty() && q == last_recorded_) return;
    TrajectorySample sample;
    sample.query_count = q;
    sample.best.reserve(trajectory_.caps.size());
    for (int cap : trajectory_.caps)
      sample.best.push_back(pool_.best_under(cap).value);
    trajectory_.samples.push_back(std::move(sample));
    last_recorded_ = q;
  }

  Trajectory& trajectory_;
  const ObjectiveOracle& oracle_;
  const ParetoPool& pool_;
  std::uint64_t sample_every_;
  std::uint64_t start_count_;
  std::uint64_t last_recorded_ = std::numeric_limits<std::uint64_t>::max();
};

// One PO-style step on slot i: mutate the entry there (if any) and offer the
// mutant to the pool. Mutants of cardinality >= P are dropped unqueried.
void step(const ObjectiveOracle& oracle, ParetoPool& pool, int slot,
          RngStreams& rng) {
  const auto entry = pool.get_by_cardinality(slot);
  if (!entry) return;
  SubsetMask mutant = mutate(entry->subset, rng.mutate);
  if (mutant.cardinality() >= pool.capacity()) return;
  const double value = oracle.value(mutant);
  pool.insert(PoolEntry{std::move(mutant), value});
}

int capped(std::uint64_t beta, int capacity) {
  return static_cast<int>(
      std::min<std::uint64_t>(beta, static_cast<std::uint64_t>(capacity - 1)));
}

std::uint64_t ceil_count(double h) {
  return static_cast<std::uint64_t>(std::ceil(h));
}

void validate_common(const ObjectiveOracle& oracle, int capacity,
                     const char* who) {
  if (oracle.n() < 1)
    throw ConfigError(std::string(who) + ": empty ground set");
  if (capacity < 1 || capacity > oracle.n() + 1)
    throw ConfigError(std::string(who) + ": P must be in [1, n+1]");
}

void validate_unit(double v, const char* who, const char* name,
                   bool open_low, bool open_high) {
  const bool low_ok = open_low ? v > 0.0 : v >= 0.0;
  const bool high_ok = open_high ? v < 1.0 : v <= 1.0;
  if (!(low_ok && high_ok))
    throw ConfigError(std::string(who) + ": " + name + " out of range");
}

}  // namespace

SubsetMask mutate(const SubsetMask& b, RngStream& mutate_stream) {
  const int n = b.n();
  if (n < 1) throw ConfigError("mutate: empty ground set");
  SubsetMask out = b;
  const double rate = 1.0 / static_cast<double>(n);
  for (int u = 0; u < n; ++u) {
    if (mutate_stream.next_double() < rate) out.flip(u);
  }
  return out;
}

PoResult run_po(const ObjectiveOracle& oracle, int capacity, std::uint64_t t,
                RngStreams& rng, const TrackOptions& track) {
  validate_common(oracle, capacity, "run_po");
  PoResult result{ParetoPool(oracle.n(), capacity), Trajectory{}};
  Recorder recorder(result.trajectory, oracle, result.pool, track);
  for (std::uint64_t iter = 1; iter <= t; ++iter) {
    const int slot = static_cast<int>(
        rng.select.uniform_int(static_cast<std::uint64_t>(capacity)));
    step(oracle, result.pool, slot, rng);
    recorder.after_iteration();
  }
  recorder.finish();
  return result;
}

BpoResult run_bpo(const ObjectiveOracle& oracle, int capacity,
                  std::uint64_t t, double p, double epsilon, double xi,
                  RngStreams& rng, const TrackOptions& track) {
  validate_common(oracle, capacity, "run_bpo");
  validate_unit(p, "run_bpo", "p", false, false);
  validate_unit(epsilon, "run_bpo", "epsilon", true, true);
  validate_unit(xi, "run_bpo", "xi", true, true);

  const int m = m_value(capacity, xi);
  BiasState bias;
  bias.num_pointers = m;
  bias.beta.assign(static_cast<std::size_t>(m), 0);
  bias.ell.assign(static_cast<std::size_t>(m), 0);
  bias.selections.assign(static_cast<std::size_t>(m), 0);
  bias.h.resize(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j)
    bias.h[static_cast<std::size_t>(j - 1)] = h_value(j, epsilon, xi);

  BpoResult result{ParetoPool(oracle.n(), capacity), Trajectory{},
                   std::move(bias)};
  Recorder recorder(result.trajectory, oracle, result.pool, track);
  for (std::uint64_t iter = 1; iter <= t; ++iter) {
    int slot = static_cast<int>(
        rng.select.uniform_int(static_cast<std::uint64_t>(capacity)));
    if (rng.coin.next_double() < p && m >= 1) {
      const auto j = static_cast<std::size_t>(
          rng.bias.uniform_int(static_cast<std::uint64_t>(m)));
      slot = result.pool.best_under(capped(result.bias.beta[j], capacity))
                 .cardinality();
      ++result.bias.ell[j];
      ++result.bias.selections[j];
      if (result.bias.ell[j] == ceil_count(result.bias.h[j])) {
        result.bias.ell[j] = 0;
        ++result.bias.beta[j];
      }
    }
    step(oracle, result.pool, slot, rng);
    recorder.after_iteration();
  }
  recorder.finish();
  return result;
}

KbpoResult run_kbpo(const ObjectiveOracle& oracle, int kappa, int capacity,
                    std::uint64_t t, double p, double epsilon,
                    RngStreams& rng, const TrackOptions& track) {
  validate_common(oracle, capacity, "run_kbpo");
  if (kappa < 1 || kappa > oracle.n())
    throw ConfigError("run_kbpo: kappa must be in [1, n]");
  if (kappa >= capacity) throw ConfigError("run_kbpo: requires kappa < P");
  validate_unit(p, "run_kbpo", "p", false, false);
  validate_unit(epsilon, "run_kbpo", "epsilon", true, true);

  KBiasState bias;
  bias.h = std::numbers::e * oracle.n() * std::log(1.0 / epsilon) / kappa;

  KbpoResult result{ParetoPool(oracle.n(), capacity), Trajectory{}, bias};
  Recorder recorder(result.trajectory, oracle, result.pool, track);
  const std::uint64_t advance_at = ceil_count(result.bias.h);
  for (std::uint64_t iter = 1; iter <= t; ++iter) {
    int slot = static_cast<int>(
        rng.select.uniform_int(static_cast<std::uint64_t>(capacity)));
    if (rng.coin.next_double() < p) {
      slot = result.pool.best_under(capped(result.bias.beta, capacity))
                 .cardinality();
      ++result.bias.ell;
      ++result.bias.selections;
      if (result.bias.ell == advance_at) {
        result.bias.ell = 0;
        ++result.bias.beta;
        if (result.bias.beta == static_cast<std::uint64_t>(kappa))
          recorder.event(iter, "beta_reached_kappa");
      }
    }
    step(oracle, result.pool, slot, rng);
    recorder.after_iteration();
  }
  recorder.finish();
  return result;
}

BposcResult run_bposc(const ObjectiveOracle& oracle, double tau, int capacity,
                      std::uint64_t t, double p, double epsilon, double xi,
                      RngStreams& rng, const TrackOptions& track) {
  validate_common(oracle, capacity, "run_bposc");
  if (!(tau > 0.0)) throw ConfigError("run_bposc: tau must be > 0");
  validate_unit(p, "run_bposc", "p", false, false);
  validate_unit(epsilon, "run_bposc", "epsilon", true, true);
  validate_unit(xi, "run_bposc", "xi", true, true);

  const int m = m_value(capacity, xi);
  BiasState bias;
  bias.num_pointers = m;
  bias.beta.assign(static_cast<std::size_t>(m), 0);
  bias.ell.assign(static_cast<std::size_t>(m), 0);
  bias.selections.assign(static_cast<std::size_t>(m), 0);
  bias.h.resize(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j)
    bias.h[static_cast<std::size_t>(j - 1)] = h_value(j, epsilon, xi);

  BposcResult result{ParetoPool(oracle.n(), capacity), Trajectory{},
                     std::move(bias)};
  Recorder recorder(result.trajectory, oracle, result.pool, track);
  bool tau_reached = result.pool.best_under(capacity - 1).value >= tau;
  for (std::uint64_t iter = 1; iter <= t; ++iter) {
    int slot;
    if (rng.coin.next_double() < p && m >= 1) {
      const auto j = static_cast<std::size_t>(
          rng.bias.uniform_int(static_cast<std::uint64_t>(m)));
      // The pointer's entry may have been displaced by a smaller dominator;
      // in that case the best entry under beta^j stands in for it. The
      // selection clock ticks either way.
      slot = result.pool.best_under(capped(result.bias.beta[j], capacity))
                 .cardinality();
      ++result.bias.ell[j];
      ++result.bias.selections[j];
    } else {
      const std::vector<int> cards = result.pool.present_cardinalities();
      slot = cards[static_cast<std::size_t>(
          rng.select.uniform_int(cards.size()))];
    }
    step(oracle, result.pool, slot, rng);

    // Pointer advancement is gated on the successor cardinality existing, so
    // it is re-checked after every iteration, not only on selection.
    for (std::size_t j = 0; j < result.bias.beta.size(); ++j) {
      const std::uint64_t next = result.bias.beta[j] + 1;
      if (result.bias.ell[j] >= ceil_count(result.bias.h[j]) &&
          next < static_cast<std::uint64_t>(capacity) &&
          result.pool.has(static_cast<int>(next))) {
        result.bias.ell[j] = 0;
        ++result.bias.beta[j];
      }
    }
    if (!tau_reached &&
        result.pool.best_under(capacity - 1).value >= tau) {
      tau_reached = true;
      recorder.event(iter, "tau_reached");
    }
    recorder.after_iteration();
  }
  recorder.finish();
  return result;
}

GreedyResult run_greedy(const ObjectiveOracle& oracle, int kappa) {
  const int n = oracle.n();
  if (kappa < 0 || kappa > n)
    throw ConfigError("run_greedy: kappa must be in [0, n]");

  GreedyResult result{SubsetMask(n), 0.0, Trajectory{}};
  result.trajectory.caps = {kappa};
  const std::uint64_t start_count = oracle.query_count();
  result.trajectory.samples.push_back({0, {0.0}});
  for (int round = 0; round < kappa; ++round) {
    int best_element = -1;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int u = 0; u < n; ++u) {
      if (result.subset.test(u)) continue;
      SubsetMask candidate = result.subset;
      candidate.set(u);
      const double v = oracle.value(candidate);
      if (v > best_value) {
        best_value = v;
        best_element = u;
      }
    }
    result.subset.set(best_element);
    result.value = best_value;
    result.trajectory.samples.push_back(
        {oracle.query_count() - start_count, {result.value}});
  }
  return result;
}

int sg_sample_size(int n, int kappa, double epsilon) {
  if (kappa < 1 || kappa > n)
    throw ConfigError("stochastic greedy: kappa must be in [1, n]");
  validate_unit(epsilon, "stochastic greedy", "epsilon", true, true);
  return static_cast<int>(std::ceil(static_cast<double>(n) / kappa *
                                    std::log(1.0 / epsilon)));
}

Solution run_stochastic_greedy(const ObjectiveOracle& oracle, int kappa,
                               double epsilon, RngStream& sg_stream) {
  const int n = oracle.n();
  const int target = sg_sample_size(n, kappa, epsilon);

  Solution result{SubsetMask(n), 0.0};
  std::vector<int> remaining(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) remaining[static_cast<std::size_t>(u)] = u;

  for (int round = 0; round < kappa; ++round) {
    const int available = static_cast<int>(remaining.size());
    const int s = std::min(target, available);
    // Partial Fisher-Yates; the sampled prefix is a uniform draw without
    // replacement.
    for (int k = 0; k < s; ++k) {
      const auto other =
          k + static_cast<int>(sg_stream.uniform_int(
                  static_cast<std::uint64_t>(available - k)));
      std::swap(remaining[static_cast<std::size_t>(k)],
                remaining[static_cast<std::size_t>(other)]);
    }
    int best_element = -1;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < s; ++k) {
      const int u = remaining[static_cast<std::size_t>(k)];
      SubsetMask candidate = result.subset;
      candidate.set(u);
      const double v = oracle.value(candidate);
      if (v > best_value || (v == best_value && u < best_element)) {
        best_value = v;
        best_element = u;
      }
    }
    result.subset.set(best_element);
    result.value = best_value;
    remaining.erase(
        std::find(remaining.begin(), remaining.end(), best_element));
  }
  return result;
}

Solution run_greedy_cover(const ObjectiveOracle& oracle, double tau) {
  const int n = oracle.n();
  if (tau < 0.0) throw ConfigError("greedy cover: tau must be >= 0");

  Solution result{SubsetMask(n), 0.0};
  while (result.value < tau) {
    if (result.subset.cardinality() == n)
      throw InfeasibleError("greedy cover: threshold " +
                            std::to_string(tau) + " exceeds f(U) = " +
                            std::to_string(result.value));
    int best_element = -1;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int u = 0; u < n; ++u) {
      if (result.subset.test(u)) continue;
      SubsetMask candidate = result.subset;
      candidate.set(u);
      const double v = oracle.value(candidate);
      if (v > best_value) {
        best_value = v;
        best_element = u;
      }
    }
    result.subset.set(best_element);
    result.value = best_value;
  }
  return result;
}

PoolEntry extract_sm(const ParetoPool& pool, int kappa) {
  return pool.best_under(kappa);
}

ScExtract extract_sc(const ParetoPool& pool, double tau, int cap) {
  ScExtract out{pool.best_under(cap), false};
  out.feasible = out.entry.value >= tau;
  return out;
}

}  // namespace paretosub
