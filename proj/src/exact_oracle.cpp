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

#include "paretosub/exact_oracle.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "paretosub/errors.hpp"

namespace paretosub {
namespace {

constexpr std::uint64_t kEnumerationLimit = 2'000'000;

std::uint64_t subsets_up_to(int n, int kappa) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, 0)
  for (int i = 0; i <= kappa; ++i) {
    total += binom;
    binom = binom * static_cast<std::uint64_t>(n - i) /
            static_cast<std::uint64_t>(i + 1);
  }
  return total;
}

// Visits subsets of cardinality exactly k in lexicographic element order.
template <typename Visit>
void for_each_combination(int n, int k, Visit&& visit) {
  if (k == 0) {
    visit(SubsetMask(n));
    return;
  }
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    visit(SubsetMask(n, idx));
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos)
      --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

struct Best {
  bool set = false;
  double value = 0.0;
  SubsetMask mask;

  void offer(double v, const SubsetMask& m) {
    if (!set || v > value || (v == value && lex_less(m, mask))) {
      set = true;
      value = v;
      mask = m;
    }
  }
};

// Gray-code sweep over all 2^n subsets with O(|set|) incremental coverage
// updates; candidates above the cardinality cap are skipped but the counter
// only counts the considered ones.
ExactResult brute_force_sm_coverage(const CoverageOracle& oracle, int kappa) {
  const CoverageInstance& inst = oracle.instance();
  const int n = oracle.n();
  std::vector<int> cover_count(static_cast<std::size_t>(inst.num_items), 0);
  double covered = 0.0;
  int card = 0;

  ExactResult result;
  result.enumerated = 1;  // the empty set
  Best best;
  best.offer(0.0, SubsetMask(n));

  const std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t bits = 0;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int flip = std::countr_zero(i);
    const std::uint64_t bit = std::uint64_t{1} << flip;
    const bool adding = !(bits & bit);
    bits ^= bit;
    card += adding ? 1 : -1;
    for (int item : inst.sets[static_cast<std::size_t>(flip)]) {
      const double w = inst.weights.empty()
                           ? 1.0
                           : inst.weights[static_cast<std::size_t>(item)];
      auto& count = cover_count[static_cast<std::size_t>(item)];
      if (adding) {
        if (count++ == 0) covered += w;
      } else {
        if (--count == 0) covered -= w;
      }
    }
    if (card > kappa) continue;
    ++result.enumerated;
    best.offer(covered, SubsetMask::from_bits(n, bits));
  }
  result.opt_set = best.mask;
  result.opt_value = oracle.peek(best.mask);  // exact oracular value
  return result;
}

}  // namespace

ExactResult brute_force_sm(const ObjectiveOracle& oracle, int kappa) {
  const int n = oracle.n();
  if (n > 20) throw CapacityError("brute_force_sm: n > 20");
  if (kappa < 0 || kappa > n)
    throw ConfigError("brute_force_sm: kappa must be in [0, n]");
  if (subsets_up_to(n, kappa) > kEnumerationLimit)
    throw CapacityError("brute_force_sm: more than 2e6 subsets of size <= " +
                        std::to_string(kappa));

  if (const auto* coverage = dynamic_cast<const CoverageOracle*>(&oracle))
    return brute_force_sm_coverage(*coverage, kappa);

  ExactResult result;
  Best best;
  for (int k = 0; k <= kappa; ++k) {
    for_each_combination(n, k, [&](const SubsetMask& mask) {
      ++result.enumerated;
      best.offer(oracle.peek(mask), mask);
    });
  }
  result.opt_set = best.mask;
  result.opt_value = best.value;
  return result;
}

ExactResult brute_force_sc(const ObjectiveOracle& oracle, double tau) {
  const int n = oracle.n();
  if (n > 20) throw CapacityError("brute_force_sc: n > 20");
  if (tau < 0.0) throw ConfigError("brute_force_sc: tau must be >= 0");

  SubsetMask universe(n);
  for (int u = 0; u < n; ++u) universe.set(u);
  if (oracle.peek(universe) < tau)
    throw InfeasibleError("brute_force_sc: tau exceeds f(U)");

  ExactResult result;
  for (int k = 0; k <= n; ++k) {
    bool found = false;
    for_each_combination(n, k, [&](const SubsetMask& mask) {
      if (found) return;
      ++result.enumerated;
      const double v = oracle.peek(mask);
      if (v >= tau) {
        found = true;
        result.opt_set = mask;
        result.opt_value = v;
      }
    });
    if (found) return result;
  }
  // Unreachable: f(U) >= tau guarantees the k = n level succeeds.
  throw InfeasibleError("brute_force_sc: no feasible subset");
}

OracleReport verify_oracle(const ObjectiveOracle& oracle) {
  const int n = oracle.n();
  if (n > 12) throw CapacityError("verify_oracle: n > 12");

  const std::uint32_t full = n == 0 ? 1u : (1u << n);
  std::vector<double> f(full);
  for (std::uint32_t s = 0; s < full; ++s)
    f[s] = oracle.peek(SubsetMask::from_bits(n, s));

  double worst_mono = 0.0;
  double worst_sub = 0.0;
  const std::uint32_t all = full - 1;
  for (std::uint32_t b = 1; b < full; ++b) {
    std::uint32_t a = (b - 1) & b;
    while (true) {
      worst_mono = std::max(worst_mono, f[a] - f[b]);
      std::uint32_t outside = ~b & all;
      while (outside) {
        const std::uint32_t bit = outside & (0u - outside);
        worst_sub =
            std::max(worst_sub, (f[b | bit] - f[b]) - (f[a | bit] - f[a]));
        outside &= outside - 1;
      }
      if (a == 0) break;
      a = (a - 1) & b;
    }
  }

  constexpr double kTol = 1e-9;
  return OracleReport{worst_mono <= kTol, worst_sub <= kTol,
                      std::max(worst_mono, worst_sub)};
}

}  // namespace paretosub
