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
// Closed-form calculators for the iteration counts that guarantee the
// expectation bounds, the guarantee ratios themselves, the bias-schedule
// constants, and the Chernoff tail. All pure functions; iteration counts
// round up, which never weakens a guarantee.

#ifndef PARETOSUB_BOUNDS_HPP_
#define PARETOSUB_BOUNDS_HPP_

#include <cstdint>

namespace paretosub {

// Iterations after which plain Pareto optimization attains its expectation
// guarantee for every cardinality cap below P:
// ceil(max(2enP, 8enP ln(1/eps))).
std::uint64_t t_bound_po(int n, int capacity, double epsilon);

// Biased variant over M = m_value(P, xi) pointers:
// ceil(max((2e ln(1/eps)/p) n M, (8/p) ln(n) M)).
std::uint64_t t_bound_bpo(int n, int capacity, double p, double epsilon,
                          double xi);

// Single-pointer variant: ceil(max(2en ln(1/eps)/p, 8 ln(n)/p)).
std::uint64_t t_bound_kbpo(int n, double p, double epsilon);

// Cover guarantee of plain Pareto optimization: ceil(8e n^2 ln(1/delta)).
// delta = 1 yields the degenerate bound 0.
std::uint64_t t_bound_posc(int n, double delta);

// Cover variant with M pointers:
// ceil(max(2en ln(1/delta) ln(1/eps) M / (xi p (1-eps)), 8e ln(n) M / p)).
std::uint64_t t_bound_bposc(int n, int capacity, double p, double epsilon,
                            double xi, double delta);

// Number of bias pointers: ceil(ln P / ln(1/xi)).
int m_value(int capacity, double xi);

// Selection budget of pointer j (1-based): e ln(1/eps) / xi^j.
double h_value(int j, double epsilon, double xi);

// The pointer index tracking a target cardinality: the smallest q >= 1 with
// xi^q P < size, clamped to [1, m_value(P, xi)]. Requires 1 <= size <= P.
int q_index(int capacity, double xi, int size);

struct GuaranteeSpec {
  enum class Algorithm { kPo, kBpo, kKbpo, kPosc, kBposc, kGreedy, kSg };
  Algorithm algorithm = Algorithm::kPo;
  int n = 0;
  double p = 0.0;
  double epsilon = 0.0;
  double delta = 0.0;
  double gamma = 1.0;  // submodularity ratio; 1 = submodular
};

// The expectation-guarantee factor of the algorithm:
//   po     (1-eps)(1-e^-gamma)
//   bpo    (1-eps)(1-e^-gamma-eps)      (also kbpo)
//   posc   (1-delta)^2                  (the weaker stated form)
//   bposc  min((1-delta)^2, (1-1/n)(1-delta))
//   greedy 1-e^-gamma
//   sg     1-1/e-eps
// Raises NumericError for parameters that make the guarantee vacuous.
double guarantee_ratio(const GuaranteeSpec& spec);

// Upper tail bound P(sum <= (1-eta) mu) <= exp(-eta^2 mu / 2) with mu = T rho
// for T independent 0/1 trials of success probability rho.
double chernoff_tail(std::uint64_t t, double rho, double eta);

}  // namespace paretosub

#endif  // PARETOSUB_BOUNDS_HPP_
