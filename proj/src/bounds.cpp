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

#include "paretosub/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "paretosub/errors.hpp"

namespace paretosub {
namespace {

// Scalar bounds are evaluated in extended precision and rounded once, so
// frozen comparisons against high-precision references hold to the last bit.
constexpr long double kE = std::numbers::e_v<long double>;

void require(bool ok, const std::string& what) {
  if (!ok) throw NumericError("bounds: " + what);
}

void require_n(int n) { require(n >= 1, "n must be >= 1"); }

void require_capacity(int n, int capacity) {
  require(capacity >= 1 && capacity <= n + 1, "P must be in [1, n+1]");
}

void require_open_unit(double v, const char* name) {
  require(v > 0.0 && v < 1.0, std::string(name) + " must be in (0, 1)");
}

void require_probability(double v, const char* name) {
  require(v > 0.0 && v <= 1.0, std::string(name) + " must be in (0, 1]");
}

std::uint64_t ceil_u64(long double v) {
  return static_cast<std::uint64_t>(std::ceil(v));
}

long double log_inv(double v) { return std::log(1.0L / v); }

}  // namespace

std::uint64_t t_bound_po(int n, int capacity, double epsilon) {
  require_n(n);
  require_capacity(n, capacity);
  require_open_unit(epsilon, "epsilon");
  const long double np = static_cast<long double>(n) * capacity;
  return ceil_u64(std::max(2.0L * kE * np, 8.0L * kE * np * log_inv(epsilon)));
}

std::uint64_t t_bound_bpo(int n, int capacity, double p, double epsilon,
                          double xi) {
  require_n(n);
  require_capacity(n, capacity);
  require_probability(p, "p");
  require_open_unit(epsilon, "epsilon");
  require_open_unit(xi, "xi");
  const long double m = m_value(capacity, xi);
  return ceil_u64(std::max((2.0L * kE * log_inv(epsilon) / p) * n * m,
                           (8.0L / p) * std::log(static_cast<long double>(n)) * m));
}

std::uint64_t t_bound_kbpo(int n, double p, double epsilon) {
  require_n(n);
  require_probability(p, "p");
  require_open_unit(epsilon, "epsilon");
  return ceil_u64(std::max(2.0L * kE * n * log_inv(epsilon) / p,
                           8.0L * std::log(static_cast<long double>(n)) / p));
}

std::uint64_t t_bound_posc(int n, double delta) {
  require_n(n);
  require_probability(delta, "delta");
  const long double n2 = static_cast<long double>(n) * n;
  return ceil_u64(8.0L * kE * n2 * log_inv(delta));
}

std::uint64_t t_bound_bposc(int n, int capacity, double p, double epsilon,
                            double xi, double delta) {
  require_n(n);
  require_capacity(n, capacity);
  require_probability(p, "p");
  require_open_unit(epsilon, "epsilon");
  require_open_unit(xi, "xi");
  require_probability(delta, "delta");
  const long double m = m_value(capacity, xi);
  const long double cover_branch = 2.0L * kE * n * log_inv(delta) *
                                   log_inv(epsilon) * m /
                                   (xi * p * (1.0L - epsilon));
  const long double tail_branch =
      8.0L * kE * std::log(static_cast<long double>(n)) * m / p;
  return ceil_u64(std::max(cover_branch, tail_branch));
}

int m_value(int capacity, double xi) {
  require(capacity >= 1, "P must be >= 1");
  require_open_unit(xi, "xi");
  return static_cast<int>(
      std::ceil(std::log(static_cast<double>(capacity)) / std::log(1.0 / xi)));
}

double h_value(int j, double epsilon, double xi) {
  require(j >= 1, "pointer index must be >= 1");
  require_open_unit(epsilon, "epsilon");
  require_open_unit(xi, "xi");
  return static_cast<double>(
      kE * log_inv(epsilon) / std::pow(static_cast<long double>(xi), j));
}

int q_index(int capacity, double xi, int size) {
  require(capacity >= 1, "P must be >= 1");
  require_open_unit(xi, "xi");
  require(size >= 1, "size must be >= 1");
  require(size <= capacity, "size must be <= P");
  const int m = m_value(capacity, xi);
  if (m < 1) return 1;  // P = 1: only size = 1, degenerate pointer
  double scaled = static_cast<double>(capacity);
  for (int q = 1; q <= m; ++q) {
    scaled *= xi;
    if (scaled < static_cast<double>(size)) return q;
  }
  return m;
}

double guarantee_ratio(const GuaranteeSpec& spec) {
  using Algorithm = GuaranteeSpec::Algorithm;
  require(spec.gamma > 0.0 && spec.gamma <= 1.0, "gamma must be in (0, 1]");
  const long double submodular_part =
      1.0L - std::exp(-static_cast<long double>(spec.gamma));
  long double ratio = 0.0L;
  switch (spec.algorithm) {
    case Algorithm::kPo:
      require_open_unit(spec.epsilon, "epsilon");
      ratio = (1.0L - spec.epsilon) * submodular_part;
      break;
    case Algorithm::kBpo:
    case Algorithm::kKbpo:
      require_open_unit(spec.epsilon, "epsilon");
      ratio = (1.0L - spec.epsilon) * (submodular_part - spec.epsilon);
      break;
    case Algorithm::kPosc:
      require(spec.gamma == 1.0, "no gamma form for the cover guarantee");
      require_open_unit(spec.delta, "delta");
      ratio = (1.0L - spec.delta) * (1.0L - spec.delta);
      break;
    case Algorithm::kBposc: {
      require(spec.gamma == 1.0, "no gamma form for the cover guarantee");
      require_open_unit(spec.delta, "delta");
      require_n(spec.n);
      const long double keep = 1.0L - spec.delta;
      ratio = std::min(keep * keep, (1.0L - 1.0L / spec.n) * keep);
      break;
    }
    case Algorithm::kGreedy:
      ratio = submodular_part;
      break;
    case Algorithm::kSg:
      require(spec.gamma == 1.0, "no gamma form for stochastic greedy");
      require_open_unit(spec.epsilon, "epsilon");
      ratio = submodular_part - spec.epsilon;
      break;
  }
  require(ratio > 0.0L && ratio < 1.0L,
          "guarantee vacuous for these parameters");
  return static_cast<double>(ratio);
}

double chernoff_tail(std::uint64_t t, double rho, double eta) {
  require(rho >= 0.0 && rho <= 1.0, "rho must be in [0, 1]");
  require(eta > 0.0, "eta must be > 0");
  const long double mu = static_cast<long double>(t) * rho;
  return static_cast<double>(
      std::exp(-static_cast<long double>(eta) * eta * mu / 2.0L));
}

}  // namespace paretosub
