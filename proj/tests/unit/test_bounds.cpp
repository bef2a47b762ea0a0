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
// Closed-form expectations were frozen from 60-digit evaluations of the same
// formulas; scalar results must land within 1 ULP of them.

#include "paretosub/bounds.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <cstring>

#include "paretosub/errors.hpp"
#include "paretosub/rng.hpp"

using namespace paretosub;

namespace {

std::int64_t ulp_distance(double a, double b) {
  REQUIRE(a > 0.0);
  REQUIRE(b > 0.0);
  std::int64_t ia, ib;
  std::memcpy(&ia, &a, sizeof a);
  std::memcpy(&ib, &b, sizeof b);
  return ia > ib ? ia - ib : ib - ia;
}

void check_ulp(double actual, double frozen) {
  CHECK(ulp_distance(actual, frozen) <= 1);
}

GuaranteeSpec spec_of(GuaranteeSpec::Algorithm algorithm, double epsilon = 0.0,
                      double delta = 0.0, double gamma = 1.0, int n = 0) {
  GuaranteeSpec spec;
  spec.algorithm = algorithm;
  spec.epsilon = epsilon;
  spec.delta = delta;
  spec.gamma = gamma;
  spec.n = n;
  return spec;
}

}  // namespace

TEST_CASE("t_bound_po closed forms") {
  CHECK(t_bound_po(10, 5, 0.5) == 754);
  CHECK(t_bound_po(1, 1, 0.5) == 16);
  // ln(1/eps) = 1/4 balances both branches of the max.
  CHECK(t_bound_po(10, 5, std::exp(-0.25)) == 272);
  CHECK_THROWS_AS(t_bound_po(0, 1, 0.5), NumericError);
  CHECK_THROWS_AS(t_bound_po(4, 6, 0.5), NumericError);
  CHECK_THROWS_AS(t_bound_po(4, 4, 1.0), NumericError);
}

TEST_CASE("t_bound_bpo closed forms") {
  CHECK(t_bound_bpo(100, 100, 0.5, 0.1, 0.5) == 17526);
  // 1/p scaling: halving p doubles the raw branches.
  const std::uint64_t t_full = t_bound_bpo(100, 100, 1.0, 0.1, 0.5);
  const std::uint64_t t_half = t_bound_bpo(100, 100, 0.5, 0.1, 0.5);
  CHECK(t_half >= 2 * t_full - 1);
  CHECK(t_half <= 2 * t_full);
  CHECK_THROWS_AS(t_bound_bpo(100, 100, 0.5, 0.1, 1.0), NumericError);
  CHECK_THROWS_AS(t_bound_bpo(100, 100, 0.0, 0.1, 0.5), NumericError);
}

TEST_CASE("t_bound_kbpo closed forms") {
  CHECK(t_bound_kbpo(100, 0.5, 0.1) == 2504);
  CHECK(t_bound_kbpo(3, 1.0, 0.99) == 9);  // the ln(n) branch dominates
  CHECK(t_bound_kbpo(1, 1.0, std::exp(-1.0)) == 6);
}

TEST_CASE("t_bound_posc closed forms") {
  CHECK(t_bound_posc(10, 0.5) == 1508);
  CHECK(t_bound_posc(10, 1.0) == 0);  // degenerate
  CHECK(t_bound_posc(1, std::exp(-1.0)) == 22);
}

TEST_CASE("t_bound_bposc closed forms") {
  CHECK(t_bound_bposc(10, 10, 0.5, 0.2, 0.5, 0.5) == 1213);
  CHECK(t_bound_bposc(10, 10, 0.5, 0.2, 0.5, 1.0) == 401);  // tail branch only
  CHECK_THROWS_AS(t_bound_bposc(10, 10, 0.5, 1.0, 0.5, 0.5), NumericError);
  CHECK_THROWS_AS(t_bound_bposc(10, 10, 0.5, 0.2, 0.0, 0.5), NumericError);
}

TEST_CASE("schedule constants") {
  CHECK(m_value(100, 0.5) == 7);
  CHECK(m_value(1, 0.5) == 0);
  CHECK(m_value(4, 0.5) == 2);  // exact power
  check_ulp(h_value(1, std::exp(-1.0), 0.5), 5.43656365691809);
  CHECK(q_index(100, 0.5, 10) == 4);
  CHECK(q_index(100, 0.5, 100) == 1);
  CHECK(q_index(100, 0.5, 1) == 7);  // clamped to M
  CHECK_THROWS_AS(q_index(100, 0.5, 101), NumericError);
  CHECK_THROWS_AS(q_index(100, 0.5, 0), NumericError);
}

TEST_CASE("q_index satisfies both schedule inequalities exhaustively") {
  for (double xi : {0.3, 0.5, 0.7}) {
    for (int capacity = 2; capacity <= 200; ++capacity) {
      for (int size = 2; size <= capacity; ++size) {
        const int q = q_index(capacity, xi, size);
        const long double lo = std::pow(static_cast<long double>(xi), q) *
                               capacity;
        const long double hi =
            std::pow(static_cast<long double>(xi), q - 1) * capacity;
        REQUIRE(q >= 1);
        REQUIRE(q <= m_value(capacity, xi));
        REQUIRE(lo < static_cast<long double>(size) + 1e-9L);
        REQUIRE(static_cast<long double>(size) <= hi + 1e-9L);
      }
    }
  }
}

TEST_CASE("guarantee ratios") {
  check_ulp(guarantee_ratio(spec_of(GuaranteeSpec::Algorithm::kPo, 0.1)),
            0.5689085029457019);
  check_ulp(guarantee_ratio(spec_of(GuaranteeSpec::Algorithm::kBpo, 0.1)),
            0.4789085029457019);
  check_ulp(guarantee_ratio(spec_of(GuaranteeSpec::Algorithm::kGreedy)),
            0.6321205588285577);
  check_ulp(guarantee_ratio(spec_of(GuaranteeSpec::Algorithm::kSg, 0.2)),
            0.43212055882855765);

  // gamma = 1 reduces to the submodular ratio.
  CHECK(guarantee_ratio(spec_of(GuaranteeSpec::Algorithm::kPo, 0.1, 0, 1.0)) ==
        guarantee_ratio(spec_of(GuaranteeSpec::Algorithm::kPo, 0.1)));
  // gamma < 1 weakens it.
  CHECK(guarantee_ratio(spec_of(GuaranteeSpec::Algorithm::kPo, 0.1, 0, 0.5)) <
        guarantee_ratio(spec_of(GuaranteeSpec::Algorithm::kPo, 0.1)));

  CHECK(guarantee_ratio(spec_of(GuaranteeSpec::Algorithm::kPosc, 0, 0.5)) ==
        0.25);
  // The cover variant reports the weaker of its two stated constants.
  CHECK(guarantee_ratio(
            spec_of(GuaranteeSpec::Algorithm::kBposc, 0, 0.5, 1.0, 10)) ==
        0.25);
  CHECK(guarantee_ratio(
            spec_of(GuaranteeSpec::Algorithm::kBposc, 0, 0.05, 1.0, 10)) ==
        doctest::Approx(0.9 * 0.95).epsilon(1e-15));

  // Vacuous parameters are rejected rather than returning nonsense.
  CHECK_THROWS_AS(guarantee_ratio(spec_of(GuaranteeSpec::Algorithm::kBpo, 0.7)),
                  NumericError);
  CHECK_THROWS_AS(guarantee_ratio(spec_of(GuaranteeSpec::Algorithm::kPo, 1.0)),
                  NumericError);
}

TEST_CASE("chernoff tail") {
  check_ulp(chernoff_tail(32, 0.25, 0.5), 0.36787944117144233);
  CHECK(chernoff_tail(100, 0.0, 0.5) == 1.0);  // vacuous bound
  check_ulp(chernoff_tail(800, std::log(10.0) / 100.0, 0.5),
            0.09999999999999998);
  CHECK_THROWS_AS(chernoff_tail(10, 1.5, 0.5), NumericError);
  CHECK_THROWS_AS(chernoff_tail(10, 0.5, 0.0), NumericError);
}

TEST_CASE("bounds are monotone over a random parameter grid") {
  RngStream rng(4242);
  for (int i = 0; i < 400; ++i) {
    const int n = 2 + static_cast<int>(rng.uniform_int(300));
    const int capacity = 1 + static_cast<int>(rng.uniform_int(n + 1));
    const double eps = 0.05 + 0.9 * rng.next_double();
    const double p = 0.05 + 0.95 * rng.next_double();
    const double xi = 0.05 + 0.9 * rng.next_double();
    const double delta = 0.05 + 0.9 * rng.next_double();

    // Non-decreasing in n and P, non-decreasing in ln(1/eps) (smaller eps),
    // non-increasing in p.
    CHECK(t_bound_po(n + 1, capacity, eps) >= t_bound_po(n, capacity, eps));
    if (capacity <= n)
      CHECK(t_bound_po(n, capacity + 1, eps) >= t_bound_po(n, capacity, eps));
    CHECK(t_bound_po(n, capacity, eps * 0.5) >= t_bound_po(n, capacity, eps));

    CHECK(t_bound_bpo(n + 1, capacity, p, eps, xi) >=
          t_bound_bpo(n, capacity, p, eps, xi));
    CHECK(t_bound_bpo(n, capacity, p, eps * 0.5, xi) >=
          t_bound_bpo(n, capacity, p, eps, xi));
    CHECK(t_bound_bpo(n, capacity, p, eps, xi) >=
          t_bound_bpo(n, capacity, std::min(1.0, p * 1.5), eps, xi));

    CHECK(t_bound_kbpo(n + 1, p, eps) >= t_bound_kbpo(n, p, eps));
    CHECK(t_bound_kbpo(n, p, eps * 0.5) >= t_bound_kbpo(n, p, eps));
    CHECK(t_bound_kbpo(n, p, eps) >=
          t_bound_kbpo(n, std::min(1.0, p * 1.5), eps));

    CHECK(t_bound_posc(n + 1, delta) >= t_bound_posc(n, delta));
    CHECK(t_bound_posc(n, delta * 0.5) >= t_bound_posc(n, delta));

    CHECK(t_bound_bposc(n + 1, capacity, p, eps, xi, delta) >=
          t_bound_bposc(n, capacity, p, eps, xi, delta));
    CHECK(t_bound_bposc(n, capacity, p, eps, xi, delta * 0.5) >=
          t_bound_bposc(n, capacity, p, eps, xi, delta));

    const double ratio =
        guarantee_ratio(spec_of(GuaranteeSpec::Algorithm::kPo,
                                std::min(eps, 0.95)));
    CHECK(ratio > 0.0);
    CHECK(ratio < 1.0);
    const double tail = chernoff_tail(n, p, 0.5);
    CHECK(tail > 0.0);
    CHECK(tail <= 1.0);
  }
}
