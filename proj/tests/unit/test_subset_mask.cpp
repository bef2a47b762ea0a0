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

#include "paretosub/subset_mask.hpp"

#include <doctest.h>

#include "paretosub/rng.hpp"

using namespace paretosub;

TEST_CASE("cardinality tracks the population count under random flips") {
  RngStream rng(101);
  for (int n : {1, 7, 64, 130}) {
    SubsetMask mask(n);
    for (int step = 0; step < 500; ++step) {
      const int i = static_cast<int>(rng.uniform_int(n));
      mask.flip(i);
      int expected = 0;
      for (int u = 0; u < n; ++u) expected += mask.test(u) ? 1 : 0;
      REQUIRE(mask.cardinality() == expected);
    }
  }
}

TEST_CASE("hex encoding round-trips") {
  SubsetMask mask(5, {0, 2});
  CHECK(mask.to_hex() == "05");
  CHECK(SubsetMask::from_hex(5, "05") == mask);

  RngStream rng(7);
  for (int n : {1, 4, 13, 64, 70}) {
    SubsetMask m(n);
    for (int u = 0; u < n; ++u)
      if (rng.next_double() < 0.4) m.set(u);
    CHECK(SubsetMask::from_hex(n, m.to_hex()) == m);
  }
  CHECK_THROWS_AS(SubsetMask::from_hex(5, "123"), ConfigError);
  CHECK_THROWS_AS(SubsetMask::from_hex(4, "g"), ConfigError);
  CHECK_THROWS_AS(SubsetMask::from_hex(2, "8"), ConfigError);  // bit beyond n
}

TEST_CASE("bits64 round-trips for small ground sets") {
  const SubsetMask mask = SubsetMask::from_bits(10, 0b1010010101ULL);
  CHECK(mask.cardinality() == 5);
  CHECK(mask.bits64() == 0b1010010101ULL);
  CHECK(SubsetMask::from_bits(10, mask.bits64()) == mask);
}

TEST_CASE("lexicographic order follows element sequences") {
  const auto mask = [](std::vector<int> elems, int n = 6) {
    return SubsetMask(n, elems);
  };
  CHECK(lex_less(mask({}), mask({0})));
  CHECK(lex_less(mask({0}), mask({0, 1})));     // prefix sorts first
  CHECK(lex_less(mask({0, 1}), mask({0, 2})));
  CHECK(lex_less(mask({0, 1}), mask({1})));     // 0 < 1 at the front
  CHECK(!lex_less(mask({1}), mask({0, 1})));
  CHECK(!lex_less(mask({0, 2}), mask({0, 2})));
  CHECK(lex_less(mask({0, 3, 5}), mask({0, 4})));
}

TEST_CASE("out-of-range access is rejected") {
  SubsetMask mask(4);
  CHECK_THROWS_AS(mask.set(4), ConfigError);
  CHECK_THROWS_AS(mask.test(-1), ConfigError);
}
