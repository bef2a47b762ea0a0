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
// Brute-force ground truth for small instances. These routines evaluate the
// objective through the uncounted path so that benchmark query counters stay
// meaningful.

#ifndef PARETOSUB_EXACT_ORACLE_HPP_
#define PARETOSUB_EXACT_ORACLE_HPP_

#include <cstdint>

#include "paretosub/objectives.hpp"
#include "paretosub/subset_mask.hpp"

namespace paretosub {

struct ExactResult {
  double opt_value = 0.0;
  SubsetMask opt_set;
  std::uint64_t enumerated = 0;  // candidate subsets examined
};

struct OracleReport {
  bool monotone = false;
  bool submodular = false;
  double worst_violation = 0.0;
};

// Exact maximum of f over subsets of cardinality <= kappa, with the
// lexicographically-smallest witness on value ties. Requires n <= 20 and
// sum_{i<=kappa} C(n,i) <= 2e6. Coverage objectives are enumerated in Gray
// order with incremental value updates; everything else is re-evaluated per
// candidate.
ExactResult brute_force_sm(const ObjectiveOracle& oracle, int kappa);

// Minimum cardinality reaching f >= tau, lex-smallest witness, enumerated in
// ascending cardinality with early exit. Requires n <= 20; raises
// InfeasibleError when tau > f(U).
ExactResult brute_force_sc(const ObjectiveOracle& oracle, double tau);

// Exhaustive monotonicity and submodularity check over all nested pairs,
// tolerance 1e-9 on the flags; worst_violation is the largest raw violation
// found. Requires n <= 12.
OracleReport verify_oracle(const ObjectiveOracle& oracle);

}  // namespace paretosub

#endif  // PARETOSUB_EXACT_ORACLE_HPP_
