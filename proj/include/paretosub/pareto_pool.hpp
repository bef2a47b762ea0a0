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
// The archive of mutually non-dominated (subset, value) entries maintained by
// the Pareto optimizers. A solution Y weakly dominates X when f(Y) >= f(X)
// and |Y| <= |X|; dominance forces at most one entry per cardinality and
// values strictly increasing in cardinality, so the pool is a dense array
// indexed by cardinality.

#ifndef PARETOSUB_PARETO_POOL_HPP_
#define PARETOSUB_PARETO_POOL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "paretosub/subset_mask.hpp"

namespace paretosub {

struct PoolEntry {
  SubsetMask subset;
  double value = 0.0;

  int cardinality() const { return subset.cardinality(); }
};

// Weak dominance: y is at least as good in value and no larger.
bool precedes(const PoolEntry& x, const PoolEntry& y);
// Strict dominance: precedes with at least one strict inequality.
bool dominates(const PoolEntry& x, const PoolEntry& y);
// Same value and same cardinality.
bool equivalent(const PoolEntry& x, const PoolEntry& y);

enum class InsertOutcome { kAdded, kRejected };

class ParetoPool {
 public:
  // Capacity P: the pool stores entries of cardinality 0..P-1 and always
  // contains the empty set with value 0.
  ParetoPool(int n, int capacity);

  int capacity() const { return static_cast<int>(slots_.size()); }
  int n() const { return n_; }

  // Number of stored entries (>= 1, the empty set never leaves).
  int size() const { return size_; }

  bool has(int cardinality) const {
    return cardinality >= 0 && cardinality < capacity() &&
           slots_[static_cast<std::size_t>(cardinality)].has_value();
  }

  std::optional<PoolEntry> get_by_cardinality(int cardinality) const;

  // Candidates of cardinality >= P, and candidates weakly dominated by (or
  // equivalent to) an existing entry, are rejected; otherwise the candidate
  // enters and every entry it dominates leaves.
  InsertOutcome insert(PoolEntry candidate);

  // The value-maximizing entry among cardinalities <= cap; by the pool
  // invariants this is the entry of largest present cardinality <= cap.
  // Always defined: the empty set qualifies for every cap >= 0.
  const PoolEntry& best_under(int cap) const;

  std::vector<PoolEntry> entries() const;

  // Ascending cardinalities of the stored entries.
  std::vector<int> present_cardinalities() const;

  // JSON array of {"cardinality", "value", "subset_hex"}, used for
  // checkpoints; see from_json_string for the inverse.
  std::string to_json_string() const;
  static ParetoPool from_json_string(int n, int capacity,
                                     const std::string& json_text);

 private:
  int n_;
  int size_ = 0;
  std::vector<std::optional<PoolEntry>> slots_;
};

}  // namespace paretosub

#endif  // PARETOSUB_PARETO_POOL_HPP_
