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

#include "paretosub/pareto_pool.hpp"

#include <nlohmann/json.hpp>

#include "paretosub/errors.hpp"

namespace paretosub {

bool precedes(const PoolEntry& x, const PoolEntry& y) {
  return y.value >= x.value && y.cardinality() <= x.cardinality();
}

bool dominates(const PoolEntry& x, const PoolEntry& y) {
  return precedes(x, y) &&
         (y.value > x.value || y.cardinality() < x.cardinality());
}

bool equivalent(const PoolEntry& x, const PoolEntry& y) {
  return x.value == y.value && x.cardinality() == y.cardinality();
}

ParetoPool::ParetoPool(int n, int capacity) : n_(n) {
  if (n < 0) throw ConfigError("pool: negative ground-set size");
  if (capacity < 1 || capacity > n + 1)
    throw ConfigError("pool: capacity must be in [1, n+1]");
  slots_.assign(static_cast<std::size_t>(capacity), std::nullopt);
  slots_[0] = PoolEntry{SubsetMask(n), 0.0};
  size_ = 1;
}

std::optional<PoolEntry> ParetoPool::get_by_cardinality(int cardinality) const {
  if (cardinality < 0 || cardinality >= capacity()) return std::nullopt;
  return slots_[static_cast<std::size_t>(cardinality)];
}

InsertOutcome ParetoPool::insert(PoolEntry candidate) {
  const int card = candidate.cardinality();
  if (candidate.subset.n() != n_)
    throw ConfigError("pool: candidate over wrong ground set");
  if (card >= capacity()) return InsertOutcome::kRejected;

  // Weak dominance against the pool reduces to one lookup: the best entry at
  // cardinality <= card has the pool's max value in that range.
  const PoolEntry& incumbent = best_under(card);
  if (incumbent.value >= candidate.value) return InsertOutcome::kRejected;

  // The candidate strictly improves on everything at or below its
  // cardinality; remove the entries it dominates (same cardinality, or
  // larger cardinality with value <= candidate's).
  for (int c = card; c < capacity(); ++c) {
    auto& slot = slots_[static_cast<std::size_t>(c)];
    if (!slot) continue;
    if (c == card || slot->value <= candidate.value) {
      slot.reset();
      --size_;
    }
    if (c > card && slot && slot->value > candidate.value) break;
  }
  slots_[static_cast<std::size_t>(card)] = std::move(candidate);
  ++size_;
  return InsertOutcome::kAdded;
}

const PoolEntry& ParetoPool::best_under(int cap) const {
  if (cap < 0) throw ConfigError("pool: negative cardinality cap");
  int c = std::min(cap, capacity() - 1);
  for (; c > 0; --c) {
    if (slots_[static_cast<std::size_t>(c)]) break;
  }
  return *slots_[static_cast<std::size_t>(c)];
}

std::vector<PoolEntry> ParetoPool::entries() const {
  std::vector<PoolEntry> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (const auto& slot : slots_)
    if (slot) out.push_back(*slot);
  return out;
}

std::vector<int> ParetoPool::present_cardinalities() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int c = 0; c < capacity(); ++c)
    if (slots_[static_cast<std::size_t>(c)]) out.push_back(c);
  return out;
}

std::string ParetoPool::to_json_string() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& entry : entries()) {
    arr.push_back({{"cardinality", entry.cardinality()},
                   {"value", entry.value},
                   {"subset_hex", entry.subset.to_hex()}});
  }
  return arr.dump();
}

ParetoPool ParetoPool::from_json_string(int n, int capacity,
                                        const std::string& json_text) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("pool snapshot: ") + e.what(), 1);
  }
  ParetoPool pool(n, capacity);
  if (!arr.is_array()) throw ConfigError("pool snapshot: expected array");
  for (const auto& item : arr) {
    PoolEntry entry{SubsetMask::from_hex(n, item.at("subset_hex")),
                    item.at("value").get<double>()};
    if (entry.cardinality() != item.at("cardinality").get<int>())
      throw ConfigError("pool snapshot: cardinality/mask mismatch");
    if (entry.cardinality() == 0) continue;  // the empty set is implicit
    if (pool.insert(std::move(entry)) != InsertOutcome::kAdded)
      throw ConfigError("pool snapshot: entries violate dominance");
  }
  return pool;
}

}  // namespace paretosub
