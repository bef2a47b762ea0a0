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

#ifndef PARETOSUB_SUBSET_MASK_HPP_
#define PARETOSUB_SUBSET_MASK_HPP_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "paretosub/errors.hpp"

namespace paretosub {

// Fixed-width bit vector over ground-set indices 0..n-1 with a cached
// cardinality. The universal solution representation.
class SubsetMask {
 public:
  SubsetMask() : n_(0), cardinality_(0) {}

  explicit SubsetMask(int n) : n_(n), cardinality_(0) {
    if (n < 0) throw ConfigError("SubsetMask: negative ground-set size");
    words_.assign(static_cast<std::size_t>((n + 63) / 64), 0);
  }

  SubsetMask(int n, const std::vector<int>& elements) : SubsetMask(n) {
    for (int e : elements) set(e);
  }

  int n() const { return n_; }
  int cardinality() const { return cardinality_; }
  bool empty() const { return cardinality_ == 0; }

  bool test(int i) const {
    check_index(i);
    return (words_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1ULL;
  }

  void set(int i) {
    check_index(i);
    std::uint64_t& w = words_[static_cast<std::size_t>(i) / 64];
    const std::uint64_t bit = 1ULL << (i % 64);
    if (!(w & bit)) {
      w |= bit;
      ++cardinality_;
    }
  }

  void reset(int i) {
    check_index(i);
    std::uint64_t& w = words_[static_cast<std::size_t>(i) / 64];
    const std::uint64_t bit = 1ULL << (i % 64);
    if (w & bit) {
      w &= ~bit;
      --cardinality_;
    }
  }

  void flip(int i) {
    check_index(i);
    std::uint64_t& w = words_[static_cast<std::size_t>(i) / 64];
    const std::uint64_t bit = 1ULL << (i % 64);
    w ^= bit;
    cardinality_ += (w & bit) ? 1 : -1;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality_));
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        out.push_back(static_cast<int>(w * 64) + b);
        bits &= bits - 1;
      }
    }
    return out;
  }

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator!=(const SubsetMask& a, const SubsetMask& b) {
    return !(a == b);
  }

  // Element-sequence lexicographic order ({0,1} < {0,2} < {1}; a proper
  // prefix sorts first). Used for deterministic tie-breaking.
  friend bool lex_less(const SubsetMask& a, const SubsetMask& b) {
    for (std::size_t w = 0; w < a.words_.size() && w < b.words_.size(); ++w) {
      const std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff == 0) continue;
      const int bit = std::countr_zero(diff);
      const bool in_a = (a.words_[w] >> bit) & 1ULL;
      // The lowest differing element belongs to exactly one side. That side
      // sorts first unless the other side has already ended (is a prefix).
      if (in_a) return has_bits_at_or_above(b, w, bit);
      return !has_bits_at_or_above(a, w, bit);
    }
    return false;
  }

  // Uppercase hex of the membership bits, most significant nibble first,
  // fixed width ceil(n/4). Element i is bit i of the encoded integer.
  std::string to_hex() const {
    const int nibbles = (n_ + 3) / 4;
    std::string out(static_cast<std::size_t>(nibbles), '0');
    static const char kDigits[] = "0123456789ABCDEF";
    for (int v = 0; v < nibbles; ++v) {
      const int lo = v * 4;
      int value = 0;
      for (int b = 0; b < 4 && lo + b < n_; ++b) {
        if (test(lo + b)) value |= 1 << b;
      }
      out[static_cast<std::size_t>(nibbles - 1 - v)] = kDigits[value];
    }
    return out;
  }

  // Raw membership bits for small ground sets (n <= 64).
  std::uint64_t bits64() const {
    if (n_ > 64) throw CapacityError("SubsetMask::bits64: n > 64");
    return words_.empty() ? 0 : words_[0];
  }

  static SubsetMask from_bits(int n, std::uint64_t bits) {
    if (n > 64) throw CapacityError("SubsetMask::from_bits: n > 64");
    SubsetMask mask(n);
    if (!mask.words_.empty()) {
      if (n < 64) bits &= (1ULL << n) - 1;
      mask.words_[0] = bits;
      mask.cardinality_ = std::popcount(bits);
    }
    return mask;
  }

  static SubsetMask from_hex(int n, const std::string& hex) {
    SubsetMask mask(n);
    const int nibbles = (n + 3) / 4;
    if (static_cast<int>(hex.size()) != nibbles)
      throw ConfigError("SubsetMask::from_hex: wrong digit count");
    for (int v = 0; v < nibbles; ++v) {
      const char c = hex[static_cast<std::size_t>(nibbles - 1 - v)];
      int value;
      if (c >= '0' && c <= '9') value = c - '0';
      else if (c >= 'A' && c <= 'F') value = c - 'A' + 10;
      else if (c >= 'a' && c <= 'f') value = c - 'a' + 10;
      else throw ConfigError("SubsetMask::from_hex: bad hex digit");
      for (int b = 0; b < 4; ++b) {
        if (value & (1 << b)) {
          const int idx = v * 4 + b;
          if (idx >= n) throw ConfigError("SubsetMask::from_hex: bit beyond n");
          mask.set(idx);
        }
      }
    }
    return mask;
  }

 private:
  static bool has_bits_at_or_above(const SubsetMask& m, std::size_t word,
                                   int bit) {
    const std::uint64_t high =
        bit == 63 ? (1ULL << 63) : (~0ULL << bit);
    if (m.words_[word] & high) return true;
    for (std::size_t w = word + 1; w < m.words_.size(); ++w)
      if (m.words_[w]) return true;
    return false;
  }

  void check_index(int i) const {
    if (i < 0 || i >= n_)
      throw ConfigError("SubsetMask: index " + std::to_string(i) +
                        " out of range for n=" + std::to_string(n_));
  }

  int n_;
  int cardinality_;
  std::vector<std::uint64_t> words_;
};

}  // namespace paretosub

#endif  // PARETOSUB_SUBSET_MASK_HPP_
