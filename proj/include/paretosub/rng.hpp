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
// Deterministic random streams.
//
// Every stochastic routine in the library draws from a named substream so
// that runs are reproducible draw-for-draw: two algorithms that consume the
// same substreams in the same order produce identical results, regardless of
// what the other substreams are used for. std::mt19937_64 output and our
// uniform mappings are fully specified, so identical (seed, stream, index)
// means an identical draw on every platform.

#ifndef PARETOSUB_RNG_HPP_
#define PARETOSUB_RNG_HPP_

#include <cstdint>
#include <random>

namespace paretosub {

// SplitMix64 finalizer; also used as the fixed integer hash for deriving
// per-repetition seeds in the harness.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// One independent stream of uniform draws.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound), unbiased via rejection. bound >= 1.
  std::uint64_t uniform_int(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  std::mt19937_64 engine_;
};

// The named substreams an optimizer run may consume. Substream seeds are
// consecutive SplitMix64 outputs of the master seed, so streams derived from
// the same master seed are decorrelated but reproducible.
struct RngStreams {
  RngStream select;  // which pool slot / pool entry to mutate
  RngStream coin;    // the bias coin of BPO-style selection
  RngStream bias;    // which bias pointer j to follow
  RngStream mutate;  // per-element membership flips
  RngStream sg;      // stochastic-greedy subsampling

  explicit RngStreams(std::uint64_t master_seed)
      : select(splitmix64(master_seed + 1)),
        coin(splitmix64(master_seed + 2)),
        bias(splitmix64(master_seed + 3)),
        mutate(splitmix64(master_seed + 4)),
        sg(splitmix64(master_seed + 5)) {}
};

}  // namespace paretosub

#endif  // PARETOSUB_RNG_HPP_
