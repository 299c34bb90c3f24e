// Copyright 2026 The sparsecce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPARSECCE_RNG_HPP_
#define SPARSECCE_RNG_HPP_

#include <cstdint>

namespace sparsecce {

// SplitMix64 output function (Steele, Lea, Flood 2014). Used as a stateless
// hash so every random entry is addressed by (seed, i, j) and generation order
// never matters.
constexpr uint64_t SplitMix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr uint64_t HashIndex(uint64_t seed, uint64_t i, uint64_t j,
                             uint64_t stream = 0) {
  uint64_t h = SplitMix64(seed ^ (stream * 0xd1b54a32d192ed03ULL));
  h = SplitMix64(h ^ i);
  return SplitMix64(h ^ (j + 0x632be59bd9b4e019ULL));
}

// Sequential stream over the same mixer, for code that just needs draws.
class SplitMixStream {
 public:
  explicit SplitMixStream(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return SplitMix64(state_);
  }

  // Uniform on [0, bound) by rejection, so results do not depend on the
  // standard library's distribution implementations.
  uint64_t Below(uint64_t bound) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
      const uint64_t v = Next();
      if (v < limit) return v % bound;
    }
  }

 private:
  uint64_t state_;
};

}  // namespace sparsecce

#endif  // SPARSECCE_RNG_HPP_
