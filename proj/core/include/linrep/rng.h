// Copyright 2026 The linrep Authors
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

#ifndef LINREP_RNG_H_
#define LINREP_RNG_H_

#include <cstdint>

namespace linrep {

// Counter-based generator: the n-th output is a pure function of (key, n), so
// streams can be split per trial or per level without depending on thread
// scheduling. The mixing function is SplitMix64's finalizer.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() { return mix(key_ ^ mix(counter_++)); }

  // Uniform integer in [0, bound). Rejection sampling keeps it unbiased.
  std::uint64_t uniform(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  // Independent child stream, e.g. one per trial index.
  CounterRng derive(std::uint64_t stream) const {
    return CounterRng(mix(key_ + 0x632be59bd9b4e019ULL * (stream + 1)));
  }

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace linrep

#endif  // LINREP_RNG_H_
