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

#ifndef LATSUB_RANDOM_H_
#define LATSUB_RANDOM_H_

#include <cstdint>
#include <limits>
#include <span>
#include <utility>

namespace latsub {

// SplitMix64 (Steele, Lea, Flood 2014). Output is fully specified by the
// algorithm, so seeded runs reproduce bit-for-bit on every platform. Models
// std::uniform_random_bit_generator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Uniform integer in [0, bound) by rejection of the biased low range.
// std::uniform_int_distribution is implementation-defined, so it is avoided.
inline std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

// Uniform integer in [lo, hi].
inline std::int64_t uniform_int(SplitMix64& rng, std::int64_t lo,
                                std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

// Moves `count` distinct uniformly chosen entries of `pool` to its front, in
// draw order (partial Fisher-Yates). Requires count <= pool.size().
template <typename T>
void partial_shuffle(std::span<T> pool, std::size_t count, SplitMix64& rng) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + uniform_below(rng, pool.size() - i);
    using std::swap;
    swap(pool[i], pool[j]);
  }
}

// Seed for stream `index` of `master`: the first SplitMix64 output after
// seeding with master + index·golden_gamma.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 g(master + index * 0x9e3779b97f4a7c15ULL);
  return g();
}

}  // namespace latsub

#endif  // LATSUB_RANDOM_H_
