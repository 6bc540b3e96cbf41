// Copyright 2026 The kanjinet Authors
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

#ifndef KANJINET_RNG_HPP
#define KANJINET_RNG_HPP

#include <cstdint>
#include <random>

namespace kanjinet {

// Default master seed used by every randomized entry point when the caller
// does not supply one.
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed for the `stream`-th independent sub-computation (random-graph sample,
/// invasion run, ...) of a master seed:
///
///   derive_seed(master, stream) = splitmix64(master ^ splitmix64(stream))
///
/// Depends only on (master, stream), so results do not depend on the order in
/// which streams are executed.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream));
}

/// Portable random source. The standard distributions are
/// implementation-defined, so bounded integers and uniform reals are derived
/// from the raw 64-bit mt19937_64 stream here to keep outputs bit-exact across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Uniform real in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Exponential variate with the given rate.
  double exponential(double rate);

 private:
  std::mt19937_64 engine_;
};

}  // namespace kanjinet

#endif  // KANJINET_RNG_HPP
