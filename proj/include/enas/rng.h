// Copyright 2026 The ENAS-EHT Authors.
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

// Seeding. Every stochastic component takes its own stream derived from one
// base seed by labeled hashing:
//
//   stream seed = splitmix64(splitmix64(base ^ fnv1a(label)) + index)
//
// so per-trial streams are independent of scheduling and of each other.

#ifndef ENAS_RNG_H_
#define ENAS_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace enas {

struct RandomSeed {
  std::uint64_t value = 0;
  friend bool operator==(RandomSeed, RandomSeed) = default;
};

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

constexpr RandomSeed derive_seed(RandomSeed base, std::string_view label,
                                 std::uint64_t index = 0) {
  return {splitmix64(splitmix64(base.value ^ fnv1a(label)) + index)};
}

using Rng = std::mt19937_64;

inline Rng make_rng(RandomSeed seed) { return Rng(seed.value); }

}  // namespace enas

#endif  // ENAS_RNG_H_
