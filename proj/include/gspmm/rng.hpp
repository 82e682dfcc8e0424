/*
 * Copyright (c) gspmm contributors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>

namespace gspmm {

// Counter-based SplitMix64. All randomness in the library is a pure
// function of (seed, counter), using only integer ops and exact dyadic
// float conversions, so streams are reproducible across platforms and
// indexable out of order.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform double in [0, 1), 53 mantissa bits.
inline double u01_at(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(splitmix64_at(seed, counter) >> 11) * 0x1.0p-53;
}

// Uniform float in [-1, 1), 24 mantissa bits.
inline float unit_float_at(std::uint64_t seed, std::uint64_t counter) {
  const float u =
      static_cast<float>(splitmix64_at(seed, counter) >> 40) * 0x1.0p-24f;
  return 2.0f * u - 1.0f;
}

// Sequential cursor over a counter stream.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64() { return splitmix64_at(seed_, counter_++); }
  double next_u01() { return u01_at(seed_, counter_++); }

  // Uniform integer in [0, n) via 128-bit multiply-shift.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace gspmm
