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

#ifndef KSUB_RANDOM_H_
#define KSUB_RANDOM_H_

#include <cmath>
#include <cstdint>
#include <random>

namespace ksub {

// std::mt19937_64 output is fixed by the standard, but the distribution
// classes are not; these helpers keep generated data identical across
// standard libraries.

// Uniform in [0, 1) with 53 random bits.
inline double UnitDouble(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double UniformDouble(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * UnitDouble(rng);
}

// Uniform in [0, bound); bound > 0. Multiply-shift; the bias is negligible
// for the small bounds used here.
inline std::uint64_t UniformIndex(std::mt19937_64& rng, std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

// Standard normal via Box-Muller.
inline double StandardNormal(std::mt19937_64& rng) {
  double u1 = 1.0 - UnitDouble(rng);  // (0, 1]
  double u2 = UnitDouble(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(6.283185307179586476925 * u2);
}

// Seed for an independent stream derived from (seed, stream).
inline std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace ksub

#endif  // KSUB_RANDOM_H_
