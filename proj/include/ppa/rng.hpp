#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2025-2026 The ppasim authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <cmath>
#include <cstdint>
#include <numbers>

namespace ppa {

/// 64-bit avalanche finalizer (the splitmix64 output stage). Used both as the
/// generator's output function and to derive independent substream seeds from
/// (seed, key...) tuples, so results never depend on thread scheduling.
constexpr std::uint64_t avalanche64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

/// Minimal counter-based generator (splitmix64). One instance per replicate;
/// never shared across threads.
class Rng {
 public:
  explicit constexpr Rng(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next_u64() noexcept {
    state_ += kGoldenGamma;
    return avalanche64(state_);
  }

  /// Uniform draw in [0, 1) with 53 random bits.
  double next_unit() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform draw in [lo, hi).
  double next_in(double lo, double hi) noexcept {
    return lo + (hi - lo) * next_unit();
  }

  /// Standard normal via Box-Muller; one variate per call.
  double next_normal() noexcept {
    double u1 = next_unit();
    while (u1 <= 0.0) u1 = next_unit();
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t state_;
};

/// Derives the generator for one substream from a root seed and two keys
/// (here: the rho value's bit pattern and the replicate index). Streams with
/// distinct keys are statistically independent.
inline Rng substream(std::uint64_t seed, std::uint64_t key_a,
                     std::uint64_t key_b) noexcept {
  std::uint64_t h = avalanche64(seed + kGoldenGamma);
  h = avalanche64(h ^ (key_a + kGoldenGamma));
  h = avalanche64(h ^ (key_b + kGoldenGamma));
  return Rng(h);
}

}  // namespace ppa
