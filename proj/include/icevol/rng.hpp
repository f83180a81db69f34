/*
 * icevol : sparse ICE volume geometry and evaluation toolkit
 *
 * Copyright 2026 the icevol authors
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

#ifndef ICEVOL_RNG_HPP
#define ICEVOL_RNG_HPP

#include <cmath>
#include <cstdint>

namespace icevol {

// SplitMix64 generator. std::uniform_real_distribution is not pinned by the
// standard, so all randomness goes through this to keep seeded runs
// reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Independent substream for (seed, index); used for per-slice noise.
  static Rng substream(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed);
    std::uint64_t mixed = r.next_u64() ^ (index * 0xff51afd7ed558ccdULL + 1);
    return Rng(mixed);
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Box-Muller; consumes two draws per call so the draw count stays fixed.
  double normal() {
    double u1 = 1.0 - next_double();  // (0, 1]
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace icevol

#endif  // ICEVOL_RNG_HPP
