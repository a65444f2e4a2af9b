/*
 * Copyright 2026 The SemVPS Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEMVPS_RNG_HPP_
#define SEMVPS_RNG_HPP_

#include <cstdint>

namespace semvps {

// splitmix64. Seed-deterministic across platforms and standard library
// versions, unlike std::uniform_*_distribution, so serialized study outputs
// stay byte-identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  // Independent stream for a sub-task (e.g. per-trial seeds).
  static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    Rng r(master ^ (0x632be59bd9b4e019ULL + index * 0x9e3779b97f4a7c15ULL));
    return r.next_u64();
  }

 private:
  std::uint64_t state_;
};

}  // namespace semvps

#endif  // SEMVPS_RNG_HPP_
