// Copyright 2026 The RDB Authors
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

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "rdb/common.hpp"

namespace rdb {

// Deterministic RNG. The engine is std::mt19937_64 (its sequence is fixed
// by the standard); all distribution transforms are implemented here
// because the standard library's distributions are not portable across
// implementations. Same seed => same stream, on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Unbiased draw from [0, n) via rejection.
  idx uniform_int(idx n) {
    if (n <= 0) throw ContractError("Rng::uniform_int: n must be positive");
    const uint64_t un = static_cast<uint64_t>(n);
    const uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return static_cast<idx>(v % un);
  }

  // Standard normal, Box-Muller, second value cached.
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1, u2;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (idx i = static_cast<idx>(v.size()) - 1; i > 0; --i) {
      std::swap(v[static_cast<size_t>(i)],
                v[static_cast<size_t>(uniform_int(i + 1))]);
    }
  }

  // Derives an independent stream seed from a master seed and a stream id
  // (splitmix64 finalizer). Used for per-epoch shuffles, per-step dropout
  // masks and per-fold training so checkpoint resume needs only counters.
  static uint64_t derive(uint64_t master, uint64_t stream) {
    uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace rdb
