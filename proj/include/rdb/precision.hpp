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

#include "rdb/common.hpp"

namespace rdb {

// Tolerance tiers per scalar precision. 64-bit is the contract for the
// oracle and gradient-check suites; the 32-bit build is a training-speed
// option and relaxes everything by the usual ~7 digits.
inline constexpr bool kReal64 = sizeof(real) == 8;

// Exact-arithmetic comparisons (oracle equivalence, closed forms).
inline constexpr real kTolExact = kReal64 ? real(1e-12) : real(1e-4);
// Accumulated-rounding comparisons (normalization, softmax row sums).
inline constexpr real kTolAccum = kReal64 ? real(1e-9) : real(1e-3);
// Finite-difference gradient checks.
inline constexpr real kTolGrad = kReal64 ? real(1e-6) : real(1e-2);

}  // namespace rdb
