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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rdb {

// Scalar type for all tensor math. The default (double) is required by the
// gradient-check and oracle test suites; float is a build-time option for
// faster training (-DRDB_REAL_FLOAT32=ON). Tolerance tiers per precision
// live in precision.hpp.
#ifdef RDB_REAL_FLOAT32
using real = float;
#else
using real = double;
#endif

using idx = long;
using Shape = std::vector<idx>;

// Error taxonomy. Shape/contract errors are programming errors at call
// sites; parse/config errors carry enough context to fix the input file.
class ShapeError : public std::runtime_error {
 public:
  explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

class ContractError : public std::runtime_error {
 public:
  explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& file, long line, const std::string& msg)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + msg),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

std::string shape_str(const Shape& s);

inline idx numel_of(const Shape& s) {
  idx n = 1;
  for (idx d : s) n *= d;
  return n;
}

}  // namespace rdb
