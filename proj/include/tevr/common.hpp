// tevr/common.hpp

// Copyright 2026  TEVR Toolkit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef TEVR_COMMON_HPP_
#define TEVR_COMMON_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace tevr {

constexpr double kLogZero = -std::numeric_limits<double>::infinity();

// File or stream failure; the CLI maps this to its own exit code.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Training was asked to run on an empty corpus.
class EmptyCorpusError : public std::runtime_error {
 public:
  explicit EmptyCorpusError(const std::string& what) : std::runtime_error(what) {}
};

// Artifacts that do not belong together (e.g. logits whose vocabulary hash
// does not match the supplied vocabulary, or text not covered by it).
class IncompatibleArtifactError : public std::runtime_error {
 public:
  explicit IncompatibleArtifactError(const std::string& what)
      : std::runtime_error(what) {}
};

inline double log_add(double a, double b) {
  if (a == kLogZero) return b;
  if (b == kLogZero) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

// Deterministic RNG. The uniform and gaussian transforms are spelled out here
// because the std distributions are implementation-defined; identical seeds
// must give identical artifacts everywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [lo, hi] by rejection-free modulo over a wide range.
  int64_t uniform_int(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(engine_() % span);
  }

  // Standard normal via Box-Muller; caches the second variate.
  double gauss() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace tevr

#endif  // TEVR_COMMON_HPP_
