// Copyright 2026 The zmf Authors.
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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>

namespace zmf::testing {

// SplitMix64 stream for property tests.  Fixed seeds keep every run identical.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
  }

  int integer(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

  // Point in the disk |z| < radius with |Im z| >= min_im.
  std::complex<double> off_axis(double radius, double min_im) {
    for (;;) {
      const std::complex<double> z(uniform(-radius, radius), uniform(-radius, radius));
      if (std::abs(z) < radius && std::abs(z.imag()) >= min_im) return z;
    }
  }

 private:
  std::uint64_t state_;
};

inline double rel_diff(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

inline double rel_only(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::abs(b);
}

}  // namespace zmf::testing
