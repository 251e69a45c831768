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
#include "zmf/quadrature.hpp"

#include <array>
#include <cmath>
#include <mutex>

namespace zmf::quad {
namespace {

constexpr double kSmallestGap = 1e-300;

LevelTable build(int level) {
  LevelTable tab;
  tab.step = std::ldexp(1.0, -level);
  const int stride = level == 0 ? 1 : 2;
  const int first = 1;
  for (int k = first;; k += stride) {
    const double t = k * tab.step;
    const double u = kHalfPi * std::sinh(t);
    const double cu = std::cosh(u);
    const double e = std::exp(-u) / cu;
    if (!(e > kSmallestGap)) break;
    tab.e.push_back(e);
    tab.w.push_back(kHalfPi * std::cosh(t) / (cu * cu));
  }
  return tab;
}

}  // namespace

const LevelTable& level_table(int level) {
  static std::array<LevelTable, kMaxLevel + 1> tables;
  static std::once_flag once;
  std::call_once(once, [] {
    for (int l = 0; l <= kMaxLevel; ++l) tables[l] = build(l);
  });
  return tables[level < 0 ? 0 : (level > kMaxLevel ? kMaxLevel : level)];
}

}  // namespace zmf::quad
