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

#include <cstdint>

#include "zmf/types.hpp"

namespace zmf::oracle {

struct QuadratureConfig {
  double tol = 1e-10;
  int max_subdivisions = 12;
  bool singularity_splitting = true;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1'000'000;
};

// Throws precondition unless tol >= 1e-14, samples >= 1 and
// max_subdivisions >= 0.
void validate(const QuadratureConfig& cfg);

// (1/pi^r) times the integral of |k + prod 2 cos(t_i)|^s over [0, pi]^r, by
// nested double-exponential quadrature, r <= 3.
EvalResult torus_quadrature(int r, double k, Complex s, const QuadratureConfig& cfg = {});

// Sample mean over uniform angles with Philox4x32-10 streams keyed by the
// seed.  abs_err is three standard errors.
EvalResult monte_carlo(int r, double k, Complex s, const QuadratureConfig& cfg = {});

// Integral of |k + u|^s against the density of prod (X_i + 1/X_i), r <= 4.
// The r = 4 density comes from the integral recursion.
EvalResult density_quadrature(int r, double k, Complex s, const QuadratureConfig& cfg = {});

}  // namespace zmf::oracle
