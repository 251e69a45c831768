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

#include "zmf/types.hpp"

namespace zmf::density {

// One density evaluation together with its support.
struct DensitySample {
  int r = 1;
  double k = 0.0;
  double x = 0.0;
  double value = 0.0;
  double support_lo = 0.0;
  double support_hi = 0.0;
};

// Density of prod (X_i + 1/X_i) for r in {1,2,3}; even in x, zero outside
// [-2^r, 2^r].  Throws edge_singularity at |x| = 2 (r = 1) and x = 0 (r > 1).
double p_hat(int r, double x);
// Same density from |x| and gap = 2^r - |x|, both supplied exactly by the
// caller so that the edge factors keep full relative precision.
double p_hat_gap(int r, double abs_x, double gap);

// Closed-form G_r(y) = p_hat_r(2^r sqrt(1-y)) for r in {1,2,3}, with the
// complement 1 - y passed separately.
double g_closed(int r, double y, double one_minus_y);

// G_r from the integral recursion starting at G_1(y) = 1/(2 pi sqrt y).
EvalResult g_recursion(int r, double y, double tol = 1e-12);
EvalResult g_recursion(int r, double y, double one_minus_y, double tol);

// Density of |k + prod (X_i + 1/X_i)| at x; closed forms for r <= 3 and the
// recursion for 4 <= r <= 6.
double p_r(int r, double k, double x);
DensitySample sample_p_r(int r, double k, double x);

// v-th moment of p_hat_r over (0, inf), or over the whole line.
Complex moment(int r, Complex v, bool two_sided);

// Mellin transform of H_r(y) = G_r(1 - y) on (0, 1).
Complex mellin_H(int r, Complex s);

}  // namespace zmf::density
