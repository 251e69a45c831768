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

#include "zmf/hypergeometric.hpp"
#include "zmf/types.hpp"

namespace zmf {

enum class Regime { light, boundary, heavy };
const char* to_string(Regime r);

// |k| against 2^r, with |k| treated as 2^r within a relative 1e-12.
Regime regime(int r, double k);

// Approach side used for the real-s formula at arguments w > 1.
inline constexpr hyper::Branch kRealSBranch = hyper::Branch::from_below;

enum class MeijerRoute { mellin_barnes, triple_integral };

// W_1(k; s) for any k and any s off the poles of the prefactors.
EvalResult w1(double k, Complex s);

// W_r(k; s) for |k| >= 2^r.  On the boundary Re s > -r/2 is required.
EvalResult w_light(int r, double k, Complex s);

// W_r(k; s) for 0 < |k| < 2^r and real s > 0 away from the odd integers,
// through the continued r+1Fr.  Limited to r <= 4.
EvalResult w_real_s(int r, double k, double s);

// W_2(k; s) for |k| < 4, Re s > -1 and s at least 1e-6 from an odd integer.
EvalResult w2(double k, Complex s);

struct W2OddResult {
  EvalResult value;   // the limit route
  EvalResult meijer;  // the G^{2,3}_{3,3} route
  double discrepancy = 0.0;
};

// W_2(k; n) at odd n > 0, |k| < 4, from both routes.  Throws
// extrapolation_unstable when they disagree.
W2OddResult w2_odd(double k, int n);
// The limit route alone, starting the delta sequence at delta0.
EvalResult w2_odd_limit(double k, int n, double delta0 = 1e-2);

// W_3(k; s) for |k| < 8, Re s > -1 and s at least 1e-6 from an odd
// positive integer.
EvalResult w3(double k, Complex s, MeijerRoute route = MeijerRoute::mellin_barnes);

// F_{r,s}(z) = z^s r+1Fr(...; 4^r / z^2) continued to z off the real
// segment [-2^r, 2^r], principal branches.
EvalResult f_rs(int r, Complex s, Complex z);
// Boundary value F_{r,s}(x + i0) for real x.  For |x| >= 2^r with x > 0 this
// is the series value.
EvalResult f_rs_upper(int r, Complex s, double x);
// (F(|k| + i0) + F(-|k| + i0)) / (1 + e^{i pi s}) for 0 < |k| < 2^r.
EvalResult h_rs(int r, Complex s, double k);

// W_r(k; s) through the route appropriate for (r, k, s).
EvalResult w(int r, double k, Complex s);

struct BoundaryDerivativeReport {
  int r = 1;
  double s = 0.0;
  double left = 0.0;      // one-sided derivative from k < 2^r
  double right = 0.0;     // one-sided derivative from k > 2^r
  double expected = 0.0;  // s F_{r,s-1}(2^r)
  double residual = 0.0;  // max deviation of either side
};

// Finite-difference derivatives of k -> W_r(k; s) on both sides of 2^r.
// Needs s > 1 - r/2.
BoundaryDerivativeReport boundary_derivative_check(int r, double s);

struct KZeroReport {
  int r = 1;
  double s = 0.0;
  int j = 0;
  double derivative = 0.0;  // finite-difference right derivative at k = 0
  double expected = 0.0;    // Gamma(s+1)/Gamma(s-j+1) W_r(0; s-j), or 0 for odd j
  double table = 0.0;       // Gamma(s+1)^{r+1} / (Gamma(s-j+1) Gamma(1+s/2)^{2r}), or 0
  double residual = 0.0;    // |derivative - expected|
};

// j-th right derivative of k -> W_r(k; s) at k = 0 for j <= floor(s).
KZeroReport k_zero_derivatives(int r, double s, int j);

}  // namespace zmf
