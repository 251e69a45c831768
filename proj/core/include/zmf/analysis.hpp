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
#include <string>
#include <vector>

#include "zmf/types.hpp"

namespace zmf::analysis {

// |W_1(k; -s-1) - (k^2-4)^{-s-1/2} W_1(k; s)| for |k| > 2.
double check_fe_light(double k, Complex s);
// |W_1(k; -s-1) - cot(-pi s/2) (4-k^2)^{-s-1/2} W_1(k; s)| for |k| < 2 and
// -1 < Re s < 0.
double check_fe_heavy(double k, Complex s);

enum class ZeroMethod { bisection, argument_principle };
const char* to_string(ZeroMethod m);

struct ZeroRecord {
  double k = 0.0;
  double t = 0.0;         // s = -1/2 + i t
  double residual = 0.0;  // |W_1(k; s)|
  ZeroMethod method = ZeroMethod::bisection;
};

// The real function xi(t) = phase(t) W_1(k; -1/2 + i t).
double xi(double k, double t);

// Zeros of t -> W_1(k; -1/2 + i t) on [0, t_max], |k| != 2, t_max <= 50.
// Sign changes of xi on a grid of step `step` are refined by bisection.
std::vector<ZeroRecord> find_zeros_w1(double k, double t_max, double step = 0.01);

struct Box {
  double re_lo, re_hi, im_lo, im_hi;
};

struct BoxCount {
  Box box{};
  long winding = 0;
  double raw = 0.0;  // real part of the contour sum before rounding
};

// Zeros minus poles of W_1(k; .) inside the box by the argument principle.
BoxCount count_zeros_box(double k, const Box& box);

// Poles and zeros of the Gamma prefactor of W_1(k; s) on the real segment
// [re_lo, re_hi], reported apart from the critical-line zeros.
struct TrivialPoint {
  double s = 0.0;
  bool pole = false;
};
std::vector<TrivialPoint> prefactor_points(double k, double re_lo, double re_hi);

struct ConfinementReport {
  double k = 0.0;
  std::vector<ZeroRecord> zeros;
  std::vector<BoxCount> off_line;
  std::vector<BoxCount> strip;
  long off_line_total = 0;
  long strip_total = 0;
  double worst_residual = 0.0;
};

// Zeros on the critical line up to t_max together with argument-principle
// counts over [-2, 1] x [im_lo, t_max] with the strip |Re s + 1/2| < half_width
// counted separately.
ConfinementReport critical_line_report(double k, double t_max, double half_width = 1e-2,
                                       double im_lo = 1e-2);

// Jacobi function phi_lambda^{(alpha, beta)}(t).
Complex jacobi_phi(double alpha, double beta, Complex lambda, double t);
// (2 sinh t)^{2 alpha + 1} (2 cosh t)^{2 beta + 1}.
double jacobi_weight(double alpha, double beta, double t);
// Residual of the Jacobi differential equation at t > 0, derivatives by
// finite differences.
double jacobi_ode_residual(double alpha, double beta, Complex lambda, double t);

struct BeautyReport {
  Complex integral;   // int_0^x phi_lambda phi_mu Delta dt
  Complex wronskian;  // Delta(x) (phi_l' phi_m - phi_l phi_m') / (mu^2 - lambda^2)
  double residual = 0.0;
};
BeautyReport check_beauty(double alpha, double beta, Complex lambda, Complex mu, double x);

struct MahlerReport {
  EvalResult value;        // hypergeometric or Meijer route
  EvalResult integral;     // the 2- or 3-fold integral
  EvalResult derivative;   // finite difference of s -> W_r(k; s) at 0
  double spread = 0.0;     // largest pairwise difference
};

// m(k + (x + 1/x)(y + 1/y)) for |k| < 4.
MahlerReport mahler_w2(double k);
// m(k + (x + 1/x)(y + 1/y)(z + 1/z)) for 0 < |k| < 8.
MahlerReport mahler_w3(double k);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};
std::string to_string(const Rational& q);

struct RationalDecomposition {
  Rational q0, q1;  // W_1(1; n) = q0 + q1 sqrt(3) / pi
  double value = 0.0;
  double residual = 0.0;
};
RationalDecomposition w1_rational_decomposition(int n);

// Smallest integer relation c with |sum c_i x_i| tiny, by LLL reduction of
// the scaled lattice.  Entries of the result are bounded by max_coeff or
// the call throws reconstruction_failed.
std::vector<std::int64_t> integer_relation(const std::vector<double>& x, double scale,
                                           std::int64_t max_coeff);

}  // namespace zmf::analysis
