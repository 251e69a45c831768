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
#include "zmf/meijer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>

#include "zmf/gamma.hpp"
#include "zmf/quadrature.hpp"

namespace zmf::meijer {
namespace {

constexpr double kPinch = 1e-8;

void validate(const MeijerSpec& g) {
  const bool known = (g.m == 2 && g.n == 4 && g.p == 4 && g.q == 4) ||
                     (g.m == 2 && g.n == 3 && g.p == 3 && g.q == 3);
  if (!known) raise(ErrorKind::unsupported, "only G^{2,4}_{4,4} and G^{2,3}_{3,3} are supported");
  if (static_cast<int>(g.a.size()) != g.p || static_cast<int>(g.b.size()) != g.q)
    raise(ErrorKind::precondition, "Meijer parameter rows do not match the orders");
  if (!(g.x > 0.0 && g.x < 1.0)) raise(ErrorKind::domain, "Meijer argument must lie in (0, 1)");
}

struct Integrand {
  const MeijerSpec& g;
  double log_x;

  // Log of the Mellin-Barnes integrand, skipping factor 'skip' of the
  // numerator right family (used for residues).  Returns false when a
  // denominator gamma is infinite, i.e. the integrand vanishes.
  bool log_value(Complex t, Complex* out, int skip = -1) const {
    Complex acc = log_x * t;
    for (int j = 0; j < g.m; ++j)
      if (j != skip) acc += log_gamma(g.b[j] - t);
    for (int j = 0; j < g.n; ++j) acc += log_gamma(1.0 - g.a[j] + t);
    for (int j = g.m; j < g.q; ++j) {
      if (near_nonpositive_integer(1.0 - g.b[j] + t)) return false;
      acc -= log_gamma(1.0 - g.b[j] + t);
    }
    for (int j = g.n; j < g.p; ++j) {
      if (near_nonpositive_integer(g.a[j] - t)) return false;
      acc -= log_gamma(g.a[j] - t);
    }
    *out = acc;
    return true;
  }

  Complex value(Complex t) const {
    Complex l;
    if (!log_value(t, &l)) return 0.0;
    return std::exp(l);
  }
};

int pole_order(const MeijerSpec& g, Complex t) {
  int order = 0;
  for (int j = 0; j < g.m; ++j) order += near_nonpositive_integer(g.b[j] - t) ? 1 : 0;
  for (int j = 0; j < g.n; ++j) order += near_nonpositive_integer(1.0 - g.a[j] + t) ? 1 : 0;
  for (int j = g.m; j < g.q; ++j) order -= near_nonpositive_integer(1.0 - g.b[j] + t) ? 1 : 0;
  for (int j = g.n; j < g.p; ++j) order -= near_nonpositive_integer(g.a[j] - t) ? 1 : 0;
  return order;
}

}  // namespace

double agm(double a, double b) {
  for (int i = 0; i < 64; ++i) {
    const double an = 0.5 * (a + b);
    const double bn = std::sqrt(a * b);
    if (std::abs(an - bn) <= 4e-16 * an) return 0.5 * (an + bn);
    a = an;
    b = bn;
  }
  return a;
}

MeijerSpec w3_kernel(Complex s, double k) {
  const Complex ua = 0.5 * (2.0 + s);
  const Complex ub = 0.5 * (1.0 + s);
  return {{ua, ua, ua, ua}, {ub, ub, 0.0, 0.5}, 2, 4, 4, 4, k * k / 64.0};
}

MeijerSpec w2_odd_kernel(int n, double k) {
  const double ua = 1.0 + 0.5 * n;
  return {{ua, ua, ua}, {0.0, 0.5 * (n + 1), 0.5}, 2, 3, 3, 3, k * k / 16.0};
}

EvalResult meijer_mb(const MeijerSpec& g, double tol) {
  validate(g);
  // Pinch: a right pole b_j + k meeting a left pole a_i - 1 - l.
  for (int j = 0; j < g.m; ++j)
    for (int i = 0; i < g.n; ++i) {
      const Complex d = g.b[j] - g.a[i] + 1.0;
      const double kk = std::round(d.real());
      if (kk <= 0.0 && std::abs(d - kk) < kPinch)
        raise(ErrorKind::contour_pinch, "Meijer pole families coalesce");
    }
  double left_max = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < g.n; ++i) left_max = std::max(left_max, g.a[i].real() - 1.0);
  double next = left_max + 1.0;
  for (int j = 0; j < g.m; ++j) {
    const double br = g.b[j].real();
    double first_above = br;
    if (first_above <= left_max + 1e-9) first_above = br + std::floor(left_max + 1e-9 - br) + 1.0;
    next = std::min(next, first_above);
  }
  const double c = 0.5 * (left_max + next);
  const double gap = next - c;

  const Integrand f{g, std::log(g.x)};

  // Right-family poles left of the line, added back as residues.
  Complex residues = 0.0;
  double residue_err = 0.0;
  for (int j = 0; j < g.m; ++j) {
    for (int kk = 0; g.b[j].real() + kk < c; ++kk) {
      const Complex t0 = g.b[j] + static_cast<double>(kk);
      const int order = pole_order(g, t0);
      if (order <= 0) continue;
      if (order > 1) raise(ErrorKind::nonseparable_contour, "multiple pole left of the contour");
      bool owner = true;
      for (int j2 = 0; j2 < j; ++j2)
        if (near_nonpositive_integer(g.b[j2] - t0)) owner = false;
      if (!owner) continue;
      Complex l;
      if (!f.log_value(t0, &l, j)) continue;
      const double sign = (kk % 2 == 0) ? 1.0 : -1.0;
      const Complex term = sign * std::exp(l - std::lgamma(kk + 1.0));
      residues += term;
      residue_err += 1e-14 * std::abs(term);
    }
  }

  // Trapezoid rule on the line; step halving until consecutive sums agree.
  auto sweep = [&](double h, double y0, double stride, double peak_hint, double* peak) {
    Complex sum = 0.0;
    int quiet = 0;
    for (double y = y0;; y += stride) {
      const Complex vp = f.value(Complex(c, y));
      const Complex vm = y == 0.0 ? Complex(0.0) : f.value(Complex(c, -y));
      sum += vp + vm;
      const double mag = std::max(std::abs(vp), std::abs(vm));
      *peak = std::max(*peak, mag);
      const double ref = std::max(*peak, peak_hint);
      quiet = (mag < 1e-18 * ref) ? quiet + 1 : 0;
      if (quiet >= 3 && y > 2.0) break;
      if (y > 400.0) raise(ErrorKind::tolerance_not_met, "Mellin-Barnes integrand does not decay");
    }
    return sum * h;
  };
  double h = std::min(0.25, gap);
  double peak = 0.0;
  Complex raw = sweep(h, 0.0, h, 0.0, &peak);
  Complex line = raw;
  double err = std::numeric_limits<double>::infinity();
  for (int halving = 0; halving < 12; ++halving) {
    const double hn = 0.5 * h;
    const Complex odd = sweep(hn, hn, h, peak, &peak);
    const Complex refined = 0.5 * line + odd;
    err = std::abs(refined - line);
    line = refined;
    h = hn;
    if (halving >= 1 && err <= tol * std::max(std::abs(line), peak * 1e-3)) break;
  }
  const double two_pi = 2.0 * kPi;
  const Complex value = line / two_pi + residues;
  const double abs_err = err / two_pi + residue_err + 1e-15 * peak;
  if (!(err <= 1e-6 * std::max(std::abs(line), peak)))
    raise(ErrorKind::tolerance_not_met, "Mellin-Barnes quadrature did not converge");
  return finite_or_throw(EvalResult{value, abs_err, Method::contour}, "meijer_mb");
}

EvalResult meijer_triple_integral(Complex s, double k, double tol) {
  if (!(s.real() > -1.0)) raise(ErrorKind::precondition, "triple integral needs Re s > -1");
  const double ak = std::abs(k);
  if (!(ak > 0.0 && ak < 8.0)) raise(ErrorKind::precondition, "triple integral needs 0 < |k| < 8");
  const double c = k * k / 64.0;
  const Complex e2 = 0.5 * s;
  const Complex e3 = 0.5 * (s - 1.0);

  quad::Options inner_opt;
  inner_opt.abs_tol = 0.0;
  inner_opt.rel_tol = 0.1 * tol;
  quad::Options outer_opt;
  outer_opt.abs_tol = 0.0;
  outer_opt.rel_tol = tol;
  outer_opt.parallel = true;

  double inner_err_rel = 0.0;
  bool all_converged = true;
  std::mutex stats_mutex;
  auto outer = [&](const quad::Node& n2) -> Complex {
    const double r2 = std::sqrt(c * n2.x);
    const Complex w2 = std::exp(e2 * std::log(n2.to_b)) / std::sqrt(n2.from_a);
    auto inner = [&](const quad::Node& n3) -> Complex {
      const double m = agm(1.0, r2 * std::sqrt(n3.x));
      const double kernel = m > 0.0 ? kPi / m : 0.0;
      return kernel * std::exp(e3 * std::log(n3.to_b)) / std::sqrt(n3.from_a);
    };
    const auto r = quad::tanh_sinh<Complex>(inner, 0.0, 1.0, inner_opt);
    {
      std::lock_guard<std::mutex> lock(stats_mutex);
      if (!r.converged) all_converged = false;
      if (std::abs(r.value) > 0) inner_err_rel = std::max(inner_err_rel, r.abs_err / std::abs(r.value));
    }
    return w2 * r.value;
  };
  const auto res = quad::tanh_sinh<Complex>(outer, 0.0, 1.0, outer_opt);
  if (!res.converged || !all_converged)
    raise(ErrorKind::tolerance_not_met, "triple-integral cubature exhausted its refinement budget");
  const Complex pre = std::sqrt(kPi) * std::exp((1.0 + s) * std::log(ak)) * rgamma(1.0 + s) *
                      std::exp(-(3.0 + 2.0 * s) * std::log(2.0));
  const Complex v = pre * res.value;
  const double err = std::abs(pre) * (res.abs_err + inner_err_rel * std::abs(res.value)) +
                     1e-15 * std::abs(v);
  return finite_or_throw(EvalResult{v, err, Method::quadrature}, "meijer_triple_integral");
}

}  // namespace zmf::meijer
