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
#include "zmf/densities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "zmf/gamma.hpp"
#include "zmf/hypergeometric.hpp"
#include "zmf/meijer.hpp"
#include "zmf/quadrature.hpp"

namespace zmf::density {
namespace {

constexpr double kTwoPi = 2.0 * kPi;

void check_r(int r) {
  if (r < 1 || r > 3) raise(ErrorKind::precondition, "closed-form densities exist for r in {1,2,3}");
}

double g3(double y, double y1) {
  const double f1 = hyper::hyp2f1_complement(0.25, 0.25, 0.5, y1).value.real();
  const double f2 = hyper::hyp2f1_complement(0.75, 0.75, 1.5, y1).value.real();
  return std::sqrt(y) / (4.0 * kPi * kPi) * f1 * f2;
}

}  // namespace

double p_hat_gap(int r, double ax, double gap) {
  check_r(r);
  const double edge = std::ldexp(1.0, r);
  if (gap < 0.0 || ax > edge) return 0.0;
  switch (r) {
    case 1: {
      if (gap == 0.0) raise(ErrorKind::edge_singularity, "p_hat_1 is singular at |x| = 2");
      return 1.0 / (kTwoPi * std::sqrt(0.5 * gap * (1.0 + 0.5 * ax)));
    }
    case 2: {
      if (ax == 0.0) raise(ErrorKind::edge_singularity, "p_hat_2 is singular at x = 0");
      // 2F1(1/2,1/2;1;1-b^2) = 1/AGM(1,b).
      return 1.0 / (4.0 * kPi * meijer::agm(1.0, 0.25 * ax));
    }
    default: {
      if (ax == 0.0) raise(ErrorKind::edge_singularity, "p_hat_3 is singular at x = 0");
      if (gap == 0.0) return 0.0;
      const double y = (gap / 8.0) * (1.0 + ax / 8.0);
      return g3(y, std::max((ax / 8.0) * (ax / 8.0), std::numeric_limits<double>::min()));
    }
  }
}

double p_hat(int r, double x) {
  check_r(r);
  const double ax = std::abs(x);
  return p_hat_gap(r, ax, std::ldexp(1.0, r) - ax);
}

double g_closed(int r, double y, double y1) {
  check_r(r);
  if (!(y > 0.0) || y > 1.0) raise(ErrorKind::domain, "G_r needs y in (0, 1]");
  switch (r) {
    case 1: return 1.0 / (kTwoPi * std::sqrt(y));
    case 2:
      if (y1 == 0.0) raise(ErrorKind::edge_singularity, "G_2 is singular at y = 1");
      return 1.0 / (4.0 * kPi * meijer::agm(1.0, std::sqrt(y1)));
    default:
      if (y1 == 0.0) raise(ErrorKind::edge_singularity, "G_3 is singular at y = 1");
      return g3(y, y1);
  }
}

namespace {

struct Recursion {
  double tol;
  double worst_rel = 0.0;
  bool converged = true;

  // sy = sqrt(y) is carried instead of y so that deep nodes do not underflow.
  double eval(int level, double sy, double y1) {
    const double y = sy * sy;
    if (level == 2) return 1.0 / (4.0 * kPi * meijer::agm(std::sqrt(y + y1), std::sqrt(y1)));
    quad::Options opt;
    opt.abs_tol = 0.0;
    opt.rel_tol = std::ldexp(tol, -level);
    opt.max_level = 7;
    opt.max_depth = 6;
    // v in (0, 1) with u = 1 - v supplied exactly.
    auto inner = [&](double v, double u) {
      const double arg_c = y1 + y * u;
      return eval(level - 1, sy * std::sqrt(v), arg_c) / std::sqrt(u * arg_c);
    };
    double total = 0.0;
    double err = 0.0;
    auto add = [&](const quad::Result<double>& res) {
      if (!res.converged) converged = false;
      total += res.value;
      err += res.abs_err;
    };
    add(quad::tanh_sinh<double>([&](const quad::Node& n) { return inner(n.x, 0.5 + n.to_b); }, 0.0, 0.5, opt));
    const double u0 = y1 / y;
    if (u0 < 0.25) {
      add(quad::tanh_sinh<double>(
          [&](const quad::Node& n) {
            const double w = n.x;
            const double v = 1.0 - u0 * w;
            return eval(level - 1, sy * std::sqrt(v), y1 * (1.0 + w)) / (sy * std::sqrt(w * (1.0 + w)));
          },
          0.0, 1.0, opt));
      add(quad::tanh_sinh<double>(
          [&](const quad::Node& n) {
            const double u = u0 * std::exp(n.x);
            const double arg_c = y1 + y * u;
            return eval(level - 1, sy * std::sqrt(1.0 - u), arg_c) * std::sqrt(u / arg_c);
          },
          0.0, std::log(0.5 / u0), opt));
    } else {
      add(quad::tanh_sinh<double>([&](const quad::Node& n) { return inner(1.0 - n.x, n.x); }, 0.0, 0.5, opt));
    }
    if (total != 0.0) worst_rel = std::max(worst_rel, err / std::abs(total));
    return sy / kTwoPi * total;
  }
};

}  // namespace

EvalResult g_recursion(int r, double y, double y1, double tol) {
  if (r < 2) raise(ErrorKind::precondition, "the G_r recursion starts at r = 2");
  if (r > 6) raise(ErrorKind::precondition, "the G_r recursion is limited to r <= 6");
  if (!(y > 0.0 && y <= 1.0)) raise(ErrorKind::domain, "g_recursion needs 0 < y < 1");
  if (!(y1 > 0.0)) raise(ErrorKind::edge_singularity, "G_r is singular at y = 1");
  Recursion rec{tol};
  const double v = rec.eval(r, std::sqrt(y), y1);
  if (!rec.converged) raise(ErrorKind::tolerance_not_met, "G_r recursion did not reach its tolerance");
  const double err = v * (static_cast<double>(r) * rec.worst_rel + 1e-15);
  return finite_or_throw(EvalResult{v, err, Method::quadrature}, "g_recursion");
}

EvalResult g_recursion(int r, double y, double tol) { return g_recursion(r, y, 1.0 - y, tol); }

double p_r(int r, double k, double x) {
  if (r < 1 || r > 6) raise(ErrorKind::precondition, "p_r supports 1 <= r <= 6");
  const double edge = std::ldexp(1.0, r);
  const double ak = std::abs(k);
  if (x < 0.0 || x >= ak + edge) return 0.0;
  // hat(u, gap) with gap = edge - |u| formed from x against the breakpoints.
  auto hat = [&](double u, double gap) {
    const double au = std::abs(u);
    if (gap <= 0.0) return gap == 0.0 && r == 2 ? 1.0 / (4.0 * kPi) : 0.0;
    if (r <= 3) return p_hat_gap(r, au, gap);
    if (au == 0.0) raise(ErrorKind::edge_singularity, "p_hat_r is singular at x = 0");
    const double y1 = std::max((au / edge) * (au / edge), std::numeric_limits<double>::min());
    const double y = (gap / edge) * (1.0 + au / edge);
    return g_recursion(r, y, y1, 1e-10).value.real();
  };
  const double shifted = x >= ak ? (ak + edge) - x : x - (ak - edge);
  if (ak >= edge) return hat(x - ak, shifted);
  if (x < edge - ak) return hat(x - ak, shifted) + hat(x + ak, (edge - ak) - x);
  return hat(x - ak, shifted);
}

DensitySample sample_p_r(int r, double k, double x) {
  return {r, k, x, p_r(r, k, x), 0.0, std::abs(k) + std::ldexp(1.0, r)};
}

Complex moment(int r, Complex v, bool two_sided) {
  if (r < 1) raise(ErrorKind::precondition, "moment needs r >= 1");
  if (!(v.real() > -1.0)) raise(ErrorKind::precondition, "moment needs Re v > -1");
  const Complex ratio = gamma_ratio({{0.5 * (v + 1.0), 0.5}}, {{1.0 + 0.5 * v, 0.5}});
  const Complex base = std::exp(v * std::log(2.0)) / std::sqrt(kPi) * ratio;
  Complex p = 1.0;
  for (int i = 0; i < r; ++i) p *= base;
  Complex out = 0.5 * p;
  if (two_sided) {
    const double decay = std::exp(-kPi * v.imag());
    const Complex phase(cospi(v.real()) * decay, sinpi(v.real()) * decay);
    out *= 1.0 + phase;
  }
  return finite_or_throw(out, "moment");
}

Complex mellin_H(int r, Complex s) {
  if (r < 1) raise(ErrorKind::precondition, "mellin_H needs r >= 1");
  if (!(s.real() > -1.0)) raise(ErrorKind::precondition, "mellin_H needs Re s > -1");
  const Complex base = std::sqrt(kPi) * gamma_ratio({{s + 1.0}}, {{s + 1.5}}) / (2.0 * kPi);
  Complex p = 1.0;
  for (int i = 0; i < r; ++i) p *= base;
  return finite_or_throw(p, "mellin_H");
}

}  // namespace zmf::density
