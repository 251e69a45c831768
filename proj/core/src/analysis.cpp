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

#include "zmf/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#include "zmf/gamma.hpp"
#include "zmf/hypergeometric.hpp"
#include "zmf/meijer.hpp"
#include "zmf/parallel.hpp"
#include "zmf/quadrature.hpp"
#include "zmf/zmf.hpp"

namespace zmf::analysis {
namespace {

constexpr Complex kI{0.0, 1.0};

Complex cpow(double base, Complex p) { return std::exp(p * std::log(base)); }

Complex line_point(double t) { return {-0.5, t}; }

void check_not_boundary(double k) {
  if (!std::isfinite(k)) raise(ErrorKind::domain, "k must be finite");
  if (regime(1, k) == Regime::boundary) raise(ErrorKind::precondition, "|k| = 2 is excluded");
}

// Fourth-order central difference of a function of one real variable.
template <class F>
auto derivative(F&& f, double x, double h) {
  return (8.0 * (f(x + h) - f(x - h)) - (f(x + 2.0 * h) - f(x - 2.0 * h))) / (12.0 * h);
}

double bisect_zero(double k, double a, double b, double fa) {
  while (b - a > 1e-12) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = xi(k, m);
    if (fm == 0.0) return m;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Shifts a horizontal cut away from every located ordinate.
double clear_cut(double y, const std::vector<ZeroRecord>& zeros) {
  for (int pass = 0; pass < 100; ++pass) {
    bool moved = false;
    for (const auto& z : zeros) {
      if (std::abs(z.t - y) < 1e-3) {
        y += 0.05;
        moved = true;
      }
    }
    if (!moved) break;
  }
  return y;
}

EvalResult fd_at_zero(double k, int r) {
  auto W = [&](double s) { return r == 2 ? w2(k, s).value.real() : w3(k, s).value.real(); };
  const double h = 1e-4;
  auto D = [&](double step) { return (W(step) - W(-step)) / (2.0 * step); };
  const double d1 = D(h), d2 = D(0.5 * h);
  const double v = (4.0 * d2 - d1) / 3.0;
  const double round = 1e-13 * std::max(1.0, std::abs(W(0.0))) / h;
  return {v, std::abs(v - d2) + round, Method::limit};
}

double spread3(const MahlerReport& m) {
  const double a = m.value.value.real(), b = m.integral.value.real(),
               c = m.derivative.value.real();
  return std::max({std::abs(a - b), std::abs(a - c), std::abs(b - c)});
}

}  // namespace

double check_fe_light(double k, Complex s) {
  if (regime(1, k) != Regime::light) raise(ErrorKind::precondition, "check_fe_light needs |k| > 2");
  const Complex lhs = w1(k, -s - 1.0).value;
  const Complex rhs = cpow(k * k - 4.0, -s - 0.5) * w1(k, s).value;
  return std::abs(lhs - rhs);
}

double check_fe_heavy(double k, Complex s) {
  if (regime(1, k) != Regime::heavy) raise(ErrorKind::precondition, "check_fe_heavy needs |k| < 2");
  if (!(s.real() > -1.0 && s.real() < 0.0)) raise(ErrorKind::precondition, "needs -1 < Re s < 0");
  const Complex sn = sinpi(-0.5 * s);
  if (std::abs(sn) < 1e-8) raise(ErrorKind::pole, "cot(-pi s/2) has a pole here");
  const Complex lhs = w1(k, -s - 1.0).value;
  const Complex rhs = cotpi(-0.5 * s) * cpow(4.0 - k * k, -s - 0.5) * w1(k, s).value;
  return std::abs(lhs - rhs);
}

const char* to_string(ZeroMethod m) {
  return m == ZeroMethod::bisection ? "bisection-on-real-form" : "argument-principle";
}

double xi(double k, double t) {
  check_not_boundary(k);
  const Complex w = w1(k, line_point(t)).value;
  Complex phase;
  if (regime(1, k) == Regime::light) {
    phase = std::exp(-0.5 * kI * t * std::log(k * k - 4.0));
  } else {
    // cot(pi/4 - i pi t/2) = exp(2 i atan(tanh(pi t/2))).
    const double psi = 2.0 * std::atan(std::tanh(0.5 * kPi * t));
    phase = std::exp(kI * (0.5 * psi - 0.5 * t * std::log(4.0 - k * k)));
  }
  const Complex v = phase * w;
  if (std::abs(v.imag()) > 1e-9 * std::max(1.0, std::abs(v)))
    raise(ErrorKind::normalization_failure, "xi is not real on the critical line");
  return v.real();
}

std::vector<ZeroRecord> find_zeros_w1(double k, double t_max, double step) {
  check_not_boundary(k);
  if (!(t_max > 0.0) || t_max > 50.0) raise(ErrorKind::precondition, "t_max must lie in (0, 50]");
  if (!(step > 0.0)) raise(ErrorKind::precondition, "step must be positive");
  const auto n = static_cast<std::size_t>(std::ceil(t_max / step));
  std::vector<double> ts(n + 1), vals(n + 1);
  for (std::size_t i = 0; i <= n; ++i) ts[i] = std::min(t_max, static_cast<double>(i) * step);
  parallel_for(n + 1, [&](std::size_t i) { vals[i] = xi(k, ts[i]); });

  std::vector<std::pair<double, double>> brackets;
  std::vector<double> exact;
  for (std::size_t i = 0; i <= n; ++i) {
    if (vals[i] == 0.0) exact.push_back(ts[i]);
    if (i < n && vals[i] != 0.0 && vals[i + 1] != 0.0 && (vals[i] < 0.0) != (vals[i + 1] < 0.0))
      brackets.emplace_back(ts[i], ts[i + 1]);
  }
  std::vector<ZeroRecord> out(brackets.size());
  parallel_for(brackets.size(), [&](std::size_t i) {
    const auto [a, b] = brackets[i];
    const double t = bisect_zero(k, a, b, xi(k, a));
    out[i] = {k, t, std::abs(w1(k, line_point(t)).value), ZeroMethod::bisection};
  });
  for (double t : exact) out.push_back({k, t, std::abs(w1(k, line_point(t)).value), ZeroMethod::bisection});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.t < y.t; });
  return out;
}

BoxCount count_zeros_box(double k, const Box& box) {
  check_not_boundary(k);
  if (!(box.re_hi > box.re_lo && box.im_hi > box.im_lo))
    raise(ErrorKind::precondition, "box must have positive width and height");
  const Complex corners[4] = {{box.re_lo, box.im_lo},
                              {box.re_hi, box.im_lo},
                              {box.re_hi, box.im_hi},
                              {box.re_lo, box.im_hi}};
  const double h = 1e-3 * std::min({1.0, box.re_hi - box.re_lo, box.im_hi - box.im_lo});
  quad::Options opt;
  opt.abs_tol = 1e-6;
  opt.rel_tol = 1e-9;
  Complex total = 0.0;
  bool ok = true;
  for (int e = 0; e < 4; ++e) {
    const Complex a = corners[e], d = corners[(e + 1) % 4] - a;
    auto f = [&](const quad::Node& n) -> Complex {
      const Complex s = a + n.x * d;
      auto W = [&](double x) { return w1(k, s + x * d / std::abs(d)).value; };
      const Complex wv = W(0.0);
      if (wv == Complex(0.0, 0.0)) raise(ErrorKind::non_integer_winding, "contour passes through a zero");
      return derivative(W, 0.0, h) / wv * std::abs(d);
    };
    const auto res = quad::tanh_sinh<Complex>(f, 0.0, 1.0, opt);
    total += res.value;
    ok = ok && res.converged;
  }
  const Complex count = total / (2.0 * kPi * kI);
  const double rounded = std::round(count.real());
  if (!ok || std::abs(count.real() - rounded) >= 0.1 || std::abs(count.imag()) >= 0.1)
    raise(ErrorKind::non_integer_winding, "contour sum is not close to an integer");
  return {box, static_cast<long>(rounded), count.real()};
}

std::vector<TrivialPoint> prefactor_points(double k, double re_lo, double re_hi) {
  std::vector<TrivialPoint> out;
  const Regime g = regime(1, k);
  if (g == Regime::light) return out;
  // Heavy: Gamma((1+s)/2)^2 / Gamma(1+s).  Boundary: Gamma(1/2+s) /
  // (Gamma(1+s/2) Gamma((1+s)/2)).
  for (long j = 1; j <= 200; ++j) {
    const double s = -0.5 * static_cast<double>(j);
    if (s < re_lo) break;
    if (s > re_hi) continue;
    if (g == Regime::heavy) {
      if (j % 2 == 1) continue;
      out.push_back({s, (j / 2) % 2 == 1});
    } else {
      if (j % 2 == 1) out.push_back({s, true});
      else out.push_back({s, false});
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

ConfinementReport critical_line_report(double k, double t_max, double half_width, double im_lo) {
  check_not_boundary(k);
  if (!(half_width > 0.0 && half_width < 0.5)) raise(ErrorKind::precondition, "strip half width out of range");
  if (!(im_lo > 0.0 && im_lo < t_max)) raise(ErrorKind::precondition, "im_lo must lie in (0, t_max)");
  ConfinementReport rep;
  rep.k = k;
  const auto ahead = find_zeros_w1(k, std::min(50.0, t_max + 0.2));
  const double top = clear_cut(t_max, ahead);
  for (const auto& z : ahead)
    if (z.t < top) rep.zeros.push_back(z);

  std::vector<double> cuts{clear_cut(im_lo, rep.zeros)};
  for (double y = std::floor(im_lo) + 1.0; y < top - 0.5; y += 1.0) cuts.push_back(clear_cut(y, rep.zeros));
  cuts.push_back(top);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Box> off, strip;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    off.push_back({-2.0, -0.5 - half_width, cuts[i], cuts[i + 1]});
    off.push_back({-0.5 + half_width, 1.0, cuts[i], cuts[i + 1]});
    strip.push_back({-0.5 - half_width, -0.5 + half_width, cuts[i], cuts[i + 1]});
  }
  std::vector<Box> all = off;
  all.insert(all.end(), strip.begin(), strip.end());
  std::vector<BoxCount> counts(all.size());
  parallel_for(all.size(), [&](std::size_t i) { counts[i] = count_zeros_box(k, all[i]); });
  rep.off_line.assign(counts.begin(), counts.begin() + static_cast<long>(off.size()));
  rep.strip.assign(counts.begin() + static_cast<long>(off.size()), counts.end());
  for (const auto& c : rep.off_line) rep.off_line_total += c.winding;
  for (const auto& c : rep.strip) rep.strip_total += c.winding;
  for (const auto& z : rep.zeros) rep.worst_residual = std::max(rep.worst_residual, z.residual);
  return rep;
}

Complex jacobi_phi(double alpha, double beta, Complex lambda, double t) {
  if (near_nonpositive_integer(Complex(alpha + 1.0, 0.0)))
    raise(ErrorKind::pole, "alpha + 1 is a non-positive integer");
  if (!(t >= 0.0) || !std::isfinite(t)) raise(ErrorKind::domain, "t must be a finite non-negative real");
  const double c = std::cosh(t);
  const double y1 = 1.0 / (c * c);
  if (!(y1 > 0.0)) raise(ErrorKind::domain, "tanh^2 t rounds to 1");
  const Complex rho = alpha + beta + 1.0 + kI * lambda;
  const Complex f = hyper::hyp2f1_complement(0.5 * rho, 0.5 * (alpha - beta + 1.0 + kI * lambda),
                                             alpha + 1.0, y1)
                        .value;
  return std::exp(-rho * std::log(c)) * f;
}

double jacobi_weight(double alpha, double beta, double t) {
  return std::pow(2.0 * std::sinh(t), 2.0 * alpha + 1.0) * std::pow(2.0 * std::cosh(t), 2.0 * beta + 1.0);
}

double jacobi_ode_residual(double alpha, double beta, Complex lambda, double t) {
  if (!(t > 0.0)) raise(ErrorKind::domain, "t must be positive");
  const double h = std::min(1e-3, 0.25 * t);
  auto phi = [&](double x) { return jacobi_phi(alpha, beta, lambda, x); };
  const Complex f0 = phi(t);
  const Complex d1 = derivative(phi, t, h);
  const Complex d2 =
      (-phi(t + 2.0 * h) + 16.0 * phi(t + h) - 30.0 * f0 + 16.0 * phi(t - h) - phi(t - 2.0 * h)) /
      (12.0 * h * h);
  const double rho = alpha + beta + 1.0;
  const double log_deriv = (2.0 * alpha + 1.0) / std::tanh(t) + (2.0 * beta + 1.0) * std::tanh(t);
  return std::abs(d2 + log_deriv * d1 + (lambda * lambda + rho * rho) * f0);
}

BeautyReport check_beauty(double alpha, double beta, Complex lambda, Complex mu, double x) {
  if (!(x > 0.0)) raise(ErrorKind::domain, "x must be positive");
  if (!(alpha > -1.0)) raise(ErrorKind::precondition, "the weight needs alpha > -1");
  const Complex gap = mu * mu - lambda * lambda;
  if (std::abs(gap) < 1e-12) raise(ErrorKind::precondition, "lambda and mu must differ up to sign");
  auto f = [&](const quad::Node& n) -> Complex {
    const double t = n.from_a;
    if (t == 0.0) return 0.0;
    return jacobi_phi(alpha, beta, lambda, t) * jacobi_phi(alpha, beta, mu, t) *
           jacobi_weight(alpha, beta, t);
  };
  quad::Options opt;
  opt.abs_tol = 1e-14;
  opt.rel_tol = 1e-12;
  const auto integral = quad::tanh_sinh<Complex>(f, 0.0, x, opt);
  if (!integral.converged) raise(ErrorKind::tolerance_not_met, "weighted product integral did not settle");
  const double h = std::min(1e-3, 0.25 * x);
  auto pl = [&](double t) { return jacobi_phi(alpha, beta, lambda, t); };
  auto pm = [&](double t) { return jacobi_phi(alpha, beta, mu, t); };
  const Complex wr =
      jacobi_weight(alpha, beta, x) * (derivative(pl, x, h) * pm(x) - pl(x) * derivative(pm, x, h)) / gap;
  return {integral.value, wr, std::abs(integral.value - wr)};
}

MahlerReport mahler_w2(double k) {
  if (!std::isfinite(k) || !(std::abs(k) < 4.0)) raise(ErrorKind::precondition, "mahler_w2 needs |k| < 4");
  MahlerReport m;
  const double ak = std::abs(k);
  const double z = k * k / 16.0;
  if (ak == 0.0) {
    m.value = m.integral = {0.0, 0.0, Method::closed_form};
    m.derivative = fd_at_zero(k, 2);
    m.spread = spread3(m);
    return m;
  }
  const auto f = hyper::pfq({{0.5, 0.5, 0.5}, {1.0, 1.5}, z});
  m.value = {0.25 * ak * f.value, 0.25 * ak * f.abs_err, Method::closed_form};

  quad::Options opt;
  opt.abs_tol = 0.0;
  opt.rel_tol = 1e-12;
  std::atomic<bool> ok{true};
  auto outer = [&](const quad::Node& n1) -> double {
    const double x1 = n1.from_a;
    auto inner = [&](const quad::Node& n2) -> double {
      return 1.0 / std::sqrt(n2.from_a * n2.to_b * (1.0 - z * x1 * n2.x));
    };
    const auto r = quad::tanh_sinh<double>(inner, 0.0, 1.0, opt);
    if (!r.converged) ok = false;
    return r.value / std::sqrt(x1);
  };
  const auto I = quad::tanh_sinh<double>(outer, 0.0, 1.0, opt);
  if (!I.converged || !ok) raise(ErrorKind::tolerance_not_met, "double integral did not settle");
  const double c = ak / (8.0 * kPi);
  m.integral = {c * I.value, c * I.abs_err + 1e-13 * c * I.value, Method::quadrature};
  m.derivative = fd_at_zero(k, 2);
  m.spread = spread3(m);
  return m;
}

MahlerReport mahler_w3(double k) {
  if (!std::isfinite(k) || !(std::abs(k) > 0.0 && std::abs(k) < 8.0))
    raise(ErrorKind::precondition, "mahler_w3 needs 0 < |k| < 8");
  MahlerReport m;
  const double ak = std::abs(k);
  const double z = k * k / 64.0;
  const double pre = 1.0 / (2.0 * std::pow(kPi, 2.5));
  const auto g = meijer::meijer_mb(meijer::w3_kernel(0.0, k));
  m.value = {pre * g.value, pre * g.abs_err, g.method};

  quad::Options opt;
  opt.abs_tol = 0.0;
  opt.rel_tol = 1e-10;
  std::atomic<bool> ok{true};
  // The x1 integral is pi 2F1(1/2,1/2;1;1-p) = pi / AGM(1, sqrt p) with
  // p = z x2 x3.
  auto outer = [&](const quad::Node& n3) -> double {
    const double x3 = n3.from_a;
    auto f2 = [&](const quad::Node& n2) -> double {
      const double p = std::max(z * n2.from_a * x3, std::numeric_limits<double>::min());
      return kPi / (meijer::agm(1.0, std::sqrt(p)) * std::sqrt(n2.from_a * n2.to_b));
    };
    const auto r = quad::tanh_sinh<double>(f2, 0.0, 1.0, opt);
    if (!r.converged) ok = false;
    return r.value / std::sqrt(x3);
  };
  const auto I = quad::tanh_sinh<double>(outer, 0.0, 1.0, opt);
  if (!I.converged || !ok) raise(ErrorKind::tolerance_not_met, "triple integral did not settle");
  const double c = ak / (16.0 * kPi * kPi);
  m.integral = {c * I.value, c * I.abs_err + 1e-11 * c * I.value, Method::quadrature};
  m.derivative = fd_at_zero(k, 3);
  m.spread = spread3(m);
  return m;
}

}  // namespace zmf::analysis
