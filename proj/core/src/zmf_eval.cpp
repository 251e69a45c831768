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

#include "zmf/zmf.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zmf/gamma.hpp"
#include "zmf/meijer.hpp"

namespace zmf {
namespace {

constexpr double kOddGuard = 1e-6;

Complex abs_pow(double ak, Complex p) {
  if (p == Complex(0.0, 0.0)) return 1.0;
  if (ak == 0.0) return 0.0;
  return std::exp(p * std::log(ak));
}

// Nearest odd integer n with |s - n| < kOddGuard, or 0.
long near_odd(Complex s) {
  const double n = 2.0 * std::floor(0.5 * (s.real() - 1.0) + 0.5) + 1.0;
  return std::abs(s - n) < kOddGuard ? static_cast<long>(n) : 0;
}

EvalResult scaled(Complex factor, const EvalResult& r, Method m) {
  const Complex v = factor * r.value;
  return finite_or_throw(EvalResult{v, std::abs(factor) * r.abs_err + 2e-16 * std::abs(v), m}, "w");
}

double edge(int r) { return std::ldexp(1.0, r); }

void check_order(int r) {
  if (r < 1) raise(ErrorKind::precondition, "r must be a positive integer");
  if (r > 30) raise(ErrorKind::precondition, "r is limited to 30");
}

}  // namespace

const char* to_string(Regime r) {
  switch (r) {
    case Regime::light: return "light";
    case Regime::boundary: return "boundary";
    case Regime::heavy: return "heavy";
  }
  return "heavy";
}

Regime regime(int r, double k) {
  check_order(r);
  const double e = edge(r);
  const double ak = std::abs(k);
  if (std::abs(ak - e) <= 1e-12 * e) return Regime::boundary;
  return ak > e ? Regime::light : Regime::heavy;
}

EvalResult w1(double k, Complex s) {
  if (!std::isfinite(k)) raise(ErrorKind::domain, "k must be finite");
  const double ak = std::abs(k);
  switch (regime(1, k)) {
    case Regime::light: {
      const double y1 = (ak - 2.0) * (ak + 2.0) / (ak * ak);
      const EvalResult f = hyper::hyp2f1_complement(-0.5 * s, 0.5 * (1.0 - s), 1.0, y1);
      return scaled(abs_pow(ak, s), f, Method::closed_form);
    }
    case Regime::boundary: {
      if (!(s.real() > -0.5)) raise(ErrorKind::domain, "W_1 at |k| = 2 needs Re s > -1/2");
      const Complex g = gamma_ratio({{0.5 + s}}, {{1.0 + 0.5 * s, 0.5}, {0.5 * (1.0 + s), 0.5}});
      const Complex v = std::exp(s * std::log(2.0)) * g;
      return finite_or_throw(EvalResult{v, 1e-14 * std::abs(v), Method::closed_form}, "w1");
    }
    case Regime::heavy: {
      const Complex pre =
          std::exp(s * std::log(4.0)) / kPi *
          gamma_ratio({{0.5 * (1.0 + s), 0.5}, {0.5 * (1.0 + s), 0.5}}, {{1.0 + s}});
      if (pre == Complex(0.0, 0.0)) return {0.0, 0.0, Method::closed_form};
      const double y1 = (2.0 - ak) * (2.0 + ak) / 4.0;
      const EvalResult f = hyper::hyp2f1_complement(-0.5 * s, -0.5 * s, 0.5, y1);
      EvalResult out = scaled(pre, f, Method::closed_form);
      out.abs_err += 1e-14 * std::abs(out.value);
      return out;
    }
  }
  raise(ErrorKind::domain, "unreachable regime");
}

EvalResult w_light(int r, double k, Complex s) {
  check_order(r);
  const Regime g = regime(r, k);
  if (g == Regime::heavy) raise(ErrorKind::domain, "w_light needs |k| >= 2^r");
  if (r == 1) return w1(k, s);
  const double ak = std::abs(k);
  if (g == Regime::boundary) {
    if (!(s.real() > -0.5 * r)) raise(ErrorKind::divergence, "boundary value needs Re s > -r/2");
    const EvalResult f = hyper::pfq(hyper::zmf_family(r, s, 1.0));
    return scaled(std::exp(static_cast<double>(r) * s * std::log(2.0)), f, f.method);
  }
  const double w = std::ldexp(1.0, 2 * r) / (ak * ak);
  const EvalResult f = hyper::pfq(hyper::zmf_family(r, s, w));
  return scaled(abs_pow(ak, s), f, Method::closed_form);
}

EvalResult w_real_s(int r, double k, double s) {
  check_order(r);
  if (r > 4) raise(ErrorKind::precondition, "the real-s route is limited to r <= 4");
  if (!(s > 0.0)) raise(ErrorKind::precondition, "the real-s route needs s > 0");
  if (near_odd(s) != 0) raise(ErrorKind::near_degenerate, "s is within 1e-6 of an odd integer");
  const double ak = std::abs(k);
  if (!(ak > 0.0) || regime(r, k) != Regime::heavy)
    raise(ErrorKind::domain, "the real-s route needs 0 < |k| < 2^r");
  const double w = std::ldexp(1.0, 2 * r) / (ak * ak);
  const EvalResult p = hyper::pfq_continued(hyper::zmf_family(r, s, w), kRealSBranch);
  const double t = tanpi(Complex(0.5 * s)).real();
  const double scale = std::pow(ak, s);
  const double v = scale * (p.value.real() + t * p.value.imag());
  const double err = scale * p.abs_err * (1.0 + std::abs(t)) + 1e-15 * std::abs(v);
  return finite_or_throw(EvalResult{v, err, Method::contour}, "w_real_s");
}

EvalResult w2(double k, Complex s) {
  const double ak = std::abs(k);
  if (!(ak < 4.0) || regime(2, k) != Regime::heavy) raise(ErrorKind::domain, "w2 needs |k| < 4");
  if (!(s.real() > -1.0)) raise(ErrorKind::domain, "w2 needs Re s > -1");
  if (near_odd(s) != 0) raise(ErrorKind::near_degenerate, "s is within 1e-6 of an odd integer");
  const double z = k * k / 16.0;
  const Complex pre2 = gamma_ratio({{s + 1.0}, {s + 1.0}},
                                   {{0.5 * s + 1.0, 0.5}, {0.5 * s + 1.0, 0.5},
                                    {0.5 * s + 1.0, 0.5}, {0.5 * s + 1.0, 0.5}});
  const Complex ms = -0.5 * s;
  const EvalResult f2 = hyper::pfq({{ms, ms, ms}, {0.5 * (1.0 - s), 0.5}, z});
  Complex v = pre2 * f2.value;
  double err = std::abs(pre2) * f2.abs_err;
  double mag = std::abs(v);
  if (ak > 0.0) {
    const Complex pre1 = tanpi(0.5 * s) / (2.0 * kPi * (s + 1.0)) * abs_pow(ak, 1.0 + s);
    const EvalResult f1 = hyper::pfq({{0.5, 0.5, 0.5}, {1.0 + 0.5 * s, 1.5 + 0.5 * s}, z});
    v += pre1 * f1.value;
    err += std::abs(pre1) * f1.abs_err;
    mag += std::abs(pre1 * f1.value);
  }
  return finite_or_throw(EvalResult{v, err + 1e-15 * mag, Method::closed_form}, "w2");
}

EvalResult w2_odd_limit(double k, int n, double delta0) {
  if (n < 1 || n % 2 == 0) raise(ErrorKind::precondition, "w2_odd needs an odd positive integer");
  if (!(std::abs(k) < 4.0)) raise(ErrorKind::domain, "w2_odd needs |k| < 4");
  if (k == 0.0) {
    const Complex v = gamma_ratio({{n + 1.0}, {n + 1.0}}, {{0.5 * n + 1.0}, {0.5 * n + 1.0},
                                                          {0.5 * n + 1.0}, {0.5 * n + 1.0}});
    return {v.real(), 1e-15 * std::abs(v), Method::closed_form};
  }
  // Re W(n + i d) = W(n) + c2 d^2 + c4 d^4 + ...
  double f[3];
  double ferr = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double d = std::ldexp(delta0, -i);
    const EvalResult e = w2(k, Complex(n, d));
    f[i] = e.value.real();
    ferr = std::max(ferr, e.abs_err);
  }
  const double r1a = (4.0 * f[1] - f[0]) / 3.0;
  const double r1b = (4.0 * f[2] - f[1]) / 3.0;
  const double r2 = (16.0 * r1b - r1a) / 15.0;
  const double err = std::abs(r2 - r1b) + 10.0 * ferr;
  return finite_or_throw(EvalResult{r2, err, Method::limit}, "w2_odd");
}

W2OddResult w2_odd(double k, int n) {
  W2OddResult out;
  out.value = w2_odd_limit(k, n);
  if (k == 0.0) {
    out.meijer = out.value;
    return out;
  }
  const EvalResult g = meijer::meijer_mb(meijer::w2_odd_kernel(n, k));
  const double sign = ((n + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  const double pre = sign * std::ldexp(1.0, n) * std::tgamma(n + 1.0) / (kPi * kPi * kPi);
  out.meijer = {pre * g.value.real(), std::abs(pre) * g.abs_err + 1e-15 * std::abs(pre * g.value),
                Method::contour};
  out.discrepancy = std::abs(out.value.value.real() - out.meijer.value.real());
  const double allowed = 10.0 * (out.value.abs_err + out.meijer.abs_err) +
                         1e-9 * std::abs(out.meijer.value.real());
  if (out.discrepancy > allowed)
    raise(ErrorKind::extrapolation_unstable, "the two odd-integer routes for W_2 disagree");
  return out;
}

EvalResult w3(double k, Complex s, MeijerRoute route) {
  const double ak = std::abs(k);
  if (!(ak < 8.0) || regime(3, k) != Regime::heavy) raise(ErrorKind::domain, "w3 needs |k| < 8");
  if (!(s.real() > -1.0)) raise(ErrorKind::domain, "w3 needs Re s > -1");
  const long odd = near_odd(s);
  if (odd > 0) raise(ErrorKind::near_degenerate, "s is within 1e-6 of an odd positive integer");
  const double z = k * k / 64.0;
  const GammaFactor h{0.5 * s + 1.0, 0.5};
  const Complex pre1 = gamma_ratio({{s + 1.0}, {s + 1.0}, {s + 1.0}}, {h, h, h, h, h, h});
  const Complex ms = -0.5 * s;
  const Complex lo = 0.5 * (1.0 - s);
  const EvalResult f1 = hyper::pfq({{ms, ms, ms, ms}, {lo, lo, 0.5}, z});
  Complex v = pre1 * f1.value;
  double err = std::abs(pre1) * f1.abs_err;
  double mag = std::abs(v);
  if (ak > 0.0) {
    const Complex t = tanpi(0.5 * s);
    const Complex pre2 = -t * t / (4.0 * kPi * (1.0 + s)) * abs_pow(ak, 1.0 + s);
    const EvalResult f2 = hyper::pfq({{0.5, 0.5, 0.5, 0.5}, {1.0, 1.0 + 0.5 * s, 0.5 * (3.0 + s)}, z});
    v += pre2 * f2.value;
    err += std::abs(pre2) * f2.abs_err;
    mag += std::abs(pre2 * f2.value);
    if (t != Complex(0.0, 0.0)) {
      const Complex pre3 = std::exp(s * std::log(4.0)) * t * gamma(s + 1.0) / std::pow(kPi, 3.5);
      const EvalResult g = route == MeijerRoute::mellin_barnes
                               ? meijer::meijer_mb(meijer::w3_kernel(s, k))
                               : meijer::meijer_triple_integral(s, k);
      v += pre3 * g.value;
      err += std::abs(pre3) * g.abs_err;
      mag += std::abs(pre3 * g.value);
    }
  }
  const Method m = route == MeijerRoute::mellin_barnes || ak == 0.0 ? Method::closed_form
                                                                    : Method::quadrature;
  return finite_or_throw(EvalResult{v, err + 1e-15 * mag, m}, "w3");
}

EvalResult f_rs(int r, Complex s, Complex z) {
  check_order(r);
  if (z.imag() == 0.0 && std::abs(z.real()) <= edge(r))
    raise(ErrorKind::branch_undefined, "F_{r,s} is cut along [-2^r, 2^r]");
  const Complex w = std::ldexp(1.0, 2 * r) / (z * z);
  const EvalResult p = hyper::pfq_principal(hyper::zmf_family(r, s, w));
  return scaled(std::exp(s * std::log(z)), p, p.method);
}

EvalResult f_rs_upper(int r, Complex s, double x) {
  check_order(r);
  if (x == 0.0) raise(ErrorKind::branch_undefined, "F_{r,s} is singular at 0");
  const double ax = std::abs(x);
  const double w = std::ldexp(1.0, 2 * r) / (ax * ax);
  const hyper::SeriesSpec spec = hyper::zmf_family(r, s, w);
  EvalResult p;
  if (regime(r, x) == Regime::heavy) {
    p = hyper::pfq_via_ode(spec, x > 0.0 ? -1 : 1);
  } else if (regime(r, x) == Regime::boundary) {
    p = hyper::pfq(hyper::zmf_family(r, s, 1.0));
  } else {
    p = hyper::pfq(spec);
  }
  Complex factor = abs_pow(ax, s);
  if (x < 0.0) factor *= std::exp(Complex(0.0, kPi) * s);
  return scaled(factor, p, p.method);
}

EvalResult h_rs(int r, Complex s, double k) {
  const double ak = std::abs(k);
  if (!(ak > 0.0) || regime(r, k) != Regime::heavy) raise(ErrorKind::domain, "h_rs needs 0 < |k| < 2^r");
  const Complex den = 1.0 + std::exp(Complex(0.0, kPi) * s);
  if (std::abs(den) < 1e-12) raise(ErrorKind::near_degenerate, "1 + e^{i pi s} vanishes");
  const EvalResult a = f_rs_upper(r, s, ak);
  const EvalResult b = f_rs_upper(r, s, -ak);
  const Complex v = (a.value + b.value) / den;
  return finite_or_throw(EvalResult{v, (a.abs_err + b.abs_err) / std::abs(den), Method::contour}, "h_rs");
}

EvalResult w(int r, double k, Complex s) {
  check_order(r);
  if (!std::isfinite(k) || !std::isfinite(s.real()) || !std::isfinite(s.imag()))
    raise(ErrorKind::domain, "non-finite input");
  const Regime g = regime(r, k);
  if (r == 1) return w1(k, s);
  if (g != Regime::heavy) return w_light(r, k, s);
  if (r == 2) {
    const long n = near_odd(s);
    if (n > 0) return w2_odd(k, static_cast<int>(n)).value;
    return w2(k, s);
  }
  if (r == 3) return w3(k, s);
  if (r == 4 && s.imag() == 0.0 && s.real() > 0.0) return w_real_s(r, k, s.real());
  raise(ErrorKind::unsupported, "no closed form for this (r, k, s); use the oracle");
}

BoundaryDerivativeReport boundary_derivative_check(int r, double s) {
  check_order(r);
  if (r > 4) raise(ErrorKind::precondition, "boundary_derivative_check supports r <= 4");
  if (!(s > 1.0 - 0.5 * r)) raise(ErrorKind::precondition, "boundary derivative needs s > 1 - r/2");
  const double e = edge(r);
  auto val = [&](double k) { return w(r, k, s).value.real(); };
  const double f0 = val(e);
  auto one_sided = [&](double sign) {
    const double h = 2e-4;
    const double d1 = (val(e + sign * h) - f0) / (sign * h);
    const double d2 = (val(e + sign * 0.5 * h) - f0) / (sign * 0.5 * h);
    return 2.0 * d2 - d1;
  };
  BoundaryDerivativeReport rep;
  rep.r = r;
  rep.s = s;
  rep.left = one_sided(-1.0);
  rep.right = one_sided(1.0);
  rep.expected = s * w_light(r, e, s - 1.0).value.real();
  rep.residual = std::max(std::abs(rep.left - rep.expected), std::abs(rep.right - rep.expected));
  return rep;
}

KZeroReport k_zero_derivatives(int r, double s, int j) {
  check_order(r);
  if (j < 0) raise(ErrorKind::precondition, "derivative order must be nonnegative");
  if (!(j <= std::floor(s))) raise(ErrorKind::precondition, "derivative order exceeds floor(s)");
  auto val = [&](double k) { return w(r, k, s).value.real(); };
  // Forward differences on k >= 0, then Richardson in h and h^2.
  auto forward = [&](double h) {
    double acc = 0.0;
    double c = 1.0;
    for (int i = 0; i <= j; ++i) {
      acc += ((j - i) % 2 == 0 ? 1.0 : -1.0) * c * val(i * h);
      c = c * (j - i) / (i + 1.0);
    }
    return acc / std::pow(h, j);
  };
  KZeroReport rep;
  rep.r = r;
  rep.s = s;
  rep.j = j;
  if (j == 0) {
    rep.derivative = val(0.0);
  } else {
    const double h = j == 1 ? 1e-3 : 1e-2;
    const double d0 = forward(h), d1 = forward(0.5 * h), d2 = forward(0.25 * h);
    const double a = 2.0 * d1 - d0, b = 2.0 * d2 - d1;
    rep.derivative = (4.0 * b - a) / 3.0;
  }
  if (j % 2 == 0) {
    const GammaFactor g{s + 1.0};
    const GammaFactor hh{1.0 + 0.5 * s};
    rep.expected = (gamma_ratio({g}, {{s - j + 1.0}}) * w(r, 0.0, s - j).value).real();
    Complex t = gamma_ratio({g}, {{s - j + 1.0}});
    for (int i = 0; i < r; ++i) t *= gamma_ratio({g}, {hh, hh});
    rep.table = t.real();
  }
  rep.residual = std::abs(rep.derivative - rep.expected);
  return rep;
}

}  // namespace zmf
