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
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "zmf/gamma.hpp"
#include "zmf/hypergeometric.hpp"

namespace zmf::hyper {
namespace {

using State = std::vector<Complex>;

constexpr double kBase = 0.5;

// Coefficients of a monic polynomial prod (theta + roots[i]) in ascending order.
std::vector<Complex> expand(const std::vector<Complex>& shifts) {
  std::vector<Complex> c{1.0};
  for (const auto& r : shifts) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i] * r;
      next[i + 1] += c[i];
    }
    c = std::move(next);
  }
  return c;
}

struct Operator {
  std::size_t order;
  std::vector<Complex> alpha;  // theta prod(theta + b - 1), ascending
  std::vector<Complex> beta;   // prod(theta + a), ascending

  explicit Operator(const SeriesSpec& spec) : order(spec.upper.size()) {
    std::vector<Complex> lower_shifts{0.0};
    for (const auto& b : spec.lower) lower_shifts.push_back(b - 1.0);
    alpha = expand(lower_shifts);
    beta = expand(spec.upper);
  }

  // dY/dz where Y_j = theta^j F.
  void rhs(Complex z, const State& y, State& dy) const {
    const std::size_t p = order;
    for (std::size_t j = 0; j + 1 < p; ++j) dy[j] = y[j + 1] / z;
    Complex top = 0.0;
    for (std::size_t m = 0; m < p; ++m) top += (z * beta[m] - alpha[m]) * y[m];
    dy[p - 1] = top / ((1.0 - z) * z);
  }
};

// theta^j F at the base point from the series, j = 0..p-1.
State initial_state(const SeriesSpec& spec, Complex z0, double* err) {
  const std::size_t p = spec.upper.size();
  State y(p, 0.0);
  Complex term = 1.0;
  double mag = 0.0;
  for (int n = 0; n < 2000; ++n) {
    if (n > 0) {
      Complex ratio = z0 / static_cast<double>(n);
      for (const auto& a : spec.upper) ratio *= a + static_cast<double>(n - 1);
      for (const auto& b : spec.lower) ratio /= b + static_cast<double>(n - 1);
      term *= ratio;
    }
    double np = 1.0;
    double contribution = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      y[j] += term * np;
      contribution = std::max(contribution, std::abs(term) * np);
      np *= static_cast<double>(n);
    }
    mag = std::max(mag, contribution);
    if (n > 20 && contribution < 1e-18 * mag) {
      *err = 1e-15 * mag;
      return y;
    }
  }
  raise(ErrorKind::divergence, "initial series at the continuation base point did not converge");
}

// Dormand-Prince 5(4) along the straight segment za -> zb.
double integrate_segment(const Operator& op, Complex za, Complex zb, State& y, double tol) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = b1 - 5179.0 / 57600, e3 = b3 - 7571.0 / 16695,
                          e4 = b4 - 393.0 / 640, e5 = b5 + 92097.0 / 339200,
                          e6 = b6 - 187.0 / 2100, e7 = -1.0 / 40;

  const std::size_t p = y.size();
  const Complex dz = zb - za;
  auto f = [&](double tau, const State& yy, State& out) {
    op.rhs(za + tau * dz, yy, out);
    for (auto& v : out) v *= dz;
  };
  std::array<State, 7> k;
  for (auto& v : k) v.assign(p, 0.0);
  State tmp(p), y5(p);
  double tau = 0.0;
  double h = 0.02;
  double global = 0.0;
  f(0.0, y, k[0]);
  int steps = 0;
  while (tau < 1.0) {
    if (++steps > 200000) raise(ErrorKind::budget_exhausted, "continuation step budget exhausted");
    h = std::min(h, 1.0 - tau);
    auto stage = [&](State& out, double ct, std::initializer_list<std::pair<int, double>> terms) {
      for (std::size_t j = 0; j < p; ++j) {
        Complex v = y[j];
        for (const auto& [i, a] : terms) v += h * a * k[i][j];
        tmp[j] = v;
      }
      f(tau + ct * h, tmp, out);
    };
    stage(k[1], c2, {{0, a21}});
    stage(k[2], c3, {{0, a31}, {1, a32}});
    stage(k[3], c4, {{0, a41}, {1, a42}, {2, a43}});
    stage(k[4], c5, {{0, a51}, {1, a52}, {2, a53}, {3, a54}});
    stage(k[5], 1.0, {{0, a61}, {1, a62}, {2, a63}, {3, a64}, {4, a65}});
    for (std::size_t j = 0; j < p; ++j)
      y5[j] = y[j] + h * (b1 * k[0][j] + b3 * k[2][j] + b4 * k[3][j] + b5 * k[4][j] + b6 * k[5][j]);
    f(tau + h, y5, k[6]);
    double err = 0.0;
    double err0 = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      const Complex e = h * (e1 * k[0][j] + e3 * k[2][j] + e4 * k[3][j] + e5 * k[4][j] +
                             e6 * k[5][j] + e7 * k[6][j]);
      const double scale = tol * (1e-3 + std::max(std::abs(y[j]), std::abs(y5[j])));
      err = std::max(err, std::abs(e) / scale);
      if (j == 0) err0 = std::abs(e);
    }
    if (!std::isfinite(err)) raise(ErrorKind::non_finite, "continuation produced a non-finite state");
    if (err <= 1.0) {
      tau += h;
      y = y5;
      k[0] = k[6];
      global += err0;
    }
    const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    h *= factor;
  }
  return global;
}

bool terminating(const SeriesSpec& spec) {
  for (const auto& a : spec.upper)
    if (std::abs(a.imag()) < 1e-12 && a.real() <= 0.5 &&
        std::abs(a.real() - std::round(a.real())) < 1e-12)
      return true;
  return false;
}

EvalResult polynomial_value(const SeriesSpec& spec) {
  SeriesSpec tmp = spec;
  // The terminating sum does not depend on |argument|; evaluate it directly.
  long m = std::numeric_limits<long>::max();
  for (const auto& a : spec.upper)
    if (std::abs(a.imag()) < 1e-12 && a.real() <= 0.5 &&
        std::abs(a.real() - std::round(a.real())) < 1e-12)
      m = std::min(m, static_cast<long>(-std::round(a.real())));
  Complex term = 1.0, sum = 1.0;
  double abs_sum = 1.0;
  for (long n = 0; n < m; ++n) {
    Complex ratio = tmp.argument / static_cast<double>(n + 1);
    for (const auto& a : spec.upper) ratio *= a + static_cast<double>(n);
    for (const auto& b : spec.lower) ratio /= b + static_cast<double>(n);
    term *= ratio;
    sum += term;
    abs_sum += std::abs(term);
  }
  return {sum, 4.0 * std::numeric_limits<double>::epsilon() * abs_sum * (m + 1.0), Method::closed_form};
}

}  // namespace

EvalResult pfq_via_ode(const SeriesSpec& spec, int sigma, const ContinuationOptions& opt) {
  if (spec.upper.size() != spec.lower.size() + 1)
    raise(ErrorKind::precondition, "continuation needs one more upper than lower parameter");
  for (const auto& b : spec.lower)
    if (near_nonpositive_integer(b)) raise(ErrorKind::pole, "lower parameter at a pole");
  if (terminating(spec)) return polynomial_value(spec);
  const Complex w = spec.argument;
  if (std::abs(w - 1.0) < opt.endpoint_clearance)
    raise(ErrorKind::path_singularity, "continuation endpoint too close to the singular point 1");
  if (std::abs(w) < opt.endpoint_clearance)
    raise(ErrorKind::path_singularity, "continuation endpoint too close to the singular point 0");
  const double sg = sigma >= 0 ? 1.0 : -1.0;
  const Operator op(spec);
  double err = 0.0;
  State y = initial_state(spec, kBase, &err);
  const Complex p1(kBase, sg * opt.delta);
  const Complex p2(w.real(), sg * opt.delta);
  err += integrate_segment(op, kBase, p1, y, opt.local_tol);
  err += integrate_segment(op, p1, p2, y, opt.local_tol);
  err += integrate_segment(op, p2, w, y, opt.local_tol);
  const Complex v = y[0];
  return finite_or_throw(EvalResult{v, 10.0 * err + 1e-13 * std::abs(v), Method::contour}, "pfq_via_ode");
}

EvalResult pfq_principal(const SeriesSpec& spec, const ContinuationOptions& opt) {
  const Complex w = spec.argument;
  if (terminating(spec)) return polynomial_value(spec);
  if (std::abs(w) < 0.9) return pfq(spec);
  if (w.imag() == 0.0 && w.real() >= 1.0)
    raise(ErrorKind::branch_undefined, "principal branch is undefined on [1, inf)");
  return pfq_via_ode(spec, w.imag() >= 0.0 ? 1 : -1, opt);
}

EvalResult pfq_continued(const SeriesSpec& spec, Branch branch, const ContinuationOptions& opt) {
  const std::size_t r = spec.lower.size();
  if (r < 1 || spec.upper.size() != r + 1)
    raise(ErrorKind::precondition, "continuation supports the r+1Fr family only");
  for (const auto& b : spec.lower)
    if (std::abs(b - 1.0) > 1e-14) raise(ErrorKind::precondition, "family lower parameters must be 1");
  for (std::size_t i = 2; i < spec.upper.size(); ++i)
    if (std::abs(spec.upper[i] - 0.5) > 1e-14)
      raise(ErrorKind::precondition, "family upper parameters beyond the second must be 1/2");
  if (std::abs(spec.upper[1] - spec.upper[0] - 0.5) > 1e-14)
    raise(ErrorKind::precondition, "family upper parameters must be -s/2 and (1-s)/2");
  const Complex s = -2.0 * spec.upper[0];
  if (s.imag() != 0.0) raise(ErrorKind::precondition, "continuation to w > 1 needs real s");
  const double odd = 2.0 * std::floor(0.5 * s.real()) + 1.0;
  if (s.real() > 0.0 && std::abs(s.real() - odd) < 1e-6)
    raise(ErrorKind::near_degenerate, "s is within 1e-6 of an odd integer");
  const Complex w = spec.argument;
  if (w.imag() != 0.0 || !(w.real() > 1.0))
    raise(ErrorKind::precondition, "continuation argument must be real and greater than 1");
  return pfq_via_ode(spec, branch == Branch::from_above ? 1 : -1, opt);
}

}  // namespace zmf::hyper
