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
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <vector>

#include "zmf/densities.hpp"
#include "zmf/gamma.hpp"
#include "zmf/oracle.hpp"
#include "zmf/parallel.hpp"
#include "zmf/philox.hpp"
#include "zmf/quadrature.hpp"

namespace zmf::oracle {
namespace {

constexpr double kHalfPi = 0.5 * kPi;

Complex power(double a, Complex s) {
  if (s == Complex(0.0, 0.0)) return 1.0;
  if (a == 0.0) return 0.0;
  return std::exp(s * std::log(a));
}

void check_integrable(int r, double k, Complex s) {
  const double e = std::ldexp(1.0, r);
  const double ak = std::abs(k);
  if (ak > e) return;
  const double bound = ak == e ? -0.5 * r : -1.0;
  if (!(s.real() > bound))
    raise(ErrorKind::non_integrable, "|k + P|^s is not integrable over the torus for this s");
}

// cos of the abscissa, using the exact distance when an end sits at pi/2.
double cos_at(const quad::Node& n, double a, double b) {
  if (b == kHalfPi) return std::sin(n.to_b);
  if (a == kHalfPi) return -std::sin(n.from_a);
  return std::cos(n.x);
}

struct Torus {
  Complex s;
  quad::Options outer;
  quad::Options inner;
  bool split = true;
  std::atomic<bool> ok{true};
  std::mutex mutex;
  double worst_rel = 0.0;

  void note(const quad::Result<Complex>& res) {
    if (!res.converged) ok = false;
    const double mag = std::abs(res.value);
    if (mag > 0.0) {
      std::lock_guard<std::mutex> lock(mutex);
      worst_rel = std::max(worst_rel, res.abs_err / mag);
    }
  }

  quad::Result<Complex> integrate(const std::vector<double>& pts, const quad::Options& opt,
                                  const std::function<Complex(const quad::Node&, double, double)>& f) {
    quad::Result<Complex> total{0.0, 0.0, true, 0};
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const double a = pts[i], b = pts[i + 1];
      if (!(b > a)) continue;
      const auto res = quad::tanh_sinh<Complex>([&](const quad::Node& n) { return f(n, a, b); }, a, b, opt);
      total.value += res.value;
      total.abs_err += res.abs_err;
      total.converged = total.converged && res.converged;
      total.evaluations += res.evaluations;
    }
    return total;
  }

  // int_0^len g(w) dw where g varies on the scale c near w = 0.
  quad::Result<Complex> near_zero(double len, double c, const quad::Options& opt,
                                  const std::function<Complex(double)>& g) {
    if (split && c > 0.0 && c < 0.05 * len) {
      return quad::tanh_sinh<Complex>(
          [&](const quad::Node& n) { return g(c * std::expm1(n.x)) * (c * std::exp(n.x)); }, 0.0,
          std::log1p(len / c), opt);
    }
    return quad::tanh_sinh<Complex>([&](const quad::Node& n) { return g(n.x); }, 0.0, len, opt);
  }

  // (1/pi) int_0^pi |kk + 2 m cos t|^s dt.
  Complex level1(double kk, double m, quad::Options opt) {
    if (m == 0.0) return power(std::abs(kk), s);
    const double b = 2.0 * std::abs(m);
    const double a = std::abs(kk);
    opt.abs_tol = 0.1 * opt.rel_tol * std::pow(std::max(a, b), s.real());
    quad::Result<Complex> res;
    if (a < b) {
      // Zero at distance e from the nearer end; w is the distance from it.
      const double e = 2.0 * std::asin(std::sqrt(0.5 * (b - a) / b));
      const auto shorter = quad::tanh_sinh<Complex>(
          [&](const quad::Node& n) {
            const double w = n.x;
            return power(std::abs(2.0 * b * std::sin(e - 0.5 * w) * std::sin(0.5 * w)), s);
          },
          0.0, e, opt);
      const auto longer = near_zero(kPi - e, 2.0 * e, opt, [&](double w) {
        return power(std::abs(2.0 * b * std::sin(e + 0.5 * w) * std::sin(0.5 * w)), s);
      });
      res = {shorter.value + longer.value, shorter.abs_err + longer.abs_err,
             shorter.converged && longer.converged, shorter.evaluations + longer.evaluations};
    } else {
      // |f| = delta + 2 b sin^2(u/2), u measured from the minimum.
      double delta = a - b;
      // The boundary itself is not integrable for Re s <= -1/2; only a
      // measure-zero set of outer nodes lands there after rounding.
      if (delta == 0.0 && s.real() <= -0.5) delta = 0x1p-52 * a;
      res = near_zero(kPi, std::sqrt(2.0 * delta / b), opt, [&](double u) {
        const double h = std::sin(0.5 * u);
        return power(delta + 2.0 * b * h * h, s);
      });
    }
    note(res);
    return res.value / kPi;
  }

  // (1/pi^r) int |kk + m prod 2 cos t_i|^s.
  Complex level(int r, double kk, double m, bool top) {
    if (r == 1) return level1(kk, m, top ? outer : inner);
    if (m == 0.0) return power(std::abs(kk), s);
    std::vector<double> pts{0.0, kHalfPi, kPi};
    if (split) {
      const double c = std::abs(kk) / (std::ldexp(1.0, r) * std::abs(m));
      if (c > 0.0 && c < 1.0) {
        pts.push_back(std::acos(c));
        pts.push_back(std::acos(-c));
      }
      std::sort(pts.begin(), pts.end());
    } else {
      pts = {0.0, kPi};
    }
    quad::Options opt = top ? outer : inner;
    opt.abs_tol = 0.1 * opt.rel_tol * std::pow(std::max(std::abs(kk), std::ldexp(std::abs(m), r)), s.real());
    const auto res = integrate(pts, opt, [&](const quad::Node& n, double a, double b) {
      return level(r - 1, kk, m * 2.0 * cos_at(n, a, b), false);
    });
    note(res);
    return res.value / kPi;
  }
};

// Pairwise sum of v[lo, hi).
Complex pairwise(const std::vector<Complex>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 16) {
    Complex acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += v[i];
    return acc;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise(v, lo, mid) + pairwise(v, mid, hi);
}

struct Moments {
  double n = 0.0;
  Complex mean = 0.0;
  double m2 = 0.0;  // sum of |x - mean|^2
};

Moments merge(const Moments& a, const Moments& b) {
  if (a.n == 0.0) return b;
  if (b.n == 0.0) return a;
  Moments out;
  out.n = a.n + b.n;
  const Complex d = b.mean - a.mean;
  out.mean = a.mean + d * (b.n / out.n);
  out.m2 = a.m2 + b.m2 + std::norm(d) * a.n * b.n / out.n;
  return out;
}

Moments merge_tree(const std::vector<Moments>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return v[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return merge(merge_tree(v, lo, mid), merge_tree(v, mid, hi));
}

constexpr std::uint64_t kChunk = 65536;

}  // namespace

void validate(const QuadratureConfig& cfg) {
  if (!(cfg.tol >= 1e-14)) raise(ErrorKind::precondition, "tol must be at least 1e-14");
  if (cfg.samples < 1) raise(ErrorKind::precondition, "samples must be at least 1");
  if (cfg.max_subdivisions < 0) raise(ErrorKind::precondition, "max_subdivisions must be nonnegative");
}

EvalResult torus_quadrature(int r, double k, Complex s, const QuadratureConfig& cfg) {
  validate(cfg);
  if (r < 1) raise(ErrorKind::precondition, "r must be positive");
  if (r > 3) raise(ErrorKind::precondition, "torus quadrature is limited to r <= 3");
  if (!std::isfinite(k)) raise(ErrorKind::domain, "k must be finite");
  check_integrable(r, k, s);
  if (s == Complex(0.0, 0.0)) return {1.0, 0.0, Method::quadrature};
  Torus t;
  t.s = s;
  t.split = cfg.singularity_splitting;
  t.outer.abs_tol = 0.0;
  t.outer.rel_tol = cfg.tol;
  t.outer.max_depth = cfg.max_subdivisions;
  t.outer.parallel = r > 1;
  t.inner = t.outer;
  t.inner.parallel = false;
  t.inner.rel_tol = std::max(1e-15, 0.1 * cfg.tol);
  t.inner.max_depth = std::min(cfg.max_subdivisions, 8);
  const Complex v = t.level(r, k, 1.0, true);
  if (!t.ok) raise(ErrorKind::budget_exhausted, "torus quadrature did not reach its tolerance");
  const double err = std::max(t.worst_rel, 1e-15) * std::abs(v) * r;
  return finite_or_throw(EvalResult{v, err, Method::quadrature}, "torus_quadrature");
}

EvalResult monte_carlo(int r, double k, Complex s, const QuadratureConfig& cfg) {
  validate(cfg);
  if (r < 1) raise(ErrorKind::precondition, "r must be positive");
  if (!std::isfinite(k)) raise(ErrorKind::domain, "k must be finite");
  check_integrable(r, k, s);
  if (s == Complex(0.0, 0.0)) return {1.0, 0.0, Method::monte_carlo};
  const Philox4x32 gen(cfg.seed);
  const std::uint64_t n = cfg.samples;
  const std::size_t chunks = static_cast<std::size_t>((n + kChunk - 1) / kChunk);
  std::vector<Moments> parts(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    const std::uint64_t lo = c * kChunk;
    const std::uint64_t hi = std::min<std::uint64_t>(n, lo + kChunk);
    std::vector<Complex> vals(hi - lo);
    for (std::uint64_t i = lo; i < hi; ++i) {
      double p = 1.0;
      for (int d = 0; d < r; d += 2) {
        const auto u = gen.uniform_pair(i, static_cast<std::uint64_t>(d / 2));
        p *= 2.0 * std::cos(kPi * u[0]);
        if (d + 1 < r) p *= 2.0 * std::cos(kPi * u[1]);
      }
      vals[i - lo] = power(std::abs(k + p), s);
    }
    Moments m;
    m.n = static_cast<double>(vals.size());
    m.mean = pairwise(vals, 0, vals.size()) / m.n;
    for (auto& v : vals) v = std::norm(v - m.mean);
    m.m2 = pairwise(vals, 0, vals.size()).real();
    parts[c] = m;
  });
  const Moments total = merge_tree(parts, 0, parts.size());
  const double var = total.n > 1.0 ? total.m2 / (total.n - 1.0) : 0.0;
  const double se = std::sqrt(var / total.n);
  return finite_or_throw(EvalResult{total.mean, 3.0 * se, Method::monte_carlo}, "monte_carlo");
}

EvalResult density_quadrature(int r, double k, Complex s, const QuadratureConfig& cfg) {
  validate(cfg);
  if (r < 1 || r > 4) raise(ErrorKind::precondition, "density quadrature needs 1 <= r <= 4");
  if (!std::isfinite(k)) raise(ErrorKind::domain, "k must be finite");
  check_integrable(r, k, s);
  if (s == Complex(0.0, 0.0)) return {1.0, 0.0, Method::quadrature};
  const double e = std::ldexp(1.0, r);
  const double ak = std::abs(k);
  const double g_tol = std::max(1e-11, 0.1 * cfg.tol);
  std::atomic<bool> g_ok{true};
  auto density = [&](double au, double gap) {
    if (r <= 3) return density::p_hat_gap(r, au, gap);
    if (gap == 0.0) return 0.0;
    const double y = (gap / e) * (1.0 + au / e);
    const double y1 = std::max((au / e) * (au / e), std::numeric_limits<double>::min());
    const auto g = density::g_recursion(r, std::min(y, 1.0), y1, g_tol);
    if (g.abs_err > 10.0 * g_tol * std::abs(g.value.real())) g_ok = false;
    return g.value.real();
  };
  std::vector<double> pts{0.0, e};
  if (cfg.singularity_splitting && ak < e && ak > 0.0) pts.insert(pts.begin() + 1, ak);
  quad::Options opt;
  opt.abs_tol = 0.0;
  opt.rel_tol = cfg.tol;
  opt.max_depth = cfg.max_subdivisions;
  Complex total = 0.0;
  double err = 0.0;
  bool ok = true;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i], b = pts[i + 1];
    auto f = [&](const quad::Node& n) -> Complex {
      const double au = a == 0.0 ? n.from_a : n.x;
      const double gap = b == e ? n.to_b : e - n.x;
      const double below = a == ak ? n.from_a : b == ak ? n.to_b : std::abs(ak - n.x);
      return (power(ak + au, s) + power(below, s)) * density(au, gap);
    };
    const auto res = quad::tanh_sinh<Complex>(f, a, b, opt);
    total += res.value;
    err += res.abs_err;
    ok = ok && res.converged;
  }
  if (!ok || !g_ok) raise(ErrorKind::tolerance_not_met, "density quadrature did not reach its tolerance");
  return finite_or_throw(EvalResult{total, err + 1e-15 * std::abs(total), Method::quadrature},
                         "density_quadrature");
}

}  // namespace zmf::oracle
