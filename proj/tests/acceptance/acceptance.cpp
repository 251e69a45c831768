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


// Acceptance gate.  One PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "zmf/analysis.hpp"
#include "zmf/densities.hpp"
#include "zmf/gamma.hpp"
#include "zmf/hypergeometric.hpp"
#include "zmf/meijer.hpp"
#include "zmf/oracle.hpp"
#include "zmf/quadrature.hpp"
#include "zmf/zmf.hpp"

using zmf::Complex;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// Worst ratio |a - b| / bound over a set of comparisons; a thrown error
// makes the ratio infinite.
struct Worst {
  double ratio = 0.0;
  std::string where;
  void add(double diff, double bound, const std::string& at) {
    const double q = std::isfinite(diff) ? diff / bound : INFINITY;
    if (!(q <= ratio)) {
      ratio = q;
      where = at;
    }
  }
  bool ok() const { return ratio <= 1.0; }
};

std::string point(double k, Complex s) {
  std::string t = fmt("k=%g s=%g", k, s.real());
  if (s.imag() != 0.0) t += fmt("%+gi", s.imag());
  return t;
}

double central_binomial(int n) {
  double c = 1.0;
  for (int j = 1; j <= n; ++j) c = c * (2.0 * (2 * j - 1)) / j;
  return c;
}

zmf::quad::Options tight() {
  zmf::quad::Options opt;
  opt.abs_tol = 1e-14;
  opt.rel_tol = 1e-14;
  return opt;
}

constexpr double kR1Floor = 1e-9;
constexpr double kR1Seconds = 30.0;

Verdict oracle_r1() {
  Worst w;
  for (double k : {0.0, 0.5, 1.0, 1.9, 2.0, 2.1, 3.0, 5.0})
    for (Complex s : {Complex(-0.4), Complex(0.3), Complex(1.0), Complex(2.0), Complex(2.5), Complex(1.0, 0.5)}) {
      try {
        const auto a = zmf::w1(k, s);
        const auto b = zmf::oracle::torus_quadrature(1, k, s);
        w.add(std::abs(a.value - b.value), std::max(kR1Floor, a.abs_err + b.abs_err), point(k, s));
      } catch (const zmf::Error&) {
        w.add(NAN, 1.0, point(k, s));
      }
    }
  return {w.ok(), fmt("48 points, worst |diff|/bound = %.3g", w.ratio) + " at " + w.where};
}

constexpr double kR2Tol = 1e-7;
constexpr double kR2OddTol = 1e-6;
constexpr double kR2Seconds = 180.0;

Verdict oracle_r2() {
  Worst grid, odd;
  for (double k : {0.0, 0.5, 2.0, 3.9, 4.0, 5.0})
    for (double s : {-0.5, 0.7, 2.0, 3.2}) {
      try {
        const auto a = zmf::w(2, k, s);
        const auto b = zmf::oracle::torus_quadrature(2, k, s);
        grid.add(std::abs(a.value - b.value), kR2Tol, point(k, s));
      } catch (const zmf::Error&) {
        grid.add(NAN, 1.0, point(k, s));
      }
    }
  for (auto [k, n] : {std::pair{1.0, 1}, std::pair{2.0, 1}, std::pair{1.0, 3}}) {
    try {
      const auto a = zmf::w2_odd(k, n);
      const auto b = zmf::oracle::torus_quadrature(2, k, static_cast<double>(n));
      odd.add(std::abs(a.value.value - b.value), kR2OddTol, point(k, n));
    } catch (const zmf::Error&) {
      odd.add(NAN, 1.0, point(k, n));
    }
  }
  return {grid.ok() && odd.ok(), fmt("grid worst |diff|/1e-7 = %.3g, odd-integer worst |diff|/1e-6 = %.3g",
                                     grid.ratio, odd.ratio)};
}

constexpr double kR3Tol = 1e-5;
constexpr double kR3Seconds = 600.0;

Verdict oracle_r3() {
  Worst w;
  zmf::oracle::QuadratureConfig cfg;
  cfg.tol = 1e-7;
  for (auto [k, s] : {std::pair{1.0, 0.5}, std::pair{4.0, 2.0}, std::pair{6.0, 1.2}, std::pair{9.0, 2.0}}) {
    try {
      const auto a = zmf::w(3, k, s);
      const auto b = zmf::oracle::torus_quadrature(3, k, s, cfg);
      w.add(std::abs(a.value - b.value), kR3Tol, point(k, s));
    } catch (const zmf::Error&) {
      w.add(NAN, 1.0, point(k, s));
    }
  }
  return {w.ok(), fmt("4 points, worst |diff|/1e-5 = %.3g", w.ratio) + " at " + w.where};
}

constexpr double kRealSTol = 1e-6;
constexpr double kR4Tol = 1e-4;

Verdict real_s_route() {
  Worst closed, r4;
  for (auto [r, k, s] : {std::tuple{2, 2.0, 1.5}, std::tuple{2, 3.0, 0.5}, std::tuple{3, 4.0, 2.5}}) {
    try {
      const auto a = zmf::w_real_s(r, k, s);
      const auto b = r == 2 ? zmf::w2(k, s) : zmf::w3(k, s);
      closed.add(std::abs(a.value - b.value), kRealSTol, fmt("r=%g ", r) + point(k, s));
    } catch (const zmf::Error&) {
      closed.add(NAN, 1.0, fmt("r=%g ", r) + point(k, s));
    }
  }
  try {
    const auto a = zmf::w_real_s(4, 8.0, 2.0);
    const auto b = zmf::oracle::density_quadrature(4, 8.0, 2.0);
    r4.add(std::abs(a.value - b.value), kR4Tol, "r=4 k=8 s=2");
  } catch (const zmf::Error&) {
    r4.add(NAN, 1.0, "r=4 k=8 s=2");
  }
  return {closed.ok() && r4.ok(),
          fmt("closed forms worst |diff|/1e-6 = %.3g, r=4 oracle |diff|/1e-4 = %.3g", closed.ratio, r4.ratio)};
}

constexpr double kFeTol = 1e-9;

Verdict functional_equations() {
  Worst w;
  for (double k : {3.0, 5.0})
    for (Complex s : {Complex(1.0), Complex(0.3, 0.7), Complex(-0.2)}) {
      try {
        w.add(zmf::analysis::check_fe_light(k, s), kFeTol, "light " + point(k, s));
      } catch (const zmf::Error&) {
        w.add(NAN, 1.0, "light " + point(k, s));
      }
    }
  for (double k : {1.0, 1.5})
    for (Complex s : {Complex(-0.3), Complex(-0.5), Complex(-0.7, 0.4)}) {
      try {
        w.add(zmf::analysis::check_fe_heavy(k, s), kFeTol, "heavy " + point(k, s));
      } catch (const zmf::Error&) {
        w.add(NAN, 1.0, "heavy " + point(k, s));
      }
    }
  return {w.ok(), fmt("12 residuals, worst = %.3g", w.ratio * kFeTol) + " at " + w.where};
}

constexpr double kZeroResidual = 1e-10;
constexpr double kCriticalSeconds = 300.0;

Verdict critical_line() {
  bool ok = true;
  std::string detail;
  for (double k : {1.0, 3.0}) {
    try {
      const auto rep = zmf::analysis::critical_line_report(k, 20.0);
      const bool good = rep.worst_residual < kZeroResidual && rep.off_line_total == 0 &&
                        rep.strip_total == static_cast<long>(rep.zeros.size());
      ok = ok && good;
      detail += fmt("k=%g: %g zeros", k, static_cast<double>(rep.zeros.size())) +
                fmt(", residual %.2g, off-line %g", rep.worst_residual, static_cast<double>(rep.off_line_total)) +
                fmt(", strip %g; ", static_cast<double>(rep.strip_total));
    } catch (const zmf::Error& e) {
      ok = false;
      detail += fmt("k=%g: ", k) + e.what() + "; ";
    }
  }
  return {ok, detail};
}

constexpr double kMomentTol = 1e-10;
constexpr double kOddMomentTol = 1e-12;

Verdict moments() {
  Worst even, odd;
  for (int r = 1; r <= 3; ++r) {
    const double e = std::ldexp(1.0, r);
    for (int n = 0; n <= 5; ++n) {
      const std::string at = fmt("r=%g n=%g", r, n);
      try {
        // two-sided: right half plus mirrored left half
        auto right = [&](const zmf::quad::Node& nd) {
          return std::pow(nd.x, 2 * n) * zmf::density::p_hat_gap(r, nd.x, nd.to_b);
        };
        auto left = [&](const zmf::quad::Node& nd) {
          return std::pow(nd.x, 2 * n) * zmf::density::p_hat_gap(r, -nd.x, nd.from_a);
        };
        const double q = zmf::quad::tanh_sinh<double>(right, 0.0, e, tight()).value +
                         zmf::quad::tanh_sinh<double>(left, -e, 0.0, tight()).value;
        const double exact = std::pow(central_binomial(n), r);
        even.add(std::abs(q - exact) / exact, kMomentTol, at);

        const int v = 2 * n + 1;
        auto right_odd = [&](const zmf::quad::Node& nd) {
          return std::pow(nd.x, v) * zmf::density::p_hat_gap(r, nd.x, nd.to_b);
        };
        auto left_odd = [&](const zmf::quad::Node& nd) {
          return std::pow(nd.x, v) * zmf::density::p_hat_gap(r, -nd.x, nd.from_a);
        };
        const double qo = zmf::quad::tanh_sinh<double>(right_odd, 0.0, e, tight()).value +
                          zmf::quad::tanh_sinh<double>(left_odd, -e, 0.0, tight()).value;
        const double lib = std::abs(zmf::density::moment(r, static_cast<double>(v), true));
        odd.add(std::max(std::abs(qo), lib), kOddMomentTol, fmt("r=%g v=%g", r, v));
      } catch (const zmf::Error&) {
        even.add(NAN, 1.0, at);
      }
    }
  }
  return {even.ok() && odd.ok(), fmt("even worst rel = %.3g, odd worst |m| = %.3g", even.ratio * kMomentTol,
                                     odd.ratio * kOddMomentTol)};
}

constexpr double kRecursionTol = 1e-8;
constexpr double kMassTol = 1e-8;

// G_2 and G_3 from their 2F1 closed forms.
double g_ref(int r, double y) {
  if (r == 2) return zmf::hyper::pfq({{0.5, 0.5}, {1.0}, y}).value.real() / (4.0 * zmf::kPi);
  const double a = zmf::hyper::pfq({{0.25, 0.25}, {0.5}, y}).value.real();
  const double b = zmf::hyper::pfq({{0.75, 0.75}, {1.5}, y}).value.real();
  return std::sqrt(y) / (4.0 * zmf::kPi * zmf::kPi) * a * b;
}

// Mass of p_r(k; .); a strip of width d = 1e-9 L at each breakpoint is
// replaced by d p(edge +- d/4), exact for c/sqrt(u) + B.
double mass_p_r(int r, double k) {
  const double ak = std::abs(k);
  const double e = std::ldexp(1.0, r);
  std::vector<double> pts{0.0, ak, std::abs(e - ak), ak + e};
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  zmf::quad::Options opt;
  opt.abs_tol = 1e-12;
  opt.rel_tol = 1e-12;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i], b = pts[i + 1];
    const double d = 1e-9 * (b - a);
    auto f = [&](const zmf::quad::Node& n) { return zmf::density::p_r(r, k, n.x); };
    total += zmf::quad::tanh_sinh<double>(f, a + d, b - d, opt).value;
    total += d * (zmf::density::p_r(r, k, a + 0.25 * d) + zmf::density::p_r(r, k, b - 0.25 * d));
  }
  return total;
}

Verdict densities() {
  Worst rec, mass;
  for (int r : {2, 3})
    for (int i = 1; i <= 20; ++i) {
      const double y = i / 21.0;
      const std::string at = fmt("G_%g y=%.4f", r, y);
      try {
        rec.add(std::abs(zmf::density::g_recursion(r, y).value.real() - g_ref(r, y)), kRecursionTol, at);
      } catch (const zmf::Error&) {
        rec.add(NAN, 1.0, at);
      }
    }
  for (int r = 1; r <= 3; ++r) {
    const double e = std::ldexp(1.0, r);
    try {
      auto f = [&](const zmf::quad::Node& n) { return 2.0 * zmf::density::p_hat_gap(r, n.x, n.to_b); };
      mass.add(std::abs(zmf::quad::tanh_sinh<double>(f, 0.0, e, tight()).value - 1.0), kMassTol,
               fmt("p_hat_%g", r));
      if (r >= 2) {
        // same mass through the recursion, y = gap (e + x) / e^2 and 1 - y = x^2 / e^2
        auto g = [&](const zmf::quad::Node& n) {
          const double y = n.to_b * (e + n.x) / (e * e);
          const double y1 = std::max((n.x / e) * (n.x / e), 1e-300);
          return 2.0 * zmf::density::g_recursion(r, y, y1, 1e-12).value.real();
        };
        zmf::quad::Options opt;
        opt.abs_tol = 1e-11;
        opt.rel_tol = 1e-11;
        mass.add(std::abs(zmf::quad::tanh_sinh<double>(g, 0.0, e, opt).value - 1.0), kMassTol,
                 fmt("G_%g recursion", r));
      }
      for (double k : {0.0, 1.0, e, e + 1.0})
        mass.add(std::abs(mass_p_r(r, k) - 1.0), kMassTol, fmt("p_%g k=%g", r, k));
    } catch (const zmf::Error&) {
      mass.add(NAN, 1.0, fmt("r=%g", r));
    }
  }
  return {rec.ok() && mass.ok(), fmt("recursion worst = %.3g, mass worst |1 - m| = %.3g", rec.ratio * kRecursionTol,
                                     mass.ratio * kMassTol) + " at " + mass.where};
}

constexpr double kMahler2Tol = 1e-6;
constexpr double kMahler3Tol = 1e-5;

Verdict mahler() {
  Worst w2, w3;
  for (double k : {0.5, 2.0, 3.5}) {
    try {
      w2.add(zmf::analysis::mahler_w2(k).spread, kMahler2Tol, fmt("w2 k=%g", k));
    } catch (const zmf::Error&) {
      w2.add(NAN, 1.0, fmt("w2 k=%g", k));
    }
  }
  for (double k : {0.5, 2.0, 6.0}) {
    try {
      w3.add(zmf::analysis::mahler_w3(k).spread, kMahler3Tol, fmt("w3 k=%g", k));
    } catch (const zmf::Error&) {
      w3.add(NAN, 1.0, fmt("w3 k=%g", k));
    }
  }
  return {w2.ok() && w3.ok(), fmt("w2 worst spread = %.3g, w3 worst spread = %.3g", w2.ratio * kMahler2Tol,
                                  w3.ratio * kMahler3Tol)};
}

constexpr double kBoundaryTol = 1e-5;
// finite-difference error of the right derivative at k = 0, by order
constexpr double kKZeroTol[3] = {1e-6, 1e-6, 1e-4};

Verdict boundary() {
  Worst b, kz;
  for (auto [r, s] : {std::pair{1, 2.0}, std::pair{2, 1.6}}) {
    try {
      b.add(zmf::boundary_derivative_check(r, s).residual, kBoundaryTol, fmt("r=%g s=%g", r, s));
    } catch (const zmf::Error&) {
      b.add(NAN, 1.0, fmt("r=%g s=%g", r, s));
    }
  }
  double table_gap = 0.0;
  for (auto [r, s, j] : {std::tuple{2, 3.5, 0}, std::tuple{2, 3.5, 1}, std::tuple{1, 2.5, 2}}) {
    const std::string at = fmt("r=%g s=%g", r, s) + fmt(" j=%g", j);
    try {
      const auto rep = zmf::k_zero_derivatives(r, s, j);
      kz.add(rep.residual, kKZeroTol[j], at);
      table_gap = std::max(table_gap, std::abs(rep.derivative - rep.table));
    } catch (const zmf::Error&) {
      kz.add(NAN, 1.0, at);
    }
  }
  return {b.ok() && kz.ok(), fmt("boundary worst = %.3g, k=0 worst residual/tol = %.3g", b.ratio * kBoundaryTol,
                                 kz.ratio) +
                                 fmt(" (printed closed form off by up to %.3g)", table_gap)};
}

constexpr double kRationalTol = 1e-10;

Verdict rationality() {
  bool exact = false;
  Worst w;
  try {
    const auto d = zmf::analysis::w1_rational_decomposition(1);
    exact = d.q0.num == 1 && d.q0.den == 3 && d.q1.num == 2 && d.q1.den == 1;
    for (int n : {3, 5}) w.add(zmf::analysis::w1_rational_decomposition(n).residual, kRationalTol, fmt("n=%g", n));
  } catch (const zmf::Error&) {
    w.add(NAN, 1.0, "decomposition");
  }
  return {exact && w.ok(), std::string(exact ? "n=1 is (1/3, 2)" : "n=1 mismatch") +
                               fmt(", n=3,5 worst residual = %.3g", w.ratio * kRationalTol)};
}

constexpr double kMeijerFloor = 1e-8;
constexpr double kMeijerSeconds = 120.0;

Verdict meijer() {
  Worst w;
  for (double s : {0.25, 1.0, 2.5})
    for (double k : {0.5, 2.0, 6.0}) {
      try {
        const auto a = zmf::meijer::meijer_mb(zmf::meijer::w3_kernel(s, k));
        const auto b = zmf::meijer::meijer_triple_integral(s, k);
        w.add(std::abs(a.value - b.value), std::max(kMeijerFloor, a.abs_err + b.abs_err), point(k, s));
      } catch (const zmf::Error&) {
        w.add(NAN, 1.0, point(k, s));
      }
    }
  return {w.ok(), fmt("9 points, worst |diff|/bound = %.3g", w.ratio) + " at " + w.where};
}

struct Criterion {
  const char* name;
  std::function<Verdict()> run;
  double seconds;  // wall-clock limit, 0 for none
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"oracle equivalence r=1", oracle_r1, kR1Seconds},
      {"oracle equivalence r=2", oracle_r2, kR2Seconds},
      {"oracle equivalence r=3", oracle_r3, kR3Seconds},
      {"real-s route", real_s_route, 0.0},
      {"functional equations", functional_equations, 0.0},
      {"critical line", critical_line, kCriticalSeconds},
      {"moments", moments, 0.0},
      {"densities", densities, 0.0},
      {"mahler measures", mahler, 0.0},
      {"boundary structure", boundary, 0.0},
      {"rationality", rationality, 0.0},
      {"meijer cross-method", meijer, kMeijerSeconds},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string timing = fmt("%.1f s", secs);
    if (c.seconds > 0.0) {
      timing += fmt(" of %g s", c.seconds);
      if (secs > c.seconds) v.pass = false;
    }
    if (!v.pass) ++failed;
    std::printf("%s %2d %s: %s [%s]\n", v.pass ? "PASS" : "FAIL", index, c.name, v.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
