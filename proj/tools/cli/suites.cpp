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

#include "suites.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>

#include "zmf/analysis.hpp"
#include "zmf/densities.hpp"
#include "zmf/oracle.hpp"
#include "zmf/zmf.hpp"

namespace zmf::cli {
namespace {

using Json = nlohmann::ordered_json;

class Table {
 public:
  explicit Table(Output& out) : out_(out) {}

  // Records value < tol; a thrown library error counts as a failure.
  void check(const std::string& suite, const std::string& name, double tol,
             const std::function<double()>& measure) {
    double v = std::numeric_limits<double>::quiet_NaN();
    try {
      v = measure();
    } catch (const zmf::Error&) {
    }
    const bool pass = std::isfinite(v) && v < tol;
    Json row;
    row["suite"] = suite;
    row["check"] = name;
    row["value"] = v;
    row["tolerance"] = tol;
    row["pass"] = pass;
    out_.rows.push_back(row);
    out_.passed = out_.passed && pass;
  }

 private:
  Output& out_;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

std::string fmt(Complex s) {
  return s.imag() == 0.0 ? fmt(s.real()) : fmt(s.real()) + (s.imag() < 0 ? "" : "+") + fmt(s.imag()) + "i";
}

void functional_equations(Table& t) {
  const char* name = "functional-equations";
  for (double k : {3.0, 5.0})
    for (Complex s : {Complex(1.0, 0.0), Complex(0.3, 0.7), Complex(-0.2, 0.0)})
      t.check(name, "light k=" + fmt(k) + " s=" + fmt(s), 1e-9,
              [=] { return analysis::check_fe_light(k, s); });
  for (double k : {1.0, 1.5})
    for (Complex s : {Complex(-0.3, 0.0), Complex(-0.5, 0.0), Complex(-0.7, 0.4)})
      t.check(name, "heavy k=" + fmt(k) + " s=" + fmt(s), 1e-9,
              [=] { return analysis::check_fe_heavy(k, s); });
}

void critical_line(Table& t) {
  const char* name = "critical-line";
  for (double k : {1.0, 3.0}) {
    analysis::ConfinementReport rep;
    bool ok = true;
    try {
      rep = analysis::critical_line_report(k, 20.0);
    } catch (const zmf::Error&) {
      ok = false;
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const std::string tag = " k=" + fmt(k);
    t.check(name, "zero residual" + tag, 1e-10, [&] { return ok ? rep.worst_residual : nan; });
    t.check(name, "off-line winding" + tag, 0.5,
            [&] { return ok ? std::abs(static_cast<double>(rep.off_line_total)) : nan; });
    t.check(name, "strip count minus zeros" + tag, 0.5, [&] {
      return ok ? std::abs(static_cast<double>(rep.strip_total) - static_cast<double>(rep.zeros.size())) : nan;
    });
  }
}

void jacobi(Table& t) {
  const char* name = "jacobi";
  t.check(name, "ode residual (-1/2,0,2,0.7)", 1e-6,
          [] { return analysis::jacobi_ode_residual(-0.5, 0.0, 2.0, 0.7); });
  t.check(name, "beauty (-1/2,0,1,2,1)", 1e-7,
          [] { return analysis::check_beauty(-0.5, 0.0, 1.0, 2.0, 1.0).residual; });
  t.check(name, "beauty (0,-1/2,1.5,0.5,0.8)", 1e-7,
          [] { return analysis::check_beauty(0.0, -0.5, 1.5, 0.5, 0.8).residual; });
}

void mahler(Table& t) {
  const char* name = "mahler";
  for (double k : {0.5, 2.0, 3.5})
    t.check(name, "w2 spread k=" + fmt(k), 1e-6, [=] { return analysis::mahler_w2(k).spread; });
  for (double k : {0.5, 2.0, 6.0})
    t.check(name, "w3 spread k=" + fmt(k), 1e-5, [=] { return analysis::mahler_w3(k).spread; });
}

void rationality(Table& t) {
  const char* name = "rationality";
  t.check(name, "n=1 equals (1/3, 2)", 0.5, [] {
    const auto d = analysis::w1_rational_decomposition(1);
    return (d.q0.num == 1 && d.q0.den == 3 && d.q1.num == 2 && d.q1.den == 1) ? 0.0 : 1.0;
  });
  for (int n : {3, 5})
    t.check(name, "n=" + std::to_string(n) + " residual", 1e-10,
            [=] { return analysis::w1_rational_decomposition(n).residual; });
}

void moments(Table& t) {
  const char* name = "moments";
  for (int r = 1; r <= 3; ++r) {
    double central = 1.0;
    for (int n = 0; n <= 5; ++n) {
      if (n > 0) central = central * (2.0 * (2 * n - 1)) / n;
      const double expect = std::pow(central, r);
      t.check(name, "r=" + std::to_string(r) + " v=" + std::to_string(2 * n), 1e-10, [=] {
        return std::abs(density::moment(r, 2.0 * n, true).real() - expect) / expect;
      });
    }
  }
}

void boundary(Table& t) {
  const char* name = "boundary";
  t.check(name, "derivative r=1 s=2", 1e-5, [] { return boundary_derivative_check(1, 2.0).residual; });
  t.check(name, "derivative r=2 s=1.6", 1e-5, [] { return boundary_derivative_check(2, 1.6).residual; });
  t.check(name, "k=0 r=2 s=3.5 j=0", 1e-6, [] { return k_zero_derivatives(2, 3.5, 0).residual; });
  t.check(name, "k=0 r=2 s=3.5 j=1", 1e-6, [] { return k_zero_derivatives(2, 3.5, 1).residual; });
  t.check(name, "k=0 r=1 s=2.5 j=2", 1e-6, [] { return k_zero_derivatives(1, 2.5, 2).residual; });
}

void oracle_r1(Table& t) {
  const char* name = "oracle";
  for (double k : {0.5, 2.0, 3.0})
    for (Complex s : {Complex(-0.4, 0.0), Complex(1.0, 0.0), Complex(1.0, 0.5)})
      t.check(name, "r=1 k=" + fmt(k) + " s=" + fmt(s), 1.0, [=] {
        const auto a = w1(k, s);
        const auto b = oracle::torus_quadrature(1, k, s);
        return std::abs(a.value - b.value) / std::max(1e-9, a.abs_err + b.abs_err);
      });
}

const std::vector<std::pair<std::string, void (*)(Table&)>>& registry() {
  static const std::vector<std::pair<std::string, void (*)(Table&)>> r{
      {"functional-equations", functional_equations},
      {"critical-line", critical_line},
      {"jacobi", jacobi},
      {"mahler", mahler},
      {"rationality", rationality},
      {"moments", moments},
      {"boundary", boundary},
      {"oracle", oracle_r1},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [key, fn] : registry()) n.push_back(key);
    n.push_back("all");
    return n;
  }();
  return names;
}

Output run_suite(const std::string& name) {
  Output out;
  Table t(out);
  bool found = false;
  for (const auto& [key, fn] : registry()) {
    if (name == "all" || name == key) {
      fn(t);
      found = true;
    }
  }
  if (!found) raise(ErrorKind::precondition, "unknown suite " + name);
  out.doc["suite"] = name;
  out.doc["passed"] = out.passed;
  out.doc["checks"] = out.rows;
  return out;
}

}  // namespace zmf::cli
