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


#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "zmf/analysis.hpp"
#include "zmf/gamma.hpp"
#include "zmf/zmf.hpp"

using zmf::Complex;
using zmf::analysis::Box;
using zmf::testing::Gen;

namespace {

// Zero ordinates of W_1(k; -1/2 + i t) from mpmath findroot at 30 digits.
const std::vector<double> kZerosK3{3.0019367548373852, 6.8654742495313667, 10.757447165177132,
                                   14.655713728709352, 18.556356513703211};
const std::vector<double> kZerosK1{2.9013854429396184, 8.5921239555482759, 14.305974562092722};

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("functional equation, light case") {
    CHECK(zmf::analysis::check_fe_light(3.0, 1.0) < 1e-11);
    CHECK(zmf::analysis::check_fe_light(3.0, -0.5) == 0.0);
    CHECK(zmf::analysis::check_fe_light(5.0, Complex(0.3, 0.7)) < 1e-10);
    CHECK_THROWS_AS(zmf::analysis::check_fe_light(1.0, 1.0), zmf::Error);
  }

  TEST_CASE("functional equation, heavy case") {
    CHECK(zmf::analysis::check_fe_heavy(1.0, -0.5) < 1e-11);
    CHECK(zmf::analysis::check_fe_heavy(1.0, -0.3) < 1e-10);
    CHECK(zmf::analysis::check_fe_heavy(1.5, Complex(-0.7, 0.4)) < 1e-10);
    CHECK_THROWS_AS(zmf::analysis::check_fe_heavy(1.0, 0.2), zmf::Error);
    CHECK_THROWS_AS(zmf::analysis::check_fe_heavy(3.0, -0.5), zmf::Error);
  }

  TEST_CASE("property: functional equation residuals on grids") {
    Gen g(0xA0A10001);
    for (int i = 0; i < 25; ++i) {
      const double k = g.uniform(2.2, 8.0);
      const Complex s(g.uniform(-1.5, 1.5), g.uniform(-2.0, 2.0));
      REQUIRE_MESSAGE(zmf::analysis::check_fe_light(k, s) < 1e-9, "k=" << k << " s=" << s);
    }
    for (int i = 0; i < 25; ++i) {
      const double k = g.uniform(0.1, 1.9);
      const Complex s(g.uniform(-0.95, -0.05), g.uniform(-2.0, 2.0));
      REQUIRE_MESSAGE(zmf::analysis::check_fe_heavy(k, s) < 1e-9, "k=" << k << " s=" << s);
    }
  }

  TEST_CASE("W1 is positive for real s > 0") {
    for (double k : {0.5, 1.0, 3.0})
      for (double s = 0.1; s < 6.0; s += 0.37) CHECK(zmf::w1(k, s).value.real() > 0.0);
  }

  TEST_CASE("zeros on the critical line") {
    const auto z3 = zmf::analysis::find_zeros_w1(3.0, 20.0);
    REQUIRE(z3.size() == kZerosK3.size());
    for (std::size_t i = 0; i < z3.size(); ++i) {
      CHECK(std::abs(z3[i].t - kZerosK3[i]) < 1e-10);
      CHECK(z3[i].residual < 1e-10);
      CHECK(z3[i].method == zmf::analysis::ZeroMethod::bisection);
    }
    const auto z1 = zmf::analysis::find_zeros_w1(1.0, 20.0);
    REQUIRE(z1.size() == kZerosK1.size());
    for (std::size_t i = 0; i < z1.size(); ++i) {
      CHECK(std::abs(z1[i].t - kZerosK1[i]) < 1e-10);
      CHECK(z1[i].residual < 1e-10);
    }
    CHECK_THROWS_AS(zmf::analysis::find_zeros_w1(2.0, 10.0), zmf::Error);
    CHECK_THROWS_AS(zmf::analysis::find_zeros_w1(3.0, 60.0), zmf::Error);
  }

  TEST_CASE("xi changes sign at each zero") {
    for (double t : kZerosK3) CHECK(zmf::analysis::xi(3.0, t - 0.01) * zmf::analysis::xi(3.0, t + 0.01) < 0.0);
    for (double t : kZerosK1) CHECK(zmf::analysis::xi(1.0, t - 0.01) * zmf::analysis::xi(1.0, t + 0.01) < 0.0);
  }

  TEST_CASE("argument principle boxes") {
    CHECK(zmf::analysis::count_zeros_box(3.0, Box{-0.4, 0.4, 0.5, 3.5}).winding == 0);
    const auto around = zmf::analysis::count_zeros_box(3.0, Box{-0.6, -0.4, 2.5, 3.5});
    CHECK(around.winding == 1);
    CHECK(std::abs(around.raw - 1.0) < 0.1);
    CHECK(zmf::analysis::count_zeros_box(1.0, Box{0.2, 1.0, 0.5, 5.0}).winding == 0);
    CHECK(zmf::analysis::count_zeros_box(1.0, Box{-0.6, -0.4, 7.5, 9.5}).winding == 1);
  }

  TEST_CASE("Gamma prefactor ledger") {
    const auto heavy = zmf::analysis::prefactor_points(1.0, -4.5, 0.0);
    REQUIRE(heavy.size() == 4);
    CHECK((heavy[0].s == -4.0 && !heavy[0].pole));
    CHECK((heavy[1].s == -3.0 && heavy[1].pole));
    CHECK((heavy[2].s == -2.0 && !heavy[2].pole));
    CHECK((heavy[3].s == -1.0 && heavy[3].pole));
    CHECK(zmf::analysis::prefactor_points(3.0, -4.5, 0.0).empty());
    const auto boundary = zmf::analysis::prefactor_points(2.0, -2.0, 0.0);
    REQUIRE(boundary.size() == 4);
    CHECK((boundary[0].s == -2.0 && !boundary[0].pole));
    CHECK((boundary[1].s == -1.5 && boundary[1].pole));
    CHECK((boundary[3].s == -0.5 && boundary[3].pole));
  }

  TEST_CASE("critical line confinement, k = 3") {
    const auto rep = zmf::analysis::critical_line_report(3.0, 20.0);
    CHECK(rep.zeros.size() == 5);
    CHECK(rep.off_line_total == 0);
    CHECK(rep.strip_total == 5);
    CHECK(rep.worst_residual < 1e-10);
    for (const auto& b : rep.off_line) CHECK(b.winding == 0);
  }

  TEST_CASE("Jacobi function") {
    CHECK(std::abs(zmf::analysis::jacobi_phi(-0.5, 0.0, 2.0, 0.0) - 1.0) < 1e-15);
    for (double mu : {0.0, -0.5, -2.0})
      for (double t : {0.1, 0.7, 2.0})
        CHECK(zmf::analysis::jacobi_phi(-0.5, 0.0, Complex(0.0, mu), t).real() > 0.0);
    CHECK(zmf::analysis::jacobi_ode_residual(-0.5, 0.0, 2.0, 0.7) < 1e-6);
  }

  TEST_CASE("Jacobi integral identity") {
    CHECK(zmf::analysis::check_beauty(-0.5, 0.0, 1.0, 2.0, 1.0).residual < 1e-7);
    CHECK(zmf::analysis::check_beauty(0.0, -0.5, 1.5, 0.5, 0.8).residual < 1e-7);
    const auto a = zmf::analysis::check_beauty(-0.5, 0.0, 1.0, 2.0, 1.0);
    const auto b = zmf::analysis::check_beauty(-0.5, 0.0, 2.0, 1.0, 1.0);
    CHECK(std::abs(a.wronskian - b.wronskian) < 1e-10);
    CHECK_THROWS_AS(zmf::analysis::check_beauty(-0.5, 0.0, 1.0, 1.0, 1.0), zmf::Error);
  }

  TEST_CASE("property: Jacobi residuals on a parameter sample") {
    struct P {
      double alpha, beta;
      Complex lambda, mu;
      double x;
    };
    for (const P& p : {P{-0.5, 0.0, 1.0, 2.0, 1.0}, P{0.0, -0.5, 1.5, 0.5, 0.8}, P{0.5, 0.5, 0.3, 1.1, 1.4},
                       P{1.0, 0.0, Complex(0.5, 0.2), 2.5, 0.6}, P{-0.25, 0.25, 3.0, 0.7, 1.2}}) {
      CHECK(zmf::analysis::check_beauty(p.alpha, p.beta, p.lambda, p.mu, p.x).residual < 1e-6);
      CHECK(zmf::analysis::jacobi_ode_residual(p.alpha, p.beta, p.lambda, p.x) < 1e-6);
    }
  }

  TEST_CASE("Mahler measure, r = 2") {
    CHECK(zmf::analysis::mahler_w2(0.0).value.value == Complex(0.0, 0.0));
    for (double k : {2.0, 3.5}) CHECK(zmf::analysis::mahler_w2(k).spread < 1e-6);
    // |k|/4 3F2(1/2,1/2,1/2; 1,3/2; k^2/16) at k = 2 from mpmath
    CHECK(std::abs(zmf::analysis::mahler_w2(2.0).value.value.real() - 0.5 * 1.02284813410700744457) < 1e-13);
    CHECK_THROWS_AS(zmf::analysis::mahler_w2(4.5), zmf::Error);
  }

  TEST_CASE("Mahler measure, r = 3") {
    const auto a = zmf::analysis::mahler_w3(2.0);
    CHECK(a.spread < 1e-5);
    CHECK(std::abs(a.value.value.real() - 0.7117096984257766026) < 1e-12);
    const auto b = zmf::analysis::mahler_w3(6.0);
    CHECK(b.spread < 1e-5);
    CHECK(std::abs(b.value.value.real() - 1.6227552234901175915) < 1e-12);
    const double m1 = zmf::analysis::mahler_w3(0.5).value.value.real();
    const double m2 = zmf::analysis::mahler_w3(0.25).value.value.real();
    const double m3 = zmf::analysis::mahler_w3(0.125).value.value.real();
    CHECK(m1 > m2);
    CHECK(m2 > m3);
    CHECK(m3 > 0.0);
    CHECK_THROWS_AS(zmf::analysis::mahler_w3(0.0), zmf::Error);
  }

  TEST_CASE("rational decomposition of W1(1; n)") {
    const auto d1 = zmf::analysis::w1_rational_decomposition(1);
    CHECK(d1.q0.num == 1);
    CHECK(d1.q0.den == 3);
    CHECK(d1.q1.num == 2);
    CHECK(d1.q1.den == 1);
    const auto d3 = zmf::analysis::w1_rational_decomposition(3);
    CHECK(zmf::analysis::to_string(d3.q0) == "7/3");
    CHECK(zmf::analysis::to_string(d3.q1) == "9");
    CHECK(d3.residual < 1e-10);
    const auto d5 = zmf::analysis::w1_rational_decomposition(5);
    CHECK(zmf::analysis::to_string(d5.q0) == "17");
    CHECK(zmf::analysis::to_string(d5.q1) == "621/10");
    CHECK(d5.residual < 1e-10);
    CHECK_THROWS_AS(zmf::analysis::w1_rational_decomposition(2), zmf::Error);
    CHECK_THROWS_AS(zmf::analysis::w1_rational_decomposition(7), zmf::Error);
  }

  TEST_CASE("integer relation") {
    const double r2 = std::sqrt(2.0);
    const auto c = zmf::analysis::integer_relation({1.0, r2, 3.0 + 5.0 * r2}, 1e11, 1000);
    REQUIRE(c.size() == 3);
    const std::int64_t sign = c[2] < 0 ? 1 : -1;
    CHECK(sign * c[0] == 3);
    CHECK(sign * c[1] == 5);
    CHECK(sign * c[2] == -1);
  }
}
