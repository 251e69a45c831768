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

#include "doctest.h"
#include "zmf/gamma.hpp"
#include "zmf/meijer.hpp"
#include "zmf/oracle.hpp"
#include "zmf/zmf.hpp"

using zmf::Complex;
using zmf::meijer::MeijerSpec;

TEST_SUITE("meijer-g") {
  TEST_CASE("agm") {
    // 1/agm(1, sqrt 2) is Gauss's constant 0.8346268416740731862814297...
    CHECK(std::abs(1.0 / zmf::meijer::agm(1.0, std::sqrt(2.0)) - 0.83462684167407318628) < 1e-15);
    CHECK(zmf::meijer::agm(2.0, 2.0) == 2.0);
  }

  TEST_CASE("frozen values from an independent evaluator") {
    // mpmath meijerg at the Mahler kernel, the W3 kernel and the odd W2 kernel
    const auto m2 = zmf::meijer::meijer_mb(zmf::meijer::w3_kernel(0.0, 2.0));
    CHECK(std::abs(m2.value / (2.0 * std::pow(zmf::kPi, 2.5)) - 0.7117096984257766026) < 1e-12);
    const auto m6 = zmf::meijer::meijer_mb(zmf::meijer::w3_kernel(0.0, 6.0));
    CHECK(std::abs(m6.value / (2.0 * std::pow(zmf::kPi, 2.5)) - 1.6227552234901175915) < 1e-12);
    const auto h = zmf::meijer::meijer_mb(zmf::meijer::w3_kernel(0.5, 2.0));
    CHECK(std::abs(h.value - 14.070602612602589556) < 1e-10);
    const auto c = zmf::meijer::meijer_mb(zmf::meijer::w3_kernel(Complex(1.0, 0.5), 1.0));
    CHECK(std::abs(c.value - Complex(0.8984704233259335111, -1.8725477067670228046)) < 1e-10);
    const auto o = zmf::meijer::meijer_mb(zmf::meijer::w2_odd_kernel(1, 1.0));
    CHECK(std::abs(o.value + 28.493301129405149234) < 1e-9);
  }

  TEST_CASE("shift identity") {
    const double s = 0.5, x = 0.25;
    MeijerSpec lhs = zmf::meijer::w3_kernel(s, 1.0);
    lhs.x = x;
    const Complex a = 0.5;
    MeijerSpec rhs{{a, a, a, a}, {0.0, 0.0, -(1.0 + s) / 2, -s / 2}, 2, 4, 4, 4, x};
    const Complex l = zmf::meijer::meijer_mb(lhs).value;
    const Complex r = std::pow(x, (1.0 + s) / 2) * zmf::meijer::meijer_mb(rhs).value;
    CHECK(std::abs(l - r) < 1e-10);
  }

  TEST_CASE("W2(1; 1) from the odd-integer kernel matches torus quadrature") {
    const auto odd = zmf::w2_odd(1.0, 1);
    const auto torus = zmf::oracle::torus_quadrature(2, 1.0, 1.0);
    CHECK(std::abs(odd.meijer.value - torus.value) < 1e-8);
  }

  TEST_CASE("triple integrand is positive inside the cube") {
    // The integral at real s is a positive multiple of a positive integrand.
    const auto v = zmf::meijer::meijer_triple_integral(1.0, 2.0);
    CHECK(v.value.real() > 0.0);
    CHECK(std::abs(v.value.imag()) < 1e-14);
  }

  TEST_CASE("triple integral against the Mellin-Barnes route") {
    for (auto [s, k] : {std::pair<double, double>{0.5, 2.0}, {1.0, 2.0}}) {
      const auto mb = zmf::meijer::meijer_mb(zmf::meijer::w3_kernel(s, k));
      const auto ti = zmf::meijer::meijer_triple_integral(s, k);
      CHECK(std::abs(mb.value - ti.value) <= std::max(1e-8, mb.abs_err + ti.abs_err));
    }
  }

  TEST_CASE("W3(1; 0.5) through both routes matches torus quadrature") {
    const auto a = zmf::w3(1.0, 0.5, zmf::MeijerRoute::mellin_barnes);
    const auto b = zmf::w3(1.0, 0.5, zmf::MeijerRoute::triple_integral);
    zmf::oracle::QuadratureConfig cfg;
    cfg.tol = 1e-7;
    const auto t = zmf::oracle::torus_quadrature(3, 1.0, 0.5, cfg);
    CHECK(std::abs(a.value - t.value) < 1e-5);
    CHECK(std::abs(b.value - t.value) < 1e-5);
  }

  TEST_CASE("conjugation symmetry") {
    for (Complex s : {Complex(0.4, 0.3), Complex(1.2, -0.8), Complex(2.5, 1.5)}) {
      const auto a = zmf::meijer::meijer_mb(zmf::meijer::w3_kernel(s, 3.0)).value;
      const auto b = zmf::meijer::meijer_mb(zmf::meijer::w3_kernel(std::conj(s), 3.0)).value;
      CHECK(std::abs(a - std::conj(b)) < 1e-10);
    }
  }

  TEST_CASE("pinched contour is an error") {
    // b_1 = a_1 - 1 puts a right pole on top of a left pole.
    const MeijerSpec g{{0.5, 0.5, 0.5}, {-0.5, 0.5, 0.5}, 2, 3, 3, 3, 0.1};
    CHECK_THROWS_AS(zmf::meijer::meijer_mb(g), zmf::Error);
    MeijerSpec bad = zmf::meijer::w3_kernel(0.5, 2.0);
    bad.m = 3;
    CHECK_THROWS_AS(zmf::meijer::meijer_mb(bad), zmf::Error);
    CHECK_THROWS_AS(zmf::meijer::meijer_triple_integral(-1.5, 2.0), zmf::Error);
    CHECK_THROWS_AS(zmf::meijer::meijer_triple_integral(0.5, 8.5), zmf::Error);
  }
}
