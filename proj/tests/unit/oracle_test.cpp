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
#include "zmf/gamma.hpp"
#include "zmf/oracle.hpp"
#include "zmf/parallel.hpp"
#include "zmf/philox.hpp"

using zmf::Complex;
using zmf::Philox4x32;
using zmf::oracle::QuadratureConfig;

namespace {

struct Cell {
  int r;
  double k;
  Complex s;
};

// Twelve cells over r <= 3 touching every regime.
const std::vector<Cell>& grid() {
  static const std::vector<Cell> g{
      {1, 0.5, 0.3}, {1, 2.0, 1.0}, {1, 3.0, -0.4}, {1, 1.0, Complex(1.0, 0.5)},
      {2, 1.0, 0.5}, {2, 4.0, 1.5}, {2, 5.0, 0.7},  {2, 0.0, 2.0},
      {3, 1.0, 0.5}, {3, 8.0, 1.0}, {3, 9.0, 2.0},  {3, 6.0, 1.2},
  };
  return g;
}

QuadratureConfig cfg_for(int r, double scale = 1.0) {
  QuadratureConfig c;
  c.tol = (r == 3 ? 1e-7 : 1e-9) * scale;
  return c;
}

// Restores the thread cap on scope exit.
struct ThreadCap {
  explicit ThreadCap(unsigned n) : saved(zmf::max_threads()) { zmf::set_max_threads(n); }
  ~ThreadCap() { zmf::set_max_threads(saved); }
  unsigned saved;
};

}  // namespace

TEST_SUITE("torus-oracle") {
  TEST_CASE("Philox4x32-10 known answers") {
    using C = Philox4x32::Counter;
    CHECK(Philox4x32(0)(C{0, 0, 0, 0}) == C{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    CHECK(Philox4x32(~0ull)(C{~0u, ~0u, ~0u, ~0u}) == C{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
    CHECK(Philox4x32(0x299f31d0a4093822ull)(C{0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}) ==
          C{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
  }

  TEST_CASE("uniform pairs stay in the open unit interval") {
    const Philox4x32 g(42);
    double lo = 1.0, hi = 0.0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
      const auto u = g.uniform_pair(i, 7);
      lo = std::min({lo, u[0], u[1]});
      hi = std::max({hi, u[0], u[1]});
    }
    CHECK(lo > 0.0);
    CHECK(hi < 1.0);
  }

  TEST_CASE("torus quadrature examples") {
    CHECK(std::abs(zmf::oracle::torus_quadrature(1, 3.0, 2.0).value - 11.0) < 1e-9);
    CHECK(std::abs(zmf::oracle::torus_quadrature(2, 0.0, 2.0).value - 4.0) < 1e-9);
    CHECK(std::abs(zmf::oracle::torus_quadrature(1, 0.0, 1.0).value - 4.0 / zmf::kPi) < 1e-10);
    CHECK_THROWS_AS(zmf::oracle::torus_quadrature(4, 1.0, 1.0), zmf::Error);
    CHECK_THROWS_AS(zmf::oracle::torus_quadrature(1, 1.0, -1.0), zmf::Error);
  }

  TEST_CASE("configuration validation") {
    QuadratureConfig c;
    c.tol = 1e-15;
    CHECK_THROWS_AS(zmf::oracle::validate(c), zmf::Error);
    c.tol = 1e-8;
    c.samples = 0;
    CHECK_THROWS_AS(zmf::oracle::validate(c), zmf::Error);
  }

  TEST_CASE("Monte Carlo examples") {
    QuadratureConfig c;
    c.seed = 1234;
    c.samples = 1000;
    CHECK(zmf::oracle::monte_carlo(2, 1.0, 0.0, c).value == Complex(1.0, 0.0));
    c.seed = 99;
    c.samples = 1'000'000;
    const auto mc = zmf::oracle::monte_carlo(3, 0.0, 2.0, c);
    CHECK(std::abs(mc.value - 8.0) <= mc.abs_err);
    const auto again = zmf::oracle::monte_carlo(3, 0.0, 2.0, c);
    CHECK(again.value == mc.value);
    CHECK(again.abs_err == mc.abs_err);
    c.seed = 100;
    CHECK(zmf::oracle::monte_carlo(3, 0.0, 2.0, c).value != mc.value);
  }

  TEST_CASE("density quadrature examples") {
    const double w11 = 1.0 / 3.0 + 2.0 * std::sqrt(3.0) / zmf::kPi;
    CHECK(std::abs(zmf::oracle::density_quadrature(1, 1.0, 1.0).value - w11) < 1e-10);
    CHECK(std::abs(zmf::oracle::density_quadrature(2, 0.0, 2.0).value - 4.0) < 1e-9);
    CHECK(std::abs(zmf::oracle::density_quadrature(3, 9.0, 0.0).value - 1.0) < 1e-9);
    CHECK(std::abs(zmf::oracle::density_quadrature(4, 8.0, 2.0).value - 80.0) < 1e-8);
  }

  TEST_CASE("property: oracle concordance") {
    for (const Cell& c : grid()) {
      const auto t = zmf::oracle::torus_quadrature(c.r, c.k, c.s, cfg_for(c.r));
      const auto d = zmf::oracle::density_quadrature(c.r, c.k, c.s, cfg_for(c.r));
      CHECK_MESSAGE(std::abs(t.value - d.value) <= t.abs_err + d.abs_err + 1e-13 * std::abs(d.value),
                    "r=" << c.r << " k=" << c.k << " s=" << c.s);
    }
  }

  TEST_CASE("property: Monte Carlo bands") {
    int inside = 0;
    std::uint64_t seed = 2024;
    for (const Cell& c : grid()) {
      QuadratureConfig q;
      q.seed = seed++;
      q.samples = 1'000'000;
      const auto mc = zmf::oracle::monte_carlo(c.r, c.k, c.s, q);
      const auto d = zmf::oracle::density_quadrature(c.r, c.k, c.s, cfg_for(c.r));
      if (std::abs(mc.value - d.value) <= mc.abs_err) ++inside;
    }
    CHECK(inside >= 11);
  }

  TEST_CASE("property: error estimates bound a tighter re-run") {
    int honest = 0;
    for (const Cell& c : grid()) {
      const auto loose = zmf::oracle::torus_quadrature(c.r, c.k, c.s, cfg_for(c.r));
      const auto tight = zmf::oracle::torus_quadrature(c.r, c.k, c.s, cfg_for(c.r, 0.1));
      if (std::abs(loose.value - tight.value) <= loose.abs_err) ++honest;
    }
    CHECK(honest >= 12);
  }

  TEST_CASE("property: results do not depend on the thread cap") {
    QuadratureConfig q;
    q.seed = 77;
    q.samples = 200'000;
    zmf::EvalResult mc1, mc4, t1, t4;
    {
      ThreadCap cap(1);
      mc1 = zmf::oracle::monte_carlo(2, 1.5, Complex(0.7, 0.2), q);
      t1 = zmf::oracle::torus_quadrature(2, 1.5, 0.7);
    }
    {
      ThreadCap cap(4);
      mc4 = zmf::oracle::monte_carlo(2, 1.5, Complex(0.7, 0.2), q);
      t4 = zmf::oracle::torus_quadrature(2, 1.5, 0.7);
    }
    CHECK(mc1.value == mc4.value);
    CHECK(mc1.abs_err == mc4.abs_err);
    CHECK(t1.value == t4.value);
  }
}
