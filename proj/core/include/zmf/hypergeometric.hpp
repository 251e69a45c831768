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
#pragma once

#include <vector>

#include "zmf/types.hpp"

namespace zmf::hyper {

// Parameters and argument of a generalized hypergeometric series with
// one more upper than lower parameter.
struct SeriesSpec {
  std::vector<Complex> upper;
  std::vector<Complex> lower;
  Complex argument{0.0, 0.0};
};

// Side of the real axis from which an argument w > 1 is approached.
enum class Branch { from_above, from_below };

inline constexpr double kDefaultSeriesTol = 1e-13;

// Sums the series inside the closed unit disk (or any terminating series)
// with a tail bound.  At argument exactly 1 the partial sums are
// extrapolated using their known algebraic decay exponents.
EvalResult pfq(const SeriesSpec& spec, double tol = kDefaultSeriesTol);

// Gauss's sum 2F1(a,b;c;1).
EvalResult gauss_at_1(Complex a, Complex b, Complex c);

// (1-z)^(c-a-b) 2F1(c-a,c-b;c;z), checked against the direct series.
EvalResult euler_transform_2f1(Complex a, Complex b, Complex c, Complex z);

// (1-z)^(-a) 2F1(a,c-b;c;z/(z-1)), checked against the direct series when
// that converges.  Requires Re z < 1/2 so that |z/(z-1)| < 1.
EvalResult pfaff_transform_2f1(Complex a, Complex b, Complex c, Complex z);

// 2F1(a,b;c;z) for |z| < 1 or real z in (0,1), using the 1-z connection
// near z = 1.
EvalResult hyp2f1(Complex a, Complex b, Complex c, Complex z);
// Same, but z is given through its complement y1 = 1 - z, which keeps full
// relative precision when z is close to 1.
EvalResult hyp2f1_complement(Complex a, Complex b, Complex c, Complex y1);

// Upper (-s/2, (1-s)/2, 1/2, ...), lower (1, ..., 1): the r+1Fr family.
SeriesSpec zmf_family(int r, Complex s, Complex argument);

struct ContinuationOptions {
  double delta = 0.25;
  double local_tol = 1e-12;
  double endpoint_clearance = 1e-6;
};

// Continuation of the family series to a real argument w > 1 along a path
// through the half-plane selected by branch.
EvalResult pfq_continued(const SeriesSpec& spec, Branch branch,
                         const ContinuationOptions& opt = {});

// Principal branch on C minus [1, inf) for any argument, by series when
// inside the disk and by integrating the hypergeometric ODE otherwise.
EvalResult pfq_principal(const SeriesSpec& spec, const ContinuationOptions& opt = {});

// Continuation to an arbitrary point through the half-plane sigma = +1/-1.
EvalResult pfq_via_ode(const SeriesSpec& spec, int sigma, const ContinuationOptions& opt = {});

}  // namespace zmf::hyper
