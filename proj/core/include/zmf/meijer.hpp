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

namespace zmf::meijer {

// G^{m,n}_{p,q}(a; b; x) with the a-row listed first.  Only the orders
// (2,4,4,4) and (2,3,3,3) are accepted.
struct MeijerSpec {
  std::vector<Complex> a;
  std::vector<Complex> b;
  int m = 0, n = 0, p = 0, q = 0;
  double x = 0.0;
};

// Mellin-Barnes integral along a vertical line placed midway in the gap
// that separates the two pole families; right-family poles left of the
// line are added back as residues.
EvalResult meijer_mb(const MeijerSpec& spec, double tol = 1e-13);

// The G^{2,4}_{4,4} entering W_3 evaluated from its triple-integral
// representation over the unit cube.
EvalResult meijer_triple_integral(Complex s, double k, double tol = 1e-11);

// G^{2,4}_{4,4}((2+s)/2 x4; (1+s)/2, (1+s)/2, 0, 1/2; k^2/64).
MeijerSpec w3_kernel(Complex s, double k);
// G^{2,3}_{3,3}(1+n/2 x3; 0, (n+1)/2, 1/2; k^2/16).
MeijerSpec w2_odd_kernel(int n, double k);

// Arithmetic-geometric mean of two positive reals.
double agm(double a, double b);

}  // namespace zmf::meijer
