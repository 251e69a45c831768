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

#include <initializer_list>

#include "zmf/types.hpp"

namespace zmf {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

// Distance below which an argument counts as sitting on a gamma pole.
inline constexpr double kPoleTolerance = 1e-12;

// sin(pi z), cos(pi z) with exact argument reduction of the real part.
double sinpi(double x);
double cospi(double x);
Complex sinpi(Complex z);
Complex cospi(Complex z);
// tan(pi z) and cot(pi z); stable for large |Im z|.
Complex tanpi(Complex z);
Complex cotpi(Complex z);
// Principal log of sin(pi z) without overflow for large |Im z|.
Complex log_sinpi(Complex z);

// True when z is within kPoleTolerance of 0, -1, -2, ...; n receives -round(z).
bool near_nonpositive_integer(Complex z, long* n = nullptr);

// Principal branch of log Gamma, continuous on Re z > 0.
Complex log_gamma(Complex z);
Complex gamma(Complex z);
// 1/Gamma, entire; exactly zero on the pole set.
Complex rgamma(Complex z);
Complex digamma(Complex z);

// Rising factorial (x)_n.
Complex pochhammer(Complex x, unsigned n);
// s(s-1)...(s-n+1)/n!.
Complex binom_general(Complex s, unsigned n);

// Gamma(arg) where arg = offset + slope * s for some parameter s.  The slope
// is only consulted when arg sits on a pole, to take the residue limit.
struct GammaFactor {
  Complex arg;
  double slope = 1.0;
};

// prod Gamma(num) / prod Gamma(den) with removable poles cancelled in the
// limit.  Throws pole when a genuine pole remains.
Complex gamma_ratio(std::initializer_list<GammaFactor> num,
                    std::initializer_list<GammaFactor> den);

}  // namespace zmf
