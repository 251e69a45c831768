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

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zmf {

using Complex = std::complex<double>;

enum class Method { closed_form, quadrature, monte_carlo, contour, limit };

std::string_view to_string(Method m);

// A value with an absolute error estimate and the route that produced it.
struct EvalResult {
  Complex value{0.0, 0.0};
  double abs_err = 0.0;
  Method method = Method::closed_form;
};

enum class ErrorKind {
  pole,
  divergence,
  domain,
  precondition,
  near_degenerate,
  edge_singularity,
  tolerance_not_met,
  budget_exhausted,
  non_integrable,
  branch_undefined,
  path_singularity,
  contour_pinch,
  nonseparable_contour,
  extrapolation_unstable,
  normalization_failure,
  non_integer_winding,
  reconstruction_failed,
  unsupported,
  non_finite,
};

std::string_view to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

// Throws non_finite if either component is NaN or infinite.
Complex finite_or_throw(Complex v, std::string_view where);
double finite_or_throw(double v, std::string_view where);
EvalResult finite_or_throw(const EvalResult& r, std::string_view where);

}  // namespace zmf
