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

#include "zmf/types.hpp"

#include <cmath>

namespace zmf {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed-form";
    case Method::quadrature: return "quadrature";
    case Method::monte_carlo: return "monte-carlo";
    case Method::contour: return "contour";
    case Method::limit: return "limit";
  }
  return "unknown";
}

std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::pole: return "pole";
    case ErrorKind::divergence: return "divergence";
    case ErrorKind::domain: return "domain";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::near_degenerate: return "near-degenerate";
    case ErrorKind::edge_singularity: return "edge-singularity";
    case ErrorKind::tolerance_not_met: return "tolerance-not-met";
    case ErrorKind::budget_exhausted: return "budget-exhausted";
    case ErrorKind::non_integrable: return "non-integrable";
    case ErrorKind::branch_undefined: return "branch-undefined";
    case ErrorKind::path_singularity: return "path-singularity";
    case ErrorKind::contour_pinch: return "contour-pinch";
    case ErrorKind::nonseparable_contour: return "nonseparable-contour";
    case ErrorKind::extrapolation_unstable: return "extrapolation-unstable";
    case ErrorKind::normalization_failure: return "normalization-failure";
    case ErrorKind::non_integer_winding: return "non-integer-winding";
    case ErrorKind::reconstruction_failed: return "reconstruction-failed";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::non_finite: return "non-finite";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

Complex finite_or_throw(Complex v, std::string_view where) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    raise(ErrorKind::non_finite, std::string(where) + " produced a non-finite value");
  return v;
}

double finite_or_throw(double v, std::string_view where) {
  if (!std::isfinite(v))
    raise(ErrorKind::non_finite, std::string(where) + " produced a non-finite value");
  return v;
}

EvalResult finite_or_throw(const EvalResult& r, std::string_view where) {
  finite_or_throw(r.value, where);
  if (!std::isfinite(r.abs_err) || r.abs_err < 0.0)
    raise(ErrorKind::non_finite, std::string(where) + " produced an invalid error estimate");
  return r;
}

}  // namespace zmf
