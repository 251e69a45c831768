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
#include "zmf/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "zmf/gamma.hpp"

namespace zmf::hyper {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kMaxTerms = 2'000'000;
constexpr double kIntTol = 1e-12;

// Compensated complex accumulator.
struct Accumulator {
  Complex sum = 0.0;
  Complex comp = 0.0;
  void add(Complex v) {
    const Complex t = sum + v;
    const double cr = std::abs(sum.real()) >= std::abs(v.real())
                          ? (sum.real() - t.real()) + v.real()
                          : (v.real() - t.real()) + sum.real();
    const double ci = std::abs(sum.imag()) >= std::abs(v.imag())
                          ? (sum.imag() - t.imag()) + v.imag()
                          : (v.imag() - t.imag()) + sum.imag();
    comp += Complex(cr, ci);
    sum = t;
  }
  Complex value() const { return sum + comp; }
};

bool nonpositive_integer(Complex z, long* m) {
  if (std::abs(z.imag()) > kIntTol || z.real() > 0.5) return false;
  const double k = std::round(z.real());
  if (std::abs(z.real() - k) > kIntTol) return false;
  *m = static_cast<long>(-k);
  return true;
}

Complex term_ratio(const SeriesSpec& spec, double n) {
  Complex num = spec.argument;
  for (const auto& a : spec.upper) num *= a + n;
  Complex den = n + 1.0;
  for (const auto& b : spec.lower) den *= b + n;
  return num / den;
}

double max_param(const SeriesSpec& spec) {
  double m = 0.0;
  for (const auto& a : spec.upper) m = std::max(m, std::abs(a));
  for (const auto& b : spec.lower) m = std::max(m, std::abs(b));
  return m;
}

Complex margin(const SeriesSpec& spec) {
  Complex m = 0.0;
  for (const auto& b : spec.lower) m += b;
  for (const auto& a : spec.upper) m -= a;
  return m;
}

EvalResult sum_terminating(const SeriesSpec& spec, long m) {
  Accumulator acc;
  acc.add(1.0);
  Complex term = 1.0;
  double abs_sum = 1.0;
  for (long n = 0; n < m; ++n) {
    term *= term_ratio(spec, static_cast<double>(n));
    acc.add(term);
    abs_sum += std::abs(term);
  }
  const Complex v = acc.value();
  return {v, 4.0 * kEps * (abs_sum + std::abs(v)) * std::sqrt(static_cast<double>(m) + 1.0),
          Method::closed_form};
}

EvalResult sum_direct(const SeriesSpec& spec, double tol) {
  const double az = std::abs(spec.argument);
  const double mu = margin(spec).real();
  const double stable_from = 2.0 * max_param(spec) + 2.0;
  Accumulator acc;
  acc.add(1.0);
  Complex term = 1.0;
  double round = kEps;
  double tail = std::numeric_limits<double>::infinity();
  std::size_t n = 0;
  for (; n < kMaxTerms; ++n) {
    const Complex ratio = term_ratio(spec, static_cast<double>(n));
    term *= ratio;
    acc.add(term);
    const double at = std::abs(term);
    round += 2.0 * kEps * at * std::sqrt(static_cast<double>(n) + 2.0);
    if (at == 0.0) {
      tail = 0.0;
      break;
    }
    if (static_cast<double>(n) < stable_from) continue;
    const double rho = std::max(std::abs(ratio), az);
    tail = rho < 1.0 ? at * rho / (1.0 - rho) : std::numeric_limits<double>::infinity();
    if (mu > 0.0) tail = std::min(tail, at * (static_cast<double>(n) + 2.0) / mu);
    const double scale = std::max(1.0, std::abs(acc.value()));
    if (tail <= 0.5 * tol * scale) break;
  }
  const Complex v = acc.value();
  if (n == kMaxTerms && !(tail <= std::max(1.0, std::abs(v)) * 1e-6))
    raise(ErrorKind::divergence, "hypergeometric series did not settle within the term budget");
  return {v, tail + round + kEps * std::abs(v), Method::closed_form};
}

// Partial sums at N0 * 2^j; the tail behaves like N^-(mu+i), i = 0, 1, ...
EvalResult sum_unit_argument(const SeriesSpec& spec) {
  const Complex mu = margin(spec);
  std::size_t n0 = 64;
  while (static_cast<double>(n0) < 8.0 * max_param(spec)) n0 *= 2;
  constexpr int kLevels = 9;
  std::vector<Complex> partial;
  partial.reserve(kLevels);
  Accumulator acc;
  Complex term = 1.0;
  double abs_sum = 0.0;
  std::size_t next_mark = n0;
  for (std::size_t n = 0; static_cast<int>(partial.size()) < kLevels; ++n) {
    if (n > 0) term *= term_ratio(spec, static_cast<double>(n - 1));
    acc.add(term);
    abs_sum += std::abs(term);
    if (n + 1 == next_mark) {
      partial.push_back(acc.value());
      next_mark *= 2;
    }
  }
  std::vector<std::vector<Complex>> t(kLevels);
  t[0] = partial;
  double amplification = 1.0;
  for (int i = 1; i < kLevels; ++i) {
    const Complex f = std::exp((mu + static_cast<double>(i - 1)) * std::log(2.0));
    amplification *= std::abs(f + 1.0) / std::abs(f - 1.0);
    t[i].resize(kLevels - i);
    for (int j = 0; j + i < kLevels; ++j) t[i][j] = (f * t[i - 1][j + 1] - t[i - 1][j]) / (f - 1.0);
  }
  const Complex best = t[kLevels - 1][0];
  const double diff = std::max(std::abs(best - t[kLevels - 2][1]), std::abs(best - t[kLevels - 2][0]));
  const double noise = 4.0 * kEps * abs_sum * amplification;
  return {best, diff + noise, Method::limit};
}

void check_lower_poles(const SeriesSpec& spec, bool terminating, long m) {
  for (const auto& b : spec.lower) {
    long nb = 0;
    if (nonpositive_integer(b, &nb) && !(terminating && m < nb))
      raise(ErrorKind::pole, "lower hypergeometric parameter is a non-positive integer");
  }
}

}  // namespace

EvalResult pfq(const SeriesSpec& spec, double tol) {
  if (spec.upper.size() != spec.lower.size() + 1)
    raise(ErrorKind::precondition, "pfq needs exactly one more upper than lower parameter");
  long m = std::numeric_limits<long>::max();
  bool terminating = false;
  for (const auto& a : spec.upper) {
    long ma = 0;
    if (nonpositive_integer(a, &ma)) {
      terminating = true;
      m = std::min(m, ma);
    }
  }
  check_lower_poles(spec, terminating, m);
  if (spec.argument == Complex(0.0, 0.0)) return {1.0, 0.0, Method::closed_form};
  if (terminating) return finite_or_throw(sum_terminating(spec, m), "pfq");
  const double az = std::abs(spec.argument);
  if (az < 1.0) return finite_or_throw(sum_direct(spec, tol), "pfq");
  if (az > 1.0 + 1e-15)
    raise(ErrorKind::divergence, "pfq argument outside the closed unit disk");
  if (margin(spec).real() <= 0.0)
    raise(ErrorKind::divergence, "pfq on the unit circle needs Re(sum b - sum a) > 0");
  if (std::abs(spec.argument - 1.0) <= 1e-15)
    return finite_or_throw(sum_unit_argument(spec), "pfq");
  return finite_or_throw(sum_direct(spec, tol), "pfq");
}

EvalResult gauss_at_1(Complex a, Complex b, Complex c) {
  if ((c - a - b).real() <= 0.0) raise(ErrorKind::divergence, "Gauss sum needs Re(c-a-b) > 0");
  if (near_nonpositive_integer(c)) raise(ErrorKind::pole, "Gauss sum with c at a pole");
  const Complex v = gamma(c) * gamma(c - a - b) * rgamma(c - a) * rgamma(c - b);
  return {finite_or_throw(v, "gauss_at_1"), 1e-14 * (std::abs(v) + 1e-300), Method::closed_form};
}

namespace {

Complex principal_pow(Complex base, Complex p) {
  if (p == Complex(0.0, 0.0)) return 1.0;
  return std::exp(p * std::log(base));
}

bool on_cut(Complex z) { return z.imag() == 0.0 && z.real() >= 1.0; }

}  // namespace

EvalResult euler_transform_2f1(Complex a, Complex b, Complex c, Complex z) {
  if (on_cut(z)) raise(ErrorKind::domain, "Euler transformation on the branch cut");
  const EvalResult rhs = pfq({{c - a, c - b}, {c}, z});
  const Complex pre = principal_pow(1.0 - z, c - a - b);
  EvalResult out{pre * rhs.value, std::abs(pre) * rhs.abs_err, Method::closed_form};
  const EvalResult lhs = pfq({{a, b}, {c}, z});
  const double allowed = 10.0 * (lhs.abs_err + out.abs_err) + 1e-13 * std::abs(lhs.value);
  if (std::abs(lhs.value - out.value) > allowed)
    raise(ErrorKind::tolerance_not_met, "Euler transformation sides disagree");
  out.abs_err = std::max(out.abs_err, std::abs(lhs.value - out.value));
  return out;
}

EvalResult pfaff_transform_2f1(Complex a, Complex b, Complex c, Complex z) {
  if (!(z.real() < 0.5)) raise(ErrorKind::domain, "Pfaff transformation needs Re z < 1/2");
  const Complex w = z / (z - 1.0);
  const EvalResult rhs = pfq({{a, c - b}, {c}, w});
  const Complex pre = principal_pow(1.0 - z, -a);
  EvalResult out{pre * rhs.value, std::abs(pre) * rhs.abs_err, Method::closed_form};
  if (std::abs(z) < 0.95) {
    const EvalResult lhs = pfq({{a, b}, {c}, z});
    const double allowed = 10.0 * (lhs.abs_err + out.abs_err) + 1e-13 * std::abs(lhs.value);
    if (std::abs(lhs.value - out.value) > allowed)
      raise(ErrorKind::tolerance_not_met, "Pfaff transformation sides disagree");
    out.abs_err = std::max(out.abs_err, std::abs(lhs.value - out.value));
  }
  return out;
}

EvalResult hyp2f1(Complex a, Complex b, Complex c, Complex z) {
  if (std::abs(z) <= 0.75) return pfq({{a, b}, {c}, z});
  if (z.imag() == 0.0 && z.real() > 0.0 && z.real() < 1.0) return hyp2f1_complement(a, b, c, 1.0 - z);
  if (std::abs(z) < 1.0) return pfq({{a, b}, {c}, z});
  raise(ErrorKind::domain, "hyp2f1 argument outside the supported region");
}

EvalResult hyp2f1_complement(Complex a, Complex b, Complex c, Complex y1) {
  const Complex z = 1.0 - y1;
  long m = 0;
  if (std::abs(y1) > 0.5 || nonpositive_integer(a, &m) || nonpositive_integer(b, &m))
    return pfq({{a, b}, {c}, z});
  if (near_nonpositive_integer(c)) raise(ErrorKind::pole, "hyp2f1 with c at a pole");
  const Complex d = c - a - b;
  const double dr = std::round(d.real());
  const bool integer_gap = std::abs(d.imag()) < kIntTol && std::abs(d.real() - dr) < 1e-10;
  if (integer_gap && dr != 0.0) return pfq({{a, b}, {c}, z});
  if (integer_gap) {
    // Logarithmic case c = a + b.
    const Complex pre = gamma(c) * rgamma(a) * rgamma(b);
    const Complex log_y = std::log(y1);
    Complex psi_a = digamma(a), psi_b = digamma(b), psi_1 = -kEulerGamma;
    Complex coef = 1.0;
    Complex pw = 1.0;
    Accumulator acc;
    double abs_sum = 0.0;
    for (int n = 0; n < 100000; ++n) {
      const Complex term = coef * pw * (2.0 * psi_1 - psi_a - psi_b - log_y);
      acc.add(term);
      abs_sum += std::abs(term);
      if (n > 4 && std::abs(term) < 1e-17 * std::abs(acc.value()) &&
          std::abs(coef * pw) < 1e-17 * std::abs(acc.value()))
        break;
      const double dn = static_cast<double>(n);
      psi_a += 1.0 / (a + dn);
      psi_b += 1.0 / (b + dn);
      psi_1 += 1.0 / (dn + 1.0);
      coef *= (a + dn) * (b + dn) / ((dn + 1.0) * (dn + 1.0));
      pw *= y1;
    }
    const Complex v = pre * acc.value();
    return {v, 8.0 * kEps * std::abs(pre) * abs_sum + 1e-15 * std::abs(v), Method::closed_form};
  }
  const EvalResult f1 = pfq({{a, b}, {a + b - c + 1.0}, y1});
  const EvalResult f2 = pfq({{c - a, c - b}, {d + 1.0}, y1});
  const Complex g1 = gamma(c) * gamma(d) * rgamma(c - a) * rgamma(c - b);
  const Complex g2 = principal_pow(y1, d) * gamma(c) * gamma(-d) * rgamma(a) * rgamma(b);
  const Complex v = g1 * f1.value + g2 * f2.value;
  const double err = std::abs(g1) * f1.abs_err + std::abs(g2) * f2.abs_err +
                     1e-14 * (std::abs(g1 * f1.value) + std::abs(g2 * f2.value));
  return {finite_or_throw(v, "hyp2f1"), err, Method::closed_form};
}

SeriesSpec zmf_family(int r, Complex s, Complex argument) {
  if (r < 1) raise(ErrorKind::precondition, "family order r must be positive");
  SeriesSpec spec;
  spec.upper.push_back(-0.5 * s);
  spec.upper.push_back(0.5 * (1.0 - s));
  for (int i = 1; i < r; ++i) spec.upper.push_back(0.5);
  spec.lower.assign(static_cast<std::size_t>(r), Complex(1.0, 0.0));
  spec.argument = argument;
  return spec;
}

}  // namespace zmf::hyper
