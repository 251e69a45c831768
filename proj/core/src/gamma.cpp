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
#include "zmf/gamma.hpp"

#include <array>
#include <cmath>
#include <string>

namespace zmf {
namespace {

constexpr double kLogPi = 1.144729885849400174143427351353058712;
constexpr double kHalfLog2Pi = 0.918938533204672741780329736405617640;
constexpr double kTwoPi = 2.0 * kPi;

// Stirling coefficients B_{2n} / (2n (2n-1)).
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,        1.0 / 1260.0,
    -1.0 / 1680.0,       1.0 / 1188.0,        -691.0 / 360360.0,
    1.0 / 156.0,         -3617.0 / 122400.0,  43867.0 / 244188.0,
    -174611.0 / 125400.0};

// Digamma asymptotic coefficients B_{2n} / (2n).
constexpr std::array<double, 8> kDigamma = {
    1.0 / 12.0,  -1.0 / 120.0,        1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0,    1.0 / 12.0,  -3617.0 / 8160.0};

constexpr double kAsymptoticRadius = 15.0;

Complex stirling(Complex z) {
  const Complex w = 1.0 / z;
  const Complex w2 = w * w;
  Complex acc = 0.0;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) acc = acc * w2 + *it;
  return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + acc * w;
}

Complex log_gamma_right(Complex z) {
  Complex shift = 0.0;
  while (std::abs(z) < kAsymptoticRadius) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

Complex digamma_right(Complex z) {
  Complex shift = 0.0;
  while (std::abs(z) < kAsymptoticRadius) {
    shift += 1.0 / z;
    z += 1.0;
  }
  const Complex w2 = 1.0 / (z * z);
  Complex acc = 0.0;
  for (auto it = kDigamma.rbegin(); it != kDigamma.rend(); ++it) acc = acc * w2 + *it;
  return std::log(z) - 0.5 / z - acc * w2 - shift;
}

[[noreturn]] void pole_error(const char* fn, Complex z) {
  raise(ErrorKind::pole, std::string(fn) + " at non-positive integer (" +
                             std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")");
}

double wrap_angle(double a) {
  double r = std::remainder(a, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

}  // namespace

double sinpi(double x) {
  if (!std::isfinite(x)) return std::nan("");
  double r = std::fmod(x, 2.0);
  if (r < 0) r += 2.0;
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == 1.5) return -1.0;
  if (r < 0.25) return std::sin(kPi * r);
  if (r < 0.75) return std::cos(kPi * (r - 0.5));
  if (r < 1.25) return -std::sin(kPi * (r - 1.0));
  if (r < 1.75) return -std::cos(kPi * (r - 1.5));
  return std::sin(kPi * (r - 2.0));
}

double cospi(double x) { return sinpi(x + 0.5); }

Complex sinpi(Complex z) {
  const double y = kPi * z.imag();
  return {sinpi(z.real()) * std::cosh(y), cospi(z.real()) * std::sinh(y)};
}

Complex cospi(Complex z) {
  const double y = kPi * z.imag();
  return {cospi(z.real()) * std::cosh(y), -sinpi(z.real()) * std::sinh(y)};
}

Complex tanpi(Complex z) {
  if (std::abs(z.imag()) > 20.0) {
    const Complex c = cotpi(z);
    return 1.0 / c;
  }
  return sinpi(z) / cospi(z);
}

Complex cotpi(Complex z) {
  if (z.imag() > 20.0) {
    const Complex q = std::exp(Complex(0.0, kTwoPi) * z);
    return Complex(0.0, 1.0) * (q + 1.0) / (q - 1.0);
  }
  if (z.imag() < -20.0) return std::conj(cotpi(std::conj(z)));
  return cospi(z) / sinpi(z);
}

Complex log_sinpi(Complex z) {
  if (z.imag() > 20.0) {
    const Complex q = std::exp(Complex(0.0, kTwoPi) * z);
    Complex v = Complex(0.0, -kPi) * z + Complex(-std::log(2.0), kPi / 2.0) + std::log(1.0 - q);
    return {v.real(), wrap_angle(v.imag())};
  }
  if (z.imag() < -20.0) return std::conj(log_sinpi(std::conj(z)));
  return std::log(sinpi(z));
}

bool near_nonpositive_integer(Complex z, long* n) {
  if (z.real() > 0.5) return false;
  const double k = std::round(z.real());
  if (std::abs(z - Complex(k, 0.0)) >= kPoleTolerance) return false;
  if (n) *n = static_cast<long>(-k);
  return true;
}

Complex log_gamma(Complex z) {
  if (near_nonpositive_integer(z)) pole_error("log_gamma", z);
  if (z.real() < 0.1) {
    const double branch = std::copysign(kTwoPi, z.imag()) * std::floor(0.5 * z.real() + 0.25);
    return Complex(kLogPi, branch) - log_sinpi(z) - log_gamma_right(1.0 - z);
  }
  return log_gamma_right(z);
}

Complex gamma(Complex z) {
  const Complex l = log_gamma(z);
  if (z.imag() == 0.0) {
    const double sign = std::cos(l.imag()) > 0 ? 1.0 : -1.0;
    return {finite_or_throw(sign * std::exp(l.real()), "gamma"), 0.0};
  }
  return finite_or_throw(std::exp(l), "gamma");
}

Complex rgamma(Complex z) {
  if (near_nonpositive_integer(z)) return 0.0;
  const Complex l = log_gamma(z);
  if (z.imag() == 0.0) {
    const double sign = std::cos(l.imag()) > 0 ? 1.0 : -1.0;
    return {sign * std::exp(-l.real()), 0.0};
  }
  return std::exp(-l);
}

Complex digamma(Complex z) {
  if (near_nonpositive_integer(z)) pole_error("digamma", z);
  if (z.real() < 0.5) return digamma_right(1.0 - z) - kPi * cotpi(z);
  return digamma_right(z);
}

Complex pochhammer(Complex x, unsigned n) {
  if (n == 0) return 1.0;
  long m = 0;
  if (n <= 64 || near_nonpositive_integer(x, &m)) {
    Complex p = 1.0;
    for (unsigned j = 0; j < n; ++j) {
      p *= x + static_cast<double>(j);
      if (p == 0.0) break;
    }
    return p;
  }
  if (near_nonpositive_integer(x + static_cast<double>(n))) {
    Complex p = 1.0;
    for (unsigned j = 0; j < n; ++j) p *= x + static_cast<double>(j);
    return p;
  }
  return std::exp(log_gamma(x + static_cast<double>(n)) - log_gamma(x));
}

Complex binom_general(Complex s, unsigned n) {
  Complex p = 1.0;
  for (unsigned j = 0; j < n; ++j) p *= (s - static_cast<double>(j)) / static_cast<double>(j + 1);
  return p;
}

Complex gamma_ratio(std::initializer_list<GammaFactor> num,
                    std::initializer_list<GammaFactor> den) {
  int order = 0;
  Complex log_sum = 0.0;
  double sign = 1.0;
  bool all_real = true;
  auto absorb = [&](const GammaFactor& f, int dir) {
    if (f.arg.imag() != 0.0) all_real = false;
    long n = 0;
    if (near_nonpositive_integer(f.arg, &n)) {
      order += dir;
      // Residue of Gamma at -n in the parameter: (-1)^n / (n! slope).
      const double lr = -std::lgamma(static_cast<double>(n) + 1.0) - std::log(std::abs(f.slope));
      log_sum += static_cast<double>(dir) * lr;
      if ((n % 2 == 1) != (f.slope < 0)) sign = -sign;
    } else {
      log_sum += static_cast<double>(dir) * log_gamma(f.arg);
    }
  };
  for (const auto& f : num) absorb(f, +1);
  for (const auto& f : den) absorb(f, -1);
  if (order > 0) raise(ErrorKind::pole, "gamma ratio has an uncancelled pole");
  if (order < 0) return 0.0;
  if (all_real) {
    const double phase = std::cos(log_sum.imag()) > 0 ? 1.0 : -1.0;
    return {finite_or_throw(sign * phase * std::exp(log_sum.real()), "gamma_ratio"), 0.0};
  }
  return finite_or_throw(sign * std::exp(log_sum), "gamma_ratio");
}

}  // namespace zmf
