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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "zmf/analysis.hpp"
#include "zmf/gamma.hpp"
#include "zmf/zmf.hpp"

namespace zmf::analysis {
namespace {

using Row = std::vector<long double>;

long double dot(const Row& a, const Row& b) {
  long double s = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Textbook LLL with delta = 3/4, Gram-Schmidt recomputed after each change.
void lll(std::vector<Row>& b) {
  const std::size_t n = b.size();
  std::vector<Row> bs(n);
  std::vector<std::vector<long double>> mu(n, std::vector<long double>(n, 0.0L));
  std::vector<long double> norm(n);
  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      bs[i] = b[i];
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = norm[j] > 0.0L ? dot(b[i], bs[j]) / norm[j] : 0.0L;
        for (std::size_t c = 0; c < bs[i].size(); ++c) bs[i][c] -= mu[i][j] * bs[j][c];
      }
      norm[i] = dot(bs[i], bs[i]);
    }
  };
  gram_schmidt();
  std::size_t k = 1;
  for (int guard = 0; k < n && guard < 100000; ++guard) {
    for (std::size_t j = k; j-- > 0;) {
      const long double q = std::round(mu[k][j]);
      if (q != 0.0L) {
        for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= q * b[j][c];
        gram_schmidt();
      }
    }
    if (norm[k] >= (0.75L - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt();
      k = k > 1 ? k - 1 : 1;
    }
  }
}

Rational reduced(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return g > 1 ? Rational{num / g, den / g} : Rational{num, den};
}

}  // namespace

std::string to_string(const Rational& q) {
  if (q.den == 1) return std::to_string(q.num);
  return std::to_string(q.num) + "/" + std::to_string(q.den);
}

std::vector<std::int64_t> integer_relation(const std::vector<double>& x, double scale,
                                           std::int64_t max_coeff) {
  const std::size_t n = x.size();
  if (n < 2) raise(ErrorKind::precondition, "integer_relation needs at least two numbers");
  std::vector<Row> b(n, Row(n + 1, 0.0L));
  for (std::size_t i = 0; i < n; ++i) {
    b[i][i] = 1.0L;
    b[i][n] = static_cast<long double>(scale) * static_cast<long double>(x[i]);
  }
  lll(b);
  std::vector<std::int64_t> best;
  std::int64_t best_big = 0;
  for (const auto& row : b) {
    std::vector<std::int64_t> c(n);
    std::int64_t big = 0;
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = static_cast<std::int64_t>(std::llround(row[i]));
      big = std::max<std::int64_t>(big, std::llabs(c[i]));
    }
    if (big == 0 || big > max_coeff) continue;
    long double r = 0.0L;
    for (std::size_t i = 0; i < n; ++i) r += static_cast<long double>(c[i]) * x[i];
    if (std::fabs(static_cast<double>(r)) * scale > 1e3 * static_cast<double>(big)) continue;
    if (best.empty() || big < best_big) {
      best = std::move(c);
      best_big = big;
    }
  }
  if (best.empty()) raise(ErrorKind::reconstruction_failed, "no small integer relation found");
  return best;
}

RationalDecomposition w1_rational_decomposition(int n) {
  if (n != 1 && n != 3 && n != 5) raise(ErrorKind::precondition, "n must be 1, 3 or 5");
  const double c = std::sqrt(3.0) / kPi;
  const double v = w1(1.0, static_cast<double>(n)).value.real();
  const auto rel = integer_relation({1.0, c, v}, 1e11, 1'000'000);
  if (rel[2] == 0) raise(ErrorKind::reconstruction_failed, "relation does not involve W_1(1; n)");
  RationalDecomposition out;
  out.q0 = reduced(-rel[0], rel[2]);
  out.q1 = reduced(-rel[1], rel[2]);
  if (out.q0.den > 10000 || out.q1.den > 10000)
    raise(ErrorKind::reconstruction_failed, "denominator exceeds 10^4");
  out.value = v;
  out.residual = std::abs(v - out.q0.value() - out.q1.value() * c);
  if (!(out.residual < 1e-10)) raise(ErrorKind::reconstruction_failed, "reconstruction residual too large");
  return out;
}

}  // namespace zmf::analysis
