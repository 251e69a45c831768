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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "zmf/parallel.hpp"

namespace zmf::quad {

// Abscissa handed to integrands together with its exact distances to the
// two ends of the original interval, so that factors like (b - x)^p can be
// formed without cancellation near the endpoints.
struct Node {
  double x;
  double from_a;
  double to_b;
};

struct Options {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int min_level = 3;
  int max_level = 8;
  int max_depth = 12;
  std::size_t max_evaluations = 4'000'000;
  bool parallel = false;
};

template <class T>
struct Result {
  T value{};
  double abs_err = 0.0;
  bool converged = false;
  std::size_t evaluations = 0;
};

// Nodes of the double-exponential rule at one refinement level: for each
// abscissa t > 0, e = 1 - tanh(pi/2 sinh t) and w the derivative weight.
struct LevelTable {
  double step;
  std::vector<double> e;
  std::vector<double> w;
};

const LevelTable& level_table(int level);
inline constexpr int kMaxLevel = 12;
inline constexpr double kHalfPi = 1.570796326794896619231321691639751442;

namespace detail {

template <class T, class F>
Result<T> tanh_sinh_segment(F& f, double a, double b, double off_a, double off_b,
                            const Options& opt, int depth, std::size_t& budget) {
  const double hw = 0.5 * (b - a);
  const double len = b - a;
  Result<T> res;
  auto eval_left = [&](double e) {
    const double da = hw * e;
    return f(Node{a + da, off_a + da, off_b + (len - da)});
  };
  auto eval_right = [&](double e) {
    const double db = hw * e;
    return f(Node{b - db, off_a + (len - db), off_b + db});
  };

  T acc = f(Node{a + hw, off_a + hw, off_b + hw}) * kHalfPi;
  double acc_abs = std::abs(acc);
  std::size_t evals = 1;
  T prev{};
  bool have_prev = false;
  for (int level = 0; level <= opt.max_level; ++level) {
    const LevelTable& tab = level_table(level);
    const std::size_t m = tab.e.size();
    if (opt.parallel && m > 8) {
      std::vector<T> vals(m);
      parallel_for(m, [&](std::size_t i) {
        vals[i] = (eval_left(tab.e[i]) + eval_right(tab.e[i])) * tab.w[i];
      });
      for (std::size_t i = 0; i < m; ++i) {
        acc += vals[i];
        acc_abs += std::abs(vals[i]);
      }
    } else {
      for (std::size_t i = 0; i < m; ++i) {
        const T v = (eval_left(tab.e[i]) + eval_right(tab.e[i])) * tab.w[i];
        acc += v;
        acc_abs += std::abs(v);
      }
    }
    evals += 2 * m;
    const T cur = acc * (hw * tab.step);
    if (have_prev && level >= opt.min_level) {
      const double err = std::abs(cur - prev);
      const double noise = 64.0 * 2.220446049250313e-16 * acc_abs * std::abs(hw * tab.step);
      const double target = std::max({opt.abs_tol, opt.rel_tol * std::abs(cur), noise});
      if (err <= target && std::isfinite(err)) {
        res.value = cur;
        res.abs_err = std::max(err, noise);
        res.converged = true;
        res.evaluations = evals;
        budget = budget > evals ? budget - evals : 0;
        return res;
      }
    }
    prev = cur;
    have_prev = true;
  }
  budget = budget > evals ? budget - evals : 0;
  if (depth >= opt.max_depth || budget == 0) {
    res.value = prev;
    res.abs_err = std::abs(prev) * 1e-3 + opt.abs_tol;
    res.converged = false;
    res.evaluations = evals;
    return res;
  }
  Options sub = opt;
  sub.abs_tol = 0.5 * std::max(opt.abs_tol, opt.rel_tol * std::abs(prev));
  sub.rel_tol = 0.0;
  const double mid = a + hw;
  Result<T> left = tanh_sinh_segment<T>(f, a, mid, off_a, off_b + (b - mid), sub, depth + 1, budget);
  Result<T> right = tanh_sinh_segment<T>(f, mid, b, off_a + (mid - a), off_b, sub, depth + 1, budget);
  res.value = left.value + right.value;
  res.abs_err = left.abs_err + right.abs_err;
  res.converged = left.converged && right.converged;
  res.evaluations = evals + left.evaluations + right.evaluations;
  return res;
}

}  // namespace detail

// Integrates f(Node) -> T over [a, b].  Falls back to recursive bisection
// when a level sweep does not settle.
template <class T, class F>
Result<T> tanh_sinh(F&& f, double a, double b, const Options& opt = {}) {
  if (!(b > a)) return Result<T>{T{}, 0.0, true, 0};
  std::size_t budget = opt.max_evaluations;
  return detail::tanh_sinh_segment<T>(f, a, b, 0.0, 0.0, opt, 0, budget);
}

// Sum of tanh_sinh over consecutive pieces [p0,p1], [p1,p2], ...
template <class T, class F>
Result<T> tanh_sinh_pieces(F&& f, const std::vector<double>& pts, const Options& opt = {}) {
  Result<T> total{T{}, 0.0, true, 0};
  Options piece = opt;
  const double pieces = static_cast<double>(pts.size() > 1 ? pts.size() - 1 : 1);
  piece.abs_tol = opt.abs_tol / pieces;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!(pts[i + 1] > pts[i])) continue;
    Result<T> r = tanh_sinh<T>(f, pts[i], pts[i + 1], piece);
    total.value += r.value;
    total.abs_err += r.abs_err;
    total.converged = total.converged && r.converged;
    total.evaluations += r.evaluations;
  }
  return total;
}

}  // namespace zmf::quad
