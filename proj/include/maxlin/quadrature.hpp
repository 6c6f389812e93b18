// Copyright 2026 The Maxlin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAXLIN_QUADRATURE_HPP
#define MAXLIN_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace maxlin {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

template <typename F>
double simpson_rec(F& f, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth, int max_depth,
                   double& err_acc) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth >= max_depth || std::abs(delta) <= 15.0 * tol) {
    if (depth >= max_depth) err_acc += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1,
                     max_depth, err_acc) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1,
                     max_depth, err_acc);
}

}  // namespace detail

/// Adaptive Simpson rule on [a, b] with absolute tolerance. Throws
/// QuadratureError if the subdivision limit is exhausted while the
/// accumulated error estimate still exceeds the tolerance.
template <typename F>
double adaptive_simpson(F&& f, double a, double b, double abs_tol,
                        int max_depth = 48) {
  if (a == b) return 0.0;
  if (!(abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be > 0");
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double err_acc = 0.0;
  const double result = detail::simpson_rec(f, a, b, fa, fm, fb, whole,
                                            abs_tol, 0, max_depth, err_acc);
  if (err_acc > 10.0 * abs_tol || !std::isfinite(result)) {
    throw QuadratureError("adaptive Simpson failed to converge");
  }
  return result;
}

/// Integrates over [pts[0], pts[n-1]] split at the interior points, spending
/// the tolerance proportionally to segment length. Intended for integrands
/// that are smooth between known kinks.
template <typename F>
double integrate_segments(F&& f, std::span<const double> pts, double abs_tol,
                          int max_depth = 48) {
  if (pts.size() < 2) throw std::invalid_argument("need at least 2 points");
  const double total = pts.back() - pts.front();
  if (total == 0.0) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double w = pts[i + 1] - pts[i];
    if (w <= 0.0) continue;
    sum += adaptive_simpson(f, pts[i], pts[i + 1],
                            abs_tol * std::max(w / total, 1e-3), max_depth);
  }
  return sum;
}

}  // namespace maxlin

#endif  // MAXLIN_QUADRATURE_HPP
