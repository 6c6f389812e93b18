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

#ifndef MAXLIN_TESTS_TEST_SUPPORT_HPP
#define MAXLIN_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "maxlin/rng.hpp"

namespace maxlin_test {

/// Kolmogorov-Smirnov statistic of a sample against a cdf.
template <typename Cdf>
double ks_statistic(std::vector<double> sample, Cdf&& cdf) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i + 1) / n));
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
  }
  return d;
}

/// Asymptotic KS critical value at significance alpha.
inline double ks_critical(std::size_t n, double alpha) {
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) /
         std::sqrt(static_cast<double>(n));
}

struct MeanStdError {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
};

inline MeanStdError mean_std_error(const std::vector<double>& values) {
  MeanStdError r;
  r.n = values.size();
  if (r.n == 0) return r;
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double d = values[k] - mean;
    mean += d / static_cast<double>(k + 1);
    m2 += d * (values[k] - mean);
  }
  r.mean = mean;
  r.std_error = r.n > 1 ? std::sqrt(m2 / (static_cast<double>(r.n - 1) *
                                          static_cast<double>(r.n)))
                        : 0.0;
  return r;
}

/// Standard error of an empirical proportion at theoretical value p.
inline double proportion_std_error(double p, std::size_t n) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

/// Exact sampler for a bivariate standard generalized Pareto pair with the
/// logistic D-norm, by inverting the conditional df
/// F(v | U = u) = -d/du ||(u, v)||_lambda = first-coordinate partial. Used as
/// an independent oracle for the conditional moment formulas: its rectangle
/// probabilities inside the tail box coincide with 1 - ||(u,v)||_D.
inline void sample_bivariate_gpd_logistic(double lambda, std::size_t n,
                                          std::uint64_t seed,
                                          std::vector<double>& u_out,
                                          std::vector<double>& v_out) {
  maxlin::Rng rng(seed);
  u_out.resize(n);
  v_out.resize(n);
  const double exponent = lambda / (lambda - 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double u = -rng.uniform_pos();  // uniform on (-1, 0)
    const double q = rng.uniform_pos();
    const double v =
        -std::abs(u) *
        std::pow(std::pow(q, -exponent) - 1.0, 1.0 / lambda);
    u_out[k] = u;
    v_out[k] = v;
  }
}

}  // namespace maxlin_test

#endif  // MAXLIN_TESTS_TEST_SUPPORT_HPP
