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

#ifndef MAXLIN_GENERATOR_HPP
#define MAXLIN_GENERATOR_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "maxlin/rng.hpp"

namespace maxlin {

/// Joint draws of a generator process at a finite point set. Rows share
/// randomness: row k is one realization of (Z_{t_1}, ..., Z_{t_m}).
struct JointSample {
  std::vector<double> points;
  std::size_t n_samples = 0;
  std::vector<double> values;  // row-major [n_samples x points.size()]

  double at(std::size_t row, std::size_t col) const {
    return values[row * points.size() + col];
  }
  double column_mean(std::size_t col) const;
  double column_std_error(std::size_t col) const;
};

enum class GeneratorKind { kConstantOne, kPermutation, kSinusoid };

/// A sampleable generator process (Z_t) on [0,1] with E(Z_t) = 1:
///
///   ConstantOne     Z_t = 1. Complete dependence; D-norm is the max norm.
///   Permutation(m)  finite-index only: value m at one uniformly chosen
///                   index, 0 elsewhere. Yields the sum norm (independence).
///   Sinusoid(a)     Z_t = 1 + a sin(2 pi t + Theta) with Theta uniform on
///                   [0, 2 pi). Continuous paths bounded by 1 + a.
///
/// The sinusoid's single scalar randomness makes every finite-dimensional
/// D-norm an exact one-dimensional quadrature, which the oracle methods
/// exploit.
class GeneratorModel {
 public:
  static GeneratorModel ConstantOne();
  static GeneratorModel Permutation(std::size_t dim);
  static GeneratorModel Sinusoid(double amplitude);

  GeneratorKind kind() const { return kind_; }
  double amplitude() const { return amplitude_; }
  std::size_t dim() const { return dim_; }

  /// Almost-sure bound c on the paths: 1, dim, or 1 + a.
  double path_bound() const;

  /// E(sup_t Z_t), the extremal coefficient of the pertaining process.
  double extremal_coefficient_path() const;

  /// n i.i.d. joint draws at the given points. Deterministic given the seed.
  /// Points must lie in [0,1]; the permutation model additionally requires
  /// points.size() == dim, interpreting point slots as its indices.
  JointSample sample_joint(std::span<const double> points, std::size_t n,
                           std::uint64_t seed) const;

  /// One joint draw appended in place; consumes the supplied rng.
  void sample_row(std::span<const double> points, Rng& rng,
                  std::span<double> out) const;

  /// E max(|x| Z_s, |y| Z_t), computed by deterministic integration over the
  /// model's finite randomness.
  double bivariate_norm(double s, double t, double x, double y) const;

  /// E max(|c0| Z_t, |c1| Z_{s_left}, |c2| Z_{s_right}), same mechanism in
  /// dimension 3.
  double trivariate_norm(double t, double s_left, double s_right,
                         std::array<double, 3> coeffs) const;

  /// {"kind": "constant"|"permutation"|"sinusoid", "a"?, "dim"?}
  nlohmann::json to_json() const;
  static GeneratorModel from_json(const nlohmann::json& j);

 private:
  GeneratorModel(GeneratorKind kind, double amplitude, std::size_t dim)
      : kind_(kind), amplitude_(amplitude), dim_(dim) {}

  double norm_at_points(std::span<const double> points,
                        std::span<const double> coeffs) const;

  GeneratorKind kind_;
  double amplitude_ = 0.0;
  std::size_t dim_ = 0;
};

/// E_theta max_j coeffs_j (1 + a sin(phases_j + theta)), theta uniform on
/// [0, 2 pi). Between crossing angles of the competing sinusoids the
/// integrand is a single sinusoid, so each arc is integrated by its
/// antiderivative; the result is exact up to roundoff. These norms feed the
/// integrands of nested quadratures, which requires an error floor far below
/// any outer tolerance.
double sinusoid_max_expectation(double amplitude,
                                std::span<const double> phases,
                                std::span<const double> coeffs);

}  // namespace maxlin

#endif  // MAXLIN_GENERATOR_HPP
