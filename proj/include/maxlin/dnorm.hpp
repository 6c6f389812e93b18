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

#ifndef MAXLIN_DNORM_HPP
#define MAXLIN_DNORM_HPP

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace maxlin {

/// A norm evaluation together with its Monte-Carlo standard error.
/// Closed-form families report std_error == 0.
struct NormValue {
  double value = 0.0;
  double std_error = 0.0;
};

enum class DNormFamily { kSum, kMax, kLogistic, kEmpirical };

/// Finite-dimensional D-norm ||x||_D = E(max_i |x_i| Z_i) for a nonnegative
/// random vector Z with unit component means. The sum norm corresponds to
/// independent margins of the pertaining max-stable vector, the max norm to
/// complete dependence, and the logistic family interpolates between them:
///
///   ||x||_lambda = (sum_i |x_i|^lambda)^(1/lambda),  lambda >= 1.
///
/// The empirical variant estimates the norm as a sample mean over a fixed
/// matrix of generator draws. The matrix is frozen at construction so that
/// homogeneity and monotonicity hold exactly path by path; drawing a fresh
/// matrix is a new DNormSpec.
class DNormSpec {
 public:
  static DNormSpec Sum();
  static DNormSpec Max();
  static DNormSpec Logistic(double lambda);

  /// `samples` is row-major with n_samples rows of dimension `dim`. All
  /// entries must be nonnegative and every column mean must lie within three
  /// standard errors of 1.
  static DNormSpec Empirical(std::vector<double> samples, std::size_t dim);

  DNormFamily family() const { return family_; }
  double lambda() const { return lambda_; }
  std::size_t sample_count() const;
  std::size_t sample_dim() const { return sample_dim_; }

  /// ||x||_D. Exact for closed-form families; sample mean of
  /// max_i |x_i| Z_i^(k) with its standard error for the empirical variant.
  NormValue eval(std::span<const double> x) const;

  /// ||(1,...,1)||_D, the extremal coefficient. Lies in [1, dim].
  NormValue extremal_coefficient(std::size_t dim) const;

  /// {"family": "sum"|"max"|"logistic"|"empirical", "lambda"?, "samples_ref"?}
  /// The empirical sample matrix is stored beside the spec as CSV; to_json
  /// requires the path it was (or will be) written to.
  nlohmann::json to_json() const;
  nlohmann::json to_json(const std::filesystem::path& samples_ref) const;
  static DNormSpec from_json(const nlohmann::json& j,
                             const std::filesystem::path& base_dir = {});

  std::string name() const;

 private:
  DNormSpec(DNormFamily family, double lambda) : family_(family), lambda_(lambda) {}

  DNormFamily family_;
  double lambda_ = 0.0;
  std::size_t sample_dim_ = 0;
  std::shared_ptr<const std::vector<double>> samples_;  // row-major
};

/// Default sample count for Monte-Carlo-backed norms.
inline constexpr std::size_t kDefaultMonteCarloSamples = 100000;

/// Draws a generator sample matrix whose D-norm is the logistic norm with the
/// given lambda > 1: Z_i = F_i / Gamma(1 - 1/lambda) with F_i i.i.d. Frechet
/// of shape lambda. A known construction; the library validates it against
/// the closed form in tests rather than assuming it.
std::vector<double> logistic_generator_samples(
    double lambda, std::size_t dim,
    std::size_t n_samples = kDefaultMonteCarloSamples, std::uint64_t seed = 0);

void save_samples_csv(const std::filesystem::path& path,
                      std::span<const double> samples, std::size_t dim);
std::vector<double> load_samples_csv(const std::filesystem::path& path,
                                     std::size_t& dim_out);

}  // namespace maxlin

#endif  // MAXLIN_DNORM_HPP
