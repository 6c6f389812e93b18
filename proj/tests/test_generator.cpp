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

#include "maxlin/generator.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "maxlin/dnorm.hpp"
#include "maxlin/quadrature.hpp"

using maxlin::DNormSpec;
using maxlin::GeneratorModel;
using maxlin::JointSample;

namespace {

/// Independent route to the sinusoid norm: adaptive Simpson straight over
/// [0, 2 pi] against the closed-form arc evaluation used in production.
double simpson_reference_norm(double a, std::vector<double> points,
                              std::vector<double> coeffs) {
  const double two_pi = 2.0 * std::numbers::pi;
  const auto f = [&](double theta) {
    double best = 0.0;
    for (std::size_t j = 0; j < points.size(); ++j) {
      best = std::max(best, std::abs(coeffs[j]) *
                                (1.0 + a * std::sin(two_pi * points[j] + theta)));
    }
    return best;
  };
  return maxlin::adaptive_simpson(f, 0.0, two_pi, 1e-10) / two_pi;
}

double mc_pair_norm(const GeneratorModel& model, double s, double t, double x,
                    double y, std::size_t n, std::uint64_t seed,
                    double* std_error) {
  const double pts[2] = {s, t};
  const JointSample js = model.sample_joint(pts, n, seed);
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double v =
        std::max(std::abs(x) * js.at(k, 0), std::abs(y) * js.at(k, 1));
    const double d = v - mean;
    mean += d / static_cast<double>(k + 1);
    m2 += d * (v - mean);
  }
  *std_error = std::sqrt(m2 / (static_cast<double>(n - 1) *
                               static_cast<double>(n)));
  return mean;
}

}  // namespace

TEST_CASE("constant and degenerate sinusoid sample all ones") {
  const double pts[3] = {0.0, 0.25, 1.0};
  for (const GeneratorModel& model :
       {GeneratorModel::ConstantOne(), GeneratorModel::Sinusoid(0.0)}) {
    const JointSample js = model.sample_joint(pts, 16, 5);
    for (double v : js.values) CHECK(v == 1.0);
  }
}

TEST_CASE("sample constraints and errors") {
  const GeneratorModel sin = GeneratorModel::Sinusoid(0.5);
  const double bad[1] = {1.5};
  CHECK_THROWS_AS(sin.sample_joint(bad, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorModel::Sinusoid(1.5), std::invalid_argument);
  const GeneratorModel perm = GeneratorModel::Permutation(3);
  const double two[2] = {0.0, 1.0};
  CHECK_THROWS_AS(perm.sample_joint(two, 1, 0), std::invalid_argument);
}

TEST_CASE("permutation rows are one-hot with value dim") {
  const GeneratorModel perm = GeneratorModel::Permutation(4);
  const double pts[4] = {0.0, 0.25, 0.5, 1.0};
  const JointSample js = perm.sample_joint(pts, 200, 7);
  for (std::size_t k = 0; k < js.n_samples; ++k) {
    int hot = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      if (js.at(k, j) != 0.0) {
        ++hot;
        CHECK(js.at(k, j) == 4.0);
      }
    }
    CHECK(hot == 1);
  }
}

TEST_CASE("column means sit at 1 within 3 standard errors") {
  const double pts[2] = {0.0, 0.5};
  const GeneratorModel sin = GeneratorModel::Sinusoid(0.5);
  const JointSample js = sin.sample_joint(pts, 100000, 11);
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(std::abs(js.column_mean(j) - 1.0) <= 3.0 * js.column_std_error(j));
  }
  const double pts3[3] = {0.0, 0.5, 1.0};
  const JointSample pj =
      GeneratorModel::Permutation(3).sample_joint(pts3, 100000, 13);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(std::abs(pj.column_mean(j) - 1.0) <= 3.0 * pj.column_std_error(j));
  }
}

TEST_CASE("sampling is deterministic given the seed") {
  const double pts[3] = {0.1, 0.5, 0.9};
  const GeneratorModel sin = GeneratorModel::Sinusoid(0.7);
  const JointSample a = sin.sample_joint(pts, 50, 123);
  const JointSample b = sin.sample_joint(pts, 50, 123);
  CHECK(a.values == b.values);
}

TEST_CASE("bivariate oracle closed forms") {
  const GeneratorModel one = GeneratorModel::ConstantOne();
  CHECK(one.bivariate_norm(0.2, 0.8, 1.0, 1.0) == 1.0);
  const GeneratorModel flat = GeneratorModel::Sinusoid(0.0);
  CHECK(flat.bivariate_norm(0.1, 0.6, 2.0, 3.0) == 3.0);
  const GeneratorModel perm = GeneratorModel::Permutation(5);
  CHECK(perm.bivariate_norm(0.0, 1.0, 1.5, 2.0) == 3.5);
  CHECK(perm.bivariate_norm(0.3, 0.3, 1.5, 2.0) == 2.0);  // same index
}

TEST_CASE("oracle boundary and symmetry identities") {
  const GeneratorModel sin = GeneratorModel::Sinusoid(0.5);
  CHECK(std::abs(sin.bivariate_norm(0.0, 0.25, 1.7, 0.0) - 1.7) < 1e-10);
  CHECK(std::abs(sin.bivariate_norm(0.0, 0.25, 0.0, 2.3) - 2.3) < 1e-10);
  const double lhs = sin.bivariate_norm(0.1, 0.35, 1.0, 2.0);
  const double rhs = sin.bivariate_norm(0.35, 0.1, 2.0, 1.0);
  CHECK(std::abs(lhs - rhs) < 1e-10);
}

TEST_CASE("sinusoid oracle agrees with direct adaptive Simpson") {
  const GeneratorModel sin = GeneratorModel::Sinusoid(0.5);
  struct Probe {
    double s, t, x, y;
  };
  for (const Probe& p : {Probe{0.0, 0.25, 1.0, 1.0}, Probe{0.0, 0.5, 2.0, 3.0},
                         Probe{0.1, 0.9, 0.4, 0.8}, Probe{0.3, 0.35, 5.0, 4.9}}) {
    const double oracle = sin.bivariate_norm(p.s, p.t, p.x, p.y);
    const double reference =
        simpson_reference_norm(0.5, {p.s, p.t}, {p.x, p.y});
    CHECK(oracle == doctest::Approx(reference).epsilon(1e-9));
  }
  const GeneratorModel strong = GeneratorModel::Sinusoid(1.0);
  const double oracle3 = strong.trivariate_norm(0.1, 0.0, 0.2, {1.0, 0.4, 0.7});
  const double ref3 =
      simpson_reference_norm(1.0, {0.1, 0.0, 0.2}, {1.0, 0.4, 0.7});
  CHECK(oracle3 == doctest::Approx(ref3).epsilon(1e-9));
}

TEST_CASE("sinusoid oracle within [max, sum] and against Monte Carlo") {
  const GeneratorModel sin = GeneratorModel::Sinusoid(0.5);
  const double v = sin.bivariate_norm(0.0, 0.25, 1.0, 1.0);
  CHECK(v >= 1.0);
  CHECK(v <= 2.0);
  double se = 0.0;
  const double mc = mc_pair_norm(sin, 0.0, 0.25, 1.0, 1.0, 1000000, 17, &se);
  CHECK(std::abs(v - mc) <= 3.0 * se);
}

TEST_CASE("trivariate oracle closed forms and Monte Carlo") {
  const GeneratorModel one = GeneratorModel::ConstantOne();
  CHECK(one.trivariate_norm(0.5, 0.0, 1.0, {1.0, 0.4, 0.7}) == 1.0);
  const GeneratorModel flat = GeneratorModel::Sinusoid(0.0);
  CHECK(flat.trivariate_norm(0.5, 0.0, 1.0, {-1.0, 0.4, 2.0}) == 2.0);

  const GeneratorModel sin = GeneratorModel::Sinusoid(0.5);
  const double pts[3] = {0.1, 0.0, 0.2};
  const JointSample js = sin.sample_joint(pts, 1000000, 19);
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t k = 0; k < js.n_samples; ++k) {
    const double v =
        std::max({js.at(k, 0), js.at(k, 1), js.at(k, 2)});
    const double d = v - mean;
    mean += d / static_cast<double>(k + 1);
    m2 += d * (v - mean);
  }
  const double se = std::sqrt(m2 / (static_cast<double>(js.n_samples - 1) *
                                    static_cast<double>(js.n_samples)));
  const double oracle = sin.trivariate_norm(0.1, 0.0, 0.2, {1.0, 1.0, 1.0});
  CHECK(std::abs(oracle - mean) <= 3.0 * se);
}

TEST_CASE("path extremal coefficients") {
  CHECK(GeneratorModel::ConstantOne().extremal_coefficient_path() == 1.0);
  CHECK(GeneratorModel::Sinusoid(0.5).extremal_coefficient_path() == 1.5);
  CHECK(GeneratorModel::Sinusoid(1.0).extremal_coefficient_path() == 2.0);
  CHECK(GeneratorModel::Permutation(6).extremal_coefficient_path() == 6.0);
}

TEST_CASE("oracle matches an empirical norm built from joint samples") {
  const GeneratorModel sin = GeneratorModel::Sinusoid(0.5);
  const double pts[2] = {0.2, 0.7};
  const JointSample js = sin.sample_joint(pts, 100000, 23);
  const DNormSpec emp = DNormSpec::Empirical(js.values, 2);
  const double probe[2] = {1.3, 0.8};
  const auto nv = emp.eval(probe);
  const double oracle = sin.bivariate_norm(0.2, 0.7, 1.3, 0.8);
  CHECK(std::abs(nv.value - oracle) <= 3.0 * nv.std_error);
}

TEST_CASE("json round trip") {
  const GeneratorModel sin = GeneratorModel::Sinusoid(0.25);
  const GeneratorModel back = GeneratorModel::from_json(sin.to_json());
  CHECK(back.kind() == maxlin::GeneratorKind::kSinusoid);
  CHECK(back.amplitude() == 0.25);
  const GeneratorModel perm =
      GeneratorModel::from_json(GeneratorModel::Permutation(9).to_json());
  CHECK(perm.dim() == 9);
}
