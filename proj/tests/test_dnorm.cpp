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

#include "maxlin/dnorm.hpp"

#include <cmath>
#include <filesystem>
#include <vector>

#include <doctest.h>

#include "maxlin/rng.hpp"

using maxlin::DNormFamily;
using maxlin::DNormSpec;
using maxlin::NormValue;
using maxlin::Rng;

namespace {

std::vector<DNormSpec> closed_form_specs() {
  return {DNormSpec::Sum(), DNormSpec::Max(), DNormSpec::Logistic(1.5),
          DNormSpec::Logistic(2.0), DNormSpec::Logistic(8.0)};
}

DNormSpec empirical_spec(std::size_t dim, std::size_t n, std::uint64_t seed) {
  return DNormSpec::Empirical(
      maxlin::logistic_generator_samples(2.0, dim, n, seed), dim);
}

std::vector<double> random_vector(Rng& rng, std::size_t dim, double scale) {
  std::vector<double> x(dim);
  for (double& v : x) v = scale * (2.0 * rng.uniform() - 1.0);
  return x;
}

}  // namespace

TEST_CASE("closed-form evaluations") {
  const double v12[2] = {1.0, 2.0};
  CHECK(DNormSpec::Sum().eval(v12).value == 3.0);
  const double v34[2] = {3.0, 4.0};
  CHECK(DNormSpec::Logistic(2.0).eval(v34).value == doctest::Approx(5.0));
  const double vneg[2] = {-0.5, 0.2};
  CHECK(DNormSpec::Max().eval(vneg).value == 0.5);
  CHECK(DNormSpec::Sum().eval(v12).std_error == 0.0);
}

TEST_CASE("constant empirical generator is the max norm") {
  const DNormSpec spec = DNormSpec::Empirical({1.0, 1.0, 1.0, 1.0}, 2);
  const double ones[2] = {1.0, 1.0};
  const NormValue nv = spec.eval(ones);
  CHECK(nv.value == 1.0);
  CHECK(nv.std_error == 0.0);
}

TEST_CASE("extremal coefficients") {
  CHECK(DNormSpec::Sum().extremal_coefficient(2).value == 2.0);
  CHECK(DNormSpec::Max().extremal_coefficient(7).value == 1.0);
  CHECK(DNormSpec::Logistic(2.0).extremal_coefficient(2).value ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("input validation") {
  const DNormSpec spec = empirical_spec(3, 100, 7);
  const double wrong_dim[2] = {1.0, 1.0};
  CHECK_THROWS_AS(spec.eval(wrong_dim), std::invalid_argument);
  const double bad[2] = {1.0, std::nan("")};
  CHECK_THROWS_AS(DNormSpec::Sum().eval(bad), std::invalid_argument);
  CHECK_THROWS_AS(DNormSpec::Logistic(0.5), std::invalid_argument);
  CHECK_THROWS_AS(DNormSpec::Empirical({-1.0, 1.0}, 2), std::invalid_argument);
  // Column mean far from 1 must be rejected.
  CHECK_THROWS_AS(DNormSpec::Empirical({5.0, 1.0, 5.0, 1.0}, 2),
                  std::invalid_argument);
}

TEST_CASE("norm bounds: max <= ||x||_D <= sum") {
  Rng rng(11);
  for (const DNormSpec& spec : closed_form_specs()) {
    for (int it = 0; it < 200; ++it) {
      const auto x = random_vector(rng, 3, 5.0);
      double mx = 0.0;
      double sm = 0.0;
      for (double v : x) {
        mx = std::max(mx, std::abs(v));
        sm += std::abs(v);
      }
      const double nv = spec.eval(x).value;
      CHECK(nv >= mx - 1e-12);
      CHECK(nv <= sm + 1e-12);
    }
  }
  const DNormSpec emp = empirical_spec(3, 20000, 13);
  for (int it = 0; it < 50; ++it) {
    const auto x = random_vector(rng, 3, 5.0);
    double mx = 0.0;
    double sm = 0.0;
    for (double v : x) {
      mx = std::max(mx, std::abs(v));
      sm += std::abs(v);
    }
    const NormValue nv = emp.eval(x);
    CHECK(nv.value >= mx - 3.0 * nv.std_error);
    CHECK(nv.value <= sm + 3.0 * nv.std_error);
  }
}

TEST_CASE("standardization on unit vectors") {
  for (const DNormSpec& spec : closed_form_specs()) {
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<double> e(3, 0.0);
      e[i] = 1.0;
      CHECK(spec.eval(e).value == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  const DNormSpec emp = empirical_spec(3, 20000, 17);
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<double> e(3, 0.0);
    e[i] = 1.0;
    const NormValue nv = emp.eval(e);
    CHECK(std::abs(nv.value - 1.0) <= 3.0 * nv.std_error);
  }
}

TEST_CASE("absolute homogeneity and monotonicity are exact per sample") {
  Rng rng(23);
  std::vector<DNormSpec> specs = closed_form_specs();
  specs.push_back(empirical_spec(3, 2000, 29));
  for (const DNormSpec& spec : specs) {
    for (int it = 0; it < 100; ++it) {
      const auto x = random_vector(rng, 3, 2.0);
      const double c = 4.0 * rng.uniform() - 2.0;
      std::vector<double> cx(x);
      for (double& v : cx) v *= c;
      CHECK(spec.eval(cx).value ==
            doctest::Approx(std::abs(c) * spec.eval(x).value).epsilon(1e-12));

      std::vector<double> y(x);
      for (double& v : y) v *= 1.0 + rng.uniform();  // |y| >= |x| pointwise
      CHECK(spec.eval(y).value >= spec.eval(x).value - 1e-12);
    }
  }
}

TEST_CASE("triangle inequality on random pairs") {
  Rng rng(31);
  std::vector<DNormSpec> specs = closed_form_specs();
  specs.push_back(empirical_spec(4, 500, 37));
  for (const DNormSpec& spec : specs) {
    for (int it = 0; it < 1000; ++it) {
      const auto x = random_vector(rng, 4, 3.0);
      const auto y = random_vector(rng, 4, 3.0);
      std::vector<double> sum(4);
      for (std::size_t i = 0; i < 4; ++i) sum[i] = x[i] + y[i];
      CHECK(spec.eval(sum).value <=
            spec.eval(x).value + spec.eval(y).value + 1e-10);
    }
  }
}

TEST_CASE("logistic generator construction reproduces the closed form") {
  const double lambda = 2.0;
  const std::size_t n = 200000;
  const DNormSpec emp = DNormSpec::Empirical(
      maxlin::logistic_generator_samples(lambda, 2, n, 101), 2);
  const DNormSpec exact = DNormSpec::Logistic(lambda);
  const double probes[][2] = {{1.0, 1.0}, {2.0, 0.5}, {0.3, 0.9}};
  for (const auto& p : probes) {
    const NormValue nv = emp.eval(p);
    CHECK(std::abs(nv.value - exact.eval(p).value) <= 3.0 * nv.std_error);
  }
}

TEST_CASE("lambda = 1 coincides with the sum norm") {
  Rng rng(41);
  const DNormSpec l1 = DNormSpec::Logistic(1.0);
  for (int it = 0; it < 50; ++it) {
    const auto x = random_vector(rng, 3, 2.0);
    CHECK(l1.eval(x).value ==
          doctest::Approx(DNormSpec::Sum().eval(x).value).epsilon(1e-12));
  }
}

TEST_CASE("json round trip") {
  const DNormSpec logistic = DNormSpec::Logistic(2.5);
  const DNormSpec back = DNormSpec::from_json(logistic.to_json());
  CHECK(back.family() == DNormFamily::kLogistic);
  CHECK(back.lambda() == 2.5);

  const auto dir = std::filesystem::temp_directory_path() / "maxlin_dnorm";
  std::filesystem::create_directories(dir);
  const DNormSpec emp = empirical_spec(2, 500, 43);
  const nlohmann::json j = emp.to_json(dir / "samples.csv");
  const DNormSpec emp_back = DNormSpec::from_json(j);
  CHECK(emp_back.sample_count() == 500);
  const double probe[2] = {1.0, 2.0};
  CHECK(emp_back.eval(probe).value ==
        doctest::Approx(emp.eval(probe).value).epsilon(1e-12));
}
