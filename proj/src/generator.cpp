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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace maxlin {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_points(std::span<const double> points) {
  for (double t : points) {
    if (!(t >= 0.0 && t <= 1.0)) {
      throw std::invalid_argument("point outside [0,1]");
    }
  }
}

/// D-norm of a one-hot generator on a finite index set: distinct points act
/// as distinct indices, coincident points share one.
double finite_index_norm(std::span<const double> points,
                         std::span<const double> coeffs) {
  double total = 0.0;
  std::vector<bool> used(points.size(), false);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (used[i]) continue;
    double group_max = std::abs(coeffs[i]);
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (!used[j] && points[j] == points[i]) {
        used[j] = true;
        group_max = std::max(group_max, std::abs(coeffs[j]));
      }
    }
    total += group_max;
  }
  return total;
}

}  // namespace

double JointSample::column_mean(std::size_t col) const {
  double sum = 0.0;
  for (std::size_t k = 0; k < n_samples; ++k) sum += at(k, col);
  return sum / static_cast<double>(n_samples);
}

double JointSample::column_std_error(std::size_t col) const {
  if (n_samples < 2) return 0.0;
  const double mean = column_mean(col);
  double var = 0.0;
  for (std::size_t k = 0; k < n_samples; ++k) {
    const double d = at(k, col) - mean;
    var += d * d;
  }
  return std::sqrt(var / (static_cast<double>(n_samples - 1) *
                          static_cast<double>(n_samples)));
}

GeneratorModel GeneratorModel::ConstantOne() {
  return GeneratorModel(GeneratorKind::kConstantOne, 0.0, 0);
}

GeneratorModel GeneratorModel::Permutation(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("permutation needs dim >= 1");
  return GeneratorModel(GeneratorKind::kPermutation, 0.0, dim);
}

GeneratorModel GeneratorModel::Sinusoid(double amplitude) {
  if (!(amplitude >= 0.0 && amplitude <= 1.0)) {
    throw std::invalid_argument("sinusoid amplitude must lie in [0,1]");
  }
  return GeneratorModel(GeneratorKind::kSinusoid, amplitude, 0);
}

double GeneratorModel::path_bound() const {
  switch (kind_) {
    case GeneratorKind::kConstantOne:
      return 1.0;
    case GeneratorKind::kPermutation:
      return static_cast<double>(dim_);
    case GeneratorKind::kSinusoid:
      return 1.0 + amplitude_;
  }
  throw std::logic_error("unreachable");
}

double GeneratorModel::extremal_coefficient_path() const {
  // sup_t Z_t is deterministic for all three models: every sinusoid path
  // attains its full amplitude over one period.
  return path_bound();
}

void GeneratorModel::sample_row(std::span<const double> points, Rng& rng,
                                std::span<double> out) const {
  switch (kind_) {
    case GeneratorKind::kConstantOne: {
      std::fill(out.begin(), out.end(), 1.0);
      return;
    }
    case GeneratorKind::kPermutation: {
      const std::size_t hot = static_cast<std::size_t>(rng.index(dim_));
      std::fill(out.begin(), out.end(), 0.0);
      out[hot] = static_cast<double>(dim_);
      return;
    }
    case GeneratorKind::kSinusoid: {
      const double theta = rng.uniform() * kTwoPi;
      for (std::size_t j = 0; j < points.size(); ++j) {
        out[j] = 1.0 + amplitude_ * std::sin(kTwoPi * points[j] + theta);
      }
      return;
    }
  }
  throw std::logic_error("unreachable");
}

JointSample GeneratorModel::sample_joint(std::span<const double> points,
                                         std::size_t n,
                                         std::uint64_t seed) const {
  check_points(points);
  if (n == 0) throw std::invalid_argument("need n >= 1 samples");
  if (kind_ == GeneratorKind::kPermutation && points.size() != dim_) {
    throw std::invalid_argument(
        "permutation model requires points.size() == dim");
  }
  JointSample js;
  js.points.assign(points.begin(), points.end());
  js.n_samples = n;
  js.values.resize(n * points.size());
  Rng rng(seed);
  for (std::size_t k = 0; k < n; ++k) {
    sample_row(points,
               rng,
               std::span<double>(js.values.data() + k * points.size(),
                                 points.size()));
  }
  return js;
}

double GeneratorModel::norm_at_points(std::span<const double> points,
                                      std::span<const double> coeffs) const {
  check_points(points);
  switch (kind_) {
    case GeneratorKind::kConstantOne: {
      double m = 0.0;
      for (double c : coeffs) m = std::max(m, std::abs(c));
      return m;
    }
    case GeneratorKind::kPermutation:
      return finite_index_norm(points, coeffs);
    case GeneratorKind::kSinusoid: {
      std::vector<double> phases(points.size());
      for (std::size_t j = 0; j < points.size(); ++j) {
        phases[j] = kTwoPi * points[j];
      }
      return sinusoid_max_expectation(amplitude_, phases, coeffs);
    }
  }
  throw std::logic_error("unreachable");
}

double GeneratorModel::bivariate_norm(double s, double t, double x,
                                      double y) const {
  const double pts[2] = {s, t};
  const double cfs[2] = {x, y};
  return norm_at_points(pts, cfs);
}

double GeneratorModel::trivariate_norm(double t, double s_left, double s_right,
                                       std::array<double, 3> coeffs) const {
  const double pts[3] = {t, s_left, s_right};
  return norm_at_points(pts, coeffs);
}

nlohmann::json GeneratorModel::to_json() const {
  nlohmann::json j;
  switch (kind_) {
    case GeneratorKind::kConstantOne:
      j["kind"] = "constant";
      break;
    case GeneratorKind::kPermutation:
      j["kind"] = "permutation";
      j["dim"] = dim_;
      break;
    case GeneratorKind::kSinusoid:
      j["kind"] = "sinusoid";
      j["a"] = amplitude_;
      break;
  }
  return j;
}

GeneratorModel GeneratorModel::from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") return ConstantOne();
  if (kind == "permutation") {
    return Permutation(j.at("dim").get<std::size_t>());
  }
  if (kind == "sinusoid") return Sinusoid(j.at("a").get<double>());
  throw std::invalid_argument("unknown generator kind: " + kind);
}

double sinusoid_max_expectation(double amplitude,
                                std::span<const double> phases,
                                std::span<const double> coeffs) {
  if (phases.size() != coeffs.size() || phases.empty()) {
    throw std::invalid_argument("phases/coeffs size mismatch");
  }
  std::vector<double> c(coeffs.size());
  double c_max = 0.0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    c[j] = std::abs(coeffs[j]);
    c_max = std::max(c_max, c[j]);
  }
  if (c_max == 0.0) return 0.0;
  if (amplitude == 0.0) return c_max;

  // Crossing angles of each pair of competing sinusoids. Between consecutive
  // crossings the argmax is fixed, so each arc integrates a single sinusoid
  // in closed form.
  std::vector<double> cuts{0.0, kTwoPi};
  const std::size_t m = c.size();
  for (std::size_t j = 0; j < m; ++j) {
    if (c[j] == 0.0) continue;
    for (std::size_t k = j + 1; k < m; ++k) {
      if (c[k] == 0.0) continue;
      const double sa = c[j] * std::cos(phases[j]) - c[k] * std::cos(phases[k]);
      const double sb = c[j] * std::sin(phases[j]) - c[k] * std::sin(phases[k]);
      const double r = std::hypot(sa, sb);
      if (r == 0.0) continue;  // identical terms
      const double q = (c[k] - c[j]) / (amplitude * r);
      if (std::abs(q) > 1.0) continue;
      const double psi = std::atan2(sb, sa);
      const double base = std::asin(std::clamp(q, -1.0, 1.0));
      for (double root : {base - psi, std::numbers::pi - base - psi}) {
        double theta = std::fmod(root, kTwoPi);
        if (theta < 0.0) theta += kTwoPi;
        cuts.push_back(theta);
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double a, double b) { return b - a < 1e-13; }),
             cuts.end());

  double integral = 0.0;
  for (std::size_t arc = 0; arc + 1 < cuts.size(); ++arc) {
    const double lo = cuts[arc];
    const double hi = cuts[arc + 1];
    if (!(hi > lo)) continue;
    const double mid = 0.5 * (lo + hi);
    std::size_t top = 0;
    double best = -1.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double v = c[j] * (1.0 + amplitude * std::sin(phases[j] + mid));
      if (v > best) {
        best = v;
        top = j;
      }
    }
    // integral of c (1 + a sin(phi + theta)) over the arc
    integral += c[top] * ((hi - lo) - amplitude * (std::cos(phases[top] + hi) -
                                                   std::cos(phases[top] + lo)));
  }
  return integral / kTwoPi;
}

}  // namespace maxlin
