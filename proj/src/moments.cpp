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

#include "maxlin/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "maxlin/quadrature.hpp"

namespace maxlin {

namespace {

constexpr double kDenominatorFloor = 1e-12;

void check_tail_region(const PairNorm& pair, double u, double v) {
  if (!(u <= 0.0 && v <= 0.0)) {
    throw std::domain_error("tail arguments must be nonpositive");
  }
  if (pair(u, v) > 1.0 + 1e-9) {
    throw std::domain_error("arguments outside the valid tail region");
  }
}

/// int_0^w pair(r, 1) dr, optionally weighted by r. The integrand kinks
/// where the two coordinates tie, so the range is split at r = 1.
template <typename Weight>
double integrate_edge_norm(const PairNorm& pair, double w, double abs_tol,
                           int max_depth, Weight&& weight) {
  if (w == 0.0) return 0.0;
  std::vector<double> cuts{0.0};
  if (w > 1.0) cuts.push_back(1.0);
  cuts.push_back(w);
  return integrate_segments(
      [&](double r) { return weight(r) * pair(r, 1.0); }, cuts, abs_tol,
      max_depth);
}

}  // namespace

double msm_cross_moment(const PairNorm& pair, const QuadratureConfig& cfg) {
  pair.validate();
  return adaptive_simpson(
      [&](double s) {
        const double n = pair(1.0 - s, s);
        return 1.0 / (n * n);
      },
      0.0, 1.0, cfg.abs_tol, cfg.max_subdivisions);
}

PairNorm reconstruction_pair_norm(const GeneratorModel& model,
                                  const WeightFamily& weights, double t) {
  const Grid& grid = weights.grid();
  const WeightFamily::CellWeights cw = weights.cell_weights(t);
  const double s_left = grid.point(cw.cell - 1);
  const double s_right = grid.point(cw.cell);
  return PairNorm(
      "reconstruction", [model, t, s_left, s_right, cw](double x, double y) {
        return model.trivariate_norm(
            t, s_left, s_right,
            {x, cw.left * y, cw.right * y});
      });
}

double smsp_mse(const GeneratorModel& model, const WeightFamily& weights,
                double t, const QuadratureConfig& cfg) {
  const PairNorm pair = reconstruction_pair_norm(model, weights, t);
  const double integral = adaptive_simpson(
      [&](double s) {
        const double n = pair(1.0 - s, s);
        return 1.0 / (n * n);
      },
      0.0, 1.0, 0.5 * cfg.abs_tol, cfg.max_subdivisions);
  return std::max(0.0, 2.0 * (2.0 - integral));
}

double gpd_joint_survival(const PairNorm& pair, double u, double v) {
  check_tail_region(pair, u, v);
  const double survival = std::abs(u) + std::abs(v) - pair(u, v);
  if (survival < -1e-9) {
    throw std::invalid_argument("pair norm exceeds the sum norm");
  }
  return std::max(0.0, survival);
}

double gpd_cond_second_moment(const PairNorm& pair, double u, double v,
                              const QuadratureConfig& cfg) {
  check_tail_region(pair, u, v);
  const double norm_uv = pair(u, v);
  const double denom = std::abs(u) + std::abs(v) - norm_uv;
  if (denom < kDenominatorFloor) {
    throw std::domain_error(
        "joint survival probability vanishes (near-independence)");
  }
  const double tol = std::max(cfg.abs_tol * denom / 8.0, 1e-14);
  // I2 = int_0^{u/v} int_0^{u/v} ||(max(s,t),1)|| ds dt, collapsed to one
  // dimension along the diagonal.
  const double w = u / v;
  const double i2 =
      2.0 * integrate_edge_norm(pair, w, tol, cfg.max_subdivisions,
                                [](double r) { return r; });
  const double numerator = u * u * u / 3.0 + u * u * norm_uv + v * v * v * i2;
  return -numerator / denom;
}

double gpd_cond_cross_moment(const PairNorm& pair, double u, double v,
                             const QuadratureConfig& cfg) {
  check_tail_region(pair, u, v);
  const double norm_uv = pair(u, v);
  const double denom = std::abs(u) + std::abs(v) - norm_uv;
  if (denom < kDenominatorFloor) {
    throw std::domain_error(
        "joint survival probability vanishes (near-independence)");
  }
  const double tol = std::max(cfg.abs_tol * denom / 8.0, 1e-14);
  const double inner_tol = std::max(0.01 * tol, 1e-14);

  // Rectangle term int_v^0 int_u^0 ||(s,t)|| ds dt; the inner integral is
  // split where |s| = |t|.
  const auto inner = [&](double t) {
    std::vector<double> cuts{u};
    if (t > u && t < 0.0) cuts.push_back(t);
    cuts.push_back(0.0);
    return integrate_segments([&](double s) { return pair(s, t); }, cuts,
                              inner_tol, cfg.max_subdivisions);
  };
  std::vector<double> outer_cuts{v};
  if (u > v && u < 0.0) outer_cuts.push_back(u);
  outer_cuts.push_back(0.0);
  const double rectangle =
      integrate_segments(inner, outer_cuts, tol, cfg.max_subdivisions);

  const double edge_v =
      v * v * v * integrate_edge_norm(pair, u / v, tol, cfg.max_subdivisions,
                                      [](double) { return 1.0; });
  const PairNorm swapped = pair.swapped();
  const double edge_u =
      u * u * u * integrate_edge_norm(swapped, v / u, tol,
                                      cfg.max_subdivisions,
                                      [](double) { return 1.0; });
  const double corner = u * v * norm_uv;
  return -(rectangle + edge_v + edge_u + corner) / denom;
}

double sgpp_conditional_mse(const GeneratorModel& model,
                            const WeightFamily& weights, double t, double c,
                            const QuadratureConfig& cfg) {
  const PairNorm pair = reconstruction_pair_norm(model, weights, t);
  const PairNorm swapped = pair.swapped();
  const double second_u = gpd_cond_second_moment(pair, c, c, cfg);
  const double second_v = gpd_cond_second_moment(swapped, c, c, cfg);
  const double cross = gpd_cond_cross_moment(pair, c, c, cfg);
  const double mse = second_u - 2.0 * cross + second_v;
  // The three terms cancel to quadrature precision under complete
  // dependence; suppress that noise but let genuine negatives through.
  if (mse < 0.0 && mse > -1e3 * cfg.abs_tol) return 0.0;
  return mse;
}

}  // namespace maxlin
