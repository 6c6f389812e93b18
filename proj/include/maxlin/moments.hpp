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

#ifndef MAXLIN_MOMENTS_HPP
#define MAXLIN_MOMENTS_HPP

#include "maxlin/generator.hpp"
#include "maxlin/grid.hpp"
#include "maxlin/maxlinear.hpp"
#include "maxlin/pair_norm.hpp"

namespace maxlin {

struct QuadratureConfig {
  double abs_tol = 1e-9;
  int max_subdivisions = 48;
};

/// E(XY) for a bivariate standard max-stable pair with the given D-norm:
///
///   E(XY) = int_0^inf ||(1,u)||_D^{-2} du = int_0^1 ||(1-s, s)||_D^{-2} ds,
///
/// the second form by the substitution u = s/(1-s) and homogeneity of the
/// norm. The value lies in [1, 2]; Cov(X,Y) = E(XY) - 1.
double msm_cross_moment(const PairNorm& pair, const QuadratureConfig& cfg = {});

/// The D-norm of the pair (process value at t, reconstruction at t):
/// ||(x, y)||_{D_t} = ||(x, g_{i-1}(t) y, g_i(t) y)|| over the points
/// (t, s_{i-1}, s_i) of the cell containing t.
PairNorm reconstruction_pair_norm(const GeneratorModel& model,
                                  const WeightFamily& weights, double t);

/// Pointwise mean squared error of the max-stable reconstruction,
/// MSE(t) = 2 (2 - int_0^inf ||(1,u)||_{D_t}^{-2} du). Zero at grid points.
double smsp_mse(const GeneratorModel& model, const WeightFamily& weights,
                double t, const QuadratureConfig& cfg = {});

/// P(U > u, V > v) = ||(u,v)||_1 - ||(u,v)||_D for a standard generalized
/// Pareto pair; requires u, v <= 0 with ||(u,v)||_D <= 1. Vanishes
/// identically for the sum norm.
double gpd_joint_survival(const PairNorm& pair, double u, double v);

/// E(U^2 | U > u, V > v) for a standard generalized Pareto pair:
///
///              u^3/3 + u^2 ||(u,v)||_D + v^3 I2(u/v)
///   = - ---------------------------------------------------,
///                  ||(u,v)||_1 - ||(u,v)||_D
///
/// with I2(w) = int_0^w int_0^w ||(max(s,t),1)||_D ds dt
///            = 2 int_0^w r ||(r,1)||_D dr (split along the diagonal).
/// Throws when the denominator is below 1e-12 (near-independence: the pair
/// puts no mass on the joint survival region).
double gpd_cond_second_moment(const PairNorm& pair, double u, double v,
                              const QuadratureConfig& cfg = {});

/// E(UV | U > u, V > v) for a standard generalized Pareto pair:
///
///       int_v^0 int_u^0 ||(s,t)||_D ds dt + v^3 int_0^{u/v} ||(r,1)||_D dr
///   = - ------------------------------------------------------------------
///                       ||(u,v)||_1 - ||(u,v)||_D
///
///       u^3 int_0^{v/u} ||(1,r)||_D dr + u v ||(u,v)||_D
///     - ------------------------------------------------.
///                ||(u,v)||_1 - ||(u,v)||_D
double gpd_cond_cross_moment(const PairNorm& pair, double u, double v,
                             const QuadratureConfig& cfg = {});

/// Conditional mean squared error of the generalized Pareto reconstruction,
/// E((V_t - V^_t)^2 | V_t > c, V^_t > c)
///   = E(U^2|.) - 2 E(UV|.) + E(V^2|.)
/// with (U, V) = (V_t, V^_t) and the V^2 term evaluated with the coordinates
/// of the pair norm exchanged. Tends to 0 under grid refinement.
double sgpp_conditional_mse(const GeneratorModel& model,
                            const WeightFamily& weights, double t, double c,
                            const QuadratureConfig& cfg = {});

}  // namespace maxlin

#endif  // MAXLIN_MOMENTS_HPP
