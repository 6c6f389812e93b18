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

#ifndef MAXLIN_MAXLINEAR_HPP
#define MAXLIN_MAXLINEAR_HPP

#include <functional>
#include <optional>
#include <vector>

#include "maxlin/dnorm.hpp"
#include "maxlin/grid.hpp"
#include "maxlin/pair_norm.hpp"
#include "maxlin/sampler.hpp"

namespace maxlin {

/// The weight functions g_0, ..., g_d of the max-linear model.
///
/// In adjacent-pair mode each g_i is supported on [s_{i-1}, s_{i+1}] and
/// normalized cell by cell with the bivariate D-norm of the neighboring
/// observation points:
///
///   g_i(t) = (t - s_{i-1}) / ||(s_i - t, t - s_{i-1})||_{D_{i-1,i}}
///            on [s_{i-1}, s_i], mirrored on [s_i, s_{i+1}], 0 elsewhere.
///
/// This gives g_i(s_i) = 1, 0 <= g_i <= 1, and the partition property
/// ||(g_{i-1}(t), g_i(t))||_{D_{i-1,i}} = 1 inside every cell, so the model
/// has standard margins and interpolates the observations.
///
/// User-supplied mode carries arbitrary nonnegative weight functions (for
/// instance the binomial weights); margins are standard only if the weights
/// satisfy the norm condition, see margin_rate().
class WeightFamily {
 public:
  /// `cell_norms[i-1]` is the D-norm of the pair at (s_{i-1}, s_i); the first
  /// norm argument belongs to the left point.
  static WeightFamily AdjacentPairs(Grid grid, std::vector<PairNorm> cell_norms);

  /// d+1 nonnegative functions on [0,1]. Probed for nonnegativity and
  /// continuity at construction.
  static WeightFamily UserSupplied(
      std::vector<std::function<double(double)>> weights);

  bool adjacent_pairs() const { return grid_.has_value(); }
  const Grid& grid() const;
  std::size_t count() const;  // number of weight functions, d+1

  /// g_i(t). Cell boundaries use the left cell's formula; both cells agree
  /// there.
  double weight(std::size_t i, double t) const;

  std::vector<double> weight_vector(double t) const;

  const PairNorm& cell_norm(std::size_t cell) const;

  struct CellWeights {
    std::size_t cell = 0;  // 1-based cell index
    double left = 0.0;     // g_{cell-1}(t)
    double right = 0.0;    // g_cell(t)
  };

  /// The two weights active in the cell containing t (adjacent-pair mode).
  CellWeights cell_weights(double t) const;

 private:
  WeightFamily() = default;

  std::optional<Grid> grid_;
  std::vector<PairNorm> cell_norms_;
  std::vector<std::function<double(double)>> user_weights_;
};

/// Adjacent-pair weights for a generator process: the cell norms are the
/// model's exact bivariate D-norm oracles.
WeightFamily build_weights(const GeneratorModel& model, const Grid& grid);

/// Adjacent-pair weights with one closed-form/empirical norm for all cells.
WeightFamily build_weights(const DNormSpec& norm, const Grid& grid);

/// Binomial weights g_i(t) = C(d,i) t^i (1-t)^(d-i). They sum to one, so
/// they satisfy the norm condition for the sum norm (independent margins).
WeightFamily binomial_weights(std::size_t d);

/// The max-linear reconstruction eta_t = max_i obs_i / g_i(t), with the
/// convention x / 0 = -inf for x < 0 so vanished weights drop out. Returns
/// obs_i exactly at grid points.
double reconstruct(const WeightFamily& weights, const ObservationVector& obs,
                   double t);

struct CellExtrema {
  double sup = 0.0;
  double inf = 0.0;
  double argmin = 0.0;
};

/// Pathwise extrema of the reconstruction over cell i (obs values < 0):
/// sup = max of the endpoint observations, inf = -||(obs_{i-1}, obs_i)||
/// attained at t* = (s_{i-1} obs_{i-1} + s_i obs_i) / (obs_{i-1} + obs_i).
CellExtrema cell_extrema(const WeightFamily& weights,
                         const ObservationVector& obs, std::size_t cell);

/// The interpolated generator process Z^_t = max_i g_i(t) Z_{s_i}; with
/// adjacent-pair weights only the two cell terms are active.
class DiscretizedGenerator {
 public:
  DiscretizedGenerator(WeightFamily weights, std::vector<double> gen_obs);

  double operator()(double t) const;
  const std::vector<double>& observations() const { return gen_obs_; }

 private:
  WeightFamily weights_;
  std::vector<double> gen_obs_;
};

/// Extrema of the interpolated generator over cell i: sup is the endpoint
/// maximum; inf = 1 / ||(1/Z_{i-1}, 1/Z_i)|| when both endpoint values are
/// positive and 0 otherwise. In the positive case the minimum sits at
/// t* = (s_{i-1} Z_i + s_i Z_{i-1}) / (Z_{i-1} + Z_i); in the zero case the
/// reported argmin is the endpoint carrying the zero.
CellExtrema generator_cell_extrema(const WeightFamily& weights,
                                   std::span<const double> gen_obs,
                                   std::size_t cell);

/// Marginal rate ||(g_0(t), ..., g_d(t))||_D: P(eta_t <= x) = exp(rate * x).
/// Adjacent-pair weights use their own cell norms (rate is 1 up to
/// quadrature error); user-supplied weights require an explicit norm.
double margin_rate(const WeightFamily& weights, double t,
                   const DNormSpec* norm = nullptr);

}  // namespace maxlin

#endif  // MAXLIN_MAXLINEAR_HPP
