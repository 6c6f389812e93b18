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

#include "maxlin/maxlinear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace maxlin {

namespace {

void check_observations(const ObservationVector& obs, std::size_t expected) {
  if (obs.values.size() != expected) {
    throw std::invalid_argument("observation size does not match weights");
  }
  for (double v : obs.values) {
    if (obs.kind == PathKind::kSmsp && !(v < 0.0)) {
      throw std::invalid_argument(
          "nonnegative observation value for SMSP kind");
    }
    if (obs.kind == PathKind::kSgpp && !(v <= 0.0)) {
      throw std::invalid_argument("positive observation value for SGPP kind");
    }
  }
}

double binomial_coefficient(std::size_t n, std::size_t k) {
  double c = 1.0;
  for (std::size_t j = 1; j <= k; ++j) {
    c *= static_cast<double>(n - k + j) / static_cast<double>(j);
  }
  return c;
}

}  // namespace

WeightFamily WeightFamily::AdjacentPairs(Grid grid,
                                         std::vector<PairNorm> cell_norms) {
  if (cell_norms.size() != grid.cells()) {
    throw std::invalid_argument("need one pair norm per grid cell");
  }
  for (const PairNorm& pn : cell_norms) pn.validate();
  WeightFamily w;
  w.grid_ = std::move(grid);
  w.cell_norms_ = std::move(cell_norms);
  return w;
}

WeightFamily WeightFamily::UserSupplied(
    std::vector<std::function<double(double)>> weights) {
  if (weights.empty()) throw std::invalid_argument("need at least one weight");
  for (const auto& g : weights) {
    for (int k = 0; k <= 256; ++k) {
      const double t = static_cast<double>(k) / 256.0;
      const double v = g(t);
      if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument("weight functions must be nonnegative");
      }
      for (double t2 : {std::min(1.0, t + 1e-9), std::max(0.0, t - 1e-9)}) {
        if (std::abs(g(t2) - v) > 1e-6 * (1.0 + std::abs(v))) {
          throw std::invalid_argument("weight function fails continuity probe");
        }
      }
    }
  }
  WeightFamily w;
  w.user_weights_ = std::move(weights);
  return w;
}

const Grid& WeightFamily::grid() const {
  if (!grid_) throw std::logic_error("user-supplied weights have no grid");
  return *grid_;
}

std::size_t WeightFamily::count() const {
  return grid_ ? grid_->size() : user_weights_.size();
}

const PairNorm& WeightFamily::cell_norm(std::size_t cell) const {
  if (!grid_) throw std::logic_error("user-supplied weights have no cell norms");
  if (cell < 1 || cell > cell_norms_.size()) {
    throw std::invalid_argument("cell index out of range");
  }
  return cell_norms_[cell - 1];
}

WeightFamily::CellWeights WeightFamily::cell_weights(double t) const {
  const Grid& g = grid();
  const std::size_t c = g.cell_of(t);
  const double left_arg = g.point(c) - t;        // pairs with the left point
  const double right_arg = t - g.point(c - 1);   // pairs with the right point
  CellWeights cw;
  cw.cell = c;
  // At the cell endpoints ||(0, x)|| = x by standardization, so the active
  // weight is exactly 1; evaluating it keeps interpolation bit-exact.
  if (left_arg == 0.0) {
    cw.left = 0.0;
    cw.right = 1.0;
    return cw;
  }
  if (right_arg == 0.0) {
    cw.left = 1.0;
    cw.right = 0.0;
    return cw;
  }
  const double pn = cell_norms_[c - 1](left_arg, right_arg);
  cw.left = left_arg / pn;
  cw.right = right_arg / pn;
  return cw;
}

double WeightFamily::weight(std::size_t i, double t) const {
  if (i >= count()) throw std::invalid_argument("weight index out of range");
  if (!grid_) return user_weights_[i](t);
  const CellWeights cw = cell_weights(t);
  if (i + 1 == cw.cell) return cw.left;
  if (i == cw.cell) return cw.right;
  return 0.0;
}

std::vector<double> WeightFamily::weight_vector(double t) const {
  std::vector<double> g(count(), 0.0);
  if (grid_) {
    const CellWeights cw = cell_weights(t);
    g[cw.cell - 1] = cw.left;
    g[cw.cell] = cw.right;
  } else {
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = user_weights_[i](t);
  }
  return g;
}

WeightFamily build_weights(const GeneratorModel& model, const Grid& grid) {
  std::vector<PairNorm> norms;
  norms.reserve(grid.cells());
  for (std::size_t i = 1; i < grid.size(); ++i) {
    norms.push_back(
        PairNorm::FromGenerator(model, grid.point(i - 1), grid.point(i)));
  }
  return WeightFamily::AdjacentPairs(grid, std::move(norms));
}

WeightFamily build_weights(const DNormSpec& norm, const Grid& grid) {
  std::vector<PairNorm> norms(grid.cells(), PairNorm::FromDNorm(norm));
  return WeightFamily::AdjacentPairs(grid, std::move(norms));
}

WeightFamily binomial_weights(std::size_t d) {
  if (d == 0) throw std::invalid_argument("binomial weights need d >= 1");
  std::vector<std::function<double(double)>> weights;
  weights.reserve(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    const double coeff = binomial_coefficient(d, i);
    weights.push_back([coeff, i, d](double t) {
      return coeff * std::pow(t, static_cast<double>(i)) *
             std::pow(1.0 - t, static_cast<double>(d - i));
    });
  }
  return WeightFamily::UserSupplied(std::move(weights));
}

double reconstruct(const WeightFamily& weights, const ObservationVector& obs,
                   double t) {
  check_observations(obs, weights.count());
  double best = -std::numeric_limits<double>::infinity();
  bool active = false;
  if (weights.adjacent_pairs()) {
    const WeightFamily::CellWeights cw = weights.cell_weights(t);
    if (cw.left > 0.0) {
      best = std::max(best, obs.values[cw.cell - 1] / cw.left);
      active = true;
    }
    if (cw.right > 0.0) {
      best = std::max(best, obs.values[cw.cell] / cw.right);
      active = true;
    }
  } else {
    for (std::size_t i = 0; i < weights.count(); ++i) {
      const double g = weights.weight(i, t);
      if (g > 0.0) {
        best = std::max(best, obs.values[i] / g);
        active = true;
      }
    }
  }
  if (!active) {
    throw std::invalid_argument("all weights vanish at t; model undefined");
  }
  return best;
}

CellExtrema cell_extrema(const WeightFamily& weights,
                         const ObservationVector& obs, std::size_t cell) {
  const Grid& g = weights.grid();
  if (cell < 1 || cell > g.cells()) {
    throw std::invalid_argument("cell index out of range");
  }
  check_observations(obs, weights.count());
  const double vl = obs.values[cell - 1];
  const double vr = obs.values[cell];
  if (!(vl < 0.0 && vr < 0.0)) {
    throw std::invalid_argument("cell extrema need strictly negative values");
  }
  CellExtrema e;
  e.sup = std::max(vl, vr);
  e.inf = -weights.cell_norm(cell)(vl, vr);
  e.argmin =
      (g.point(cell - 1) * vl + g.point(cell) * vr) / (vl + vr);
  return e;
}

DiscretizedGenerator::DiscretizedGenerator(WeightFamily weights,
                                           std::vector<double> gen_obs)
    : weights_(std::move(weights)), gen_obs_(std::move(gen_obs)) {
  if (gen_obs_.size() != weights_.count()) {
    throw std::invalid_argument("generator observation size mismatch");
  }
  for (double z : gen_obs_) {
    if (!(z >= 0.0)) {
      throw std::invalid_argument("negative generator value");
    }
  }
}

double DiscretizedGenerator::operator()(double t) const {
  if (weights_.adjacent_pairs()) {
    const WeightFamily::CellWeights cw = weights_.cell_weights(t);
    return std::max(cw.left * gen_obs_[cw.cell - 1],
                    cw.right * gen_obs_[cw.cell]);
  }
  double best = 0.0;
  for (std::size_t i = 0; i < weights_.count(); ++i) {
    best = std::max(best, weights_.weight(i, t) * gen_obs_[i]);
  }
  return best;
}

CellExtrema generator_cell_extrema(const WeightFamily& weights,
                                   std::span<const double> gen_obs,
                                   std::size_t cell) {
  const Grid& g = weights.grid();
  if (cell < 1 || cell > g.cells()) {
    throw std::invalid_argument("cell index out of range");
  }
  if (gen_obs.size() != weights.count()) {
    throw std::invalid_argument("generator observation size mismatch");
  }
  const double zl = gen_obs[cell - 1];
  const double zr = gen_obs[cell];
  if (!(zl >= 0.0 && zr >= 0.0)) {
    throw std::invalid_argument("negative generator value");
  }
  CellExtrema e;
  e.sup = std::max(zl, zr);
  if (zl > 0.0 && zr > 0.0) {
    e.inf = 1.0 / weights.cell_norm(cell)(1.0 / zl, 1.0 / zr);
    e.argmin = (g.point(cell - 1) * zr + g.point(cell) * zl) / (zl + zr);
  } else {
    e.inf = 0.0;
    e.argmin = zl == 0.0 ? g.point(cell - 1) : g.point(cell);
  }
  return e;
}

double margin_rate(const WeightFamily& weights, double t,
                   const DNormSpec* norm) {
  if (weights.adjacent_pairs()) {
    const WeightFamily::CellWeights cw = weights.cell_weights(t);
    return weights.cell_norm(cw.cell)(cw.left, cw.right);
  }
  if (norm == nullptr) {
    throw std::invalid_argument(
        "user-supplied weights need an explicit D-norm for the margin rate");
  }
  const std::vector<double> g = weights.weight_vector(t);
  return norm->eval(g).value;
}

}  // namespace maxlin
