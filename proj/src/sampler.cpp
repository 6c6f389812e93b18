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

#include "maxlin/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "maxlin/parallel.hpp"
#include "maxlin/rng.hpp"

namespace maxlin {

const char* path_kind_name(PathKind kind) {
  return kind == PathKind::kSmsp ? "smsp" : "sgpp";
}

PathKind path_kind_from_name(const std::string& name) {
  if (name == "smsp") return PathKind::kSmsp;
  if (name == "sgpp") return PathKind::kSgpp;
  throw std::invalid_argument("unknown path kind: " + name);
}

std::vector<double> default_fine_grid(std::size_t size) {
  if (size < 2) throw std::invalid_argument("fine grid needs >= 2 points");
  std::vector<double> pts(size);
  for (std::size_t i = 0; i < size; ++i) {
    pts[i] = static_cast<double>(i) / static_cast<double>(size - 1);
  }
  pts.front() = 0.0;
  pts.back() = 1.0;
  return pts;
}

namespace {

void check_simulation_points(const GeneratorModel& model,
                             std::span<const double> points) {
  if (points.empty()) throw std::invalid_argument("need at least one point");
  for (double t : points) {
    if (!(t >= 0.0 && t <= 1.0)) {
      throw std::invalid_argument("point outside [0,1]");
    }
  }
  if (model.kind() == GeneratorKind::kPermutation &&
      points.size() != model.dim()) {
    throw std::invalid_argument(
        "permutation model requires points.size() == dim");
  }
}

}  // namespace

PathSample simulate_smsp(const GeneratorModel& model,
                         std::span<const double> points, std::uint64_t seed,
                         const SmspOptions& options) {
  check_simulation_points(model, points);
  const double bound = model.path_bound();
  if (!std::isfinite(bound)) {
    throw std::invalid_argument("generator paths must be a.s. bounded");
  }

  Rng rng(seed);
  const std::size_t m = points.size();
  std::vector<double> running_max(m, 0.0);
  std::vector<double> row(m);
  double gamma = 0.0;
  std::size_t terms = 0;
  constexpr std::size_t kTermCap = 100000000;
  for (;;) {
    gamma += rng.exponential();
    const double weakest =
        *std::min_element(running_max.begin(), running_max.end());
    // Everything after this arrival is bounded by bound / gamma, so once that
    // falls below the weakest running maximum no later term can contribute.
    if (terms > 0 && terms >= options.forced_min_terms &&
        bound / gamma < weakest) {
      break;
    }
    if (++terms > kTermCap) {
      throw std::runtime_error("spectral series failed to terminate");
    }
    model.sample_row(points, rng, row);
    for (std::size_t j = 0; j < m; ++j) {
      running_max[j] = std::max(running_max[j], row[j] / gamma);
    }
  }

  PathSample path;
  path.points.assign(points.begin(), points.end());
  path.values.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    path.values[j] = -1.0 / running_max[j];
  }
  path.kind = PathKind::kSmsp;
  path.seed = seed;
  path.series_terms = terms;
  return path;
}

PathSample simulate_sgpp(const GeneratorModel& model,
                         std::span<const double> points, std::uint64_t seed,
                         double censor_floor) {
  check_simulation_points(model, points);
  if (!(censor_floor > model.path_bound())) {
    throw std::invalid_argument("censor floor M must exceed the path bound c");
  }
  Rng rng(seed);
  const std::size_t m = points.size();
  std::vector<double> row(m);
  const double u = rng.uniform_pos();
  model.sample_row(points, rng, row);

  PathSample path;
  path.points.assign(points.begin(), points.end());
  path.values.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    path.values[j] = row[j] > 0.0 ? std::max(-u / row[j], -censor_floor)
                                  : -censor_floor;
  }
  path.kind = PathKind::kSgpp;
  path.seed = seed;
  return path;
}

ObservationVector restrict_to_grid(const PathSample& path, const Grid& grid) {
  ObservationVector obs{grid, {}, path.kind};
  obs.values.reserve(grid.size());
  for (double s : grid.points()) {
    const auto it =
        std::lower_bound(path.points.begin(), path.points.end(), s - 1e-12);
    if (it == path.points.end() || std::abs(*it - s) > 1e-12) {
      throw std::invalid_argument("grid point " + std::to_string(s) +
                                  " missing from path points");
    }
    obs.values.push_back(
        path.values[static_cast<std::size_t>(it - path.points.begin())]);
  }
  return obs;
}

std::vector<PathSample> simulate_batch(const GeneratorModel& model,
                                       std::span<const double> points,
                                       PathKind kind, std::size_t n_paths,
                                       std::uint64_t base_seed,
                                       unsigned workers, double censor_floor) {
  std::vector<PathSample> paths(n_paths);
  parallel_for(n_paths, workers, [&](std::size_t i) {
    const std::uint64_t seed = derive_seed(base_seed, i);
    paths[i] = kind == PathKind::kSmsp
                   ? simulate_smsp(model, points, seed)
                   : simulate_sgpp(model, points, seed, censor_floor);
  });
  return paths;
}

}  // namespace maxlin
