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

#ifndef MAXLIN_SAMPLER_HPP
#define MAXLIN_SAMPLER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "maxlin/generator.hpp"
#include "maxlin/grid.hpp"

namespace maxlin {

enum class PathKind { kSmsp, kSgpp };

const char* path_kind_name(PathKind kind);
PathKind path_kind_from_name(const std::string& name);

/// One realization of a standard max-stable (values < 0) or standard
/// generalized Pareto (values in [-M, 0)) process on a finite point set.
struct PathSample {
  std::vector<double> points;
  std::vector<double> values;
  PathKind kind = PathKind::kSmsp;
  std::uint64_t seed = 0;
  std::size_t series_terms = 0;  // spectral series terms consumed (SMSP)
};

/// A path restricted to the points of a grid.
struct ObservationVector {
  Grid grid;
  std::vector<double> values;
  PathKind kind = PathKind::kSmsp;
};

inline constexpr double kDefaultCensorFloor = 1e6;

/// Number of points in the default fine simulation grid; 512 cells align
/// with dyadic grid refinements.
inline constexpr std::size_t kDefaultFineGridSize = 513;

std::vector<double> default_fine_grid(std::size_t size = kDefaultFineGridSize);

struct SmspOptions {
  /// Continue the spectral series for at least this many terms even after
  /// the stopping rule is satisfied. Extra terms can never alter the result;
  /// the knob exists so tests can demonstrate exactness of the stopping rule.
  std::size_t forced_min_terms = 0;
};

/// Exact draw of a standard max-stable process at the given points via the
/// Poisson spectral series eta_t = -1 / max_k (Z_t^(k) / G_k) with G_k the
/// arrival times of a unit-rate Poisson process. The series stops at the
/// provably sufficient index where c / G_k drops below the smallest running
/// maximum, so no truncation bias enters. Margins are standard negative
/// exponential.
PathSample simulate_smsp(const GeneratorModel& model,
                         std::span<const double> points, std::uint64_t seed,
                         const SmspOptions& options = {});

/// Draw of a standard generalized Pareto process: V_t = max(-U / Z_t, -M)
/// with U uniform on (0,1) independent of Z. Requires M > c so the censoring
/// never reaches the tail region ||f||_inf <= 1/c where the distribution is
/// P(V <= f) = 1 - ||f||_D.
PathSample simulate_sgpp(const GeneratorModel& model,
                         std::span<const double> points, std::uint64_t seed,
                         double censor_floor = kDefaultCensorFloor);

/// Copies the path values at the grid points. Every grid point must be a
/// point of the path.
ObservationVector restrict_to_grid(const PathSample& path, const Grid& grid);

/// n_paths independent paths with per-path seeds derived from base_seed.
/// The result is identical for every worker count.
std::vector<PathSample> simulate_batch(const GeneratorModel& model,
                                       std::span<const double> points,
                                       PathKind kind, std::size_t n_paths,
                                       std::uint64_t base_seed,
                                       unsigned workers = 1,
                                       double censor_floor = kDefaultCensorFloor);

}  // namespace maxlin

#endif  // MAXLIN_SAMPLER_HPP
