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

#ifndef MAXLIN_GRID_HPP
#define MAXLIN_GRID_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

namespace maxlin {

/// Ordered observation points 0 = s_0 < s_1 < ... < s_d = 1.
class Grid {
 public:
  explicit Grid(std::vector<double> points);

  /// Equispaced grid with d cells (d+1 points).
  static Grid Uniform(std::size_t d);

  std::size_t cells() const { return points_.size() - 1; }
  std::size_t size() const { return points_.size(); }
  double point(std::size_t i) const { return points_[i]; }
  std::span<const double> points() const { return points_; }

  /// Largest cell width kappa.
  double fineness() const;

  /// Cell index i in {1, ..., d} with t in (s_{i-1}, s_i]; t = 0 maps to
  /// cell 1. Boundary points belong to their left cell.
  std::size_t cell_of(double t) const;

  nlohmann::json to_json() const;
  static Grid from_json(const nlohmann::json& j);

 private:
  std::vector<double> points_;
};

}  // namespace maxlin

#endif  // MAXLIN_GRID_HPP
