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

#include "maxlin/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxlin {

Grid::Grid(std::vector<double> points) : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw std::invalid_argument("grid needs at least 2 points");
  }
  if (points_.front() != 0.0 || points_.back() != 1.0) {
    throw std::invalid_argument("grid endpoints must be 0 and 1");
  }
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i] > points_[i - 1])) {
      throw std::invalid_argument("grid points must be strictly increasing");
    }
  }
}

Grid Grid::Uniform(std::size_t d) {
  if (d == 0) throw std::invalid_argument("grid needs d >= 1 cells");
  std::vector<double> pts(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    pts[i] = static_cast<double>(i) / static_cast<double>(d);
  }
  pts.front() = 0.0;
  pts.back() = 1.0;
  return Grid(std::move(pts));
}

double Grid::fineness() const {
  double kappa = 0.0;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    kappa = std::max(kappa, points_[i] - points_[i - 1]);
  }
  return kappa;
}

std::size_t Grid::cell_of(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("t outside [0,1]");
  }
  if (t == 0.0) return 1;
  const auto it = std::lower_bound(points_.begin(), points_.end(), t);
  return static_cast<std::size_t>(it - points_.begin());
}

nlohmann::json Grid::to_json() const {
  return nlohmann::json{{"points", points_}};
}

Grid Grid::from_json(const nlohmann::json& j) {
  return Grid(j.at("points").get<std::vector<double>>());
}

}  // namespace maxlin
