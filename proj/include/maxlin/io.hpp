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

#ifndef MAXLIN_IO_HPP
#define MAXLIN_IO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxlin/dnorm.hpp"
#include "maxlin/generator.hpp"
#include "maxlin/sampler.hpp"

namespace maxlin {

inline constexpr int kOutputSchemaVersion = 1;

/// Deterministic, locale-independent decimal rendering used in every CSV.
std::string format_double(double v);

/// A parsed experiment configuration. Fields a command does not use are
/// ignored; fields it requires are validated on access.
struct ExperimentConfig {
  nlohmann::json raw;
  std::filesystem::path base_dir;

  static ExperimentConfig load(const std::filesystem::path& path);
  static ExperimentConfig from_json(nlohmann::json j,
                                    std::filesystem::path base_dir = {});

  bool has(const std::string& key) const { return raw.contains(key); }

  GeneratorModel generator() const;
  std::optional<DNormSpec> norm() const;
  std::vector<std::size_t> grids() const;
  std::size_t n_paths() const;
  std::uint64_t seed() const;
  void set_seed(std::uint64_t seed) { raw["seed"] = seed; }
  std::vector<double> probe_points() const;
  std::size_t fine_grid() const;
  PathKind kind() const;
  double censor_floor() const;
  double tail_threshold() const;
  std::filesystem::path output_dir() const;
  void set_output_dir(const std::filesystem::path& dir) {
    raw["output_dir"] = dir.string();
  }
  std::vector<double> lambda_sweep() const;
};

void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

/// Long-format path table: `t,value,path_id,kind,seed`.
std::string paths_to_csv(std::span<const PathSample> paths);

struct ObservationRow {
  double s = 0.0;
  double value = 0.0;
};

/// Reads a two-column observation CSV with header `s,value`.
std::vector<ObservationRow> read_observation_csv(
    const std::filesystem::path& path);

/// Machine-readable failure record printed by the CLI on any error.
nlohmann::json error_record(const std::string& type,
                            const std::string& message);

}  // namespace maxlin

#endif  // MAXLIN_IO_HPP
