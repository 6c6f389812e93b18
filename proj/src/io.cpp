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

#include "maxlin/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace maxlin {

std::string format_double(double v) {
  // Shortest form that round-trips; independent of locale and stream state.
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  nlohmann::json j;
  in >> j;
  return from_json(std::move(j), path.parent_path());
}

ExperimentConfig ExperimentConfig::from_json(nlohmann::json j,
                                             std::filesystem::path base_dir) {
  ExperimentConfig cfg;
  cfg.raw = std::move(j);
  cfg.base_dir = std::move(base_dir);
  return cfg;
}

GeneratorModel ExperimentConfig::generator() const {
  if (!raw.contains("generator")) {
    throw std::invalid_argument("config is missing \"generator\"");
  }
  return GeneratorModel::from_json(raw.at("generator"));
}

std::optional<DNormSpec> ExperimentConfig::norm() const {
  if (!raw.contains("norm")) return std::nullopt;
  return DNormSpec::from_json(raw.at("norm"), base_dir);
}

std::vector<std::size_t> ExperimentConfig::grids() const {
  if (!raw.contains("grids")) {
    throw std::invalid_argument("config is missing \"grids\"");
  }
  const auto values = raw.at("grids").get<std::vector<std::int64_t>>();
  std::vector<std::size_t> grids;
  grids.reserve(values.size());
  for (std::int64_t d : values) {
    if (d < 1) throw std::invalid_argument("grid cell counts must be >= 1");
    grids.push_back(static_cast<std::size_t>(d));
  }
  if (grids.empty()) throw std::invalid_argument("\"grids\" must be nonempty");
  return grids;
}

std::size_t ExperimentConfig::n_paths() const {
  const std::int64_t n = raw.value("n_paths", std::int64_t{0});
  if (n < 1) throw std::invalid_argument("config needs n_paths >= 1");
  return static_cast<std::size_t>(n);
}

std::uint64_t ExperimentConfig::seed() const {
  return raw.value("seed", std::uint64_t{0});
}

std::vector<double> ExperimentConfig::probe_points() const {
  std::vector<double> probes =
      raw.value("probe_points", std::vector<double>{0.1, 0.3, 0.5, 0.7, 0.9});
  for (double t : probes) {
    if (!(t >= 0.0 && t <= 1.0)) {
      throw std::invalid_argument("probe point outside [0,1]");
    }
  }
  return probes;
}

std::size_t ExperimentConfig::fine_grid() const {
  const std::int64_t n =
      raw.value("fine_grid", static_cast<std::int64_t>(kDefaultFineGridSize));
  if (n < 2) throw std::invalid_argument("fine_grid must be >= 2");
  return static_cast<std::size_t>(n);
}

PathKind ExperimentConfig::kind() const {
  return path_kind_from_name(raw.value("kind", std::string("smsp")));
}

double ExperimentConfig::censor_floor() const {
  return raw.value("censor_floor", kDefaultCensorFloor);
}

double ExperimentConfig::tail_threshold() const {
  const double c = raw.value("tail_threshold", -0.05);
  if (!(c < 0.0)) throw std::invalid_argument("tail_threshold must be < 0");
  return c;
}

std::filesystem::path ExperimentConfig::output_dir() const {
  if (!raw.contains("output_dir")) {
    throw std::invalid_argument("config is missing \"output_dir\"");
  }
  std::filesystem::path dir = raw.at("output_dir").get<std::string>();
  if (dir.is_relative() && !base_dir.empty()) dir = base_dir / dir;
  return dir;
}

std::vector<double> ExperimentConfig::lambda_sweep() const {
  std::vector<double> lambdas =
      raw.value("lambda_sweep", std::vector<double>{1.5, 2.0, 4.0, 8.0});
  for (double l : lambdas) {
    if (!(l >= 1.0)) throw std::invalid_argument("lambda sweep needs l >= 1");
  }
  return lambdas;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << content;
}

std::string paths_to_csv(std::span<const PathSample> paths) {
  std::string csv = "t,value,path_id,kind,seed\n";
  for (std::size_t id = 0; id < paths.size(); ++id) {
    const PathSample& p = paths[id];
    for (std::size_t j = 0; j < p.points.size(); ++j) {
      csv += format_double(p.points[j]);
      csv += ',';
      csv += format_double(p.values[j]);
      csv += ',';
      csv += std::to_string(id);
      csv += ',';
      csv += path_kind_name(p.kind);
      csv += ',';
      csv += std::to_string(p.seed);
      csv += '\n';
    }
  }
  return csv;
}

std::vector<ObservationRow> read_observation_csv(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<ObservationRow> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line.rfind("s,", 0) == 0) continue;  // header
    }
    std::stringstream ss(line);
    std::string s_cell;
    std::string v_cell;
    if (!std::getline(ss, s_cell, ',') || !std::getline(ss, v_cell, ',')) {
      throw std::runtime_error("malformed observation row: " + line);
    }
    rows.push_back({std::stod(s_cell), std::stod(v_cell)});
  }
  return rows;
}

nlohmann::json error_record(const std::string& type,
                            const std::string& message) {
  return nlohmann::json{
      {"schema", kOutputSchemaVersion},
      {"error", {{"type", type}, {"message", message}}},
  };
}

}  // namespace maxlin
