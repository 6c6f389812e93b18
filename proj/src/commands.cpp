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

#include "maxlin/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxlin/maxlinear.hpp"
#include "maxlin/moments.hpp"
#include "maxlin/parallel.hpp"
#include "maxlin/rng.hpp"

namespace maxlin {

namespace {

std::filesystem::path prepare_output_dir(const ExperimentConfig& cfg) {
  const std::filesystem::path dir = cfg.output_dir();
  std::filesystem::create_directories(dir);
  return dir;
}

void write_meta(const std::filesystem::path& dir, const std::string& command,
                const ExperimentConfig& cfg) {
  nlohmann::json meta{{"schema", kOutputSchemaVersion},
                      {"command", command},
                      {"config", cfg.raw}};
  write_text_file(dir / (command + "_meta.json"), meta.dump(2) + "\n");
}

/// Type-7 quantile of a sorted sample.
double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
  const double h = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

std::size_t exact_index(std::span<const double> sorted_points, double value) {
  const auto it =
      std::lower_bound(sorted_points.begin(), sorted_points.end(), value);
  if (it == sorted_points.end() || *it != value) {
    throw std::logic_error("point lookup failed");
  }
  return static_cast<std::size_t>(it - sorted_points.begin());
}

/// max(left_obs / wl, right_obs / wr) with the x/0 = -inf convention.
double two_point_reconstruction(double left_obs, double right_obs, double wl,
                                double wr) {
  double best = -std::numeric_limits<double>::infinity();
  if (wl > 0.0) best = std::max(best, left_obs / wl);
  if (wr > 0.0) best = std::max(best, right_obs / wr);
  return best;
}

struct CellTable {
  // per evaluation point: the union indices of the cell endpoints and the
  // two active weights
  std::vector<std::size_t> left_index;
  std::vector<std::size_t> right_index;
  std::vector<double> left_weight;
  std::vector<double> right_weight;
};

CellTable build_cell_table(const WeightFamily& weights,
                           std::span<const double> eval_points,
                           std::span<const double> union_points) {
  const Grid& grid = weights.grid();
  CellTable table;
  const std::size_t m = eval_points.size();
  table.left_index.resize(m);
  table.right_index.resize(m);
  table.left_weight.resize(m);
  table.right_weight.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto cw = weights.cell_weights(eval_points[j]);
    table.left_index[j] = exact_index(union_points, grid.point(cw.cell - 1));
    table.right_index[j] = exact_index(union_points, grid.point(cw.cell));
    table.left_weight[j] = cw.left;
    table.right_weight[j] = cw.right;
  }
  return table;
}

}  // namespace

void run_simulate(const ExperimentConfig& cfg, unsigned workers) {
  const GeneratorModel model = cfg.generator();
  const PathKind kind = cfg.kind();
  const std::size_t n_paths = cfg.n_paths();
  std::vector<double> points;
  if (cfg.has("points")) {
    points = cfg.raw.at("points").get<std::vector<double>>();
  } else {
    points = default_fine_grid(cfg.fine_grid());
  }

  std::vector<PathSample> paths;
  if (!points.empty()) {
    paths = simulate_batch(model, points, kind, n_paths, cfg.seed(), workers,
                           cfg.censor_floor());
  }
  const std::filesystem::path dir = prepare_output_dir(cfg);
  write_text_file(dir / "paths.csv", paths_to_csv(paths));
  write_meta(dir, "simulate", cfg);
}

void run_reconstruct(const ExperimentConfig& cfg, unsigned workers) {
  if (!cfg.has("observations")) {
    throw std::invalid_argument("config is missing \"observations\"");
  }
  std::filesystem::path obs_path =
      cfg.raw.at("observations").get<std::string>();
  if (obs_path.is_relative() && !cfg.base_dir.empty()) {
    obs_path = cfg.base_dir / obs_path;
  }
  const std::vector<ObservationRow> rows = read_observation_csv(obs_path);

  std::vector<double> grid_points;
  if (cfg.has("grid_points")) {
    grid_points = cfg.raw.at("grid_points").get<std::vector<double>>();
  } else {
    for (const ObservationRow& r : rows) grid_points.push_back(r.s);
    std::sort(grid_points.begin(), grid_points.end());
  }
  Grid grid(grid_points);

  ObservationVector obs{grid, std::vector<double>(grid.size()), cfg.kind()};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    bool found = false;
    for (const ObservationRow& r : rows) {
      if (std::abs(r.s - grid.point(i)) <= 1e-12) {
        obs.values[i] = r.value;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("no observation for grid point " +
                                  format_double(grid.point(i)));
    }
  }

  WeightFamily weights = [&]() {
    if (cfg.has("generator")) return build_weights(cfg.generator(), grid);
    if (const auto norm = cfg.norm()) return build_weights(*norm, grid);
    throw std::invalid_argument(
        "config needs \"generator\" or \"norm\" for the pair norms");
  }();

  std::vector<double> eval_points;
  if (cfg.has("eval_points")) {
    eval_points = cfg.raw.at("eval_points").get<std::vector<double>>();
  } else {
    eval_points = default_fine_grid(cfg.fine_grid());
  }

  std::vector<double> values(eval_points.size());
  parallel_for(eval_points.size(), workers, [&](std::size_t j) {
    values[j] = reconstruct(weights, obs, eval_points[j]);
  });

  std::string csv = "t,reconstructed\n";
  for (std::size_t j = 0; j < eval_points.size(); ++j) {
    csv += format_double(eval_points[j]);
    csv += ',';
    csv += format_double(values[j]);
    csv += '\n';
  }
  const std::filesystem::path dir = prepare_output_dir(cfg);
  write_text_file(dir / "reconstruction.csv", csv);
  write_meta(dir, "reconstruct", cfg);
}

void run_convergence(const ExperimentConfig& cfg, unsigned workers) {
  const GeneratorModel model = cfg.generator();
  const std::vector<std::size_t> ds = cfg.grids();
  const std::size_t n_paths = cfg.n_paths();
  const std::uint64_t base_seed = cfg.seed();
  const std::vector<double> fine = default_fine_grid(cfg.fine_grid());

  std::vector<Grid> grids;
  grids.reserve(ds.size());
  for (std::size_t d : ds) grids.push_back(Grid::Uniform(d));

  // Simulation points: the fine grid plus every grid's points, so each path
  // carries both its observations and the evaluation values.
  std::vector<double> union_points = fine;
  for (const Grid& g : grids) {
    union_points.insert(union_points.end(), g.points().begin(),
                        g.points().end());
  }
  std::sort(union_points.begin(), union_points.end());
  union_points.erase(std::unique(union_points.begin(), union_points.end()),
                     union_points.end());
  std::vector<std::size_t> fine_index(fine.size());
  for (std::size_t j = 0; j < fine.size(); ++j) {
    fine_index[j] = exact_index(union_points, fine[j]);
  }

  std::vector<WeightFamily> weights;
  std::vector<CellTable> tables;
  weights.reserve(grids.size());
  tables.reserve(grids.size());
  for (const Grid& g : grids) {
    weights.push_back(build_weights(model, g));
    tables.push_back(build_cell_table(weights.back(), fine, union_points));
  }

  const std::size_t n_grids = grids.size();
  std::vector<double> sup_smsp(n_paths * n_grids);
  std::vector<double> sup_sgpp(n_paths * n_grids);
  std::vector<double> sup_gen(n_paths * n_grids);
  const double censor_floor = cfg.censor_floor();

  parallel_for(n_paths, workers, [&](std::size_t p) {
    const PathSample eta =
        simulate_smsp(model, union_points, derive_seed(base_seed, 3 * p));
    const PathSample v = simulate_sgpp(
        model, union_points, derive_seed(base_seed, 3 * p + 1), censor_floor);
    std::vector<double> z(union_points.size());
    Rng rng(derive_seed(base_seed, 3 * p + 2));
    model.sample_row(union_points, rng, z);

    for (std::size_t gi = 0; gi < n_grids; ++gi) {
      const CellTable& tab = tables[gi];
      double worst_eta = 0.0;
      double worst_v = 0.0;
      double worst_z = 0.0;
      for (std::size_t j = 0; j < fine.size(); ++j) {
        const std::size_t li = tab.left_index[j];
        const std::size_t ri = tab.right_index[j];
        const double wl = tab.left_weight[j];
        const double wr = tab.right_weight[j];
        const double eta_hat =
            two_point_reconstruction(eta.values[li], eta.values[ri], wl, wr);
        const double v_hat =
            two_point_reconstruction(v.values[li], v.values[ri], wl, wr);
        const double z_hat = std::max(wl * z[li], wr * z[ri]);
        worst_eta =
            std::max(worst_eta, std::abs(eta_hat - eta.values[fine_index[j]]));
        worst_v = std::max(worst_v, std::abs(v_hat - v.values[fine_index[j]]));
        worst_z = std::max(worst_z, std::abs(z_hat - z[fine_index[j]]));
      }
      sup_smsp[p * n_grids + gi] = worst_eta;
      sup_sgpp[p * n_grids + gi] = worst_v;
      sup_gen[p * n_grids + gi] = worst_z;
    }
  });

  const std::filesystem::path dir = prepare_output_dir(cfg);
  const auto write_table = [&](const std::string& file,
                               const std::vector<double>& sup_errors) {
    std::string csv = "d,median_sup_error,q90_sup_error\n";
    for (std::size_t gi = 0; gi < n_grids; ++gi) {
      std::vector<double> column(n_paths);
      for (std::size_t p = 0; p < n_paths; ++p) {
        column[p] = sup_errors[p * n_grids + gi];
      }
      std::sort(column.begin(), column.end());
      csv += std::to_string(ds[gi]);
      csv += ',';
      csv += format_double(quantile(column, 0.5));
      csv += ',';
      csv += format_double(quantile(column, 0.9));
      csv += '\n';
    }
    write_text_file(dir / file, csv);
  };
  write_table("convergence_smsp.csv", sup_smsp);
  write_table("convergence_sgpp.csv", sup_sgpp);
  write_table("convergence_generator.csv", sup_gen);
  write_meta(dir, "convergence", cfg);
}

void run_mse(const ExperimentConfig& cfg, unsigned workers) {
  const GeneratorModel model = cfg.generator();
  const std::vector<std::size_t> ds = cfg.grids();
  const std::vector<double> probes = cfg.probe_points();
  const std::size_t n_paths = cfg.n_paths();
  const std::uint64_t base_seed = cfg.seed();
  const PathKind kind = cfg.kind();
  const double tail_c = cfg.tail_threshold();
  const double censor_floor = cfg.censor_floor();
  QuadratureConfig quad;
  quad.abs_tol = cfg.raw.value("abs_tol", 1e-9);

  std::string csv = "t,d,mse_quadrature,mse_montecarlo,mc_stderr\n";
  std::size_t row_index = 0;
  for (double t : probes) {
    for (std::size_t d : ds) {
      const Grid grid = Grid::Uniform(d);
      const WeightFamily weights = build_weights(model, grid);
      const double mse_quad =
          kind == PathKind::kSmsp
              ? smsp_mse(model, weights, t, quad)
              : sgpp_conditional_mse(model, weights, t, tail_c, quad);

      std::vector<double> points(grid.points().begin(), grid.points().end());
      points.push_back(t);
      std::sort(points.begin(), points.end());
      points.erase(std::unique(points.begin(), points.end()), points.end());
      const std::size_t t_index = exact_index(points, t);

      std::vector<double> sq_err(n_paths, 0.0);
      std::vector<char> kept(n_paths, 1);
      parallel_for(n_paths, workers, [&](std::size_t p) {
        const std::uint64_t seed =
            derive_seed(base_seed, row_index * n_paths + p);
        const PathSample path =
            kind == PathKind::kSmsp
                ? simulate_smsp(model, points, seed)
                : simulate_sgpp(model, points, seed, censor_floor);
        const ObservationVector obs = restrict_to_grid(path, grid);
        const double value = path.values[t_index];
        const double hat = reconstruct(weights, obs, t);
        if (kind == PathKind::kSgpp && !(value > tail_c && hat > tail_c)) {
          kept[p] = 0;
          return;
        }
        const double e = value - hat;
        sq_err[p] = e * e;
      });

      std::size_t n_kept = 0;
      double mean = 0.0;
      for (std::size_t p = 0; p < n_paths; ++p) {
        if (kept[p]) {
          ++n_kept;
          mean += sq_err[p];
        }
      }
      if (n_kept == 0) {
        throw std::runtime_error("no Monte-Carlo survivors above threshold");
      }
      mean /= static_cast<double>(n_kept);
      double var = 0.0;
      for (std::size_t p = 0; p < n_paths; ++p) {
        if (kept[p]) {
          const double dlt = sq_err[p] - mean;
          var += dlt * dlt;
        }
      }
      const double stderr_mc =
          n_kept > 1 ? std::sqrt(var / (static_cast<double>(n_kept - 1) *
                                        static_cast<double>(n_kept)))
                     : 0.0;

      csv += format_double(t);
      csv += ',';
      csv += std::to_string(d);
      csv += ',';
      csv += format_double(mse_quad);
      csv += ',';
      csv += format_double(mean);
      csv += ',';
      csv += format_double(stderr_mc);
      csv += '\n';
      ++row_index;
    }
  }

  const std::filesystem::path dir = prepare_output_dir(cfg);
  write_text_file(dir / "mse.csv", csv);
  write_meta(dir, "mse", cfg);
}

void run_moments(const ExperimentConfig& cfg, unsigned /*workers*/) {
  QuadratureConfig quad;
  quad.abs_tol = cfg.raw.value("abs_tol", 1e-9);

  nlohmann::json records = nlohmann::json::array();
  const auto add_covariance = [&](const DNormSpec& spec) {
    const PairNorm pn = PairNorm::FromDNorm(spec);
    const double value = msm_cross_moment(pn, quad);
    nlohmann::json params{{"norm", spec.name()}};
    if (spec.family() == DNormFamily::kLogistic) {
      params["lambda"] = spec.lambda();
    }
    records.push_back({{"op", "msm_cross_moment"},
                       {"params", params},
                       {"value", value},
                       {"cov", value - 1.0},
                       {"abs_tol", quad.abs_tol}});
  };
  add_covariance(DNormSpec::Sum());
  for (double lambda : cfg.lambda_sweep()) {
    add_covariance(DNormSpec::Logistic(lambda));
  }
  add_covariance(DNormSpec::Max());

  if (cfg.has("conditional")) {
    for (const nlohmann::json& req : cfg.raw.at("conditional")) {
      const DNormSpec spec =
          DNormSpec::from_json(req.at("norm"), cfg.base_dir);
      const double u = req.at("u").get<double>();
      const double v = req.at("v").get<double>();
      const PairNorm pn = PairNorm::FromDNorm(spec);
      nlohmann::json params{{"norm", spec.name()}, {"u", u}, {"v", v}};
      if (spec.family() == DNormFamily::kLogistic) {
        params["lambda"] = spec.lambda();
      }
      records.push_back({{"op", "gpd_joint_survival"},
                         {"params", params},
                         {"value", gpd_joint_survival(pn, u, v)},
                         {"abs_tol", quad.abs_tol}});
      records.push_back({{"op", "gpd_cond_second_moment"},
                         {"params", params},
                         {"value", gpd_cond_second_moment(pn, u, v, quad)},
                         {"abs_tol", quad.abs_tol}});
      records.push_back({{"op", "gpd_cond_cross_moment"},
                         {"params", params},
                         {"value", gpd_cond_cross_moment(pn, u, v, quad)},
                         {"abs_tol", quad.abs_tol}});
    }
  }

  nlohmann::json out{{"schema", kOutputSchemaVersion}, {"records", records}};
  const std::filesystem::path dir = prepare_output_dir(cfg);
  write_text_file(dir / "moments.json", out.dump(2) + "\n");
  write_meta(dir, "moments", cfg);
}

}  // namespace maxlin
