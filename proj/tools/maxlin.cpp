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

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "maxlin/commands.hpp"

namespace {

struct CliOptions {
  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  unsigned workers = 1;
  std::string out_dir;
};

void add_common_options(CLI::App* cmd, CliOptions& opts) {
  cmd->add_option("--config", opts.config_path, "experiment config (JSON)")
      ->required();
  cmd->add_option("--seed", opts.seed, "override the config seed")
      ->each([&opts](const std::string&) { opts.seed_set = true; });
  cmd->add_option("--workers", opts.workers, "worker thread count")
      ->default_val(1u);
  cmd->add_option("--out", opts.out_dir, "override the config output_dir");
}

int dispatch(const CliOptions& opts,
             const std::function<void(const maxlin::ExperimentConfig&,
                                      unsigned)>& command) {
  try {
    maxlin::ExperimentConfig cfg =
        maxlin::ExperimentConfig::load(opts.config_path);
    if (opts.seed_set) cfg.set_seed(opts.seed);
    if (!opts.out_dir.empty()) cfg.set_output_dir(opts.out_dir);
    if (opts.workers == 0) {
      throw std::invalid_argument("--workers must be >= 1");
    }
    command(cfg, opts.workers);
    return 0;
  } catch (const std::exception& e) {
    std::cout << maxlin::error_record(typeid(e).name(), e.what()).dump()
              << std::endl;
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "max-linear reconstruction of max-stable and generalized Pareto "
      "processes"};
  app.require_subcommand(1);

  CliOptions opts;
  int exit_code = 0;

  const auto wire = [&](const char* name, const char* help, auto runner) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_common_options(cmd, opts);
    cmd->callback([&, runner]() { exit_code = dispatch(opts, runner); });
  };
  wire("simulate", "draw process paths and write them as CSV",
       maxlin::run_simulate);
  wire("reconstruct", "max-linear reconstruction from an observation CSV",
       maxlin::run_reconstruct);
  wire("convergence", "sup-error sweep over grid refinements",
       maxlin::run_convergence);
  wire("mse", "quadrature vs Monte-Carlo mean squared error table",
       maxlin::run_mse);
  wire("moments", "covariance and conditional moment tables",
       maxlin::run_moments);

  CLI11_PARSE(app, argc, argv);
  return exit_code;
}
