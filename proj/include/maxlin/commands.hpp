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

#ifndef MAXLIN_COMMANDS_HPP
#define MAXLIN_COMMANDS_HPP

#include "maxlin/io.hpp"

namespace maxlin {

/// Batch experiment drivers behind the CLI subcommands. Every command is
/// deterministic given (config, seed): reruns and different worker counts
/// produce byte-identical outputs. All throw on precondition violations.

/// Writes paths.csv (`t,value,path_id,kind,seed`) and paths_meta.json.
void run_simulate(const ExperimentConfig& cfg, unsigned workers);

/// Reads an observation CSV (`s,value`), reconstructs on the evaluation
/// points, writes reconstruction.csv (`t,reconstructed`).
void run_reconstruct(const ExperimentConfig& cfg, unsigned workers);

/// Sup-error convergence sweep over grid refinements for the max-stable,
/// generalized Pareto, and generator reconstructions. Writes
/// convergence_{smsp,sgpp,generator}.csv (`d,median_sup_error,q90_sup_error`).
void run_convergence(const ExperimentConfig& cfg, unsigned workers);

/// Quadrature vs Monte-Carlo mean squared error table; writes mse.csv
/// (`t,d,mse_quadrature,mse_montecarlo,mc_stderr`).
void run_mse(const ExperimentConfig& cfg, unsigned workers);

/// Covariance and conditional-moment tables; writes moments.json.
void run_moments(const ExperimentConfig& cfg, unsigned workers);

}  // namespace maxlin

#endif  // MAXLIN_COMMANDS_HPP
