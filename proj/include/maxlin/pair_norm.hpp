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

#ifndef MAXLIN_PAIR_NORM_HPP
#define MAXLIN_PAIR_NORM_HPP

#include <functional>
#include <string>
#include <utility>

#include "maxlin/dnorm.hpp"
#include "maxlin/generator.hpp"

namespace maxlin {

/// A bivariate D-norm evaluator (x, y) -> ||(x, y)||. The first argument
/// belongs to the left grid point when the norm describes an adjacent pair.
class PairNorm {
 public:
  PairNorm(std::string name, std::function<double(double, double)> eval)
      : name_(std::move(name)), eval_(std::move(eval)) {}

  /// Closed-form or empirical norm applied to (x, y).
  static PairNorm FromDNorm(const DNormSpec& spec);

  /// Generator-process oracle norm of (Z_s, Z_t).
  static PairNorm FromGenerator(const GeneratorModel& model, double s,
                                double t);

  double operator()(double x, double y) const { return eval_(x, y); }

  /// Same norm with the coordinates exchanged.
  PairNorm swapped() const;

  const std::string& name() const { return name_; }

  /// Probes standardization ||(1,0)|| = ||(0,1)|| = 1 and the sandwich
  /// between max and sum norm on a few values; throws if violated.
  void validate(double tol = 1e-8) const;

 private:
  std::string name_;
  std::function<double(double, double)> eval_;
};

}  // namespace maxlin

#endif  // MAXLIN_PAIR_NORM_HPP
