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

#include "maxlin/pair_norm.hpp"

#include <cmath>
#include <stdexcept>

namespace maxlin {

PairNorm PairNorm::FromDNorm(const DNormSpec& spec) {
  return PairNorm(spec.name(), [spec](double x, double y) {
    const double v[2] = {x, y};
    return spec.eval(v).value;
  });
}

PairNorm PairNorm::FromGenerator(const GeneratorModel& model, double s,
                                 double t) {
  return PairNorm("generator", [model, s, t](double x, double y) {
    return model.bivariate_norm(s, t, x, y);
  });
}

PairNorm PairNorm::swapped() const {
  auto eval = eval_;
  return PairNorm(name_ + "_swapped",
                  [eval](double x, double y) { return eval(y, x); });
}

void PairNorm::validate(double tol) const {
  const double e1 = eval_(1.0, 0.0);
  const double e2 = eval_(0.0, 1.0);
  if (std::abs(e1 - 1.0) > tol || std::abs(e2 - 1.0) > tol) {
    throw std::invalid_argument("pair norm is not standardized: ||(1,0)||=" +
                                std::to_string(e1) + ", ||(0,1)||=" +
                                std::to_string(e2));
  }
  for (double x : {0.3, 1.0}) {
    for (double y : {0.7, 1.0}) {
      const double v = eval_(x, y);
      if (v < std::max(x, y) - tol || v > x + y + tol) {
        throw std::invalid_argument(
            "pair norm violates the max/sum sandwich");
      }
    }
  }
}

}  // namespace maxlin
