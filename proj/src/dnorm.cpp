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

#include "maxlin/dnorm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "maxlin/rng.hpp"

namespace maxlin {

namespace {

void check_finite(std::span<const double> x) {
  for (double v : x) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite input");
  }
}

}  // namespace

DNormSpec DNormSpec::Sum() { return DNormSpec(DNormFamily::kSum, 1.0); }

DNormSpec DNormSpec::Max() { return DNormSpec(DNormFamily::kMax, 0.0); }

DNormSpec DNormSpec::Logistic(double lambda) {
  if (!(lambda >= 1.0)) {
    throw std::invalid_argument("logistic norm requires lambda >= 1");
  }
  return DNormSpec(DNormFamily::kLogistic, lambda);
}

DNormSpec DNormSpec::Empirical(std::vector<double> samples, std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("dimension must be >= 1");
  if (samples.empty() || samples.size() % dim != 0) {
    throw std::invalid_argument("sample matrix size must be a multiple of dim");
  }
  const std::size_t n = samples.size() / dim;
  for (double v : samples) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("generator samples must be nonnegative");
    }
  }
  // Each column must be consistent with a unit-mean generator coordinate.
  for (std::size_t j = 0; j < dim; ++j) {
    double mean = 0.0;
    for (std::size_t k = 0; k < n; ++k) mean += samples[k * dim + j];
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double dlt = samples[k * dim + j] - mean;
      var += dlt * dlt;
    }
    const double se =
        n > 1 ? std::sqrt(var / (static_cast<double>(n) *
                                 static_cast<double>(n - 1)))
              : 0.0;
    if (std::abs(mean - 1.0) > 3.0 * se + 1e-12) {
      throw std::invalid_argument(
          "empirical generator column mean is not consistent with 1");
    }
  }
  DNormSpec spec(DNormFamily::kEmpirical, 0.0);
  spec.sample_dim_ = dim;
  spec.samples_ = std::make_shared<const std::vector<double>>(std::move(samples));
  return spec;
}

std::size_t DNormSpec::sample_count() const {
  return samples_ ? samples_->size() / sample_dim_ : 0;
}

NormValue DNormSpec::eval(std::span<const double> x) const {
  if (x.empty()) throw std::invalid_argument("dimension must be >= 1");
  check_finite(x);
  switch (family_) {
    case DNormFamily::kSum: {
      double s = 0.0;
      for (double v : x) s += std::abs(v);
      return {s, 0.0};
    }
    case DNormFamily::kMax: {
      double m = 0.0;
      for (double v : x) m = std::max(m, std::abs(v));
      return {m, 0.0};
    }
    case DNormFamily::kLogistic: {
      // Factor out the largest entry to keep powers in range.
      double m = 0.0;
      for (double v : x) m = std::max(m, std::abs(v));
      if (m == 0.0) return {0.0, 0.0};
      double s = 0.0;
      for (double v : x) s += std::pow(std::abs(v) / m, lambda_);
      return {m * std::pow(s, 1.0 / lambda_), 0.0};
    }
    case DNormFamily::kEmpirical: {
      if (x.size() != sample_dim_) {
        throw std::invalid_argument("dimension mismatch with sample matrix");
      }
      const std::vector<double>& z = *samples_;
      const std::size_t n = sample_count();
      double mean = 0.0;
      double m2 = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        double row_max = 0.0;
        const double* row = z.data() + k * sample_dim_;
        for (std::size_t j = 0; j < sample_dim_; ++j) {
          row_max = std::max(row_max, std::abs(x[j]) * row[j]);
        }
        // Welford update keeps the variance accumulation stable.
        const double delta = row_max - mean;
        mean += delta / static_cast<double>(k + 1);
        m2 += delta * (row_max - mean);
      }
      const double se =
          n > 1 ? std::sqrt(m2 / (static_cast<double>(n - 1) *
                                  static_cast<double>(n)))
                : 0.0;
      return {mean, se};
    }
  }
  throw std::logic_error("unreachable");
}

NormValue DNormSpec::extremal_coefficient(std::size_t dim) const {
  if (dim == 0) throw std::invalid_argument("dimension must be >= 1");
  std::vector<double> ones(dim, 1.0);
  return eval(ones);
}

std::string DNormSpec::name() const {
  switch (family_) {
    case DNormFamily::kSum:
      return "sum";
    case DNormFamily::kMax:
      return "max";
    case DNormFamily::kLogistic:
      return "logistic";
    case DNormFamily::kEmpirical:
      return "empirical";
  }
  return {};
}

nlohmann::json DNormSpec::to_json() const {
  if (family_ == DNormFamily::kEmpirical) {
    throw std::invalid_argument(
        "empirical spec needs a samples_ref path for serialization");
  }
  nlohmann::json j;
  j["family"] = name();
  if (family_ == DNormFamily::kLogistic) j["lambda"] = lambda_;
  return j;
}

nlohmann::json DNormSpec::to_json(const std::filesystem::path& samples_ref) const {
  if (family_ != DNormFamily::kEmpirical) return to_json();
  save_samples_csv(samples_ref, *samples_, sample_dim_);
  nlohmann::json j;
  j["family"] = name();
  j["samples_ref"] = samples_ref.string();
  return j;
}

DNormSpec DNormSpec::from_json(const nlohmann::json& j,
                               const std::filesystem::path& base_dir) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "sum") return Sum();
  if (family == "max") return Max();
  if (family == "logistic") return Logistic(j.at("lambda").get<double>());
  if (family == "empirical") {
    std::filesystem::path ref = j.at("samples_ref").get<std::string>();
    if (ref.is_relative() && !base_dir.empty()) ref = base_dir / ref;
    std::size_t dim = 0;
    std::vector<double> samples = load_samples_csv(ref, dim);
    return Empirical(std::move(samples), dim);
  }
  throw std::invalid_argument("unknown D-norm family: " + family);
}

std::vector<double> logistic_generator_samples(double lambda, std::size_t dim,
                                               std::size_t n_samples,
                                               std::uint64_t seed) {
  if (!(lambda > 1.0)) {
    throw std::invalid_argument(
        "logistic generator construction requires lambda > 1");
  }
  if (dim == 0 || n_samples == 0) {
    throw std::invalid_argument("need dim >= 1 and n_samples >= 1");
  }
  const double scale = 1.0 / std::tgamma(1.0 - 1.0 / lambda);
  Rng rng(seed);
  std::vector<double> samples(n_samples * dim);
  for (double& s : samples) {
    const double frechet = std::pow(-std::log(rng.uniform_pos()), -1.0 / lambda);
    s = scale * frechet;
  }
  return samples;
}

void save_samples_csv(const std::filesystem::path& path,
                      std::span<const double> samples, std::size_t dim) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  const std::size_t n = samples.size() / dim;
  out.precision(17);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (j) out << ',';
      out << samples[k * dim + j];
    }
    out << '\n';
  }
}

std::vector<double> load_samples_csv(const std::filesystem::path& path,
                                     std::size_t& dim_out) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<double> samples;
  std::size_t dim = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::size_t count = 0;
    while (std::getline(ss, cell, ',')) {
      samples.push_back(std::stod(cell));
      ++count;
    }
    if (dim == 0) {
      dim = count;
    } else if (count != dim) {
      throw std::runtime_error("ragged sample matrix in " + path.string());
    }
  }
  if (dim == 0) throw std::runtime_error("empty sample matrix " + path.string());
  dim_out = dim;
  return samples;
}

}  // namespace maxlin
