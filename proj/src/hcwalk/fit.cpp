// Copyright 2026 The hcwalk Authors
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

#include "hcwalk/fit.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "hcwalk/errors.hpp"

namespace hcwalk {

std::string_view fit_model_name(FitModel m) {
  return m == FitModel::PowerLaw ? "power" : "exp";
}

std::optional<FitModel> parse_fit_model(std::string_view name) {
  if (name == "power") return FitModel::PowerLaw;
  if (name == "exp") return FitModel::Exponential;
  return std::nullopt;
}

FitResult fit_scaling(std::span<const double> x, std::span<const double> y, FitModel model) {
  if (x.size() != y.size()) throw ParameterError("fit: x and y differ in length");
  if (x.size() < static_cast<std::size_t>(kMinFitPoints))
    throw ParameterError("fit: need at least " + std::to_string(kMinFitPoints) +
                         " points, got " + std::to_string(x.size()));

  const std::size_t n = x.size();
  std::vector<double> u(n);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(y[i] > 0.0)) throw ParameterError("fit: y values must be positive");
    if (model == FitModel::PowerLaw && !(x[i] > 0.0))
      throw ParameterError("fit: power-law x values must be positive");
    u[i] = model == FitModel::PowerLaw ? std::log(x[i]) : x[i];
    v[i] = std::log(y[i]);
  }

  double mu = 0.0;
  double mv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mu += u[i];
    mv += v[i];
  }
  mu /= static_cast<double>(n);
  mv /= static_cast<double>(n);
  double suu = 0.0;
  double suv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    suu += (u[i] - mu) * (u[i] - mu);
    suv += (u[i] - mu) * (v[i] - mv);
  }
  if (!(suu > 0.0)) throw ParameterError("fit: x values are all equal");

  FitResult r;
  r.model = model;
  r.points = static_cast<int>(n);
  r.exponent = suv / suu;
  const double intercept = mv - r.exponent * mu;
  r.coefficient = std::exp(intercept);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = v[i] - (intercept + r.exponent * u[i]);
    ss += e * e;
  }
  r.residual = std::sqrt(ss / static_cast<double>(n));
  return r;
}

}  // namespace hcwalk
