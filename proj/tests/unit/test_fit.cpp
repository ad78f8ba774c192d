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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "hcwalk/errors.hpp"
#include "hcwalk/fit.hpp"

using namespace hcwalk;

TEST_CASE("power law recovers its generator") {
  std::vector<double> x, y;
  for (int d = 10; d <= 100; ++d) {
    x.push_back(d);
    y.push_back(0.7 * std::pow(d, 1.5));
  }
  const FitResult f = fit_scaling(x, y, FitModel::PowerLaw);
  CHECK(std::abs(f.exponent - 1.5) < 1e-12);
  CHECK(std::abs(f.coefficient - 0.7) < 1e-10);
  CHECK(f.residual < 1e-12);
  CHECK(f.points == 91);
}

TEST_CASE("exponential recovers its generator") {
  std::vector<double> x, y;
  for (int q = 4; q <= 12; ++q) {
    x.push_back(q);
    y.push_back(3.0 * std::exp(1.4 * q));
  }
  const FitResult f = fit_scaling(x, y, FitModel::Exponential);
  CHECK(std::abs(f.exponent - 1.4) < 1e-12);
  CHECK(std::abs(f.coefficient - 3.0) < 1e-9);
}

TEST_CASE("fit residual is RMS in log space") {
  const std::vector<double> x = {1, 2, 3, 4};
  const std::vector<double> y = {std::exp(1.0), 1.0, std::exp(1.0), 1.0};
  const FitResult f = fit_scaling(x, y, FitModel::Exponential);
  // ln y = 1,0,1,0 against x: slope -0.2, intercept 1.
  CHECK(f.exponent == doctest::Approx(-0.2));
  double ss = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double e = std::log(y[i]) - (1.0 - 0.2 * x[i]);
    ss += e * e;
  }
  CHECK(f.residual == doctest::Approx(std::sqrt(ss / 4)));
}

TEST_CASE("fit errors") {
  const std::vector<double> three = {1, 2, 3};
  CHECK_THROWS_AS(fit_scaling(three, three, FitModel::PowerLaw), ParameterError);
  const std::vector<double> x = {1, 2, 3, 4};
  const std::vector<double> bad = {1, 2, 0, 4};
  CHECK_THROWS_AS(fit_scaling(x, bad, FitModel::PowerLaw), ParameterError);
  const std::vector<double> short_y = {1, 2, 3, 4, 5};
  CHECK_THROWS_AS(fit_scaling(x, short_y, FitModel::PowerLaw), ParameterError);
  CHECK(parse_fit_model("power") == FitModel::PowerLaw);
  CHECK(parse_fit_model("exp") == FitModel::Exponential);
  CHECK_FALSE(parse_fit_model("cubic"));
}
