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

#ifndef HCWALK_FIT_HPP
#define HCWALK_FIT_HPP

#include <optional>
#include <span>
#include <string_view>

namespace hcwalk {

enum class FitModel { PowerLaw, Exponential };

std::string_view fit_model_name(FitModel m);
std::optional<FitModel> parse_fit_model(std::string_view name);

// y ~ coefficient * x^exponent (PowerLaw) or coefficient * exp(exponent * x)
// (Exponential), fitted by least squares on ln y.
struct FitResult {
  FitModel model = FitModel::PowerLaw;
  double coefficient = 0.0;
  double exponent = 0.0;  // power n, or rate
  double residual = 0.0;  // RMS of ln y residuals
  int points = 0;
};

inline constexpr int kMinFitPoints = 4;

// Throws ParameterError with fewer than four points, mismatched spans,
// non-positive y, non-positive x for PowerLaw, or a degenerate x range.
FitResult fit_scaling(std::span<const double> x, std::span<const double> y, FitModel model);

}  // namespace hcwalk

#endif  // HCWALK_FIT_HPP
