/*
 * Copyright 2026 The wsfd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <array>

#include "wsfd/grid.hpp"

namespace wsfd {

/// Per-axis second-derivative weights (units 1/m^2) for the 25-point
/// operator: index m = 0..4 is the distance from the center cell.
struct StencilCoefficients {
  std::array<double, 5> cx{};
  std::array<double, 5> cy{};
  std::array<double, 5> cz{};

  double center_sum() const { return cx[0] + cy[0] + cz[0]; }

  /// A second-derivative stencil annihilates constants:
  /// c0 + 2*(c1+c2+c3+c4) == 0 for every axis, to 1e-12 relative.
  void validate() const;
};

/// Standard central-difference weights divided by the squared spacing.
/// Only order 8 is supported.
StencilCoefficients make_coefficients(const Grid3D& grid, int order);

}  // namespace wsfd
