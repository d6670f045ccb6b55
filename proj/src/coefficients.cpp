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

#include "wsfd/coefficients.hpp"

#include <cmath>
#include <stdexcept>

namespace wsfd {

namespace {

// 8th-order central difference weights for d^2/dx^2, unit spacing.
constexpr std::array<double, 5> kOrder8{-205.0 / 72.0, 8.0 / 5.0, -1.0 / 5.0,
                                        8.0 / 315.0, -1.0 / 560.0};

std::array<double, 5> scaled(double h) {
  std::array<double, 5> c{};
  const double inv_h2 = 1.0 / (h * h);
  for (int m = 0; m < 5; ++m) c[m] = kOrder8[m] * inv_h2;
  return c;
}

void check_axis(const std::array<double, 5>& c) {
  const double sum = c[0] + 2.0 * (c[1] + c[2] + c[3] + c[4]);
  if (std::abs(sum) > 1e-12 * std::abs(c[0])) {
    throw std::invalid_argument("stencil weights do not annihilate constants");
  }
}

}  // namespace

void StencilCoefficients::validate() const {
  check_axis(cx);
  check_axis(cy);
  check_axis(cz);
}

StencilCoefficients make_coefficients(const Grid3D& grid, int order) {
  if (order != 8) {
    throw std::invalid_argument("make_coefficients: only order 8 is supported");
  }
  grid.validate();
  StencilCoefficients c;
  c.cx = scaled(grid.dx);
  c.cy = scaled(grid.dy);
  c.cz = scaled(grid.dz);
  c.validate();
  return c;
}

}  // namespace wsfd
