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

#include "wsfd/grid.hpp"

#include <algorithm>
#include <cmath>

namespace wsfd {

void Grid3D::validate() const {
  if (nx < 1 || ny < 1 || nz < 1) {
    throw config_error("grid: cell counts must be >= 1");
  }
  if (!(dx > 0.0) || !(dy > 0.0) || !(dz > 0.0)) {
    throw config_error("grid: spacings must be > 0");
  }
}

double Grid3D::min_spacing() const { return std::min({dx, dy, dz}); }

EarthModel EarthModel::constant(const Grid3D& grid, float v) {
  EarthModel m;
  m.velocity = Field3D<float>(grid.nx, grid.ny, grid.nz, v);
  return m;
}

void EarthModel::validate(const Grid3D& grid) const {
  if (velocity.nx() != grid.nx || velocity.ny() != grid.ny || velocity.nz() != grid.nz) {
    throw config_error("model: velocity array shape does not match grid");
  }
  for (float v : velocity.data()) {
    if (!(v > 0.0f)) throw config_error("model: velocities must be > 0");
  }
}

bool EarthModel::column_constant() const {
  for (int j = 0; j < velocity.ny(); ++j) {
    for (int i = 0; i < velocity.nx(); ++i) {
      const float v0 = velocity(i, j, 0);
      for (int k = 1; k < velocity.nz(); ++k) {
        if (velocity(i, j, k) != v0) return false;
      }
    }
  }
  return true;
}

void SourceTerm::validate(const Grid3D& grid, int steps) const {
  if (x < 0 || x >= grid.nx || y < 0 || y >= grid.ny || z < 0 || z >= grid.nz) {
    throw config_error("source: coordinates outside grid");
  }
  if (static_cast<int>(trace.size()) < steps) {
    throw config_error("source: trace shorter than step count");
  }
}

void SimConfig::validate() const {
  grid.validate();
  if (!(dt > 0.0)) throw config_error("time: dt must be > 0");
  if (steps < 1) throw config_error("time: steps must be >= 1");
  model.validate(grid);
  source.validate(grid, steps);
}

double cfl_ratio(const SimConfig& cfg) {
  float vmax = 0.0f;
  for (float v : cfg.model.velocity.data()) vmax = std::max(vmax, v);
  return cfg.dt * double(vmax) * std::sqrt(3.0) / cfg.grid.min_spacing();
}

std::vector<float> ricker_trace(int steps, double dt, double peak_frequency,
                                double amplitude, double delay) {
  if (steps < 1) throw config_error("ricker: steps must be >= 1");
  if (!(peak_frequency > 0.0)) throw config_error("ricker: peak frequency must be > 0");
  const double t0 = delay > 0.0 ? delay : 1.0 / peak_frequency;
  std::vector<float> trace(steps);
  for (int n = 1; n <= steps; ++n) {
    const double tau = n * dt - t0;
    const double a = (M_PI * peak_frequency * tau) * (M_PI * peak_frequency * tau);
    trace[n - 1] = static_cast<float>(amplitude * (1.0 - 2.0 * a) * std::exp(-a));
  }
  return trace;
}

}  // namespace wsfd
