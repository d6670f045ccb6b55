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

#include <cstddef>
#include <span>
#include <vector>

#include "wsfd/errors.hpp"

namespace wsfd {

/// Uniform Cartesian grid: cell counts plus spacing in meters.
struct Grid3D {
  int nx = 1;
  int ny = 1;
  int nz = 1;
  double dx = 1.0;
  double dy = 1.0;
  double dz = 1.0;

  void validate() const;
  std::size_t cell_count() const { return std::size_t(nx) * std::size_t(ny) * std::size_t(nz); }
  double min_spacing() const;
};

/// Dense 3D array, x-fastest storage order (matches the snapshot format).
template <typename T>
class Field3D {
 public:
  Field3D() = default;
  Field3D(int nx, int ny, int nz, T init = T{})
      : nx_(nx), ny_(ny), nz_(nz), data_(std::size_t(nx) * ny * nz, init) {}

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int nz() const { return nz_; }
  std::size_t size() const { return data_.size(); }

  std::size_t index(int i, int j, int k) const {
    return std::size_t(i) + std::size_t(nx_) * (std::size_t(j) + std::size_t(ny_) * std::size_t(k));
  }

  T& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
  const T& operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }

  bool contains(int i, int j, int k) const {
    return i >= 0 && i < nx_ && j >= 0 && j < ny_ && k >= 0 && k < nz_;
  }

  /// Out-of-grid reads yield zero (homogeneous Dirichlet padding).
  T value_or_zero(int i, int j, int k) const {
    return contains(i, j, k) ? data_[index(i, j, k)] : T{};
  }

  std::span<T> data() { return data_; }
  std::span<const T> data() const { return data_; }

  bool same_shape(const Field3D& o) const {
    return nx_ == o.nx_ && ny_ == o.ny_ && nz_ == o.nz_;
  }

 private:
  int nx_ = 0, ny_ = 0, nz_ = 0;
  std::vector<T> data_;
};

/// Velocity model in m/s, one value per cell.
struct EarthModel {
  Field3D<float> velocity;

  static EarthModel constant(const Grid3D& grid, float v);
  void validate(const Grid3D& grid) const;
  /// True when every column (fixed x,y) holds a single velocity value.
  bool column_constant() const;
};

/// Point source: cell coordinates plus one amplitude per time step.
struct SourceTerm {
  int x = 0;
  int y = 0;
  int z = 0;
  std::vector<float> trace;

  void validate(const Grid3D& grid, int steps) const;
};

/// Two time levels of the 32-bit field.
struct Wavefield {
  Field3D<float> curr;
  Field3D<float> prev;

  explicit Wavefield(const Grid3D& g) : curr(g.nx, g.ny, g.nz), prev(g.nx, g.ny, g.nz) {}
  Wavefield() = default;
};

struct SimConfig {
  Grid3D grid;
  double dt = 1e-3;
  int steps = 1;
  EarthModel model;
  SourceTerm source;
  double cfl_warn_threshold = 0.78;  // ~8th-order 3D von Neumann limit

  void validate() const;
};

/// dt * Vmax * sqrt(3) / min(h); a warning threshold, not a hard limit.
double cfl_ratio(const SimConfig& cfg);

/// Band-limited source wavelet sampled at t = n*dt for n = 1..steps.
/// delay <= 0 picks the conventional 1/peak_frequency.
std::vector<float> ricker_trace(int steps, double dt, double peak_frequency,
                                double amplitude = 1.0, double delay = 0.0);

}  // namespace wsfd
