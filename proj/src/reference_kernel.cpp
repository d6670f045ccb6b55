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

#include "wsfd/reference_kernel.hpp"

#include <cmath>
#include <string>

namespace wsfd {

namespace {

// Weights cast to 32-bit once; the center contribution is the combined
// cx0+cy0+cz0, applied exactly once per cell.
struct KernelWeights {
  std::array<float, 5> cx{}, cy{}, cz{};
  float center = 0.0f;

  static KernelWeights from(const StencilCoefficients& c) {
    KernelWeights w;
    for (int m = 0; m < 5; ++m) {
      w.cx[m] = static_cast<float>(c.cx[m]);
      w.cy[m] = static_cast<float>(c.cy[m]);
      w.cz[m] = static_cast<float>(c.cz[m]);
    }
    w.center = static_cast<float>(c.center_sum());
    return w;
  }
};

// Shared accumulation sequence; Fetch returns the neighbor value (guarded
// or raw). The pair sum is formed before scaling so that reflecting the
// field only swaps commutative additions.
template <typename Fetch>
inline float accumulate(const KernelWeights& w, Fetch&& at, int i, int j, int k) {
  float acc = w.center * at(i, j, k);
  for (int m = 1; m < 5; ++m) acc += w.cx[m] * (at(i + m, j, k) + at(i - m, j, k));
  for (int m = 1; m < 5; ++m) acc += w.cy[m] * (at(i, j + m, k) + at(i, j - m, k));
  for (int m = 1; m < 5; ++m) acc += w.cz[m] * (at(i, j, k + m) + at(i, j, k - m));
  return acc;
}

inline float laplacian_at(const Field3D<float>& u, const KernelWeights& w,
                          int i, int j, int k) {
  const bool interior = i >= 4 && i < u.nx() - 4 && j >= 4 && j < u.ny() - 4 &&
                        k >= 4 && k < u.nz() - 4;
  if (interior) {
    return accumulate(w, [&](int a, int b, int c) { return u(a, b, c); }, i, j, k);
  }
  return accumulate(w, [&](int a, int b, int c) { return u.value_or_zero(a, b, c); },
                    i, j, k);
}

void check_finite(const Field3D<float>& f, int n) {
  for (float v : f.data()) {
    if (!std::isfinite(v)) {
      throw instability_error("non-finite wavefield value at step " + std::to_string(n));
    }
  }
}

}  // namespace

float laplacian(const Field3D<float>& u, const StencilCoefficients& coeffs,
                int i, int j, int k) {
  return laplacian_at(u, KernelWeights::from(coeffs), i, j, k);
}

void step(Wavefield& wf, const SimConfig& cfg, const StencilCoefficients& coeffs, int n) {
  if (n < 1 || n > cfg.steps) throw config_error("step: index outside 1..steps");
  const KernelWeights w = KernelWeights::from(coeffs);
  const Grid3D& g = cfg.grid;
  const double dt2 = cfg.dt * cfg.dt;

  Field3D<float> next(g.nx, g.ny, g.nz);
  for (int k = 0; k < g.nz; ++k) {
    for (int j = 0; j < g.ny; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        const double v = cfg.model.velocity(i, j, k);
        const float dt2v2 = static_cast<float>(dt2 * v * v);
        const float lap = laplacian_at(wf.curr, w, i, j, k);
        next(i, j, k) = 2.0f * wf.curr(i, j, k) + dt2v2 * lap - wf.prev(i, j, k);
      }
    }
  }

  const double vs = cfg.model.velocity(cfg.source.x, cfg.source.y, cfg.source.z);
  const float src_scale = static_cast<float>(dt2 * vs * vs);
  next(cfg.source.x, cfg.source.y, cfg.source.z) += src_scale * cfg.source.trace[n - 1];

  check_finite(next, n);
  wf.prev = std::move(wf.curr);
  wf.curr = std::move(next);
}

Wavefield run(const SimConfig& cfg, const StencilCoefficients& coeffs) {
  cfg.validate();
  Wavefield wf(cfg.grid);
  for (int n = 1; n <= cfg.steps; ++n) step(wf, cfg, coeffs, n);
  return wf;
}

Wavefield run(const SimConfig& cfg) { return run(cfg, make_coefficients(cfg.grid, 8)); }

}  // namespace wsfd
